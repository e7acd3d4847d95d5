#include "fkf/balanced.hpp"

#include <string>

namespace fkf {

BalancedPoly to_balanced(const Poly& p) {
    BalancedPoly out;
    if (p.is_zero()) return out;

    bool have_k = false;
    std::vector<Poly::Term> body;
    body.reserve(p.terms().size());

    for (const auto& [m, c] : p.terms()) {
        // total cube-root content available for pairing hbar3 into r^2
        long qcontent = m.e_q + m.h_grade();
        if (m.e_hbar3 > 0 && qcontent < 3L * m.e_hbar3)
            throw StrayConjugateError("hbar3 power without matching h3 content in monomial " +
                                      monomial_to_string(m));
        long k = qcontent - 3L * m.e_hbar3;
        if (!have_k) {
            out.prefactor_thirds = static_cast<int>(k);
            have_k = true;
        } else if (k != out.prefactor_thirds) {
            throw MixedPrefactorError("residual q-powers disagree: " +
                                      std::to_string(out.prefactor_thirds) + " vs " +
                                      std::to_string(k) + " at monomial " + monomial_to_string(m));
        }
        Monomial b;
        b.e_gamma = m.e_gamma;
        b.e_q = 0;
        b.e_hbar3 = m.e_hbar3; // r^2 power
        b.e_h = m.e_h;         // z powers
        body.emplace_back(std::move(b), c);
    }
    out.body = Poly::from_terms(std::move(body));
    return out;
}

Poly from_balanced(const BalancedPoly& b) {
    std::vector<Poly::Term> ts;
    ts.reserve(b.body.terms().size());
    for (const auto& [m, c] : b.body.terms()) {
        Monomial u;
        u.e_gamma = m.e_gamma;
        // z_j = q^{-j} h_j and r^2 = q^3 hbar3
        u.e_q = b.prefactor_thirds - static_cast<int>(m.h_grade()) + 3 * m.e_hbar3;
        u.e_hbar3 = m.e_hbar3;
        u.e_h = m.e_h;
        ts.emplace_back(std::move(u), c);
    }
    return Poly::from_terms(std::move(ts));
}

Grading grading(const BalancedPoly& b) {
    Grading g;
    bool first = true;
    bool weight_ok = true, degree_ok = true;
    long weight = 0, degree = 0;
    for (const auto& [m, c] : b.body.terms()) {
        int top = m.max_h_index();
        if (top > g.order) g.order = top;
        long w = 0, d = 0;
        for (auto& [j, e] : m.e_h) {
            w += static_cast<long>(j - 3) * e;
            d += e;
        }
        if (first) {
            weight = w;
            degree = d;
            first = false;
        } else {
            if (w != weight) weight_ok = false;
            if (d != degree) degree_ok = false;
        }
    }
    if (!first) {
        if (weight_ok) g.weight = weight;
        if (degree_ok) g.degree = degree;
    } else {
        // zero polynomial: vacuously homogeneous
        g.weight = 0;
        g.degree = 0;
    }
    return g;
}

} // namespace fkf
