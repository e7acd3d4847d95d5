#include "fkf/derivations.hpp"

#include <mutex>
#include <string>

namespace fkf {

Rational a_coeff(int j, int s) {
    if (j < 3 || s < 0 || s > j - 3)
        throw RangeError("a_coeff: need j >= 3 and 0 <= s <= j-3, got j=" + std::to_string(j) +
                         " s=" + std::to_string(s));
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j - 1),
                 static_cast<unsigned long>(s + 2));
    Rational r(mpz_class(j + 2 * s + 3) * binom, mpz_class(2) * (j - 1));
    r.canonicalize();
    return r;
}

Poly curvature() {
    return Poly::gamma(2) - Poly::h3() * Poly::hbar3() * Gaussian(2);
}

namespace {

// h_j with the h3 = q^3 rewrite applied
Poly h_var(int j) { return j == 3 ? Poly::q(3) : Poly::h(j); }

} // namespace

Prolongation::Prolongation(int max_tower) : max_tower_(max_tower) {
    if (max_tower < 4) throw RangeError("tower bound must be at least 4");
    table_.push_back(Poly()); // T_3 = 0
}

Poly Prolongation::tj(int j, TjMethod method) const {
    if (j < 3 || j > max_tower_ + 1)
        throw RangeError("tj: index " + std::to_string(j) + " outside [3, N+1], N=" +
                         std::to_string(max_tower_));
    if (method == TjMethod::closed) return tj_closed(j);
    {
        std::shared_lock lock(mu_);
        if (static_cast<std::size_t>(j - 3) < table_.size()) return table_[j - 3];
    }
    extend_table(j);
    std::shared_lock lock(mu_);
    return table_[j - 3];
}

void Prolongation::extend_table(int j) const {
    std::unique_lock lock(mu_);
    const Poly R = curvature();
    while (static_cast<std::size_t>(j - 3) >= table_.size()) {
        int jj = static_cast<int>(table_.size()) + 2; // have T_3..T_jj, compute T_{jj+1}
        Poly next = d_xi(table_.back()) + R * h_var(jj) * Gaussian(jj, 2);
        table_.push_back(std::move(next));
    }
}

Poly Prolongation::tj_closed(int j) const {
    if (j == 3) return Poly();
    // T_{jj+1} = sum_{s=0}^{jj-3} a_{jj,s} h_{jj-s} (delta_{0s} gamma^2 - 2 h_{3+s} hbar3)
    int jj = j - 1;
    Poly sum;
    for (int s = 0; s <= jj - 3; ++s) {
        Poly ds = (s == 0) ? Poly::gamma(2) : Poly();
        ds -= h_var(3 + s) * Poly::hbar3() * Gaussian(2);
        sum += h_var(jj - s) * ds * Gaussian(a_coeff(jj, s));
    }
    return sum;
}

BalancedPoly Prolongation::tj_hat(int j) const {
    Monomial scale;
    scale.e_q = -(j - 1);
    return to_balanced(tj(j).times_monomial(scale, Gaussian(1)));
}

Poly Prolongation::d_xi(const Poly& p) const {
    std::vector<Poly::Term> out;
    out.reserve(p.terms().size() * 2);
    for (const auto& [m, c] : p.terms()) {
        if (m.e_q != 0) {
            // q -> (1/3) q^-2 h4
            Monomial d = m;
            d.e_q -= 3;
            d.set_h_exp(4, d.h_exp(4) + 1);
            out.emplace_back(std::move(d), c * Gaussian(m.e_q, 3));
        }
        for (auto& [j, e] : m.e_h) {
            if (j + 1 > max_tower_) throw TowerBoundError(j + 1, max_tower_);
            Monomial d = m;
            d.set_h_exp(j, e - 1);
            d.set_h_exp(j + 1, d.h_exp(j + 1) + 1);
            out.emplace_back(std::move(d), c * Gaussian(e));
        }
    }
    return Poly::from_terms(std::move(out));
}

Poly Prolongation::d_xibar(const Poly& p) const {
    if (!p.hbar3_free())
        throw ConjugateInputError("d_xibar input must be hbar3-free: " + p.to_string());
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        for (auto& [j, e] : m.e_h) {
            // h_j -> T_j; q and gamma are annihilated
            Monomial rest = m;
            rest.set_h_exp(j, e - 1);
            out += tj(j).times_monomial(rest, c * Gaussian(e));
        }
    }
    return out;
}

} // namespace fkf
