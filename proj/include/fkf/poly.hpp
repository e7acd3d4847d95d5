#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "fkf/gaussian.hpp"

namespace fkf {

/**
 * Monomial: exponent vector gamma^a q^e hbar3^eps h4^m4 h5^m5 ...
 *
 * q stands for the cube root h3^(1/3); h3 itself is always stored as q^3,
 * so cube-root bookkeeping stays exact and collision-free. gamma and q are
 * Laurent (any integer exponent); hbar3 and the h_j are ordinary variables.
 *
 * Balanced bodies reuse the same layout: e_h holds the z_j exponents,
 * e_hbar3 the r^2 exponent, and e_q is identically zero.
 */
struct Monomial {
    int e_gamma = 0;
    int e_q = 0;
    int e_hbar3 = 0;
    std::vector<std::pair<int, int>> e_h; // ascending (index j >= 4, exponent > 0)

    long h_grade() const {
        long g = 0;
        for (auto& [j, e] : e_h) g += static_cast<long>(j) * e;
        return g;
    }

    int max_h_index() const { return e_h.empty() ? 0 : e_h.back().first; }

    int h_exp(int j) const {
        auto it = std::lower_bound(e_h.begin(), e_h.end(), std::make_pair(j, 0));
        return (it != e_h.end() && it->first == j) ? it->second : 0;
    }

    bool is_unit() const { return e_gamma == 0 && e_q == 0 && e_hbar3 == 0 && e_h.empty(); }

    void set_h_exp(int j, int e) {
        auto it = std::lower_bound(e_h.begin(), e_h.end(), std::make_pair(j, 0));
        if (it != e_h.end() && it->first == j) {
            if (e == 0)
                e_h.erase(it);
            else
                it->second = e;
        } else if (e != 0) {
            e_h.insert(it, {j, e});
        }
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.e_gamma = e_gamma + o.e_gamma;
        r.e_q = e_q + o.e_q;
        r.e_hbar3 = e_hbar3 + o.e_hbar3;
        r.e_h.reserve(e_h.size() + o.e_h.size());
        auto a = e_h.begin(), b = o.e_h.begin();
        while (a != e_h.end() || b != o.e_h.end()) {
            if (b == o.e_h.end() || (a != e_h.end() && a->first < b->first))
                r.e_h.push_back(*a++);
            else if (a == e_h.end() || b->first < a->first)
                r.e_h.push_back(*b++);
            else {
                if (int e = a->second + b->second; e != 0) r.e_h.emplace_back(a->first, e);
                ++a, ++b;
            }
        }
        return r;
    }

    bool operator==(const Monomial&) const = default;

    // Graded lexicographic: (total h-order, e_q, e_gamma, e_hbar3, e_h by index).
    // Fixes canonical term order, hence serialization determinism.
    std::strong_ordering operator<=>(const Monomial& o) const {
        if (auto c = h_grade() <=> o.h_grade(); c != 0) return c;
        if (auto c = e_q <=> o.e_q; c != 0) return c;
        if (auto c = e_gamma <=> o.e_gamma; c != 0) return c;
        if (auto c = e_hbar3 <=> o.e_hbar3; c != 0) return c;
        return e_h <=> o.e_h;
    }
};

/**
 * Poly: sparse polynomial over Q(i) in the prolongation variables.
 *
 * Canonical normal form: terms sorted ascending by the monomial order, no
 * stored zero coefficient. Structural equality is ring equality.
 */
class Poly {
public:
    using Term = std::pair<Monomial, Gaussian>;

    Poly() = default;

    static Poly constant(Gaussian c) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace_back(Monomial{}, std::move(c));
        return p;
    }
    static Poly monomial(Monomial m, Gaussian c) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace_back(std::move(m), std::move(c));
        return p;
    }
    static Poly gamma(int k = 1) {
        Monomial m;
        m.e_gamma = k;
        return monomial(m, Gaussian(1));
    }
    static Poly q(int k = 1) {
        Monomial m;
        m.e_q = k;
        return monomial(m, Gaussian(1));
    }
    static Poly h3() { return q(3); }
    static Poly hbar3() {
        Monomial m;
        m.e_hbar3 = 1;
        return monomial(m, Gaussian(1));
    }
    static Poly h(int j, int e = 1) {
        if (j < 4) throw Error("h index must be >= 4 (h3 is q^3)");
        Monomial m;
        m.set_h_exp(j, e);
        return monomial(m, Gaussian(1));
    }
    // z_j as the balanced-body variable (same slot as h_j).
    static Poly z(int j, int e = 1) { return h(j, e); }
    static Poly r2(int e = 1) {
        Monomial m;
        m.e_hbar3 = e;
        return monomial(m, Gaussian(1));
    }

    static Poly from_terms(std::vector<Term> ts) {
        Poly p;
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const Poly&) const = default;

    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first))
                r.terms_.push_back(*a++);
            else if (a == terms_.end() || b->first < a->first)
                r.terms_.push_back(*b++);
            else {
                Gaussian c = a->second + b->second;
                if (!c.is_zero()) r.terms_.emplace_back(a->first, std::move(c));
                ++a, ++b;
            }
        }
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Term> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) prod.emplace_back(ma.times(mb), ca * cb);
        return from_terms(std::move(prod));
    }

    Poly operator*(const Gaussian& c) const {
        if (c.is_zero()) return Poly();
        Poly r(*this);
        for (auto& [m, v] : r.terms_) v = v * c;
        return r;
    }

    Poly times_monomial(const Monomial& m, const Gaussian& c) const {
        if (c.is_zero()) return Poly();
        std::vector<Term> prod;
        prod.reserve(terms_.size());
        for (auto& [mm, cc] : terms_) prod.emplace_back(mm.times(m), cc * c);
        if (m.e_h.empty()) {
            // gamma/q/hbar3 shifts move every sort key uniformly
            Poly r;
            r.terms_ = std::move(prod);
            return r;
        }
        return from_terms(std::move(prod));
    }

    // Exact division by c*m; gamma and q absorb any shift, hbar3 and the
    // h_j exponents must stay non-negative.
    Poly divided_by_monomial(const Monomial& m, const Gaussian& c) const {
        if (c.is_zero()) throw DivisionByZeroError();
        Monomial inv;
        inv.e_gamma = -m.e_gamma;
        inv.e_q = -m.e_q;
        inv.e_hbar3 = -m.e_hbar3;
        inv.e_h.reserve(m.e_h.size());
        for (auto& [j, e] : m.e_h) inv.e_h.emplace_back(j, -e);
        std::vector<Term> quot;
        quot.reserve(terms_.size());
        Gaussian cinv = Gaussian(1) / c;
        for (auto& [mm, cc] : terms_) {
            Monomial d = mm.times(inv);
            if (d.e_hbar3 < 0)
                throw Error("monomial division not exact (hbar3)");
            for (auto& [j, e] : d.e_h)
                if (e < 0) throw Error("monomial division not exact (h_" + std::to_string(j) + ")");
            quot.emplace_back(std::move(d), cc * cinv);
        }
        if (m.e_h.empty()) {
            Poly r;
            r.terms_ = std::move(quot);
            return r;
        }
        return from_terms(std::move(quot));
    }

    Gaussian coeff(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.first < k; });
        return (it != terms_.end() && it->first == m) ? it->second : Gaussian();
    }

    int max_h_index() const {
        int top = 0;
        for (auto& [m, c] : terms_) top = std::max(top, m.max_h_index());
        return top;
    }

    int hbar3_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, m.e_hbar3);
        return d;
    }

    bool hbar3_free() const { return hbar3_degree() == 0; }

    std::string to_string() const;

private:
    std::vector<Term> terms_;

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        std::size_t out = 0;
        for (std::size_t i = 0; i < terms_.size();) {
            std::size_t k = i + 1;
            Gaussian acc = terms_[i].second;
            while (k < terms_.size() && terms_[k].first == terms_[i].first)
                acc += terms_[k++].second;
            if (!acc.is_zero()) {
                if (out != i) terms_[out].first = std::move(terms_[i].first);
                terms_[out].second = std::move(acc);
                ++out;
            }
            i = k;
        }
        terms_.resize(out);
    }
};

inline Poly operator*(const Gaussian& c, const Poly& p) { return p * c; }

std::string monomial_to_string(const Monomial& m, bool balanced = false);

} // namespace fkf
