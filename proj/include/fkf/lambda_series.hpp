#pragma once

#include <map>

#include "fkf/poly.hpp"

namespace fkf {

/**
 * LambdaSeries: sparse map lambda-degree -> Poly.
 *
 * Truncation is implicit: absent degrees read as zero. Entries may store an
 * explicit zero Poly, which marks a coefficient determined to vanish (the
 * seed constraints g^2 = 0 and p^2 = 0).
 */
class LambdaSeries {
public:
    using Map = std::map<int, Poly>;

    LambdaSeries() = default;

    Poly coeff(int d) const {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Poly() : it->second;
    }
    bool has(int d) const { return coeffs_.count(d) != 0; }
    void set(int d, Poly p) { coeffs_[d] = std::move(p); }

    const Map& entries() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }
    int max_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    // support on a single arithmetic progression mod 6
    bool on_progression(int residue) const {
        for (auto& [d, p] : coeffs_)
            if (d % 6 != residue % 6) return false;
        return true;
    }

    bool is_zero() const {
        for (auto& [d, p] : coeffs_)
            if (!p.is_zero()) return false;
        return true;
    }

    // equality of the represented series: explicit zero entries (the
    // determined-zero markers) compare equal to absence
    bool operator==(const LambdaSeries& o) const {
        auto a = coeffs_.begin();
        auto b = o.coeffs_.begin();
        while (true) {
            while (a != coeffs_.end() && a->second.is_zero()) ++a;
            while (b != o.coeffs_.end() && b->second.is_zero()) ++b;
            if (a == coeffs_.end() || b == o.coeffs_.end())
                return a == coeffs_.end() && b == o.coeffs_.end();
            if (a->first != b->first || !(a->second == b->second)) return false;
            ++a, ++b;
        }
    }

    LambdaSeries operator+(const LambdaSeries& o) const {
        LambdaSeries r(*this);
        for (auto& [d, p] : o.coeffs_) {
            auto it = r.coeffs_.find(d);
            if (it == r.coeffs_.end())
                r.coeffs_.emplace(d, p);
            else
                it->second += p;
        }
        return r;
    }

    LambdaSeries operator-() const {
        LambdaSeries r(*this);
        for (auto& [d, p] : r.coeffs_) p = -p;
        return r;
    }

    LambdaSeries operator-(const LambdaSeries& o) const { return *this + (-o); }

    LambdaSeries scaled(const Gaussian& c) const {
        LambdaSeries r;
        for (auto& [d, p] : coeffs_) r.coeffs_.emplace(d, p * c);
        return r;
    }

    LambdaSeries operator*(const LambdaSeries& o) const {
        LambdaSeries r;
        for (auto& [da, pa] : coeffs_) {
            if (pa.is_zero()) continue;
            for (auto& [db, pb] : o.coeffs_) {
                if (pb.is_zero()) continue;
                auto it = r.coeffs_.find(da + db);
                if (it == r.coeffs_.end())
                    r.coeffs_.emplace(da + db, pa * pb);
                else
                    it->second += pa * pb;
            }
        }
        // drop cancelled entries: the product carries no determinedness marks
        for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();)
            it = it->second.is_zero() ? r.coeffs_.erase(it) : std::next(it);
        return r;
    }

private:
    Map coeffs_;
};

inline Poly lambda_coeff(const LambdaSeries& s, int d) { return s.coeff(d); }

// degree-d coefficient of x*y over the stored entries
inline Poly pair_coeff(const LambdaSeries& x, const LambdaSeries& y, int d) {
    Poly r;
    for (auto& [dx, px] : x.entries()) {
        if (dx > d) break;
        if (px.is_zero()) continue;
        if (!y.has(d - dx)) continue;
        Poly py = y.coeff(d - dx);
        if (!py.is_zero()) r += px * py;
    }
    return r;
}

inline Poly triple_coeff(const LambdaSeries& x, const LambdaSeries& y, const LambdaSeries& z,
                         int d) {
    Poly r;
    for (auto& [dx, px] : x.entries()) {
        if (dx > d) break;
        if (px.is_zero()) continue;
        for (auto& [dy, py] : y.entries()) {
            if (dx + dy > d) break;
            if (py.is_zero()) continue;
            if (!z.has(d - dx - dy)) continue;
            Poly pz = z.coeff(d - dx - dy);
            if (!pz.is_zero()) r += px * py * pz;
        }
    }
    return r;
}

} // namespace fkf
