#pragma once

#include <shared_mutex>
#include <vector>

#include "fkf/balanced.hpp"
#include "fkf/poly.hpp"

namespace fkf {

// a_{j,s} = (j+2s+3)/(2(j-1)) * binom(j-1, s+2), for j >= 3, 0 <= s <= j-3.
Rational a_coeff(int j, int s);

// R = gamma^2 - 2 h3 hbar3 (the Gauss curvature).
Poly curvature();

enum class TjMethod { recursive, closed };

/**
 * Prolongation: the differential structure of the prolonged ring up to a
 * configured tower bound N.
 *
 * Generator actions (extended by linearity and Leibniz):
 *   d_xi:    h_j -> h_{j+1},  q -> (1/3) q^-2 h_4,  hbar3 -> 0,  gamma -> 0
 *   d_xibar: h_j -> T_j,      q -> 0 (T_3 = 0),     gamma -> 0;
 *            hbar3-bearing input is rejected.
 *
 * The T_j memo is append-only: reads are shared, extension is serialized.
 */
class Prolongation {
public:
    explicit Prolongation(int max_tower);

    int max_tower() const { return max_tower_; }

    // T_j for 3 <= j <= N+1; the memoized table is built by the recursion
    // T_{j+1} = d_xi(T_j) + (j/2) R h_j, T_3 = 0.
    Poly tj(int j) const { return tj(j, TjMethod::recursive); }
    Poly tj(int j, TjMethod method) const;

    // T^_j = h3^(-(j-1)/3) T_j in balanced form; weight-homogeneous of
    // weight j-4.
    BalancedPoly tj_hat(int j) const;

    Poly d_xi(const Poly& p) const;
    Poly d_xibar(const Poly& p) const;

private:
    int max_tower_;
    mutable std::shared_mutex mu_;
    mutable std::vector<Poly> table_; // table_[j-3] = T_j

    Poly tj_closed(int j) const;
    void extend_table(int j) const;
};

} // namespace fkf
