#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fkf/killing.hpp"

namespace fkf {

enum class JacobiKind { jacobi, pseudo };

// E(A)  = d_xi(d_xibar(A)) + (3/2) gamma^2 A
// E'(A) = d_xi(d_xibar(A)) + (1/2)(gamma^2 + 4 h3 hbar3) A
// Input must be hbar3-free.
Poly jacobi_apply(const Poly& A, JacobiKind, const Prolongation&);

struct CheckReport {
    std::string name;
    bool pass = false;
    std::string detail;           // lambda range / index range checked
    std::optional<Poly> witness;  // nonzero residue on failure
};

struct CheckSet {
    bool jacobi = true;
    bool charpoly = true;
    bool conservation = true;
    bool homogeneity = true;
    bool crosscheck = true;

    static CheckSet all() { return {}; }
    static CheckSet none() { return {false, false, false, false, false}; }
};

// Executable checks over a computed state:
//   jacobi       E'(p) = 0 and E(a) = 0 for every stored coefficient
//   charpoly     every determined sigma2 coefficient vanishes; det3 equals
//                (27/2) gamma^2 lambda^3 (X(p^4)) resp. -(729/4) i gamma^4
//                lambda^3 (X(a^5)) with all other determined coefficients 0
//   conservation d_xibar(b) = d_xi(s) = (i/2) gamma p per pair, and every
//                d_xibar(b) output is hbar3-free after cancellation
//   homogeneity  hbar3-freeness, prefactor table, weight lattice, orders
//   crosscheck   f from b vs from c; p from s vs from t
std::vector<CheckReport> check_killing(const KillingState&, const Prolongation&,
                                       CheckSet = CheckSet::all());

inline bool all_pass(const std::vector<CheckReport>& rs) {
    for (auto& r : rs)
        if (!r.pass) return false;
    return true;
}

// Determinant chi_k of the (k-1)x(k-1) even-order obstruction system,
// k >= 4, and the epsilon-sum that equals +-chi_k.
Rational chi_det(int k);
Rational chi_eps_sum(int k);

} // namespace fkf
