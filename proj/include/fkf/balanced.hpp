#pragma once

#include <optional>

#include "fkf/poly.hpp"

namespace fkf {

/**
 * BalancedPoly: a Poly factored as h3^(k/3) * body(z_4..z_N, r^2) with
 * Gaussian*gamma^m coefficients, per the balanced coordinates z_j =
 * h3^(-j/3) h_j and r^2 = h3*hbar3.
 *
 * The body reuses the Monomial layout (e_h = z exponents, e_hbar3 = r^2
 * exponent, e_q identically 0).
 */
struct BalancedPoly {
    int prefactor_thirds = 0;
    Poly body;

    bool is_zero() const { return body.is_zero(); }
    bool operator==(const BalancedPoly&) const = default;
};

struct Grading {
    // max z-index present; 0 when the body has no z-content
    int order = 0;
    // common spectral weight sum (j-3)*exp(z_j); unset when not homogeneous
    std::optional<long> weight;
    // common total z-degree; unset when not uniform
    std::optional<long> degree;
};

// p = h3^(k/3) * body. Fails with MixedPrefactorError when the monomials
// disagree on the residual q-power, StrayConjugateError when an hbar3
// power exceeds the available cube-root content of its monomial.
BalancedPoly to_balanced(const Poly& p);

Poly from_balanced(const BalancedPoly& b);

Grading grading(const BalancedPoly& b);

} // namespace fkf
