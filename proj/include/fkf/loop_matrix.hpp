#pragma once

#include <array>

#include "fkf/lambda_series.hpp"

namespace fkf {

// The two canonical ansatz towers: X(p^4) seeded by the pseudo-Jacobi field
// z_4, X(a^5) seeded by the Jacobi field z_5 - (5/3) z_4^2.
enum class Ansatz { P4, A5 };

enum class Component { p, b, c, f, a, g, s, t };

inline constexpr std::array<Component, 8> all_components = {
    Component::p, Component::b, Component::c, Component::f,
    Component::a, Component::g, Component::s, Component::t};

char component_name(Component);
const char* ansatz_name(Ansatz);

// lambda-degree residue (mod 6) of a component's support; the first
// populated degree equals the residue.
int lambda_residue(Ansatz, Component);

// coefficient superscript: index = lambda-degree + 2 throughout
inline int coeff_index(int lambda_degree) { return lambda_degree + 2; }

// prefactor table (rho-equivariance): power of h3^(1/3) carried by each
// component in balanced form
int prefactor_thirds(Component);

struct KillingComponents {
    Ansatz ansatz = Ansatz::P4;
    LambdaSeries p, b, c, f, a, g, s, t;

    const LambdaSeries& get(Component k) const;
    LambdaSeries& get(Component k);

    bool operator==(const KillingComponents&) const = default;
};

using Matrix3 = std::array<std::array<LambdaSeries, 3>, 3>;

// sl(3,C) assembly of the eight component series; trace-free by construction.
Matrix3 assemble(const KillingComponents&);

// closed determinant formula:
// i(4gsp - 4fga - 4b^2c - 4f^2t + 4g^2c + 4s^2t + 2a^3 - 2ap^2 + 8act - 4bsa + 4bfp)
LambdaSeries det3(const KillingComponents&);
Poly det3_coeff(const KillingComponents&, int d);

// second elementary symmetric function: 3a^2 + p^2 - 4ct - 4bs - 4fg,
// so that det(mu I + X) = mu^3 + sigma2 mu + det3
LambdaSeries sigma2(const KillingComponents&);
Poly sigma2_coeff(const KillingComponents&, int d);

// independent oracles via the assembled matrix
LambdaSeries trace(const Matrix3&);
LambdaSeries det3_cofactor(const Matrix3&);
LambdaSeries sigma2_minors(const Matrix3&);

} // namespace fkf
