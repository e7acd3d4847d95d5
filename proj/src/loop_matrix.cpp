#include "fkf/loop_matrix.hpp"

namespace fkf {

char component_name(Component k) {
    switch (k) {
        case Component::p: return 'p';
        case Component::b: return 'b';
        case Component::c: return 'c';
        case Component::f: return 'f';
        case Component::a: return 'a';
        case Component::g: return 'g';
        case Component::s: return 's';
        case Component::t: return 't';
    }
    return '?';
}

const char* ansatz_name(Ansatz a) { return a == Ansatz::P4 ? "p4" : "a5"; }

int lambda_residue(Ansatz an, Component k) {
    // X(p^4): p@6k+2, b,c@6k+3, f@6k+4, a@6k+5, g@6k, s,t@6k+1
    // X(a^5): p@6k,   b,c@6k+1, f@6k+2, a@6k+3, g@6k+4, s,t@6k+5
    int shift = (an == Ansatz::P4) ? 0 : 4;
    int base = 0;
    switch (k) {
        case Component::p: base = 2; break;
        case Component::b:
        case Component::c: base = 3; break;
        case Component::f: base = 4; break;
        case Component::a: base = 5; break;
        case Component::g: base = 0; break;
        case Component::s:
        case Component::t: base = 1; break;
    }
    return (base + shift) % 6;
}

int prefactor_thirds(Component k) {
    switch (k) {
        case Component::p:
        case Component::a: return 0;
        case Component::b:
        case Component::g: return 1;
        case Component::f:
        case Component::s: return -1;
        case Component::c: return -2;
        case Component::t: return 2;
    }
    return 0;
}

const LambdaSeries& KillingComponents::get(Component k) const {
    switch (k) {
        case Component::p: return p;
        case Component::b: return b;
        case Component::c: return c;
        case Component::f: return f;
        case Component::a: return a;
        case Component::g: return g;
        case Component::s: return s;
        case Component::t: return t;
    }
    return p;
}

LambdaSeries& KillingComponents::get(Component k) {
    return const_cast<LambdaSeries&>(static_cast<const KillingComponents&>(*this).get(k));
}

Matrix3 assemble(const KillingComponents& kc) {
    const Gaussian I = Gaussian::unit_i();
    const auto &p = kc.p, &b = kc.b, &c = kc.c, &f = kc.f;
    const auto &a = kc.a, &g = kc.g, &s = kc.s, &t = kc.t;
    Matrix3 m;
    m[0][0] = a.scaled(-(Gaussian(2) * I));
    m[0][1] = b + f + g - s;
    m[0][2] = (b - f + g + s).scaled(I);
    m[1][0] = (-b) + f + g + s;
    m[1][1] = (c + a - t).scaled(I);
    m[1][2] = (-p) + c + t;
    m[2][0] = ((-b) - f + g - s).scaled(I);
    m[2][1] = p + c + t;
    m[2][2] = ((-c) + a + t).scaled(I);
    return m;
}

LambdaSeries det3(const KillingComponents& kc) {
    const auto &p = kc.p, &b = kc.b, &c = kc.c, &f = kc.f;
    const auto &a = kc.a, &g = kc.g, &s = kc.s, &t = kc.t;
    LambdaSeries d = (g * s * p).scaled(Gaussian(4)) + (f * g * a).scaled(Gaussian(-4)) +
                     (b * b * c).scaled(Gaussian(-4)) + (f * f * t).scaled(Gaussian(-4)) +
                     (g * g * c).scaled(Gaussian(4)) + (s * s * t).scaled(Gaussian(4)) +
                     (a * a * a).scaled(Gaussian(2)) + (a * p * p).scaled(Gaussian(-2)) +
                     (a * c * t).scaled(Gaussian(8)) + (b * s * a).scaled(Gaussian(-4)) +
                     (b * f * p).scaled(Gaussian(4));
    return d.scaled(Gaussian::unit_i());
}

Poly det3_coeff(const KillingComponents& kc, int d) {
    const auto &p = kc.p, &b = kc.b, &c = kc.c, &f = kc.f;
    const auto &a = kc.a, &g = kc.g, &s = kc.s, &t = kc.t;
    Poly x = triple_coeff(g, s, p, d) * Gaussian(4) + triple_coeff(f, g, a, d) * Gaussian(-4) +
             triple_coeff(b, b, c, d) * Gaussian(-4) + triple_coeff(f, f, t, d) * Gaussian(-4) +
             triple_coeff(g, g, c, d) * Gaussian(4) + triple_coeff(s, s, t, d) * Gaussian(4) +
             triple_coeff(a, a, a, d) * Gaussian(2) + triple_coeff(a, p, p, d) * Gaussian(-2) +
             triple_coeff(a, c, t, d) * Gaussian(8) + triple_coeff(b, s, a, d) * Gaussian(-4) +
             triple_coeff(b, f, p, d) * Gaussian(4);
    return x * Gaussian::unit_i();
}

LambdaSeries sigma2(const KillingComponents& kc) {
    const auto &p = kc.p, &b = kc.b, &c = kc.c, &f = kc.f;
    const auto &a = kc.a, &g = kc.g, &s = kc.s, &t = kc.t;
    return (a * a).scaled(Gaussian(3)) + p * p + (c * t).scaled(Gaussian(-4)) +
           (b * s).scaled(Gaussian(-4)) + (f * g).scaled(Gaussian(-4));
}

Poly sigma2_coeff(const KillingComponents& kc, int d) {
    const auto &p = kc.p, &b = kc.b, &c = kc.c, &f = kc.f;
    const auto &a = kc.a, &g = kc.g, &s = kc.s, &t = kc.t;
    return pair_coeff(a, a, d) * Gaussian(3) + pair_coeff(p, p, d) +
           pair_coeff(c, t, d) * Gaussian(-4) + pair_coeff(b, s, d) * Gaussian(-4) +
           pair_coeff(f, g, d) * Gaussian(-4);
}

LambdaSeries trace(const Matrix3& m) { return m[0][0] + m[1][1] + m[2][2]; }

LambdaSeries det3_cofactor(const Matrix3& m) {
    auto minor = [&](int r0, int r1, int c0, int c1) {
        return m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    };
    return m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
}

LambdaSeries sigma2_minors(const Matrix3& m) {
    LambdaSeries sum;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) sum = sum + (m[i][i] * m[j][j] - m[i][j] * m[j][i]);
    return sum;
}

} // namespace fkf
