#include "fkf/killing.hpp"

#include <string>

namespace fkf {

namespace {

const Gaussian I = Gaussian::unit_i();

Monomial mono_gq(int e_gamma, int e_q) {
    Monomial m;
    m.e_gamma = e_gamma;
    m.e_q = e_q;
    return m;
}

Poly scaled_mono(int e_gamma, int e_q, Gaussian c) {
    return Poly::monomial(mono_gq(e_gamma, e_q), std::move(c));
}

// Solve [a11 a12; a21 a22] [x; y] = [r1; r2] by Cramer's rule. The system
// matrix entries are monomials and the determinant must be an invertible
// monomial; the division is exact.
std::pair<Poly, Poly> solve2(const Poly& a11, const Poly& a12, const Poly& a21, const Poly& a22,
                             const Poly& r1, const Poly& r2, const char* what) {
    Poly det = a11 * a22 - a12 * a21;
    if (det.size() != 1)
        throw SingularSolveError(std::string(what) + ": system determinant is not a monomial: " +
                                 det.to_string());
    const auto& [dm, dc] = det.terms().front();
    Poly x = (r1 * a22 - a12 * r2).divided_by_monomial(dm, dc);
    Poly y = (a11 * r2 - r1 * a21).divided_by_monomial(dm, dc);
    // exact plug-back; a failure here means the constraint data is corrupt
    if (a11 * x + a12 * y != r1 || a21 * x + a22 * y != r2)
        throw SingularSolveError(std::string(what) + ": plug-back failed");
    return {std::move(x), std::move(y)};
}

void require_crosscheck(const Poly& lhs, const Poly& rhs, const std::string& what) {
    if (lhs != rhs)
        throw CrossCheckError(what + " mismatch, difference = " + (lhs - rhs).to_string());
}

struct Engine {
    KillingState& st;
    const Prolongation& pr;

    KillingComponents& kc() { return st.comps; }

    void note_tower(const Poly& p) {
        st.tower_high_water = std::max(st.tower_high_water, p.max_h_index());
    }

    void install(Component k, int deg, Poly value) {
        note_tower(value);
        kc().get(k).set(deg, std::move(value));
    }

    bool filled(Component k, int deg) const { return st.comps.get(k).has(deg); }

    // p@L = -(2i/gamma) d_xi(s@L-1); cross-route d_xi(t@L-1) = i h3 p@L
    void rung_p(int L) {
        if (filled(Component::p, L)) return;
        Poly ds = pr.d_xi(kc().s.coeff(L - 1));
        Poly p = ds.times_monomial(mono_gq(-1, 0), -(Gaussian(2) * I));
        Poly dt = pr.d_xi(kc().t.coeff(L - 1));
        require_crosscheck(dt, p.times_monomial(mono_gq(0, 3), I),
                           "p@" + std::to_string(L) + " from s vs t");
        install(Component::p, L, std::move(p));
    }

    // f@L = -i h3^-1 d_xi(b@L-1); cross-route f@L = -(i/gamma) d_xi(c@L-1)
    void rung_f(int L) {
        if (filled(Component::f, L)) return;
        Poly f = pr.d_xi(kc().b.coeff(L - 1)).times_monomial(mono_gq(0, -3), -I);
        Poly f_alt = pr.d_xi(kc().c.coeff(L - 1)).times_monomial(mono_gq(-1, 0), -I);
        require_crosscheck(f, f_alt, "f@" + std::to_string(L) + " from b vs c");
        install(Component::f, L, std::move(f));
    }

    // a@L = -(2i/3gamma) d_xi(f@L-1)
    void rung_a(int L) {
        if (filled(Component::a, L)) return;
        Poly a = pr.d_xi(kc().f.coeff(L - 1)).times_monomial(mono_gq(-1, 0), -(Gaussian(2, 3) * I));
        install(Component::a, L, std::move(a));
    }

    // g@L = -(i/gamma) d_xi(a@L-1)
    void rung_g(int L) {
        if (filled(Component::g, L)) return;
        Poly g = pr.d_xi(kc().a.coeff(L - 1)).times_monomial(mono_gq(-1, 0), -I);
        install(Component::g, L, std::move(g));
    }

    // (b,c)@L from { constraint lambda-coefficient = 0 ;
    //                d_xi(p@L-1) = i gamma b + 2i h3 c }.
    // X(p^4) uses sigma2@L+1 with seed terms -4 s^3 b - 4 t^3 c;
    // X(a^5) uses det3@L+2 with seed terms -4i(2 b^3 c^3 b + (b^3)^2 c).
    void rung_bc(int L) {
        if (filled(Component::b, L)) return;
        Poly a11, a12, y;
        if (st.comps.ansatz == Ansatz::P4) {
            y = sigma2_coeff(kc(), L + 1);
            a11 = kc().s.coeff(1) * Gaussian(-4);
            a12 = kc().t.coeff(1) * Gaussian(-4);
        } else {
            y = det3_coeff(kc(), L + 2);
            Poly b1 = kc().b.coeff(1), c1 = kc().c.coeff(1);
            a11 = b1 * c1 * (Gaussian(-8) * I);
            a12 = b1 * b1 * (Gaussian(-4) * I);
        }
        Poly a21 = scaled_mono(1, 0, I);
        Poly a22 = scaled_mono(0, 3, Gaussian(2) * I);
        Poly r2 = pr.d_xi(kc().p.coeff(L - 1));
        auto [b, c] = solve2(a11, a12, a21, a22, -y, r2, "(b,c) solve");
        install(Component::b, L, std::move(b));
        install(Component::c, L, std::move(c));
    }

    // (s,t)@L from { constraint lambda-coefficient = 0 ;
    //                d_xi(g@L-1) = -i gamma t - i h3 s }.
    // X(p^4) uses det3@L+2 with seed terms 4i(2 s^3 t^3 s + (s^3)^2 t);
    // X(a^5) uses sigma2@L+1 with seed terms -4 b^3 s - 4 c^3 t.
    void rung_st(int L) {
        if (filled(Component::s, L)) return;
        Poly a11, a12, y;
        if (st.comps.ansatz == Ansatz::P4) {
            y = det3_coeff(kc(), L + 2);
            Poly s1 = kc().s.coeff(1), t1 = kc().t.coeff(1);
            a11 = s1 * t1 * (Gaussian(8) * I);
            a12 = s1 * s1 * (Gaussian(4) * I);
        } else {
            y = sigma2_coeff(kc(), L + 1);
            a11 = kc().b.coeff(1) * Gaussian(-4);
            a12 = kc().c.coeff(1) * Gaussian(-4);
        }
        Poly a21 = scaled_mono(0, 3, -I);
        Poly a22 = scaled_mono(1, 0, -I);
        Poly r2 = pr.d_xi(kc().g.coeff(L - 1));
        auto [s, t] = solve2(a11, a12, a21, a22, -y, r2, "(s,t) solve");
        install(Component::s, L, std::move(s));
        install(Component::t, L, std::move(t));
    }

    void cycle(int m) {
        if (st.comps.ansatz == Ansatz::P4) {
            rung_p(6 * m + 2);
            rung_bc(6 * m + 3);
            rung_f(6 * m + 4);
            rung_a(6 * m + 5);
            rung_g(6 * m + 6);
            rung_st(6 * m + 7);
        } else {
            rung_f(6 * m + 2);
            rung_a(6 * m + 3);
            rung_g(6 * m + 4);
            rung_st(6 * m + 5);
            rung_p(6 * m + 6);
            rung_bc(6 * m + 7);
        }
    }
};

// Every stored coefficient must be hbar3-free and convert to balanced form
// with the component's prefactor-table power.
void validate_prefactors(const KillingState& st) {
    for (Component k : all_components) {
        for (const auto& [d, p] : st.comps.get(k).entries()) {
            if (p.is_zero()) continue;
            if (!p.hbar3_free())
                throw EngineError(std::string(1, component_name(k)) + "^" +
                                  std::to_string(coeff_index(d)) + " is not hbar3-free");
            BalancedPoly bp = to_balanced(p);
            if (bp.prefactor_thirds != prefactor_thirds(k))
                throw EngineError(std::string(1, component_name(k)) + "^" +
                                  std::to_string(coeff_index(d)) + " prefactor " +
                                  std::to_string(bp.prefactor_thirds) + " != table value " +
                                  std::to_string(prefactor_thirds(k)));
        }
    }
}

} // namespace

KillingState seed(Ansatz an) {
    KillingState st;
    st.comps.ansatz = an;
    if (an == Ansatz::P4) {
        // s^3 = -(3i/2) gamma h3^{-1/3}, t^3 = (3i/2) h3^{2/3}, g^2 = 0
        st.comps.s.set(1, scaled_mono(1, -1, Gaussian::imag(-3, 2)));
        st.comps.t.set(1, scaled_mono(0, 2, Gaussian::imag(3, 2)));
        st.comps.g.set(0, Poly());
    } else {
        // b^3 = -(9/2) gamma h3^{1/3}, c^3 = (9/4) gamma^2 h3^{-2/3}, p^2 = 0
        st.comps.b.set(1, scaled_mono(1, 1, Gaussian(-9, 2)));
        st.comps.c.set(1, scaled_mono(2, -2, Gaussian(9, 4)));
        st.comps.p.set(0, Poly());
    }
    return st;
}

KillingState step(const KillingState& in, const Prolongation& pr) {
    KillingState st = in;
    Engine eng{st, pr};
    eng.cycle(st.cycles_done);
    st.cycles_done += 1;
    return st;
}

KillingState run(Ansatz an, int cycles, const Prolongation& pr) {
    if (cycles < 0) throw RangeError("cycles must be non-negative");
    if (pr.max_tower() < required_tower(cycles))
        throw RangeError("tower bound " + std::to_string(pr.max_tower()) +
                         " below required floor " + std::to_string(required_tower(cycles)) +
                         " for " + std::to_string(cycles) + " cycles");
    KillingState st = seed(an);
    Engine eng{st, pr};
    for (int m = 0; m < cycles; ++m) {
        eng.cycle(m);
        st.cycles_done += 1;
    }
    if (cycles > 0) {
        // trailing rungs to the payload coefficient
        if (an == Ansatz::P4) {
            eng.rung_p(6 * cycles + 2);
        } else {
            eng.rung_f(6 * cycles + 2);
            eng.rung_a(6 * cycles + 3);
        }
    }
    validate_prefactors(st);
    return st;
}

} // namespace fkf
