#include <doctest.h>

#include "support.hpp"

using namespace fkf;
using test::z_unscaled;

TEST_CASE("monomial product adds exponents: h3^{-4/3}h4 squared") {
    Poly z4 = z_unscaled(4);
    Poly sq = z4 * z4;
    REQUIRE(sq.size() == 1);
    const auto& [m, c] = sq.terms().front();
    CHECK(c == Gaussian(1));
    CHECK(m.e_q == -8);
    CHECK(m.h_exp(4) == 2);
}

TEST_CASE("(gamma^2 - 2 h3 hbar3) * h4") {
    Poly R = Poly::gamma(2) - Poly::h3() * Poly::hbar3() * Gaussian(2);
    Poly prod = R * Poly::h(4);
    CHECK(prod == Poly::gamma(2) * Poly::h(4) -
                      Poly::h3() * Poly::hbar3() * Poly::h(4) * Gaussian(2));
    CHECK(prod.size() == 2);
}

TEST_CASE("zero absorbs products") {
    test::Rand rnd(7);
    Poly p = rnd.poly();
    CHECK((p * Poly()).is_zero());
    CHECK((Poly() * p).is_zero());
}

TEST_CASE("canonical form: p - p = 0 structurally") {
    test::Rand rnd(99);
    for (int it = 0; it < 100; ++it) {
        Poly p = rnd.poly();
        CHECK((p - p) == Poly());
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("ring axioms on random polynomials") {
    test::Rand rnd(555);
    for (int it = 0; it < 150; ++it) {
        Poly p = rnd.poly(), q = rnd.poly(), r = rnd.poly();
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("deterministic term order: graded lex") {
    // h-grade first, then e_q, e_gamma, e_hbar3
    Poly p = Poly::h(5) + Poly::h(4) * Poly::h(4) + Poly::gamma(1) + Poly::q(2);
    std::vector<long> grades;
    for (auto& [m, c] : p.terms()) grades.push_back(m.h_grade());
    CHECK(std::is_sorted(grades.begin(), grades.end()));
}

TEST_CASE("to_balanced: h3^{-4/3}h4 -> prefactor 0, body z4") {
    BalancedPoly b = to_balanced(z_unscaled(4));
    CHECK(b.prefactor_thirds == 0);
    CHECK(b.body == Poly::z(4));
}

TEST_CASE("to_balanced: -(3i/2) gamma h3^{-1/3} -> prefactor -1") {
    Monomial m;
    m.e_gamma = 1;
    m.e_q = -1;
    Poly s3 = Poly::monomial(m, Gaussian::imag(-3, 2));
    BalancedPoly b = to_balanced(s3);
    CHECK(b.prefactor_thirds == -1);
    Monomial g;
    g.e_gamma = 1;
    CHECK(b.body == Poly::monomial(g, Gaussian::imag(-3, 2)));
}

TEST_CASE("to_balanced: h3^{-4/3}h5 - (5/3)h3^{-7/3}h4^2 -> prefactor 1, z5 - 5/3 z4^2") {
    Monomial m1;
    m1.e_q = -4;
    m1.set_h_exp(5, 1);
    Monomial m2;
    m2.e_q = -7;
    m2.set_h_exp(4, 2);
    Poly p = Poly::monomial(m1, Gaussian(1)) + Poly::monomial(m2, Gaussian(-5, 3));
    BalancedPoly b = to_balanced(p);
    CHECK(b.prefactor_thirds == 1);
    CHECK(b.body == test::parse_zbody("z5 - 5/3 z4^2"));
}

TEST_CASE("to_balanced rejects mixed residual q-powers") {
    CHECK_THROWS_AS(to_balanced(z_unscaled(4) + Poly::q(1)), MixedPrefactorError);
}

TEST_CASE("to_balanced rejects stray conjugates") {
    CHECK_THROWS_AS(to_balanced(Poly::hbar3()), StrayConjugateError);
    CHECK_THROWS_AS(to_balanced(Poly::q(-2) * Poly::hbar3() * Poly::h(4)), StrayConjugateError);
    // a full h3*hbar3 pair converts to r^2
    BalancedPoly b = to_balanced(Poly::h3() * Poly::hbar3());
    CHECK(b.prefactor_thirds == 0);
    CHECK(b.body == Poly::r2());
}

TEST_CASE("balanced round-trip is the identity") {
    test::Rand rnd(2024);
    for (int it = 0; it < 100; ++it) {
        BalancedPoly b;
        b.prefactor_thirds = rnd.uniform(-4, 4);
        b.body = rnd.homogeneous_body(rnd.uniform(1, 6));
        // r^2 content needs a non-negative prefactor to stay pairable
        if (b.prefactor_thirds >= 0 && rnd.uniform(0, 1)) b.body = b.body * Poly::r2();
        if (b.body.is_zero()) continue;
        CHECK(to_balanced(from_balanced(b)) == b);
    }
}

TEST_CASE("grading: z4") {
    Grading g = grading(BalancedPoly{0, Poly::z(4)});
    CHECK(g.order == 4);
    CHECK(g.weight == 1);
    CHECK(g.degree == 1);
}

TEST_CASE("grading: z5 - 5/3 z4^2 is weight homogeneous, not degree uniform") {
    Grading g = grading(BalancedPoly{0, test::parse_zbody("z5 - 5/3 z4^2")});
    CHECK(g.order == 5);
    CHECK(g.weight == 2);
    CHECK_FALSE(g.degree.has_value());
}

TEST_CASE("grading: r^2 has order 0 and weight 0") {
    Grading g = grading(BalancedPoly{0, Poly::r2()});
    CHECK(g.order == 0);
    CHECK(g.weight == 0);
}

TEST_CASE("weights add under multiplication") {
    test::Rand rnd(31337);
    for (int it = 0; it < 100; ++it) {
        int w1 = rnd.uniform(1, 5), w2 = rnd.uniform(1, 5);
        Poly b1 = rnd.homogeneous_body(w1), b2 = rnd.homogeneous_body(w2);
        if (b1.is_zero() || b2.is_zero()) continue;
        BalancedPoly prod{0, b1 * b2};
        if (prod.body.is_zero()) continue;
        auto g = grading(prod);
        REQUIRE(g.weight.has_value());
        CHECK(*g.weight == w1 + w2);
    }
}
