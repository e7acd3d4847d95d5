#pragma once

#include <cctype>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fkf/balanced.hpp"
#include "fkf/killing.hpp"

namespace fkf::test {

// z_j in the unscaled ring: q^-j h_j
inline Poly z_unscaled(int j) {
    Monomial m;
    m.e_q = -j;
    m.set_h_exp(j, 1);
    return Poly::monomial(m, Gaussian(1));
}

inline Monomial mono_gq(int e_gamma, int e_q) {
    Monomial m;
    m.e_gamma = e_gamma;
    m.e_q = e_q;
    return m;
}

// Parse a z-polynomial like "z5 - 5/3 z4^2 + 7 z6 z4" into a balanced body.
inline Poly parse_zbody(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    Poly out;
    std::size_t i = 0;
    int sign = 1;
    while (i < toks.size()) {
        if (toks[i] == "+") {
            sign = 1;
            ++i;
            continue;
        }
        if (toks[i] == "-") {
            sign = -1;
            ++i;
            continue;
        }
        Rational coeff(1);
        if (std::isdigit(static_cast<unsigned char>(toks[i][0]))) {
            coeff = rational_from_string(toks[i]);
            ++i;
        }
        Monomial m;
        while (i < toks.size() && toks[i][0] == 'z') {
            auto caret = toks[i].find('^');
            int j = std::stoi(toks[i].substr(1, caret == std::string::npos ? std::string::npos
                                                                           : caret - 1));
            int e = caret == std::string::npos ? 1 : std::stoi(toks[i].substr(caret + 1));
            m.set_h_exp(j, m.h_exp(j) + e);
            ++i;
        }
        if (sign < 0) coeff = -coeff;
        out += Poly::monomial(m, Gaussian(coeff));
        sign = 1;
    }
    return out;
}

// Parse a prefactor scalar like "-3/2 i gamma", "9/4 gamma^2", "-i gamma^-1".
inline std::pair<Gaussian, int> parse_scalar(const std::string& s) {
    std::istringstream in(s);
    Rational r(1);
    bool imag = false;
    int gamma_pow = 0;
    for (std::string t; in >> t;) {
        if (t == "i")
            imag = true;
        else if (t == "-i") {
            imag = true;
            r = -r;
        } else if (t.rfind("gamma", 0) == 0) {
            auto caret = t.find('^');
            gamma_pow = caret == std::string::npos ? 1 : std::stoi(t.substr(caret + 1));
        } else
            r = rational_from_string(t);
    }
    return {imag ? Gaussian(Rational(0), r) : Gaussian(r), gamma_pow};
}

struct GoldenCoeff {
    char comp;
    int index; // superscript; lambda-degree is index - 2
    int prefactor_thirds;
    const char* scalar;
    const char* body;
};

inline BalancedPoly golden_balanced(const GoldenCoeff& gc) {
    auto [c, gpow] = parse_scalar(gc.scalar);
    Monomial g;
    g.e_gamma = gpow;
    return BalancedPoly{gc.prefactor_thirds, parse_zbody(gc.body).times_monomial(g, c)};
}

inline Poly golden_unscaled(const GoldenCoeff& gc) { return from_balanced(golden_balanced(gc)); }

inline Component component_of(char c) {
    switch (c) {
        case 'p': return Component::p;
        case 'b': return Component::b;
        case 'c': return Component::c;
        case 'f': return Component::f;
        case 'a': return Component::a;
        case 'g': return Component::g;
        case 's': return Component::s;
        default: return Component::t;
    }
}

// The X(p^4) tower coefficients through one cycle.
inline const std::vector<GoldenCoeff>& golden_p4() {
    static const std::vector<GoldenCoeff> g = {
        {'s', 3, -1, "-3/2 i gamma", "1"},
        {'t', 3, 2, "3/2 i", "1"},
        {'p', 4, 0, "1", "z4"},
        {'b', 5, 1, "-1/3 i gamma^-1", "z5 - 5/3 z4^2"},
        {'c', 5, -2, "-1/3 i", "z5 - 7/6 z4^2"},
        {'f', 6, -1, "-1/3 gamma^-1", "z6 - 14/3 z5 z4 + 35/9 z4^3"},
        {'a', 7, 0, "2/9 i gamma^-2",
         "z7 - 7 z6 z4 - 14/3 z5^2 + 245/9 z5 z4^2 - 455/27 z4^4"},
        {'g', 8, 1, "2/9 gamma^-3",
         "z8 - 28/3 z7 z4 - 49/3 z6 z5 + 455/9 z6 z4^2 + 70 z5^2 z4 - 5005/27 z5 z4^3 "
         "+ 7280/81 z4^5"},
        {'s', 9, -1, "2/27 i gamma^-3",
         "z9 - 11 z8 z4 - 79/3 z7 z5 + 689/9 z7 z4^2 - 16 z6^2 + 286 z6 z5 z4 "
         "- 3380/9 z6 z4^3 + 1976/27 z5^3 - 22360/27 z5^2 z4^2 + 108680/81 z5 z4^4 "
         "- 380380/729 z4^6"},
        {'t', 9, 2, "4/27 i gamma^-4",
         "z9 - 12 z8 z4 - 76/3 z7 z5 + 758/9 z7 z4^2 - 33/2 z6^2 + 901/3 z6 z5 z4 "
         "- 3770/9 z6 z4^3 + 1847/27 z5^3 - 47255/54 z5^2 z4^2 + 120380/81 z5 z4^4 "
         "- 432250/729 z4^6"},
        {'p', 10, 0, "4/27 gamma^-4",
         "z10 - 43/3 z9 z4 - 112/3 z8 z5 + 1118/9 z8 z4^2 - 175/3 z7 z6 "
         "+ 4979/9 z7 z5 z4 - 21164/27 z7 z4^3 + 1066/3 z6^2 z4 + 4550/9 z6 z5^2 "
         "- 116324/27 z6 z5 z4^2 + 301340/81 z6 z4^4 - 165776/81 z5^3 z4 "
         "+ 286520/27 z5^2 z4^3 - 3151720/243 z5 z4^5 + 9509500/2187 z4^7"},
    };
    return g;
}

// The X(a^5) tower coefficients through one cycle.
inline const std::vector<GoldenCoeff>& golden_a5() {
    static const std::vector<GoldenCoeff> g = {
        {'b', 3, 1, "-9/2 gamma", "1"},
        {'c', 3, -2, "9/4 gamma^2", "1"},
        {'f', 4, -1, "3/2 i gamma", "z4"},
        {'a', 5, 0, "1", "z5 - 5/3 z4^2"},
        {'g', 6, 1, "-i gamma^-1", "z6 - 5 z5 z4 + 40/9 z4^3"},
        {'s', 7, -1, "1/3 gamma^-1",
         "z7 - 6 z6 z4 - 16/3 z5^2 + 220/9 z5 z4^2 - 385/27 z4^4"},
        {'t', 7, 2, "2/3 gamma^-2",
         "z7 - 7 z6 z4 - 29/6 z5^2 + 250/9 z5 z4^2 - 935/54 z4^4"},
        {'p', 8, 0, "-2/3 i gamma^-2",
         "z8 - 26/3 z7 z4 - 50/3 z6 z5 + 418/9 z6 z4^2 + 616/9 z5^2 z4 "
         "- 1540/9 z5 z4^3 + 6545/81 z4^5"},
        {'b', 9, 1, "-2/9 gamma^-3",
         "z9 - 12 z8 z4 - 74/3 z7 z5 + 748/9 z7 z4^2 - 17 z6^2 + 902/3 z6 z5 z4 "
         "- 3740/9 z6 z4^3 + 1760/27 z5^3 - 23320/27 z5^2 z4^2 + 118745/81 z5 z4^4 "
         "- 425425/729 z4^6"},
        {'c', 9, -2, "-2/9 gamma^-2",
         "z9 - 11 z8 z4 - 77/3 z7 z5 + 682/9 z7 z4^2 - 33/2 z6^2 + 286 z6 z5 z4 "
         "- 374 z6 z4^3 + 1892/27 z5^3 - 22066/27 z5^2 z4^2 + 107525/81 z5 z4^4 "
         "- 752675/1458 z4^6"},
        {'f', 10, -1, "2/9 i gamma^-3",
         "z10 - 44/3 z9 z4 - 110/3 z8 z5 + 1144/9 z8 z4^2 - 176/3 z7 z6 "
         "+ 1672/3 z7 z5 z4 - 21692/27 z7 z4^3 + 363 z6^2 z4 + 4466/9 z6 z5^2 "
         "- 118184/27 z6 z5 z4^2 + 309485/81 z6 z4^4 - 164560/81 z5^3 z4 "
         "+ 871420/81 z5^2 z4^3 - 1075250/81 z5 z4^5 + 9784775/2187 z4^7"},
        {'a', 11, 0, "4/27 gamma^-4",
         "z11 - 55/3 z10 z4 - 154/3 z9 z5 + 1760/9 z9 z4^2 - 286/3 z8 z6 "
         "+ 2948/3 z8 z5 z4 - 41140/27 z8 z4^3 - 176/3 z7^2 + 14014/9 z7 z6 z4 "
         "+ 9482/9 z7 z5^2 - 268532/27 z7 z5 z4^2 + 247775/27 z7 z4^4 "
         "+ 12199/9 z6^2 z5 - 173723/27 z6^2 z4^2 - 158950/9 z6 z5^2 z4 "
         "+ 5344460/81 z6 z5 z4^3 - 10343905/243 z6 z4^5 - 164560/81 z5^4 "
         "+ 11133980/243 z5^3 z4^2 - 36171410/243 z5^2 z4^4 + 320101925/2187 z5 z4^6 "
         "- 283758475/6561 z4^8"},
    };
    return g;
}

// --- randomized inputs ------------------------------------------------------

struct Rand {
    std::mt19937 rng;
    explicit Rand(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Gaussian gaussian() {
        Rational re(uniform(-4, 4), uniform(1, 4));
        re.canonicalize();
        if (uniform(0, 2) == 0) {
            Rational im(uniform(-3, 3), uniform(1, 3));
            im.canonicalize();
            return Gaussian(re, im);
        }
        return Gaussian(re);
    }

    Monomial monomial(bool allow_hbar3 = true, int max_h = 7) {
        Monomial m;
        m.e_gamma = uniform(-2, 2);
        m.e_q = uniform(-3, 3);
        if (allow_hbar3 && uniform(0, 3) == 0) m.e_hbar3 = 1;
        int nvars = uniform(0, 2);
        for (int k = 0; k < nvars; ++k) {
            int j = uniform(4, max_h);
            m.set_h_exp(j, m.h_exp(j) + uniform(1, 2));
        }
        return m;
    }

    Poly poly(bool allow_hbar3 = true, int max_terms = 4, int max_h = 7) {
        std::vector<Poly::Term> ts;
        int n = uniform(0, max_terms);
        for (int k = 0; k < n; ++k) ts.emplace_back(monomial(allow_hbar3, max_h), gaussian());
        return Poly::from_terms(std::move(ts));
    }

    // weight-homogeneous balanced body of the given spectral weight
    Poly homogeneous_body(int weight, int max_terms = 3) {
        Poly out;
        int n = uniform(1, max_terms);
        for (int k = 0; k < n; ++k) {
            Monomial m;
            int rem = weight;
            while (rem > 0) {
                int w = uniform(1, std::min(rem, 5));
                m.set_h_exp(w + 3, m.h_exp(w + 3) + 1);
                rem -= w;
            }
            m.e_gamma = uniform(-1, 1);
            out += Poly::monomial(m, gaussian());
        }
        return out;
    }
};

} // namespace fkf::test
