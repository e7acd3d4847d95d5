#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "fkf/errors.hpp"

namespace fkf {

using Rational = mpq_class;

// Parse "p/q" or "p"; canonicalized (gcd 1, positive denominator).
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

/**
 * Gaussian: exact element re + im*i of Q(i).
 *
 * Both parts are GMP rationals, always canonical, so structural equality
 * is exact field equality and zero has the unique representation (0, 0).
 */
struct Gaussian {
    Rational re, im;

    Gaussian() : re(0), im(0) {}
    Gaussian(long n) : re(n), im(0) {}
    Gaussian(long num, long den) : re(num, den), im(0) {
        if (den == 0) throw DivisionByZeroError();
        re.canonicalize();
    }
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian unit_i() { return Gaussian(Rational(0), Rational(1)); }
    // num/den * i
    static Gaussian imag(long num, long den = 1) {
        if (den == 0) throw DivisionByZeroError();
        Rational r(num, den);
        r.canonicalize();
        return Gaussian(Rational(0), r);
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Gaussian conj() const { return Gaussian(re, Rational(-im)); }
    Gaussian times_i() const { return Gaussian(Rational(-im), re); }

    Gaussian operator-() const { return Gaussian(Rational(-re), Rational(-im)); }

    Gaussian operator+(const Gaussian& o) const { return Gaussian(re + o.re, im + o.im); }
    Gaussian operator-(const Gaussian& o) const { return Gaussian(re - o.re, im - o.im); }
    Gaussian operator*(const Gaussian& o) const {
        return Gaussian(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Gaussian operator/(const Gaussian& o) const {
        if (o.is_zero()) throw DivisionByZeroError();
        Rational n = o.re * o.re + o.im * o.im;
        return Gaussian((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) { return *this = *this * o; }

    bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
    bool operator!=(const Gaussian& o) const { return !(*this == o); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        if (re != 0) s += re.get_str();
        if (im != 0) {
            if (!s.empty() && im > 0) s += "+";
            if (im == 1)
                s += "i";
            else if (im == -1)
                s += "-i";
            else
                s += im.get_str() + "*i";
        }
        return s;
    }
};

enum class ArithKind { add, sub, mul, div };

// Dispatch form of the field arithmetic (the operators above are the
// everyday interface).
inline Gaussian gr_arith(const Gaussian& a, const Gaussian& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
        case ArithKind::div: return a / b;
    }
    throw Error("unreachable arithmetic kind");
}

} // namespace fkf
