#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "curvesim/errors.hpp"

namespace curvesim {

// Exact rational arithmetic is delegated to GMP.  mpq_class keeps the
// canonical form gcd(num, den) = 1, den > 0 as long as values are built
// through its arithmetic or through make_rational below.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw ZeroDenominator();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs(const Rational& q) { return ::abs(q); }

// "p/q" or "p", optionally signed; exact, no decimal points.
Rational parse_rational(std::string_view s);

// Canonical "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);

// Decimal rendering with `digits` digits after the point, round-to-nearest.
std::string decimal_string(const Rational& q, int digits);

// Number of bits needed to represent |n|: ceil(log2(|n|)) + 1, 1 for n = 0.
unsigned bitsize(const Integer& n);

// max of numerator/denominator bitsizes.
unsigned bitsize(const Rational& q);

Rational pow(const Rational& base, unsigned e);

// Gaussian rationals: exact complex numbers with rational real and
// imaginary parts.  Field operations only; this is the coefficient
// domain of the complex form z(t) = x(t) + i y(t).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    explicit GaussianRational(int v) : re(v), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i_unit() { return {Rational(0), Rational(1)}; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }  // |z|^2

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n = o.norm();
        if (is_zero(n)) throw ZeroDenominator();
        GaussianRational c = o.conj();
        *this *= c;
        re /= n;
        im /= n;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline bool is_zero(const GaussianRational& z) { return is_zero(z.re) && is_zero(z.im); }

std::string to_string(const GaussianRational& z);

inline unsigned bitsize(const GaussianRational& z) {
    unsigned a = bitsize(z.re), b = bitsize(z.im);
    return a > b ? a : b;
}

}  // namespace curvesim
