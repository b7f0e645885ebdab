#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesim/poly.hpp"

namespace curvesim {

// Parameter interval with exact rational endpoints; an absent endpoint is
// an unbounded end.  Always nonempty: lo <= hi when both are present.
struct ParamInterval {
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    ParamInterval() = default;  // (-inf, inf)
    ParamInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {
        if (*lo > *hi) throw Error("interval endpoints out of order");
    }
    static ParamInterval everything() { return {}; }
    static ParamInterval at_most(Rational b) {
        ParamInterval v;
        v.hi = std::move(b);
        return v;
    }
    static ParamInterval at_least(Rational a) {
        ParamInterval v;
        v.lo = std::move(a);
        return v;
    }
    static ParamInterval point(const Rational& r) { return {r, r}; }

    bool bounded() const { return lo && hi; }
    bool is_point() const { return bounded() && *lo == *hi; }
    Rational width() const { return *hi - *lo; }  // bounded only
    Rational midpoint() const { return (*lo + *hi) / 2; }

    bool contains(const Rational& t) const {
        if (lo && t < *lo) return false;
        if (hi && t > *hi) return false;
        return true;
    }
    bool contains_interior(const Rational& t) const {
        if (lo && t <= *lo) return false;
        if (hi && t >= *hi) return false;
        return true;
    }
};

std::string to_string(const ParamInterval& iv);

using IntervalSet = std::vector<ParamInterval>;

// Closed rational interval for rigorous enclosure arithmetic.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rational& v) : lo(v), hi(v) {}
    RatInterval(Rational a, Rational b) : lo(std::move(a)), hi(std::move(b)) {}

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    int sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        return 0;  // undetermined / contains zero
    }

    friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
        Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        Rational lo = p1, hi = p1;
        for (const Rational& p : {p2, p3, p4}) {
            if (p < lo) lo = p;
            if (p > hi) hi = p;
        }
        return {std::move(lo), std::move(hi)};
    }
    // defined only when b excludes zero
    friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
        if (b.contains_zero()) throw Error("interval division by an interval containing zero");
        RatInterval inv(Rational(1) / b.hi, Rational(1) / b.lo);
        return a * inv;
    }
};

// Horner enclosure of p over x.
RatInterval eval_interval(const PolyQ& p, const RatInterval& x);

}  // namespace curvesim
