#include "curvesim/moebius.hpp"

#include <algorithm>

namespace curvesim {

RatFuncQ to_ratfunc(const Moebius& m) {
    return RatFuncQ(PolyQ::from_coeffs({m.beta, m.alpha}), PolyQ::from_coeffs({m.delta, m.gamma}));
}

std::string to_string(const Moebius& m) {
    PolyQ num = PolyQ::from_coeffs({m.beta, m.alpha});
    PolyQ den = PolyQ::from_coeffs({m.delta, m.gamma});
    if (den == PolyQ(1)) return to_string(num, "t");
    return "(" + to_string(num, "t") + ")/(" + to_string(den, "t") + ")";
}

std::pair<PolyG, PolyG> substitute_moebius(const PolyG& num, const PolyG& den, const Moebius& m) {
    const int d = std::max(num.degree(), den.degree());
    if (d < 0) return {PolyG(), PolyG()};
    PolyG lin_num = PolyG::from_coeffs({GaussianRational(m.beta), GaussianRational(m.alpha)});
    PolyG lin_den = PolyG::from_coeffs({GaussianRational(m.delta), GaussianRational(m.gamma)});
    // powers 0..d of both linear forms
    std::vector<PolyG> pn(static_cast<size_t>(d) + 1), pd(static_cast<size_t>(d) + 1);
    pn[0] = PolyG(1);
    pd[0] = PolyG(1);
    for (int k = 1; k <= d; ++k) {
        pn[static_cast<size_t>(k)] = pn[static_cast<size_t>(k - 1)] * lin_num;
        pd[static_cast<size_t>(k)] = pd[static_cast<size_t>(k - 1)] * lin_den;
    }
    PolyG out_num, out_den;
    for (int k = 0; k <= d; ++k) {
        const PolyG& basis = pn[static_cast<size_t>(k)] * pd[static_cast<size_t>(d - k)];
        out_num += basis * num.coeff(k);
        out_den += basis * den.coeff(k);
    }
    return {out_num, out_den};
}

IntervalSet image_interval(const Moebius& m, const ParamInterval& iv) {
    const int orient = sign(m.det());
    auto value = [&](const Rational& t) { return *m(t); };

    if (m.is_affine()) {
        // t -> (alpha t + beta)/delta, monotone with the sign of alpha/delta
        bool inc = sign(m.alpha) * sign(m.delta) > 0;
        ParamInterval out;
        const auto& a = inc ? iv.lo : iv.hi;
        const auto& b = inc ? iv.hi : iv.lo;
        if (a) out.lo = value(*a);
        if (b) out.hi = value(*b);
        return {out};
    }

    const Rational pole = -m.delta / m.gamma;
    const Rational at_inf = m.alpha / m.gamma;

    if (iv.is_point() && *iv.lo == pole)
        throw DegenerateInput("interval degenerates to the pole of the transformation");

    bool pole_interior = iv.contains_interior(pole);
    bool pole_at_lo = iv.lo && *iv.lo == pole;
    bool pole_at_hi = iv.hi && *iv.hi == pole;
    if (!iv.lo && !iv.hi) pole_interior = true;
    if (!iv.lo && iv.hi && !pole_at_hi && pole < *iv.hi) pole_interior = true;
    if (!iv.hi && iv.lo && !pole_at_lo && pole > *iv.lo) pole_interior = true;

    // endpoint images; an unbounded end maps to the closure value alpha/gamma
    auto end_value = [&](const std::optional<Rational>& e) {
        return e ? value(*e) : at_inf;
    };

    if (pole_interior) {
        // two rays; which endpoint owns which ray follows from monotonicity
        Rational from_lo = end_value(iv.lo);  // image of [lo, pole)
        Rational from_hi = end_value(iv.hi);  // image of (pole, hi]
        if (orient > 0) return {ParamInterval::at_most(from_hi), ParamInterval::at_least(from_lo)};
        return {ParamInterval::at_most(from_lo), ParamInterval::at_least(from_hi)};
    }
    if (pole_at_lo) {
        Rational v = end_value(iv.hi);
        return {orient > 0 ? ParamInterval::at_most(v) : ParamInterval::at_least(v)};
    }
    if (pole_at_hi) {
        Rational v = end_value(iv.lo);
        return {orient > 0 ? ParamInterval::at_least(v) : ParamInterval::at_most(v)};
    }

    // pole outside: monotone piece; order endpoint images directly
    std::optional<Rational> va = iv.lo ? std::optional<Rational>(value(*iv.lo)) : std::nullopt;
    std::optional<Rational> vb = iv.hi ? std::optional<Rational>(value(*iv.hi)) : std::nullopt;
    if (!iv.lo) va = at_inf;
    if (!iv.hi) vb = at_inf;
    ParamInterval out;
    if (*va <= *vb) {
        out.lo = *va;
        out.hi = *vb;
    } else {
        out.lo = *vb;
        out.hi = *va;
    }
    return {out};
}

}  // namespace curvesim
