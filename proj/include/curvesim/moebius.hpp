#pragma once

#include <optional>
#include <string>

#include "curvesim/interval.hpp"
#include "curvesim/ratfunc.hpp"

namespace curvesim {

// Moebius transformation t -> (alpha t + beta) / (gamma t + delta) of the
// parameter line, with nonzero determinant.  Kept in canonical scaling:
// delta = 1 when delta != 0, otherwise gamma = 1.  K is Rational for plain
// transformations and a witness-field element type for lifted ones.
template <class K>
struct MoebiusT {
    K alpha, beta, gamma, delta;

    MoebiusT() : alpha(1), beta(0), gamma(0), delta(1) {}
    MoebiusT(K a, K b, K c, K d)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)), delta(std::move(d)) {
        if (is_zero(det())) throw DegenerateInput("moebius transformation with zero determinant");
        canonicalize();
    }

    static MoebiusT identity() { return {}; }
    static MoebiusT shift(const K& c) { return {K(1), c, K(0), K(1)}; }          // t + c
    static MoebiusT inversion_at(const K& e) { return {K(0), K(1), K(1), e}; }  // 1/(t+e)

    K det() const { return alpha * delta - beta * gamma; }
    bool is_affine() const { return is_zero(gamma); }
    bool is_identity() const {
        return is_zero(gamma) && is_zero(beta) && alpha == K(1) && delta == K(1);
    }

    void canonicalize() {
        if (!is_zero(delta)) {
            K inv = K(1) / delta;
            alpha = alpha * inv;
            beta = beta * inv;
            gamma = gamma * inv;
            delta = K(1);
        } else {
            K inv = K(1) / gamma;
            alpha = alpha * inv;
            beta = beta * inv;
            gamma = K(1);
            delta = K(0);
        }
    }

    // value at a parameter; nullopt at the pole
    std::optional<K> operator()(const K& t) const {
        K d = gamma * t + delta;
        if (is_zero(d)) return std::nullopt;
        return (alpha * t + beta) / d;
    }

    friend bool operator==(const MoebiusT& a, const MoebiusT& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma && a.delta == b.delta;
    }
};

using Moebius = MoebiusT<Rational>;

// (m1 o m2)(t) = m1(m2(t)); coefficient matrices multiply.
template <class K>
MoebiusT<K> compose(const MoebiusT<K>& m1, const MoebiusT<K>& m2) {
    return MoebiusT<K>(m1.alpha * m2.alpha + m1.beta * m2.gamma,
                       m1.alpha * m2.beta + m1.beta * m2.delta,
                       m1.gamma * m2.alpha + m1.delta * m2.gamma,
                       m1.gamma * m2.beta + m1.delta * m2.delta);
}

template <class K>
MoebiusT<K> inverse(const MoebiusT<K>& m) {
    return MoebiusT<K>(m.delta, -m.beta, -m.gamma, m.alpha);
}

// the rational function (alpha t + beta)/(gamma t + delta)
RatFuncQ to_ratfunc(const Moebius& m);

std::string to_string(const Moebius& m);

// Homogeneous substitution of m into the numerator/denominator pair of a
// complex parametrization: N(m(t))/D(m(t)) cleared of the (gamma t + delta)
// powers.  The result is NOT reduced; curve-level code normalizes it.
std::pair<PolyG, PolyG> substitute_moebius(const PolyG& num, const PolyG& den, const Moebius& m);

// Exact image of an interval.  A single interval when the pole of m does
// not lie in the interior of iv, two unbounded rays when it does.  For
// unbounded input with a pole this is the closure of the image.
IntervalSet image_interval(const Moebius& m, const ParamInterval& iv);

}  // namespace curvesim
