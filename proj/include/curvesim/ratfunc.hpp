#pragma once

#include <optional>
#include <string>
#include <utility>

#include "curvesim/poly.hpp"

namespace curvesim {

// Reduced rational function num/den over a coefficient field K:
// gcd(num, den) = 1 and den monic.  den is never the zero polynomial.
template <class K>
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    explicit RatFunc(int v) : num_(v), den_(1) {}
    explicit RatFunc(const K& v) : num_(v), den_(1) {}
    explicit RatFunc(Poly<K> p) : num_(std::move(p)), den_(1) {}
    RatFunc(Poly<K> num, Poly<K> den) { assign(std::move(num), std::move(den)); }

    static RatFunc variable() { return RatFunc(Poly<K>::variable()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero_fn() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        // cross-reduce before multiplying to keep the gcds small
        Poly<K> g1 = gcd(a.num_, b.den_);
        Poly<K> g2 = gcd(b.num_, a.den_);
        Poly<K> n = (g1.degree() > 0 ? exact_div(a.num_, g1) : a.num_) *
                    (g2.degree() > 0 ? exact_div(b.num_, g2) : b.num_);
        Poly<K> d = (g2.degree() > 0 ? exact_div(a.den_, g2) : a.den_) *
                    (g1.degree() > 0 ? exact_div(b.den_, g1) : b.den_);
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        r.make_monic_den();
        return r;
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero_fn()) throw ZeroDenominator();
        RatFunc binv;
        binv.num_ = b.den_;
        binv.den_ = b.num_;
        binv.make_monic_den();
        return a * binv;
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    // std::nullopt at a pole
    std::optional<K> operator()(const K& t) const {
        K d = eval(den_, t);
        if (is_zero(d)) return std::nullopt;
        return eval(num_, t) / d;
    }

  private:
    void assign(Poly<K> num, Poly<K> den) {
        if (den.is_zero_poly()) throw ZeroDenominator();
        Poly<K> g = gcd(num, den);
        if (g.degree() > 0) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        num_ = std::move(num);
        den_ = std::move(den);
        make_monic_den();
    }
    void make_monic_den() {
        const K lead = den_.lead();
        if (!(lead == K(1))) {
            const K inv = K(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
    Poly<K> num_, den_;
};

template <class K>
bool is_zero(const RatFunc<K>& f) {
    return f.is_zero_fn();
}

using RatFuncQ = RatFunc<Rational>;
using RatFuncG = RatFunc<GaussianRational>;

template <class K>
RatFunc<K> derivative(const RatFunc<K>& f) {
    return RatFunc<K>(derivative(f.num()) * f.den() - f.num() * derivative(f.den()),
                      f.den() * f.den());
}

inline PolyG to_gaussian(const PolyQ& p) {
    std::vector<GaussianRational> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p.coeff(i));
    return PolyG::from_coeffs(std::move(c));
}

inline RatFuncG to_gaussian(const RatFuncQ& f) {
    return RatFuncG(to_gaussian(f.num()), to_gaussian(f.den()));
}

inline PolyG conj(const PolyG& p) {
    std::vector<GaussianRational> c;
    c.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i).conj());
    return PolyG::from_coeffs(std::move(c));
}

inline RatFuncG conj(const RatFuncG& f) {
    // den is monic, conj keeps it monic
    return RatFuncG(conj(f.num()), conj(f.den()));
}

PolyQ real_part(const PolyG& p);
PolyQ imag_part(const PolyG& p);

// (Re f, Im f) as real rational functions of the (real) variable.
std::pair<RatFuncQ, RatFuncQ> split_real_imag(const RatFuncG& f);

// Re f + i Im f, for rebuilding a complex function from its split.
RatFuncG join_real_imag(const RatFuncQ& re, const RatFuncQ& im);

}  // namespace curvesim
