#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "curvesim/par.hpp"
#include "curvesim/rational.hpp"

namespace curvesim {

// Dense univariate polynomial over a coefficient domain K (a field for
// division-based operations, any commutative ring otherwise).  Coefficients
// are stored ascending by degree with no trailing zeros; the zero polynomial
// has an empty coefficient vector and degree() == -1.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(int v) {
        if (v != 0) c_.push_back(K(v));
    }
    explicit Poly(const K& v) {
        c_.push_back(v);
        trim();
    }
    static Poly from_coeffs(std::vector<K> c) {
        Poly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }
    // x^n with coefficient c
    static Poly monomial(const K& c, int n) {
        Poly p;
        if (!is_zero(c)) {
            p.c_.assign(static_cast<size_t>(n) + 1, K(0));
            p.c_.back() = c;
        }
        return p;
    }
    static Poly variable() { return monomial(K(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const std::vector<K>& coeffs() const { return c_; }

    // coefficient of t^i (K(0) beyond the degree)
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const K& lead() const { return c_.back(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // schoolbook product, single-threaded; the reference kernel
    friend Poly mul_serial(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    // schoolbook product with the output coefficients computed in parallel
    friend Poly mul_parallel(const Poly& a, const Poly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return Poly();
        const auto na = static_cast<long>(a.c_.size()), nb = static_cast<long>(b.c_.size());
        Poly r;
        r.c_.assign(static_cast<size_t>(na + nb - 1), K(0));
        CURVESIM_OMP_PARALLEL_FOR
        for (long k = 0; k < na + nb - 1; ++k) {
            K acc(0);
            const long lo = std::max(0l, k - nb + 1), hi = std::min(k, na - 1);
            for (long i = lo; i <= hi; ++i) acc += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(k - i)];
            r.c_[static_cast<size_t>(k)] = std::move(acc);
        }
        r.trim();
        return r;
    }

    friend Poly mul(const Poly& a, const Poly& b) {
        const size_t work = a.c_.size() * b.c_.size();
        if (par::threads_enabled() && work >= par::kPolyMulCutoff) return mul_parallel(a, b);
        return mul_serial(a, b);
    }

    friend Poly operator*(const Poly& a, const K& s) {
        if (is_zero(s)) return Poly();
        Poly r = a;
        for (auto& x : r.c_) x = x * s;
        r.trim();
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
bool is_zero(const Poly<K>& p) {
    return p.is_zero_poly();
}

using PolyQ = Poly<Rational>;
using PolyG = Poly<GaussianRational>;

template <class K>
Poly<K> derivative(const Poly<K>& p) {
    std::vector<K> c;
    for (int i = 1; i <= p.degree(); ++i) c.push_back(p.coeff(i) * K(i));
    return Poly<K>::from_coeffs(std::move(c));
}

// Horner evaluation at an element of any K-algebra; `hom` embeds the
// coefficients (identity by default via eval below).
template <class K, class L, class Hom>
L eval_hom(const Poly<K>& p, const L& x, Hom hom) {
    if (p.is_zero_poly()) return hom(K(0));
    L acc = hom(p.coeff(p.degree()));
    for (int i = p.degree() - 1; i >= 0; --i) acc = acc * x + hom(p.coeff(i));
    return acc;
}

template <class K>
K eval(const Poly<K>& p, const K& x) {
    return eval_hom(p, x, [](const K& c) { return c; });
}

template <class K>
Poly<K> compose(const Poly<K>& p, const Poly<K>& q) {
    if (p.is_zero_poly()) return Poly<K>();
    Poly<K> acc(p.coeff(p.degree()));
    for (int i = p.degree() - 1; i >= 0; --i) acc = acc * q + Poly<K>(p.coeff(i));
    return acc;
}

// t^n * p(1/t); requires n >= deg p
template <class K>
Poly<K> reverse(const Poly<K>& p, int n) {
    std::vector<K> c(static_cast<size_t>(n) + 1, K(0));
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(n - i)] = p.coeff(i);
    return Poly<K>::from_coeffs(std::move(c));
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero_poly()) throw ZeroDenominator();
    if (a.degree() < b.degree()) return {Poly<K>(), a};
    std::vector<K> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<K> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, K(0));
    const K& lb = b.lead();
    for (int i = a.degree(); i >= b.degree(); --i) {
        K q = rem[static_cast<size_t>(i)] / lb;
        if (!is_zero(q)) {
            quo[static_cast<size_t>(i - b.degree())] = q;
            for (int j = 0; j <= b.degree(); ++j)
                rem[static_cast<size_t>(i - b.degree() + j)] -= q * b.coeff(j);
        }
    }
    return {Poly<K>::from_coeffs(std::move(quo)), Poly<K>::from_coeffs(std::move(rem))};
}

template <class K>
Poly<K> rem(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

// quotient of an exact division; remainder must vanish
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero_poly()) throw Error("exact_div: division not exact");
    return q;
}

template <class K>
Poly<K> monic(const Poly<K>& p) {
    if (p.is_zero_poly()) return p;
    const K inv = K(1) / p.lead();
    return p * inv;
}

namespace detail {

// integer image of a rational polynomial: primitive, positive leading coeff
std::vector<Integer> primitive_integer(const PolyQ& p);
PolyQ from_integer(const std::vector<Integer>& c);

// gcd over Q via a subresultant PRS on the integer images; avoids the
// coefficient blowup of naive fraction Euclid
PolyQ gcd_rational(const PolyQ& a, const PolyQ& b);

template <class K>
Poly<K> gcd_monic_euclid(Poly<K> a, Poly<K> b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero_poly()) {
        b = monic(b);
        Poly<K> r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

}  // namespace detail

// Monic gcd; gcd(0, 0) = 0 by convention.
template <class K>
Poly<K> gcd(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero_poly()) return monic(b);
    if (b.is_zero_poly()) return monic(a);
    if constexpr (std::is_same_v<K, Rational>)
        return detail::gcd_rational(a, b);
    else
        return detail::gcd_monic_euclid(a, b);
}

// Monic polynomial with the same roots, all simple: p / gcd(p, p').
template <class K>
Poly<K> squarefree_part(const Poly<K>& p) {
    if (p.is_zero_poly()) throw ZeroPolynomial();
    if (p.degree() == 0) return Poly<K>(1);
    Poly<K> g = gcd(p, derivative(p));
    if (g.degree() == 0) return monic(p);
    return monic(exact_div(p, g));
}

// ---- bivariate layer: polynomials in t whose coefficients live in Q[s] ----

using PolyQQ = Poly<PolyQ>;

// pseudo-remainder: lead(b)^(deg a - deg b + 1) * a  mod  b, over any ring
template <class K>
Poly<K> pseudo_rem(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero_poly()) throw ZeroDenominator();
    Poly<K> r = a;
    int steps = a.degree() - b.degree() + 1;
    if (steps <= 0) return r;
    const K& lb = b.lead();
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        Poly<K> shift = Poly<K>::monomial(r.lead(), r.degree() - b.degree());
        r = r * lb - shift * b;
        --steps;
    }
    // keep the classical normalization so exact content stripping stays valid
    for (; steps > 0; --steps) r = r * lb;
    return r;
}

// gcd of the Q[s]-coefficients
PolyQ content_bivariate(const PolyQQ& p);
PolyQQ primitive_bivariate(const PolyQQ& p);

// primitive-PRS gcd in t over the field Q(s); result primitive in s,
// defined up to a Q[s]-unit
PolyQQ gcd_bivariate(PolyQQ a, PolyQQ b);

std::string to_string(const PolyQ& p, const std::string& var = "t");
std::string to_string(const PolyG& p, const std::string& var = "t");

unsigned bitsize(const PolyQ& p);
unsigned bitsize(const PolyG& p);

}  // namespace curvesim
