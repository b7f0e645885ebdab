#include "curvesim/poly.hpp"

#include <sstream>

namespace curvesim {

namespace detail {

std::vector<Integer> primitive_integer(const PolyQ& p) {
    std::vector<Integer> c(static_cast<size_t>(p.degree()) + 1);
    Integer l(1);
    for (int i = 0; i <= p.degree(); ++i) {
        Integer d = p.coeff(i).get_den();
        Integer g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        l = l / g * d;
    }
    Integer cont(0);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational q = p.coeff(i) * Rational(l);
        c[static_cast<size_t>(i)] = q.get_num();
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c[static_cast<size_t>(i)].get_mpz_t());
    }
    if (sgn(cont) != 0) {
        if (sgn(c.back()) < 0) cont = -cont;
        for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
    }
    return c;
}

PolyQ from_integer(const std::vector<Integer>& c) {
    std::vector<Rational> q;
    q.reserve(c.size());
    for (const auto& x : c) q.emplace_back(x);
    return PolyQ::from_coeffs(std::move(q));
}

namespace {

int zdeg(const std::vector<Integer>& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(std::vector<Integer>& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

// r <- lc(b)^(deg a - deg b + 1) * a mod b over Z
std::vector<Integer> zprem(std::vector<Integer> r, const std::vector<Integer>& b) {
    const Integer& lb = b.back();
    int steps = zdeg(r) - zdeg(b) + 1;
    while (!r.empty() && zdeg(r) >= zdeg(b)) {
        Integer lr = r.back();
        int shift = zdeg(r) - zdeg(b);
        for (auto& x : r) x *= lb;
        for (size_t j = 0; j < b.size(); ++j) r[static_cast<size_t>(shift) + j] -= lr * b[j];
        ztrim(r);
        --steps;
    }
    for (; steps > 0; --steps)
        for (auto& x : r) x *= lb;
    return r;
}

void zdivexact_scalar(std::vector<Integer>& a, const Integer& d) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

std::vector<Integer> zprimitive(std::vector<Integer> a) {
    Integer cont(0);
    for (const auto& x : a) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
    if (sgn(cont) != 0) {
        if (sgn(a.back()) < 0) cont = -cont;
        zdivexact_scalar(a, cont);
    }
    return a;
}

Integer zpow(Integer b, int e) {
    Integer r(1);
    for (; e > 0; --e) r *= b;
    return r;
}

}  // namespace

PolyQ gcd_rational(const PolyQ& pa, const PolyQ& pb) {
    std::vector<Integer> a = primitive_integer(pa);
    std::vector<Integer> b = primitive_integer(pb);
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    if (b.empty()) return monic(from_integer(a));

    // subresultant PRS (Collins/Brown)
    Integer g(1), h(1);
    while (true) {
        int delta = zdeg(a) - zdeg(b);
        std::vector<Integer> r = zprem(a, b);
        if (r.empty()) break;
        if (zdeg(r) == 0) return PolyQ(1);
        a = std::move(b);
        Integer div = g * zpow(h, delta);
        zdivexact_scalar(r, div);
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            Integer num = zpow(g, delta);
            Integer den = zpow(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        // delta == 0 leaves h unchanged
    }
    return monic(from_integer(zprimitive(std::move(b))));
}

}  // namespace detail

PolyQ content_bivariate(const PolyQQ& p) {
    PolyQ c;
    for (int i = 0; i <= p.degree(); ++i) c = gcd(c, p.coeff(i));
    return c;
}

PolyQQ primitive_bivariate(const PolyQQ& p) {
    if (p.is_zero_poly()) return p;
    PolyQ c = content_bivariate(p);
    if (c.degree() <= 0) return p;
    std::vector<PolyQ> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i) out.push_back(exact_div(p.coeff(i), c));
    return PolyQQ::from_coeffs(std::move(out));
}

PolyQQ gcd_bivariate(PolyQQ a, PolyQQ b) {
    if (a.is_zero_poly()) return primitive_bivariate(b);
    if (b.is_zero_poly()) return primitive_bivariate(a);
    a = primitive_bivariate(a);
    b = primitive_bivariate(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (true) {
        PolyQQ r = pseudo_rem(a, b);
        if (r.is_zero_poly()) return primitive_bivariate(b);
        if (r.degree() == 0) return PolyQQ(1);
        a = std::move(b);
        b = primitive_bivariate(r);
    }
}

namespace {

template <class K>
std::string poly_to_string(const Poly<K>& p, const std::string& var) {
    if (p.is_zero_poly()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        K c = p.coeff(i);
        if (is_zero(c)) continue;
        std::string cs = to_string(c);
        // sums/products inside a coefficient get parenthesized as a unit
        bool composite = cs.find_first_of("+*i", 1) != std::string::npos ||
                         cs.find('-', 1) != std::string::npos;
        if (composite) {
            os << (first ? "" : " + ") << "(" << cs << ")";
            if (i > 0) {
                os << "*" << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
            continue;
        }
        bool neg = !cs.empty() && cs[0] == '-';
        if (first)
            first = false;
        else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const PolyQ& p, const std::string& var) { return poly_to_string(p, var); }
std::string to_string(const PolyG& p, const std::string& var) { return poly_to_string(p, var); }

unsigned bitsize(const PolyQ& p) {
    unsigned m = 1;
    for (int i = 0; i <= p.degree(); ++i) m = std::max(m, bitsize(p.coeff(i)));
    return m;
}

unsigned bitsize(const PolyG& p) {
    unsigned m = 1;
    for (int i = 0; i <= p.degree(); ++i) m = std::max(m, bitsize(p.coeff(i)));
    return m;
}

}  // namespace curvesim
