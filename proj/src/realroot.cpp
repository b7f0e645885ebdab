#include "curvesim/realroot.hpp"

#include <algorithm>

namespace curvesim {

namespace {

// scale by a positive rational to primitive integer form; positive scaling
// keeps all sign data intact (primitive_integer alone flips negative leads)
PolyQ primitive_scaled(const PolyQ& p) {
    if (p.is_zero_poly()) return p;
    PolyQ q = detail::from_integer(detail::primitive_integer(p));
    if (sign(p.lead()) != sign(q.lead())) q = -q;
    return q;
}

int sign_at_point(const PolyQ& p, const Rational& x) { return sign(eval(p, x)); }

}  // namespace

SturmChain::SturmChain(const PolyQ& squarefree) {
    PolyQ a = primitive_scaled(squarefree);
    if (a.is_zero_poly()) throw ZeroPolynomial();
    polys_.push_back(a);
    if (a.degree() == 0) return;
    PolyQ b = primitive_scaled(derivative(a));
    polys_.push_back(b);
    while (polys_.back().degree() > 0) {
        PolyQ r = rem(polys_[polys_.size() - 2], polys_.back());
        if (r.is_zero_poly()) break;
        polys_.push_back(primitive_scaled(-r));
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (const auto& p : polys_) signs.push_back(sign_at_point(p, x));
    return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (const auto& p : polys_) signs.push_back(sign(p.lead()));
    return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    signs.reserve(polys_.size());
    for (const auto& p : polys_)
        signs.push_back(p.degree() % 2 == 0 ? sign(p.lead()) : -sign(p.lead()));
    return count_variations(signs);
}

int SturmChain::count_half_open(const std::optional<Rational>& a,
                                const std::optional<Rational>& b) const {
    int va = a ? variations_at(*a) : variations_at_neg_inf();
    int vb = b ? variations_at(*b) : variations_at_pos_inf();
    return va - vb;
}

int count_real_roots(const PolyQ& p, const ParamInterval& iv) {
    if (p.is_zero_poly()) throw ZeroPolynomial();
    if (p.degree() == 0) return 0;
    PolyQ sf = squarefree_part(p);
    if (sf.degree() == 0) return 0;
    SturmChain chain(sf);
    int n = chain.count_half_open(iv.lo, iv.hi);
    if (iv.lo && sign_at_point(sf, *iv.lo) == 0) ++n;  // closed left end
    return n;
}

Rational root_bound(const PolyQ& p) {
    // Cauchy: 1 + max |a_i| / |a_n|
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = abs(p.coeff(i));
        if (a > m) m = a;
    }
    return Rational(1) + m / abs(p.lead());
}

AlgebraicReal AlgebraicReal::refine_step() const {
    if (is_rational()) return *this;
    Rational mid = (lo + hi) / 2;
    int sm = sign_at_point(poly, mid);
    // mid being a root makes it THE root: the interval isolates one root
    if (sm == 0) return {PolyQ::from_coeffs({-mid, Rational(1)}), mid, mid};
    int sl = sign_at_point(poly, lo);
    if (sl == 0) return {PolyQ::from_coeffs({-lo, Rational(1)}), lo, lo};
    if (sl * sm < 0) return {poly, lo, mid};
    return {poly, mid, hi};
}

AlgebraicReal AlgebraicReal::refine(const Rational& w) const {
    if (sign(w) <= 0) throw Error("refine: width must be positive");
    AlgebraicReal x = *this;
    while (!x.is_rational() && x.hi - x.lo > w) x = x.refine_step();
    return x;
}

double AlgebraicReal::to_double() const {
    AlgebraicReal x = refine(make_rational(1, 1l << 40));
    Rational mid = (x.lo + x.hi) / 2;
    return mid.get_d();
}

int AlgebraicReal::sign_at(const PolyQ& q) const {
    if (q.is_zero_poly()) return 0;
    if (is_rational()) return sign_at_point(q, rational_value());
    PolyQ r = reduce_mod(q, poly);
    if (r.is_zero_poly()) return 0;
    // poly need not be irreducible: the root can satisfy r without
    // poly | r, exactly when gcd(r, poly) still vanishes here
    PolyQ g = gcd(r, poly);
    if (g.degree() > 0) {
        if (count_real_roots(g, ParamInterval(lo, hi)) > 0) return 0;
    }
    // nonzero value: refine until the enclosure has definite sign
    AlgebraicReal x = *this;
    while (true) {
        RatInterval e = eval_interval(r, x.enclosure());
        if (e.sign() != 0) return e.sign();
        if (x.is_rational()) return sign_at_point(r, x.rational_value());
        x = x.refine_step();
    }
}

int AlgebraicReal::compare(const Rational& r) const {
    if (is_rational()) return sign(rational_value() - r);
    return sign_at(PolyQ::from_coeffs({-r, Rational(1)}));
}

int AlgebraicReal::compare(const AlgebraicReal& other) const {
    if (other.is_rational()) return compare(other.rational_value());
    if (is_rational()) return -other.compare(rational_value());
    AlgebraicReal a = *this, b = other;
    PolyQ g = gcd(a.poly, b.poly);
    bool maybe_equal = g.degree() > 0 && a.sign_at(g) == 0 && b.sign_at(g) == 0;
    while (true) {
        if (a.hi < b.lo) return -1;
        if (b.hi < a.lo) return 1;
        if (a.is_rational() && b.is_rational()) return sign(a.rational_value() - b.rational_value());
        if (maybe_equal) {
            // both are roots of g and each interval isolates one g-root;
            // if the hull holds a single g-root the two must coincide
            Rational hl = std::min(a.lo, b.lo), hh = std::max(a.hi, b.hi);
            if (count_real_roots(g, ParamInterval(hl, hh)) == 1) return 0;
        }
        a = a.refine_step();
        b = b.refine_step();
    }
}

PolyQ reduce_mod(const PolyQ& p, const PolyQ& m) {
    if (m.is_zero_poly()) throw ZeroDenominator();
    if (m.degree() == 0) return PolyQ();
    return rem(p, m);
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw Error("simplest_rational_in: empty interval");
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
    if (sgn(hi) < 0) return -simplest_rational_in(-hi, -lo);
    // 0 < lo <= hi: continued-fraction descent
    Integer n(lo.get_num()), d(lo.get_den());
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (lo == Rational(fl)) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    Rational frac = simplest_rational_in(Rational(1) / (hi - Rational(fl)),
                                         Rational(1) / (lo - Rational(fl)));
    return Rational(fl) + Rational(1) / frac;
}

namespace {

// Bounded-effort exact recognition of a rational root inside an isolating
// interval; exactness elsewhere never depends on this succeeding.
std::optional<Rational> try_rational_root(const PolyQ& sf, AlgebraicReal& x) {
    for (int round = 0; round < 6; ++round) {
        if (x.is_rational()) return x.rational_value();
        Rational cand = simplest_rational_in(x.lo, x.hi);
        if (sign_at_point(sf, cand) == 0) return cand;
        for (int i = 0; i < 16 && !x.is_rational(); ++i) x = x.refine_step();
    }
    return std::nullopt;
}

}  // namespace

std::vector<AlgebraicReal> isolate_real_roots(const PolyQ& p) {
    if (p.is_zero_poly()) throw ZeroPolynomial();
    PolyQ sf = squarefree_part(p);
    std::vector<AlgebraicReal> out;
    if (sf.degree() <= 0) return out;

    SturmChain chain(sf);
    Rational bound = root_bound(sf);

    struct Seg {
        Rational a, b;
        int count;
    };
    // half-open (a, b] bisection; -bound is strictly below every root
    std::vector<Seg> stack;
    int total = chain.count_half_open(-bound, bound);
    if (total > 0) stack.push_back({-bound, bound, total});
    std::vector<Seg> cells;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 1) {
            cells.push_back(s);
            continue;
        }
        Rational mid = (s.a + s.b) / 2;
        int left = chain.count_half_open(s.a, mid);
        int right = s.count - left;
        if (left > 0) stack.push_back({s.a, mid, left});
        if (right > 0) stack.push_back({mid, s.b, right});
    }

    std::vector<Rational> rational_roots;
    std::vector<AlgebraicReal> irrational;
    for (auto& cell : cells) {
        if (sign_at_point(sf, cell.b) == 0) {
            // the unique root in (a, b] is b itself
            rational_roots.push_back(cell.b);
            continue;
        }
        // make the closed interval isolating too: the left endpoint may be a
        // root owned by the neighboring cell
        bool solved = false;
        while (sign_at_point(sf, cell.a) == 0) {
            Rational mid = (cell.a + cell.b) / 2;
            int sm = sign_at_point(sf, mid);
            if (sm == 0) {
                rational_roots.push_back(mid);
                solved = true;
                break;
            }
            if (chain.count_half_open(mid, cell.b) == 1)
                cell.a = mid;
            else
                cell.b = mid;
        }
        if (solved) continue;
        AlgebraicReal x{sf, cell.a, cell.b};
        if (auto r = try_rational_root(sf, x)) {
            rational_roots.push_back(*r);
            continue;
        }
        irrational.push_back(x);
    }

    // recognized linear factors are divided out of the carried polynomial
    PolyQ reduced = sf;
    for (const Rational& r : rational_roots)
        reduced = exact_div(reduced, PolyQ::from_coeffs({-r, Rational(1)}));
    for (const Rational& r : rational_roots)
        out.push_back({PolyQ::from_coeffs({-r, Rational(1)}), r, r});
    for (auto& x : irrational) {
        x.poly = reduced;
        out.push_back(x);
    }
    std::sort(out.begin(), out.end(),
              [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.compare(b) < 0; });
    return out;
}

}  // namespace curvesim
