#pragma once

#include <memory>
#include <vector>

#include "curvesim/interval.hpp"
#include "curvesim/poly.hpp"

namespace curvesim {

// Sturm chain of a squarefree polynomial: p, p', then negated remainders.
// Entries are scaled to primitive integer form (a positive rational factor
// does not change the sign variation counts).
class SturmChain {
  public:
    explicit SturmChain(const PolyQ& squarefree);

    const PolyQ& first() const { return polys_.front(); }
    const std::vector<PolyQ>& polys() const { return polys_; }

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // distinct roots of the squarefree polynomial in (a, b], where either
    // end may be missing (unbounded)
    int count_half_open(const std::optional<Rational>& a, const std::optional<Rational>& b) const;

  private:
    std::vector<PolyQ> polys_;
};

// Exact number of distinct real roots of p in the closed interval iv
// (multiplicities ignored; the squarefree part is taken internally).
int count_real_roots(const PolyQ& p, const ParamInterval& iv = ParamInterval::everything());

// Real root of a squarefree rational polynomial pinned by an isolating
// interval.  Rational roots are stored exactly: poly = t - r and a
// degenerate interval [r, r].  The defining polynomial need not be
// irreducible; operations that would be ambiguous refine it by gcd
// splitting (see algebraic.hpp).
struct AlgebraicReal {
    PolyQ poly;      // squarefree, exactly one real root in [lo, hi]
    Rational lo, hi;

    bool is_rational() const { return lo == hi; }
    Rational rational_value() const { return lo; }

    // Interval of width <= w still containing the root (new value).
    AlgebraicReal refine(const Rational& w) const;
    // One bisection step.
    AlgebraicReal refine_step() const;

    RatInterval enclosure() const { return {lo, hi}; }
    double to_double() const;

    // exact sign of q at this root
    int sign_at(const PolyQ& q) const;

    // exact comparisons
    int compare(const AlgebraicReal& other) const;
    int compare(const Rational& r) const;
    bool operator==(const AlgebraicReal& other) const { return compare(other) == 0; }
    bool operator<(const AlgebraicReal& other) const { return compare(other) < 0; }
};

// All real roots of p (p != 0), in increasing order, with pairwise disjoint
// isolating intervals.  Rational roots are recognized where the bounded
// search finds them and returned exactly; every root's defining polynomial
// divides the squarefree part of p.
std::vector<AlgebraicReal> isolate_real_roots(const PolyQ& p);

// Cauchy bound: all real roots lie in [-M, M].
Rational root_bound(const PolyQ& p);

// Canonical representative of p modulo m (monic remainder, degree < deg m).
PolyQ reduce_mod(const PolyQ& p, const PolyQ& m);

// The simplest rational (smallest denominator, then smallest numerator) in
// the closed interval [lo, hi]; Stern-Brocot descent.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace curvesim
