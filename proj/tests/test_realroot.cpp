#include <doctest.h>

#include <random>

#include "curvesim/realroot.hpp"

using namespace curvesim;

namespace {
PolyQ pq(std::initializer_list<long> asc) {
    std::vector<Rational> c;
    for (long v : asc) c.emplace_back(v);
    return PolyQ::from_coeffs(std::move(c));
}

// independent oracle: adaptive sign-change counting on dyadic grids inside
// the root bound, refined until two consecutive resolutions agree
int grid_count_roots(const PolyQ& p) {
    PolyQ sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    Rational m = root_bound(sf);
    int prev = -1;
    for (int k = 6; k <= 16; ++k) {
        long n = 1l << k;
        int cnt = 0;
        int last = 0;
        for (long i = 0; i <= n; ++i) {
            Rational t = -m + (m * 2) * Rational(i) / Rational(n);
            int s = sign(eval(sf, t));
            if (s == 0) {
                ++cnt;
                last = 0;
                continue;
            }
            if (last != 0 && s != last) ++cnt;
            last = s;
        }
        if (cnt == prev) return cnt;
        prev = cnt;
    }
    return prev;
}
}  // namespace

TEST_CASE("count_real_roots basics") {
    CHECK(count_real_roots(pq({1, 0, 1})) == 0);                       // t^2+1
    CHECK(count_real_roots(pq({-2, 0, 1})) == 2);                      // t^2-2
    CHECK(count_real_roots(pq({0, 6, -6, 1})) == 3);                   // b(b^2-6b+6)
    PolyQ p = pq({-1, 1}) * pq({-2, 1}) * pq({-3, 1});
    CHECK(count_real_roots(p, ParamInterval(make_rational(3, 2), make_rational(7, 2))) == 2);
    CHECK(count_real_roots(p, ParamInterval(Rational(1), Rational(3))) == 3);  // closed ends
    CHECK(count_real_roots(p, ParamInterval::point(Rational(2))) == 1);
    CHECK(count_real_roots(pq({-1, 1}) * pq({-1, 1})) == 1);  // multiplicity ignored
    CHECK_THROWS_AS(count_real_roots(PolyQ()), ZeroPolynomial);
}

TEST_CASE("isolate roots of b^2-6b+6") {
    auto roots = isolate_real_roots(pq({6, -6, 1}));
    REQUIRE(roots.size() == 2);
    // 3 -+ sqrt(3): approximately 1.268 and 4.732
    CHECK(roots[0].compare(Rational(1)) > 0);
    CHECK(roots[0].compare(Rational(2)) < 0);
    CHECK(roots[1].compare(Rational(4)) > 0);
    CHECK(roots[1].compare(Rational(5)) < 0);
    CHECK(roots[0].sign_at(pq({6, -6, 1})) == 0);
}

TEST_CASE("isolate recognizes exact rational roots") {
    auto roots = isolate_real_roots(pq({0, 6, -6, 1}));  // b(b^2-6b+6)
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].is_rational());
    CHECK(roots[0].rational_value() == Rational(0));
    CHECK_FALSE(roots[1].is_rational());
    CHECK_FALSE(roots[2].is_rational());
    // the carried polynomial for the irrational roots has the linear factor removed
    CHECK(roots[1].poly == pq({6, -6, 1}));

    auto r2 = isolate_real_roots(pq({-2, 0, 1}));  // t^2 - 2
    REQUIRE(r2.size() == 2);
    CHECK(r2[0].compare(Rational(-2)) > 0);
    CHECK(r2[0].compare(Rational(-1)) < 0);
    CHECK(r2[1].compare(Rational(1)) > 0);
    CHECK(r2[1].compare(Rational(2)) < 0);

    auto r3 = isolate_real_roots(pq({-6, 11, -6, 1}));  // (t-1)(t-2)(t-3)
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].rational_value() == Rational(1));
    CHECK(r3[1].rational_value() == Rational(2));
    CHECK(r3[2].rational_value() == Rational(3));

    auto r4 = isolate_real_roots(pq({1, -2}) * pq({-3, 7}));  // roots 1/2, 3/7
    REQUIRE(r4.size() == 2);
    CHECK(r4[0].rational_value() == make_rational(3, 7));
    CHECK(r4[1].rational_value() == make_rational(1, 2));
}

TEST_CASE("refine keeps the root and reaches the requested width") {
    auto roots = isolate_real_roots(pq({-2, 0, 1}));
    AlgebraicReal r = roots[1];  // sqrt(2)
    AlgebraicReal fine = r.refine(make_rational(1, 1000));
    CHECK(fine.hi - fine.lo <= make_rational(1, 1000));
    // longhand sqrt(2) = 1.41421356...
    CHECK(fine.lo <= make_rational(1414214, 1000000));
    CHECK(fine.hi >= make_rational(1414213, 1000000));

    AlgebraicReal ratroot{pq({-5, 1}), Rational(5), Rational(5)};
    CHECK(ratroot.refine(make_rational(1, 1000000)).lo == Rational(5));

    auto q = isolate_real_roots(pq({6, -6, 1}));
    AlgebraicReal big = q[1].refine(make_rational(1, 100));
    CHECK(big.hi - big.lo <= make_rational(1, 100));
    CHECK(big.lo <= make_rational(47321, 10000));
    CHECK(big.hi >= make_rational(47320, 10000));
}

TEST_CASE("sign_at") {
    auto roots = isolate_real_roots(pq({-2, 0, 1}));
    AlgebraicReal r = roots[1];  // sqrt(2) in [1, 2]
    CHECK(r.sign_at(pq({-2, 0, 1})) == 0);
    CHECK(r.sign_at(pq({0, 1})) == 1);
    CHECK(r.sign_at(pq({-2, 1})) == -1);  // sqrt(2) < 2
    auto q = isolate_real_roots(pq({6, -6, 1}));
    CHECK(q[1].sign_at(pq({-4, 1})) == 1);  // 3+sqrt(3) > 4
    // multiple of the defining polynomial vanishes
    CHECK(q[1].sign_at(pq({6, -6, 1}) * pq({17, 3})) == 0);
}

TEST_CASE("reduce_mod") {
    PolyQ m = pq({-2, 0, 1});
    CHECK(reduce_mod(m, m).is_zero_poly());
    CHECK(reduce_mod(pq({0, 0, 1}), m) == pq({2}));  // b^2 = 2
    CHECK(reduce_mod(pq({0, 0, 0, 1}), m) == pq({0, 2}));  // b^3 = 2b
    CHECK(reduce_mod(pq({5}), m) == pq({5}));
}

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_rational_in(make_rational(2, 7), make_rational(1, 3)) == make_rational(1, 3));
    CHECK(simplest_rational_in(make_rational(13, 9), make_rational(16, 11)) == make_rational(13, 9));
    CHECK(simplest_rational_in(Rational(-1), Rational(1)) == Rational(0));
    CHECK(simplest_rational_in(make_rational(5, 2), make_rational(7, 2)) == Rational(3));
    CHECK(simplest_rational_in(make_rational(-8, 5), make_rational(-3, 2)) == make_rational(-3, 2));
    CHECK(simplest_rational_in(Rational(4), Rational(4)) == Rational(4));
}

TEST_CASE("random squarefree polynomials agree with the grid oracle") {
    std::mt19937_64 rng(2024);
    int tested = 0;
    while (tested < 60) {
        int d = 1 + static_cast<int>(rng() % 8);
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i)
            c.emplace_back(static_cast<long>(rng() % 511) - 255);
        PolyQ p = PolyQ::from_coeffs(std::move(c));
        if (p.degree() < 1) continue;
        PolyQ sf = squarefree_part(p);
        if (sf.degree() < 1) continue;
        ++tested;
        int oracle = grid_count_roots(p);
        CHECK(count_real_roots(p) == oracle);
        auto roots = isolate_real_roots(p);
        CHECK(static_cast<int>(roots.size()) == oracle);
        // isolating intervals are disjoint with Sturm count exactly 1
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            CHECK(roots[i].compare(roots[i + 1]) < 0);
        for (const auto& r : roots) {
            CHECK(count_real_roots(r.poly, ParamInterval(r.lo, r.hi)) == 1);
            CHECK(r.sign_at(sf) == 0);
        }
    }
}

TEST_CASE("comparison of algebraic numbers") {
    auto a = isolate_real_roots(pq({-2, 0, 1}));   // +-sqrt(2)
    auto b = isolate_real_roots(pq({-8, 0, 0, 0, 1}));  // +-8^(1/4) = +-2^(3/4)... roots of t^4=8
    // sqrt(2) vs 8^(1/4): sqrt(2) = 1.414, 8^(1/4) = 1.682
    CHECK(a[1].compare(b[1]) < 0);
    // equality across different defining polynomials: sqrt(2) as root of
    // (t^2-2)(t^2-3) restricted
    auto c = isolate_real_roots(pq({-2, 0, 1}) * pq({-3, 0, 1}));
    REQUIRE(c.size() == 4);
    CHECK(a[1].compare(c[2]) == 0);  // both sqrt(2)
    CHECK(a[1].compare(c[3]) < 0);   // sqrt(2) < sqrt(3)
    CHECK(a[0] == c[1]);
}
