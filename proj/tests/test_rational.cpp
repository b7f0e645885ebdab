#include <doctest.h>

#include <random>

#include "curvesim/rational.hpp"

using namespace curvesim;

TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-6/8") == make_rational(-3, 4));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(parse_rational(" -0 ") == Rational(0));
    CHECK(to_string(make_rational(10, -4)) == "-5/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("2.5"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("decimal rendering") {
    CHECK(decimal_string(make_rational(1, 3), 5) == "0.33333");
    CHECK(decimal_string(make_rational(-1, 3), 5) == "-0.33333");
    CHECK(decimal_string(make_rational(2, 3), 3) == "0.667");
    CHECK(decimal_string(Rational(14), 2) == "14.00");
    CHECK(decimal_string(make_rational(1, 2), 0) == "1");  // ties away from zero
}

TEST_CASE("bitsize convention") {
    // tau = ceil(log2 k) + 1
    CHECK(bitsize(Integer(0)) == 1);
    CHECK(bitsize(Integer(1)) == 1);
    CHECK(bitsize(Integer(2)) == 2);
    CHECK(bitsize(Integer(3)) == 3);
    CHECK(bitsize(Integer(4)) == 3);
    CHECK(bitsize(Integer(-8)) == 4);
    CHECK(bitsize(Integer(255)) == 9);
    CHECK(bitsize(Integer(256)) == 9);
}

TEST_CASE("gaussian rational field ops") {
    GaussianRational i = GaussianRational::i_unit();
    CHECK(i * i == GaussianRational(-1));
    GaussianRational z(make_rational(1, 2), make_rational(-3, 4));
    CHECK(z * z.conj() == GaussianRational(z.norm()));
    CHECK((z / z) == GaussianRational(1));
    CHECK_THROWS_AS(z / GaussianRational(0), ZeroDenominator);
    CHECK(to_string(GaussianRational(Rational(1), Rational(2))) == "1+2*i");
    CHECK(to_string(GaussianRational(Rational(0), Rational(-1))) == "-i");
}

TEST_CASE("field axioms hold exactly on random triples") {
    std::mt19937_64 rng(42);
    auto rnd = [&]() {
        return make_rational(static_cast<long>(rng() % 41) - 20,
                             static_cast<long>(rng() % 19) + 1);
    };
    for (int k = 0; k < 200; ++k) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!is_zero(a)) CHECK(a * (Rational(1) / a) == Rational(1));

        GaussianRational x(rnd(), rnd()), y(rnd(), rnd()), w(rnd(), rnd());
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        if (!is_zero(x)) CHECK(x / x == GaussianRational(1));
        CHECK(x.norm() == (x * x.conj()).re);
        CHECK(is_zero((x * x.conj()).im));
    }
}
