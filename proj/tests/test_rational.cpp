#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/rational.hpp"

using namespace lpadic;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
    CHECK(Rat(Int(1), Int(-2)) == Rat(Int(-1), Int(2)));
    CHECK(Rat(Int(-6), Int(-4)) == Rat(Int(3), Int(2)));
    CHECK(Rat(Int(0), Int(-7)).str() == "0/1");
    CHECK(Rat(5).is_integer());
    CHECK(Rat(Int(7), Int(3)).sign() == 1);
    CHECK(Rat(Int(-7), Int(3)).sign() == -1);
    CHECK(Rat().sign() == 0);
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
}

TEST_CASE("field arithmetic on exact fractions") {
    Rat a(Int(1), Int(6)), b(Int(1), Int(10));
    CHECK(a + b == Rat(Int(4), Int(15)));
    CHECK(a - b == Rat(Int(1), Int(15)));
    CHECK(a * b == Rat(Int(1), Int(60)));
    CHECK(a / b == Rat(Int(5), Int(3)));
    CHECK(-a == Rat(Int(-1), Int(6)));
    CHECK_THROWS_AS(a / Rat(0), std::domain_error);

    // arbitrary precision: 50! / 49! = 50 exactly
    Rat big(1);
    for (long i = 1; i <= 50; ++i) big *= Rat(i);
    Rat big2(1);
    for (long i = 1; i <= 49; ++i) big2 *= Rat(i);
    CHECK(big / big2 == Rat(50));
}

TEST_CASE("ordering by cross multiplication") {
    CHECK(Rat(Int(1), Int(3)) < Rat(Int(1), Int(2)));
    CHECK(Rat(Int(-1), Int(2)) < Rat(Int(-1), Int(3)));
    CHECK(Rat(Int(7), Int(18)) < Rat(Int(25), Int(54)));
    CHECK(Rat(Int(2), Int(4)) <= Rat(Int(1), Int(2)));
    CHECK(Rat(1) > Rat(Int(161), Int(162)));
}

TEST_CASE("parse and serialize round trip") {
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("-3/4") == Rat(Int(-3), Int(4)));
    CHECK(Rat::parse("6/4") == Rat(Int(3), Int(2)));
    CHECK(Rat::parse("0") == Rat());
    CHECK(Rat::parse(Rat(Int(25), Int(54)).str()) == Rat(Int(25), Int(54)));
    CHECK(Rat(Int(1), Int(2)).str() == "1/2");
}

TEST_CASE("report formatting: integers bare, fractions as num/den") {
    CHECK(report_num(Rat(2)) == "2");
    CHECK(report_num(Rat(-1)) == "-1");
    CHECK(report_num(Rat(0)) == "0");
    CHECK(report_num(Rat(Int(25), Int(54))) == "25/54");
    CHECK(report_num(ValQ::infinity()) == "inf");
    CHECK(report_num(ValQ::of(Rat(Int(1), Int(18)))) == "1/18");
}

TEST_CASE("rat_pow exact including negative exponents") {
    CHECK(rat_pow(Rat(Int(2), Int(3)), 3) == Rat(Int(8), Int(27)));
    CHECK(rat_pow(Rat(Int(2), Int(3)), 0) == Rat(1));
    CHECK(rat_pow(Rat(Int(2), Int(3)), -2) == Rat(Int(9), Int(4)));
    CHECK(rat_pow(Rat(10), 20) == Rat(Int("100000000000000000000")));
}

TEST_CASE("floor and ceil toward the correct infinities") {
    CHECK(rat_floor(Rat(Int(7), Int(2))) == 3);
    CHECK(rat_floor(Rat(Int(-7), Int(2))) == -4);
    CHECK(rat_floor(Rat(3)) == 3);
    CHECK(rat_ceil(Rat(Int(7), Int(2))) == 4);
    CHECK(rat_ceil(Rat(Int(-7), Int(2))) == -3);
    CHECK(rat_ceil(Rat(-3)) == -3);
}

TEST_CASE("p-adic valuation of integers and rationals") {
    CHECK(vp_int(Int(9), 3) == 2);
    CHECK(vp_int(Int(10), 3) == 0);
    CHECK(vp_int(Int(-27), 3) == 3);
    CHECK(vp_rational(Rat(Int(9), Int(2)), 3) == ValQ::of(Rat(2)));
    CHECK(vp_rational(Rat(Int(2), Int(9)), 3) == ValQ::of(Rat(-2)));
    CHECK(vp_rational(Rat(0), 3).inf);
}

TEST_CASE("extended valuations order with infinity on top") {
    ValQ inf = ValQ::infinity();
    ValQ half = ValQ::of(Rat(Int(1), Int(2)));
    CHECK(half < inf);
    CHECK(!(inf < half));
    CHECK(!(inf < inf));
    CHECK(inf >= half);
    CHECK(inf.str() == "inf");
    CHECK(half.str() == "1/2");
}
