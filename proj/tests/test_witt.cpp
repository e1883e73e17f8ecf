#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/witt.hpp"

using namespace lpadic;

TEST_CASE("frozen Teichmueller lifts") {
    FqCtx f3(3);
    WittCtx w32(f3, 2);
    // tau(2) = -1 exactly at p=3
    CHECK(w32.teich_lift(f3.from_int(2)) == WittElem{8, 0});
    WittCtx w33(f3, 3);
    CHECK(w33.teich_lift(f3.from_int(2)) == WittElem{26, 0});

    FqCtx f5(5);
    WittCtx w52(f5, 2);
    CHECK(w52.teich_lift(f5.from_int(2)) == WittElem{7, 0});
    CHECK(w52.teich_lift(f5.from_int(4)) == WittElem{24, 0});
    CHECK(w52.teich_lift(f5.from_int(1)) == WittElem{1, 0});
    CHECK(w52.teich_lift(f5.zero()) == WittElem{0, 0});
}

TEST_CASE("Teichmueller lifts are fixed by the Frobenius power and lift the residue") {
    for (long p : {3L, 5L}) {
        FqCtx fq(p);
        WittCtx w(fq, 3);
        for (long i = 0; i < p * p; ++i) {
            FqElem d = fq.element_at(i);
            WittElem t = w.teich_lift(d);
            CHECK(w.residue(t) == d);
            CHECK(w.pow(t, Int(p) * p) == t);
        }
    }
}

TEST_CASE("Teichmueller multiplicativity, exhaustive at p=3") {
    FqCtx fq(3);
    WittCtx w(fq, 3);
    for (long i = 0; i < 9; ++i)
        for (long j = 0; j < 9; ++j) {
            FqElem a = fq.element_at(i), b = fq.element_at(j);
            CHECK(w.mul(w.teich_lift(a), w.teich_lift(b)) == w.teich_lift(fq.mul(a, b)));
        }
    // the lift of g squares to the lift of g^2 = -1
    WittElem tg = w.teich_lift({0, 1});
    CHECK(w.mul(tg, tg) == WittElem{26, 0});
}

TEST_CASE("digit decomposition round trips and reads integers correctly") {
    FqCtx fq(3);
    for (long s = 1; s <= 4; ++s) {
        WittCtx w(fq, s);
        for (long i = 0; i < 9; ++i) {
            FqElem d = fq.element_at(i);
            auto digits = w.teich_digits(w.teich_lift(d));
            REQUIRE((long)digits.size() == s);
            CHECK(digits[0] == d);
            for (long k = 1; k < s; ++k) CHECK(fq.is_zero(digits[k]));
        }
    }
    // 2 = [2] + [1] 3 + O(9)
    WittCtx w2(fq, 2);
    auto d2 = w2.teich_digits(w2.from_rational(Rat(2)));
    CHECK(d2 == std::vector<FqElem>{{2, 0}, {1, 0}});

    // -1/2 = 1 + 1*3 + 1*9 + ...: digits (1,1,1)
    WittCtx w3(fq, 3);
    auto dh = w3.teich_digits(w3.from_rational(Rat(Int(-1), Int(2))));
    CHECK(dh == std::vector<FqElem>{{1, 0}, {1, 0}, {1, 0}});

    FqCtx f5(5);
    WittCtx w52(f5, 2);
    auto d5 = w52.teich_digits(w52.from_rational(Rat(2)));
    CHECK(d5 == std::vector<FqElem>{{2, 0}, {4, 0}});
}

TEST_CASE("ring arithmetic and units") {
    FqCtx fq(3);
    WittCtx w(fq, 3);
    WittElem x{5, 7}, y{13, 2}, z{21, 11};
    CHECK(w.add(x, y) == w.add(y, x));
    CHECK(w.mul(x, y) == w.mul(y, x));
    CHECK(w.mul(w.mul(x, y), z) == w.mul(x, w.mul(y, z)));
    CHECK(w.mul(x, w.add(y, z)) == w.add(w.mul(x, y), w.mul(x, z)));
    CHECK(w.sub(x, x) == w.zero());
    CHECK(w.add(x, w.neg(x)) == w.zero());
    CHECK(w.mul(x, w.one()) == x);
    CHECK(w.pow(x, 4) == w.mul(w.mul(x, x), w.mul(x, x)));

    // units: nonzero residue
    for (long i = 1; i < 9; ++i) {
        WittElem u{i % 3, i / 3};
        if (fq.is_zero(w.residue(u))) continue;
        CHECK(w.mul(u, w.inv(u)) == w.one());
    }
}

TEST_CASE("rational embedding inverts denominators mod p^s") {
    FqCtx fq(3);
    WittCtx w(fq, 3);
    // 1/2 * 2 = 1
    CHECK(w.mul(w.from_rational(Rat(Int(1), Int(2))), w.from_rational(Rat(2))) == w.one());
    // 1/4 * 4 = 1 with both coordinates exercised via g
    WittElem q = w.from_rational(Rat(Int(1), Int(4)));
    CHECK(w.mul(q, w.from_rational(Rat(4))) == w.one());
    CHECK(w.from_rational(Rat(-1)) == WittElem{26, 0});
}
