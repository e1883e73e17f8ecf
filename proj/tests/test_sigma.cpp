#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "core/sigma.hpp"

using namespace lpadic;

namespace {

Rat rq(long n, long d) { return Rat(Int(n), Int(d)); }

bool mn_same(const MNElement& a, const MNElement& b) {
    return a.terms == b.terms && a.trunc == b.trunc;
}

} // namespace

TEST_CASE("concrete tail sums carry their first-omitted-term truncation") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    CHECK(sc.v_sigma(1) == rq(-1, 3));
    CHECK(sc.v_sigma(2) == rq(-1, 9));

    MNElement s22 = sc.sigma_concrete(2, 2);
    REQUIRE(s22.terms.size() == 2);
    CHECK(s22.terms[0] == MNTerm{rq(-1, 9), {1, 0}});
    CHECK(s22.terms[1] == MNTerm{rq(-1, 27), {1, 0}});
    CHECK(s22.trunc == rq(-1, 81)); // first omitted term sits at -1/p^{2+2}

    CHECK_THROWS_AS(sc.sigma_concrete(2, 0), EngineError);
}

TEST_CASE("the symbol substitutes to the concrete sum exactly") {
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        SigmaCtx sc(mn);
        for (long n = 2; n <= 3; ++n)
            for (long K = 1; K <= 3; ++K) {
                MNElement got = sc.subst(sc.sigma(n, Rat(2)), K);
                MNElement want = sc.sigma_concrete(n, K);
                CHECK(mn_same(got, want));
            }
    }
}

TEST_CASE("make lowers the declared truncation to the coefficient floor") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    // coefficient of sigma^2 truncated at 1/2 forces trunc <= 1/2 - 2/9
    std::vector<MNElement> cs = {mn.one(Rat(5)), mn.zero(Rat(5)),
                                 mn.monomial({1, 0}, Rat(0), rq(1, 2))};
    SigmaElement a = sc.make(2, Rat(5), std::move(cs));
    CHECK(a.trunc == rq(1, 2) - rq(2, 9));
    CHECK((long)a.coeffs.size() == 3);
    CHECK(a.level == 2);
}

TEST_CASE("polynomial arithmetic in the symbol") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    SigmaElement one = sc.from_mn(mn.one(Rat(3)), 2);
    SigmaElement s = sc.sigma(2, Rat(3));
    SigmaElement a = sc.add(one, s); // 1 + sigma
    SigmaElement sq = sc.mul(a, a);  // 1 + 2 sigma + sigma^2
    CHECK(sq.coeffs[0].terms == std::vector<MNTerm>{{Rat(0), {1, 0}}});
    // 2 = [2] + [1]3
    CHECK(sq.coeffs[1].terms[0] == MNTerm{Rat(0), {2, 0}});
    CHECK(sq.coeffs[2].terms == std::vector<MNTerm>{{Rat(0), {1, 0}}});
    SigmaElement diff = sc.sub(sq, sc.mul(a, a));
    for (const auto& c : diff.coeffs) CHECK(c.terms.empty());
    // scale by a monomial shifts every coefficient
    SigmaElement sm = sc.scale_mono(s, {0, 1}, rq(1, 2));
    CHECK(sm.coeffs[1].terms == std::vector<MNTerm>{{rq(1, 2), {0, 1}}});
}

TEST_CASE("degree cap restored by the power rule: sigma_2^3 at p=3") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    SigmaElement s = sc.sigma(2, Rat(2));
    SigmaElement cube = sc.mul(sc.mul(s, s), s);
    CHECK(cube.level == 2);
    // sigma_2^3 = 3^{-1/3} + sigma_2 + O(3^{2/3})
    SigmaElement rhs = sc.make(
        2, rq(2, 3),
        {mn.monomial({1, 0}, rq(-1, 3), Rat(1)), mn.one(Rat(1))});
    auto w = sc.congruent(cube, rhs, rq(2, 3));
    CHECK(w.ok);
    for (const auto& part : w.parts) CHECK(part.ok);
}

TEST_CASE("telescoping to higher level is lossless and substitution-compatible") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    SigmaElement x = sc.scale_mono(sc.sigma(2, Rat(2)), {0, 1}, rq(1, 6));
    SigmaElement sh = sc.level_shift(x);
    CHECK(sh.level == 3);
    // [g]p^{1/6} sigma_2 = [g]p^{1/6-1/9} + [g]p^{1/6} sigma_3
    CHECK(sh.coeffs[0].terms == std::vector<MNTerm>{{rq(1, 6) - rq(1, 9), {0, 1}}});
    CHECK(sh.coeffs[1].terms == std::vector<MNTerm>{{rq(1, 6), {0, 1}}});
    for (long K = 1; K <= 3; ++K) {
        MNElement a = sc.subst(x, K + 1);
        MNElement b = sc.subst(sh, K);
        CHECK(mn_same(a, b));
    }
    // to_level is iterated shifting; level 2 -> 2 is the identity
    SigmaElement same = sc.to_level(x, 2);
    CHECK(mn_same(same.coeffs[1], x.coeffs[1]));
    SigmaElement two = sc.to_level(x, 4);
    CHECK(two.level == 4);
    CHECK(mn_same(sc.to_level(sh, 4).coeffs[0], two.coeffs[0]));
}

TEST_CASE("root transport: digits p-th rooted, exponents divided, level bumped") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    SigmaElement a = sc.make(2, Rat(1),
                             {mn.monomial({0, 1}, rq(1, 2), Rat(2)), mn.one(Rat(2))});
    SigmaElement r = sc.root_map(a);
    CHECK(r.level == 3);
    // g^{1/3} = g^3 = -g = 2g
    CHECK(r.coeffs[0].terms == std::vector<MNTerm>{{rq(1, 6), {0, 2}}});
    CHECK(r.coeffs[1].terms == std::vector<MNTerm>{{Rat(0), {1, 0}}});
    CHECK(r.trunc == a.trunc / Rat(3));
}

TEST_CASE("valuation rule: min over degrees, exact iff unique minimizer") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    // v = min(v(c0), v(c1) - 1/9): unique minimizer at degree 1
    SigmaElement a = sc.make(2, Rat(1),
                             {mn.monomial({1, 0}, rq(1, 2), Rat(2)), mn.one(Rat(2))});
    SigmaValuation v = sc.valuation(a);
    CHECK(v.exact);
    CHECK(v.degree == 1);
    CHECK(v.bound == rq(-1, 9));
    // tie between degree 0 at -1/9 and degree 1 at 0 - 1/9: not exact
    SigmaElement t = sc.make(2, Rat(1),
                             {mn.monomial({1, 0}, rq(-1, 9), Rat(2)), mn.one(Rat(2))});
    SigmaValuation vt = sc.valuation(t);
    CHECK(!vt.exact);
    CHECK(vt.bound == rq(-1, 9));
}

TEST_CASE("componentwise congruence: per-degree requirements and level alignment") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    SigmaElement a = sc.make(2, Rat(2), {mn.one(Rat(3)), mn.one(Rat(3))});
    SigmaElement b = sc.make(
        2, Rat(2),
        {mn.one(Rat(3)), mn.add(mn.one(Rat(3)), mn.monomial({1, 0}, Rat(1), Rat(3)))});
    // difference sits at degree 1, v = 1; required there is r + 1/9
    auto w1 = sc.congruent(a, b, rq(8, 9));
    CHECK(w1.ok);
    auto w2 = sc.congruent(a, b, Rat(1));
    CHECK(!w2.ok);
    bool found = false;
    for (const auto& part : w2.parts)
        if (!part.ok) {
            found = true;
            CHECK(part.degree == 1);
            CHECK(part.required == Rat(1) + rq(1, 9));
            CHECK(part.achieved == ValQ::of(Rat(1)));
        }
    CHECK(found);
    // requesting exactly the element truncation is allowed
    auto w3 = sc.congruent(a, a, Rat(2));
    CHECK(w3.ok);
    CHECK_THROWS_AS(sc.congruent(a, a, rq(5, 2)), EngineError);
    // congruence across levels goes through the telescope
    SigmaElement a3 = sc.to_level(a, 3);
    auto w4 = sc.congruent(a, a3, rq(3, 2));
    CHECK(w4.ok);
}

TEST_CASE("substitution is a ring map on certified prefixes") {
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        SigmaCtx sc(mn);
        SigmaElement s = sc.sigma(2, Rat(2));
        SigmaElement a = sc.add(sc.from_mn(mn.one(Rat(2)), 2),
                                sc.scale_mono(s, sc.mn().fq().element_at(p), rq(1, 2)));
        SigmaElement b = sc.add(s, sc.from_mn(mn.monomial({2, 0}, rq(1, 3), Rat(2)), 2));
        for (long K = 2; K <= 3; ++K) {
            MNElement lhs = sc.subst(sc.mul(a, b), K);
            MNElement rhs = mn.mul(sc.subst(a, K), sc.subst(b, K));
            Rat t = std::min(lhs.trunc, rhs.trunc);
            CHECK(mn.congruent(lhs, rhs, t).ok);
            MNElement ls = sc.subst(sc.add(a, b), K);
            MNElement rs = mn.add(sc.subst(a, K), sc.subst(b, K));
            CHECK(mn.congruent(ls, rs, std::min(ls.trunc, rs.trunc)).ok);
        }
    }
}

TEST_CASE("inverse in the sigma layer") {
    MNContext mn(3);
    SigmaCtx sc(mn);
    // 1 + [g] p^{1/2} sigma_2: unit with positive-valuation sigma part
    SigmaElement u = sc.add(sc.from_mn(mn.one(Rat(2)), 2),
                            sc.scale_mono(sc.sigma(2, Rat(2)), {0, 1}, rq(1, 2)));
    SigmaElement iu = sc.inv(u);
    SigmaElement prod = sc.mul(u, iu);
    auto w = sc.congruent(prod, sc.from_mn(mn.one(prod.trunc), 2), prod.trunc);
    CHECK(w.ok);
    CHECK(mn_same(sc.pow(u, -1).coeffs[1], iu.coeffs[1]));
}

TEST_CASE("mn_restrict trims terms and truncation") {
    MNContext mn(3);
    MNElement a = mn.normalize({{Rat(0), {1, 0}, Rat(1)}, {Rat(1), {2, 0}, Rat(1)}}, Rat(2));
    MNElement r = mn_restrict(a, rq(1, 2));
    CHECK(r.trunc == rq(1, 2));
    CHECK(r.terms == std::vector<MNTerm>{{Rat(0), {1, 0}}});
}
