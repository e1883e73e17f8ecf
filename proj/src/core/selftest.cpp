#include "selftest.hpp"

#include "combinatorics.hpp"
#include "expansions.hpp"
#include "newton.hpp"

#include <random>
#include <sstream>

namespace lpadic {

namespace {

struct Suite {
    std::ostringstream log;
    bool ok_all = true;
    void line(const std::string& name, bool ok, long cases) {
        log << (ok ? "ok   " : "FAIL ") << name << " (" << cases << " cases)\n";
        ok_all = ok_all && ok;
    }
};

Rat rnd_exp(std::mt19937_64& rng) {
    long den = 1 + (long)(rng() % 12);
    long num = (long)(rng() % 31) - 6;
    return Rat(Int(num), Int(den));
}

MNElement rnd_elem(const MNContext& mn, std::mt19937_64& rng) {
    Rat trunc = rnd_exp(rng) + Rat(2);
    long nt = (long)(rng() % 4);
    MNElement a = mn.zero(trunc);
    for (long i = 0; i < nt; ++i) {
        long idx = 1 + (long)(rng() % (mn.p() * mn.p() - 1));
        a = mn.add(a, mn.monomial(mn.fq().element_at(idx), rnd_exp(rng), trunc));
    }
    return a;
}

bool eq_common(const MNContext& mn, const MNElement& x, const MNElement& y) {
    Rat r = x.trunc < y.trunc ? x.trunc : y.trunc;
    return mn.eq_upto(x, y, r);
}

void combinatorics_suite(Suite& s) {
    long cases = 0;
    bool ok = true;
    // two independent routes to the restricted Stirling numbers
    for (long n = 0; n <= 10 && ok; ++n)
        for (long k = 0; k <= n; ++k)
            for (long r = 1; r <= n + 1; ++r) {
                ++cases;
                if (stirling2_restricted(n, k, r) != stirling2_restricted_rec(n, k, r)) ok = false;
            }
    s.line("restricted Stirling via EGF == via recurrence", ok, cases);

    // complete Bell polynomial at all-ones == row sums of Stirling numbers
    ok = true;
    std::vector<Rat> ones(10, Rat(1));
    auto bells = bell_complete_seq(ones);
    for (long n = 1; n <= 10; ++n) {
        Rat row(0);
        for (long k = 1; k <= n; ++k) row = row + Rat(stirling2(n, k));
        if (bells[n - 1] != row) ok = false;
    }
    s.line("Bell numbers == Stirling row sums", ok, 10);

    // inversion roundtrip, both methods
    std::mt19937_64 rng(0xB311);
    ok = true;
    cases = 0;
    for (long it = 0; it < 20; ++it) {
        std::vector<Rat> ys(6);
        for (auto& y : ys) y = Rat(Int((long)(rng() % 11) - 5), Int(1 + (long)(rng() % 4)));
        if (ys[0].is_zero()) ys[0] = Rat(1);
        auto xr = bell_inverse(ys, InverseMethod::Recurrence);
        auto xt = bell_inverse(ys, InverseMethod::Riordan);
        auto back = bell_complete_seq(xr);
        ++cases;
        if (xr != xt || back != ys) ok = false;
    }
    s.line("partition-transform inversion roundtrip", ok, cases);

    ok = true;
    for (long k = 1; k <= 12; ++k) {
        Rat h(0);
        for (long i = 1; i <= k; ++i) h = h + Rat(Int(1), Int(i));
        if (harmonic(k) != h) ok = false;
    }
    s.line("harmonic numbers", ok, 12);
}

void gfq_suite(Suite& s) {
    for (long p : {3L, 5L}) {
        FqCtx fq(p);
        bool ok = true;
        long q = p * p;
        for (long i = 0; i < q; ++i) {
            FqElem x = fq.element_at(i);
            if (fq.index_of(x) != i) ok = false;
            if (!(fq.inv_frobenius(fq.frobenius(x)) == x)) ok = false;
            if (i > 0 && !(fq.mul(x, fq.inv(x)) == fq.one())) ok = false;
        }
        if (fq.order(fq.zeta_2pm2()) != 2 * (p - 1)) ok = false;
        s.line("F_{p^2} structure, p=" + std::to_string(p), ok, q);
    }
}

void witt_suite(Suite& s) {
    FqCtx fq(3);
    long cases = 0;
    bool ok = true;
    for (long sprec = 1; sprec <= 3; ++sprec) {
        WittCtx w(fq, sprec);
        for (long i = 0; i < 9; ++i) {
            FqElem d = fq.element_at(i);
            auto digs = w.teich_digits(w.teich_lift(d));
            ++cases;
            if (!(digs[0] == d)) ok = false;
            for (long j = 1; j < sprec; ++j)
                if (!fq.is_zero(digs[j])) ok = false;
            for (long i2 = 0; i2 < 9; ++i2) {
                FqElem d2 = fq.element_at(i2);
                ++cases;
                if (!(w.mul(w.teich_lift(d), w.teich_lift(d2)) == w.teich_lift(fq.mul(d, d2))))
                    ok = false;
            }
        }
    }
    s.line("Teichmueller lifts: digits and multiplicativity, p=3, s<=3", ok, cases);
}

void mn_suite(Suite& s) {
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        std::mt19937_64 rng(0xA11CE + p);
        bool ok = true;
        long cases = 200;
        for (long it = 0; it < cases && ok; ++it) {
            MNElement a = rnd_elem(mn, rng), b = rnd_elem(mn, rng), c = rnd_elem(mn, rng);
            if (!eq_common(mn, mn.add(a, b), mn.add(b, a))) ok = false;
            if (!eq_common(mn, mn.add(mn.add(a, b), c), mn.add(a, mn.add(b, c)))) ok = false;
            if (!eq_common(mn, mn.mul(a, b), mn.mul(b, a))) ok = false;
            if (!eq_common(mn, mn.mul(mn.mul(a, b), c), mn.mul(a, mn.mul(b, c)))) ok = false;
            if (!eq_common(mn, mn.mul(a, mn.add(b, c)), mn.add(mn.mul(a, b), mn.mul(a, c))))
                ok = false;
            if (!eq_common(mn, mn.sub(a, a), mn.zero(a.trunc))) ok = false;
            if (!eq_common(mn, mn.mul(a, mn.one(Rat(20))), a)) ok = false;
        }
        s.line("MN ring axioms, p=" + std::to_string(p), ok, cases);
    }
}

void sigma_suite(Suite& s) {
    bool ok = true;
    long cases = 0;
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        SigmaCtx sc(mn);
        for (long n = 2; n <= 3; ++n)
            for (long K = 2; K <= 3; ++K) {
                ++cases;
                MNElement got = sc.subst(sc.sigma(n, Rat(2)), K);
                MNElement want = sc.sigma_concrete(n, K);
                if (!(got.terms == want.terms) || got.trunc != want.trunc) ok = false;
            }
    }
    s.line("sigma symbol substitution == concrete tail", ok, cases);
}

void hull_suite(Suite& s) {
    MNContext mn(3);
    std::mt19937_64 rng(0x8011);
    bool ok = true;
    long cases = 100;
    for (long it = 0; it < cases && ok; ++it) {
        long deg = 2 + (long)(rng() % 5);
        MNPoly P;
        for (long i = 0; i <= deg; ++i) {
            long idx = 1 + (long)(rng() % 8);
            long num = (long)(rng() % 21) - 4;
            long den = 1 + (long)(rng() % 6);
            P.coeffs.push_back(
                mn.monomial(mn.fq().element_at(idx), Rat(Int(num), Int(den)), Rat(10)));
        }
        NewtonPolygon hull = newton_polygon(P);
        // vertices must march right, every coefficient point must sit on or
        // above every face, and faces must steepen left to right
        if (hull.vertices.size() < 2) { ok = false; break; }
        for (size_t k = 0; k + 1 < hull.vertices.size(); ++k) {
            const auto& A = hull.vertices[k];
            const auto& B = hull.vertices[k + 1];
            if (B.i <= A.i) ok = false;
            if (k + 2 < hull.vertices.size()) {
                const auto& C = hull.vertices[k + 2];
                Rat s1 = (B.v - A.v) / Rat(B.i - A.i);
                Rat s2 = (C.v - B.v) / Rat(C.i - B.i);
                if (!(s1 < s2)) ok = false;
            }
            for (long i = 0; i <= deg; ++i) {
                if (i < A.i || i > B.i) continue;
                Rat online = A.v + (B.v - A.v) * Rat(i - A.i) / Rat(B.i - A.i);
                if (mn.valuation(P.coeffs[i]).q < online) ok = false;
            }
        }
    }
    s.line("Newton polygon lower-hull validity", ok, cases);
}

} // namespace

bool run_selftest(std::string& log) {
    Suite s;
    combinatorics_suite(s);
    gfq_suite(s);
    witt_suite(s);
    mn_suite(s);
    sigma_suite(s);
    hull_suite(s);
    log += s.log.str();
    return s.ok_all;
}

} // namespace lpadic
