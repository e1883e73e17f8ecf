// Acceptance gate: seven criteria covering the verification registry, the
// digit-by-digit Newton solver, the sigma substitution layer, the certified
// uniformizers, the property suites and run-to-run determinism.  Prints one
// PASS/FAIL line per criterion and exits nonzero iff any criterion failed.

#include "core/registry.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace lpadic;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Rat rq(long a, long b) { return Rat(Int(a), Int(b)); }

std::string fmt1(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", x);
    return buf;
}

struct Gate {
    bool ok = true;
    long checks = 0;
    std::string first_fail;
    void require(bool cond, const std::string& what) {
        ++checks;
        if (!cond) {
            if (ok) first_fail = what;
            ok = false;
        }
    }
    bool finish(const std::string& summary, std::string& note) const {
        note = ok ? summary + " (" + std::to_string(checks) + " checks)"
                  : summary + "; FIRST FAILURE: " + first_fail;
        return ok;
    }
};

bool slack_nonneg(const WitnessLine& w) {
    return w.slack == "inf" || !(Rat::parse(w.slack) < Rat(0));
}

// ---------------------------------------------------------------------------
// 1. Every congruence-family identity passes at p in {3,5,7,11}, with the
//    harmonic-sum family showing nonnegative slack at every index k <= p-1,
//    in under 30s per prime.
// ---------------------------------------------------------------------------
bool criterion1(std::string& note) {
    Gate g;
    double worst = 0;
    for (long p : {3L, 5L, 7L, 11L}) {
        auto t0 = Clock::now();
        auto reports = verify_method(Method::Congruence, p);
        g.require(reports.size() == 10,
                  "congruence family count != 10 at p=" + std::to_string(p));
        bool saw_harmonic = false;
        for (const auto& r : reports) {
            g.require(r.status == Status::Pass,
                      r.id + " is " + status_str(r.status) + " at p=" + std::to_string(p));
            if (r.id != "thm-harmonic") continue;
            saw_harmonic = true;
            g.require((long)r.witness.size() == p - 1,
                      "harmonic witness count != p-1 at p=" + std::to_string(p));
            for (const auto& w : r.witness)
                g.require(w.ok && slack_nonneg(w),
                          "harmonic slack negative at p=" + std::to_string(p) + ", " + w.quantity);
        }
        g.require(saw_harmonic, "thm-harmonic missing at p=" + std::to_string(p));
        double el = secs_since(t0);
        if (el > worst) worst = el;
        g.require(el < 30.0, "p=" + std::to_string(p) + " run took " + fmt1(el) + "s >= 30s");
    }
    return g.finish("10 congruence families PASS at p in {3,5,7,11}, harmonic slack >= 0 "
                    "for all k, slowest prime " + fmt1(worst) + "s",
                    note);
}

// ---------------------------------------------------------------------------
// 2. At p in {3,5} the Newton run on the p^2-cyclotomic polynomial reproduces
//    the closed-form approximation ladder digit-for-digit through step p+3,
//    including the late exponents 1/(p-1) - 1/p^l, and the digit extracted at
//    slope 1/(p(p-1)) is certified to have multiplicative order 2(p-1) with a
//    Frobenius-fixed Teichmueller lift; under 60s total.
// ---------------------------------------------------------------------------
bool criterion2(std::string& note) {
    Gate g;
    auto t0 = Clock::now();
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        SigmaCtx sc(mn);
        Expansions ex(sc);
        const FqCtx& fq = mn.fq();
        const std::string sp = " at p=" + std::to_string(p);

        MNPoly P = phi_cyclotomic(mn, 2, Rat(4));
        long S = p + 3;
        NewtonResult res = newton_run(mn, P, rq(1, p - 1), S);
        g.require((long)res.steps.size() == S,
                  "expected " + std::to_string(S) + " digits" + sp);

        // each prefix equals the closed-form i-th approximation exactly
        for (long s = 1; s <= (long)res.steps.size(); ++s) {
            const MNElement& ra = res.steps[s - 1].root_after;
            MNElement zi = ex.zeta_p2_approx(s - 1, ra.trunc);
            g.require(ra.terms == zi.terms && ra.trunc == zi.trunc,
                      "prefix after step " + std::to_string(s) +
                          " differs from the closed form" + sp);
        }
        // slopes: the ladder k/(p(p-1)) for the first p digits, then the
        // shifted phases 1/(p-1) - 1/p^l
        for (const auto& st : res.steps) {
            if (st.iter < p)
                g.require(st.slope == rq(st.iter, p * (p - 1)),
                          "ladder exponent wrong at step " + std::to_string(st.iter) + sp);
            else {
                long l = st.iter - p + 2;
                g.require(st.slope == rq(1, p - 1) - Rat(Int(1), int_pow(p, l)),
                          "phase exponent wrong at l=" + std::to_string(l) + sp);
            }
        }
        // the digit at slope 1/(p(p-1)) generates the order-2(p-1) group
        g.require((long)res.steps.size() >= 2 &&
                      res.steps[1].slope == rq(1, p * (p - 1)),
                  "no step at slope 1/(p(p-1))" + sp);
        FqElem d = res.steps[1].digit;
        g.require(d == fq.zeta_2pm2(), "extracted digit is not the canonical choice" + sp);
        g.require(fq.order(d) == 2 * (p - 1), "digit order != 2(p-1)" + sp);
        FqElem acc = fq.one();
        long ord = 0;
        for (long k = 1; k <= 2 * (p - 1); ++k) {
            acc = fq.mul(acc, d);
            if (acc == fq.one()) {
                ord = k;
                break;
            }
        }
        g.require(ord == 2 * (p - 1), "brute-force digit order != 2(p-1)" + sp);
        g.require(fq.pow(d, p - 1) == fq.neg(fq.one()), "digit^{p-1} != -1" + sp);
        // its Teichmueller lift is fixed by the squared Frobenius
        const WittCtx& w = mn.witt(4);
        WittElem t = w.teich_lift(d);
        g.require(w.residue(t) == d && w.pow(t, Int(p) * Int(p)) == t,
                  "Teichmueller lift not Frobenius-square fixed" + sp);
    }
    double el = secs_since(t0);
    g.require(el < 60.0, "took " + fmt1(el) + "s >= 60s");
    return g.finish("Newton prefixes == closed-form ladder through step p+3 at p in {3,5}, "
                    "order-2(p-1) digit certified",
                    note);
}

// ---------------------------------------------------------------------------
// 3. Every sigma-calculus and exact Mal'cev-Neumann identity passes at
//    p in {3,5,7} with zero tolerance, under 5 minutes total.
// ---------------------------------------------------------------------------
bool criterion3(std::string& note) {
    Gate g;
    auto t0 = Clock::now();
    for (long p : {3L, 5L, 7L}) {
        for (Method m : {Method::SigmaSymbolic, Method::MNExact}) {
            auto reports = verify_method(m, p);
            g.require(reports.size() == (m == Method::SigmaSymbolic ? 13u : 6u),
                      method_str(m) + " id count wrong at p=" + std::to_string(p));
            for (const auto& r : reports) {
                g.require(r.status == Status::Pass,
                          r.id + " is " + status_str(r.status) + " at p=" + std::to_string(p));
                for (const auto& w : r.witness)
                    g.require(w.ok, r.id + " witness '" + w.quantity + "' failed at p=" +
                                        std::to_string(p));
            }
        }
    }
    double el = secs_since(t0);
    g.require(el < 300.0, "took " + fmt1(el) + "s >= 5min");
    return g.finish("all 13 sigma-calculus + 6 exact-expansion identities PASS at p in "
                    "{3,5,7} in " + fmt1(el) + "s",
                    note);
}

// ---------------------------------------------------------------------------
// 4. Substituting the K-term concrete tail reproduces the Newton root to
//    exactly r_eff = 1/(p^{n-2}(p-1)) - 1/p^{n+K} for p in {3,5}, n in {2,3},
//    K in {1,2,3}.
// ---------------------------------------------------------------------------
bool criterion4(std::string& note) {
    Gate g;
    for (long p : {3L, 5L}) {
        for (long n : {2L, 3L}) {
            for (long K : {1L, 2L, 3L}) {
                auto rep = residual_check(p, n, K);
                std::string tag = "(p,n,K)=(" + std::to_string(p) + "," + std::to_string(n) +
                                  "," + std::to_string(K) + ")";
                g.require(rep.status == Status::Pass,
                          tag + " is " + status_str(rep.status));
                Rat r_eff = Rat(Int(1), int_pow(p, n - 2) * Int(p - 1)) -
                            Rat(Int(1), int_pow(p, n + K));
                g.require(!rep.witness.empty() &&
                              rep.witness.front().required == report_num(r_eff),
                          tag + " claimed window != r_eff");
                bool saw_cmp = false;
                for (const auto& w : rep.witness)
                    if (w.quantity == "v(substituted expansion - algorithm root)") {
                        saw_cmp = true;
                        g.require(w.ok && w.required == report_num(r_eff),
                                  tag + " root comparison not at r_eff");
                    }
                g.require(saw_cmp, tag + " missing the root comparison line");
            }
        }
    }
    return g.finish("substituted expansions match Newton roots to exactly r_eff for "
                    "{3,5} x {2,3} x {1,2,3}",
                    note);
}

// ---------------------------------------------------------------------------
// 5. The level-m uniformizer has certified exact valuation 1/(p^m(p-1)) for
//    p in {3,5}, m in {2,3,4}.
// ---------------------------------------------------------------------------
bool criterion5(std::string& note) {
    Gate g;
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        SigmaCtx sc(mn);
        Expansions ex(sc);
        for (long m : {2L, 3L, 4L}) {
            std::string tag = "(p,m)=(" + std::to_string(p) + "," + std::to_string(m) + ")";
            auto u = ex.uniformizer(m);
            Rat want = Rat(Int(1), int_pow(p, m) * Int(p - 1));
            g.require(u.m == m && u.valuation == want, tag + " valuation != 1/(p^m(p-1))");
            SigmaValuation sv = sc.valuation(u.elem);
            g.require(sv.exact, tag + " valuation not certified exact");
            g.require(sv.bound == want, tag + " certified valuation mismatch");
            g.require(want < u.elem.trunc, tag + " valuation not below the truncation");
        }
    }
    return g.finish("uniformizer valuations exactly 1/(p^m(p-1)) for {3,5} x {2,3,4}, "
                    "certified exact",
                    note);
}

// ---------------------------------------------------------------------------
// 6. Property suites: ring axioms on random truncated expansions (>= 1000
//    triples per prime), exhaustive Teichmueller lift laws (p=3, s <= 4), the
//    sigma substitution oracle against direct arithmetic, the digitwise
//    Frobenius p-th-power rule on random supports (>= 200), and Newton-polygon
//    validity on random polynomials (>= 500).
// ---------------------------------------------------------------------------
bool criterion6(std::string& note) {
    Gate g;

    // (a) ring axioms
    long ring_trials = 0;
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        std::mt19937_64 eng(0xACCE55u + (unsigned long)p);
        auto rnd_exp = [&]() {
            long den = 1 + (long)(eng() % 6);
            long num = (long)(eng() % 25) - 6;
            return rq(num, den);
        };
        auto rnd_elem = [&]() {
            std::vector<RawTerm> raws;
            long nt = (long)(eng() % 4);
            Rat hi(0);
            for (long i = 0; i < nt; ++i) {
                Rat e = rnd_exp();
                if (hi < e) hi = e;
                FqElem d = mn.fq().element_at((long)(eng() % (unsigned long)(p * p)));
                raws.push_back({e, d, Rat(1)});
            }
            return mn.normalize(std::move(raws), hi + Rat(2));
        };
        auto eq2 = [&](const MNElement& x, const MNElement& y) {
            Rat r = x.trunc < y.trunc ? x.trunc : y.trunc;
            return mn.eq_upto(x, y, r);
        };
        for (long t = 0; t < 1000; ++t) {
            MNElement a = rnd_elem(), b = rnd_elem(), c = rnd_elem();
            g.require(eq2(mn.add(a, b), mn.add(b, a)), "add commutativity");
            g.require(eq2(mn.add(mn.add(a, b), c), mn.add(a, mn.add(b, c))),
                      "add associativity");
            g.require(eq2(mn.mul(a, b), mn.mul(b, a)), "mul commutativity");
            g.require(eq2(mn.mul(mn.mul(a, b), c), mn.mul(a, mn.mul(b, c))),
                      "mul associativity");
            g.require(eq2(mn.mul(a, mn.add(b, c)), mn.add(mn.mul(a, b), mn.mul(a, c))),
                      "distributivity");
            g.require(eq2(mn.sub(a, a), mn.zero(a.trunc)), "a - a != 0");
            ++ring_trials;
        }
    }

    // (b) exhaustive Teichmueller laws at p=3 up to precision 4
    {
        MNContext mn(3);
        const FqCtx& fq = mn.fq();
        for (long s = 1; s <= 4; ++s) {
            const WittCtx& w = mn.witt(s);
            for (long i = 0; i < 9; ++i) {
                FqElem x = fq.element_at(i);
                WittElem t = w.teich_lift(x);
                g.require(w.residue(t) == x, "teich residue at s=" + std::to_string(s));
                g.require(w.pow(t, Int(9)) == t, "teich fixed point at s=" + std::to_string(s));
                for (long j = 0; j < 9; ++j) {
                    FqElem y = fq.element_at(j);
                    g.require(w.mul(t, w.teich_lift(y)) == w.teich_lift(fq.mul(x, y)),
                              "teich multiplicativity at s=" + std::to_string(s));
                }
                auto ds = w.teich_digits(t);
                bool tail_zero = (long)ds.size() == s && ds[0] == x;
                for (size_t k = 1; k < ds.size(); ++k)
                    if (!fq.is_zero(ds[k])) tail_zero = false;
                g.require(tail_zero, "teich digit expansion not [x] at s=" + std::to_string(s));
            }
        }
    }

    // (c) sigma substitution vs direct evaluation with the concrete tail
    long subst_cases = 0;
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        SigmaCtx sc(mn);
        Expansions ex(sc);
        for (long n : {2L, 3L}) {
            for (long K : {2L, 3L, 4L}) {
                MNElement tail = sc.sigma_concrete(n, K);
                auto direct = [&](const SigmaElement& a) {
                    MNElement acc = a.coeffs[0];
                    MNElement tp = tail;
                    for (long j = 1; j < (long)a.coeffs.size(); ++j) {
                        if (j > 1) tp = mn.mul(tp, tail);
                        acc = mn.add(acc, mn.mul(a.coeffs[j], tp));
                    }
                    return acc;
                };
                auto cmp = [&](const SigmaElement& a, const std::string& name) {
                    MNElement via_subst = sc.subst(a, K);
                    MNElement via_mn = direct(a);
                    Rat r = via_subst.trunc < via_mn.trunc ? via_subst.trunc : via_mn.trunc;
                    g.require(mn.eq_upto(via_subst, via_mn, r),
                              name + " substitution mismatch at (p,n,K)=(" +
                                  std::to_string(p) + "," + std::to_string(n) + "," +
                                  std::to_string(K) + ")");
                    ++subst_cases;
                };
                cmp(sc.sigma(n, Rat(1)), "tail symbol");
                cmp(ex.A_beta(n, 0), "seed beta=0");
                cmp(ex.A_beta(n, 2), "seed beta=2");
                cmp(ex.zeta_pn(n), "level-n series");
                cmp(sc.mul(ex.A_beta(n, 1), ex.zeta_pn(n)), "seed * series product");
            }
        }
    }

    // (d) digitwise Frobenius rule A^p == sum [d^p] p^{px} mod p^{1+pv} on
    //     random supports inside [0, 1/p)
    long frob_trials = 0;
    for (long p : {3L, 5L}) {
        MNContext mn(p);
        const FqCtx& fq = mn.fq();
        std::mt19937_64 eng(0xF40Bu + (unsigned long)p);
        for (long t = 0; t < 150; ++t) {
            long nt = 1 + (long)(eng() % 4);
            std::vector<RawTerm> raws;
            for (long i = 0; i < nt; ++i) {
                long den = 2 + (long)(eng() % 35);
                long hi = (den - 1) / p; // largest num with num/den < 1/p
                long num = (long)(eng() % (unsigned long)(hi + 1));
                FqElem d = fq.element_at(1 + (long)(eng() % (unsigned long)(p * p - 1)));
                raws.push_back({rq(num, den), d, Rat(1)});
            }
            MNElement A = mn.normalize(raws, Rat(1));
            if (A.terms.empty()) continue;
            Rat v = A.terms.front().exp;
            Rat r = Rat(1) + Rat(p) * v;
            A = mn.normalize(raws, r);
            MNElement Ap = mn.pow(A, p);
            std::vector<RawTerm> fr;
            for (const auto& tm : A.terms)
                fr.push_back({tm.exp * Rat(p), fq.pow(tm.digit, p), Rat(1)});
            MNElement img = mn.normalize(fr, r);
            g.require(mn.congruent(Ap, img, r).ok,
                      "Frobenius digit rule failed at p=" + std::to_string(p) + ", trial " +
                          std::to_string(t));
            ++frob_trials;
        }
    }
    g.require(frob_trials >= 200, "fewer than 200 Frobenius-rule supports");

    // (e) Newton-polygon validity on random polynomials
    long hull_trials = 0;
    {
        MNContext mn3(3), mn5(5);
        std::mt19937_64 eng(0x8011Fu);
        for (long t = 0; t < 500; ++t) {
            MNContext& mn = (t % 2) ? mn5 : mn3;
            long p = mn.p();
            const Rat T(10);
            auto rnd_coeff = [&](bool force_nonempty) {
                for (;;) {
                    std::vector<RawTerm> raws;
                    long nt = (long)(eng() % 3);
                    if (force_nonempty && nt == 0) nt = 1;
                    for (long i = 0; i < nt; ++i) {
                        long den = 1 + (long)(eng() % 4);
                        long num = (long)(eng() % 14) - 4;
                        FqElem d =
                            mn.fq().element_at(1 + (long)(eng() % (unsigned long)(p * p - 1)));
                        raws.push_back({rq(num, den), d, Rat(1)});
                    }
                    MNElement e = mn.normalize(std::move(raws), T);
                    if (!force_nonempty || !e.terms.empty()) return e;
                }
            };
            long deg = 2 + (long)(eng() % 5);
            MNPoly P;
            for (long k = 0; k <= deg; ++k)
                P.coeffs.push_back(rnd_coeff(k == 0 || k == deg));
            NewtonPolygon hull = newton_polygon(P);
            g.require(hull.vertices.size() >= 2 && hull.vertices.front().i == 0 &&
                          hull.vertices.back().i == deg,
                      "hull endpoints wrong");
            for (size_t i = 0; i < hull.vertices.size(); ++i) {
                const auto& V = hull.vertices[i];
                bool real_point = V.i >= 0 && V.i <= deg && !P.coeffs[V.i].terms.empty() &&
                                  P.coeffs[V.i].terms.front().exp == V.v;
                g.require(real_point, "hull vertex is not a coefficient point");
                if (i > 0) g.require(hull.vertices[i - 1].i < V.i, "vertex abscissas not increasing");
            }
            for (size_t i = 2; i < hull.vertices.size(); ++i) {
                const auto &A = hull.vertices[i - 2], &B = hull.vertices[i - 1],
                           &C = hull.vertices[i];
                Rat s1 = (B.v - A.v) / Rat(B.i - A.i);
                Rat s2 = (C.v - B.v) / Rat(C.i - B.i);
                g.require(s1 < s2, "face slopes not strictly increasing");
            }
            for (size_t f = 1; f < hull.vertices.size(); ++f) {
                const auto &A = hull.vertices[f - 1], &B = hull.vertices[f];
                for (long i = 0; i <= deg; ++i) {
                    if (P.coeffs[i].terms.empty()) continue;
                    Rat v = P.coeffs[i].terms.front().exp;
                    Rat cross = Rat(B.i - A.i) * (v - A.v) - (B.v - A.v) * Rat(i - A.i);
                    g.require(!(cross < Rat(0)), "coefficient point below a hull face");
                }
            }
            const auto& Y = hull.vertices[hull.vertices.size() - 2];
            const auto& Z = hull.vertices.back();
            g.require(hull.s_max() == (Z.v - Y.v) / Rat(Z.i - Y.i), "s_max != last-face slope");
            g.require(hull.m_max() == Y.i, "m_max != last-face left end");
            ++hull_trials;
        }
    }

    return g.finish("ring axioms x" + std::to_string(ring_trials) +
                        ", Teichmueller exhaustive s<=4, substitution oracle x" +
                        std::to_string(subst_cases) + ", Frobenius rule x" +
                        std::to_string(frob_trials) + ", hulls x" + std::to_string(hull_trials),
                    note);
}

// ---------------------------------------------------------------------------
// 7. Two consecutive full registry runs serialize to byte-identical JSON.
// ---------------------------------------------------------------------------
bool criterion7(std::string& note) {
    Gate g;
    auto dump = [](const std::vector<VerificationReport>& rs) {
        std::string s;
        for (const auto& r : rs) {
            s += report_json(r).dump();
            s += '\n';
        }
        return s;
    };
    for (long p : {3L, 5L}) {
        auto first = verify_all(p);
        auto second = verify_all(p);
        g.require(first.size() == 31, "registry run size != 31 at p=" + std::to_string(p));
        for (const auto& r : first)
            g.require(r.status == Status::Pass,
                      r.id + " is " + status_str(r.status) + " at p=" + std::to_string(p));
        std::string a = dump(first), b = dump(second);
        g.require(!a.empty() && a == b,
                  "rerun JSON differs at p=" + std::to_string(p));
    }
    return g.finish("full registry runs (31 reports, all PASS) byte-identical on rerun at "
                    "p in {3,5}",
                    note);
}

} // namespace

int main() {
    struct Entry {
        int num;
        bool (*fn)(std::string&);
    };
    const Entry entries[] = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7},
    };
    int failures = 0;
    for (const auto& e : entries) {
        auto t0 = Clock::now();
        std::string note;
        bool ok;
        try {
            ok = e.fn(note);
        } catch (const std::exception& ex) {
            ok = false;
            note = std::string("unhandled exception: ") + ex.what();
        }
        if (!ok) ++failures;
        std::printf("%s criterion-%d: %s [%.1fs]\n", ok ? "PASS" : "FAIL", e.num, note.c_str(),
                    secs_since(t0));
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
