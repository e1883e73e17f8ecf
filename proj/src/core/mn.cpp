#include "mn.hpp"

#include "combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace lpadic {

long rat_to_long(const Rat& q) {
    if (!q.is_integer()) fail(Err::Internal, "rat_to_long: not an integer: " + q.str());
    if (q.num() > std::numeric_limits<long>::max() || q.num() < std::numeric_limits<long>::min())
        fail(Err::Internal, "rat_to_long: out of range");
    return (long)q.num();
}

MNContext::MNContext(long p, bool alt_modulus, long guard)
    : p_(p), guard_(guard), fq_(p, alt_modulus) {
    if (guard < 0) fail(Err::InvalidArg, "guard must be >= 0");
}

const WittCtx& MNContext::witt(long s) const {
    auto it = witt_cache_.find(s);
    if (it == witt_cache_.end())
        it = witt_cache_.emplace(s, std::make_unique<WittCtx>(fq_, s)).first;
    return *it->second;
}

MNElement MNContext::one(const Rat& trunc) const {
    return monomial(fq_.one(), Rat(0), trunc);
}

MNElement MNContext::monomial(const FqElem& d, const Rat& exp, const Rat& trunc) const {
    if (fq_.is_zero(d) || !(exp < trunc)) return zero(trunc);
    return {{{exp, d}}, trunc};
}

MNElement MNContext::from_unit(const Rat& u, const FqElem& z, const Rat& exp,
                               const Rat& trunc) const {
    if (u.is_zero() || fq_.is_zero(z)) return zero(trunc);
    long w = rat_to_long(vp_rational(u, p_).q);
    Rat unit = u / rat_pow(Rat(p_), w);
    return normalize({{exp + Rat(w), z, unit}}, trunc);
}

MNElement MNContext::normalize(std::vector<RawTerm> raws, const Rat& trunc) const {
    // group by coset of Q/Z
    std::map<Rat, std::vector<const RawTerm*>> cosets;
    for (const auto& r : raws) {
        if (fq_.is_zero(r.d) || r.u.is_zero() || !(r.exp < trunc)) continue;
        Rat frac = r.exp - Rat(rat_floor(r.exp));
        cosets[frac].push_back(&r);
    }
    std::vector<MNTerm> out;
    for (auto& [frac, items] : cosets) {
        Rat base = items.front()->exp;
        for (auto* r : items)
            if (r->exp < base) base = r->exp;
        long W = rat_to_long(Rat(rat_ceil(trunc - base)));
        if (W <= 0) continue;
        const WittCtx& wc = witt(W + guard_);
        std::vector<WittElem> acc(W, wc.zero());
        for (auto* r : items) {
            long off = rat_to_long(r->exp - base);
            if (off >= W) continue;
            WittElem w = wc.teich_lift(r->d);
            if (!(r->u == Rat(1))) w = wc.mul(w, wc.from_rational(r->u));
            acc[off] = wc.add(acc[off], w);
        }
        for (long off = 0; off < W; ++off) {
            if (wc.is_zero(acc[off])) continue;
            FqElem dg = wc.residue(acc[off]);
            WittElem rest = acc[off];
            if (!fq_.is_zero(dg)) {
                rest = wc.sub(rest, wc.teich_lift(dg));
                Rat e = base + Rat(off);
                if (e < trunc) out.push_back({e, dg});
            }
            // carry: (rest)/p joins the next slot; beyond the window it is O(p^trunc)
            if (off + 1 < W && !wc.is_zero(rest)) {
                WittElem carry{rest.u0 / p_, rest.u1 / p_};
                if (carry.u0 * p_ != rest.u0 || carry.u1 * p_ != rest.u1)
                    fail(Err::Internal, "normalize: carry not divisible by p");
                acc[off + 1] = wc.add(acc[off + 1], carry);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const MNTerm& a, const MNTerm& b) { return a.exp < b.exp; });
    return {std::move(out), trunc};
}

MNElement MNContext::add(const MNElement& a, const MNElement& b) const {
    Rat t = std::min(a.trunc, b.trunc);
    // merged term lists may collide at equal exponents; run the full carry sweep
    std::vector<RawTerm> raws;
    raws.reserve(a.terms.size() + b.terms.size());
    for (const auto& tm : a.terms) raws.push_back({tm.exp, tm.digit, Rat(1)});
    for (const auto& tm : b.terms) raws.push_back({tm.exp, tm.digit, Rat(1)});
    return normalize(std::move(raws), t);
}

MNElement MNContext::neg(const MNElement& a) const {
    // -tau(d) = tau(-d) for odd p, so negation is digitwise
    MNElement r = a;
    for (auto& tm : r.terms) tm.digit = fq_.neg(tm.digit);
    return r;
}

MNElement MNContext::sub(const MNElement& a, const MNElement& b) const {
    return add(a, neg(b));
}

Rat MNContext::valuation_bound(const MNElement& a) const {
    return a.terms.empty() ? a.trunc : a.terms.front().exp;
}

MNElement MNContext::mul(const MNElement& a, const MNElement& b) const {
    Rat t = std::min(a.trunc + valuation_bound(b), b.trunc + valuation_bound(a));
    return mul_window(a, b, t);
}

MNElement MNContext::mul_window(const MNElement& a, const MNElement& b,
                                const Rat& window) const {
    std::vector<RawTerm> raws;
    raws.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            Rat e = ta.exp + tb.exp;
            if (!(e < window)) continue;
            raws.push_back({e, fq_.mul(ta.digit, tb.digit), Rat(1)});
        }
    return normalize(std::move(raws), window);
}

MNElement MNContext::scale_mono(const MNElement& a, const FqElem& d, const Rat& x) const {
    if (fq_.is_zero(d)) fail(Err::Domain, "scale_mono: zero digit");
    MNElement r;
    r.trunc = a.trunc + x;
    r.terms.reserve(a.terms.size());
    for (const auto& tm : a.terms) r.terms.push_back({tm.exp + x, fq_.mul(tm.digit, d)});
    return r;
}

MNElement MNContext::scale_rational(const MNElement& a, const Rat& q) const {
    if (q.is_zero()) return zero(a.trunc); // annihilates the terms, not the O()
    long w = rat_to_long(vp_rational(q, p_).q);
    Rat unit = q / rat_pow(Rat(p_), w);
    Rat t = a.trunc + Rat(w);
    std::vector<RawTerm> raws;
    raws.reserve(a.terms.size());
    for (const auto& tm : a.terms) raws.push_back({tm.exp + Rat(w), tm.digit, unit});
    return normalize(std::move(raws), t);
}

ValQ MNContext::valuation(const MNElement& a) const {
    if (a.terms.empty()) return ValQ::infinity();
    return ValQ::of(a.terms.front().exp);
}

FqElem MNContext::coeff_at(const MNElement& a, const Rat& x) const {
    if (!(x < a.trunc))
        fail(Err::Precision, "coeff_at: exponent " + x.str() + " not below trunc " + a.trunc.str());
    for (const auto& tm : a.terms) {
        if (tm.exp == x) return tm.digit;
        if (x < tm.exp) break;
    }
    return fq_.zero();
}

MNElement MNContext::inv(const MNElement& a) const {
    if (a.terms.empty()) fail(Err::Domain, "inv: no leading term below trunc");
    Rat v = a.terms.front().exp;
    FqElem d0 = a.terms.front().digit;
    FqElem d0i = fq_.inv(d0);
    MNElement b = scale_mono(a, d0i, -v); // 1 + eps, v(eps) > 0
    Rat tb = b.trunc;
    MNElement eps = sub(b, one(tb));
    MNElement res = one(tb);
    if (!eps.terms.empty()) {
        Rat e = eps.terms.front().exp;
        if (!(Rat(0) < e)) fail(Err::Internal, "inv: eps not positive-valuation");
        MNElement meps = neg(eps);
        MNElement pw = one(tb);
        for (Rat ke = e; ke < tb; ke += e) {
            pw = mul(pw, meps);
            res = add(res, pw);
            if (pw.terms.empty()) break;
        }
    }
    return scale_mono(res, d0i, -v); // trunc = trunc_a - 2 v(a)
}

MNElement MNContext::pow(const MNElement& a, long k) const {
    if (k == 0) fail(Err::InvalidArg, "pow: exponent 0 not supported");
    if (k < 0) return pow(inv(a), -k);
    if (k == 1) return a;
    if (a.terms.empty()) return zero(a.trunc * Rat(k) /* k copies of O(p^t) at best */);
    Rat v = a.terms.front().exp;
    // ultrametric binomial bound on how input uncertainty propagates
    Rat T = Rat(k - 1) * v + a.trunc + Rat(vp_int(binomial(k, 1), p_));
    for (long j = 2; j <= k; ++j) {
        Rat cand = Rat(vp_int(binomial(k, j), p_)) + Rat(k - j) * v + Rat(j) * a.trunc;
        T = std::min(T, cand);
    }
    Rat vneg = std::min(v, Rat(0));
    auto window = [&](long m) { return T - Rat(k - m) * vneg; };
    // left-to-right binary exponentiation; intermediate windows widen the
    // truncation so that negative-valuation tails cannot clip future terms
    long bits[64], nb = 0;
    for (long kk = k; kk > 0; kk >>= 1) bits[nb++] = kk & 1;
    MNElement cur = a;
    long m = 1;
    for (long i = nb - 2; i >= 0; --i) {
        m *= 2;
        cur = mul_window(cur, cur, window(m));
        if (bits[i]) {
            m += 1;
            cur = mul_window(cur, a, window(m));
        }
    }
    cur.trunc = T;
    return cur;
}

MNElement MNContext::pth_root(const MNElement& a) const {
    for (const auto& tm : a.terms)
        if (tm.exp < Rat(0) || !(tm.exp < Rat(1)))
            fail(Err::Domain, "pth_root: support must lie in [0, 1)");
    // The digitwise image only approximates an actual p-th root up to
    // O(p^{1/p}): correction terms from the binomial cross products enter at
    // that height no matter how far a itself is known.  Hence the cap at 1.
    MNElement r;
    r.trunc = std::min(a.trunc, Rat(1)) / Rat(p_);
    r.terms.reserve(a.terms.size());
    for (const auto& tm : a.terms)
        r.terms.push_back({tm.exp / Rat(p_), fq_.inv_frobenius(tm.digit)});
    return r;
}

bool MNContext::eq_upto(const MNElement& a, const MNElement& b, const Rat& r) const {
    return congruent(a, b, r).ok;
}

CongruenceWitness MNContext::congruent(const MNElement& a, const MNElement& b,
                                       const Rat& r) const {
    if (a.trunc < r || b.trunc < r)
        fail(Err::Precision, "congruent: requested bound " + r.str() +
                                 " exceeds truncation " + std::min(a.trunc, b.trunc).str());
    MNElement d = sub(a, b);
    CongruenceWitness w;
    w.required = r;
    if (d.terms.empty()) {
        w.achieved = ValQ::of(d.trunc); // certified v >= trunc
        w.ok = true;
    } else {
        w.achieved = ValQ::of(d.terms.front().exp);
        w.ok = !(d.terms.front().exp < r);
    }
    return w;
}

std::string MNContext::to_string(const MNElement& a) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : a.terms) {
        if (!first) os << " + ";
        os << "[" << fq_.str(tm.digit) << "]p^(" << tm.exp.str() << ")";
        first = false;
    }
    if (first) os << "0";
    os << " + O(p^(" << a.trunc.str() << "))";
    return os.str();
}

} // namespace lpadic
