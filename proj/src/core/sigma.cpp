#include "sigma.hpp"

#include "combinatorics.hpp"

#include <algorithm>
#include <sstream>

namespace lpadic {

namespace {
const Rat BIG(Int(1000000000)); // effectively-unbounded truncation placeholder
} // namespace

MNElement mn_restrict(const MNElement& a, const Rat& t) {
    if (!(t < a.trunc)) return a;
    MNElement r;
    r.trunc = t;
    for (const auto& tm : a.terms)
        if (tm.exp < t) r.terms.push_back(tm);
    return r;
}

Rat SigmaCtx::v_sigma(long level) const {
    Int d = 1;
    for (long i = 0; i < level; ++i) d *= p();
    return Rat(Int(-1), d);
}

SigmaElement SigmaCtx::make(long level, const Rat& declared,
                            std::vector<MNElement> coeffs) const {
    long P = p();
    if ((long)coeffs.size() > P) fail(Err::Internal, "SigmaElement: degree >= p");
    Rat vs = v_sigma(level);
    Rat t = declared;
    for (long j = 0; j < (long)coeffs.size(); ++j)
        t = std::min(t, coeffs[j].trunc + Rat(j) * vs);
    // pad absent degrees with exact zeros; their truncation may sit at the
    // invariant floor since the coefficient is structurally zero
    coeffs.resize(P);
    for (long j = 0; j < P; ++j) {
        Rat floor_j = t - Rat(j) * vs;
        if (coeffs[j].terms.empty() && coeffs[j].trunc < floor_j)
            coeffs[j].trunc = floor_j;
    }
    return {level, t, std::move(coeffs)};
}

SigmaElement SigmaCtx::from_mn(const MNElement& m, long level) const {
    return make(level, m.trunc, {m});
}

SigmaElement SigmaCtx::sigma(long level, const Rat& trunc) const {
    std::vector<MNElement> cs(2);
    cs[0] = mn_.zero(trunc + v_sigma(level) * Rat(-1) /* = trunc + 1/p^n */);
    cs[1] = mn_.one(cs[0].trunc);
    return make(level, trunc, std::move(cs));
}

SigmaElement SigmaCtx::zero(long level, const Rat& trunc) const {
    return make(level, trunc, {});
}

MNElement SigmaCtx::sigma_concrete(long level, long K) const {
    if (K < 1) fail(Err::InvalidArg, "sigma_concrete: need K >= 1");
    Int q = 1;
    for (long i = 0; i < level; ++i) q *= p();
    std::vector<MNTerm> terms;
    for (long k = 0; k < K; ++k) {
        terms.push_back({Rat(Int(-1), q), mn_.fq().one()}); // exponents ascend with k
        q *= p();
    }
    // q is now p^{level+K}; the first omitted term bounds the truncation
    return {std::move(terms), Rat(Int(-1), q)};
}

namespace {
long align_level(const SigmaCtx& sc, SigmaElement& a, SigmaElement& b) {
    long L = std::max(a.level, b.level);
    a = sc.to_level(a, L);
    b = sc.to_level(b, L);
    return L;
}
} // namespace

SigmaElement SigmaCtx::add(const SigmaElement& a0, const SigmaElement& b0) const {
    SigmaElement a = a0, b = b0;
    long L = align_level(*this, a, b);
    std::vector<MNElement> cs(p());
    for (long j = 0; j < p(); ++j) cs[j] = mn_.add(a.coeffs[j], b.coeffs[j]);
    return make(L, std::min(a.trunc, b.trunc), std::move(cs));
}

SigmaElement SigmaCtx::neg(const SigmaElement& a) const {
    SigmaElement r = a;
    for (auto& c : r.coeffs) c = mn_.neg(c);
    return r;
}

SigmaElement SigmaCtx::sub(const SigmaElement& a, const SigmaElement& b) const {
    return add(a, neg(b));
}

Rat SigmaCtx::val_bound(const SigmaElement& a) const {
    Rat vs = v_sigma(a.level);
    Rat best = a.coeffs[0].trunc; // fallback; refined below
    bool first = true;
    for (long j = 0; j < (long)a.coeffs.size(); ++j) {
        Rat vj = mn_.valuation_bound(a.coeffs[j]) + Rat(j) * vs;
        if (first || vj < best) best = vj;
        first = false;
    }
    return best;
}

SigmaElement SigmaCtx::mul_impl(const SigmaElement& a0, const SigmaElement& b0,
                                const Rat* window, Rat& fold) const {
    SigmaElement a = a0, b = b0;
    long L = align_level(*this, a, b);
    long P = p();
    Rat vs = v_sigma(L);
    Rat shift_exp = v_sigma(L - 1) * Rat(-1); // +1/p^{L-1}; sigma_{L}^p carries p^{-1/p^{L-1}}
    // convolution up to degree 2p-2
    std::vector<MNElement> conv(2 * P - 1);
    for (long D = 0; D < 2 * P - 1; ++D) {
        Rat wD = window ? (*window - Rat(D) * vs + (L >= 1 ? shift_exp : Rat(0))) : Rat(0);
        MNElement acc = mn_.zero(BIG);
        for (long i = std::max<long>(0, D - (P - 1)); i <= std::min<long>(D, P - 1); ++i) {
            long j = D - i;
            MNElement prod = window ? mn_.mul_window(a.coeffs[i], b.coeffs[j], wD)
                                    : mn_.mul(a.coeffs[i], b.coeffs[j]);
            acc = mn_.add(acc, prod);
        }
        conv[D] = std::move(acc);
    }
    // reduce degrees >= p: sigma^{p+e} = sigma^e p^{-1/p^{L-1}} + sigma^{e+1} + err
    fold = BIG;
    for (long e = 0; e + P < (long)conv.size() + 1 && P + e <= 2 * P - 2; ++e) {
        const MNElement& c = conv[P + e];
        if (c.terms.empty() && !(c.trunc < BIG)) continue;
        Rat err = mn_.valuation_bound(c) + Rat(e) * vs + Rat(1) - shift_exp;
        fold = std::min(fold, err);
        conv[e] = mn_.add(conv[e], mn_.scale_mono(c, mn_.fq().one(), -shift_exp));
        conv[e + 1] = mn_.add(conv[e + 1], c);
    }
    conv.resize(P);
    Rat declared = window ? *window
                          : std::min(a.trunc + val_bound(b), b.trunc + val_bound(a));
    return make(L, std::min(declared, fold), std::move(conv));
}

SigmaElement SigmaCtx::mul(const SigmaElement& a, const SigmaElement& b) const {
    Rat fold;
    return mul_impl(a, b, nullptr, fold);
}

SigmaElement SigmaCtx::scale(const SigmaElement& a, const MNElement& m) const {
    std::vector<MNElement> cs(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) cs[j] = mn_.mul(a.coeffs[j], m);
    return make(a.level, a.trunc + mn_.valuation_bound(m), std::move(cs));
}

SigmaElement SigmaCtx::scale_mono(const SigmaElement& a, const FqElem& d, const Rat& x) const {
    std::vector<MNElement> cs(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) cs[j] = mn_.scale_mono(a.coeffs[j], d, x);
    return make(a.level, a.trunc + x, std::move(cs));
}

SigmaElement SigmaCtx::scale_rational(const SigmaElement& a, const Rat& q) const {
    if (q.is_zero()) return zero(a.level, a.trunc);
    Rat w = vp_rational(q, p()).q;
    std::vector<MNElement> cs(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) cs[j] = mn_.scale_rational(a.coeffs[j], q);
    return make(a.level, a.trunc + w, std::move(cs));
}

SigmaElement SigmaCtx::pow(const SigmaElement& a, long k) const {
    if (k == 0) fail(Err::InvalidArg, "sig pow: exponent 0 not supported");
    if (k < 0) return pow(inv(a), -k);
    if (k == 1) return a;
    Rat v = val_bound(a);
    Rat T = Rat(k - 1) * v + a.trunc + Rat(vp_int(Int(k), p()));
    for (long j = 2; j <= k; ++j)
        T = std::min(T, Rat(vp_int(binomial(k, j), p())) + Rat(k - j) * v + Rat(j) * a.trunc);
    Rat vneg = std::min(v, Rat(0));
    auto window = [&](long m) { return T - Rat(k - m) * vneg; };

    long bits[64], nb = 0;
    for (long kk = k; kk > 0; kk >>= 1) bits[nb++] = kk & 1;
    SigmaElement cur = a;
    Rat fold_all = BIG;
    long m = 1;
    for (long i = nb - 2; i >= 0; --i) {
        Rat fold;
        m *= 2;
        Rat w = window(m);
        cur = mul_impl(cur, cur, &w, fold);
        fold_all = std::min(fold_all, fold);
        if (bits[i]) {
            m += 1;
            w = window(m);
            cur = mul_impl(cur, a, &w, fold);
            fold_all = std::min(fold_all, fold);
        }
    }
    return make(cur.level, std::min(T, fold_all), std::move(cur.coeffs));
}

SigmaElement SigmaCtx::inv(const SigmaElement& a0) const {
    SigmaElement a = a0;
    SigmaValuation sv = valuation(a);
    if (!sv.exact)
        fail(Err::Precision, "sig inv: valuation not certified exact at this truncation");
    if (sv.degree > 0) {
        // one telescope shift moves the unique minimizer to sigma-degree 0
        a = level_shift(a);
        sv = valuation(a);
        if (!sv.exact || sv.degree != 0)
            fail(Err::Internal, "sig inv: minimizer did not move to degree 0");
    }
    const MNElement& c0 = a.coeffs[0];
    Rat x = c0.terms.front().exp;
    FqElem d0i = mn_.fq().inv(c0.terms.front().digit);
    SigmaElement b = scale_mono(a, d0i, -x); // 1 + eps
    Rat tb = b.trunc;
    SigmaElement eps = sub(b, from_mn(mn_.one(tb), b.level));
    SigmaElement res = from_mn(mn_.one(tb), b.level);
    Rat e = val_bound(eps);
    if (e < tb) {
        if (!(Rat(0) < e)) fail(Err::Internal, "sig inv: eps not positive-valuation");
        SigmaElement meps = neg(eps);
        SigmaElement pw = res;
        for (Rat ke = e; ke < tb; ke += e) {
            pw = mul(pw, meps);
            res = add(res, pw);
        }
    }
    return scale_mono(res, d0i, -x);
}

SigmaElement SigmaCtx::level_shift(const SigmaElement& a) const {
    long L = a.level, P = p();
    Rat step = v_sigma(L) * Rat(-1); // sigma_L = p^{-1/p^L} + sigma_{L+1}
    std::vector<MNElement> cs(P, mn_.zero(BIG));
    for (long t = 0; t < P; ++t) {
        MNElement acc = mn_.zero(BIG);
        for (long j = t; j < P; ++j) {
            if (a.coeffs[j].terms.empty() && !(a.coeffs[j].trunc < BIG) && j != t) continue;
            MNElement part = mn_.scale_rational(a.coeffs[j], Rat(binomial(j, t)));
            part = mn_.scale_mono(part, mn_.fq().one(), -step * Rat(j - t));
            acc = mn_.add(acc, part);
        }
        cs[t] = std::move(acc);
    }
    return make(L + 1, a.trunc, std::move(cs));
}

SigmaElement SigmaCtx::to_level(const SigmaElement& a, long level) const {
    if (level < a.level) fail(Err::InvalidArg, "to_level: cannot lower the level");
    SigmaElement r = a;
    while (r.level < level) r = level_shift(r);
    return r;
}

SigmaElement SigmaCtx::root_map(const SigmaElement& a) const {
    std::vector<MNElement> cs(a.coeffs.size());
    for (size_t j = 0; j < a.coeffs.size(); ++j) {
        MNElement m;
        m.trunc = a.coeffs[j].trunc / Rat(p());
        for (const auto& tm : a.coeffs[j].terms)
            m.terms.push_back({tm.exp / Rat(p()), mn_.fq().inv_frobenius(tm.digit)});
        cs[j] = std::move(m);
    }
    return make(a.level + 1, a.trunc / Rat(p()), std::move(cs));
}

SigmaValuation SigmaCtx::valuation(const SigmaElement& a) const {
    Rat vs = v_sigma(a.level);
    SigmaValuation out{Rat(0), false, -1};
    bool first = true;
    long ties = 0;
    bool realized = false;
    for (long j = 0; j < (long)a.coeffs.size(); ++j) {
        Rat vj = mn_.valuation_bound(a.coeffs[j]) + Rat(j) * vs;
        if (first || vj < out.bound) {
            out.bound = vj;
            out.degree = j;
            ties = 1;
            realized = !a.coeffs[j].terms.empty();
            first = false;
        } else if (vj == out.bound) {
            ++ties;
        }
    }
    out.exact = (ties == 1 && realized);
    return out;
}

SigmaCongruence SigmaCtx::congruent(const SigmaElement& a0, const SigmaElement& b0,
                                    const Rat& r) const {
    SigmaElement a = a0, b = b0;
    long L = align_level(*this, a, b);
    if (a.trunc < r || b.trunc < r)
        fail(Err::Precision, "sig congruent: bound " + r.str() + " exceeds truncation " +
                                 std::min(a.trunc, b.trunc).str());
    Rat vs = v_sigma(L);
    SigmaCongruence out;
    out.required_overall = r;
    out.ok = true;
    for (long j = 0; j < p(); ++j) {
        MNElement d = mn_.sub(a.coeffs[j], b.coeffs[j]);
        Rat req = r - Rat(j) * vs; // v(c_j) >= r + j/p^L makes c_j sigma^j small enough
        SigmaCongruence::Part part;
        part.degree = j;
        part.required = req;
        if (d.terms.empty()) {
            part.achieved = ValQ::of(d.trunc);
            part.ok = !(d.trunc < req);
        } else {
            part.achieved = ValQ::of(d.terms.front().exp);
            part.ok = !(d.terms.front().exp < req);
        }
        out.ok = out.ok && part.ok;
        out.parts.push_back(std::move(part));
    }
    return out;
}

MNElement SigmaCtx::subst(const SigmaElement& a, long K) const {
    MNElement sc = sigma_concrete(a.level, K);
    MNElement acc = a.coeffs[0];
    MNElement pw = sc;
    for (long j = 1; j < (long)a.coeffs.size(); ++j) {
        if (j > 1) pw = mn_.mul(pw, sc);
        if (a.coeffs[j].terms.empty() && !(a.coeffs[j].trunc < BIG)) continue;
        acc = mn_.add(acc, mn_.mul(a.coeffs[j], pw));
    }
    return mn_restrict(acc, std::min(acc.trunc, a.trunc));
}

std::string SigmaCtx::to_string(const SigmaElement& a) const {
    std::ostringstream os;
    os << "level " << a.level << ", trunc " << a.trunc.str() << ":";
    for (long j = 0; j < (long)a.coeffs.size(); ++j) {
        if (a.coeffs[j].terms.empty()) continue;
        os << "\n  sigma^" << j << " * (" << mn_.to_string(a.coeffs[j]) << ")";
    }
    return os.str();
}

} // namespace lpadic
