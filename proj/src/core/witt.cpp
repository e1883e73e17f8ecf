#include "witt.hpp"

#include <stdexcept>

namespace lpadic {

WittCtx::WittCtx(const FqCtx& fq, long s) : fq_(fq), s_(s) {
    if (s < 1) throw std::domain_error("WittCtx: precision must be >= 1");
    ps_ = 1;
    for (long i = 0; i < s; ++i) ps_ *= fq_.p();
}

Int WittCtx::red(Int v) const {
    v %= ps_;
    if (v < 0) v += ps_;
    return v;
}

WittElem WittCtx::add(const WittElem& x, const WittElem& y) const {
    return {red(x.u0 + y.u0), red(x.u1 + y.u1)};
}

WittElem WittCtx::sub(const WittElem& x, const WittElem& y) const {
    return {red(x.u0 - y.u0), red(x.u1 - y.u1)};
}

WittElem WittCtx::neg(const WittElem& x) const { return {red(-x.u0), red(-x.u1)}; }

WittElem WittCtx::mul(const WittElem& x, const WittElem& y) const {
    // y^2 = -(a y + b) with the integral lifts of the modulus coefficients
    Int a = fq_.mod_a(), b = fq_.mod_b();
    Int t2 = x.u1 * y.u1;
    Int t1 = x.u0 * y.u1 + x.u1 * y.u0;
    Int t0 = x.u0 * y.u0;
    return {red(t0 - t2 * b), red(t1 - t2 * a)};
}

WittElem WittCtx::pow(WittElem x, Int e) const {
    if (e < 0) throw std::domain_error("WittCtx::pow: negative exponent");
    WittElem acc = one();
    while (e > 0) {
        if ((e & 1) != 0) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

WittElem WittCtx::inv(const WittElem& x) const {
    if (fq_.is_zero(residue(x))) throw std::domain_error("WittCtx::inv: not a unit");
    // multiply by the Galois conjugate; the norm lands in Z/p^s and is a unit
    Int a = fq_.mod_a(), b = fq_.mod_b();
    WittElem conj{red(x.u0 - a * x.u1), red(-x.u1)};
    Int n = red(x.u0 * x.u0 - a * x.u0 * x.u1 + b * x.u1 * x.u1);
    // invert n mod p^s: lift the mod-p inverse by Newton iteration
    long p = fq_.p();
    Int r = n % p;
    long r0 = (long)r;
    long inv0 = 1;
    for (long t = 1; t < p; ++t)
        if ((r0 * t) % p == 1) { inv0 = t; break; }
    Int ninv = inv0;
    Int mod = p;
    while (mod < ps_) {
        mod *= mod; // quadratic convergence; overshooting past p^s is fine
        ninv = ninv * (2 - ((n * ninv) % mod));
        ninv %= mod;
        if (ninv < 0) ninv += mod;
    }
    ninv = red(ninv);
    return {red(conj.u0 * ninv), red(conj.u1 * ninv)};
}

FqElem WittCtx::residue(const WittElem& w) const {
    long p = fq_.p();
    return {(long)(w.u0 % p), (long)(w.u1 % p)};
}

WittElem WittCtx::from_rational(const Rat& q) const {
    long p = fq_.p();
    if (q.den() % p == 0) throw std::domain_error("WittCtx::from_rational: denominator not a unit");
    WittElem numw{red(q.num()), 0};
    if (q.den() == 1) return numw;
    WittElem denw{red(q.den()), 0};
    return mul(numw, inv(denw));
}

WittElem WittCtx::teich_lift(const FqElem& d) const {
    long idx = fq_.index_of(d);
    auto it = teich_cache_.find(idx);
    if (it != teich_cache_.end()) return it->second;
    WittElem w{d.c0, d.c1};
    Int p2 = Int(fq_.p()) * fq_.p();
    // each w -> w^{p^2} step fixes one more digit, so s iterations suffice
    for (long i = 0; i < s_; ++i) w = pow(w, p2);
    teich_cache_[idx] = w;
    return w;
}

WittElem WittCtx::div_p(const WittElem& w) const {
    long p = fq_.p();
    if (w.u0 % p != 0 || w.u1 % p != 0)
        throw std::logic_error("WittCtx::div_p: not divisible");
    return {w.u0 / p, w.u1 / p};
}

std::vector<FqElem> WittCtx::teich_digits(WittElem w) const {
    std::vector<FqElem> ds;
    ds.reserve(s_);
    for (long i = 0; i < s_; ++i) {
        FqElem d = residue(w);
        ds.push_back(d);
        w = div_p(sub(w, teich_lift(d)));
    }
    return ds;
}

} // namespace lpadic
