#include "gfq.hpp"

#include <stdexcept>

namespace lpadic {

namespace {
long norm_mod(long x, long p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}
} // namespace

bool FqCtx::irreducible(long p, long a, long b) {
    // degree 2: irreducible over F_p iff no root in F_p
    for (long t = 0; t < p; ++t)
        if ((t * t + a * t + b) % p == 0) return false;
    return true;
}

FqCtx::FqCtx(long p, bool alt) : p_(p) {
    if (p < 2) throw std::domain_error("FqCtx: bad characteristic");
    int found = 0;
    for (long a = 0; a < p; ++a) {
        for (long b = 0; b < p; ++b) {
            if (!irreducible(p, a, b)) continue;
            ++found;
            if ((!alt && found == 1) || (alt && found == 2)) {
                a_ = a;
                b_ = b;
                return;
            }
        }
    }
    throw std::logic_error("FqCtx: no irreducible quadratic found");
}

std::string FqCtx::modulus_str() const {
    std::string s = "g^2";
    if (a_ == 1) s += "+g";
    else if (a_ > 1) s += "+" + std::to_string(a_) + "*g";
    if (b_ > 0) s += "+" + std::to_string(b_);
    return s;
}

FqElem FqCtx::from_int(long n) const { return {norm_mod(n, p_), 0}; }

FqElem FqCtx::add(const FqElem& x, const FqElem& y) const {
    return {norm_mod(x.c0 + y.c0, p_), norm_mod(x.c1 + y.c1, p_)};
}

FqElem FqCtx::sub(const FqElem& x, const FqElem& y) const {
    return {norm_mod(x.c0 - y.c0, p_), norm_mod(x.c1 - y.c1, p_)};
}

FqElem FqCtx::neg(const FqElem& x) const {
    return {norm_mod(-x.c0, p_), norm_mod(-x.c1, p_)};
}

FqElem FqCtx::mul(const FqElem& x, const FqElem& y) const {
    // (x0 + x1 g)(y0 + y1 g), g^2 = -(a g + b)
    long t2 = x.c1 * y.c1;
    long t1 = x.c0 * y.c1 + x.c1 * y.c0;
    long t0 = x.c0 * y.c0;
    return {norm_mod(t0 - t2 * b_, p_), norm_mod(t1 - t2 * a_, p_)};
}

FqElem FqCtx::inv(const FqElem& x) const {
    if (is_zero(x)) throw std::domain_error("FqCtx::inv: zero");
    // conjugate is x0 - a*x1 - x1 g; norm = x * conj lies in F_p
    long n = norm_mod(x.c0 * x.c0 - a_ * x.c0 * x.c1 + b_ * x.c1 * x.c1, p_);
    // n^{-1} mod p by Fermat
    long ninv = 1, base = n, e = p_ - 2;
    while (e) {
        if (e & 1) ninv = norm_mod(ninv * base, p_);
        base = norm_mod(base * base, p_);
        e >>= 1;
    }
    FqElem conj{norm_mod(x.c0 - a_ * x.c1, p_), norm_mod(-x.c1, p_)};
    return mul(conj, from_int(ninv));
}

FqElem FqCtx::pow(FqElem x, long e) const {
    if (e < 0) {
        x = inv(x);
        e = -e;
    }
    FqElem acc = one();
    while (e) {
        if (e & 1) acc = mul(acc, x);
        x = mul(x, x);
        e >>= 1;
    }
    return acc;
}

long FqCtx::order(const FqElem& x) const {
    if (is_zero(x)) throw std::domain_error("FqCtx::order: zero");
    long n = p_ * p_ - 1;
    long ord = n;
    // strip each prime factor of n while the power stays 1
    long m = n;
    for (long q = 2; q * q <= m; ++q) {
        while (m % q == 0) {
            m /= q;
            while (ord % q == 0 && pow(x, ord / q) == one()) ord /= q;
        }
    }
    if (m > 1)
        while (ord % m == 0 && pow(x, ord / m) == one()) ord /= m;
    return ord;
}

FqElem FqCtx::zeta_2pm2() const {
    long target = 2 * (p_ - 1);
    for (long idx = 1; idx < p_ * p_; ++idx) {
        FqElem e = element_at(idx);
        if (!is_zero(e) && order(e) == target) return e;
    }
    throw std::logic_error("FqCtx: no element of order 2(p-1)");
}

std::vector<FqElem> FqCtx::poly_roots(const std::vector<FqElem>& coeffs) const {
    std::vector<FqElem> roots;
    for (long idx = 0; idx < p_ * p_; ++idx) {
        FqElem t = element_at(idx);
        FqElem val = zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            val = add(mul(val, t), *it);
        if (is_zero(val)) roots.push_back(t);
    }
    return roots; // index order by construction
}

std::string FqCtx::str(const FqElem& x) const {
    if (x.c0 == 0 && x.c1 == 0) return "0";
    std::string s;
    if (x.c1 == 1) s = "g";
    else if (x.c1 > 1) s = std::to_string(x.c1) + "*g";
    if (x.c0 != 0) {
        if (!s.empty()) s += "+";
        s += std::to_string(x.c0);
    }
    return s;
}

} // namespace lpadic
