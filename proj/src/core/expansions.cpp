#include "expansions.hpp"

#include "combinatorics.hpp"

namespace lpadic {

Int int_pow(long p, long e) {
    if (e < 0) fail(Err::InvalidArg, "int_pow: negative exponent");
    Int r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

Expansions::Expansions(const SigmaCtx& sc) : sc_(sc), z_(sc.mn().fq().zeta_2pm2()) {}

Expansions::Expansions(const SigmaCtx& sc, const FqElem& z) : sc_(sc), z_(z) {
    const FqCtx& fq = sc_.mn().fq();
    if (fq.is_zero(z_) || fq.order(z_) != 2 * (p() - 1))
        fail(Err::InvalidArg, "Expansions: digit must have order 2(p-1)");
}

Rat Expansions::U() const { return Rat(1) + Rat(Int(1), factorial(p() - 1)); }

FqElem Expansions::zpow(long k) const { return mn().fq().pow(z_, k); }

void Expansions::push(std::vector<RawTerm>& raws, const Rat& u, const FqElem& d,
                      const Rat& x) const {
    if (u.is_zero() || mn().fq().is_zero(d)) return;
    ValQ vu = vp_rational(u, p());
    long m = rat_to_long(vu.q); // vp of a rational is an integer
    Rat unit = u;
    if (m > 0)
        unit /= Rat(int_pow(p(), m));
    else if (m < 0)
        unit *= Rat(int_pow(p(), -m));
    raws.push_back({x + Rat(m), d, unit});
}

MNElement Expansions::build(std::vector<RawTerm> raws, const Rat& trunc) const {
    return mn().normalize(std::move(raws), trunc);
}

// ---- finite MN layer -----------------------------------------------------

MNElement Expansions::lambda(const Rat& trunc) const {
    return mn().monomial(z_, Rat(Int(1), Int(p()) * (p() - 1)), trunc);
}

MNElement Expansions::Lambda(const Rat& trunc) const {
    const Rat e(Int(1), Int(p()) * (p() - 1));
    std::vector<RawTerm> raws;
    long fmod = 1;
    for (long k = 0; k < p(); ++k) {
        if (k > 0) fmod = (fmod * (k % p())) % p();
        FqElem d = mn().fq().mul(zpow(k), mn().fq().inv(mn().fq().from_int(fmod)));
        push(raws, Rat(1), d, e * Rat(k));
    }
    return build(std::move(raws), trunc);
}

MNElement Expansions::Lambda_hat(const Rat& trunc) const {
    const Rat e(Int(1), Int(p()) * (p() - 1));
    std::vector<RawTerm> raws;
    for (long k = 0; k < p(); ++k)
        push(raws, Rat(Int(1), factorial(k)), zpow(k), e * Rat(k));
    return build(std::move(raws), trunc);
}

MNElement Expansions::Lambda_tilde(const Rat& trunc) const {
    const Rat e(Int(1), Int(p() - 1));
    std::vector<RawTerm> raws;
    long fmod = 1;
    for (long k = 0; k < p(); ++k) {
        if (k > 0) fmod = (fmod * (k % p())) % p();
        FqElem d = mn().fq().mul(zpow(k * p()), mn().fq().inv(mn().fq().from_int(fmod)));
        push(raws, Rat(1), d, e * Rat(k));
    }
    return build(std::move(raws), trunc);
}

MNElement Expansions::Lambda_hat_tilde(const Rat& trunc) const {
    const Rat e(Int(1), Int(p() - 1));
    std::vector<RawTerm> raws;
    for (long k = 0; k < p(); ++k)
        push(raws, Rat(Int(1), factorial(k)), zpow(k * p()), e * Rat(k));
    return build(std::move(raws), trunc);
}

MNElement Expansions::Lambda_tilde_plus(const Rat& trunc) const {
    MNElement t = Lambda_tilde(trunc);
    return mn().add(t, mn().from_unit(U(), z_, Rat(Int(1), Int(p() - 1)), trunc));
}

MNElement Expansions::eta(const Rat& trunc) const {
    return mn().monomial(mn().fq().neg(z_), Rat(Int(1), Int(p() - 1)), trunc);
}

MNElement Expansions::kappa(const Rat& trunc) const {
    const Rat base = Rat(1) + Rat(Int(1), Int(p() - 1));
    const Rat e(Int(1), Int(p()) * (p() - 1));
    std::vector<RawTerm> raws;
    for (long j = 2; j <= p() - 1; ++j)
        push(raws, Rat(Int(sgn(j)), factorial(j) * j), zpow(j + 1), base + e * Rat(j));
    return build(std::move(raws), trunc);
}

MNElement Expansions::zeta_p2_approx(long i, const Rat& trunc) const {
    if (i < 0) fail(Err::InvalidArg, "zeta_p2_approx: i must be >= 0");
    const Rat e(Int(1), Int(p()) * (p() - 1));
    std::vector<RawTerm> raws;
    long fmod = 1;
    for (long k = 0; k <= std::min(i, p() - 1L); ++k) {
        if (k > 0) fmod = (fmod * (k % p())) % p();
        FqElem d = mn().fq().mul(zpow(k), mn().fq().inv(mn().fq().from_int(fmod)));
        push(raws, Rat(1), d, e * Rat(k));
    }
    const Rat b(Int(1), Int(p() - 1));
    for (long l = 2; l <= i - p() + 2; ++l)
        push(raws, Rat(1), z_, b - Rat(Int(1), int_pow(p(), l)));
    return build(std::move(raws), trunc);
}

// ---- sigma layer ---------------------------------------------------------

SigmaElement Expansions::mu0(const Rat& trunc) const {
    const Rat b(Int(1), Int(p() - 1));
    const Rat e(Int(1), Int(p()) * (p() - 1));
    const Rat ct = trunc + Rat(1);
    std::vector<MNElement> cs;
    cs.push_back(Lambda(ct));
    std::vector<RawTerm> c1;
    push(c1, Rat(1), z_, b);
    push(c1, Rat(1), zpow(2), b + e);
    cs.push_back(build(std::move(c1), ct));
    for (long j = 2; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(2, trunc, std::move(cs));
}

SigmaElement Expansions::mu(const Rat& trunc) const {
    const Rat b(Int(1), Int(p() - 1));
    const Rat ct = trunc + Rat(1);
    std::vector<MNElement> cs;
    cs.push_back(Lambda(ct));
    cs.push_back(mn().scale_mono(Lambda(ct), z_, b));
    for (long j = 2; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(2, trunc, std::move(cs));
}

SigmaElement Expansions::W(const Rat& trunc) const {
    const Rat b(Int(1), Int(p() - 1));
    const Rat e(Int(1), Int(p()) * (p() - 1));
    const Rat ct = trunc + Rat(1);
    std::vector<RawTerm> c0;
    for (long l = 0; l < p(); ++l)
        push(c0, Rat(Int(sgn(l)), factorial(l)), zpow(l), b * Rat(l));
    push(c0, U(), z_, b);
    push(c0, Rat(1), z_, Rat(1) + e);
    push(c0, Rat(-1), zpow(2), Rat(1) + e + b);
    std::vector<RawTerm> c2;
    push(c2, Rat(Int(1), Int(2)), zpow(2), Rat(1) + b * Rat(2));
    std::vector<MNElement> cs;
    cs.push_back(build(std::move(c0), ct));
    cs.push_back(mn().zero(ct));
    cs.push_back(build(std::move(c2), ct));
    for (long j = 3; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(2, trunc, std::move(cs));
}

SigmaElement Expansions::M() const {
    const Rat b(Int(1), Int(p() - 1));
    const Rat e(Int(1), Int(p()) * (p() - 1));
    const Rat r = b * Rat(2);
    const Rat ct = r + Rat(1);
    std::vector<RawTerm> c0;
    push(c0, Rat(Int(1), Int(2)), zpow(3), r - Rat(Int(p() - 2), int_pow(p(), 2) * (p() - 1)));
    for (long k = 1; k < p(); ++k)
        push(c0, -harmonic(k) / Rat(factorial(k)), zpow(k + 1), b + e * Rat(k));
    std::vector<RawTerm> c2;
    push(c2, Rat(Int(1), Int(2)), zpow(2), r);
    std::vector<MNElement> cs;
    cs.push_back(build(std::move(c0), ct));
    cs.push_back(mn().zero(ct));
    cs.push_back(build(std::move(c2), ct));
    for (long j = 3; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(2, r, std::move(cs));
}

SigmaElement Expansions::A_beta(long n, long beta) const {
    if (n < 2) fail(Err::InvalidArg, "A_beta: level must be >= 2");
    if (beta < 0) fail(Err::InvalidArg, "A_beta: beta must be >= 0");
    const Rat e(Int(1), int_pow(p(), n - 1) * (p() - 1));
    const Rat r = e * Rat(2);
    const Rat ct = r + Rat(1);
    std::vector<RawTerm> c1;
    push(c1, Rat(sgn(n)), z_, e);
    push(c1, Rat(beta), zpow(2), e * Rat(2));
    std::vector<MNElement> cs;
    cs.push_back(mn().zero(ct));
    cs.push_back(build(std::move(c1), ct));
    for (long j = 2; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(n, r, std::move(cs));
}

SigmaElement Expansions::zeta_p2_first() const {
    const Rat r = Rat(Int(1), Int(p() - 1)) + Rat(Int(1), Int(p()) * (p() - 1));
    return mu0(r);
}

SigmaElement Expansions::zeta_p2() const {
    const Rat b(Int(1), Int(p() - 1));
    const Rat e(Int(1), Int(p()) * (p() - 1));
    const Rat r = b * Rat(2);
    const Rat ct = r + Rat(1);

    std::vector<RawTerm> c0;
    long fmod = 1;
    for (long k = 0; k < p(); ++k) {
        if (k > 0) fmod = (fmod * (k % p())) % p();
        FqElem d = mn().fq().mul(zpow(k), mn().fq().inv(mn().fq().from_int(fmod)));
        push(c0, Rat(1), d, e * Rat(k));
    }
    push(c0, Rat(Int(1), Int(2)), zpow(3), r - Rat(Int(p() - 2), int_pow(p(), 2) * (p() - 1)));
    for (long k = 1; k < p(); ++k)
        push(c0, -harmonic(k) / Rat(factorial(k)), zpow(k + 1), b + e * Rat(k));

    std::vector<RawTerm> c2;
    push(c2, Rat(Int(1), Int(2)), zpow(2), r);

    std::vector<MNElement> cs;
    cs.push_back(build(std::move(c0), ct));
    cs.push_back(mn().scale_mono(Lambda(ct), z_, b));
    cs.push_back(build(std::move(c2), ct));
    for (long j = 3; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(2, r, std::move(cs));
}

SigmaElement Expansions::zeta_pn(long n) const {
    if (n < 2) fail(Err::InvalidArg, "zeta_pn: level must be >= 2");
    const Rat e1(Int(1), int_pow(p(), n - 1) * (p() - 1));
    const Rat r(Int(2), int_pow(p(), n - 2) * (p() - 1));
    const Rat ct = r + Rat(1);

    std::vector<RawTerm> c0;
    for (long k = 0; k < p(); ++k)
        push(c0, Rat(Int(sgn(n * k)), factorial(k)), zpow(k), e1 * Rat(k));
    push(c0, Rat(Int(sgn(n)), Int(2)), zpow(3),
         r - Rat(Int(p() - 2), int_pow(p(), n) * (p() - 1)));
    for (long k = 1; k < p(); ++k)
        push(c0, Rat(-sgn(n * (k + 1))) * harmonic(k) / Rat(factorial(k)), zpow(k + 1),
             e1 * Rat(k + p()));

    std::vector<RawTerm> c1;
    for (long k = 0; k < p(); ++k)
        push(c1, Rat(Int(sgn(n * (k + 1))), factorial(k)), zpow(k + 1), e1 * Rat(k + p()));

    std::vector<RawTerm> c2;
    push(c2, Rat(Int(1), Int(2)), zpow(2), r);

    std::vector<MNElement> cs;
    cs.push_back(build(std::move(c0), ct));
    cs.push_back(build(std::move(c1), ct));
    cs.push_back(build(std::move(c2), ct));
    for (long j = 3; j < p(); ++j) cs.push_back(mn().zero(ct));
    return sc_.make(n, r, std::move(cs));
}

// ---- uniformizers --------------------------------------------------------

Expansions::Uniformizer Expansions::uniformizer(long m) const {
    if (m < 2) fail(Err::InvalidArg, "uniformizer: m must be >= 2");

    SigmaElement pi;
    if (m == 2) {
        SigmaElement x = zeta_p2();
        MNElement L = Lambda(x.trunc + Rat(1));
        pi = sc_.scale_mono(sc_.sub(x, sc_.from_mn(L, 2)), mn().fq().one(),
                            Rat(Int(-1), Int(p())));
    } else {
        Uniformizer prev = uniformizer(m - 1);
        const SigmaElement& A = prev.elem;
        const long beta = (m == 3) ? 1 : 2;

        // successive powers A^0 .. A^{2p-1}
        std::vector<SigmaElement> P;
        P.push_back(sc_.from_mn(mn().one(A.trunc + Rat(1)), m - 1));
        for (long k = 1; k <= 2 * p() - 1; ++k) P.push_back(sc_.mul(P.back(), A));

        SigmaElement S1 = P[0];
        for (long k = 1; k < p(); ++k)
            S1 = sc_.add(S1, sc_.scale_rational(P[k], Rat(Int(sgn(k)), factorial(k))));
        SigmaElement S2 = sc_.zero(m - 1, Rat(100));
        for (long k = 1; k < p(); ++k) {
            Rat c = Rat(sgn(k)) * (Rat(k * beta) - harmonic(k)) / Rat(factorial(k));
            if (c.is_zero()) continue;
            S2 = sc_.add(S2, sc_.scale_rational(P[p() + k], c));
        }

        SigmaElement zm = zeta_pn(m);
        SigmaElement inner = sc_.sub(sc_.sub(zm, sc_.to_level(S1, m)), sc_.to_level(S2, m));
        SigmaElement base = sc_.sub(zm, sc_.from_mn(mn().one(zm.trunc + Rat(1)), m));
        pi = sc_.mul(sc_.pow(base, -(2 * p() - 2)), inner);
    }

    const Rat expected(Int(1), int_pow(p(), m) * (p() - 1));
    SigmaValuation sv = sc_.valuation(pi);
    if (!sv.exact)
        fail(Err::Precision, "uniformizer: valuation not certified exact at this truncation");
    if (!(sv.bound == expected))
        fail(Err::Internal, "uniformizer: certified valuation differs from 1/(p^m(p-1))");
    if (!(expected < pi.trunc))
        fail(Err::Precision, "uniformizer: valuation not strictly below the truncation");
    return {std::move(pi), expected, m};
}

} // namespace lpadic
