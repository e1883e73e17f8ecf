#pragma once

/**
 * The residue field F_{p^2} = F_p[g]/(m(g)) with a deterministically chosen
 * modulus: the lexicographically smallest monic irreducible m(y) = y^2 + a*y + b
 * (ordered by (a, b)).  For p = 3 this is g^2 + 1.  An alternative-modulus mode
 * picks the next irreducible in the same order, so that identity verdicts can be
 * checked for independence from the field presentation.
 *
 * Elements are pairs (c0, c1) meaning c0 + c1*g; the fixed enumeration order is
 * index = c0 + p*c1, which makes "smallest root" deterministic everywhere.
 * Root-finding for residue polynomials is exhaustive over all p^2 elements --
 * degrees here are tiny and exactness beats cleverness.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace lpadic {

struct FqElem {
    long c0 = 0, c1 = 0;
    friend bool operator==(const FqElem&, const FqElem&) = default;
};

class FqCtx {
public:
    // alt = false: smallest irreducible modulus; alt = true: second-smallest.
    FqCtx(long p, bool alt = false);

    long p() const { return p_; }
    long mod_a() const { return a_; }
    long mod_b() const { return b_; }
    std::string modulus_str() const; // e.g. "g^2+1", "g^2+g+2"

    FqElem zero() const { return {0, 0}; }
    FqElem one() const { return {1, 0}; }
    FqElem from_int(long n) const; // image of an integer (mod p)

    bool is_zero(const FqElem& x) const { return x.c0 == 0 && x.c1 == 0; }

    FqElem add(const FqElem& x, const FqElem& y) const;
    FqElem sub(const FqElem& x, const FqElem& y) const;
    FqElem neg(const FqElem& x) const;
    FqElem mul(const FqElem& x, const FqElem& y) const;
    FqElem inv(const FqElem& x) const;
    FqElem pow(FqElem x, long e) const; // e may be negative for nonzero x

    FqElem frobenius(const FqElem& x) const { return pow(x, p_); }
    // x -> x^{1/p}; on F_{p^2} the Frobenius is an involution, so this is x^p too
    FqElem inv_frobenius(const FqElem& x) const { return pow(x, p_); }

    long index_of(const FqElem& x) const { return x.c0 + p_ * x.c1; }
    FqElem element_at(long idx) const { return {idx % p_, idx / p_}; }

    // multiplicative order of nonzero x
    long order(const FqElem& x) const;

    // smallest-index element of multiplicative order exactly 2(p-1)
    FqElem zeta_2pm2() const;

    // all roots in F_{p^2} of sum_i coeffs[i] T^i, sorted by index, no repeats
    std::vector<FqElem> poly_roots(const std::vector<FqElem>& coeffs) const;

    std::string str(const FqElem& x) const; // "0", "2", "g", "2*g+1", ...

private:
    long p_, a_, b_;
    static bool irreducible(long p, long a, long b);
};

} // namespace lpadic
