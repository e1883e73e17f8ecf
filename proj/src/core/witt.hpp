#pragma once

/**
 * Truncated Witt vectors of the residue field: W(F_{p^2})/p^s, realized as
 * (Z/p^s)[y]/(m~(y)) where m~ is the integral lift of the F_{p^2} modulus.
 * This is the unramified degree-2 extension of Z/p^s and carries two duties:
 *
 *   - Teichmueller lifts tau(d): the unique fixed point of w -> w^{p^2}
 *     congruent to d mod p, computed by iterating the Frobenius power;
 *   - digit decomposition w = sum_i tau(d_i) p^i, the carry engine behind
 *     canonical Mal'cev-Neumann normalization.
 *
 * Coefficients are big integers reduced into [0, p^s); s is fixed per context.
 */

#include "gfq.hpp"
#include "rational.hpp"

#include <map>

namespace lpadic {

struct WittElem {
    Int u0, u1; // u0 + u1*y
    friend bool operator==(const WittElem&, const WittElem&) = default;
};

class WittCtx {
public:
    WittCtx(const FqCtx& fq, long s);

    long p() const { return fq_.p(); }
    long s() const { return s_; }
    const Int& pow_ps() const { return ps_; }
    const FqCtx& fq() const { return fq_; }

    WittElem zero() const { return {0, 0}; }
    WittElem one() const { return {1, 0}; }

    bool is_zero(const WittElem& w) const { return w.u0 == 0 && w.u1 == 0; }

    WittElem add(const WittElem& x, const WittElem& y) const;
    WittElem sub(const WittElem& x, const WittElem& y) const;
    WittElem neg(const WittElem& x) const;
    WittElem mul(const WittElem& x, const WittElem& y) const;
    WittElem pow(WittElem x, Int e) const;
    WittElem inv(const WittElem& x) const; // x must be a unit

    FqElem residue(const WittElem& w) const;

    // embed an F_p-rational with vp = 0 (denominator inverted mod p^s)
    WittElem from_rational(const Rat& q) const;

    WittElem teich_lift(const FqElem& d) const;

    // w = sum_{i<s} tau(d_i) p^i; returns (d_0, ..., d_{s-1})
    std::vector<FqElem> teich_digits(WittElem w) const;

private:
    FqCtx fq_;
    long s_;
    Int ps_;
    mutable std::map<long, WittElem> teich_cache_;

    Int red(Int v) const;
    WittElem div_p(const WittElem& w) const; // both coords must be divisible by p
};

} // namespace lpadic
