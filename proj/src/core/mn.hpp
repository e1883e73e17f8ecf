#pragma once

/**
 * Truncated canonical expansions in the p-adic Mal'cev-Neumann field with
 * digits restricted to F_{p^2}:
 *
 *     a  =  sum_i [d_i] p^{x_i}  +  O(p^trunc),    x_i in Q, x_i < trunc,
 *
 * with Teichmueller brackets, strictly increasing exponents and nonzero digits.
 * Every element carries its own finite truncation; every operation computes
 * the truncation of its result from those of its operands, so a term list is
 * always the provably-exact prefix of the infinite canonical expansion.
 *
 * Normalization is the only place where digits interact: raw (exponent, value)
 * pairs are grouped by coset of Q/Z, accumulated as Witt vectors at precision
 * ceil(trunc - base) + guard, and swept upward with Teichmueller carries.
 * Addition and multiplication both reduce to it (digit products are carry-free
 * because tau is multiplicative; collisions are not).
 *
 * Truncation rules worth naming:
 *   mul:  trunc = min(trunc_a + v(b), trunc_b + v(a))   (v = trunc for empty)
 *   inv:  trunc = trunc_a - 2 v(a)
 *   pow k: trunc = min_{1<=j<=k} [ vp(C(k,j)) + (k-j) v(a) + j trunc_a ]
 *          -- the ultrametric binomial bound; repeated squaring computes the
 *          value, windows keep intermediate term lists exact where needed.
 */

#include "errors.hpp"
#include "gfq.hpp"
#include "rational.hpp"
#include "witt.hpp"

#include <map>
#include <memory>
#include <vector>

namespace lpadic {

struct MNTerm {
    Rat exp;
    FqElem digit;
    friend bool operator==(const MNTerm&, const MNTerm&) = default;
};

struct MNElement {
    std::vector<MNTerm> terms; // sorted by exp, unique, digits nonzero, exp < trunc
    Rat trunc;
};

// raw (pre-normalization) term: value u * tau(d) * p^exp with vp(u) = 0
struct RawTerm {
    Rat exp;
    FqElem d;
    Rat u;
};

struct CongruenceWitness {
    bool ok = false;
    ValQ achieved;  // certified lower bound on v(difference); exact if a term exists
    Rat required;
};

class MNContext {
public:
    explicit MNContext(long p, bool alt_modulus = false, long guard = 2);

    long p() const { return p_; }
    long guard() const { return guard_; }
    const FqCtx& fq() const { return fq_; }
    const WittCtx& witt(long s) const; // cached per precision

    // --- constructors -----------------------------------------------------
    MNElement zero(const Rat& trunc) const { return {{}, trunc}; }
    MNElement one(const Rat& trunc) const;
    MNElement monomial(const FqElem& d, const Rat& exp, const Rat& trunc) const;
    // cluster u * tau(z) * p^exp with arbitrary rational u (vp split off into exp)
    MNElement from_unit(const Rat& u, const FqElem& z, const Rat& exp, const Rat& trunc) const;
    MNElement from_rational(const Rat& q, const Rat& trunc) const {
        return from_unit(q, fq_.one(), Rat(0), trunc);
    }
    MNElement normalize(std::vector<RawTerm> raws, const Rat& trunc) const;

    // --- ring ops ---------------------------------------------------------
    MNElement add(const MNElement& a, const MNElement& b) const;
    MNElement neg(const MNElement& a) const;
    MNElement sub(const MNElement& a, const MNElement& b) const;
    MNElement mul(const MNElement& a, const MNElement& b) const;
    // product of the exact term lists, truncated at the given window; the
    // caller is responsible for the meaning of the window (used by pow)
    MNElement mul_window(const MNElement& a, const MNElement& b, const Rat& window) const;
    MNElement scale_mono(const MNElement& a, const FqElem& d, const Rat& x) const;
    MNElement scale_rational(const MNElement& a, const Rat& q) const;
    MNElement inv(const MNElement& a) const;
    MNElement pow(const MNElement& a, long k) const;
    // digitwise p-th root; requires Supp in [0, 1).  Output truncation is
    // min(trunc, 1)/p: beyond that the true root picks up cross terms the
    // digit map cannot see.
    MNElement pth_root(const MNElement& a) const;

    // --- queries ----------------------------------------------------------
    ValQ valuation(const MNElement& a) const; // +inf when no terms
    Rat valuation_bound(const MNElement& a) const; // trunc when no terms
    FqElem coeff_at(const MNElement& a, const Rat& x) const; // needs x < trunc
    bool eq_upto(const MNElement& a, const MNElement& b, const Rat& r) const;
    CongruenceWitness congruent(const MNElement& a, const MNElement& b, const Rat& r) const;

    std::string to_string(const MNElement& a) const; // debugging aid

private:
    long p_, guard_;
    FqCtx fq_;
    mutable std::map<long, std::unique_ptr<WittCtx>> witt_cache_;
};

long rat_to_long(const Rat& q); // must be an integer fitting in long

} // namespace lpadic
