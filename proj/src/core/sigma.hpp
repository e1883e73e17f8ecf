#pragma once

/**
 * Symbolic calculus over the tail sums
 *
 *     sigma_n = sum_{k >= n} p^{-1/p^k},      v(sigma_n) = -1/p^n  (exact),
 *
 * which are the only infinite-support objects the engine must reason about.
 * A SigmaElement of level n is a polynomial of degree < p in the symbol
 * sigma_n with truncated Mal'cev-Neumann coefficients, plus one element-wide
 * truncation.  Three exact rewrite facts drive everything:
 *
 *   telescope:   sigma_n = p^{-1/p^n} + sigma_{n+1}          (level shift)
 *   power rule:  sigma_n^p = p^{-1/p^{n-1}} + sigma_n + O(p^{1-1/p^{n-1}})
 *   valuation:   v(sum c_j sigma_n^j) = min_j (v(c_j) - j/p^n),
 *                exact iff the minimizer j is unique.
 *
 * The degree cap < p is restored after every product by the power rule; each
 * application folds its error term (scaled by the carried coefficient) into
 * the truncation, so results remain certified prefixes.
 *
 * Congruence of two SigmaElements is checked componentwise and is sufficient
 * but not necessary; a failed componentwise check on a believed-true identity
 * is therefore reported by callers as NEEDS-REVIEW rather than FAIL.
 */

#include "mn.hpp"

namespace lpadic {

struct SigmaElement {
    long level = 1;               // the symbol is sigma_{level}
    Rat trunc;
    std::vector<MNElement> coeffs; // exactly p entries, degree 0..p-1
};

struct SigmaValuation {
    Rat bound;   // certified lower bound on the valuation
    bool exact;  // true iff the minimizing degree is unique and realized
    long degree; // minimizing degree (meaningful when exact)
};

struct SigmaCongruence {
    bool ok = false;
    Rat required_overall;
    // one witness per sigma-degree
    struct Part {
        long degree;
        Rat required;
        ValQ achieved;
        bool ok;
    };
    std::vector<Part> parts;
};

class SigmaCtx {
public:
    explicit SigmaCtx(const MNContext& mn) : mn_(mn) {}

    const MNContext& mn() const { return mn_; }
    long p() const { return mn_.p(); }

    Rat v_sigma(long level) const; // -1/p^level

    // assemble with the truncation invariant trunc <= trunc(c_j) - j/p^level
    SigmaElement make(long level, const Rat& declared, std::vector<MNElement> coeffs) const;
    SigmaElement from_mn(const MNElement& m, long level) const;
    SigmaElement sigma(long level, const Rat& trunc) const; // the symbol itself
    SigmaElement zero(long level, const Rat& trunc) const;

    // concrete K-term truncation of sigma_n as an MN element,
    // trunc = -1/p^{n+K} = the valuation of the first omitted term
    MNElement sigma_concrete(long level, long K) const;

    SigmaElement add(const SigmaElement& a, const SigmaElement& b) const;
    SigmaElement neg(const SigmaElement& a) const;
    SigmaElement sub(const SigmaElement& a, const SigmaElement& b) const;
    SigmaElement mul(const SigmaElement& a, const SigmaElement& b) const;
    SigmaElement scale(const SigmaElement& a, const MNElement& m) const;
    SigmaElement scale_mono(const SigmaElement& a, const FqElem& d, const Rat& x) const;
    SigmaElement scale_rational(const SigmaElement& a, const Rat& q) const;
    SigmaElement pow(const SigmaElement& a, long k) const; // k != 0, negative ok
    SigmaElement inv(const SigmaElement& a) const;

    // rewrite sigma_n -> p^{-1/p^n} + sigma_{n+1}; lossless
    SigmaElement level_shift(const SigmaElement& a) const;
    SigmaElement to_level(const SigmaElement& a, long level) const;

    // digitwise p-th-root transport: exponents /p, digits^(1/p), level+1
    SigmaElement root_map(const SigmaElement& a) const;

    SigmaValuation valuation(const SigmaElement& a) const;

    SigmaCongruence congruent(const SigmaElement& a, const SigmaElement& b, const Rat& r) const;

    // substitute the concrete K-term sigma for the symbol
    MNElement subst(const SigmaElement& a, long K) const;

    std::string to_string(const SigmaElement& a) const;

private:
    const MNContext& mn_;

    SigmaElement mul_impl(const SigmaElement& a, const SigmaElement& b,
                          const Rat* window, Rat& fold) const;
    Rat val_bound(const SigmaElement& a) const;
};

// trim/extend an MN element to a (possibly) lower truncation
MNElement mn_restrict(const MNElement& a, const Rat& t);

} // namespace lpadic
