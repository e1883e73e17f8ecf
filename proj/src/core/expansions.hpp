#pragma once

/**
 * Named closed-form elements: every concrete truncated expansion the
 * verification registry reasons about, built from first principles.
 *
 * Everything is parameterized by one digit z of multiplicative order 2(p-1);
 * by default the canonical smallest-index choice of the residue-field
 * context, overridable so a digit extracted from a Newton run (or a Galois
 * conjugate) can be used instead.  Conventions used throughout:
 *
 *   z         order 2(p-1), hence z^{p-1} = -1 and z^p = -z
 *   lambda    [z] p^{1/(p(p-1))}
 *   brackets  1/[k!] is a single Teichmueller digit; 1/k! is an honest
 *             rational whose infinite digit tail is materialized up to the
 *             build truncation
 *   U         1 + 1/(p-1)!
 *
 * Finite exact objects take their build truncation as a parameter (they are
 * exact, so any truncation is available); objects that carry a stated error
 * term fix their own truncation.
 */

#include "sigma.hpp"

namespace lpadic {

class Expansions {
public:
    explicit Expansions(const SigmaCtx& sc);
    Expansions(const SigmaCtx& sc, const FqElem& z);

    const SigmaCtx& sc() const { return sc_; }
    const MNContext& mn() const { return sc_.mn(); }
    const FqElem& zbar() const { return z_; }

    // ---- scalar and finite MN layer -------------------------------------
    Rat U() const; // 1 + 1/(p-1)!

    MNElement lambda(const Rat& trunc) const;            // [z] p^{1/(p(p-1))}
    MNElement Lambda(const Rat& trunc) const;            // sum_k z^k/[k!] p^{k/(p(p-1))}
    MNElement Lambda_hat(const Rat& trunc) const;        // sum_k z^k/k!  p^{k/(p(p-1))}
    MNElement Lambda_tilde(const Rat& trunc) const;      // sum_k z^{kp}/[k!] p^{k/(p-1)}
    MNElement Lambda_hat_tilde(const Rat& trunc) const;  // sum_k z^{kp}/k!  p^{k/(p-1)}
    MNElement Lambda_tilde_plus(const Rat& trunc) const; // Lambda_tilde + U [z] p^{1/(p-1)}
    MNElement eta(const Rat& trunc) const;               // -[z] p^{1/(p-1)}
    // sum_{j=2}^{p-1} (-1)^j/(j! j) z^{j+1} p^{1 + 1/(p-1) + j/(p(p-1))}
    MNElement kappa(const Rat& trunc) const;

    // i-th approximation of the p^2-nd primitive root of unity produced by
    // the digit-by-digit Newton iteration:
    //   i <= p-1 : sum_{k<=i} z^k/[k!] p^{k/(p(p-1))}
    //   i >= p   : Lambda + sum_{l=2}^{i-p+2} [z] p^{1/(p-1) - 1/p^l}
    MNElement zeta_p2_approx(long i, const Rat& trunc) const;

    // ---- sigma layer -----------------------------------------------------
    SigmaElement mu0(const Rat& trunc) const; // Lambda + (1+lambda)[z]p^{1/(p-1)} sigma_2
    SigmaElement mu(const Rat& trunc) const;  // Lambda (1 + [z]p^{1/(p-1)} sigma_2)
    SigmaElement W(const Rat& trunc) const;   // the case-2 comparison series
    SigmaElement M() const;                   // correction term, trunc 2/(p-1)
    // (-1)^n [z] p^{e} sigma_n (1 + (-1)^n beta [z] p^{e}),  e = 1/(p^{n-1}(p-1)),
    // truncated at 2e
    SigmaElement A_beta(long n, long beta) const;

    SigmaElement zeta_p2_first() const; // mu0 at trunc 1/(p-1) + 1/(p(p-1))
    SigmaElement zeta_p2() const;       // full expansion, trunc 2/(p-1)
    SigmaElement zeta_pn(long n) const; // general level-n form, trunc 2/(p^{n-2}(p-1))

    // ---- uniformizers ----------------------------------------------------
    struct Uniformizer {
        SigmaElement elem;
        Rat valuation; // certified exact by the sigma valuation rule
        long m = 0;
    };
    // pi^{m,1} for m >= 2; certifies the exact valuation 1/(p^m(p-1)) with
    // the valuation strictly below the element truncation, else fails loudly.
    Uniformizer uniformizer(long m) const;

private:
    const SigmaCtx& sc_;
    FqElem z_;

    long p() const { return sc_.p(); }
    FqElem zpow(long k) const;
    // append u * tau(d) * p^x, splitting vp(u) into the exponent; zero u or d
    // contributes nothing
    void push(std::vector<RawTerm>& raws, const Rat& u, const FqElem& d, const Rat& x) const;
    MNElement build(std::vector<RawTerm> raws, const Rat& trunc) const;
    static long sgn(long m) { return (m % 2 == 0) ? 1 : -1; }
};

// p^e as an exact big integer, e >= 0
Int int_pow(long p, long e);

} // namespace lpadic
