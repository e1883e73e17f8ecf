#pragma once

// Newton-polygon root finder for polynomials over truncated expansions.
//
// A polynomial is stored leading-first: coeffs[0]*T^n + ... + coeffs[n].
// Each iteration reads the maximal slope s of the coefficient polygon,
// solves the residue polynomial over F_{p^2} for the next digit c, appends
// [c]*p^s to the accumulated root and recenters the polynomial at it.

#include "mn.hpp"

#include <vector>

namespace lpadic {

struct MNPoly {
    std::vector<MNElement> coeffs; // leading-first
    long degree() const { return (long)coeffs.size() - 1; }
};

struct HullPoint {
    long i;  // coefficient index (abscissa)
    Rat v;   // exact valuation of that coefficient
};

struct NewtonPolygon {
    std::vector<HullPoint> vertices; // lower hull, abscissas increasing
    Rat s_max() const;               // slope of the last face
    long m_max() const;              // abscissa of the last face's left end
};

struct NewtonStepInfo {
    long iter;            // 0-based iteration index
    Rat slope;            // s_max used in this step
    long mult;            // degree of the residue polynomial (n - m_max)
    FqElem digit;         // chosen residue root (smallest enumeration index)
    ValQ val_remainder;   // v(P(r)) after recentering, i.e. v of the constant term
    MNElement root_after; // accumulated root, truncated at the next known slope
};

struct NewtonResult {
    MNElement root;                   // final accumulated root
    std::vector<NewtonStepInfo> steps;
    bool exact;     // constant term vanished identically at working precision
    Rat reached;    // slope bound certifying the digits of `root`
};

// Phi_{p^n}(T) = sum_{k=0}^{p-1} T^{k p^{n-1}}, all coefficients at `trunc`.
MNPoly phi_cyclotomic(const MNContext& mn, long n, const Rat& trunc);

// P(T + [d] p^s), exact monomial recentering.
MNPoly taylor_shift(const MNContext& mn, const MNPoly& P, const FqElem& d, const Rat& s);

// Lower convex hull of {(i, v(a_i))}. Empty coefficients are treated as
// +infinity but must be truncated strictly above the hull, otherwise the
// polygon is not determined at this precision and the call fails loudly.
NewtonPolygon newton_polygon(const MNPoly& P);

// Coefficients (constant-first) of the residue polynomial attached to the
// last face of the polygon.
std::vector<FqElem> residue_polynomial(const MNContext& mn, const MNPoly& P,
                                       const NewtonPolygon& hull);

// Run until the slope reaches `target`, the constant term vanishes, or
// `max_steps` digits have been produced. Slopes and v(P(r)) are checked to
// be strictly increasing across iterations.
NewtonResult newton_run(const MNContext& mn, MNPoly P, const Rat& target, long max_steps);

// P(T + mu) for a general recentering element, via
//   b_k = sum_{j=0}^{k} a_{k-j} C(n-k+j, j) mu^j   (indices leading-first).
MNPoly perturb(const MNContext& mn, const MNPoly& P, const MNElement& mu);

// Horner evaluation of P at x.
MNElement poly_eval(const MNContext& mn, const MNPoly& P, const MNElement& x);

} // namespace lpadic
