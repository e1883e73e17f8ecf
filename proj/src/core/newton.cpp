#include "newton.hpp"

#include "combinatorics.hpp"
#include "errors.hpp"

#include <algorithm>
#include <sstream>

namespace lpadic {

Rat NewtonPolygon::s_max() const {
    if (vertices.size() < 2) fail(Err::Internal, "polygon has no face");
    const HullPoint& a = vertices[vertices.size() - 2];
    const HullPoint& b = vertices.back();
    return (b.v - a.v) / Rat(Int(b.i - a.i));
}

long NewtonPolygon::m_max() const {
    if (vertices.size() < 2) fail(Err::Internal, "polygon has no face");
    return vertices[vertices.size() - 2].i;
}

MNPoly phi_cyclotomic(const MNContext& mn, long n, const Rat& trunc) {
    if (n < 1) fail(Err::InvalidArg, "phi_cyclotomic: need n >= 1");
    long p = mn.p();
    long q = 1; // p^{n-1}
    for (long i = 1; i < n; ++i) q *= p;
    long deg = (p - 1) * q;
    MNPoly P;
    P.coeffs.resize(deg + 1, mn.zero(trunc));
    for (long k = 0; k < p; ++k) P.coeffs[deg - k * q] = mn.one(trunc);
    return P;
}

MNPoly taylor_shift(const MNContext& mn, const MNPoly& P, const FqElem& d, const Rat& s) {
    long n = P.degree();
    // ascending view: asc[i] multiplies T^i
    std::vector<const MNElement*> asc(n + 1);
    for (long i = 0; i <= n; ++i) asc[i] = &P.coeffs[n - i];
    MNPoly Q;
    Q.coeffs.resize(n + 1);
    for (long j = 0; j <= n; ++j) {
        MNElement acc = mn.zero(Rat(Int(1000000000)));
        for (long i = j; i <= n; ++i) {
            MNElement part = mn.scale_mono(*asc[i], mn.fq().pow(d, i - j), s * Rat(i - j));
            part = mn.scale_rational(part, Rat(binomial(i, j)));
            acc = mn.add(acc, part);
        }
        Q.coeffs[n - j] = std::move(acc);
    }
    return Q;
}

namespace {
// twice the signed area of (a,b,c); >0 means b lies strictly below segment ac
bool keeps_lower_convex(const HullPoint& a, const HullPoint& b, const HullPoint& c) {
    // cross product (b-a) x (c-a); for a lower hull we pop b when b is on or
    // above the segment a-c, i.e. cross <= 0 keeps only strict right turns
    Rat cross = Rat(Int(b.i - a.i)) * (c.v - a.v) - (b.v - a.v) * Rat(Int(c.i - a.i));
    return cross > Rat(0);
}

Rat hull_value_at(const std::vector<HullPoint>& hull, long i) {
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        if (hull[k].i <= i && i <= hull[k + 1].i) {
            Rat t = Rat(Int(i - hull[k].i)) / Rat(Int(hull[k + 1].i - hull[k].i));
            return hull[k].v + t * (hull[k + 1].v - hull[k].v);
        }
    }
    fail(Err::Internal, "hull_value_at: abscissa outside hull span");
}
} // namespace

NewtonPolygon newton_polygon(const MNPoly& P) {
    long n = P.degree();
    if (n < 1) fail(Err::InvalidArg, "polygon: degree must be positive");
    if (P.coeffs[0].terms.empty())
        fail(Err::Precision, "polygon: leading coefficient vanishes at working precision");
    if (P.coeffs[n].terms.empty())
        fail(Err::InvalidArg, "polygon: constant term empty; root already found");
    std::vector<HullPoint> pts;
    for (long i = 0; i <= n; ++i) {
        const MNElement& a = P.coeffs[i];
        if (!a.terms.empty()) pts.push_back({i, a.terms.front().exp});
    }
    // monotone chain, lower hull; collinear middle points are dropped so each
    // face spans its full length
    std::vector<HullPoint> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2 &&
               !keeps_lower_convex(hull[hull.size() - 2], hull[hull.size() - 1], pt))
            hull.pop_back();
        hull.push_back(pt);
    }
    // precision audit: an empty coefficient must be truncated strictly above
    // the hull, otherwise unseen terms could change the polygon
    for (long i = 0; i <= n; ++i) {
        const MNElement& a = P.coeffs[i];
        if (!a.terms.empty()) continue;
        if (i < hull.front().i || i > hull.back().i) continue;
        Rat hv = hull_value_at(hull, i);
        if (!(hv < a.trunc)) {
            std::ostringstream os;
            os << "polygon: coefficient " << i << " empty below the hull (trunc "
               << a.trunc.str() << " <= hull " << hv.str() << "); raise the working precision";
            fail(Err::Precision, os.str());
        }
    }
    return {std::move(hull)};
}

std::vector<FqElem> residue_polynomial(const MNContext& mn, const MNPoly& P,
                                       const NewtonPolygon& hull) {
    long n = P.degree();
    long m = hull.m_max();
    Rat s = hull.s_max();
    Rat vm = hull.vertices[hull.vertices.size() - 2].v; // = v(a_m)
    std::vector<FqElem> res;
    res.reserve(n - m + 1);
    for (long k = 0; k <= n - m; ++k) {
        Rat shift = -vm - s * Rat(n - m - k);
        MNElement scaled = mn.scale_mono(P.coeffs[n - k], mn.fq().one(), shift);
        res.push_back(mn.coeff_at(scaled, Rat(0)));
    }
    return res;
}

MNPoly perturb(const MNContext& mn, const MNPoly& P, const MNElement& mu) {
    if (P.coeffs.empty()) fail(Err::InvalidArg, "perturb: empty polynomial");
    long n = P.degree();
    // successive powers mu^1 .. mu^n
    std::vector<MNElement> mu_pow;
    mu_pow.reserve(n + 1);
    mu_pow.push_back(mu); // index j-1 holds mu^j
    for (long j = 2; j <= n; ++j) mu_pow.push_back(mn.mul(mu_pow.back(), mu));
    MNPoly Q;
    Q.coeffs.reserve(n + 1);
    for (long k = 0; k <= n; ++k) {
        MNElement acc = P.coeffs[k];
        for (long j = 1; j <= k; ++j) {
            MNElement part = mn.mul(P.coeffs[k - j], mu_pow[j - 1]);
            part = mn.scale_rational(part, Rat(binomial(n - k + j, j)));
            acc = mn.add(acc, part);
        }
        Q.coeffs.push_back(std::move(acc));
    }
    return Q;
}

MNElement poly_eval(const MNContext& mn, const MNPoly& P, const MNElement& x) {
    if (P.coeffs.empty()) fail(Err::InvalidArg, "poly_eval: empty polynomial");
    MNElement acc = P.coeffs[0];
    for (size_t i = 1; i < P.coeffs.size(); ++i)
        acc = mn.add(mn.mul(acc, x), P.coeffs[i]);
    return acc;
}

NewtonResult newton_run(const MNContext& mn, MNPoly P, const Rat& target, long max_steps) {
    long n = P.degree();
    NewtonResult out;
    out.exact = false;
    std::vector<std::pair<Rat, FqElem>> digits; // (exponent, digit)
    bool have_prev_slope = false, hit_target = false;
    Rat prev_slope;
    ValQ prev_rem = mn.valuation(P.coeffs[n]);
    long iter = 0;
    while (true) {
        if (P.coeffs[n].terms.empty()) {
            out.exact = true;
            break;
        }
        if (iter >= max_steps) break;
        NewtonPolygon hull = newton_polygon(P);
        Rat s = hull.s_max();
        if (have_prev_slope && !(prev_slope < s))
            fail(Err::Internal, "newton: slopes failed to increase");
        if (!(s < target)) {
            hit_target = true;
            break;
        }
        std::vector<FqElem> res = residue_polynomial(mn, P, hull);
        std::vector<FqElem> roots = mn.fq().poly_roots(res);
        if (roots.empty()) {
            std::ostringstream os;
            os << "newton: residue polynomial at slope " << s.str()
               << " has no root in F_{p^2}";
            fail(Err::NoRoot, os.str());
        }
        FqElem c = roots.front();
        P = taylor_shift(mn, P, c, s);
        ValQ rem = mn.valuation(P.coeffs[n]);
        if (!(prev_rem < rem))
            fail(Err::Internal, "newton: v(P(r)) failed to increase");
        digits.push_back({s, c});
        NewtonStepInfo info;
        info.iter = iter;
        info.slope = s;
        info.mult = n - hull.m_max();
        info.digit = c;
        info.val_remainder = rem;
        out.steps.push_back(std::move(info));
        prev_slope = s;
        have_prev_slope = true;
        prev_rem = rem;
        ++iter;
    }
    // Certified window of the digits found so far: up to `target` when the
    // loop ran to completion, otherwise up to the next (not yet extracted)
    // slope, read off the recentered polynomial.
    Rat bound = target;
    if (!out.exact && !hit_target)
        bound = std::min(target, newton_polygon(P).s_max());
    std::vector<MNTerm> terms;
    for (size_t k = 0; k < digits.size(); ++k) {
        terms.push_back({digits[k].first, digits[k].second});
        MNElement snap;
        snap.terms = terms;
        snap.trunc = (k + 1 < digits.size()) ? digits[k + 1].first : bound;
        out.steps[k].root_after = std::move(snap);
    }
    out.root.terms = std::move(terms);
    out.root.trunc = bound;
    out.reached = bound;
    return out;
}

} // namespace lpadic
