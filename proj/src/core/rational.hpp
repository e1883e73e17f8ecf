#pragma once

/**
 * Exact rational arithmetic for the whole engine.
 *
 * Every quantity that feeds a verification (exponent, truncation, valuation,
 * congruence difference) is carried as a reduced fraction of arbitrary-precision
 * integers.  There is deliberately no floating-point fallback anywhere: a
 * valuation comparison that cannot be decided exactly is a bug, not a tolerance.
 *
 * Invariants maintained by Rat:
 *   - gcd(num, den) == 1
 *   - den > 0 (sign lives in num)
 *   - 0 is represented as 0/1
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace lpadic {

using Int = boost::multiprecision::cpp_int;

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}
    Rat(Int n) : num_(std::move(n)), den_(1) {}
    Rat(Int n, Int d);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        // cross-multiplication is exact; denominators are positive
        Int l = a.num_ * b.den_, r = b.num_ * a.den_;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // Always "num/den", e.g. "2/3", "-1/9", "0/1".  This is the canonical
    // serialization used inside element JSON.
    std::string str() const;

    // Parses both "a/b" and bare integers "a".
    static Rat parse(const std::string& s);

private:
    Int num_, den_;
    void reduce();
};

Rat rat_pow(const Rat& b, long e);

// floor/ceil to Int (exact, toward -inf / +inf)
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

// p-adic valuation of a nonzero integer; n must be != 0
long vp_int(Int n, long p);

/// A rational extended with +infinity, used for valuations of possibly-zero
/// quantities and for "exact equality" congruence witnesses.
struct ValQ {
    bool inf = false;
    Rat q;

    static ValQ infinity() { return ValQ{true, Rat()}; }
    static ValQ of(Rat v) { return ValQ{false, std::move(v)}; }

    friend bool operator==(const ValQ& a, const ValQ& b) {
        return a.inf == b.inf && (a.inf || a.q == b.q);
    }
    friend bool operator<(const ValQ& a, const ValQ& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.q < b.q;
    }
    bool operator>=(const ValQ& o) const { return !(*this < o); }

    std::string str() const; // "inf" or Rat::str()
};

// vp of a rational: vp(num) - vp(den), +inf for 0
ValQ vp_rational(const Rat& q, long p);

// Witness-facing number formatting: integers print bare ("2", "-1", "0"),
// non-integers as "num/den", infinity as "inf".
std::string report_num(const Rat& q);
std::string report_num(const ValQ& v);

} // namespace lpadic
