#pragma once

/**
 * Exact combinatorial kernels: factorials, binomials, harmonic numbers,
 * incomplete/complete Bell polynomials, classical and block-size-restricted
 * Stirling numbers of the second kind, and the inverse of the Bell transform.
 *
 * Two independent evaluation routes are provided where the downstream
 * congruence checks depend on the values:
 *   - bell_incomplete: block-count recursion (primary) and the multi-index
 *     definition sum (bell_incomplete_multiindex);
 *   - stirling2_restricted: exponential-generating-function coefficient
 *     extraction (primary) and the restricted block recursion;
 *   - bell_inverse: triangular recurrence (primary) and the signed Riordan
 *     inversion formula.
 * Cross-agreement of the routes is part of the test suite and selftest.
 */

#include "rational.hpp"

#include <vector>

namespace lpadic {

Int factorial(long n);
Int binomial(long n, long k);

// H_k = 1 + 1/2 + ... + 1/k, H_0 = 0
Rat harmonic(long k);

// Falling factorial (x)_m = x(x-1)...(x-m+1), (x)_0 = 1
Rat falling_factorial(const Rat& x, long m);

// Incomplete Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).
// xs is 1-based conceptually: xs[0] = x_1.  Missing entries count as 0.
Rat bell_incomplete(long n, long k, const std::vector<Rat>& xs);
Rat bell_incomplete_multiindex(long n, long k, const std::vector<Rat>& xs);

// Complete Bell polynomials (B_1, ..., B_N) of (x_1, ..., x_N) via
// B_{n+1} = sum_{i=0}^{n} C(n,i) B_{n-i} x_{i+1}, B_0 = 1.
std::vector<Rat> bell_complete_seq(const std::vector<Rat>& xs);

enum class InverseMethod { Recurrence, Riordan };

// Unique (x_1, ..., x_N) with bell_complete_seq(x) == ys.
std::vector<Rat> bell_inverse(const std::vector<Rat>& ys,
                              InverseMethod method = InverseMethod::Recurrence);

// Stirling numbers of the second kind S(n,k) = B_{n,k}(1,1,...,1)
Int stirling2(long n, long k);

// Restricted Stirling S_{<=r}(n,k): partitions of an n-set into k blocks,
// every block of size <= r.  Equals S(n,k) whenever n-k+1 <= r.
Int stirling2_restricted(long n, long k, long r);
Int stirling2_restricted_rec(long n, long k, long r);

// Coefficients c_0..c_N of a truncated EGF product; helper exposed for tests.
// Returns the first N+1 coefficients of (sum_{m=1}^{r} t^m/m!)^k.
std::vector<Rat> egf_restricted_pow(long r, long k, long N);

} // namespace lpadic
