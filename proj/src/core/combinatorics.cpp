#include "combinatorics.hpp"

#include <map>

namespace lpadic {

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

Rat harmonic(long k) {
    Rat h;
    for (long i = 1; i <= k; ++i) h += Rat(Int(1), Int(i));
    return h;
}

Rat falling_factorial(const Rat& x, long m) {
    Rat r(1);
    for (long i = 0; i < m; ++i) r *= (x - Rat(i));
    return r;
}

namespace {

Rat x_at(const std::vector<Rat>& xs, long i) { // 1-based, default 0
    if (i < 1 || i > (long)xs.size()) return Rat(0);
    return xs[i - 1];
}

} // namespace

Rat bell_incomplete(long n, long k, const std::vector<Rat>& xs) {
    if (n < 0 || k < 0) throw std::domain_error("bell_incomplete: negative index");
    // B[m][j] for m <= n, j <= k
    std::vector<std::vector<Rat>> B(n + 1, std::vector<Rat>(k + 1, Rat(0)));
    B[0][0] = Rat(1);
    for (long m = 1; m <= n; ++m)
        for (long j = 1; j <= k && j <= m; ++j) {
            Rat acc;
            for (long i = 1; i <= m - j + 1; ++i) {
                const Rat xi = x_at(xs, i);
                if (xi.is_zero()) continue;
                acc += Rat(binomial(m - 1, i - 1)) * xi * B[m - i][j - 1];
            }
            B[m][j] = acc;
        }
    return B[n][k];
}

namespace {

// Enumerate multi-indices (j_1..j_L) with sum j = k, sum i*j_i = n.
void multiindex_rec(long pos, long L, long rem_k, long rem_n,
                    const std::vector<Rat>& xs, std::vector<long>& j, Rat& acc,
                    const Int& nfact) {
    if (pos > L) {
        if (rem_k != 0 || rem_n != 0) return;
        Int den = 1;
        Rat term(1);
        for (long i = 1; i <= L; ++i) {
            if (j[i - 1] == 0) continue;
            den *= factorial(j[i - 1]);
            Int ifp = 1;
            Int fi = factorial(i);
            for (long t = 0; t < j[i - 1]; ++t) ifp *= fi;
            den *= ifp;
            term *= rat_pow(x_at(xs, i), j[i - 1]);
        }
        acc += Rat(nfact, den) * term;
        return;
    }
    for (long cnt = 0; cnt <= rem_k && cnt * pos <= rem_n; ++cnt) {
        j[pos - 1] = cnt;
        multiindex_rec(pos + 1, L, rem_k - cnt, rem_n - cnt * pos, xs, j, acc, nfact);
    }
    j[pos - 1] = 0;
}

} // namespace

Rat bell_incomplete_multiindex(long n, long k, const std::vector<Rat>& xs) {
    if (n == 0 && k == 0) return Rat(1);
    if (n <= 0 || k <= 0) return Rat(0);
    long L = n - k + 1;
    std::vector<long> j(L, 0);
    Rat acc;
    multiindex_rec(1, L, k, n, xs, j, acc, factorial(n));
    return acc;
}

std::vector<Rat> bell_complete_seq(const std::vector<Rat>& xs) {
    long N = (long)xs.size();
    std::vector<Rat> B(N + 1); // B[0] = 1, B[n] = complete Bell B_n
    B[0] = Rat(1);
    for (long n = 0; n + 1 <= N; ++n) {
        Rat acc;
        for (long i = 0; i <= n; ++i)
            acc += Rat(binomial(n, i)) * B[n - i] * x_at(xs, i + 1);
        B[n + 1] = acc;
    }
    return std::vector<Rat>(B.begin() + 1, B.end());
}

std::vector<Rat> bell_inverse(const std::vector<Rat>& ys, InverseMethod method) {
    long N = (long)ys.size();
    std::vector<Rat> xs(N);
    if (method == InverseMethod::Recurrence) {
        // x_{n+1} = y_{n+1} - sum_{i=0}^{n-1} C(n,i) y_{n-i} x_{i+1}
        for (long n = 0; n < N; ++n) {
            Rat acc = ys[n];
            for (long i = 0; i <= n - 1; ++i)
                acc -= Rat(binomial(n, i)) * ys[n - 1 - i] * xs[i];
            xs[n] = acc;
        }
    } else {
        // signed Riordan inversion: x_i = sum_k (-1)^{k-1} (k-1)! B_{i,k}(y)
        for (long i = 1; i <= N; ++i) {
            Rat acc;
            for (long k = 1; k <= i; ++k) {
                Rat b = bell_incomplete(i, k, ys);
                Rat term = Rat(factorial(k - 1)) * b;
                acc += (k % 2 == 1) ? term : -term;
            }
            xs[i - 1] = acc;
        }
    }
    return xs;
}

Int stirling2(long n, long k) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    // S(n,k) = S(n-1,k-1) + k S(n-1,k)
    std::vector<Int> row(k + 1, Int(0));
    row[0] = 1; // S(0,0)
    for (long m = 1; m <= n; ++m) {
        for (long j = std::min<long>(k, m); j >= 1; --j)
            row[j] = row[j - 1] + Int(j) * row[j];
        row[0] = 0;
    }
    return row[k];
}

std::vector<Rat> egf_restricted_pow(long r, long k, long N) {
    std::vector<Rat> base(N + 1), acc(N + 1);
    for (long m = 1; m <= r && m <= N; ++m) base[m] = Rat(Int(1), factorial(m));
    acc[0] = Rat(1);
    for (long t = 0; t < k; ++t) {
        std::vector<Rat> next(N + 1);
        for (long i = 0; i <= N; ++i) {
            if (acc[i].is_zero()) continue;
            for (long j = 1; j <= r && i + j <= N; ++j)
                next[i + j] += acc[i] * base[j];
        }
        acc = std::move(next);
    }
    return acc;
}

Int stirling2_restricted(long n, long k, long r) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n || r < 1) return 0;
    // n!/k! * [t^n] (sum_{m=1}^r t^m/m!)^k
    std::vector<Rat> c = egf_restricted_pow(r, k, n);
    Rat v = c[n] * Rat(factorial(n), factorial(k));
    if (!v.is_integer()) throw std::logic_error("stirling2_restricted: non-integer");
    return v.num();
}

Int stirling2_restricted_rec(long n, long k, long r) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n || r < 1) return 0;
    // recurse on the block containing the last element (size i <= r):
    // S_{<=r}(n,k) = sum_i C(n-1, i-1) S_{<=r}(n-i, k-1)
    std::map<std::pair<long, long>, Int> memo;
    struct Rec {
        long r;
        std::map<std::pair<long, long>, Int>& memo;
        Int operator()(long n, long k) {
            if (n == 0 && k == 0) return 1;
            if (n <= 0 || k <= 0 || k > n) return 0;
            auto it = memo.find({n, k});
            if (it != memo.end()) return it->second;
            Int acc = 0;
            for (long i = 1; i <= r && i <= n - k + 1; ++i)
                acc += binomial(n - 1, i - 1) * (*this)(n - i, k - 1);
            memo[{n, k}] = acc;
            return acc;
        }
    } rec{r, memo};
    return rec(n, k);
}

} // namespace lpadic
