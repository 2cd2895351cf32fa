#pragma once

// Small-integer number theory used by the field constructor and the
// Bruck-Ryser-Chowla feasibility test.  Everything here works on values
// that comfortably fit in 64 bits (t <= 2^16 and block-design parameters
// derived from it), so plain trial division is the right tool.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "cwbd/errors.hpp"

namespace cwbd {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime factorisation as (prime, exponent) pairs, ascending.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline long long isqrt_floor(long long n) {
    if (n < 0) throw internal_error("isqrt of negative value");
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(long long n) {
    if (n < 0) return false;
    long long r = isqrt_floor(n);
    return r * r == n;
}

// n = s * m^2 with s squarefree; returns s (sign preserved).
inline long long squarefree_part(long long n) {
    if (n == 0) return 0;
    long long sign = n < 0 ? -1 : 1;
    long long m = n < 0 ? -n : n;
    long long s = 1;
    for (auto [p, e] : factorize(m))
        if (e % 2 == 1) s *= p;
    return sign * s;
}

inline long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Legendre symbol (a|p) for odd prime p: +1, -1, or 0.
inline int legendre_symbol(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long r = mod_pow(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

namespace detail {

// Strips all factors p from n; returns the p-adic valuation.
inline int remove_factor(long long& n, long long p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

} // namespace detail

// Hilbert symbol (a,b)_p for nonzero integers at a finite prime p:
// +1 iff z^2 = a x^2 + b y^2 has a nontrivial p-adic solution.
// Standard formulas via p-adic valuations and unit residues.
inline int hilbert_symbol(long long a, long long b, long long p) {
    if (a == 0 || b == 0) throw internal_error("hilbert symbol needs nonzero arguments");
    long long u = a, v = b;
    int alpha = detail::remove_factor(u, p);
    int beta = detail::remove_factor(v, p);
    if (p == 2) {
        auto eps = [](long long x) { return ((x - 1) / 2) & 1; };      // (x-1)/2 mod 2
        auto omega = [](long long x) { return ((x * x - 1) / 8) & 1; }; // (x^2-1)/8 mod 2
        int e = (eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)) & 1;
        return e ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (beta & 1) s *= legendre_symbol(u, p);
    if (alpha & 1) s *= legendre_symbol(v, p);
    return s;
}

// Does z^2 = a x^2 + b y^2 have a nontrivial integer solution?
// Requires a > 0 (so the real place imposes nothing).  By Hasse-Minkowski
// this holds iff the Hilbert symbol (a,b)_p is +1 at every prime p | 2ab;
// squarefree parts suffice because square factors can be absorbed.
inline bool ternary_square_form_solvable(long long a, long long b) {
    if (a <= 0 || b == 0) throw internal_error("ternary form expects a > 0, b != 0");
    long long sa = squarefree_part(a);
    long long sb = squarefree_part(b);
    std::vector<long long> primes{2};
    for (auto [p, e] : factorize(sa < 0 ? -sa : sa))
        if (p != 2) primes.push_back(p);
    for (auto [p, e] : factorize(sb < 0 ? -sb : sb))
        if (p != 2) primes.push_back(p);
    for (long long p : primes)
        if (hilbert_symbol(sa, sb, p) != 1) return false;
    return true;
}

} // namespace cwbd
