#pragma once

// GF(p^k) in a polynomial basis over a deterministic modulus.  Elements
// travel as integer codes 0..p^k-1 via the radix-p map sum c_i p^i of
// their coefficient vectors, which doubles as the serialized form and as
// the canonical element order (highest-degree coefficient most
// significant).  t = p^k is capped at 2^16, so table-free schoolbook
// arithmetic is plenty.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cwbd/errors.hpp"
#include "cwbd/number_theory.hpp"

namespace cwbd {

inline constexpr long long kMaxFieldOrder = 1LL << 16;

class Field {
public:
    // Builds GF(p^k).  The modulus is the first monic irreducible of
    // degree k in encoding order (for k = 1 this is the polynomial x).
    static Field make(long long p, long long k) {
        if (!is_prime(p)) throw infeasible_error("field characteristic must be prime");
        if (k < 1) throw infeasible_error("field extension degree must be at least 1");
        long long order = 1;
        for (long long i = 0; i < k; ++i) {
            order *= p;
            if (order > kMaxFieldOrder) throw infeasible_error("field order exceeds the 2^16 cap");
        }
        Field f;
        f.p_ = p;
        f.k_ = k;
        f.order_ = order;
        f.modulus_ = f.find_modulus();
        return f;
    }

    // Convenience for GF(t) with t a prime power.
    static Field of_order(long long t) {
        auto fac = factorize(t);
        if (t < 2 || fac.size() != 1)
            throw infeasible_error("field order must be a prime power");
        return make(fac[0].first, fac[0].second);
    }

    long long p() const { return p_; }
    long long extension_degree() const { return k_; }
    long long order() const { return order_; }

    // Monic modulus, coefficients by ascending degree (size k+1, top = 1).
    const std::vector<long long>& modulus_poly() const { return modulus_; }

    std::vector<long long> coeffs_of(long long a) const {
        check_element(a);
        std::vector<long long> c(k_);
        for (long long i = 0; i < k_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    }

    long long element_from_coeffs(const std::vector<long long>& c) const {
        long long a = 0;
        for (std::size_t i = c.size(); i-- > 0;) {
            long long digit = ((c[i] % p_) + p_) % p_;
            a = a * p_ + digit;
        }
        check_element(a);
        return a;
    }

    long long add(long long a, long long b) const {
        check_element(a); check_element(b);
        if (k_ == 1) return (a + b) % p_;
        long long r = 0, mult = 1;
        for (long long i = 0; i < k_; ++i) {
            r += (a % p_ + b % p_) % p_ * mult;
            a /= p_; b /= p_; mult *= p_;
        }
        return r;
    }

    long long neg(long long a) const {
        check_element(a);
        if (k_ == 1) return (p_ - a) % p_;
        long long r = 0, mult = 1;
        for (long long i = 0; i < k_; ++i) {
            r += (p_ - a % p_) % p_ * mult;
            a /= p_; mult *= p_;
        }
        return r;
    }

    long long sub(long long a, long long b) const { return add(a, neg(b)); }

    long long mul(long long a, long long b) const {
        check_element(a); check_element(b);
        if (k_ == 1) return a * b % p_;
        std::vector<long long> ca = coeffs_of(a), cb = coeffs_of(b);
        std::vector<long long> prod(2 * k_ - 1, 0);
        for (long long i = 0; i < k_; ++i) {
            if (ca[i] == 0) continue;
            for (long long j = 0; j < k_; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
        reduce(prod);
        prod.resize(k_);
        return element_from_coeffs(prod);
    }

    long long pow(long long a, long long e) const {
        check_element(a);
        if (e < 0) throw internal_error("negative field exponent");
        long long r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    long long inv(long long a) const {
        check_element(a);
        if (a == 0) throw infeasible_error("zero has no inverse");
        return pow(a, order_ - 2);
    }

    long long multiplicative_order(long long a) const {
        check_element(a);
        if (a == 0) throw infeasible_error("zero has no multiplicative order");
        long long n = order_ - 1;
        for (auto [q, e] : factorize(n))
            while (n % q == 0 && pow(a, n / q) == 1) n /= q;
        return n;
    }

    bool is_primitive(long long a) const {
        return a != 0 && multiplicative_order(a) == order_ - 1;
    }

    // Smallest element (in encoding order) generating the whole
    // multiplicative group.
    long long primitive_element() const {
        for (long long a = 1; a < order_; ++a)
            if (is_primitive(a)) return a;
        throw internal_error("no primitive element found"); // unreachable
    }

private:
    void check_element(long long a) const {
        if (a < 0 || a >= order_) throw internal_error("field element code out of range");
    }

    // Reduce a coefficient vector (ascending degree) modulo the modulus.
    void reduce(std::vector<long long>& c) const {
        for (std::size_t d = c.size(); d-- > static_cast<std::size_t>(k_);) {
            long long f = c[d] % p_;
            if (f == 0) continue;
            c[d] = 0;
            for (long long i = 0; i < k_; ++i)
                c[d - k_ + i] = ((c[d - k_ + i] - f * modulus_[i]) % p_ + p_) % p_;
        }
    }

    // Polynomial remainder of a by b over GF(p), both ascending-degree.
    static std::vector<long long> poly_mod(std::vector<long long> a,
                                           const std::vector<long long>& b, long long p) {
        long long db = static_cast<long long>(b.size()) - 1;
        long long lead_inv = 1;
        { // inverse of b's leading coefficient mod p
            long long lead = b[db] % p;
            lead_inv = mod_pow(lead, p - 2, p);
        }
        for (long long da = static_cast<long long>(a.size()) - 1; da >= db; --da) {
            long long f = a[da] % p * lead_inv % p;
            if (f == 0) continue;
            for (long long i = 0; i <= db; ++i)
                a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
        }
        a.resize(db);
        return a;
    }

    static bool poly_is_zero(const std::vector<long long>& a) {
        return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
    }

    // Irreducibility over GF(p) by trial division against every monic
    // polynomial of degree 1..deg/2.
    static bool poly_irreducible(const std::vector<long long>& poly, long long p) {
        long long deg = static_cast<long long>(poly.size()) - 1;
        for (long long d = 1; d <= deg / 2; ++d) {
            long long count = 1;
            for (long long i = 0; i < d; ++i) count *= p;
            for (long long code = 0; code < count; ++code) {
                std::vector<long long> div(d + 1, 0);
                long long c = code;
                for (long long i = 0; i < d; ++i) { div[i] = c % p; c /= p; }
                div[d] = 1;
                if (poly_is_zero(poly_mod(poly, div, p))) return false;
            }
        }
        return true;
    }

    std::vector<long long> find_modulus() const {
        if (k_ == 1) return {0, 1}; // the polynomial x
        for (long long code = 0; code < order_; ++code) {
            std::vector<long long> poly(k_ + 1, 0);
            long long c = code;
            for (long long i = 0; i < k_; ++i) { poly[i] = c % p_; c /= p_; }
            poly[k_] = 1;
            if (poly_irreducible(poly, p_)) return poly;
        }
        throw internal_error("no irreducible modulus found"); // unreachable
    }

    long long p_ = 0, k_ = 0, order_ = 0;
    std::vector<long long> modulus_;
};

// The squares/nonsquares partition of GF(t)*, t odd.
struct SquarePartition {
    std::set<long long> squares;
    std::set<long long> nonsquares;
};

inline SquarePartition square_partition(const Field& f) {
    if (f.p() == 2)
        throw infeasible_error("square partition undefined in even characteristic");
    SquarePartition part;
    for (long long y = 1; y < f.order(); ++y) part.squares.insert(f.mul(y, y));
    for (long long a = 1; a < f.order(); ++a)
        if (!part.squares.count(a)) part.nonsquares.insert(a);
    return part;
}

} // namespace cwbd
