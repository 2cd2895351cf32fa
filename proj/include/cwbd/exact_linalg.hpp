#pragma once

// Exact rational linear algebra: fraction-free rank, pivoted symmetric
// decomposition (doubling as a positive-semidefiniteness certificate),
// reflexive generalized inverses, and orthogonal projectors.  No floating
// point anywhere; every identity the callers rely on holds exactly.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cwbd/errors.hpp"
#include "cwbd/matrix.hpp"

namespace cwbd {

// Instances in this library stay far below this; the cap catches runaway
// inputs before they melt the exact kernel.
inline constexpr std::size_t kMaxExactDimension = 512;

namespace detail {

inline void check_exact_dimension(std::size_t rows, std::size_t cols) {
    if (rows > kMaxExactDimension || cols > kMaxExactDimension)
        throw infeasible_error("matrix dimension exceeds the exact-arithmetic cap of " +
                               std::to_string(kMaxExactDimension));
}

} // namespace detail

// Rank by Bareiss fraction-free elimination (exact integer arithmetic,
// intermediate entries are minors of the input).
inline std::size_t rank(const BigIntMatrix& input) {
    detail::check_exact_dimension(input.rows(), input.cols());
    BigIntMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t r = 0;
    BigInt prev(1);
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a(piv, c) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(r, j));
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& m) { return rank(m.cast<BigInt>()); }

// Rational rank: scale each row to integers (row scaling preserves rank),
// then run the fraction-free elimination.
inline std::size_t rank(const RationalMatrix& m) {
    BigIntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BigInt scale(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            scale = boost::multiprecision::lcm(scale, denominator(m(i, j)));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational v = m(i, j) * Rational(scale);
            a(i, j) = numerator(v); // denominator is 1 by construction
        }
    }
    return rank(a);
}

// Pivoted symmetric decomposition M = B D B' with D diagonal and positive,
// B carrying a unit entry on each pivot row.  Succeeding with a vanishing
// residual certifies that M is positive semidefinite; the pivot list is a
// maximal principal nonsingular index set in that case.
struct PivotedLdl {
    bool positive_semidefinite = false;
    std::vector<std::size_t> pivots; // rational pivot order
    RationalMatrix b;                // m x r
    std::vector<Rational> d;         // r positive values
};

inline PivotedLdl symmetric_pivoted_ldl(const RationalMatrix& input) {
    if (input.rows() != input.cols())
        throw std::invalid_argument("symmetric_pivoted_ldl requires a square matrix");
    if (!input.is_symmetric())
        throw std::invalid_argument("symmetric_pivoted_ldl requires a symmetric matrix");
    detail::check_exact_dimension(input.rows(), input.cols());

    const std::size_t m = input.rows();
    RationalMatrix w = input;
    std::vector<bool> done(m, false);
    PivotedLdl out;
    std::vector<std::vector<Rational>> cols;

    for (;;) {
        // A negative diagonal in any Schur complement refutes semidefiniteness.
        std::size_t p = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (done[i]) continue;
            if (w(i, i) < 0) return out; // not PSD
            if (p == m && w(i, i) > 0) p = i;
        }
        if (p == m) {
            // No positive diagonal left: PSD forces the residual to vanish.
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (!done[i] && !done[j] && w(i, j) != 0) return out; // not PSD
            break;
        }
        Rational d = w(p, p);
        std::vector<Rational> col(m, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (!done[i]) col[i] = w(i, p) / d;
        for (std::size_t i = 0; i < m; ++i) {
            if (done[i] || col[i] == 0) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!done[j]) w(i, j) -= col[i] * d * col[j];
        }
        done[p] = true;
        out.pivots.push_back(p);
        out.d.push_back(d);
        cols.push_back(std::move(col));
    }

    out.b = RationalMatrix(m, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t i = 0; i < m; ++i) out.b(i, k) = cols[k][i];
    out.positive_semidefinite = true;
    return out;
}

inline bool is_positive_semidefinite(const RationalMatrix& m) {
    return symmetric_pivoted_ldl(m).positive_semidefinite;
}

// Exact inverse via Gauss-Jordan; throws on singular input.
inline RationalMatrix inverse(const RationalMatrix& input) {
    if (input.rows() != input.cols())
        throw std::invalid_argument("inverse requires a square matrix");
    detail::check_exact_dimension(input.rows(), input.cols());
    const std::size_t n = input.rows();
    RationalMatrix a = input;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) throw internal_error("inverse of singular matrix");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rational d = a(c, c);
        for (std::size_t j = 0; j < n; ++j) { a(c, j) /= d; inv(c, j) /= d; }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

namespace detail {

// Lexicographically first maximal independent row set (via rational
// elimination on a working copy).
inline std::vector<std::size_t> independent_rows(const RationalMatrix& input) {
    RationalMatrix a = input;
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> rows;
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
        // Reduce row i against the pivot rows found so far.
        // Pivot columns are tracked implicitly by re-eliminating forward.
        (void)n;
        rows.push_back(i);
        RationalMatrix sub(rows.size(), a.cols());
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (std::size_t j = 0; j < a.cols(); ++j) sub(k, j) = input(rows[k], j);
        if (rank(sub) == rows.size())
            ++r;
        else
            rows.pop_back();
    }
    return rows;
}

} // namespace detail

// Symmetric reflexive generalized inverse.  For PSD input this is
// B (B'B)^-1 D^-1 (B'B)^-1 B' from the pivoted decomposition M = B D B'
// (equivalently F (F'F)^-2 F' for any full-rank factorization M = FF');
// for symmetric indefinite input it falls back to inverting a maximal
// nonsingular principal block.  The identity M G M = M is verified before
// returning, so every caller holds a checked certificate.
inline RationalMatrix generalized_inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols() || !m.is_symmetric())
        throw std::invalid_argument("generalized_inverse requires a symmetric matrix");
    detail::check_exact_dimension(m.rows(), m.cols());
    const std::size_t n = m.rows();
    RationalMatrix g(n, n);

    PivotedLdl ldl = symmetric_pivoted_ldl(m);
    if (ldl.positive_semidefinite) {
        const std::size_t r = ldl.d.size();
        if (r > 0) {
            RationalMatrix bt = ldl.b.transpose();
            RationalMatrix core = inverse(bt * ldl.b); // (B'B)^-1
            RationalMatrix mid(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) {
                    Rational s(0);
                    for (std::size_t k = 0; k < r; ++k)
                        s += core(i, k) / ldl.d[k] * core(k, j);
                    mid(i, j) = s;
                }
            g = ldl.b * mid * bt;
        }
    } else {
        // Symmetric but indefinite: a maximal independent row set indexes a
        // nonsingular principal block A, and embedding A^-1 yields a
        // symmetric reflexive g-inverse.
        std::vector<std::size_t> idx = detail::independent_rows(m);
        const std::size_t r = idx.size();
        if (r > 0) {
            RationalMatrix a(r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) a(i, j) = m(idx[i], idx[j]);
            RationalMatrix ai = inverse(a);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) g(idx[i], idx[j]) = ai(i, j);
        }
    }

    if (m * g * m != m) throw internal_error("generalized inverse failed M G M = M");
    return g;
}

// Orthogonal projector onto the column space of M (any shape):
// w(M) = M (M'M)^- M'.  Invariant to the choice of g-inverse.
inline RationalMatrix projector(const RationalMatrix& m) {
    detail::check_exact_dimension(m.rows(), m.cols());
    if (m.cols() == 0) return RationalMatrix(m.rows(), m.rows());
    RationalMatrix mt = m.transpose();
    return m * generalized_inverse(mt * m) * mt;
}

inline RationalMatrix projector_complement(const RationalMatrix& m) {
    return RationalMatrix::identity(m.rows()) - projector(m);
}

// W' S^- W for symmetric PSD S, computed through the pivot block of the
// decomposition with two triangular solves.  Well-defined (independent of
// the g-inverse) when the columns of W lie in the column space of S, which
// holds for every Gram-block use in this library (W = X'T, S = X'X).
inline RationalMatrix psd_quadratic_form(const RationalMatrix& s, const RationalMatrix& w) {
    if (s.rows() != w.rows())
        throw std::invalid_argument("psd_quadratic_form shape mismatch");
    PivotedLdl ldl = symmetric_pivoted_ldl(s);
    if (!ldl.positive_semidefinite)
        throw std::invalid_argument("psd_quadratic_form requires a PSD matrix");
    const std::size_t r = ldl.d.size(), q = w.cols();
    RationalMatrix out(q, q);
    if (r == 0) return out;

    // L is B restricted to pivot rows in pivot order: unit lower triangular,
    // and the principal block S[p,p] factors as L D L'.
    RationalMatrix l(r, r), wp(r, q);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) l(i, j) = ldl.b(ldl.pivots[i], j);
        for (std::size_t j = 0; j < q; ++j) wp(i, j) = w(ldl.pivots[i], j);
    }
    // Solve L y = wp, scale by D^-1, solve L' v = y.
    RationalMatrix y = wp;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < i; ++k) {
            if (l(i, k) == 0) continue;
            for (std::size_t j = 0; j < q; ++j) y(i, j) -= l(i, k) * y(k, j);
        }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < q; ++j) y(i, j) /= ldl.d[i];
    for (std::size_t i = r; i-- > 0;)
        for (std::size_t k = i + 1; k < r; ++k) {
            if (l(k, i) == 0) continue;
            for (std::size_t j = 0; j < q; ++j) y(i, j) -= l(k, i) * y(k, j);
        }
    return wp.transpose() * y;
}

} // namespace cwbd
