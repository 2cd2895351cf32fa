#pragma once

// Explicit families of circular weakly balanced designs and the matrix
// machinery behind them: quadratic-residue constructions, difference-set
// designs, tournament doubling, block and S-digraph expansions, plus the
// exhaustive difference-set search and the Bruck--Ryser--Chowla screen.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cwbd/design.hpp"
#include "cwbd/errors.hpp"
#include "cwbd/finite_field.hpp"
#include "cwbd/graph_search.hpp"
#include "cwbd/matrix.hpp"
#include "cwbd/number_theory.hpp"

namespace cwbd {

// Left-neighbour design from quadratic residues: treatments and periods are
// Z_t, one subject per nonzero square s (ascending), and period j of
// subject s receives j*s.  Gives a Type I design with lambda = 1 on
// n = (t-1)/2 subjects.
inline Design construct_type1(long long t) {
    if (!is_prime(t)) throw infeasible_error("t must be prime");
    if (t % 4 != 3) throw infeasible_error("t must be 3 mod 4");
    if (t == 3) throw infeasible_error("t = 3 gives a single-subject disconnected design");
    Field f = Field::make(t, 1);
    SquarePartition parts = square_partition(f);
    std::vector<int> subjects(parts.squares.begin(), parts.squares.end());
    const int ti = static_cast<int>(t);
    std::vector<std::vector<int>> cells(ti, std::vector<int>(subjects.size()));
    for (int j = 0; j < ti; ++j)
        for (std::size_t c = 0; c < subjects.size(); ++c)
            cells[j][c] = static_cast<int>((static_cast<long long>(j) * subjects[c]) % t);
    return Design(ti, static_cast<int>(subjects.size()), std::move(cells));
}

// A full-length sequence of distinct field elements whose circular
// successive differences avoid zero and split between squares and
// nonsquares as evenly as an odd count allows.
struct BelleSequence {
    Field field;
    std::vector<int> seq;   // all t field elements, each exactly once
    std::vector<int> delta; // circular successive differences
    long long f_squares = 0, f_nonsquares = 0;
};

namespace detail {

inline BelleSequence finish_belle(Field f, std::vector<int> seq) {
    BelleSequence b{std::move(f), std::move(seq), {}, 0, 0};
    const std::size_t t = b.seq.size();
    std::vector<char> seen(t, 0);
    for (int e : b.seq) {
        if (seen[e]) throw infeasible_error("sequence entries must be pairwise distinct");
        seen[e] = 1;
    }
    SquarePartition parts = square_partition(b.field);
    for (std::size_t i = 0; i < t; ++i) {
        int d = b.field.sub(b.seq[(i + 1) % t], b.seq[i]);
        if (d == 0) throw infeasible_error("sequence has a zero circular difference");
        b.delta.push_back(d);
        if (parts.squares.count(d))
            ++b.f_squares;
        else
            ++b.f_nonsquares;
    }
    long long gap = b.f_squares - b.f_nonsquares;
    if (gap != 1 && gap != -1)
        throw infeasible_error("difference counts must differ by exactly one");
    return b;
}

} // namespace detail

// Builds the sequence (x, 1, 0, x^2, x^3, ..., x^{t-2}) from the powers of
// a primitive element x, i.e. (1, x, x^2, ...) with its first two entries
// replaced by (x, 1, 0).  The result satisfies the balanced-difference
// invariant for any field of order 3 mod 4 above 3.
inline BelleSequence belle_from_primitive(const Field& f, int x) {
    const long long t = f.order();
    if (t % 4 != 3) throw infeasible_error("field order must be 3 mod 4");
    if (t == 3) throw infeasible_error("order 3 leaves no room for the substitution");
    if (!f.is_primitive(x)) throw infeasible_error("element is not primitive");
    std::vector<int> seq{x, 1, 0};
    int power = f.mul(x, x);
    for (long long e = 2; e <= t - 2; ++e) {
        seq.push_back(power);
        power = f.mul(power, x);
    }
    return detail::finish_belle(f, std::move(seq));
}

// One subject per pair (s, i) with s a nonzero square and i any field
// element: the column s*seq + i.  Subjects are ordered s-major (ascending
// square, then ascending i), giving n = t(t-1)/2 and a uniform design.
inline Design expand_belle(const BelleSequence& b) {
    const Field& f = b.field;
    const int t = static_cast<int>(f.order());
    if (b.seq.size() != static_cast<std::size_t>(t))
        throw infeasible_error("sequence must list every field element");
    detail::finish_belle(f, b.seq); // revalidate the invariant
    SquarePartition parts = square_partition(f);
    std::vector<int> squares(parts.squares.begin(), parts.squares.end());
    const int n = t * (t - 1) / 2;
    std::vector<std::vector<int>> cells(t, std::vector<int>(n));
    int col = 0;
    for (int s : squares)
        for (int i = 0; i < t; ++i, ++col)
            for (int p = 0; p < t; ++p) cells[p][col] = f.add(f.mul(s, b.seq[p]), i);
    return Design(t, n, std::move(cells));
}

// A subset of Z_t in which every nonzero residue appears equally often as a
// difference of two distinct elements.
struct DifferenceSet {
    long long t = 0;
    std::vector<int> elements; // sorted
    long long k = 0, lambda_ds = 0;
};

inline bool is_difference_set(long long t, const std::vector<int>& elements) {
    const long long k = static_cast<long long>(elements.size());
    if (t < 2 || k < 2) return false;
    if ((k * (k - 1)) % (t - 1) != 0) return false;
    const long long lambda = k * (k - 1) / (t - 1);
    std::vector<long long> count(t, 0);
    for (int x : elements)
        for (int y : elements)
            if (x != y) ++count[((x - y) % t + t) % t];
    for (long long g = 1; g < t; ++g)
        if (count[g] != lambda) return false;
    return true;
}

inline DifferenceSet make_difference_set(long long t, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    for (int x : elements)
        if (x < 0 || x >= t) throw infeasible_error("difference-set element out of range");
    if (!is_difference_set(t, elements))
        throw infeasible_error("the given set is not a difference set");
    DifferenceSet ds;
    ds.t = t;
    ds.elements = std::move(elements);
    ds.k = static_cast<long long>(ds.elements.size());
    ds.lambda_ds = ds.k * (ds.k - 1) / (t - 1);
    return ds;
}

// Difference-set design: treatments and periods are Z_t, one subject per
// element j of the set (ascending), period i of subject j receives i*j.
// Every element must avoid 0 and be coprime to t so each column is a full
// cycle through the treatments.
inline Design construct_type2_ds(long long t, const DifferenceSet& p) {
    if (p.t != t) throw infeasible_error("difference set is over the wrong group");
    for (int j : p.elements) {
        if (j == 0) throw infeasible_error("difference set must not contain 0");
        if (std::gcd(static_cast<long long>(j), t) != 1)
            throw infeasible_error("difference-set elements must be coprime to t");
    }
    const int ti = static_cast<int>(t);
    std::vector<std::vector<int>> cells(ti, std::vector<int>(p.elements.size()));
    for (int i = 0; i < ti; ++i)
        for (std::size_t c = 0; c < p.elements.size(); ++c)
            cells[i][c] = static_cast<int>((static_cast<long long>(i) * p.elements[c]) % t);
    return Design(ti, static_cast<int>(p.elements.size()), std::move(cells));
}

// Exhaustive backtracking search for difference sets of size k in Z_t, one
// canonical representative per translation orbit (the lexicographically
// smallest translate).  Elements are chosen in ascending order starting
// from the anchored 0; a partial set is abandoned as soon as any
// difference count exceeds lambda.
inline std::vector<DifferenceSet> find_difference_sets(long long t, long long k,
                                                       long long budget = kDefaultSearchBudget) {
    if (t < 3 || k < 2 || k > t) throw infeasible_error("need 2 <= k <= t and t >= 3");
    if ((k * (k - 1)) % (t - 1) != 0)
        throw infeasible_error("k(k-1) must be divisible by t-1");
    const long long lambda = k * (k - 1) / (t - 1);

    std::set<std::vector<int>> canon;
    std::vector<int> chosen{0};
    std::vector<long long> diff_count(t, 0);
    long long nodes = 0;

    auto canonical_translate = [&](const std::vector<int>& s) {
        std::vector<int> best, cur(s.size());
        for (long long i = 0; i < t; ++i) {
            for (std::size_t j = 0; j < s.size(); ++j)
                cur[j] = static_cast<int>(((s[j] + i) % t));
            std::sort(cur.begin(), cur.end());
            if (best.empty() || cur < best) best = cur;
        }
        return best;
    };

    auto add_diffs = [&](int x, long long delta) -> bool {
        bool ok = true;
        for (int y : chosen) {
            if (y == x) continue;
            long long d1 = ((x - y) % t + t) % t, d2 = ((y - x) % t + t) % t;
            diff_count[d1] += delta;
            diff_count[d2] += delta;
            if (diff_count[d1] > lambda || diff_count[d2] > lambda) ok = false;
        }
        return ok;
    };

    auto dfs = [&](auto&& self, int next_min) -> void {
        if (++nodes > budget) throw budget_error("difference-set search exceeded its node budget");
        if (chosen.size() == static_cast<std::size_t>(k)) {
            // Counts never exceed lambda and total k(k-1) = lambda(t-1), so
            // reaching full size means every count equals lambda.
            canon.insert(canonical_translate(chosen));
            return;
        }
        const long long remaining = k - static_cast<long long>(chosen.size());
        for (int x = next_min; x <= t - remaining; ++x) {
            chosen.push_back(x);
            bool ok = add_diffs(x, +1);
            if (ok) self(self, x + 1);
            add_diffs(x, -1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 1);

    std::vector<DifferenceSet> out;
    for (const auto& s : canon) out.push_back(make_difference_set(t, s));
    return out;
}

// Bruck--Ryser--Chowla screen for a symmetric 2-design with t points and
// block size k.
struct BrcReport {
    long long t = 0, k = 0, lambda_ds = 0;
    bool passes = false;
    std::string reason; // set when infeasible
};

inline BrcReport brc_check(long long t, long long k) {
    if (t < 3 || k < 2 || k >= t) throw infeasible_error("need 2 <= k < t and t >= 3");
    if ((k * (k - 1)) % (t - 1) != 0)
        throw infeasible_error("k(k-1) must be divisible by t-1");
    BrcReport rep;
    rep.t = t;
    rep.k = k;
    rep.lambda_ds = k * (k - 1) / (t - 1);
    const long long excess = k - rep.lambda_ds;
    if (t % 2 == 0) {
        if (is_perfect_square(excess)) {
            rep.passes = true;
        } else {
            rep.reason = "k-lambda=" + std::to_string(excess) + " not a square";
        }
        return rep;
    }
    // Odd t: z^2 = (k-lambda) x^2 + (-1)^((t-1)/2) lambda y^2 must have a
    // nontrivial integer solution.
    const long long b = ((t - 1) / 2) % 2 == 0 ? rep.lambda_ds : -rep.lambda_ds;
    if (ternary_square_form_solvable(excess, b)) {
        rep.passes = true;
    } else {
        rep.reason = "z^2 = " + std::to_string(excess) + " x^2 + " + std::to_string(b) +
                     " y^2 has no nontrivial solution";
    }
    return rep;
}

namespace detail {

inline void require_drt(const IntMatrix& a1, const char* op) {
    if (!drt_check(Digraph(a1)).is_drt)
        throw infeasible_error(std::string(op) + " needs a doubly regular tournament");
}

} // namespace detail

// Doubling a doubly regular tournament on r vertices into one on 2r+1:
// block rows [A1', 0, A1+I], [1', 0, 0'], [A1, 1, A1] over the vertex
// order 0..r-1, hub, primed 0..r-1.
inline IntMatrix double_tournament(const IntMatrix& a1) {
    detail::require_drt(a1, "doubling");
    const int r = static_cast<int>(a1.rows());
    const int t = 2 * r + 1;
    IntMatrix a2(t, t);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            a2(i, j) = a1(j, i);                       // A1'
            a2(i, r + 1 + j) = a1(i, j) + (i == j);    // A1 + I
            a2(r + 1 + i, j) = a1(i, j);               // A1
            a2(r + 1 + i, r + 1 + j) = a1(i, j);       // A1
        }
    for (int j = 0; j < r; ++j) a2(r, j) = 1;          // hub beats the plain copy
    for (int i = 0; i < r; ++i) a2(r + 1 + i, r) = 1;  // primed copy beats the hub
    return a2;
}

struct SkewHadamardEmbed {
    IntMatrix h;
    bool valid = false;
};

// Borders J - 2A with a row of ones and a column of minus ones (the signs
// that keep the border skew).  The result is a skew-Hadamard matrix
// (H + H' = 2I, HH' = (t+1)I) exactly when A is the adjacency matrix of a
// doubly regular tournament.
inline SkewHadamardEmbed skew_hadamard_embed(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("adjacency must be square");
    const int t = static_cast<int>(a.rows());
    for (int i = 0; i < t; ++i) {
        if (a(i, i) != 0) throw std::invalid_argument("adjacency must have zero diagonal");
        for (int j = 0; j < t; ++j)
            if (a(i, j) != 0 && a(i, j) != 1) throw std::invalid_argument("adjacency must be 0/1");
    }
    SkewHadamardEmbed out;
    out.h = IntMatrix(t + 1, t + 1);
    out.h(0, 0) = 1;
    for (int i = 0; i < t; ++i) {
        out.h(0, 1 + i) = 1;
        out.h(1 + i, 0) = -1;
        for (int j = 0; j < t; ++j) out.h(1 + i, 1 + j) = 1 - 2 * a(i, j);
    }
    IntMatrix ident2 = IntMatrix::identity(t + 1) * 2LL;
    IntMatrix identn = IntMatrix::identity(t + 1) * static_cast<long long>(t + 1);
    out.valid = (out.h + out.h.transpose() == ident2) &&
                (out.h * out.h.transpose() == identn);
    return out;
}

// Adjacency pattern (with its weak-balance parameters) built by tiling a
// doubly regular tournament on r = 4q+3 vertices m times:
// A2 = J_m (x) (I_r + A1) - I_t.  Matrix-level only: no design on these
// parameters is constructed here.
struct BlockPattern {
    IntMatrix a2;
    long long t = 0, lambda = 0, k = 0, n = 0;
};

inline BlockPattern type3_block(const IntMatrix& a1, long long m) {
    detail::require_drt(a1, "block tiling");
    if (m < 2) throw infeasible_error("block tiling needs multiplicity at least 2");
    const long long r = static_cast<long long>(a1.rows());
    const long long q = (r - 3) / 4;
    BlockPattern out;
    out.t = m * r;
    out.lambda = m * (q + 1);
    out.k = 2 * m * (q + 1) - 1;
    out.n = m * m * (4 * q + 3) * (q + 1) - m * (3 * q + 2);
    IntMatrix jm = IntMatrix::ones(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    IntMatrix core = IntMatrix::identity(static_cast<std::size_t>(r)) + a1;
    out.a2 = kronecker(jm, core) - IntMatrix::identity(static_cast<std::size_t>(out.t));
    return out;
}

// S-digraph doubling of a doubly regular tournament on r = 4q+3 vertices:
// block rows [0,1',0,0'], [0,A1,1,A1'], [0,0',0,1'], [1,A1',0,A1], an
// adjacency pattern on 2r+2 vertices whose weak-balance lambda is 2(q+1).
struct SdigraphPattern {
    IntMatrix a2;
    long long t = 0, k = 0, lambda = 0, n = 0;
};

inline SdigraphPattern sdigraph_double(const IntMatrix& a1) {
    detail::require_drt(a1, "S-digraph doubling");
    const long long r = static_cast<long long>(a1.rows());
    const long long q = (r - 3) / 4;
    SdigraphPattern out;
    out.t = 2 * r + 2;
    out.k = 4 * q + 3;
    out.lambda = 2 * (q + 1);
    out.n = 16 * q * q + 26 * q + 10;
    const int ri = static_cast<int>(r);
    IntMatrix a2(static_cast<std::size_t>(out.t), static_cast<std::size_t>(out.t));
    const int left = 1, right = ri + 2; // offsets of the two tournament copies
    for (int j = 0; j < ri; ++j) a2(0, left + j) = 1;
    for (int i = 0; i < ri; ++i) {
        a2(left + i, ri + 1) = 1;
        a2(ri + 1, right + i) = 1;
        a2(right + i, 0) = 1;
        for (int j = 0; j < ri; ++j) {
            a2(left + i, left + j) = a1(i, j);
            a2(left + i, right + j) = a1(j, i);
            a2(right + i, left + j) = a1(j, i);
            a2(right + i, right + j) = a1(i, j);
        }
    }
    out.a2 = std::move(a2);
    return out;
}

// Completely balanced baseline: one subject per nonzero s with column
// (0, s, 2s, ...), covering every ordered pair of distinct treatments
// exactly once.
inline Design construct_cbd(long long t) {
    if (!is_prime(t)) throw infeasible_error("t must be prime");
    const int ti = static_cast<int>(t);
    std::vector<std::vector<int>> cells(ti, std::vector<int>(ti - 1));
    for (int p = 0; p < ti; ++p)
        for (int s = 1; s < ti; ++s)
            cells[p][s - 1] = static_cast<int>((static_cast<long long>(p) * s) % t);
    return Design(ti, ti - 1, std::move(cells));
}

// The smallest weakly balanced design that is not completely balanced:
// three treatments, one cyclic order twice and the other once.
inline Design t3_special() {
    return Design(3, 3, {{0, 0, 0}, {1, 1, 2}, {2, 2, 1}});
}

// Catalogue lookup of a known weakly balanced design for (t, n), used as
// the dominance baseline d*.  Covers the quadratic-residue family, its
// juxtapositions with complete baselines, the full expansion, and the
// three-treatment special case.
inline Design reference_cwbd(long long t, long long n) {
    if (t == 3 && n == 3) return t3_special();
    const bool qr_prime = is_prime(t) && t % 4 == 3 && t > 3;
    if (qr_prime && n == (t - 1) / 2) return construct_type1(t);
    if (t % 4 == 3 && t > 3 && n == t * (t - 1) / 2) {
        auto factors = factorize(t);
        if (factors.size() != 1) throw infeasible_error("t must be a prime power");
        Field f = Field::make(factors[0].first, factors[0].second);
        return expand_belle(belle_from_primitive(f, f.primitive_element()));
    }
    if (qr_prime && n > (t - 1) / 2 && (2 * n) % (t - 1) == 0 && (2 * n / (t - 1)) % 2 == 1) {
        Design d = construct_type1(t);
        Design cbd = construct_cbd(t);
        long long copies = (2 * n / (t - 1) - 1) / 2;
        for (long long i = 0; i < copies; ++i) d = juxtapose(d, cbd);
        return d;
    }
    throw infeasible_error("no reference design catalogued for these parameters");
}

} // namespace cwbd
