#pragma once

// Circular repeated-measurements designs with as many periods as
// treatments.  A design is a t x n array of treatments (period-by-subject)
// read circularly down each column: the pre-period treatment of a subject
// is its last-period treatment.  This header carries the incidence-matrix
// view, the left-neighbour count matrix S, balance classification, the
// parameter split n = (lambda-1)(t-1) + k, feasibility screens, and
// connectivity.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwbd/errors.hpp"
#include "cwbd/exact_linalg.hpp"
#include "cwbd/matrix.hpp"

namespace cwbd {

struct Design {
    int t = 0;                           // treatments == periods
    int n = 0;                           // subjects (columns); 0 only as a juxtaposition identity
    std::vector<std::vector<int>> cells; // cells[period][subject]

    Design() = default;

    Design(int t_, int n_, std::vector<std::vector<int>> cells_)
        : t(t_), n(n_), cells(std::move(cells_)) {
        if (t < 2) throw std::invalid_argument("design needs at least two treatments");
        if (n < 0) throw std::invalid_argument("design subject count cannot be negative");
        if (cells.size() != static_cast<std::size_t>(t))
            throw std::invalid_argument("design needs exactly t period rows");
        for (const auto& row : cells) {
            if (row.size() != static_cast<std::size_t>(n))
                throw std::invalid_argument("design period rows must have n entries");
            for (int v : row)
                if (v < 0 || v >= t)
                    throw std::invalid_argument("design cell out of range [0, t)");
        }
    }

    static Design empty(int t) {
        return Design(t, 0, std::vector<std::vector<int>>(t));
    }

    int at(int period, int subject) const { return cells[period][subject]; }

    // Treatment applied in the circular predecessor period.
    int pred(int period, int subject) const {
        return cells[(period + t - 1) % t][subject];
    }
};

namespace detail {

inline void require_subjects(const Design& d, const char* op) {
    if (d.n < 1) throw infeasible_error(std::string(op) + " needs at least one subject");
}

} // namespace detail

// n_{iu}: how often treatment i is assigned to subject u (t x n).
inline IntMatrix subject_counts(const Design& d) {
    IntMatrix n(d.t, d.n);
    for (int p = 0; p < d.t; ++p)
        for (int u = 0; u < d.n; ++u) ++n(d.at(p, u), u);
    return n;
}

// Replication of each treatment over the whole design.
inline std::vector<long long> replications(const Design& d) {
    std::vector<long long> r(d.t, 0);
    for (int p = 0; p < d.t; ++p)
        for (int u = 0; u < d.n; ++u) ++r[d.at(p, u)];
    return r;
}

// count[p][i]: how often treatment i appears in period p (t x t).
inline IntMatrix period_treatment_counts(const Design& d) {
    IntMatrix c(d.t, d.t);
    for (int p = 0; p < d.t; ++p)
        for (int u = 0; u < d.n; ++u) ++c(p, d.at(p, u));
    return c;
}

// The four incidence matrices of the response model, with the nt responses
// ordered period-fastest within subject 1, then subject 2, and so on.
//   T: treatment incidence          F: circular left-neighbour incidence
//   P: period incidence (1_n x I_t) U: subject incidence (I_n x 1_t)
struct DesignMatrices {
    IntMatrix T, F, P, U;
};

inline DesignMatrices build_matrices(const Design& d) {
    detail::require_subjects(d, "build_matrices");
    const int t = d.t, n = d.n;
    DesignMatrices m{IntMatrix(t * n, t), IntMatrix(t * n, t), IntMatrix(t * n, t),
                     IntMatrix(t * n, n)};
    for (int u = 0; u < n; ++u)
        for (int p = 0; p < t; ++p) {
            const std::size_t row = static_cast<std::size_t>(u) * t + p;
            m.T(row, d.at(p, u)) = 1;
            m.F(row, d.pred(p, u)) = 1;
            m.P(row, p) = 1;
            m.U(row, u) = 1;
        }
    return m;
}

// lambda = ceil(n / (t-1)) and k = n - (lambda-1)(t-1), so that a weakly
// balanced design holds k ordered pairs lambda times and the rest
// lambda - 1 times.  Returns {lambda, k} with 1 <= k <= t-1.
inline std::pair<long long, long long> k_lambda(long long t, long long n) {
    if (t < 2 || n < 1) throw infeasible_error("k_lambda needs t >= 2 and n >= 1");
    long long lambda = (n + t - 2) / (t - 1);
    long long k = n - (lambda - 1) * (t - 1);
    return {lambda, k};
}

// Left-neighbour counts: S(i,j) = number of appearances of treatment i
// immediately preceded (circularly, within a subject) by treatment j.
// Equals T'F; counted directly so no nt-row matrix is materialised.
struct NeighbourMatrix {
    IntMatrix S;
    long long lambda = 0, k = 0;
    IntMatrix A; // S' - (lambda-1)(J - I); the 0/1 excess pattern of a CWBD
};

inline NeighbourMatrix neighbour_matrix(const Design& d) {
    detail::require_subjects(d, "neighbour_matrix");
    NeighbourMatrix out;
    out.S = IntMatrix(d.t, d.t);
    for (int p = 0; p < d.t; ++p)
        for (int u = 0; u < d.n; ++u) ++out.S(d.at(p, u), d.pred(p, u));
    auto [lambda, k] = k_lambda(d.t, d.n);
    out.lambda = lambda;
    out.k = k;
    IntMatrix jmi = IntMatrix::ones(d.t, d.t) - IntMatrix::identity(d.t);
    out.A = out.S.transpose() - jmi * (lambda - 1);
    return out;
}

inline bool is_uniform_on_subjects(const Design& d) {
    if (d.n < 1) return false;
    IntMatrix n = subject_counts(d);
    for (int i = 0; i < d.t; ++i)
        for (int u = 0; u < d.n; ++u)
            if (n(i, u) != 1) return false;
    return true;
}

inline bool is_uniform_on_periods(const Design& d) {
    if (d.n < 1 || d.n % d.t != 0) return false;
    const long long per = d.n / d.t;
    IntMatrix c = period_treatment_counts(d);
    for (int p = 0; p < d.t; ++p)
        for (int i = 0; i < d.t; ++i)
            if (c(p, i) != per) return false;
    return true;
}

// a_d in the trace bounds: total excess of treatment-on-subject
// multiplicities above one.  Zero iff the design is in Lambda with every
// treatment at most once per subject... precisely, zero iff no n_{iu} > 1.
inline long long subject_multiplicity_excess(const Design& d) {
    detail::require_subjects(d, "subject_multiplicity_excess");
    IntMatrix n = subject_counts(d);
    long long a = 0;
    for (int i = 0; i < d.t; ++i)
        for (int u = 0; u < d.n; ++u)
            if (n(i, u) > 1) a += n(i, u) - 1;
    return a;
}

namespace detail {

// Information matrix for the chosen effect after sweeping out the chosen
// nuisance blocks, computed from exact integer Gram blocks:
//   C = G'G - (X'G)' (X'X)^- (X'G),
// where G is T (direct) or F (carry-over) and X stacks [P][U][other
// factor].  Equals G' w_perp(X) G without ever forming an nt x nt
// projector.  The result is checked to be symmetric PSD with zero row sums.
inline RationalMatrix information_matrix_core(const Design& d, bool with_periods,
                                              bool with_subjects, bool carryover) {
    require_subjects(d, "information matrix");
    const int t = d.t, n = d.n;
    IntMatrix ptc = period_treatment_counts(d); // P'T
    IntMatrix pfc(t, t);                        // P'F: row p counts period p-1
    for (int p = 0; p < t; ++p)
        for (int j = 0; j < t; ++j) pfc(p, j) = ptc((p + t - 1) % t, j);
    IntMatrix nc = subject_counts(d); // t x n, equal to T'U and F'U
    std::vector<long long> r = replications(d);
    IntMatrix s(t, t); // T'F
    for (int p = 0; p < t; ++p)
        for (int u = 0; u < n; ++u) ++s(d.at(p, u), d.pred(p, u));

    const IntMatrix& pg = carryover ? pfc : ptc;      // P'G
    const IntMatrix& px = carryover ? ptc : pfc;      // P'X_other
    IntMatrix sg = carryover ? s : s.transpose();     // other'G: T'F or F'T
    const int dim = (with_periods ? t : 0) + (with_subjects ? n : 0) + t;

    IntMatrix xx(dim, dim), xg(dim, t);
    int off = 0;
    if (with_periods) {
        for (int i = 0; i < t; ++i) xx(off + i, off + i) = n; // P'P
        int o2 = off + t;
        if (with_subjects) {
            for (int i = 0; i < t; ++i) // P'U = J
                for (int u = 0; u < n; ++u) xx(off + i, o2 + u) = xx(o2 + u, off + i) = 1;
            o2 += n;
        }
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                xx(off + i, o2 + j) = px(i, j);
                xx(o2 + j, off + i) = px(i, j);
            }
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) xg(off + i, j) = pg(i, j);
        off += t;
    }
    if (with_subjects) {
        for (int u = 0; u < n; ++u) xx(off + u, off + u) = t; // U'U
        int o2 = off + n;
        for (int u = 0; u < n; ++u)
            for (int j = 0; j < t; ++j) {
                xx(off + u, o2 + j) = nc(j, u); // U'F = U'T = N'
                xx(o2 + j, off + u) = nc(j, u);
            }
        for (int u = 0; u < n; ++u)
            for (int j = 0; j < t; ++j) xg(off + u, j) = nc(j, u);
        off += n;
    }
    for (int i = 0; i < t; ++i) xx(off + i, off + i) = r[i]; // other'other
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) xg(off + i, j) = sg(i, j);

    RationalMatrix c(t, t);
    for (int i = 0; i < t; ++i) c(i, i) = Rational(r[i]);
    c = c - psd_quadratic_form(xx.cast<Rational>(), xg.cast<Rational>());

    // Theory guarantees all three; enforce them as built-in certificates.
    if (!c.is_symmetric()) throw internal_error("information matrix not symmetric");
    for (int i = 0; i < t; ++i) {
        Rational row(0);
        for (int j = 0; j < t; ++j) row += c(i, j);
        if (row != 0) throw internal_error("information matrix has nonzero row sum");
    }
    if (!symmetric_pivoted_ldl(c).positive_semidefinite)
        throw internal_error("information matrix not positive semidefinite");
    return c;
}

} // namespace detail

// A design is connected when the direct-treatment information matrix of
// the subject-effects model has full contrast rank t-1.  For designs
// uniform on subjects that matrix is n I - SS'/n exactly, so the rank can
// be read off an integer matrix; otherwise the general Gram route is used.
inline bool connectivity(const Design& d) {
    detail::require_subjects(d, "connectivity");
    const std::size_t want = static_cast<std::size_t>(d.t) - 1;
    if (is_uniform_on_subjects(d)) {
        IntMatrix s = neighbour_matrix(d).S;
        BigIntMatrix m(d.t, d.t);
        BigInt n2 = BigInt(d.n) * d.n;
        for (int i = 0; i < d.t; ++i) {
            for (int j = 0; j < d.t; ++j) {
                BigInt dot(0);
                for (int l = 0; l < d.t; ++l) dot += BigInt(s(i, l)) * s(j, l);
                m(i, j) = -dot;
            }
            m(i, i) += n2;
        }
        return rank(m) == want;
    }
    return rank(detail::information_matrix_core(d, false, true, false)) == want;
}

enum class DesignKind { csbd, cbd, cwbd, none };
enum class CwbdType { type_i = 1, type_ii = 2, type_iii = 3 };

struct Classification {
    DesignKind kind = DesignKind::none;
    std::optional<CwbdType> cwbd_type; // set only when kind == cwbd
    bool uniform_on_subjects = false;
    bool uniform_on_periods = false;
    bool uniform = false;
    bool self_neighbour_free = false;
    bool connected = false;
    long long lambda = 0, k = 0;
};

// Balance taxonomy, strongest first: completely symmetric S (CSBD), then
// S = (n/(t-1))(J-I) (CBD), then the weak-balance conditions: matching row
// and column sums n, zero diagonal, off-diagonal entries in
// {lambda-1, lambda}, and SS' completely symmetric (CWBD).  A CWBD is
// Type I when A + A' = J - I, else Type II (lambda = 1) or III (lambda > 1).
inline Classification classify(const Design& d) {
    detail::require_subjects(d, "classify");
    NeighbourMatrix nb = neighbour_matrix(d);
    const IntMatrix& s = nb.S;
    const int t = d.t;
    const long long n = d.n;
    Classification cls;
    cls.lambda = nb.lambda;
    cls.k = nb.k;

    bool self_free = true;
    for (int i = 0; i < t; ++i)
        if (s(i, i) != 0) self_free = false;
    cls.self_neighbour_free = self_free;

    IntMatrix j = IntMatrix::ones(t, t);
    IntMatrix jmi = j - IntMatrix::identity(t);
    if (n % t == 0 && s == j * (n / t)) {
        cls.kind = DesignKind::csbd;
    } else if (n % (t - 1) == 0 && s == jmi * (n / (t - 1))) {
        cls.kind = DesignKind::cbd;
    } else {
        bool weak = self_free;
        for (int i = 0; i < t && weak; ++i) {
            long long row = 0, col = 0;
            for (int l = 0; l < t; ++l) { row += s(i, l); col += s(l, i); }
            if (row != n || col != n) weak = false;
        }
        for (int i = 0; i < t && weak; ++i)
            for (int l = 0; l < t; ++l) {
                if (i == l) continue;
                if (s(i, l) != nb.lambda && s(i, l) != nb.lambda - 1) { weak = false; break; }
            }
        if (weak && !complete_symmetry(s * s.transpose()).is_completely_symmetric)
            weak = false;
        if (weak) {
            cls.kind = DesignKind::cwbd;
            if (nb.A + nb.A.transpose() == jmi)
                cls.cwbd_type = CwbdType::type_i;
            else
                cls.cwbd_type = nb.lambda == 1 ? CwbdType::type_ii : CwbdType::type_iii;
        }
    }

    cls.uniform_on_subjects = is_uniform_on_subjects(d);
    cls.uniform_on_periods = is_uniform_on_periods(d);
    cls.uniform = cls.uniform_on_subjects && cls.uniform_on_periods;
    cls.connected = connectivity(d);
    return cls;
}

// Parameter-level feasibility screen for weakly balanced designs.
struct FeasibilityRecord {
    long long t = 0, n = 0, lambda = 0, k = 0;
    bool divisibility_ok = false;   // (t-1) | k(k - 2 lambda + 1)
    bool cbd_parameters = false;    // k = t-1: the completely balanced margin
    bool type3_lambda_ok = true;    // the Type III lambda cap when lambda > 1
    std::string detail;
};

inline FeasibilityRecord existence_check(long long t, long long n) {
    FeasibilityRecord rec;
    rec.t = t;
    rec.n = n;
    auto [lambda, k] = k_lambda(t, n);
    rec.lambda = lambda;
    rec.k = k;
    rec.divisibility_ok = (k * (k - 2 * lambda + 1)) % (t - 1) == 0;
    rec.cbd_parameters = k == t - 1;
    if (!rec.divisibility_ok)
        rec.detail = "k(k-2*lambda+1) not divisible by t-1";
    if (lambda > 1) {
        if (2 * k == t - 1)
            rec.type3_lambda_ok = 2 * lambda <= k + 1;
        else if (2 * k < t - 1)
            rec.type3_lambda_ok = lambda <= k;
        else
            rec.type3_lambda_ok = lambda <= t - k;
        if (!rec.type3_lambda_ok) {
            if (!rec.detail.empty()) rec.detail += "; ";
            rec.detail += "lambda exceeds the Type III cap for this k";
        }
    }
    return rec;
}

// Column-wise juxtaposition of two designs on the same treatments.
inline Design juxtapose(const Design& a, const Design& b) {
    if (a.t != b.t) throw infeasible_error("juxtapose needs matching treatment counts");
    std::vector<std::vector<int>> cells(a.t);
    for (int p = 0; p < a.t; ++p) {
        cells[p] = a.cells[p];
        cells[p].insert(cells[p].end(), b.cells[p].begin(), b.cells[p].end());
    }
    return Design(a.t, a.n + b.n, std::move(cells));
}

inline std::string to_string(DesignKind k) {
    switch (k) {
        case DesignKind::csbd: return "CSBD";
        case DesignKind::cbd: return "CBD";
        case DesignKind::cwbd: return "CWBD";
        default: return "none";
    }
}

inline std::string to_string(CwbdType t) {
    switch (t) {
        case CwbdType::type_i: return "I";
        case CwbdType::type_ii: return "II";
        default: return "III";
    }
}

// One-line human description, e.g. "CWBD Type I, uniform, lambda=4, k=3, connected".
inline std::string classification_summary(const Classification& c) {
    std::string s;
    if (c.kind == DesignKind::none)
        s = "not balanced";
    else
        s = to_string(c.kind);
    if (c.cwbd_type) s += " Type " + to_string(*c.cwbd_type);
    if (c.uniform)
        s += ", uniform";
    else if (c.uniform_on_subjects)
        s += ", uniform on subjects";
    else if (c.uniform_on_periods)
        s += ", uniform on periods";
    s += ", lambda=" + std::to_string(c.lambda) + ", k=" + std::to_string(c.k);
    s += c.connected ? ", connected" : ", disconnected";
    return s;
}

} // namespace cwbd
