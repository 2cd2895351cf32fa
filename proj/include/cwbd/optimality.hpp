#pragma once

// Exact information matrices for direct and carry-over treatment effects
// under the three response models (with both period and subject effects,
// subjects only, periods only), the trace bounds they satisfy, and the
// universal-optimality verdicts those bounds support.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cwbd/constructions.hpp"
#include "cwbd/design.hpp"
#include "cwbd/exact_linalg.hpp"
#include "cwbd/matrix.hpp"

namespace cwbd {

enum class ModelId { full, subjects_only, periods_only };
enum class Effect { direct, carryover };

inline std::string to_string(ModelId m) {
    switch (m) {
        case ModelId::full: return "full";
        case ModelId::subjects_only: return "subjects";
        default: return "periods";
    }
}

inline std::string to_string(Effect e) { return e == Effect::direct ? "direct" : "carryover"; }

// C = G' w_perp(X) G for the chosen effect (G = treatment or carry-over
// incidence) with X holding the model's nuisance blocks plus the other
// incidence.  Exact, symmetric, PSD, zero row sums.
inline RationalMatrix info_matrix(const Design& d, ModelId model, Effect effect) {
    const bool periods = model != ModelId::subjects_only;
    const bool subjects = model != ModelId::periods_only;
    return detail::information_matrix_core(d, periods, subjects, effect == Effect::carryover);
}

// The four orthogonality conditions under which sweeping nuisance blocks
// costs nothing: each holds iff the named projected cross-product vanishes.
struct EqualityConditions {
    bool direct_subjects = false; // T' w_perp(F) U = 0
    bool direct_periods = false;  // T' w_perp(F) P = 0
    bool carry_subjects = false;  // F' w_perp(T) U = 0
    bool carry_periods = false;   // F' w_perp(T) P = 0
};

inline EqualityConditions equality_conditions(const Design& d) {
    detail::require_subjects(d, "equality_conditions");
    const int t = d.t, n = d.n;
    IntMatrix nc = subject_counts(d);                 // t x n
    IntMatrix ptc = period_treatment_counts(d);       // (p, i) counts
    IntMatrix s = neighbour_matrix(d).S;
    std::vector<long long> r = replications(d);

    // Inverse of diag(r) on its support: the only g-inverse piece needed.
    RationalMatrix dinv(t, t);
    for (int i = 0; i < t; ++i)
        if (r[i] != 0) dinv(i, i) = Rational(1) / r[i];

    RationalMatrix nq = nc.cast<Rational>();
    RationalMatrix sq = s.cast<Rational>();
    RationalMatrix tp(t, t), fp(t, t); // T'P and F'P
    for (int i = 0; i < t; ++i)
        for (int p = 0; p < t; ++p) {
            tp(i, p) = Rational(ptc(p, i));
            fp(i, p) = Rational(ptc((p + t - 1) % t, i));
        }

    EqualityConditions out;
    out.direct_subjects = (nq - sq * dinv * nq).is_zero();
    out.direct_periods = (tp - sq * dinv * fp).is_zero();
    RationalMatrix st = sq.transpose();
    out.carry_subjects = (nq - st * dinv * nq).is_zero();
    out.carry_periods = (fp - st * dinv * tp).is_zero();
    return out;
}

// Upper bound on the trace of the direct-effect information matrix:
// sum r_i - (1/t) sum n_iu^2 - sum_ij (s_ij - (1/t)(NN')_ij)^2 / r_j,
// with absent treatments (r_j = 0) contributing no penalty term.
inline Rational kunert_trace_bound(const Design& d) {
    detail::require_subjects(d, "kunert_trace_bound");
    const int t = d.t, n = d.n;
    IntMatrix nc = subject_counts(d);
    IntMatrix s = neighbour_matrix(d).S;
    std::vector<long long> r = replications(d);

    Rational bound(0);
    for (int i = 0; i < t; ++i) bound += r[i];
    long long sumsq = 0;
    for (int i = 0; i < t; ++i)
        for (int u = 0; u < n; ++u) sumsq += nc(i, u) * nc(i, u);
    bound -= Rational(sumsq) / t;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            if (r[j] == 0) continue;
            long long dot = 0;
            for (int u = 0; u < n; ++u) dot += nc(i, u) * nc(j, u);
            Rational dev = Rational(s(i, j)) - Rational(dot) / t;
            bound -= dev * dev / r[j];
        }
    return bound;
}

// Closed-form relaxations of the trace bound in terms of a_d alone.
inline Rational simple_bound(long long t, long long n, long long a_d) {
    if (t < 2 || n < 1 || a_d < 0) throw infeasible_error("bound needs t >= 2, n >= 1, a_d >= 0");
    return Rational(n) * (Rational(t - 1) - Rational(1) / (t - 1)) - Rational(2 * a_d) / t;
}

inline Rational sharp_bound(long long t, long long n, long long a_d) {
    if (t < 2 || n < 1 || a_d < 0) throw infeasible_error("bound needs t >= 2, n >= 1, a_d >= 0");
    if (2 * a_d > t - 1) throw infeasible_error("sharp bound needs 2*a_d <= t-1");
    Rational correction =
        Rational(t - 2 * a_d) * (Rational(t - 1) / (4 * n) - Rational(2 * a_d) / (Rational(n) * t));
    return simple_bound(t, n, a_d) - correction;
}

struct OptimalityReport {
    ModelId model = ModelId::full;
    Effect effect = Effect::direct;
    Classification classification;
    RationalMatrix info;
    Rational trace, kunert, simple;
    std::optional<Rational> sharp; // only when 2*a_d <= t-1
    long long subject_excess = 0;  // a_d
    bool completely_symmetric = false;
    EqualityConditions equalities;
    std::string verdict; // one of the four stable identifiers below
    std::vector<std::string> unmet;
};

inline constexpr const char* kVerdictAllDesigns = "all_designs";
inline constexpr const char* kVerdictEquireplicated = "equireplicated_no_self_neighbours";
inline constexpr const char* kVerdictNoSelfNeighbours = "no_self_neighbours";
inline constexpr const char* kVerdictNotEstablished = "not_established";

namespace detail {

inline std::vector<std::string> main_hypothesis_gaps(long long t, long long n) {
    std::vector<std::string> gaps;
    if (t < 5) gaps.push_back("t >= 5");
    if (t % 2 == 0) gaps.push_back("t odd");
    if ((2 * n) % (t - 1) != 0 || ((2 * n) / (t - 1)) % 2 == 0)
        gaps.push_back("n an odd multiple of (t-1)/2");
    if (2 * n < t * (t - 1)) gaps.push_back("n >= t(t-1)/2");
    return gaps;
}

} // namespace detail

// Kiefer universal-optimality verdict for the design under the given model,
// reporting the widest competing class the established results support:
// all designs, all designs without self-neighbours ("no_self_neighbours"),
// or only the equireplicated ones among those.  The same verdict applies to
// the direct and the carry-over effect.
inline OptimalityReport optimality_verdict(const Design& d, ModelId model,
                                           Effect effect = Effect::direct) {
    OptimalityReport rep;
    rep.model = model;
    rep.effect = effect;
    rep.classification = classify(d);
    rep.info = info_matrix(d, model, effect);
    rep.trace = rep.info.trace();
    rep.kunert = kunert_trace_bound(d);
    rep.subject_excess = subject_multiplicity_excess(d);
    rep.simple = simple_bound(d.t, d.n, rep.subject_excess);
    if (2 * rep.subject_excess <= d.t - 1)
        rep.sharp = sharp_bound(d.t, d.n, rep.subject_excess);
    rep.completely_symmetric = complete_symmetry(rep.info).is_completely_symmetric;
    rep.equalities = equality_conditions(d);

    const Classification& cls = rep.classification;
    if (cls.kind != DesignKind::cwbd) rep.unmet.push_back("design is a CWBD");
    if (!cls.connected) rep.unmet.push_back("design is connected");
    if (!rep.completely_symmetric) rep.unmet.push_back("information matrix completely symmetric");

    const long long t = d.t, n = d.n;
    if (rep.unmet.empty()) {
        switch (model) {
            case ModelId::subjects_only: {
                if (!cls.uniform_on_subjects) {
                    rep.unmet.push_back("design uniform on subjects");
                } else if (n <= t - 1) {
                    rep.verdict = kVerdictAllDesigns;
                } else {
                    auto gaps = detail::main_hypothesis_gaps(t, n);
                    rep.verdict = gaps.empty() ? kVerdictNoSelfNeighbours : kVerdictEquireplicated;
                }
                break;
            }
            case ModelId::periods_only: {
                if (!cls.uniform_on_periods)
                    rep.unmet.push_back("design uniform on periods");
                else if (t <= 2)
                    rep.unmet.push_back("t > 2");
                else if (n <= t - 1)
                    rep.unmet.push_back("n > t-1");
                else
                    rep.verdict = kVerdictEquireplicated;
                break;
            }
            case ModelId::full: {
                if (!cls.uniform) {
                    rep.unmet.push_back("design uniform on subjects and periods");
                } else {
                    auto gaps = detail::main_hypothesis_gaps(t, n);
                    if (gaps.empty())
                        rep.verdict = kVerdictNoSelfNeighbours;
                    else
                        rep.unmet.insert(rep.unmet.end(), gaps.begin(), gaps.end());
                }
                break;
            }
        }
    }
    if (rep.verdict.empty()) rep.verdict = kVerdictNotEstablished;
    return rep;
}

// Random design in the class Lambda: every column is a circular sequence
// with no treatment immediately following itself.  Each trial draws its own
// generator from the master seed, so results do not depend on ordering.
inline Design sample_no_self_neighbour_design(long long t, long long n, std::uint64_t trial_seed) {
    std::mt19937_64 rng(trial_seed);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(t) - 1);
    const int ti = static_cast<int>(t), ni = static_cast<int>(n);
    std::vector<std::vector<int>> cells(ti, std::vector<int>(ni));
    std::vector<int> column(ti);
    for (int u = 0; u < ni; ++u) {
        for (;;) {
            for (int p = 0; p < ti; ++p) column[p] = pick(rng);
            bool ok = true;
            for (int p = 0; p < ti && ok; ++p)
                if (column[p] == column[(p + 1) % ti]) ok = false;
            if (ok) break;
        }
        for (int p = 0; p < ti; ++p) cells[p][u] = column[p];
    }
    return Design(ti, ni, std::move(cells));
}

struct DominanceReport {
    long long t = 0, n = 0, trials = 0;
    std::uint64_t seed = 0;
    ModelId model = ModelId::full;
    Rational reference_trace;
    std::optional<Rational> max_trace; // absent when trials = 0
    long long violations = 0;
    bool all_dominated = true;
};

// Samples random no-self-neighbour designs and checks that none beats the
// catalogued reference design's information trace under the given model.
inline DominanceReport dominance_sample_test(long long t, long long n, long long trials,
                                             std::uint64_t seed, ModelId model = ModelId::full) {
    DominanceReport rep;
    rep.t = t;
    rep.n = n;
    rep.trials = trials;
    rep.seed = seed;
    rep.model = model;
    Design ref = reference_cwbd(t, n);
    rep.reference_trace = info_matrix(ref, model, Effect::direct).trace();
    for (long long trial = 0; trial < trials; ++trial) {
        std::uint64_t trial_seed = seed ^ (static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ULL);
        Design sample = sample_no_self_neighbour_design(t, n, trial_seed);
        Rational trace = info_matrix(sample, model, Effect::direct).trace();
        if (!rep.max_trace || trace > *rep.max_trace) rep.max_trace = trace;
        if (trace > rep.reference_trace) ++rep.violations;
    }
    rep.all_dominated = rep.violations == 0;
    return rep;
}

} // namespace cwbd
