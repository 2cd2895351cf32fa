// Command-line frontend: constructions, verification/classification,
// optimality analysis, cycle and difference-set searches, existence
// screens, and randomized dominance sampling.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 infeasible parameters,
// 3 search budget exhausted.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cwbd/constructions.hpp"
#include "cwbd/design.hpp"
#include "cwbd/errors.hpp"
#include "cwbd/graph_search.hpp"
#include "cwbd/io.hpp"
#include "cwbd/number_theory.hpp"
#include "cwbd/optimality.hpp"

namespace {

using cwbd::io::json;

cwbd::Field field_of_prime_power(long long t) {
    auto factors = cwbd::factorize(t);
    if (factors.size() != 1) throw cwbd::infeasible_error("t must be a prime power");
    return cwbd::Field::make(factors[0].first, factors[0].second);
}

void write_matrix_file(const cwbd::IntMatrix& m, const std::string& path,
                       const std::string& format) {
    if (format == "json") {
        cwbd::io::write_text_file(path, cwbd::io::matrix_json(m).dump(2) + "\n");
    } else if (format == "csv") {
        std::string out;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j) out += ',';
                out += std::to_string(m(i, j));
            }
            out += '\n';
        }
        cwbd::io::write_text_file(path, out);
    } else {
        throw cwbd::parse_error("unknown format: " + format);
    }
}

void emit_design(const cwbd::Design& d, const std::string& out_path, const std::string& format) {
    if (!out_path.empty()) cwbd::io::write_design_file(d, out_path, format);
    std::cout << cwbd::classification_summary(cwbd::classify(d)) << "\n";
}

struct ConstructArgs {
    std::string type;
    long long t = 0;
    std::vector<int> ds;
    long long m = 0;
    long long q = -1;
    std::string out;
    std::string format = "json";
};

void run_construct(const ConstructArgs& a) {
    if (a.type == "I-prime") {
        emit_design(cwbd::construct_type1(a.t), a.out, a.format);
    } else if (a.type == "I-belle") {
        cwbd::Field f = field_of_prime_power(a.t);
        auto seq = cwbd::belle_from_primitive(f, f.primitive_element());
        emit_design(cwbd::expand_belle(seq), a.out, a.format);
    } else if (a.type == "II-ds") {
        if (a.ds.empty()) throw cwbd::infeasible_error("--ds is required for type II-ds");
        auto p = cwbd::make_difference_set(a.t, a.ds);
        emit_design(cwbd::construct_type2_ds(a.t, p), a.out, a.format);
    } else if (a.type == "cbd") {
        emit_design(cwbd::construct_cbd(a.t), a.out, a.format);
    } else if (a.type == "t3") {
        emit_design(cwbd::t3_special(), a.out, a.format);
    } else if (a.type == "III-block") {
        if (a.q < 0 || a.m < 2)
            throw cwbd::infeasible_error("type III-block needs --q >= 0 and --m >= 2");
        cwbd::Field f = field_of_prime_power(4 * a.q + 3);
        auto pattern = cwbd::type3_block(cwbd::paley_tournament(f).adjacency, a.m);
        if (a.t != 0 && a.t != pattern.t)
            throw cwbd::infeasible_error("--t disagrees with m*(4q+3)");
        if (!a.out.empty()) write_matrix_file(pattern.a2, a.out, a.format);
        std::cout << "pattern t=" << pattern.t << ", lambda=" << pattern.lambda
                  << ", k=" << pattern.k << ", n=" << pattern.n << "\n";
    } else if (a.type == "III-sdigraph") {
        if (a.q < 0) throw cwbd::infeasible_error("type III-sdigraph needs --q >= 0");
        cwbd::Field f = field_of_prime_power(4 * a.q + 3);
        auto pattern = cwbd::sdigraph_double(cwbd::paley_tournament(f).adjacency);
        if (a.t != 0 && a.t != pattern.t)
            throw cwbd::infeasible_error("--t disagrees with 8(q+1)");
        if (!a.out.empty()) write_matrix_file(pattern.a2, a.out, a.format);
        std::cout << "pattern t=" << pattern.t << ", lambda=" << pattern.lambda
                  << ", k=" << pattern.k << ", n=" << pattern.n << "\n";
    } else {
        throw cwbd::parse_error("unknown construction type: " + a.type);
    }
}

cwbd::ModelId parse_model(const std::string& name) {
    if (name == "full") return cwbd::ModelId::full;
    if (name == "subjects") return cwbd::ModelId::subjects_only;
    if (name == "periods") return cwbd::ModelId::periods_only;
    throw cwbd::parse_error("unknown model: " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular weakly balanced design toolkit"};
    app.require_subcommand(1);

    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "build a design or adjacency pattern");
    construct->add_option("--type", cons.type, "construction family")
        ->required()
        ->check(CLI::IsMember({"I-prime", "I-belle", "II-ds", "III-block", "III-sdigraph", "cbd", "t3"}));
    construct->add_option("--t", cons.t, "number of treatments");
    construct->add_option("--ds", cons.ds, "difference-set elements")->delimiter(',');
    construct->add_option("--m", cons.m, "block multiplicity");
    construct->add_option("--q", cons.q, "tournament parameter (r = 4q+3)");
    construct->add_option("--out", cons.out, "output file");
    construct->add_option("--format", cons.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string verify_path;
    auto* verify = app.add_subcommand("verify", "classify a design file");
    verify->add_option("path", verify_path, "design file (json or csv)")->required();

    std::string analyze_path, analyze_model = "full", analyze_effect = "direct", analyze_out;
    auto* analyze = app.add_subcommand("analyze", "optimality report for a design file");
    analyze->add_option("path", analyze_path, "design file (json or csv)")->required();
    analyze->add_option("--model", analyze_model, "response model")
        ->check(CLI::IsMember({"full", "subjects", "periods"}));
    analyze->add_option("--effect", analyze_effect, "effect of interest")
        ->check(CLI::IsMember({"direct", "carryover"}));
    analyze->add_option("--out", analyze_out, "also write the JSON report here");

    bool sc_gamma2 = false, sc_count_only = false;
    std::string sc_graph, sc_out;
    std::vector<int> sc_anchor;
    long long sc_budget = cwbd::kDefaultSearchBudget;
    auto* search = app.add_subcommand("search-cycles", "translate-invariant Hamiltonian cycles");
    search->add_flag("--t15-gamma2", sc_gamma2,
                     "search the doubled 7-point tournament on 15 vertices");
    search->add_option("--graph", sc_graph, "adjacency matrix JSON file");
    search->add_option("--anchor", sc_anchor, "anchor vertex prefix")->delimiter(',');
    search->add_flag("--count-only", sc_count_only, "print only the cycle count");
    search->add_option("--budget", sc_budget, "search node budget");
    search->add_option("--out", sc_out, "write cycles JSON here");

    std::string dec_graph, dec_out, dec_design_out;
    bool dec_invariant = false;
    long long dec_budget = cwbd::kDefaultSearchBudget;
    auto* decompose = app.add_subcommand("decompose", "Hamiltonian decomposition of a named graph");
    decompose->add_option("--graph", dec_graph, "graph name")
        ->required()
        ->check(CLI::IsMember({"l24", "shrikhande", "clebsch"}));
    decompose->add_flag("--invariant", dec_invariant, "use the catalogued automorphism");
    decompose->add_option("--budget", dec_budget, "search node budget");
    decompose->add_option("--out", dec_out, "write cycles JSON here");
    decompose->add_option("--design-out", dec_design_out,
                          "write the both-directions design JSON here");

    long long ds_t = 0, ds_k = 0, ds_budget = cwbd::kDefaultSearchBudget;
    std::string ds_out;
    auto* ds_search = app.add_subcommand("ds-search", "exhaustive difference-set search");
    ds_search->add_option("--t", ds_t, "group order")->required();
    ds_search->add_option("--k", ds_k, "set size")->required();
    ds_search->add_option("--budget", ds_budget, "search node budget");
    ds_search->add_option("--out", ds_out, "write sets JSON here");

    long long brc_t = 0, brc_k = 0;
    auto* brc = app.add_subcommand("brc", "symmetric 2-design existence screen");
    brc->add_option("--t", brc_t, "point count")->required();
    brc->add_option("--k", brc_k, "block size")->required();

    long long sd_t = 0, sd_n = 0, sd_trials = 0;
    std::uint64_t sd_seed = 0;
    std::string sd_model = "full", sd_out;
    auto* sample = app.add_subcommand("sample-dominance", "randomized trace-dominance check");
    sample->add_option("--t", sd_t, "number of treatments")->required();
    sample->add_option("--n", sd_n, "number of subjects")->required();
    sample->add_option("--trials", sd_trials, "number of sampled designs")->required();
    sample->add_option("--seed", sd_seed, "master seed (default 0)");
    sample->add_option("--model", sd_model, "response model")
        ->check(CLI::IsMember({"full", "subjects"}));
    sample->add_option("--out", sd_out, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            run_construct(cons);
        } else if (verify->parsed()) {
            cwbd::Design d = cwbd::io::read_design_file(verify_path);
            std::cout << cwbd::classification_summary(cwbd::classify(d)) << "\n";
        } else if (analyze->parsed()) {
            cwbd::Design d = cwbd::io::read_design_file(analyze_path);
            auto rep = cwbd::optimality_verdict(d, parse_model(analyze_model),
                                                analyze_effect == "carryover"
                                                    ? cwbd::Effect::carryover
                                                    : cwbd::Effect::direct);
            json j = cwbd::io::optimality_report_json(rep);
            std::cout << j.dump(2) << "\n";
            if (!analyze_out.empty()) cwbd::io::write_text_file(analyze_out, j.dump(2) + "\n");
        } else if (search->parsed()) {
            cwbd::CycleSet cycles;
            if (sc_gamma2) {
                cwbd::Field f7 = cwbd::Field::make(7, 1);
                cwbd::Digraph d(cwbd::double_tournament(cwbd::paley_tournament(f7).adjacency));
                cycles = cwbd::find_invariant_cycles(d, cwbd::doubled_translate_group(7), {7, 0},
                                                     sc_budget);
            } else if (!sc_graph.empty()) {
                if (sc_anchor.empty())
                    throw cwbd::parse_error("--anchor is required with --graph");
                cwbd::Digraph d(cwbd::io::read_matrix_file(sc_graph));
                cycles = cwbd::find_invariant_cycles(d, {}, sc_anchor, sc_budget);
            } else {
                throw cwbd::parse_error("choose --t15-gamma2 or --graph");
            }
            if (sc_count_only)
                std::cout << cycles.cycles.size() << "\n";
            else
                std::cout << cycles.cycles.size() << " cycles\n";
            if (!sc_out.empty())
                cwbd::io::write_text_file(sc_out, cwbd::io::cycles_json(cycles).dump() + "\n");
        } else if (decompose->parsed()) {
            cwbd::Graph g;
            std::vector<int> rotation;
            if (dec_graph == "l24") {
                g = cwbd::lattice_graph_L2_4();
                rotation = cwbd::lattice_rotation();
            } else if (dec_graph == "shrikhande") {
                g = cwbd::shrikhande_graph();
            } else {
                g = cwbd::clebsch_graph();
                rotation = cwbd::clebsch_rotation();
            }
            if (dec_invariant && rotation.empty())
                throw cwbd::infeasible_error("no catalogued automorphism for this graph");
            cwbd::CycleSet cycles = cwbd::hamiltonian_decomposition(
                g, dec_invariant ? &rotation : nullptr, dec_budget);
            cwbd::Design d = cwbd::cycles_to_design_bidirectional(cycles, g.order);
            std::cout << cycles.cycles.size() << " cycles; "
                      << cwbd::classification_summary(cwbd::classify(d)) << "\n";
            if (!dec_out.empty())
                cwbd::io::write_text_file(dec_out, cwbd::io::cycles_json(cycles).dump() + "\n");
            if (!dec_design_out.empty()) cwbd::io::write_design_file(d, dec_design_out, "json");
        } else if (ds_search->parsed()) {
            auto sets = cwbd::find_difference_sets(ds_t, ds_k, ds_budget);
            if (sets.empty()) {
                std::cout << "none found (exhaustive)\n";
            } else {
                std::cout << sets.size() << " canonical difference set"
                          << (sets.size() == 1 ? "" : "s") << "\n";
                for (const auto& s : sets) {
                    std::string line;
                    for (int e : s.elements) line += (line.empty() ? "" : ",") + std::to_string(e);
                    std::cout << "{" << line << "}\n";
                }
            }
            if (!ds_out.empty())
                cwbd::io::write_text_file(ds_out, cwbd::io::difference_sets_json(sets).dump() + "\n");
        } else if (brc->parsed()) {
            auto rep = cwbd::brc_check(brc_t, brc_k);
            if (rep.passes)
                std::cout << "passes (lambda=" << rep.lambda_ds << ")\n";
            else
                std::cout << "infeasible (" << rep.reason << ")\n";
        } else if (sample->parsed()) {
            auto rep = cwbd::dominance_sample_test(sd_t, sd_n, sd_trials, sd_seed,
                                                   parse_model(sd_model));
            std::cout << rep.trials << " trials, ";
            if (rep.max_trace)
                std::cout << "max trace " << cwbd::io::rational_to_string(*rep.max_trace) << ", ";
            std::cout << "reference " << cwbd::io::rational_to_string(rep.reference_trace) << ", "
                      << (rep.all_dominated ? "all dominated" : "DOMINANCE VIOLATED") << "\n";
            if (!sd_out.empty())
                cwbd::io::write_text_file(sd_out,
                                          cwbd::io::dominance_report_json(rep).dump(2) + "\n");
            if (!rep.all_dominated) return 1;
        }
    } catch (const cwbd::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cwbd::infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cwbd::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
