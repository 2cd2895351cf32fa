#pragma once

// File formats and JSON serialization for the CLI: designs as
// {"t","n","periods"} objects or header-free CSV grids, matrices and cycle
// lists as bare JSON arrays, and report objects with every rational
// rendered exactly as "numerator/denominator".

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cwbd/constructions.hpp"
#include "cwbd/design.hpp"
#include "cwbd/graph_search.hpp"
#include "cwbd/matrix.hpp"
#include "cwbd/optimality.hpp"

namespace cwbd::io {

using json = nlohmann::ordered_json;

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
    return out.str();
}

inline json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json matrix_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json design_to_json(const Design& d) {
    json out;
    out["t"] = d.t;
    out["n"] = d.n;
    json periods = json::array();
    for (const auto& row : d.cells) periods.push_back(row);
    out["periods"] = std::move(periods);
    return out;
}

inline Design design_from_json(const json& j) {
    if (!j.is_object() || !j.contains("t") || !j.contains("n") || !j.contains("periods"))
        throw parse_error("design object needs keys t, n, periods");
    if (!j["t"].is_number_integer() || !j["n"].is_number_integer())
        throw parse_error("t and n must be integers");
    const int t = j["t"].get<int>();
    const int n = j["n"].get<int>();
    if (!j["periods"].is_array())
        throw parse_error("periods must be an array of period rows");
    std::vector<std::vector<int>> cells;
    for (const auto& row : j["periods"]) {
        if (!row.is_array()) throw parse_error("each period row must be an array");
        std::vector<int> r;
        for (const auto& cell : row) {
            if (!cell.is_number_integer()) throw parse_error("design cells must be integers");
            r.push_back(cell.get<int>());
        }
        cells.push_back(std::move(r));
    }
    try {
        return Design(t, n, std::move(cells));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline std::string design_to_csv(const Design& d) {
    std::ostringstream out;
    for (int p = 0; p < d.t; ++p) {
        for (int u = 0; u < d.n; ++u) {
            if (u) out << ',';
            out << d.cells[p][u];
        }
        out << '\n';
    }
    return out.str();
}

inline Design design_from_csv(const std::string& text) {
    std::vector<std::vector<int>> cells;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty()) continue;
        std::vector<int> row;
        std::istringstream fields(line);
        std::string field;
        std::size_t col = 0;
        while (std::getline(fields, field, ',')) {
            ++col;
            try {
                std::size_t used = 0;
                int value = std::stoi(field, &used);
                while (used < field.size() &&
                       (field[used] == ' ' || field[used] == '\t'))
                    ++used;
                if (used != field.size()) throw std::invalid_argument("trailing characters");
                row.push_back(value);
            } catch (const std::exception&) {
                throw parse_error("cell is not an integer", lineno, col);
            }
        }
        if (!cells.empty() && row.size() != cells.front().size())
            throw parse_error("rows have differing cell counts", lineno, 1);
        cells.push_back(std::move(row));
    }
    if (cells.empty()) throw parse_error("design file is empty");
    const int t = static_cast<int>(cells.size());
    const int n = static_cast<int>(cells.front().size());
    try {
        return Design(t, n, std::move(cells));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write file: " + path);
    out << content;
    if (!out) throw parse_error("write failed: " + path);
}

// Dispatches on extension; anything that is neither .json nor .csv is
// sniffed by its first non-space byte.
inline Design read_design_file(const std::string& path) {
    std::string text = read_text_file(path);
    bool as_json;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        as_json = true;
    } else if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        as_json = false;
    } else {
        std::size_t i = text.find_first_not_of(" \t\r\n");
        as_json = i != std::string::npos && text[i] == '{';
    }
    if (as_json) {
        try {
            return design_from_json(json::parse(text));
        } catch (const json::parse_error& e) {
            throw parse_error(e.what()); // nlohmann already reports line/column
        }
    }
    return design_from_csv(text);
}

inline void write_design_file(const Design& d, const std::string& path, const std::string& format) {
    if (format == "json")
        write_text_file(path, design_to_json(d).dump(2) + "\n");
    else if (format == "csv")
        write_text_file(path, design_to_csv(d));
    else
        throw parse_error("unknown format: " + format);
}

inline json cycles_json(const CycleSet& cs) {
    json out = json::array();
    for (const auto& c : cs.cycles) out.push_back(c);
    return out;
}

inline json classification_json(const Classification& c) {
    json out;
    out["kind"] = to_string(c.kind);
    if (c.cwbd_type)
        out["cwbd_type"] = to_string(*c.cwbd_type);
    else
        out["cwbd_type"] = nullptr;
    out["uniform_on_subjects"] = c.uniform_on_subjects;
    out["uniform_on_periods"] = c.uniform_on_periods;
    out["uniform"] = c.uniform;
    out["self_neighbour_free"] = c.self_neighbour_free;
    out["connected"] = c.connected;
    out["lambda"] = c.lambda;
    out["k"] = c.k;
    return out;
}

inline json equality_json(const EqualityConditions& e) {
    json out;
    out["direct_subjects"] = e.direct_subjects;
    out["direct_periods"] = e.direct_periods;
    out["carry_subjects"] = e.carry_subjects;
    out["carry_periods"] = e.carry_periods;
    return out;
}

inline json optimality_report_json(const OptimalityReport& r) {
    json out;
    out["model"] = to_string(r.model);
    out["effect"] = to_string(r.effect);
    out["classification"] = classification_json(r.classification);
    out["info_matrix"] = matrix_json(r.info);
    out["trace"] = rational_to_string(r.trace);
    out["kunert_bound"] = rational_to_string(r.kunert);
    out["simple_bound"] = rational_to_string(r.simple);
    if (r.sharp) out["sharp_bound"] = rational_to_string(*r.sharp);
    out["subject_excess"] = r.subject_excess;
    out["completely_symmetric"] = r.completely_symmetric;
    out["equality_conditions"] = equality_json(r.equalities);
    out["verdict"] = r.verdict;
    out["unmet"] = r.unmet;
    return out;
}

inline json dominance_report_json(const DominanceReport& r) {
    json out;
    out["t"] = r.t;
    out["n"] = r.n;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["model"] = to_string(r.model);
    out["reference_trace"] = rational_to_string(r.reference_trace);
    if (r.max_trace) out["max_trace"] = rational_to_string(*r.max_trace);
    out["violations"] = r.violations;
    out["all_dominated"] = r.all_dominated;
    return out;
}

inline json feasibility_json(const FeasibilityRecord& rec) {
    json out;
    out["t"] = rec.t;
    out["n"] = rec.n;
    out["lambda"] = rec.lambda;
    out["k"] = rec.k;
    out["divisibility_ok"] = rec.divisibility_ok;
    out["cbd_parameters"] = rec.cbd_parameters;
    out["type3_lambda_ok"] = rec.type3_lambda_ok;
    out["detail"] = rec.detail;
    return out;
}

inline json brc_json(const BrcReport& rep) {
    json out;
    out["t"] = rep.t;
    out["k"] = rep.k;
    out["lambda"] = rep.lambda_ds;
    out["passes"] = rep.passes;
    out["reason"] = rep.reason;
    return out;
}

inline json difference_sets_json(const std::vector<DifferenceSet>& sets) {
    json out = json::array();
    for (const auto& s : sets) out.push_back(s.elements);
    return out;
}

inline IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix must be a non-empty array of rows");
    std::size_t cols = 0;
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw parse_error("matrix rows must be arrays");
        std::vector<long long> r;
        for (const auto& cell : row) {
            if (!cell.is_number_integer()) throw parse_error("matrix entries must be integers");
            r.push_back(cell.get<long long>());
        }
        if (rows.empty())
            cols = r.size();
        else if (r.size() != cols)
            throw parse_error("matrix rows have differing lengths");
        rows.push_back(std::move(r));
    }
    if (cols == 0) throw parse_error("matrix rows must be non-empty");
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j2 = 0; j2 < cols; ++j2) m(i, j2) = rows[i][j2];
    return m;
}

inline IntMatrix read_matrix_file(const std::string& path) {
    try {
        return int_matrix_from_json(json::parse(read_text_file(path)));
    } catch (const json::parse_error& e) {
        throw parse_error(e.what());
    }
}

} // namespace cwbd::io
