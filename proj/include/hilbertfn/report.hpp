#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "io.hpp"
#include "suites.hpp"

namespace hilbertfn {

enum class OutputFormat { table, csv, json };

struct ReportRow {
    std::optional<int> n, d;
    std::string s_or_shape;
    std::string hf, ideal_dim, expected; // empty when not applicable
    std::string verdict;                 // pass, fail, or empty
};

struct RunInfo {
    std::uint64_t seed = 0;
    int trials = 3;
    std::string mode = "prime-field";
};

inline const char* csv_header() { return "n,d,s_or_shape,hf,ideal_dim,expected,verdict,seed,trials,mode"; }

namespace detail {

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

} // namespace detail

/// Canonical order: by n, d, then the label.
inline void sort_rows(std::vector<ReportRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        return std::tie(a.n, a.d) < std::tie(b.n, b.d);
    });
}

inline void write_csv(std::ostream& os, const std::vector<ReportRow>& rows, const RunInfo& info) {
    os << csv_header() << "\n";
    for (const auto& r : rows) {
        os << detail::opt_int(r.n) << ',' << detail::opt_int(r.d) << ',' << detail::csv_field(r.s_or_shape) << ','
           << detail::csv_field(r.hf) << ',' << detail::csv_field(r.ideal_dim) << ',' << detail::csv_field(r.expected)
           << ',' << r.verdict << ',' << info.seed << ',' << info.trials << ',' << info.mode << "\n";
    }
}

inline json rows_to_json(const std::vector<ReportRow>& rows, const RunInfo& info) {
    json arr = json::array();
    auto cell = [](const std::string& s) -> json {
        if (s.empty()) return nullptr;
        if (s.find_first_not_of("-0123456789") == std::string::npos && s != "-") {
            try {
                return std::stoll(s);
            } catch (...) {
            }
        }
        return s;
    };
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n ? json(*r.n) : json(nullptr)},
                       {"d", r.d ? json(*r.d) : json(nullptr)},
                       {"s_or_shape", r.s_or_shape},
                       {"hf", cell(r.hf)},
                       {"ideal_dim", cell(r.ideal_dim)},
                       {"expected", cell(r.expected)},
                       {"verdict", r.verdict.empty() ? json(nullptr) : json(r.verdict)}});
    }
    return {{"schema", schema_version}, {"seed", info.seed}, {"trials", info.trials}, {"mode", info.mode}, {"rows", arr}};
}

inline void write_json(std::ostream& os, const std::vector<ReportRow>& rows, const RunInfo& info) {
    os << rows_to_json(rows, info).dump(2) << "\n";
}

/// Human-readable table. Only this format carries timing, so the machine
/// formats stay byte-identical across runs.
inline void write_table(std::ostream& os, const std::vector<ReportRow>& rows, const RunInfo& info,
                        std::optional<double> elapsed = std::nullopt) {
    const std::vector<std::string> head{"n", "d", "s_or_shape", "hf", "ideal_dim", "expected", "verdict"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({detail::opt_int(r.n), detail::opt_int(r.d), r.s_or_shape, r.hf.empty() ? "-" : r.hf,
                         r.ideal_dim.empty() ? "-" : r.ideal_dim, r.expected.empty() ? "-" : r.expected,
                         r.verdict.empty() ? "-" : r.verdict});
    std::vector<std::size_t> w(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& c : cells)
        for (std::size_t i = 0; i < c.size(); ++i) w[i] = std::max(w[i], c[i].size());
    auto line = [&](const std::vector<std::string>& c) {
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << c[i];
        os << "\n";
    };
    line(head);
    for (const auto& c : cells) line(c);
    os << "seed " << info.seed << ", trials " << info.trials << ", mode " << info.mode;
    if (elapsed) os << ", " << std::fixed << std::setprecision(2) << *elapsed << " s";
    os << "\n";
}

inline void write_report(std::ostream& os, OutputFormat fmt, const std::vector<ReportRow>& rows, const RunInfo& info,
                         std::optional<double> elapsed = std::nullopt) {
    switch (fmt) {
    case OutputFormat::table: write_table(os, rows, info, elapsed); break;
    case OutputFormat::csv: write_csv(os, rows, info); break;
    case OutputFormat::json: write_json(os, rows, info); break;
    }
}

/// One row per suite case; the label carries the suite id.
inline std::vector<ReportRow> suite_rows(const SuiteResult& s) {
    std::vector<ReportRow> rows;
    for (const auto& c : s.cases)
        rows.push_back({std::nullopt, std::nullopt, s.suite_id + ": " + c.inputs, "", c.computed, c.expected,
                        c.pass ? "pass" : "fail"});
    return rows;
}

} // namespace hilbertfn
