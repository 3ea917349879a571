#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolarity.hpp"
#include "error.hpp"
#include "shape.hpp"

namespace hilbertfn {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

namespace detail {

inline void check_schema(const json& j) {
    if (!j.is_object()) throw Error(Errc::parse_error, "expected a JSON object");
    if (j.contains("schema") && j.at("schema") != schema_version)
        throw Error(Errc::parse_error, "unsupported schema version " + j.at("schema").dump());
}

inline std::vector<std::vector<std::int64_t>> int_rows(const json& j) {
    if (!j.is_array()) throw Error(Errc::parse_error, "coordinates must be an array");
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw Error(Errc::parse_error, "coordinate rows must be arrays");
        std::vector<std::int64_t> v;
        for (const auto& e : row) {
            if (!e.is_number_integer()) throw Error(Errc::parse_error, "coordinates must be integers");
            v.push_back(e.get<std::int64_t>());
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace detail

/// {"schema": 1, "n": 4, "components": [{"kind": "linear", "dim": 2}, ...]}.
/// Kinds: linear (dim), point, sundial (m), degenerate-conic; every entry
/// may carry "count". Linear pieces and points accept "coords": a list of
/// generators, or a single coordinate vector for a point.
inline ConfigShape shape_from_json(const json& j) {
    try {
        detail::check_schema(j);
        ConfigShape s;
        s.n = j.at("n").get<int>();
        for (const auto& c : j.value("components", json::array())) {
            Piece p;
            const auto kind = c.at("kind").get<std::string>();
            p.count = c.value("count", 1);
            if (kind == "linear") {
                p.kind = PieceKind::linear;
                p.dim = c.at("dim").get<int>();
            } else if (kind == "point") {
                p.kind = PieceKind::point;
            } else if (kind == "sundial") {
                p.kind = PieceKind::sundial;
                p.dim = c.value("m", 1);
            } else if (kind == "degenerate-conic") {
                p.kind = PieceKind::degenerate_conic;
                p.dim = 1;
            } else {
                throw Error(Errc::parse_error, "unknown component kind '" + kind + "'");
            }
            if (c.contains("coords")) {
                const auto& cj = c.at("coords");
                if (p.kind == PieceKind::point && cj.is_array() && !cj.empty() && !cj.front().is_array())
                    p.coords = detail::int_rows(json::array({cj}));
                else
                    p.coords = detail::int_rows(cj);
            }
            s.pieces.push_back(std::move(p));
        }
        validate(s);
        return s;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad configuration JSON: ") + e.what());
    }
}

inline json shape_to_json(const ConfigShape& s) {
    json comps = json::array();
    for (const auto& p : s.pieces) {
        json c{{"kind", piece_kind_name(p.kind)}};
        if (p.kind == PieceKind::linear) c["dim"] = p.dim;
        if (p.kind == PieceKind::sundial) c["m"] = p.dim;
        if (p.count != 1) c["count"] = p.count;
        if (!p.coords.empty()) c["coords"] = p.coords;
        comps.push_back(std::move(c));
    }
    return {{"schema", schema_version}, {"n", s.n}, {"components", comps}};
}

/// {"schema": 1, "n": 3, "groups": [{"size": 2}, {"size": 3}], "d": 2};
/// "d" may also be [lo, hi]. Groups accept explicit "coords".
struct InstanceSpec {
    DecompositionInstance instance;
    int d_lo = 1, d_hi = 1;
};

inline InstanceSpec instance_from_json(const json& j) {
    try {
        detail::check_schema(j);
        InstanceSpec spec;
        spec.instance.n = j.at("n").get<int>();
        for (const auto& g : j.at("groups")) {
            GroupShape gs;
            gs.size = g.at("size").get<int>();
            if (g.contains("coords")) gs.coords = detail::int_rows(g.at("coords"));
            spec.instance.groups.push_back(std::move(gs));
        }
        if (j.contains("d")) {
            const auto& d = j.at("d");
            if (d.is_array()) {
                if (d.size() != 2) throw Error(Errc::parse_error, "\"d\" range must be [lo, hi]");
                spec.d_lo = d[0].get<int>();
                spec.d_hi = d[1].get<int>();
            } else {
                spec.d_lo = spec.d_hi = d.get<int>();
            }
        }
        if (spec.d_lo < 1 || spec.d_hi < spec.d_lo) throw Error(Errc::parse_error, "bad degree range");
        spec.instance.d = spec.d_lo;
        return spec;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad instance JSON: ") + e.what());
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, "'" + path + "' is not valid JSON: " + e.what());
    }
}

} // namespace hilbertfn
