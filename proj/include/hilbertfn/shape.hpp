#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"
#include "polyspace.hpp"
#include "schemes.hpp"

namespace hilbertfn {

enum class PieceKind { linear, point, sundial, degenerate_conic };

inline const char* piece_kind_name(PieceKind k) {
    switch (k) {
    case PieceKind::linear: return "linear";
    case PieceKind::point: return "point";
    case PieceKind::sundial: return "sundial";
    case PieceKind::degenerate_conic: return "degenerate-conic";
    }
    return "?";
}

/// One entry of a configuration recipe. `dim` is the dimension of a linear
/// piece, or m (the dimension of Pi) for a sundial. `coords` optionally fixes
/// the generators of a linear piece or the coordinates of a point; absent
/// coordinates mean "sample generically".
struct Piece {
    PieceKind kind = PieceKind::linear;
    int dim = 0;
    int count = 1;
    std::vector<std::vector<std::int64_t>> coords;
};

/// A recipe for a configuration: which pieces, how many, in which P^n.
struct ConfigShape {
    int n = 0;
    std::vector<Piece> pieces;

    ConfigShape& add(PieceKind kind, int dim, int count = 1) {
        if (count > 0) pieces.push_back({kind, dim, count, {}});
        return *this;
    }
    ConfigShape& lines(int count) { return add(PieceKind::linear, 1, count); }
    ConfigShape& planes(int count) { return add(PieceKind::linear, 2, count); }
    ConfigShape& points(int count) { return add(PieceKind::point, 0, count); }
    ConfigShape& sundials(int count, int m = 1) { return add(PieceKind::sundial, m, count); }
    ConfigShape& conics(int count) { return add(PieceKind::degenerate_conic, 1, count); }

    bool empty() const {
        return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.count == 0; });
    }

    std::string describe() const {
        std::ostringstream os;
        os << "P" << n << ":";
        bool first = true;
        for (const auto& p : pieces) {
            os << (first ? " " : " + ") << p.count << " ";
            switch (p.kind) {
            case PieceKind::linear:
                if (p.dim == 1) os << "line";
                else if (p.dim == 2) os << "plane";
                else os << p.dim << "-space";
                break;
            case PieceKind::point: os << "point"; break;
            case PieceKind::sundial: os << (p.dim == 1 ? "sundial" : std::to_string(p.dim) + "-sundial"); break;
            case PieceKind::degenerate_conic: os << "conic"; break;
            }
            if (p.count != 1) os << "s";
            first = false;
        }
        if (first) os << " empty";
        return os.str();
    }
};

/// Conditions a single piece is expected to impose on degree-d forms: its
/// Hilbert polynomial, with a sundial counted as the disjoint L + Pi it
/// degenerates from and a degenerate conic as two lines minus their common point.
inline BigInt piece_conditions(const Piece& p, int d) {
    if (d < 0) return 0;
    BigInt one;
    switch (p.kind) {
    case PieceKind::linear: one = binomial(d + p.dim, p.dim); break;
    case PieceKind::point: one = 1; break;
    case PieceKind::sundial: one = binomial(d + p.dim, p.dim) + (d + 1); break;
    case PieceKind::degenerate_conic: one = 2 * d + 1; break;
    }
    return one * p.count;
}

/// Sum of the pieces' Hilbert polynomials at d (no intersection correction).
inline BigInt naive_hilbert_polynomial(const ConfigShape& shape, int d) {
    BigInt total = 0;
    for (const auto& p : shape.pieces) total += piece_conditions(p, d);
    return total;
}

/// max{0, C(n+d, n) - sum of expected conditions}.
inline BigInt expected_ideal_dim(const ConfigShape& shape, int d) {
    if (d < 0) return 0;
    const BigInt ambient = binomial(shape.n + d, shape.n);
    const BigInt diff = ambient - naive_hilbert_polynomial(shape, d);
    return diff > 0 ? diff : BigInt(0);
}

inline BigInt expected_ideal_dim(int n, int d, const std::vector<int>& linear_dims, int points,
                                 const std::vector<int>& sundial_ms = {}, int conics = 0) {
    ConfigShape s{n, {}};
    for (int m : linear_dims) s.add(PieceKind::linear, m);
    s.points(points);
    for (int m : sundial_ms) s.sundials(1, m);
    s.conics(conics);
    return expected_ideal_dim(s, d);
}

namespace detail {

inline std::string trim(std::string s) {
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

} // namespace detail

/// Parses "P<n>: [<k>] kind [+ [<k>] kind ...]" where kind is one of point,
/// line, plane, solid, <m>-space, sundial, <m>-sundial, conic (plurals
/// accepted). "P<n>: empty" or "P<n>:" is the empty configuration.
inline ConfigShape parse_shorthand(const std::string& text) {
    std::string s = text;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    static const std::regex head(R"(^\s*p\s*(\d+)\s*:(.*)$)");
    std::smatch m;
    if (!std::regex_match(s, m, head)) throw Error(Errc::parse_error, "expected 'P<n>: ...', got '" + text + "'");
    ConfigShape shape;
    shape.n = std::stoi(m[1].str());
    const std::string body = detail::trim(m[2].str());
    if (body.empty() || body == "empty") return shape;

    static const std::regex term(
        R"(^(?:(\d+)\s*)?(?:(point|line|plane|solid|sundial|conic|degenerate conic)s?|(\d+)-spaces?|(\d+)-sundials?)$)");
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, '+')) {
        item = detail::trim(item);
        std::smatch t;
        if (!std::regex_match(item, t, term)) throw Error(Errc::parse_error, "cannot parse term '" + item + "'");
        const int count = t[1].matched ? std::stoi(t[1].str()) : 1;
        if (t[2].matched) {
            const std::string kind = t[2].str();
            if (kind == "point") shape.add(PieceKind::point, 0, count);
            else if (kind == "line") shape.add(PieceKind::linear, 1, count);
            else if (kind == "plane") shape.add(PieceKind::linear, 2, count);
            else if (kind == "solid") shape.add(PieceKind::linear, 3, count);
            else if (kind == "sundial") shape.add(PieceKind::sundial, 1, count);
            else shape.add(PieceKind::degenerate_conic, 1, count);
        } else if (t[3].matched) {
            shape.add(PieceKind::linear, std::stoi(t[3].str()), count);
        } else {
            shape.add(PieceKind::sundial, std::stoi(t[4].str()), count);
        }
    }
    return shape;
}

inline void validate(const ConfigShape& shape) {
    if (shape.n < 1) throw Error(Errc::dimension_mismatch, "ambient dimension must be >= 1");
    for (const auto& p : shape.pieces) {
        if (p.count < 0) throw Error(Errc::bound_violation, "negative piece count");
        switch (p.kind) {
        case PieceKind::linear:
            if (p.dim < 0 || p.dim > shape.n) throw Error(Errc::dimension_mismatch, "linear piece dimension out of range");
            break;
        case PieceKind::point: break;
        case PieceKind::sundial:
            if (p.dim < 1 || shape.n < p.dim + 2) throw Error(Errc::dimension_mismatch, "sundial needs 1 <= m <= n - 2");
            break;
        case PieceKind::degenerate_conic:
            if (shape.n < 2) throw Error(Errc::dimension_mismatch, "degenerate conic needs n >= 2");
            break;
        }
        if (!p.coords.empty()) {
            if (p.count != 1) throw Error(Errc::parse_error, "explicit coordinates need count 1");
            if (p.kind == PieceKind::sundial || p.kind == PieceKind::degenerate_conic)
                throw Error(Errc::parse_error, "explicit coordinates are only accepted for linear pieces and points");
            const std::size_t expect = p.kind == PieceKind::point ? 1 : static_cast<std::size_t>(p.dim) + 1;
            if (p.coords.size() != expect) throw Error(Errc::parse_error, "wrong number of generators");
            for (const auto& v : p.coords)
                if (v.size() != static_cast<std::size_t>(shape.n) + 1)
                    throw Error(Errc::parse_error, "generator length must be n + 1");
        }
    }
}

/// Draws one concrete configuration from the recipe.
template <ExactField F>
Configuration<F> instantiate(const ConfigShape& shape, const F& f, GenericSampler& s) {
    validate(shape);
    Configuration<F> x(f, shape.n);
    int piece_no = 0;
    for (const auto& p : shape.pieces) {
        for (int k = 0; k < p.count; ++k) {
            const std::string tag = std::string(piece_kind_name(p.kind)) + "#" + std::to_string(piece_no++);
            switch (p.kind) {
            case PieceKind::linear:
                if (!p.coords.empty()) {
                    std::vector<std::vector<typename F::value_type>> cols;
                    for (const auto& v : p.coords) {
                        std::vector<typename F::value_type> c;
                        for (auto e : v) c.push_back(f.from_integer(e));
                        cols.push_back(std::move(c));
                    }
                    x.add_linear(Subspace<F>(Matrix<F>::from_columns(f, static_cast<std::size_t>(shape.n) + 1, cols)), tag);
                } else {
                    x.add_linear(random_subspace(f, s, shape.n, p.dim), tag);
                }
                break;
            case PieceKind::point:
                if (!p.coords.empty()) {
                    std::vector<typename F::value_type> c;
                    for (auto e : p.coords.front()) c.push_back(f.from_integer(e));
                    x.add_point(ProjPoint<F>(f, std::move(c)), tag);
                } else {
                    x.add_point(random_point(f, s, shape.n), tag);
                }
                break;
            case PieceKind::sundial: make_sundial(f, s, shape.n, p.dim).append_to(x, tag); break;
            case PieceKind::degenerate_conic: make_degenerate_conic(f, s, shape.n).append_to(x, tag); break;
            }
        }
    }
    return x;
}

} // namespace hilbertfn
