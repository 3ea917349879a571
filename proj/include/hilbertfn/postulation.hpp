#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "params.hpp"
#include "polyspace.hpp"
#include "schemes.hpp"
#include "shape.hpp"

namespace hilbertfn {

template <ExactField F>
struct ConditionsMatrix {
    Matrix<F> matrix;
    std::vector<std::size_t> block_rows; // one entry per component, in order
    int degree = 0;
};

/// Stacks the linear conditions each component imposes on degree-d forms.
template <ExactField F>
ConditionsMatrix<F> conditions_matrix(const Configuration<F>& x, int d) {
    if (d < 0) throw Error(Errc::unsupported_degree, "negative degree");
    const F& f = x.field();
    const std::size_t nv = static_cast<std::size_t>(x.ambient_dim()) + 1;
    ConditionsMatrix<F> out{Matrix<F>(f, 0, monomial_count_sz(nv, d)), {}, d};
    for (const auto& comp : x.components()) {
        const std::size_t before = out.matrix.rows();
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, LinearSpace<F>>) {
                    out.matrix.append_rows(restriction_matrix(c.space.param(), d));
                } else if constexpr (std::is_same_v<T, ReducedPoint<F>>) {
                    out.matrix.append_row(evaluation_row(f, std::span(c.point.coords()), d));
                } else {
                    const auto& p = c.point.coords();
                    out.matrix.append_row(evaluation_row(f, std::span(p), d));
                    if (d == 0) return;
                    // directions of T completing P to a basis
                    std::vector<std::vector<typename F::value_type>> cols{p};
                    for (std::size_t j = 0; j < c.span.param().cols(); ++j) cols.push_back(c.span.param().column(j));
                    const auto all = Matrix<F>::from_columns(f, nv, cols);
                    for (auto j : independent_columns(all)) {
                        if (j == 0) continue;
                        out.matrix.append_row(directional_derivative_row(f, std::span(p), std::span(cols[j]), d));
                    }
                }
            },
            comp);
        out.block_rows.push_back(out.matrix.rows() - before);
    }
    return out;
}

/// dim (I_X)_d for one concrete configuration. Negative degrees give 0.
template <ExactField F>
long long ideal_dim(const Configuration<F>& x, int d) {
    if (d < 0) return 0;
    const long long total = static_cast<long long>(monomial_count_sz(static_cast<std::size_t>(x.ambient_dim()) + 1, d));
    if (x.empty()) return total;
    return total - static_cast<long long>(rank(conditions_matrix(x, d).matrix));
}

template <ExactField F>
long long hilbert_function(const Configuration<F>& x, int d) {
    if (d < 0) return 0;
    return static_cast<long long>(monomial_count_sz(static_cast<std::size_t>(x.ambient_dim()) + 1, d)) - ideal_dim(x, d);
}

struct HilbertRecord {
    int d = 0;
    long long hf = 0;
    long long ideal_dim = 0;
    std::optional<long long> expected_ideal_dim;
    bool trials_agreed = true;
    std::vector<long long> trial_ideal_dims;
};

template <ExactField F>
using ConfigBuilder = std::function<Configuration<F>(GenericSampler&)>;

/// Generic value over `trials` independent draws: the minimum ideal
/// dimension (maximum rank). Trial t draws from sampler.split(t), and the
/// same draw is used for every requested degree.
template <ExactField F>
std::vector<HilbertRecord> hilbert_table(const ConfigBuilder<F>& build, const std::vector<int>& degrees, int trials,
                                         const GenericSampler& sampler) {
    if (trials < 1) throw Error(Errc::bound_violation, "trials must be >= 1");
    std::vector<HilbertRecord> out(degrees.size());
    for (int t = 0; t < trials; ++t) {
        auto s = sampler.split(static_cast<std::uint64_t>(t));
        const auto x = build(s);
        const long long nv = x.ambient_dim() + 1;
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            const int d = degrees[k];
            const long long v = ideal_dim(x, d);
            auto& r = out[k];
            r.d = d;
            r.trial_ideal_dims.push_back(v);
            if (t == 0 || v < r.ideal_dim) r.ideal_dim = v;
            if (t > 0 && v != r.trial_ideal_dims.front()) r.trials_agreed = false;
            r.hf = (d < 0 ? 0 : static_cast<long long>(monomial_count_sz(static_cast<std::size_t>(nv), d))) - r.ideal_dim;
        }
    }
    return out;
}

template <ExactField F>
HilbertRecord hilbert_record(const ConfigBuilder<F>& build, int d, int trials, const GenericSampler& sampler) {
    return hilbert_table(build, std::vector<int>{d}, trials, sampler).front();
}

template <ExactField F>
ConfigBuilder<F> builder_for(const ConfigShape& shape, const F& f) {
    validate(shape);
    return [shape, f](GenericSampler& s) { return instantiate(shape, f, s); };
}

/// Generic record for a recipe, with the naive expected dimension attached.
template <ExactField F>
HilbertRecord ideal_dim(const ConfigShape& shape, int d, int trials, const F& f, const GenericSampler& sampler) {
    auto r = hilbert_record(builder_for(shape, f), d, trials, sampler);
    r.expected_ideal_dim = static_cast<long long>(expected_ideal_dim(shape, d));
    return r;
}

// ---------------------------------------------------------------- W schemes

enum class WKind { s, s_star, with_params, with_params_star, lemma31, lemma32, lemma32_star };

inline const char* w_kind_name(WKind k) {
    switch (k) {
    case WKind::s: return "S";
    case WKind::s_star: return "S*";
    case WKind::with_params: return "S(a,b,c)";
    case WKind::with_params_star: return "S*(a,b,c)";
    case WKind::lemma31: return "conics-P3";
    case WKind::lemma32: return "sundial-P3";
    case WKind::lemma32_star: return "sundial-P3*";
    }
    return "?";
}

struct WSpec {
    WKind kind = WKind::s;
    long long a = 0, b = 0, c = 0;
};

/// The generic schemes of the S-statements:
///   S:   (d-1) sundials + (t - 2(d-1)) lines; S* uses t*.
///   S(a,b,c): a sundials + b conics + b points + c lines.
///   conics-P3: a conics + b lines + c points (d = 0, 2, 4 mod 8, n = 3).
///   sundial-P3: one sundial + b lines + c points (n = 3); the * form uses b*.
inline ConfigShape build_W(int n, int d, const WSpec& w) {
    if (d < 1) throw Error(Errc::unsupported_degree, "W schemes need d >= 1");
    if (n < 3) throw Error(Errc::dimension_mismatch, "W schemes need n >= 3");
    ConfigShape shape{n, {}};
    const long long t = floor_div(binomial_ll(n + d, n), d + 1);
    const long long ts = ceil_div(binomial_ll(n + d, n), d + 1);
    auto need = [](bool ok, const char* what) {
        if (!ok) throw Error(Errc::bound_violation, what);
    };
    switch (w.kind) {
    case WKind::s:
    case WKind::s_star: {
        const long long lines = (w.kind == WKind::s ? t : ts) - 2LL * (d - 1);
        need(lines >= 0, "t < 2(d-1): too few lines for the sundials");
        shape.sundials(d - 1).lines(static_cast<int>(lines));
        break;
    }
    case WKind::with_params:
    case WKind::with_params_star:
        need(w.a >= 0 && w.b >= 0 && w.c >= 0, "negative parameter");
        need(w.a + w.b <= d - 1, "a + b must be <= d - 1");
        if (w.kind == WKind::with_params) need(w.c <= t - 2 * (w.a + w.b), "c must be <= t - 2(a+b)");
        else need(w.c >= ts - 2 * (w.a + w.b), "c must be >= t* - 2(a+b)");
        shape.sundials(static_cast<int>(w.a)).conics(static_cast<int>(w.b)).points(static_cast<int>(w.b)).lines(static_cast<int>(w.c));
        break;
    case WKind::lemma31: {
        need(n == 3, "conic scheme lives in P^3");
        const auto p = lemma31_params(d);
        shape.conics(static_cast<int>(p.a)).lines(static_cast<int>(p.b)).points(static_cast<int>(p.c));
        break;
    }
    case WKind::lemma32:
    case WKind::lemma32_star: {
        need(n == 3, "sundial scheme lives in P^3");
        const auto p = lemma32_params(d);
        need(p.b > 0 && p.c >= 0, "lemma parameters out of range");
        shape.sundials(1).lines(static_cast<int>(w.kind == WKind::lemma32 ? p.b : p.b_star)).points(static_cast<int>(p.c));
        break;
    }
    }
    return shape;
}

/// The value the statement asserts for dim (I_W)_d.
inline long long statement_value(int n, int d, const WSpec& w) {
    const long long all = binomial_ll(n + d, n);
    const long long t = floor_div(all, d + 1);
    switch (w.kind) {
    case WKind::s: return all - t * (d + 1);
    case WKind::with_params: return std::max(0LL, all - (2 * w.a + 2 * w.b + w.c) * (d + 1));
    case WKind::lemma32: {
        const auto p = lemma32_params(d);
        return all - (2LL * d + 2) - p.b * (d + 1) - p.c;
    }
    default: return 0;
    }
}

struct StatementResult {
    int n = 0, d = 0;
    WSpec spec;
    std::string shape;
    long long computed = 0;
    long long expected = 0;
    bool trials_agreed = true;
    bool pass = false;
};

template <ExactField F>
StatementResult verify_statement(int n, int d, const WSpec& w, int trials, const F& f, const GenericSampler& sampler) {
    const auto shape = build_W(n, d, w);
    const auto rec = hilbert_record(builder_for(shape, f), d, trials, sampler);
    StatementResult r;
    r.n = n;
    r.d = d;
    r.spec = w;
    r.shape = shape.describe();
    r.computed = rec.ideal_dim;
    r.expected = statement_value(n, d, w);
    r.trials_agreed = rec.trials_agreed;
    r.pass = r.computed == r.expected && r.trials_agreed;
    return r;
}

// ------------------------------------------------------- bipolynomial sweeps

enum class Family { plane_lines, lines_only };

inline const char* family_name(Family f) { return f == Family::plane_lines ? "plane+lines" : "lines"; }

/// Closed form for dim (I)_d of plane + s generic lines (n >= 3) or s
/// generic lines. In P^3 every line meets the plane, which changes the count.
inline long long family_expected(Family fam, int n, int d, long long s) {
    if (d < 0) return 0;
    const long long all = binomial_ll(n + d, n);
    if (fam == Family::lines_only) return std::max(0LL, all - s * (d + 1));
    if (d == 0) return 0;
    if (n == 3) return std::max(0LL, binomial_ll(d + 2, 3) - s * d);
    return std::max(0LL, all - binomial_ll(d + 2, 2) - s * (d + 1));
}

inline ConfigShape family_shape(Family fam, int n, long long s) {
    ConfigShape shape{n, {}};
    if (fam == Family::plane_lines) shape.planes(1);
    shape.lines(static_cast<int>(s));
    return shape;
}

/// s values bracketing the critical count: {max(0,e-1), e, e*, e*+1} with e
/// the line count at which the expected dimension reaches zero.
inline std::vector<long long> default_s_values(Family fam, int n, int d) {
    long long lo = 0, hi = 0;
    if (fam == Family::lines_only) {
        lo = floor_div(binomial_ll(n + d, n), d + 1);
        hi = ceil_div(binomial_ll(n + d, n), d + 1);
    } else if (n == 3) {
        lo = floor_div(binomial_ll(d + 2, 3), d);
        hi = ceil_div(binomial_ll(d + 2, 3), d);
    } else {
        lo = floor_div(binomial_ll(n + d, n) - binomial_ll(d + 2, 2), d + 1);
        hi = ceil_div(binomial_ll(n + d, n) - binomial_ll(d + 2, 2), d + 1);
    }
    std::vector<long long> v{std::max(0LL, lo - 1), lo, hi, hi + 1};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

struct BipolyRow {
    int n = 0, d = 0;
    long long s = 0;
    long long computed = 0, expected = 0;
    bool trials_agreed = true;
    bool pass = false;
};

/// Sweeps d in [d_min, d_max] and the given s values (default bracket),
/// comparing against the closed form. Cell (d, s) draws from a sampler split
/// on (d, s) so rows do not depend on which other cells were requested.
template <ExactField F>
std::vector<BipolyRow> verify_bipolynomial(int n, int d_min, int d_max, Family fam,
                                           const std::optional<std::vector<long long>>& s_values, int trials,
                                           const F& f, const GenericSampler& sampler) {
    if (n < 3) throw Error(Errc::dimension_mismatch, "sweeps need n >= 3");
    std::vector<BipolyRow> rows;
    for (int d = std::max(d_min, 1); d <= d_max; ++d) {
        const auto ss = s_values ? *s_values : default_s_values(fam, n, d);
        for (long long s : ss) {
            if (s < 0) throw Error(Errc::bound_violation, "negative line count");
            const auto cell = sampler.split(static_cast<std::uint64_t>(n) << 48 ^ static_cast<std::uint64_t>(d) << 32 ^
                                            static_cast<std::uint64_t>(s));
            const auto rec = hilbert_record(builder_for(family_shape(fam, n, s), f), d, trials, cell);
            BipolyRow r{n, d, s, rec.ideal_dim, family_expected(fam, n, d, s), rec.trials_agreed, false};
            r.pass = r.computed == r.expected && r.trials_agreed;
            rows.push_back(r);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BipolyRow& a, const BipolyRow& b) {
        return std::tie(a.n, a.d, a.s) < std::tie(b.n, b.d, b.s);
    });
    return rows;
}

// ------------------------------------------------------------- Castelnuovo

struct CastelnuovoReport {
    int d = 0;
    long long lhs = 0;            // dim (I_X)_d
    long long residual_term = 0;  // dim (I_Res)_{d-1}
    long long trace_term = 0;     // dim (I_Tr)_d inside H
    bool holds = false;
};

template <ExactField F>
CastelnuovoReport castelnuovo_check(const Configuration<F>& x, const Subspace<F>& h, int d) {
    if (h.dim() != h.ambient_dim() - 1) throw Error(Errc::dimension_mismatch, "Castelnuovo check needs a hyperplane");
    CastelnuovoReport r;
    r.d = d;
    r.lhs = ideal_dim(x, d);
    r.residual_term = ideal_dim(residual(x, h), d - 1);
    r.trace_term = ideal_dim(trace(x, h), d);
    r.holds = r.lhs <= r.residual_term + r.trace_term;
    return r;
}

// -------------------------------------------------------- transition profile

struct ProfileRow {
    int d = 0;
    long long hf = 0;
    BigInt ambient;    // C(n+d, n)
    BigInt polynomial; // sum of component polynomials
};

struct TransitionProfile {
    std::vector<ProfileRow> rows;
    int last_full_degree = -1;             // largest d with HF = C(n+d,n)
    std::optional<int> first_poly_degree;  // smallest d with HF = polynomial
    bool tiles = false;                    // HF full up to some D, polynomial after
    bool bipolynomial = false;             // HF = min(C(n+d,n), polynomial) at every d
    bool trials_agreed = true;
    std::vector<std::string> findings;
};

/// HF for d = 0..d_max. `polynomial` defaults to the naive sum of component
/// Hilbert polynomials; pass the true Hilbert polynomial when components meet.
template <ExactField F>
TransitionProfile transition_profile(const ConfigShape& shape, int d_max, int trials, const F& f,
                                     const GenericSampler& sampler,
                                     const std::function<BigInt(int)>& polynomial = {}) {
    if (d_max < 1) throw Error(Errc::bound_violation, "d_max must be >= 1");
    std::vector<int> degrees;
    for (int d = 0; d <= d_max; ++d) degrees.push_back(d);
    const auto recs = hilbert_table(builder_for(shape, f), degrees, trials, sampler);
    TransitionProfile p;
    for (const auto& r : recs) {
        ProfileRow row{r.d, r.hf, binomial(shape.n + r.d, shape.n),
                       polynomial ? polynomial(r.d) : naive_hilbert_polynomial(shape, r.d)};
        if (row.hf == row.ambient) p.last_full_degree = r.d;
        if (!p.first_poly_degree && row.hf == row.polynomial) p.first_poly_degree = r.d;
        p.trials_agreed = p.trials_agreed && r.trials_agreed;
        p.rows.push_back(std::move(row));
    }
    p.tiles = true;
    p.bipolynomial = true;
    for (const auto& row : p.rows) {
        const BigInt low = row.ambient < row.polynomial ? row.ambient : row.polynomial;
        if (row.hf != low) {
            p.bipolynomial = false;
            p.findings.push_back("d=" + std::to_string(row.d) + ": HF=" + std::to_string(row.hf) + " differs from min=" +
                                 low.str());
        }
        const bool ok = row.d <= p.last_full_degree ? row.hf == row.ambient : row.hf == row.polynomial;
        if (!ok) {
            p.tiles = false;
            p.findings.push_back("d=" + std::to_string(row.d) + ": HF=" + std::to_string(row.hf) + " is neither " +
                                 row.ambient.str() + " nor " + row.polynomial.str());
        }
    }
    return p;
}

} // namespace hilbertfn
