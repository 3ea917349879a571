#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "apolarity.hpp"
#include "error.hpp"
#include "params.hpp"
#include "postulation.hpp"

namespace hilbertfn {

struct Budget {
    int n_max = 5;
    int d_max = 4;
    int trials = 3;
    long long max_columns = 3003; // cells with C(n+d,n) above this are skipped
};

struct SuiteCase {
    std::string inputs;
    std::string computed;
    std::string expected;
    bool pass = false;
};

struct SuiteResult {
    std::string suite_id;
    std::vector<SuiteCase> cases;
    std::uint64_t seed = 0;
    Budget budget;
    double elapsed_seconds = 0;
    std::set<std::string> ops; // engine operations this suite exercised
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return !cases.empty();
    }
    std::vector<SuiteCase> failures() const {
        std::vector<SuiteCase> out;
        for (const auto& c : cases)
            if (!c.pass) out.push_back(c);
        return out;
    }
};

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{
        "teorema-in-p4", "teorema-in-pn",   "hh-lines",       "s-statements",      "lemma-params",
        "rnc-obstruction", "apolarity-star", "p3-plane-lines", "non-bipolynomial", "three-conics"};
    return ids;
}

/// Operation names the coverage check expects the suites to exercise.
inline const std::vector<std::string>& engine_ops() {
    static const std::vector<std::string> ops{
        "conditions_matrix", "ideal_dim",         "expected_ideal_dim", "critical_params",
        "verify_lemma_params", "build_W",         "verify_statement",   "verify_bipolynomial",
        "castelnuovo_check", "transition_profile", "subring_span_matrix", "dual_configuration",
        "decomposable"};
    return ops;
}

inline void check_budget(const Budget& b) {
    if (b.n_max < 3 || b.n_max > 12) throw Error(Errc::bound_violation, "n_max must be in [3, 12]");
    if (b.d_max < 1 || b.d_max > 64) throw Error(Errc::bound_violation, "d_max must be in [1, 64]");
    if (b.trials < 1 || b.trials > 16) throw Error(Errc::bound_violation, "trials must be in [1, 16]");
    if (b.max_columns < 1 || b.max_columns > 20000) throw Error(Errc::bound_violation, "max_columns must be in [1, 20000]");
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string num(long long v) { return std::to_string(v); }

template <ExactField F>
class SuiteRun {
public:
    SuiteRun(std::string id, const Budget& b, F f, std::uint64_t seed)
        : field(std::move(f)), budget(b), root_(seed) {
        result.suite_id = std::move(id);
        result.seed = seed;
        result.budget = b;
    }

    /// Sampler owned by one case; depends only on (suite, key, seed).
    GenericSampler sampler(const std::string& key) const { return root_.split(fnv1a(result.suite_id + "/" + key)); }

    bool fits(int n, int d) const { return binomial(n + d, n) <= budget.max_columns; }

    void add(std::string inputs, std::string computed, std::string expected, bool pass) {
        result.cases.push_back({std::move(inputs), std::move(computed), std::move(expected), pass});
    }
    void add(std::string inputs, long long computed, long long expected, bool agreed = true) {
        const bool ok = computed == expected && agreed;
        add(std::move(inputs), num(computed) + (agreed ? "" : " (trials disagree)"), num(expected), ok);
    }
    void used(std::initializer_list<const char*> names) {
        for (auto n : names) result.ops.insert(n);
    }

    F field;
    Budget budget;
    SuiteResult result;

private:
    GenericSampler root_;
};

template <ExactField F>
void suite_teorema_p4(SuiteRun<F>& r) {
    const int n = 4;
    for (int d = 1; d <= r.budget.d_max && r.fits(n, d); ++d) {
        const auto cp = critical_params(n, d);
        r.used({"critical_params", "verify_bipolynomial", "ideal_dim", "conditions_matrix"});
        r.add("critical e(4," + num(d) + ") = floor(d(d+2)(d+7)/24)", cp.e, d * (d + 2LL) * (d + 7) / 24);
        const std::vector<long long> ss{std::max(0LL, cp.e - 1), cp.e, cp.e_star, cp.e_star + 1};
        const auto rows = verify_bipolynomial(n, d, d, Family::plane_lines, ss, r.budget.trials, r.field,
                                              r.sampler("d=" + num(d)));
        for (const auto& row : rows)
            r.add("plane + " + num(row.s) + " lines, n=4 d=" + num(d), row.computed, row.expected, row.trials_agreed);

        if (d < 2) continue;
        r.used({"castelnuovo_check"});
        if (d % 2 == 1) {
            // lines beyond e_bar moved into a generic hyperplane H
            for (long long s : {cp.e, cp.e_star}) {
                if (cp.e_bar >= s) continue;
                auto smp = r.sampler("castelnuovo odd d=" + num(d) + " s=" + num(s));
                const auto h = random_subspace(r.field, smp, n, n - 1);
                Configuration<F> y(r.field, n);
                y.add_linear(random_subspace(r.field, smp, n, 2), "Pi");
                for (long long i = 0; i < cp.e_bar; ++i) y.add_linear(random_subspace(r.field, smp, n, 1));
                for (long long i = cp.e_bar; i < s; ++i) y.add_linear(random_subspace_in(h, smp, 1));
                const auto c = castelnuovo_check(y, h, d);
                const long long want = family_expected(Family::plane_lines, n, d, s);
                const std::string tag = "odd-degree split, d=" + num(d) + " s=" + num(s);
                r.add(tag + ": dim I_X", c.lhs, want);
                r.add(tag + ": residual term", c.residual_term, 0);
                r.add(tag + ": trace term", c.trace_term, want);
                r.add(tag + ": inequality", c.holds ? "holds" : "fails", "holds", c.holds);
            }
        } else {
            // x lines through points of Pi moved into H, with full double points
            const long long x = *cp.x_even;
            auto smp = r.sampler("castelnuovo even d=" + num(d));
            const auto pi = random_subspace(r.field, smp, n, 2);
            const auto h = random_subspace_through(pi, smp, n - 1);
            const auto whole = Subspace<F>::whole(r.field, n);
            Configuration<F> y(r.field, n);
            y.add_linear(pi, "Pi");
            for (long long i = 0; i < x; ++i) {
                for (;;) {
                    const auto p = random_point_in(pi, smp);
                    const auto q = random_point_in(h, smp);
                    if (contains(pi, q)) continue;
                    y.add_linear(span<F>({Subspace<F>::from_point(p), Subspace<F>::from_point(q)}), "L");
                    y.add(JetPoint<F>(p, whole), "2P");
                    break;
                }
            }
            for (long long i = x; i < cp.e; ++i) y.add_linear(random_subspace(r.field, smp, n, 1));
            const auto c = castelnuovo_check(y, h, d);
            const std::string tag = "even-degree split, d=" + num(d) + " x=" + num(x);
            r.add(tag + ": dim I_Y", c.lhs, 0);
            r.add(tag + ": residual term", c.residual_term, 0);
            r.add(tag + ": trace term", c.trace_term, 0);
        }
    }
}

template <ExactField F>
void suite_teorema_pn(SuiteRun<F>& r) {
    for (int n = 5; n <= r.budget.n_max; ++n) {
        for (int d = 1; d <= r.budget.d_max && r.fits(n, d); ++d) {
            const auto cp = critical_params(n, d);
            r.used({"critical_params", "verify_bipolynomial", "ideal_dim", "conditions_matrix"});
            const auto rows = verify_bipolynomial(n, d, d, Family::plane_lines, std::vector<long long>{cp.e, cp.e_star},
                                                  r.budget.trials, r.field, r.sampler("n=" + num(n) + " d=" + num(d)));
            for (const auto& row : rows)
                r.add("plane + " + num(row.s) + " lines, n=" + num(n) + " d=" + num(d), row.computed, row.expected,
                      row.trials_agreed);
        }
    }
    if (r.result.cases.empty()) r.result.notes.push_back("n_max < 5: nothing to run");
}

template <ExactField F>
void suite_hh(SuiteRun<F>& r) {
    for (int n = 3; n <= r.budget.n_max; ++n) {
        for (int d = 1; d <= r.budget.d_max && r.fits(n, d); ++d) {
            const long long ts = ceil_div(binomial_ll(n + d, n), d + 1);
            std::vector<long long> ss;
            for (long long s = 0; s <= ts + 1; ++s) ss.push_back(s);
            r.used({"verify_bipolynomial", "ideal_dim", "conditions_matrix"});
            const auto rows = verify_bipolynomial(n, d, d, Family::lines_only, ss, r.budget.trials, r.field,
                                                  r.sampler("n=" + num(n) + " d=" + num(d)));
            for (const auto& row : rows)
                r.add(num(row.s) + " lines, n=" + num(n) + " d=" + num(d), row.computed, row.expected, row.trials_agreed);
        }
    }
}

template <ExactField F>
void suite_s_statements(SuiteRun<F>& r) {
    auto run = [&](int n, int d, const WSpec& w) {
        r.used({"build_W", "verify_statement", "ideal_dim", "conditions_matrix"});
        const std::string key = std::string(w_kind_name(w.kind)) + " n=" + num(n) + " d=" + num(d) + " a=" + num(w.a) +
                                " b=" + num(w.b) + " c=" + num(w.c);
        const auto res = verify_statement(n, d, w, r.budget.trials, r.field, r.sampler(key));
        r.add(std::string(w_kind_name(w.kind)) + "(" + num(n) + "," + num(d) + "): " + res.shape, res.computed,
              res.expected, res.trials_agreed);
    };
    for (int n = 4; n <= r.budget.n_max; ++n) {
        for (int d = 1; d <= r.budget.d_max && r.fits(n, d); ++d) {
            run(n, d, {WKind::s});
            run(n, d, {WKind::s_star});
            if (d >= 2) {
                // one sundial traded for a conic plus a point
                const long long t = floor_div(binomial_ll(n + d, n), d + 1);
                const long long ts = ceil_div(binomial_ll(n + d, n), d + 1);
                run(n, d, {WKind::with_params, d - 2, 1, t - 2 * (d - 1)});
                run(n, d, {WKind::with_params_star, d - 2, 1, ts - 2 * (d - 1)});
            }
        }
    }
    for (int d = 2; d <= r.budget.d_max && r.fits(3, d); ++d) {
        if (lemma31_applies(d)) run(3, d, {WKind::lemma31});
        if (lemma32_applies(d)) {
            run(3, d, {WKind::lemma32});
            run(3, d, {WKind::lemma32_star});
        }
    }
}

template <ExactField F>
void suite_lemma_params(SuiteRun<F>& r) {
    const int d_max = std::max(2, r.budget.d_max);
    const int n_max = std::max(r.budget.n_max, 10);
    r.used({"verify_lemma_params", "critical_params"});
    const auto rep = verify_lemma_params(d_max, n_max);

    std::vector<std::string> names;
    for (const auto& c : rep.checks)
        if (std::find(names.begin(), names.end(), c.name) == names.end()) names.push_back(c.name);
    for (const auto& name : names) {
        const auto all = rep.named(name);
        long long bad = 0;
        std::string first;
        for (const auto& c : all) {
            if (c.holds) continue;
            if (bad++ == 0) first = " (first: n=" + num(c.n) + " d=" + num(c.d) + " " + c.detail + ")";
        }
        r.add(name + " over " + num(static_cast<long long>(all.size())) + " cases, d<=" + num(d_max),
              num(bad) + " violations" + first, "0 violations", bad == 0);
    }

    auto l31 = [](int d) {
        const auto p = lemma31_params(d);
        return "a=" + num(p.a) + " b=" + num(p.b) + " c=" + num(p.c) + " x=" + num(p.x);
    };
    auto l32 = [](int d) {
        const auto p = lemma32_params(d);
        return "b=" + num(p.b) + " b*=" + num(p.b_star) + " c=" + num(p.c) + " x=" + num(p.x);
    };
    r.add("conic lemma at d=2", l31(2), "a=1 b=1 c=2 x=-1", l31(2) == "a=1 b=1 c=2 x=-1");
    if (d_max >= 10) r.add("conic lemma at d=10", l31(10), "a=5 b=10 c=71 x=30", l31(10) == "a=5 b=10 c=71 x=30");
    r.add("sundial lemma at d=3", l32(3), "b=1 b*=2 c=5 x=2", l32(3) == "b=1 b*=2 c=5 x=2");
    const auto p43 = critical_params(4, 3);
    r.add("critical (4,3) e", p43.e, 6);
    r.add("critical (4,3) e*", p43.e_star, 7);
    const auto p42 = critical_params(4, 2);
    r.add("critical (4,2) t", p42.t, 5);
    r.add("critical (4,2) t*", p42.t_star, 5);
}

template <ExactField F>
void suite_rnc(SuiteRun<F>& r) {
    r.used({"ideal_dim", "expected_ideal_dim", "conditions_matrix"});
    const auto x = parse_shorthand("P4: 2 points + 2 lines + plane");
    const auto y = parse_shorthand("P4: 3 points + 2 lines + plane");
    r.add("expected dim(I_X)_2", static_cast<long long>(expected_ideal_dim(x, 2)), 1);
    r.add("expected dim(I_Y)_2", static_cast<long long>(expected_ideal_dim(y, 2)), 0);
    const auto rx = ideal_dim(x, 2, r.budget.trials, r.field, r.sampler("X"));
    const auto ry = ideal_dim(y, 2, r.budget.trials, r.field, r.sampler("Y"));
    r.add("dim(I_X)_2, X = P1+P2+L1+L2+plane", rx.ideal_dim, 1, rx.trials_agreed);
    r.add("dim(I_Y)_2, Y = X+P3", ry.ideal_dim, 0, ry.trials_agreed);
    if (rx.ideal_dim == 1 && ry.ideal_dim == 0)
        r.result.notes.push_back(
            "conclusion: a rational normal curve with the required incidences would lie on the unique quadric "
            "through X (degree count), hence that quadric would pass through P3; no quadric contains Y, so "
            "no such rational normal curve exists");
}

template <ExactField F>
void suite_apolarity_star(SuiteRun<F>& r) {
    r.used({"subring_span_matrix", "dual_configuration", "decomposable", "ideal_dim", "conditions_matrix"});
    {
        // coordinate pair y0, y1 inside four dual variables
        FormGroup<F> g{Matrix<F>::from_integers(r.field, {{1, 0, 0, 0}, {0, 1, 0, 0}}), GroupRole::pair};
        const auto m = subring_span_matrix(g, 2);
        r.add("coordinate pair, d=2: span rows", static_cast<long long>(m.rows()), 3);
        r.add("coordinate pair, d=2: span rank", static_cast<long long>(rank(m)), 3);
        const auto x = dual_configuration(std::vector<FormGroup<F>>{g}, r.field, 3);
        const auto& comp = std::get<LinearSpace<F>>(x.components().front());
        r.add("coordinate pair in P3: dual dimension", comp.space.dim(), 1);
    }
    auto instance = [](int n, long long pairs, int d) {
        DecompositionInstance inst{n, {}, d};
        for (long long i = 0; i < pairs; ++i) inst.groups.push_back({2, {}});
        inst.groups.push_back({3, {}});
        return inst;
    };
    for (int n = 3; n <= std::min(r.budget.n_max, 5); ++n) {
        for (int d = 1; d <= r.budget.d_max && r.fits(n, d); ++d) {
            for (long long s : default_s_values(Family::plane_lines, n, d)) {
                const auto inst = instance(n, s, d);
                const std::string key = "n=" + num(n) + " d=" + num(d) + " pairs=" + num(s);
                const auto a = decomposable(inst, r.budget.trials, r.field, r.sampler(key));
                r.add(key + ": defect", a.defect, family_expected(Family::plane_lines, n, d, s), a.trials_agreed);
                r.add(key + ": duality identity", a.duality_holds ? "holds" : "fails", "holds", a.duality_holds);
                r.add(key + ": certified", a.certified ? "yes" : "no", "yes", a.certified);
            }
        }
    }
    if (r.budget.n_max >= 4 && r.budget.d_max >= 2) {
        const auto a = decomposable(instance(4, 2, 2), r.budget.trials, r.field, r.sampler("n=4 pairs=2 d=2"));
        r.add("n=4, 2 pairs + triple, d=2: defect", a.defect, 3, a.trials_agreed);
    }
}

template <ExactField F>
void suite_p3_plane_lines(SuiteRun<F>& r) {
    const int n = 3;
    for (int d = 1; d <= r.budget.d_max && r.fits(n, d); ++d) {
        const long long top = ceil_div(binomial_ll(d + 2, 3), d) + 1;
        std::vector<long long> ss;
        for (long long s = 0; s <= top; ++s) ss.push_back(s);
        r.used({"verify_bipolynomial", "ideal_dim", "conditions_matrix"});
        const auto rows = verify_bipolynomial(n, d, d, Family::plane_lines, ss, r.budget.trials, r.field,
                                              r.sampler("d=" + num(d)));
        for (const auto& row : rows)
            r.add("plane + " + num(row.s) + " lines in P3, d=" + num(d), row.computed, row.expected, row.trials_agreed);
    }
    r.used({"transition_profile"});
    for (long long s = 1; s <= 3; ++s) {
        // every line meets the plane: hp = C(d+2,2) + s d
        const auto prof = transition_profile(family_shape(Family::plane_lines, n, s), r.budget.d_max, r.budget.trials,
                                             r.field, r.sampler("profile s=" + num(s)),
                                             [s](int d) { return binomial(d + 2, 2) + s * d; });
        r.add("plane + " + num(s) + " lines in P3, d<=" + num(r.budget.d_max) + ": bipolynomial",
              prof.bipolynomial ? "yes" : "no", "yes", prof.bipolynomial && prof.trials_agreed);
        if (s == 1 && r.budget.d_max >= 2) r.add("plane + 1 line in P3: HF(2)", prof.rows[2].hf, 8);
        if (!prof.tiles)
            for (const auto& f : prof.findings) r.result.notes.push_back("s=" + num(s) + ": " + f);
    }
}

template <ExactField F>
void suite_non_bipolynomial(SuiteRun<F>& r) {
    r.used({"transition_profile", "ideal_dim", "conditions_matrix"});
    const auto shape = parse_shorthand("P3: line + 3 planes");
    // generic arrangement: inclusion-exclusion over pairwise lines, triple point and line-plane points
    auto hp = [](int d) { return 3 * binomial(d + 2, 2) - 3 * (d + 1) + 1 + (d + 1) - 3; };
    const int d_max = std::max(2, std::min(r.budget.d_max, 6));
    const auto prof = transition_profile(shape, d_max, r.budget.trials, r.field, r.sampler("profile"), hp);
    r.add("HF(line + 3 planes, 1)", prof.rows[1].hf, 4, prof.trials_agreed);
    r.add("hp(line + 3 planes, 1)", static_cast<long long>(hp(1)), 3);
    const long long low = std::min<long long>(4, static_cast<long long>(hp(1)));
    r.add("HF(1) differs from min(hp(P3,1), hp(X,1)) = " + num(low), prof.rows[1].hf != low ? "differs" : "equal",
          "differs", prof.rows[1].hf != low);
    r.add("bipolynomial over d<=" + num(d_max), prof.bipolynomial ? "yes" : "no", "no", !prof.bipolynomial);
    r.result.notes.push_back("last degree with HF = C(d+3,3): " + num(prof.last_full_degree));
    r.result.notes.push_back("first degree with HF = hp: " +
                             (prof.first_poly_degree ? num(*prof.first_poly_degree) : std::string("none")));
    r.result.notes.push_back(std::string("regimes tile: ") + (prof.tiles ? "yes" : "no"));
    for (const auto& f : prof.findings) r.result.notes.push_back(f);
}

template <ExactField F>
void suite_three_conics(SuiteRun<F>& r) {
    r.used({"conditions_matrix", "ideal_dim", "expected_ideal_dim"});
    auto one = r.sampler("single");
    const auto c = make_degenerate_conic(r.field, one, 3).configuration();
    const auto cm = conditions_matrix(c, 3);
    r.add("one conic, d=3: condition rows", static_cast<long long>(cm.matrix.rows()), 8);
    r.add("one conic, d=3: conditions imposed", static_cast<long long>(rank(cm.matrix)), 7);
    const auto shape = parse_shorthand("P3: 3 conics");
    r.add("3 conics, d=3: naive expected dim", static_cast<long long>(expected_ideal_dim(shape, 3)), 0);
    const auto rec = ideal_dim(shape, 3, r.budget.trials, r.field, r.sampler("three"));
    r.add("3 conics, d=3: dim(I)_3", rec.ideal_dim, 1, rec.trials_agreed);
    r.add("3 conics, d=3: cubic exists", rec.ideal_dim >= 1 ? "yes" : "no", "yes", rec.ideal_dim >= 1);
    r.result.notes.push_back("naive count says no cubic, but the union of the three spanned planes is one: "
                             "the conics fail to impose independent conditions");
}

} // namespace detail

template <ExactField F>
SuiteResult run_suite(const std::string& id, const Budget& budget, const F& f, std::uint64_t seed) {
    check_budget(budget);
    const auto start = std::chrono::steady_clock::now();
    detail::SuiteRun<F> r(id, budget, f, seed);
    if (id == "teorema-in-p4") detail::suite_teorema_p4(r);
    else if (id == "teorema-in-pn") detail::suite_teorema_pn(r);
    else if (id == "hh-lines") detail::suite_hh(r);
    else if (id == "s-statements") detail::suite_s_statements(r);
    else if (id == "lemma-params") detail::suite_lemma_params(r);
    else if (id == "rnc-obstruction") detail::suite_rnc(r);
    else if (id == "apolarity-star") detail::suite_apolarity_star(r);
    else if (id == "p3-plane-lines") detail::suite_p3_plane_lines(r);
    else if (id == "non-bipolynomial") detail::suite_non_bipolynomial(r);
    else if (id == "three-conics") detail::suite_three_conics(r);
    else throw Error(Errc::unknown_suite, "unknown suite '" + id + "'");
    r.result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r.result;
}

} // namespace hilbertfn
