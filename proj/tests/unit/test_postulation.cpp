#include <gtest/gtest.h>

#include <set>

#include <hilbertfn/postulation.hpp>

using namespace hilbertfn;

namespace {

using P = PrimeField;

long long generic_dim(const std::string& shorthand, int d, std::uint64_t seed = 1) {
    return ideal_dim(parse_shorthand(shorthand), d, 3, P{}, GenericSampler(seed)).ideal_dim;
}

// A random configuration whose every piece the residual rules support for
// any hyperplane not containing a jet span.
Configuration<P> random_config(const P& f, GenericSampler& s, int n) {
    Configuration<P> x(f, n);
    const int pieces = static_cast<int>(s.uniform_int(1, 5));
    for (int i = 0; i < pieces; ++i) {
        switch (s.uniform_int(0, 3)) {
        case 0: x.add_linear(random_subspace(f, s, n, static_cast<int>(s.uniform_int(0, 2)))); break;
        case 1: x.add_point(random_point(f, s, n)); break;
        case 2: make_degenerate_conic(f, s, n).append_to(x); break;
        default: make_sundial(f, s, n, 1).append_to(x); break;
        }
    }
    return x;
}

} // namespace

TEST(ConditionsMatrix, BlockSizes) {
    P f;
    GenericSampler s(1);
    Configuration<P> x(f, 4);
    x.add_linear(random_subspace(f, s, 4, 2));
    auto cm = conditions_matrix(x, 2);
    EXPECT_EQ(cm.matrix.rows(), 6u);
    EXPECT_EQ(cm.matrix.cols(), 15u);
    x.add_linear(random_subspace(f, s, 4, 1));
    cm = conditions_matrix(x, 2);
    EXPECT_EQ(cm.matrix.rows(), 9u);
    EXPECT_EQ(cm.block_rows, (std::vector<std::size_t>{6, 3}));

    const auto sd = make_sundial(f, s, 3, 1).configuration();
    const auto cs = conditions_matrix(sd, 2);
    EXPECT_EQ(cs.matrix.rows(), 10u);
    EXPECT_EQ(cs.matrix.cols(), 10u);
    EXPECT_EQ(cs.block_rows, (std::vector<std::size_t>{3, 3, 4}));
    EXPECT_EQ(rank(cs.matrix), 6u);
}

TEST(IdealDim, FrozenOracleValues) {
    // computed independently by tests/oracle/point_sampling_oracle.py
    EXPECT_EQ(generic_dim("P3: 3 conics", 3), 1);
    EXPECT_EQ(generic_dim("P4: 2 points + 2 lines + plane", 2), 1);
    EXPECT_EQ(generic_dim("P4: 3 points + 2 lines + plane", 2), 0);
    EXPECT_EQ(generic_dim("P3: plane + line", 2), 2);
    EXPECT_EQ(generic_dim("P3: line + 3 planes", 1), 0);
    EXPECT_EQ(generic_dim("P4: plane + 6 lines", 3), 1);
    EXPECT_EQ(generic_dim("P4: plane + 7 lines", 3), 0);
    EXPECT_EQ(generic_dim("P4: 2 sundials + 4 lines", 3), 3);
    EXPECT_EQ(generic_dim("P4: 2 sundials + 5 lines", 3), 0);
}

TEST(IdealDim, ClosedFormExamples) {
    EXPECT_EQ(generic_dim("P4: plane + line", 2), 6);
    EXPECT_EQ(generic_dim("P3: 2 lines", 2), 4);
    EXPECT_EQ(generic_dim("P5: plane + 5 lines", 2), 0);
    EXPECT_EQ(generic_dim("P4: plane + 2 lines + point", 2), 2);
}

TEST(IdealDim, EmptyAndDegreeConventions) {
    P f;
    GenericSampler s(2);
    const Configuration<P> empty(f, 3);
    EXPECT_EQ(ideal_dim(empty, 2), 10);
    EXPECT_EQ(hilbert_function(empty, 2), 0);
    EXPECT_EQ(ideal_dim(empty, -1), 0);
    auto x = make_sundial(f, s, 4, 1).configuration();
    x.add_point(random_point(f, s, 4));
    EXPECT_EQ(hilbert_function(x, 0), 1);
    EXPECT_EQ(ideal_dim(x, 0), 0);
    EXPECT_THROW(conditions_matrix(x, -1), Error);
}

TEST(IdealDim, Invariants) {
    P f;
    GenericSampler s(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(s.uniform_int(3, 5));
        const auto x = random_config(f, s, n);
        const auto y = random_config(f, s, n);
        auto xy = x;
        xy.append(y);
        for (int d = 0; d <= 3; ++d) {
            const long long total = binomial_ll(n + d, n);
            const long long ix = ideal_dim(x, d), iy = ideal_dim(y, d), ixy = ideal_dim(xy, d);
            EXPECT_EQ(ix + hilbert_function(x, d), total);
            EXPECT_GE(ix, 0);
            EXPECT_LE(ixy, std::min(ix, iy));                  // adding pieces only adds conditions
            EXPECT_LE(total - ixy, (total - ix) + (total - iy)); // conditions are subadditive
            EXPECT_LE(hilbert_function(x, d), hilbert_function(x, d + 1));
        }
    }
}

TEST(IdealDim, NeverBelowNaiveExpectation) {
    P f;
    for (const auto* text : {"P3: 3 conics", "P4: plane + 6 lines", "P3: line + 3 planes", "P4: 2 sundials + 5 lines",
                             "P5: 2-sundial + 3 lines + 4 points"})
        for (int d = 0; d <= 4; ++d) {
            const auto r = ideal_dim(parse_shorthand(text), d, 3, f, GenericSampler(4));
            EXPECT_GE(r.ideal_dim, *r.expected_ideal_dim) << text << " d=" << d;
            EXPECT_TRUE(r.trials_agreed);
        }
}

TEST(HilbertTable, DeterministicAndTrialAware) {
    P f;
    const auto build = builder_for(parse_shorthand("P4: plane + 3 lines + 2 points"), f);
    const auto a = hilbert_table(build, {0, 1, 2, 3}, 3, GenericSampler(9));
    const auto b = hilbert_table(build, {0, 1, 2, 3}, 3, GenericSampler(9));
    ASSERT_EQ(a.size(), 4u);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].ideal_dim, b[i].ideal_dim);
        EXPECT_EQ(a[i].trial_ideal_dims, b[i].trial_ideal_dims);
        EXPECT_EQ(a[i].trial_ideal_dims.size(), 3u);
        EXPECT_TRUE(a[i].trials_agreed);
    }
    EXPECT_THROW(hilbert_table(build, {1}, 0, GenericSampler(9)), Error);
}

TEST(HilbertTable, ReportsMinimumAndFlagsDisagreement) {
    // over F_3 two random points often coincide or three land on a line
    P f3(3);
    const auto build = builder_for(parse_shorthand("P2: 6 points"), f3);
    bool saw_disagreement = false;
    for (std::uint64_t seed = 0; seed < 30 && !saw_disagreement; ++seed) {
        const auto r = hilbert_record(build, 2, 3, GenericSampler(seed));
        EXPECT_EQ(r.ideal_dim, *std::min_element(r.trial_ideal_dims.begin(), r.trial_ideal_dims.end()));
        saw_disagreement = !r.trials_agreed;
    }
    EXPECT_TRUE(saw_disagreement);
}

TEST(IdealDim, PrimeAndRationalAgree) {
    RationalField q;
    P f;
    for (const auto* text : {"P3: 3 conics", "P4: 2 points + 2 lines + plane", "P3: sundial + 2 lines", "P4: 2-sundial"})
        for (int d = 1; d <= 3; ++d) {
            const auto shape = parse_shorthand(text);
            if (binomial_ll(shape.n + d, shape.n) > 70) continue;
            GenericSampler sp(5, 50), sq(5, 50);
            const auto xp = instantiate(shape, f, sp);
            const auto xq = instantiate(shape, q, sq);
            EXPECT_EQ(ideal_dim(xp, d), ideal_dim(xq, d)) << text << " d=" << d;
        }
}

TEST(CriticalParams, Examples) {
    const auto p43 = critical_params(4, 3);
    EXPECT_EQ(p43.e, 6);
    EXPECT_EQ(p43.e_star, 7);
    const auto p42 = critical_params(4, 2);
    EXPECT_EQ(p42.t, 5);
    EXPECT_EQ(p42.t_star, 5);
    for (int d = 1; d <= 30; ++d) EXPECT_EQ(critical_params(4, d).e, d * (d + 2LL) * (d + 7) / 24) << d;
    EXPECT_EQ(*critical_params(4, 6).x_even, 6);
    EXPECT_FALSE(critical_params(4, 5).x_even.has_value());
    EXPECT_THROW(critical_params(2, 3), Error);
    EXPECT_THROW(critical_params(4, 0), Error);
}

TEST(LemmaParams, ConicLemmaExamples) {
    const auto p2 = lemma31_params(2);
    EXPECT_EQ(p2.a, 1);
    EXPECT_EQ(p2.b, 1);
    EXPECT_EQ(p2.c, 2);
    EXPECT_TRUE(p2.b_integral);
    const auto p10 = lemma31_params(10);
    EXPECT_EQ(p10.a, 5);
    EXPECT_EQ(p10.b, 10);
    EXPECT_EQ(p10.c, 71);
    EXPECT_EQ(p10.x, 30);
    EXPECT_THROW(lemma31_params(6), Error);
}

TEST(LemmaParams, SundialLemmaExamples) {
    const auto p3 = lemma32_params(3);
    EXPECT_EQ(p3.c, 5);
    EXPECT_EQ(p3.b, 1);
    EXPECT_EQ(p3.b_star, 2);
    EXPECT_EQ(p3.x, 2);
    EXPECT_TRUE(p3.c_integral);
    EXPECT_FALSE(lemma32_applies(1));
    EXPECT_TRUE(lemma32_applies(6));
    EXPECT_FALSE(lemma32_applies(4));
}

TEST(LemmaParams, SweepToD64HasNoViolations) {
    // Stated target; the literal conditions do not all hold (see README).
    const auto rep = verify_lemma_params(64, 10);
    for (const auto& v : rep.violations()) ADD_FAILURE() << v.name << " n=" << v.n << " d=" << v.d << " " << v.detail;
}

TEST(LemmaParams, ExactViolationSet) {
    const auto rep = verify_lemma_params(64, 10);
    std::set<std::string> failing;
    for (const auto& v : rep.violations()) failing.insert(v.name);
    EXPECT_EQ(failing, (std::set<std::string>{"lemma31.x_range", "thm5.e_rho_le_rho"}));
    const auto x = rep.named("lemma31.x_range");
    for (const auto& c : x) EXPECT_EQ(c.holds, c.d != 2) << c.d << " " << c.detail;
    for (const auto& c : rep.named("thm5.rho_le_e_rho")) EXPECT_TRUE(c.holds) << c.n << " " << c.d;
    int bad = 0;
    for (const auto& c : rep.named("thm5.e_rho_le_rho")) bad += c.holds ? 0 : 1;
    EXPECT_GT(bad, 0);
    EXPECT_THROW(verify_lemma_params(1), Error);
}

TEST(BuildW, Shapes) {
    const auto w = build_W(4, 2, {WKind::s});
    EXPECT_EQ(w.describe(), "P4: 1 sundial + 3 lines");
    EXPECT_EQ(build_W(4, 3, {WKind::s}).describe(), "P4: 2 sundials + 4 lines");
    EXPECT_EQ(build_W(4, 3, {WKind::s_star}).describe(), "P4: 2 sundials + 5 lines");
    EXPECT_EQ(build_W(3, 3, {WKind::lemma32}).describe(), "P3: 1 sundial + 1 line + 5 points");
    EXPECT_EQ(build_W(3, 2, {WKind::lemma31}).describe(), "P3: 1 conic + 1 line + 2 points");
    EXPECT_THROW(build_W(4, 3, {WKind::with_params, 2, 1, 0}), Error);
    EXPECT_THROW(build_W(4, 3, {WKind::with_params, 1, 1, 20}), Error);
    EXPECT_THROW(build_W(4, 3, {WKind::lemma31}), Error);
}

TEST(VerifyStatement, Examples) {
    P f;
    const auto s42 = verify_statement(4, 2, {WKind::s}, 3, f, GenericSampler(1));
    EXPECT_EQ(s42.expected, 0);
    EXPECT_TRUE(s42.pass);
    const auto s52 = verify_statement(5, 2, {WKind::s}, 3, f, GenericSampler(1));
    EXPECT_EQ(s52.expected, 0);
    EXPECT_TRUE(s52.pass);
    const auto s43 = verify_statement(4, 3, {WKind::s}, 3, f, GenericSampler(1));
    EXPECT_EQ(s43.expected, 3);
    EXPECT_TRUE(s43.pass);
    const auto ss43 = verify_statement(4, 3, {WKind::s_star}, 3, f, GenericSampler(1));
    EXPECT_EQ(ss43.expected, 0);
    EXPECT_TRUE(ss43.pass);
}

TEST(Bipolynomial, Examples) {
    P f;
    auto rows = verify_bipolynomial(4, 3, 3, Family::plane_lines, std::vector<long long>{6, 7}, 3, f, GenericSampler(2));
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].computed, 1);
    EXPECT_EQ(rows[1].computed, 0);
    rows = verify_bipolynomial(3, 2, 2, Family::lines_only, std::vector<long long>{2}, 3, f, GenericSampler(2));
    EXPECT_EQ(rows[0].computed, 4);
    EXPECT_TRUE(rows[0].pass);
    rows = verify_bipolynomial(5, 2, 2, Family::plane_lines, std::vector<long long>{5}, 3, f, GenericSampler(2));
    EXPECT_EQ(rows[0].computed, 0);
    EXPECT_EQ(default_s_values(Family::plane_lines, 4, 3), (std::vector<long long>{5, 6, 7, 8}));
}

TEST(Bipolynomial, P3PlanePlusLinesClosedForm) {
    P f;
    for (int d = 1; d <= 5; ++d) {
        std::vector<long long> ss;
        for (long long s = 0; s <= ceil_div(binomial_ll(d + 2, 3), d) + 1; ++s) ss.push_back(s);
        for (const auto& r : verify_bipolynomial(3, d, d, Family::plane_lines, ss, 3, f, GenericSampler(3))) {
            EXPECT_EQ(r.computed, std::max(0LL, binomial_ll(d + 2, 3) - r.s * d)) << "d=" << d << " s=" << r.s;
            // HF = C(d+3,3) - max{0, C(d+2,3) - s d}
            EXPECT_EQ(binomial_ll(d + 3, 3) - r.computed,
                      binomial_ll(d + 3, 3) - std::max(0LL, binomial_ll(d + 2, 3) - r.s * d));
        }
    }
}

TEST(Bipolynomial, CellsIndependentOfRequestedSet) {
    P f;
    const auto one = verify_bipolynomial(4, 3, 3, Family::plane_lines, std::vector<long long>{6}, 1, f, GenericSampler(4));
    const auto many = verify_bipolynomial(4, 2, 3, Family::plane_lines, std::nullopt, 1, f, GenericSampler(4));
    const auto it = std::find_if(many.begin(), many.end(), [](const BipolyRow& r) { return r.d == 3 && r.s == 6; });
    ASSERT_NE(it, many.end());
    EXPECT_EQ(it->computed, one.front().computed);
    EXPECT_TRUE(std::is_sorted(many.begin(), many.end(),
                               [](const BipolyRow& a, const BipolyRow& b) { return std::tie(a.d, a.s) < std::tie(b.d, b.s); }));
}

TEST(Castelnuovo, InequalityOnRandomConfigurations) {
    P f;
    GenericSampler s(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(s.uniform_int(3, 4));
        auto x = random_config(f, s, n);
        const auto h = random_subspace(f, s, n, n - 1);
        // move a piece into H so the residual is not the whole configuration
        x.add_linear(random_subspace_in(h, s, 1));
        for (int d = 1; d <= 4; ++d) EXPECT_TRUE(castelnuovo_check(x, h, d).holds) << trial << " d=" << d;
    }
}

TEST(Castelnuovo, ConfigurationInsideHyperplane) {
    P f;
    GenericSampler s(6);
    const auto h = random_subspace(f, s, 4, 3);
    Configuration<P> x(f, 4);
    x.add_linear(random_subspace_in(h, s, 2));
    x.add_linear(random_subspace_in(h, s, 1));
    const auto r = castelnuovo_check(x, h, 2);
    EXPECT_EQ(r.residual_term, binomial_ll(5, 4)); // residual is empty
    EXPECT_TRUE(r.holds);
}

TEST(TransitionProfile, FivePointsInPlane) {
    P f;
    const auto prof = transition_profile(parse_shorthand("P2: 5 points"), 4, 3, f, GenericSampler(7));
    EXPECT_EQ(prof.last_full_degree, 1);
    ASSERT_TRUE(prof.first_poly_degree.has_value());
    EXPECT_EQ(*prof.first_poly_degree, 2);
    EXPECT_EQ(prof.rows[2].hf, 5);
    EXPECT_TRUE(prof.bipolynomial);
    EXPECT_TRUE(prof.tiles);
}

TEST(TransitionProfile, LinePlusThreePlanesIsNotBipolynomial) {
    P f;
    auto hp = [](int d) { return 3 * binomial(d + 2, 2) - 3 * (d + 1) + 1 + (d + 1) - 3; };
    const auto prof = transition_profile(parse_shorthand("P3: line + 3 planes"), 4, 3, f, GenericSampler(8), hp);
    EXPECT_EQ(prof.rows[1].hf, 4);
    EXPECT_EQ(prof.rows[1].polynomial, 3);
    EXPECT_FALSE(prof.bipolynomial);
}
