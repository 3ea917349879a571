#include <gtest/gtest.h>

#include <hilbertfn/apolarity.hpp>

using namespace hilbertfn;

namespace {

using P = PrimeField;

DecompositionInstance star(int n, int pairs, int d) {
    DecompositionInstance inst{n, {}, d};
    for (int i = 0; i < pairs; ++i) inst.groups.push_back({2, {}});
    inst.groups.push_back({3, {}});
    return inst;
}

} // namespace

TEST(SubringSpan, CoordinatePair) {
    P f;
    FormGroup<P> g{Matrix<P>::from_integers(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}), GroupRole::pair};
    const auto m = subring_span_matrix(g, 2);
    ASSERT_EQ(m.rows(), 3u);
    ASSERT_EQ(m.cols(), 10u);
    // rows are y0^2, y0 y1, y1^2: monomial indices 0, 1, 4 in graded lex
    const std::vector<std::size_t> where{0, 1, 4};
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 10; ++c) EXPECT_EQ(m(r, c), c == where[r] ? 1u : 0u) << r << "," << c;
}

TEST(SubringSpan, FullGroupSpansEverything) {
    P f;
    GenericSampler s(1);
    for (int n = 1; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d) {
            FormGroup<P> g{random_matrix(f, s, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1),
                           GroupRole::general};
            EXPECT_EQ(static_cast<long long>(rank(subring_span_matrix(g, d))), binomial_ll(n + d, n));
        }
    FormGroup<P> dep{Matrix<P>::from_integers(f, {{1, 2, 0}, {2, 4, 0}}), GroupRole::pair};
    EXPECT_THROW(subring_span_matrix(dep, 2), Error);
}

TEST(DualSubspace, PairsAreLinesTriplesArePlanes) {
    P f;
    GenericSampler s(2);
    for (int n = 3; n <= 5; ++n) {
        FormGroup<P> pair{random_matrix(f, s, 2, static_cast<std::size_t>(n) + 1), GroupRole::pair};
        FormGroup<P> triple{random_matrix(f, s, 3, static_cast<std::size_t>(n) + 1), GroupRole::triple};
        EXPECT_EQ(dual_subspace(pair).dim(), 1);
        EXPECT_EQ(dual_subspace(triple).dim(), 2);
    }
}

TEST(Decomposable, P3Examples) {
    P f;
    const auto a1 = decomposable(star(3, 1, 1), 3, f, GenericSampler(3));
    EXPECT_TRUE(a1.yes);
    EXPECT_EQ(a1.defect, 0);
    const auto a2 = decomposable(star(3, 1, 2), 3, f, GenericSampler(3));
    EXPECT_FALSE(a2.yes);
    EXPECT_EQ(a2.defect, 2);
    EXPECT_EQ(a2.span_rank, 8);
    const auto a3 = decomposable(star(3, 1, 3), 3, f, GenericSampler(3));
    EXPECT_FALSE(a3.yes);
    EXPECT_EQ(a3.defect, 7);
    const auto b = decomposable(star(3, 2, 2), 3, f, GenericSampler(3));
    EXPECT_TRUE(b.yes);
    for (const auto& r : {a1, a2, a3, b}) {
        EXPECT_TRUE(r.certified);
        EXPECT_TRUE(r.duality_holds);
        EXPECT_TRUE(r.trials_agreed);
    }
}

TEST(Decomposable, P4TwoPairsAndTriple) {
    P f;
    const auto a = decomposable(star(4, 2, 2), 3, f, GenericSampler(4));
    EXPECT_FALSE(a.yes);
    EXPECT_EQ(a.defect, 3);
}

TEST(Decomposable, P3MatchesClosedForm) {
    P f;
    for (int d = 1; d <= 5; ++d)
        for (int s = 0; s <= 6; ++s) {
            const auto a = decomposable(star(3, s, d), 2, f, GenericSampler(static_cast<std::uint64_t>(10 * d + s)));
            EXPECT_EQ(a.defect, std::max(0LL, binomial_ll(d + 2, 3) - static_cast<long long>(s) * d)) << d << " " << s;
        }
}

TEST(Decomposable, DualityOnRandomGroupShapes) {
    P f;
    GenericSampler s(5);
    for (int trial = 0; trial < 30; ++trial) {
        DecompositionInstance inst;
        inst.n = static_cast<int>(s.uniform_int(2, 5));
        inst.d = static_cast<int>(s.uniform_int(1, 4));
        const int groups = static_cast<int>(s.uniform_int(1, 4));
        for (int g = 0; g < groups; ++g) inst.groups.push_back({static_cast<int>(s.uniform_int(1, inst.n)), {}});
        const auto a = decomposable(inst, 2, f, s.split(static_cast<std::uint64_t>(trial)));
        EXPECT_TRUE(a.duality_holds);
        EXPECT_EQ(a.certified, inst.certified_shape() && inst.n >= 3);
    }
}

TEST(Decomposable, ExplicitGeneratorsAndErrors) {
    P f;
    DecompositionInstance inst{2, {{3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}, 3};
    const auto a = decomposable(inst, 1, f, GenericSampler(6));
    EXPECT_TRUE(a.yes);
    EXPECT_TRUE(inst.certified_shape());
    EXPECT_FALSE(a.certified);
    DecompositionInstance dep{2, {{2, {{1, 0, 0}, {2, 0, 0}}}}, 2};
    EXPECT_THROW(decomposable(dep, 1, f, GenericSampler(6)), Error);
    DecompositionInstance none{3, {}, 2};
    EXPECT_THROW(decomposable(none, 1, f, GenericSampler(6)), Error);
    DecompositionInstance too_big{2, {{4, {}}}, 2};
    EXPECT_THROW(decomposable(too_big, 1, f, GenericSampler(6)), Error);
}
