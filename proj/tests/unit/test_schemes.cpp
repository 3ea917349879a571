#include <gtest/gtest.h>

#include <hilbertfn/postulation.hpp>
#include <hilbertfn/schemes.hpp>

using namespace hilbertfn;

namespace {

using P = PrimeField;

template <class T>
std::size_t count_kind(const Configuration<P>& x) {
    std::size_t k = 0;
    for (const auto& c : x.components()) k += std::holds_alternative<T>(c) ? 1 : 0;
    return k;
}

} // namespace

TEST(JetPoint, SupportMustLieInSpan) {
    P f;
    GenericSampler s(1);
    const auto t = random_subspace(f, s, 4, 2);
    const auto off = random_point(f, s, 4);
    try {
        JetPoint<P> j(off, t);
        FAIL() << "accepted a point outside its span";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_contained);
    }
    EXPECT_NO_THROW(JetPoint<P>(random_point_in(t, s), t));
}

TEST(Configuration, AmbientAndFieldChecks) {
    P f, g(101);
    GenericSampler s(2);
    Configuration<P> x(f, 3);
    EXPECT_THROW(x.add_linear(random_subspace(f, s, 4, 1)), Error);
    Configuration<P> y(g, 3);
    y.add_linear(random_subspace(g, s, 3, 1));
    try {
        x.append(y);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::invalid_matrix);
    }
}

TEST(DegenerateConic, ShapeAndSevenConditionsOnCubics) {
    P f;
    GenericSampler s(3);
    for (int i = 0; i < 5; ++i) {
        const auto c = make_degenerate_conic(f, s, 3);
        EXPECT_TRUE(contains(c.first, c.vertex));
        EXPECT_TRUE(contains(c.second, c.vertex));
        EXPECT_FALSE(c.first == c.second);
        EXPECT_EQ(span<P>({c.first, c.second}).dim(), 2);
        EXPECT_EQ(hilbert_function(c.configuration(), 3), 7);
        for (int d = 1; d <= 5; ++d) EXPECT_EQ(hilbert_function(c.configuration(), d), 2 * d + 1);
    }
}

TEST(Sundial, IncidencesAndDimensions) {
    P f;
    GenericSampler s(4);
    for (int n = 3; n <= 6; ++n)
        for (int m = 1; m + 2 <= n; ++m) {
            const auto sd = make_sundial(f, s, n, m);
            EXPECT_EQ(sd.m(), m);
            EXPECT_EQ(sd.line.dim(), 1);
            EXPECT_TRUE(contains(sd.line, sd.vertex));
            EXPECT_TRUE(contains(sd.plane, sd.vertex));
            EXPECT_EQ(span<P>({sd.line, sd.plane}).dim(), m + 1);
            EXPECT_EQ(sd.span.dim(), m + 2);
            EXPECT_TRUE(contains_sub(sd.span, sd.line));
            EXPECT_TRUE(contains_sub(sd.span, sd.plane));
        }
    EXPECT_THROW(make_sundial(f, s, 3, 2), Error);
}

TEST(Sundial, ImposesSameConditionsAsDisjointPair) {
    // values frozen from tests/oracle/point_sampling_oracle.py
    P f;
    GenericSampler s(5);
    EXPECT_EQ(ideal_dim(make_sundial(f, s, 3, 1).configuration(), 2), 4);
    EXPECT_EQ(ideal_dim(make_sundial(f, s, 4, 2).configuration(), 1), 0);
    EXPECT_EQ(ideal_dim(make_sundial(f, s, 4, 1).configuration(), 3), 27);
    EXPECT_EQ(ideal_dim(make_sundial(f, s, 5, 2).configuration(), 2), 12);
}

TEST(Residual, SundialInsideHyperplaneLeavesItsVertex) {
    P f;
    GenericSampler s(6);
    const auto sd = make_sundial(f, s, 3, 1);
    const auto h = span<P>({sd.line, sd.plane});
    ASSERT_EQ(h.dim(), 2);
    const auto res = residual(sd.configuration(), h);
    ASSERT_EQ(res.size(), 1u);
    const auto* pt = std::get_if<ReducedPoint<P>>(&res.components().front());
    ASSERT_NE(pt, nullptr);
    EXPECT_EQ(pt->point, sd.vertex);
}

TEST(Residual, ComponentRules) {
    P f;
    GenericSampler s(7);
    const int n = 4;
    const auto h = random_subspace(f, s, n, n - 1);
    Configuration<P> x(f, n);
    const auto pi = random_subspace(f, s, n, 2);
    x.add_linear(pi, "Pi");
    x.add_linear(random_subspace_in(h, s, 1), "L in H");
    x.add_point(random_point_in(h, s), "P on H");
    x.add_point(random_point(f, s, n), "P off H");
    const auto res = residual(x, h);
    ASSERT_EQ(res.size(), 2u);
    EXPECT_EQ(std::get<LinearSpace<P>>(res.components()[0]).space, pi);
    EXPECT_EQ(res.labels()[1], "P off H");

    Configuration<P> bad(f, n);
    const auto t = random_subspace_in(h, s, 2);
    bad.add(JetPoint<P>(random_point_in(t, s), t));
    try {
        residual(bad, h);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unsupported_residual);
    }
}

TEST(Residual, LinesMovedIntoHyperplaneDrop) {
    P f;
    GenericSampler s(8);
    const int n = 4, e_bar = 3, extra = 2;
    const auto h = random_subspace(f, s, n, n - 1);
    Configuration<P> y(f, n);
    y.add_linear(random_subspace(f, s, n, 2), "Pi");
    for (int i = 0; i < e_bar; ++i) y.add_linear(random_subspace(f, s, n, 1), "L");
    for (int i = 0; i < extra; ++i) y.add_linear(random_subspace_in(h, s, 1), "LH");
    const auto res = residual(y, h);
    EXPECT_EQ(res.size(), static_cast<std::size_t>(1 + e_bar));
    for (const auto& l : res.labels()) EXPECT_NE(l, "LH");
}

TEST(Trace, ComponentRules) {
    P f;
    GenericSampler s(9);
    const int n = 4;
    const auto h = random_subspace(f, s, n, n - 1);
    Configuration<P> x(f, n);
    x.add_linear(random_subspace(f, s, n, 1));
    auto tr = trace(x, h);
    EXPECT_EQ(tr.ambient_dim(), n - 1);
    ASSERT_EQ(tr.size(), 1u);
    EXPECT_EQ(std::get<LinearSpace<P>>(tr.components()[0]).space.dim(), 0);

    Configuration<P> y(f, n);
    y.add_linear(random_subspace(f, s, n, 2));
    y.add_linear(random_subspace_in(h, s, 2));
    y.add_point(random_point(f, s, n));
    y.add_point(random_point_in(h, s));
    tr = trace(y, h);
    EXPECT_EQ(count_kind<LinearSpace<P>>(tr), 2u);
    EXPECT_EQ(count_kind<ReducedPoint<P>>(tr), 1u);
    EXPECT_EQ(std::get<LinearSpace<P>>(tr.components()[0]).space.dim(), 1);
    EXPECT_EQ(std::get<LinearSpace<P>>(tr.components()[1]).space.dim(), 2);
}

TEST(Trace, JetCutDownToHyperplane) {
    P f;
    GenericSampler s(10);
    const int n = 4;
    const auto h = random_subspace(f, s, n, n - 1);
    const auto p = random_point_in(h, s);
    Configuration<P> x(f, n);
    x.add(JetPoint<P>(p, Subspace<P>::whole(f, n)));
    const auto tr = trace(x, h);
    ASSERT_EQ(tr.size(), 1u);
    const auto& j = std::get<JetPoint<P>>(tr.components()[0]);
    EXPECT_EQ(j.span.dim(), n - 1);
    EXPECT_EQ(j.span.ambient_dim(), n - 1);
}
