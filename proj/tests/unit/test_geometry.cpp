#include <functional>

#include <gtest/gtest.h>

#include <hilbertfn/geometry.hpp>

using namespace hilbertfn;

namespace {

using P = PrimeField;
using Sub = Subspace<P>;

Sub coordinate_span(const P& f, int n, std::vector<int> idx) {
    std::vector<std::vector<std::uint64_t>> cols;
    for (int i : idx) {
        std::vector<std::uint64_t> e(static_cast<std::size_t>(n) + 1, 0);
        e[static_cast<std::size_t>(i)] = 1;
        cols.push_back(e);
    }
    return Sub(Matrix<P>::from_columns(f, static_cast<std::size_t>(n) + 1, cols));
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no hilbertfn::Error thrown";
    return Errc::overflow;
}

} // namespace

TEST(ProjPoint, CanonicalScaling) {
    P f(7);
    const ProjPoint<P> p(f, {0, 3, 6});
    EXPECT_EQ(p.coords(), (std::vector<std::uint64_t>{0, 1, 2}));
    EXPECT_EQ(p, ProjPoint<P>(f, {0, 2, 4}));
    EXPECT_EQ(code_of([&] { ProjPoint<P>(f, {0, 0}); }), Errc::dimension_mismatch);
}

TEST(RandomSubspace, ShapesAndDeterminism) {
    P f;
    GenericSampler s(1);
    const auto pt = random_subspace(f, s, 4, 0);
    EXPECT_EQ(pt.dim(), 0);
    EXPECT_NO_THROW(pt.as_point());
    const auto all = random_subspace(f, s, 4, 4);
    EXPECT_EQ(rank(all.param()), 5u);
    EXPECT_EQ(code_of([&] { random_subspace(f, s, 3, 4); }), Errc::dimension_mismatch);

    GenericSampler a(77), b(77);
    EXPECT_EQ(random_subspace(f, a, 5, 2).param(), random_subspace(f, b, 5, 2).param());
}

TEST(RandomSubspace, TwoGenericLinesInP3AreSkew) {
    P f;
    GenericSampler s(2);
    for (int i = 0; i < 20; ++i) {
        const auto l1 = random_subspace(f, s, 3, 1), l2 = random_subspace(f, s, 3, 1);
        auto stacked = l1.param().transpose();
        stacked.append_rows(l2.param().transpose());
        EXPECT_EQ(rank(stacked), 4u);
    }
}

TEST(Contains, Examples) {
    P f;
    const auto s = coordinate_span(f, 3, {0, 1});
    EXPECT_TRUE(contains(s, ProjPoint<P>(f, {1, 0, 0, 0})));
    EXPECT_FALSE(contains(s, ProjPoint<P>(f, {0, 0, 1, 0})));
    EXPECT_EQ(code_of([&] { contains(s, ProjPoint<P>(f, {1, 0, 0})); }), Errc::ambient_mismatch);
}

TEST(IntersectHyperplane, Examples) {
    P f;
    GenericSampler s(3);
    const auto h = random_subspace(f, s, 4, 3);
    const auto line = random_subspace(f, s, 4, 1);
    const auto pt = intersect_hyperplane(line, h);
    ASSERT_TRUE(pt.has_value());
    EXPECT_EQ(pt->dim(), 0);
    EXPECT_TRUE(contains_sub(h, *pt));
    EXPECT_TRUE(contains_sub(line, *pt));

    const auto plane = random_subspace(f, s, 4, 2);
    const auto cut = intersect_hyperplane(plane, h);
    ASSERT_TRUE(cut.has_value());
    EXPECT_EQ(cut->dim(), 1);

    const auto inside = random_subspace_in(h, s, 1);
    EXPECT_EQ(code_of([&] { intersect_hyperplane(inside, h); }), Errc::improper_intersection);

    const auto off = Sub::from_point(random_point(f, s, 4));
    EXPECT_FALSE(intersect_hyperplane(off, h).has_value());
}

TEST(Span, Examples) {
    P f;
    GenericSampler s(4);
    for (int n = 5; n <= 7; ++n) {
        const auto l = random_subspace(f, s, n, 1), pi = random_subspace(f, s, n, 2);
        EXPECT_EQ(span<P>({l, pi}).dim(), 4);
    }
    const auto p = Sub::from_point(random_point(f, s, 3));
    EXPECT_EQ(span<P>({p, p}), p);
    EXPECT_EQ(span<P>({random_subspace(f, s, 3, 1), random_subspace(f, s, 3, 1)}).dim(), 3);
    EXPECT_EQ(code_of([&] { span<P>({}); }), Errc::empty_input);
}

TEST(Subspace, EqualityIgnoresParametrization) {
    P f;
    const auto a = coordinate_span(f, 3, {0, 1});
    const auto b = Sub(Matrix<P>::from_integers(f, {{1, 1}, {1, 2}, {0, 0}, {0, 0}}));
    EXPECT_EQ(a, b);
    EXPECT_FALSE(a == coordinate_span(f, 3, {0, 2}));
}

TEST(Subspace, EquationsCutItOut) {
    P f;
    GenericSampler s(5);
    for (int n = 2; n <= 5; ++n)
        for (int m = 0; m < n; ++m) {
            const auto sp = random_subspace(f, s, n, m);
            const auto eq = sp.equations();
            EXPECT_EQ(eq.rows(), static_cast<std::size_t>(n - m));
            const auto prod = eq * sp.param();
            for (std::size_t i = 0; i < prod.rows(); ++i)
                for (std::size_t j = 0; j < prod.cols(); ++j) EXPECT_EQ(prod(i, j), 0u);
        }
}

TEST(InHyperplaneCoords, CoordinateDropAndRoundTrip) {
    P f;
    const int n = 4;
    const auto h = coordinate_span(f, n, {0, 1, 2, 3}); // x_4 = 0
    const auto line = coordinate_span(f, n, {0, 1});
    EXPECT_EQ(in_hyperplane_coords(line, h), coordinate_span(f, n - 1, {0, 1}));

    GenericSampler s(6);
    const auto hg = random_subspace(f, s, n, n - 1);
    for (int m = 0; m <= 2; ++m) {
        const auto inside = random_subspace_in(hg, s, m);
        const auto local = in_hyperplane_coords(inside, hg);
        EXPECT_EQ(local.ambient_dim(), n - 1);
        EXPECT_EQ(Sub(hg.param() * local.param()), inside);
    }
    const auto off = random_subspace(f, s, n, 1);
    EXPECT_EQ(code_of([&] { in_hyperplane_coords(off, hg); }), Errc::not_contained);
}

TEST(RandomSubspaceThrough, ContainsInnerAndHasRequestedDim) {
    P f;
    GenericSampler s(7);
    const auto inner = random_subspace(f, s, 5, 2);
    for (int k = 2; k <= 5; ++k) {
        const auto outer = random_subspace_through(inner, s, k);
        EXPECT_EQ(outer.dim(), k);
        EXPECT_TRUE(contains_sub(outer, inner));
    }
    EXPECT_EQ(code_of([&] { random_subspace_through(inner, s, 1); }), Errc::dimension_mismatch);
}
