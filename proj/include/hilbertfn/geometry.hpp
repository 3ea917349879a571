#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "sampler.hpp"

namespace hilbertfn {

/// A point of P^n; coordinates are scaled so the first nonzero entry is 1.
template <ExactField F>
class ProjPoint {
public:
    using value_type = typename F::value_type;

    ProjPoint(F field, std::vector<value_type> coords) : field_(std::move(field)), coords_(std::move(coords)) {
        if (coords_.empty()) throw Error(Errc::dimension_mismatch, "point needs at least one coordinate");
        auto lead = std::find_if(coords_.begin(), coords_.end(), [&](const auto& v) { return !field_.is_zero(v); });
        if (lead == coords_.end()) throw Error(Errc::dimension_mismatch, "zero vector is not a projective point");
        const auto scale = field_.inv(*lead);
        for (auto& v : coords_) {
            if (!field_.contains(v)) throw Error(Errc::invalid_matrix, "coordinate outside field");
            v = field_.mul(v, scale);
        }
    }

    const F& field() const noexcept { return field_; }
    int ambient_dim() const noexcept { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<value_type>& coords() const noexcept { return coords_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

private:
    F field_;
    std::vector<value_type> coords_;
};

/// An m-dimensional linear subspace of P^n, stored as an (n+1) x (m+1)
/// parametrization of full column rank. Equality compares column spans.
template <ExactField F>
class Subspace {
public:
    using value_type = typename F::value_type;

    explicit Subspace(Matrix<F> param) : param_(std::move(param)) {
        if (param_.cols() == 0 || param_.cols() > param_.rows() || rank(param_) != param_.cols())
            throw Error(Errc::degenerate_parametrization, "subspace parametrization must have full column rank");
    }

    static Subspace from_point(const ProjPoint<F>& p) {
        return Subspace(Matrix<F>::from_columns(p.field(), p.coords().size(), {p.coords()}));
    }

    static Subspace whole(const F& f, int n) { return Subspace(Matrix<F>::identity(f, static_cast<std::size_t>(n) + 1)); }

    const F& field() const noexcept { return param_.field(); }
    int ambient_dim() const noexcept { return static_cast<int>(param_.rows()) - 1; }
    int dim() const noexcept { return static_cast<int>(param_.cols()) - 1; }
    const Matrix<F>& param() const noexcept { return param_; }

    /// Reduced column echelon form of the parametrization.
    Matrix<F> canonical() const { return rref(param_.transpose()).transpose(); }

    /// Linear forms (as rows) cutting out the subspace.
    Matrix<F> equations() const { return kernel_basis(param_.transpose()).transpose(); }

    ProjPoint<F> as_point() const {
        if (dim() != 0) throw Error(Errc::dimension_mismatch, "subspace is not a point");
        return ProjPoint<F>(field(), param_.column(0));
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim() == b.ambient_dim() && a.dim() == b.dim() && a.canonical() == b.canonical();
    }

private:
    Matrix<F> param_;
};

template <ExactField F>
std::vector<typename F::value_type> random_vector(const F& f, GenericSampler& s, std::size_t len) {
    std::vector<typename F::value_type> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) v.push_back(f.sample(s));
    return v;
}

template <ExactField F>
Matrix<F> random_matrix(const F& f, GenericSampler& s, std::size_t rows, std::size_t cols) {
    Matrix<F> m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.sample(s);
    return m;
}

/// Generic m-plane of P^n; redrawn until the parametrization has full rank.
template <ExactField F>
Subspace<F> random_subspace(const F& f, GenericSampler& s, int n, int m) {
    if (m < 0 || m > n) throw Error(Errc::dimension_mismatch, "need 0 <= m <= n");
    for (;;) {
        auto a = random_matrix(f, s, static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(m) + 1);
        if (rank(a) == a.cols()) return Subspace<F>(std::move(a));
    }
}

template <ExactField F>
ProjPoint<F> random_point(const F& f, GenericSampler& s, int n) {
    return random_subspace(f, s, n, 0).as_point();
}

/// Generic k-plane inside the given subspace (k <= dim S).
template <ExactField F>
Subspace<F> random_subspace_in(const Subspace<F>& container, GenericSampler& s, int k) {
    if (k < 0 || k > container.dim()) throw Error(Errc::dimension_mismatch, "inner dimension exceeds container");
    for (;;) {
        auto coeffs = random_matrix(container.field(), s, container.param().cols(), static_cast<std::size_t>(k) + 1);
        if (rank(coeffs) != coeffs.cols()) continue;
        return Subspace<F>(container.param() * coeffs);
    }
}

template <ExactField F>
ProjPoint<F> random_point_in(const Subspace<F>& container, GenericSampler& s) {
    return random_subspace_in(container, s, 0).as_point();
}

/// Generic k-plane containing the given subspace (k >= dim S).
template <ExactField F>
Subspace<F> random_subspace_through(const Subspace<F>& inner, GenericSampler& s, int k) {
    const int n = inner.ambient_dim();
    if (k < inner.dim() || k > n) throw Error(Errc::dimension_mismatch, "outer dimension out of range");
    const auto extra = static_cast<std::size_t>(k - inner.dim());
    for (;;) {
        Matrix<F> a(inner.field(), static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(k) + 1);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < inner.param().cols(); ++j) a(i, j) = inner.param()(i, j);
            for (std::size_t j = 0; j < extra; ++j) a(i, inner.param().cols() + j) = inner.field().sample(s);
        }
        if (rank(a) == a.cols()) return Subspace<F>(std::move(a));
    }
}

template <ExactField F>
bool in_span(const Matrix<F>& param, const std::vector<typename F::value_type>& v) {
    return solve(param, v).has_value();
}

template <ExactField F>
bool contains(const Subspace<F>& s, const ProjPoint<F>& p) {
    if (s.ambient_dim() != p.ambient_dim()) throw Error(Errc::ambient_mismatch, "contains: ambient dimensions differ");
    return in_span(s.param(), p.coords());
}

template <ExactField F>
bool contains_sub(const Subspace<F>& s, const Subspace<F>& inner) {
    if (s.ambient_dim() != inner.ambient_dim())
        throw Error(Errc::ambient_mismatch, "contains_sub: ambient dimensions differ");
    for (std::size_t j = 0; j < inner.param().cols(); ++j)
        if (!in_span(s.param(), inner.param().column(j))) return false;
    return true;
}

/// Linear form h (length n+1) with H = {h = 0}.
template <ExactField F>
std::vector<typename F::value_type> hyperplane_equation(const Subspace<F>& h) {
    if (h.dim() != h.ambient_dim() - 1) throw Error(Errc::dimension_mismatch, "not a hyperplane");
    return h.equations().transpose().column(0);
}

/// S cap H for a hyperplane H. Throws improper-intersection when S lies in H;
/// returns nullopt when S is a point off H.
template <ExactField F>
std::optional<Subspace<F>> intersect_hyperplane(const Subspace<F>& s, const Subspace<F>& h) {
    if (s.ambient_dim() != h.ambient_dim()) throw Error(Errc::ambient_mismatch, "intersect_hyperplane");
    const auto eq = hyperplane_equation(h);
    const F& f = s.field();
    Matrix<F> restricted(f, 1, s.param().cols());
    bool all_zero = true;
    for (std::size_t j = 0; j < s.param().cols(); ++j) {
        auto acc = f.zero();
        for (std::size_t i = 0; i < s.param().rows(); ++i) acc = f.add(acc, f.mul(eq[i], s.param()(i, j)));
        restricted(0, j) = acc;
        all_zero = all_zero && f.is_zero(acc);
    }
    if (all_zero) throw Error(Errc::improper_intersection, "subspace lies in the hyperplane");
    if (s.dim() == 0) return std::nullopt;
    return Subspace<F>(s.param() * kernel_basis(restricted));
}

/// Smallest subspace containing every input.
template <ExactField F>
Subspace<F> span(const std::vector<Subspace<F>>& parts) {
    if (parts.empty()) throw Error(Errc::empty_input, "span of nothing");
    const int n = parts.front().ambient_dim();
    std::vector<std::vector<typename F::value_type>> cols;
    for (const auto& p : parts) {
        if (p.ambient_dim() != n) throw Error(Errc::ambient_mismatch, "span: ambient dimensions differ");
        for (std::size_t j = 0; j < p.param().cols(); ++j) cols.push_back(p.param().column(j));
    }
    const auto all = Matrix<F>::from_columns(parts.front().field(), static_cast<std::size_t>(n) + 1, cols);
    std::vector<std::vector<typename F::value_type>> basis;
    for (auto j : independent_columns(all)) basis.push_back(cols[j]);
    return Subspace<F>(Matrix<F>::from_columns(all.field(), all.rows(), basis));
}

/// Reparametrize an object lying in the hyperplane H as an object of
/// P^{n-1} ~ H, using H's own parametrization as coordinates.
template <ExactField F>
Subspace<F> in_hyperplane_coords(const Subspace<F>& s, const Subspace<F>& h) {
    if (s.ambient_dim() != h.ambient_dim()) throw Error(Errc::ambient_mismatch, "in_hyperplane_coords");
    if (h.dim() != h.ambient_dim() - 1) throw Error(Errc::dimension_mismatch, "not a hyperplane");
    std::vector<std::vector<typename F::value_type>> cols;
    for (std::size_t j = 0; j < s.param().cols(); ++j) {
        auto x = solve(h.param(), s.param().column(j));
        if (!x) throw Error(Errc::not_contained, "object is not contained in the hyperplane");
        cols.push_back(std::move(*x));
    }
    return Subspace<F>(Matrix<F>::from_columns(s.field(), h.param().cols(), cols));
}

template <ExactField F>
ProjPoint<F> in_hyperplane_coords(const ProjPoint<F>& p, const Subspace<F>& h) {
    return in_hyperplane_coords(Subspace<F>::from_point(p), h).as_point();
}

} // namespace hilbertfn
