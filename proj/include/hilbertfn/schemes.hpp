#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "geometry.hpp"

namespace hilbertfn {

template <ExactField F>
struct LinearSpace {
    Subspace<F> space;
};

template <ExactField F>
struct ReducedPoint {
    ProjPoint<F> point;
};

/// 2P|_T: first-order neighbourhood of P inside the linear space T. With
/// T = P^n this is the ordinary double point.
template <ExactField F>
struct JetPoint {
    ProjPoint<F> point;
    Subspace<F> span;

    JetPoint(ProjPoint<F> p, Subspace<F> t) : point(std::move(p)), span(std::move(t)) {
        if (!contains(span, point)) throw Error(Errc::not_contained, "jet point support must lie in its span");
    }
};

template <ExactField F>
using Component = std::variant<LinearSpace<F>, ReducedPoint<F>, JetPoint<F>>;

template <ExactField F>
int ambient_dim_of(const Component<F>& c) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, LinearSpace<F>>) return x.space.ambient_dim();
            else return x.point.ambient_dim();
        },
        c);
}

/// Finite union of scheme pieces in one P^n. Duplicates are allowed; the
/// rank computation sorts out dependencies.
template <ExactField F>
class Configuration {
public:
    Configuration(F field, int ambient_dim) : field_(std::move(field)), n_(ambient_dim) {
        if (n_ < 0) throw Error(Errc::dimension_mismatch, "negative ambient dimension");
    }

    const F& field() const noexcept { return field_; }
    int ambient_dim() const noexcept { return n_; }
    const std::vector<Component<F>>& components() const noexcept { return components_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t size() const noexcept { return components_.size(); }
    bool empty() const noexcept { return components_.empty(); }

    Configuration& add(Component<F> c, std::string label = {}) {
        if (ambient_dim_of(c) != n_) throw Error(Errc::ambient_mismatch, "component lives in a different P^n");
        components_.push_back(std::move(c));
        labels_.push_back(std::move(label));
        return *this;
    }
    Configuration& add_linear(Subspace<F> s, std::string label = {}) { return add(LinearSpace<F>{std::move(s)}, std::move(label)); }
    Configuration& add_point(ProjPoint<F> p, std::string label = {}) { return add(ReducedPoint<F>{std::move(p)}, std::move(label)); }

    Configuration& append(const Configuration& other) {
        if (!(other.field_ == field_)) throw Error(Errc::invalid_matrix, "configurations over different fields");
        for (std::size_t i = 0; i < other.size(); ++i) add(other.components_[i], other.labels_[i]);
        return *this;
    }

private:
    F field_;
    int n_;
    std::vector<Component<F>> components_;
    std::vector<std::string> labels_;
};

/// Two lines meeting in exactly one point.
template <ExactField F>
struct DegenerateConic {
    Subspace<F> first;
    Subspace<F> second;
    ProjPoint<F> vertex;

    void append_to(Configuration<F>& x, const std::string& tag = "conic") const {
        x.add_linear(first, tag + ".L1");
        x.add_linear(second, tag + ".L2");
    }
    Configuration<F> configuration() const {
        Configuration<F> x(vertex.field(), vertex.ambient_dim());
        append_to(x);
        return x;
    }
};

/// L + Pi + 2P|_T with P = L cap Pi and T a generic (m+2)-space containing
/// the (m+1)-dimensional span of L and Pi.
template <ExactField F>
struct Sundial {
    Subspace<F> line;
    Subspace<F> plane; // dimension m
    ProjPoint<F> vertex;
    Subspace<F> span;  // dimension m + 2

    int m() const { return plane.dim(); }

    void append_to(Configuration<F>& x, const std::string& tag = "sundial") const {
        x.add_linear(line, tag + ".L");
        x.add_linear(plane, tag + ".Pi");
        x.add(JetPoint<F>(vertex, span), tag + ".2P|T");
    }
    Configuration<F> configuration() const {
        Configuration<F> x(vertex.field(), vertex.ambient_dim());
        append_to(x);
        return x;
    }
};

/// Degenerate conic with both lines drawn inside `host` (dimension >= 2).
template <ExactField F>
DegenerateConic<F> make_degenerate_conic_in(const Subspace<F>& host, GenericSampler& s) {
    if (host.dim() < 2) throw Error(Errc::dimension_mismatch, "degenerate conic needs a host of dimension >= 2");
    for (;;) {
        const auto vertex = random_point_in(host, s);
        const auto q1 = random_point_in(host, s);
        const auto q2 = random_point_in(host, s);
        const auto pv = Subspace<F>::from_point(vertex);
        const auto plane = span<F>({pv, Subspace<F>::from_point(q1), Subspace<F>::from_point(q2)});
        if (plane.dim() != 2) continue;
        return {span<F>({pv, Subspace<F>::from_point(q1)}), span<F>({pv, Subspace<F>::from_point(q2)}), vertex};
    }
}

template <ExactField F>
DegenerateConic<F> make_degenerate_conic(const F& f, GenericSampler& s, int n) {
    if (n < 2) throw Error(Errc::dimension_mismatch, "degenerate conic needs n >= 2");
    return make_degenerate_conic_in(Subspace<F>::whole(f, n), s);
}

/// Sundial whose L and Pi lie in `host` (dimension >= m+1); the span T is
/// generic in the ambient space, so it leaves `host` whenever it can.
template <ExactField F>
Sundial<F> make_sundial_in(const Subspace<F>& host, GenericSampler& s, int m) {
    const int n = host.ambient_dim();
    if (m < 1) throw Error(Errc::dimension_mismatch, "sundial needs m >= 1");
    if (n < m + 2) throw Error(Errc::dimension_mismatch, "sundial needs n >= m + 2");
    if (host.dim() < m + 1) throw Error(Errc::dimension_mismatch, "host too small for L + Pi");
    for (;;) {
        auto plane = random_subspace_in(host, s, m);
        auto vertex = random_point_in(plane, s);
        auto q = random_point_in(host, s);
        if (contains(plane, q)) continue;
        auto line = span<F>({Subspace<F>::from_point(vertex), Subspace<F>::from_point(q)});
        auto joined = span<F>({line, plane});
        auto t = random_subspace_through(joined, s, m + 2);
        return {std::move(line), std::move(plane), std::move(vertex), std::move(t)};
    }
}

template <ExactField F>
Sundial<F> make_sundial(const F& f, GenericSampler& s, int n, int m) {
    if (n < m + 2) throw Error(Errc::dimension_mismatch, "sundial needs n >= m + 2");
    return make_sundial_in(Subspace<F>::whole(f, n), s, m);
}

namespace detail {

template <ExactField F>
bool point_on(const Subspace<F>& h, const ProjPoint<F>& p) {
    return contains(h, p);
}

} // namespace detail

/// Residual with respect to a hyperplane, component by component. Ideal
/// quotients distribute over intersections, so applying the per-component
/// rule is exact for these kinds:
///   linear space in H -> gone, otherwise kept;
///   reduced point on H -> gone, otherwise kept;
///   jet 2P|_T with P on H and T not in H -> the reduced point P;
///   jet with P off H -> kept.
template <ExactField F>
Configuration<F> residual(const Configuration<F>& x, const Subspace<F>& h) {
    if (h.ambient_dim() != x.ambient_dim()) throw Error(Errc::ambient_mismatch, "residual");
    Configuration<F> out(x.field(), x.ambient_dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& label = x.labels()[i];
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, LinearSpace<F>>) {
                    if (!contains_sub(h, c.space)) out.add(c, label);
                } else if constexpr (std::is_same_v<T, ReducedPoint<F>>) {
                    if (!detail::point_on(h, c.point)) out.add(c, label);
                } else {
                    if (!detail::point_on(h, c.point)) {
                        out.add(c, label);
                    } else if (contains_sub(h, c.span)) {
                        throw Error(Errc::unsupported_residual, "jet point whose span lies in the hyperplane");
                    } else {
                        out.add_point(c.point, label + ".res");
                    }
                }
            },
            x.components()[i]);
    }
    return out;
}

/// Trace on a hyperplane H, expressed in H's own coordinates (ambient n-1).
/// Jets keep their span cut down to H; any redundancy with other retained
/// components is left to the rank computation.
template <ExactField F>
Configuration<F> trace(const Configuration<F>& x, const Subspace<F>& h) {
    if (h.ambient_dim() != x.ambient_dim()) throw Error(Errc::ambient_mismatch, "trace");
    if (x.ambient_dim() < 1) throw Error(Errc::dimension_mismatch, "trace needs n >= 1");
    Configuration<F> out(x.field(), x.ambient_dim() - 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const auto& label = x.labels()[i];
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, LinearSpace<F>>) {
                    if (contains_sub(h, c.space)) {
                        out.add_linear(in_hyperplane_coords(c.space, h), label);
                    } else if (auto cut = intersect_hyperplane(c.space, h)) {
                        out.add_linear(in_hyperplane_coords(*cut, h), label + ".tr");
                    }
                } else if constexpr (std::is_same_v<T, ReducedPoint<F>>) {
                    if (detail::point_on(h, c.point)) out.add_point(in_hyperplane_coords(c.point, h), label);
                } else {
                    if (!detail::point_on(h, c.point)) return;
                    const Subspace<F> t = contains_sub(h, c.span) ? c.span : *intersect_hyperplane(c.span, h);
                    out.add(JetPoint<F>(in_hyperplane_coords(c.point, h), in_hyperplane_coords(t, h)), label + ".tr");
                }
            },
            x.components()[i]);
    }
    return out;
}

} // namespace hilbertfn
