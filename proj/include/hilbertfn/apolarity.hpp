#pragma once

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "postulation.hpp"

namespace hilbertfn {

enum class GroupRole { pair, triple, general };

inline GroupRole role_for_size(int k) {
    return k == 2 ? GroupRole::pair : k == 3 ? GroupRole::triple : GroupRole::general;
}

/// Linear forms in the dual variables y_0..y_n, one per row.
template <ExactField F>
struct FormGroup {
    Matrix<F> generators;
    GroupRole role = GroupRole::general;

    int size() const { return static_cast<int>(generators.rows()); }
};

/// Recipe for one group: its size and, optionally, explicit generators.
struct GroupShape {
    int size = 0;
    std::vector<std::vector<std::int64_t>> coords;
};

struct DecompositionInstance {
    int n = 0;
    std::vector<GroupShape> groups;
    int d = 1;

    /// s pairs plus exactly one triple.
    bool certified_shape() const {
        int triples = 0;
        for (const auto& g : groups) {
            if (g.size == 3) ++triples;
            else if (g.size != 2) return false;
        }
        return triples == 1;
    }
};

/// Degree-d part of the subring generated by the group, expanded in the
/// monomial basis of the dual ring: one row per degree-d monomial in the
/// generators.
template <ExactField F>
Matrix<F> subring_span_matrix(const FormGroup<F>& g, int d) {
    if (d < 1) throw Error(Errc::unsupported_degree, "subring spans need d >= 1");
    if (rank(g.generators) != g.generators.rows())
        throw Error(Errc::degenerate_parametrization, "group generators are linearly dependent");
    // z_i -> l_i(y) sends each monomial in the z's to its expansion in T_d
    return substitution_matrix(g.generators, d).transpose();
}

/// Linear subspace of P^n cut out by the forms annihilating the group's span.
template <ExactField F>
Subspace<F> dual_subspace(const FormGroup<F>& g) {
    const auto ideal1 = kernel_basis(g.generators);        // columns: x-forms killing every generator
    return Subspace<F>(kernel_basis(ideal1.transpose()));  // points where those forms vanish
}

template <ExactField F>
Configuration<F> dual_configuration(const std::vector<FormGroup<F>>& groups, const F& f, int n) {
    Configuration<F> x(f, n);
    int k = 0;
    for (const auto& g : groups) {
        if (g.generators.cols() != static_cast<std::size_t>(n) + 1)
            throw Error(Errc::ambient_mismatch, "group forms must have n + 1 coefficients");
        x.add_linear(dual_subspace(g), "group#" + std::to_string(k++));
    }
    return x;
}

template <ExactField F>
std::vector<FormGroup<F>> instantiate_groups(const DecompositionInstance& inst, const F& f, GenericSampler& s) {
    if (inst.n < 1) throw Error(Errc::dimension_mismatch, "n must be >= 1");
    const auto width = static_cast<std::size_t>(inst.n) + 1;
    std::vector<FormGroup<F>> out;
    for (const auto& gs : inst.groups) {
        if (gs.size < 1 || static_cast<std::size_t>(gs.size) > width)
            throw Error(Errc::dimension_mismatch, "group size must be between 1 and n + 1");
        Matrix<F> gen(f, 0, width);
        if (!gs.coords.empty()) {
            if (gs.coords.size() != static_cast<std::size_t>(gs.size))
                throw Error(Errc::parse_error, "explicit generators must match the group size");
            for (const auto& row : gs.coords) {
                if (row.size() != width) throw Error(Errc::parse_error, "generator length must be n + 1");
                std::vector<typename F::value_type> v;
                for (auto e : row) v.push_back(f.from_integer(e));
                gen.append_row(v);
            }
            if (rank(gen) != gen.rows()) throw Error(Errc::degenerate_parametrization, "explicit generators are dependent");
        } else {
            do {
                gen = random_matrix(f, s, static_cast<std::size_t>(gs.size), width);
            } while (rank(gen) != gen.rows());
        }
        out.push_back({std::move(gen), role_for_size(gs.size)});
    }
    return out;
}

struct DecompositionAnswer {
    int n = 0, d = 0;
    bool yes = false;
    long long defect = 0;     // codimension of the sum of subrings in degree d
    long long span_rank = 0;  // rank of the stacked subring spans
    bool certified = false;   // s pairs + one triple
    bool duality_holds = true;
    bool trials_agreed = true;
};

/// Is every degree-d form a sum f_1(group_1) + ... ? Computed on the dual
/// configuration and cross-checked against the stacked subring spans.
template <ExactField F>
DecompositionAnswer decomposable(const DecompositionInstance& inst, int trials, const F& f, const GenericSampler& sampler) {
    if (inst.d < 1) throw Error(Errc::unsupported_degree, "decomposition degree must be >= 1");
    if (trials < 1) throw Error(Errc::bound_violation, "trials must be >= 1");
    if (inst.groups.empty()) throw Error(Errc::empty_input, "instance has no groups");
    const long long total = binomial_ll(inst.n + inst.d, inst.n);
    DecompositionAnswer a;
    a.n = inst.n;
    a.d = inst.d;
    a.certified = inst.certified_shape() && inst.n >= 3;
    std::optional<long long> first;
    for (int t = 0; t < trials; ++t) {
        auto s = sampler.split(static_cast<std::uint64_t>(t));
        const auto groups = instantiate_groups(inst, f, s);
        Matrix<F> stacked(f, 0, static_cast<std::size_t>(total));
        for (const auto& g : groups) stacked.append_rows(subring_span_matrix(g, inst.d));
        const auto r = static_cast<long long>(rank(stacked));
        const long long dim = ideal_dim(dual_configuration(groups, f, inst.n), inst.d);
        if (r + dim != total) a.duality_holds = false;
        if (first && *first != dim) a.trials_agreed = false;
        if (!first || dim < a.defect) {
            a.defect = dim;
            a.span_rank = r;
        }
        if (!first) first = dim;
    }
    a.yes = a.defect == 0;
    return a;
}

} // namespace hilbertfn
