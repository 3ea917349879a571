#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace hilbertfn {

/// Exact binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// C(n, k) as a machine integer; throws if it does not fit.
inline long long binomial_ll(long long n, long long k) {
    const BigInt b = binomial(n, k);
    if (b > std::numeric_limits<long long>::max()) throw Error(Errc::overflow, "binomial coefficient too large");
    return static_cast<long long>(b);
}

/// Dimension of the space of degree-d forms in `nvars` variables, C(nvars-1+d, d).
inline BigInt monomial_count(std::size_t nvars, int d) {
    if (nvars == 0) throw Error(Errc::dimension_mismatch, "need at least one variable");
    if (d < 0) return 0;
    return binomial(static_cast<long long>(nvars) - 1 + d, d);
}

inline std::size_t monomial_count_sz(std::size_t nvars, int d) {
    const BigInt c = monomial_count(nvars, d);
    if (c > BigInt(std::numeric_limits<std::size_t>::max() / 2)) throw Error(Errc::overflow, "monomial basis too large");
    return static_cast<std::size_t>(c);
}

/// Exponent vectors of total degree d in graded-lex order with x0 > x1 > ...,
/// i.e. x0^d comes first and x_{nvars-1}^d last.
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (degree < 0) throw Error(Errc::unsupported_degree, "negative degree");
        size_ = monomial_count_sz(nvars, degree);
        const std::size_t top = nvars_ + static_cast<std::size_t>(degree_) + 1;
        pascal_.assign(top * top, 0);
        for (std::size_t a = 0; a < top; ++a) {
            pascal_[a * top] = 1;
            for (std::size_t b = 1; b <= a; ++b)
                pascal_[a * top + b] = pascal_[(a - 1) * top + b - 1] + (b < a ? pascal_[(a - 1) * top + b] : 0);
        }
        pascal_width_ = top;
        exps_.reserve(size_ * nvars_);
        std::vector<int> e(nvars_, 0);
        enumerate(0, degree_, e);
    }

    std::size_t nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return size_; }

    std::span<const int> exponent(std::size_t index) const { return {exps_.data() + index * nvars_, nvars_}; }

    /// Position of an exponent vector, computed by counting the lex-larger
    /// vectors of the same degree.
    std::size_t index_of(std::span<const int> e) const {
        if (e.size() != nvars_) throw Error(Errc::dimension_mismatch, "exponent length");
        std::size_t idx = 0;
        int remaining = degree_;
        for (std::size_t i = 0; i + 1 < nvars_; ++i) {
            const std::size_t tail = nvars_ - i - 2;
            for (int v = remaining; v > e[i]; --v)
                idx += pascal_[(static_cast<std::size_t>(remaining - v) + tail) * pascal_width_ + tail];
            remaining -= e[i];
        }
        return idx;
    }

private:
    void enumerate(std::size_t pos, int remaining, std::vector<int>& e) {
        if (pos + 1 == nvars_) {
            e[pos] = remaining;
            exps_.insert(exps_.end(), e.begin(), e.end());
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            e[pos] = v;
            enumerate(pos + 1, remaining - v, e);
        }
    }

    std::size_t nvars_;
    int degree_;
    std::size_t size_ = 0;
    std::vector<int> exps_;
    std::vector<std::size_t> pascal_; // C(a, b) for a < pascal_width_
    std::size_t pascal_width_ = 0;
};

/// Homogeneous polynomial stored densely against a MonomialBasis.
template <ExactField F>
struct DensePoly {
    MonomialBasis basis;
    std::vector<typename F::value_type> coeffs;

    static DensePoly zero(const F& f, std::size_t nvars, int d) {
        MonomialBasis b(nvars, d);
        const std::size_t n = b.size();
        return {std::move(b), std::vector<typename F::value_type>(n, f.zero())};
    }
};

template <ExactField F>
DensePoly<F> multiply(const F& f, const DensePoly<F>& a, const DensePoly<F>& b) {
    const std::size_t nv = a.basis.nvars();
    auto out = DensePoly<F>::zero(f, nv, a.basis.degree() + b.basis.degree());
    std::vector<int> e(nv);
    for (std::size_t i = 0; i < a.basis.size(); ++i) {
        if (f.is_zero(a.coeffs[i])) continue;
        const auto ea = a.basis.exponent(i);
        for (std::size_t j = 0; j < b.basis.size(); ++j) {
            if (f.is_zero(b.coeffs[j])) continue;
            const auto eb = b.basis.exponent(j);
            for (std::size_t k = 0; k < nv; ++k) e[k] = ea[k] + eb[k];
            const std::size_t idx = out.basis.index_of(e);
            out.coeffs[idx] = f.add(out.coeffs[idx], f.mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return out;
}

/// Matrix of f(x) |-> f(A y) from degree-d forms in A.rows() variables to
/// degree-d forms in A.cols() variables. Column j holds the expansion of the
/// j-th source monomial. No rank condition on A.
template <ExactField F>
Matrix<F> substitution_matrix(const Matrix<F>& a, int d) {
    if (d < 0) throw Error(Errc::unsupported_degree, "negative degree");
    const F& f = a.field();
    const std::size_t src = a.rows(), dst = a.cols();
    const MonomialBasis src_basis(src, d);
    const MonomialBasis dst_basis(dst, d);

    // powers[i][k] = (sum_j a(i, j) y_j)^k
    std::vector<std::vector<DensePoly<F>>> powers(src);
    for (std::size_t i = 0; i < src; ++i) {
        auto lin = DensePoly<F>::zero(f, dst, 1);
        for (std::size_t j = 0; j < dst; ++j) lin.coeffs[j] = a(i, j); // degree-1 basis is y_0, y_1, ...
        auto one = DensePoly<F>::zero(f, dst, 0);
        one.coeffs[0] = f.one();
        powers[i].push_back(std::move(one));
        for (int k = 1; k <= d; ++k) powers[i].push_back(multiply(f, powers[i].back(), lin));
    }

    Matrix<F> out(f, dst_basis.size(), src_basis.size());
    for (std::size_t col = 0; col < src_basis.size(); ++col) {
        const auto e = src_basis.exponent(col);
        DensePoly<F> acc = powers[0][e[0]];
        for (std::size_t i = 1; i < src; ++i)
            if (e[i] > 0) acc = multiply(f, acc, powers[i][e[i]]);
        for (std::size_t r = 0; r < dst_basis.size(); ++r) out(r, col) = acc.coeffs[r];
    }
    return out;
}

/// Restriction of degree-d forms on P^n to the linear space parametrized by
/// the (n+1) x (m+1) matrix A. Kernel = degree-d part of the space's ideal.
template <ExactField F>
Matrix<F> restriction_matrix(const Matrix<F>& a, int d) {
    if (a.cols() == 0 || a.cols() > a.rows() || rank(a) != a.cols())
        throw Error(Errc::degenerate_parametrization, "parametrization must have full column rank");
    return substitution_matrix(a, d);
}

/// Row with entry p^alpha at each degree-d monomial alpha.
template <ExactField F>
std::vector<typename F::value_type> evaluation_row(const F& f, std::span<const typename F::value_type> p, int d) {
    if (std::all_of(p.begin(), p.end(), [&](const auto& v) { return f.is_zero(v); }))
        throw Error(Errc::dimension_mismatch, "evaluation at the zero vector");
    const MonomialBasis basis(p.size(), d);
    std::vector<typename F::value_type> row(basis.size(), f.one());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto e = basis.exponent(k);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int t = 0; t < e[i]; ++t) row[k] = f.mul(row[k], p[i]);
    }
    return row;
}

/// Row with entry (D_q x^alpha)(p) = sum_i alpha_i q_i p^(alpha - e_i).
template <ExactField F>
std::vector<typename F::value_type> directional_derivative_row(const F& f, std::span<const typename F::value_type> p,
                                                               std::span<const typename F::value_type> q, int d) {
    if (d < 1) throw Error(Errc::unsupported_degree, "directional derivative needs degree >= 1");
    if (p.size() != q.size()) throw Error(Errc::dimension_mismatch, "point and direction lengths differ");
    auto nonzero = [&](std::span<const typename F::value_type> v) {
        return std::any_of(v.begin(), v.end(), [&](const auto& x) { return !f.is_zero(x); });
    };
    if (!nonzero(p) || !nonzero(q)) throw Error(Errc::dimension_mismatch, "zero point or direction");

    const MonomialBasis basis(p.size(), d);
    std::vector<typename F::value_type> row(basis.size(), f.zero());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto e = basis.exponent(k);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (e[i] == 0 || f.is_zero(q[i])) continue;
            auto term = f.mul(f.from_integer(e[i]), q[i]);
            for (std::size_t j = 0; j < p.size(); ++j) {
                const int power = e[j] - (j == i ? 1 : 0);
                for (int t = 0; t < power; ++t) term = f.mul(term, p[j]);
            }
            row[k] = f.add(row[k], term);
        }
    }
    return row;
}

} // namespace hilbertfn
