#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace hilbertfn {

/// Dense row-major matrix over an exact field. Value semantics; the field
/// travels with the matrix so that stacking blocks over different moduli is
/// caught instead of silently mixing residues.
template <ExactField F>
class Matrix {
public:
    using field_type = F;
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

    static Matrix from_rows(F field, const std::vector<std::vector<value_type>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows.front().size();
        Matrix m(std::move(field), 0, cols);
        for (const auto& r : rows) m.append_row(r);
        return m;
    }

    static Matrix from_integers(F field, const std::vector<std::vector<std::int64_t>>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(field, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw Error(Errc::invalid_matrix, "ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_integer(rows[i][j]);
        }
        return m;
    }

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// n x k matrix whose columns are the given vectors.
    static Matrix from_columns(F field, std::size_t n, const std::vector<std::vector<value_type>>& columns) {
        Matrix m(field, n, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != n) throw Error(Errc::dimension_mismatch, "column length");
            for (std::size_t i = 0; i < n; ++i) {
                if (!field.contains(columns[j][i])) throw Error(Errc::invalid_matrix, "entry outside field");
                m(i, j) = columns[j][i];
            }
        }
        return m;
    }

    const F& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const value_type> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<value_type> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    std::vector<value_type> column(std::size_t c) const {
        std::vector<value_type> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    const std::vector<value_type>& data() const noexcept { return data_; }

    void append_row(std::span<const value_type> values) {
        if (values.size() != cols_) throw Error(Errc::dimension_mismatch, "row length " + std::to_string(values.size()) +
                                                                              " vs " + std::to_string(cols_));
        for (const auto& v : values)
            if (!field_.contains(v)) throw Error(Errc::invalid_matrix, "entry outside field");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }
    void append_row(const std::vector<value_type>& values) { append_row(std::span<const value_type>(values)); }

    void append_rows(const Matrix& other) {
        if (!(other.field_ == field_)) throw Error(Errc::invalid_matrix, "stacking matrices over different fields");
        if (other.cols_ != cols_) throw Error(Errc::dimension_mismatch, "column counts differ");
        data_.insert(data_.end(), other.data_.begin(), other.data_.end());
        rows_ += other.rows_;
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [first, first + count).
    Matrix column_block(std::size_t first, std::size_t count) const {
        Matrix out(field_, rows_, count);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (!(a.field_ == b.field_)) throw Error(Errc::invalid_matrix, "product of matrices over different fields");
        if (a.cols_ != b.rows_) throw Error(Errc::dimension_mismatch, "product shape");
        const F& f = a.field_;
        Matrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (f.is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
            }
        return c;
    }

    std::vector<value_type> apply(const std::vector<value_type>& x) const {
        if (x.size() != cols_) throw Error(Errc::dimension_mismatch, "vector length");
        std::vector<value_type> y(rows_, field_.zero());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) y[i] = field_.add(y[i], field_.mul((*this)(i, j), x[j]));
        return y;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

namespace detail {

template <ExactField F>
void check_entries(const Matrix<F>& m) {
    for (const auto& v : m.data())
        if (!m.field().contains(v)) throw Error(Errc::invalid_matrix, "entry outside field");
}

/// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
template <ExactField F>
std::vector<std::size_t> reduce_in_place(Matrix<F>& m, std::size_t col_limit) {
    const F& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < col_limit && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && f.is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const auto scale = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            const auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank_mod_p(const PrimeField& f, std::vector<std::uint64_t> a, std::size_t rows, std::size_t cols) {
    const std::uint64_t p = f.modulus();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
        std::uint64_t* prow = a.data() + r * cols;
        const std::uint64_t inv = f.inv(prow[c]);
        for (std::size_t j = c; j < cols; ++j) prow[j] = prow[j] * inv % p;
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t* row = a.data() + i * cols;
            const std::uint64_t factor = row[c];
            if (factor == 0) continue;
            const std::uint64_t neg = p - factor;
            for (std::size_t j = c; j < cols; ++j) row[j] = (row[j] + neg * prow[j]) % p;
        }
        ++r;
    }
    return r;
}

/// Fraction-free (Bareiss) elimination: rows are first cleared of denominators,
/// then every intermediate entry is a minor of that integer matrix.
inline std::size_t rank_bareiss(const Matrix<RationalField>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<BigInt> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, BigInt(denominator(m(i, j))));
        for (std::size_t j = 0; j < cols; ++j)
            a[i * cols + j] = numerator(m(i, j)) * (l / BigInt(denominator(m(i, j))));
    }
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols, a.begin() + r * cols);
        const BigInt pivot = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const BigInt factor = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i * cols + j] = (pivot * a[i * cols + j] - factor * a[r * cols + j]) / prev;
            a[i * cols + c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

} // namespace detail

/// Exact rank; the argument is not modified.
template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    detail::check_entries(m);
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if constexpr (std::same_as<F, PrimeField>) {
        return detail::rank_mod_p(m.field(), m.data(), m.rows(), m.cols());
    } else if constexpr (std::same_as<F, RationalField>) {
        return detail::rank_bareiss(m);
    } else {
        Matrix<F> copy = m;
        return detail::reduce_in_place(copy, copy.cols()).size();
    }
}

template <ExactField F>
std::size_t kernel_dim(const Matrix<F>& m) {
    return m.cols() - rank(m);
}

/// Reduced row echelon form (zero rows kept at the bottom).
template <ExactField F>
Matrix<F> rref(Matrix<F> m, std::vector<std::size_t>* pivots = nullptr) {
    detail::check_entries(m);
    auto p = detail::reduce_in_place(m, m.cols());
    if (pivots) *pivots = std::move(p);
    return m;
}

/// Columns of the result form a basis of {x : m x = 0}.
template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    const Matrix<F> r = rref(m, &pivots);
    const F& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<F> basis(f, m.cols(), m.cols() - pivots.size());
    std::size_t k = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = f.neg(r(i, free));
        ++k;
    }
    return basis;
}

/// Some x with a x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
template <ExactField F>
std::optional<std::vector<typename F::value_type>> solve(const Matrix<F>& a,
                                                          const std::vector<typename F::value_type>& b) {
    if (b.size() != a.rows()) throw Error(Errc::dimension_mismatch, "right-hand side length");
    const F& f = a.field();
    Matrix<F> aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    detail::check_entries(aug);
    const auto pivots = detail::reduce_in_place(aug, aug.cols());
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<typename F::value_type> x(a.cols(), f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
    return x;
}

/// Indices of a maximal independent subset of columns (first-come order).
template <ExactField F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots;
}

} // namespace hilbertfn
