#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lsdial/errors.hpp"
#include "lsdial/rational.hpp"

namespace lsdial {

template <typename T>
concept FieldScalar = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    T(0);
    T(1);
};

// Dense row-major matrix over an exact field scalar.
template <FieldScalar T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw ShapeMismatch("ragged initializer for matrix");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix out(rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_)
            throw ShapeMismatch("matrix product: inner dimensions disagree");
        Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& lhs = (*this)(r, k);
                if (lhs == T(0)) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) out(r, c) = out(r, c) + lhs * o(k, c);
            }
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw ShapeMismatch("matrix apply: length disagrees with columns");
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out[r] = out[r] + (*this)(r, c) * v[c];
        return out;
    }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> out(rows_, T(0));
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

  private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch("matrix sum: shapes disagree");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <FieldScalar T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
    return out;
}

template <FieldScalar T>
Matrix<T> operator*(const Matrix<T>& m, const T& s) {
    return s * m;
}

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

template <FieldScalar T>
bool is_zero_vector(const std::vector<T>& v) {
    for (const T& x : v)
        if (!(x == T(0))) return false;
    return true;
}

template <FieldScalar T>
std::vector<T> vec_add(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw ShapeMismatch("vector sum: lengths disagree");
    std::vector<T> out(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

template <FieldScalar T>
std::vector<T> vec_sub(const std::vector<T>& x, const std::vector<T>& y) {
    if (x.size() != y.size()) throw ShapeMismatch("vector difference: lengths disagree");
    std::vector<T> out(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - y[i];
    return out;
}

template <FieldScalar T>
std::vector<T> vec_scale(const T& s, const std::vector<T>& x) {
    std::vector<T> out(x.size(), T(0));
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i];
    return out;
}

template <FieldScalar T>
struct RrefResult {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

// Gauss-Jordan reduction to reduced row echelon form. The result is the
// unique RREF of the input, so it doubles as a canonical form for row spans.
template <FieldScalar T>
RrefResult<T> rref(Matrix<T> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m(pr, c) == T(0)) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(pr, j));
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

// Canonical kernel basis: one vector per free column in ascending column
// order, with the free coordinate set to one.
template <FieldScalar T>
std::vector<std::vector<T>> nullspace(const RrefResult<T>& res) {
    const std::size_t cols = res.reduced.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : res.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (std::size_t i = 0; i < res.pivot_columns.size(); ++i)
            v[res.pivot_columns[i]] = -res.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <FieldScalar T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m) {
    return nullspace(rref(m));
}

template <FieldScalar T>
Matrix<T> invert(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = T(1);
    }
    const RrefResult<T> res = rref(std::move(aug));
    if (res.rank < n) throw SingularMatrix("inverse: matrix is singular");
    Matrix<T> out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = res.reduced(r, n + c);
    return out;
}

}  // namespace lsdial
