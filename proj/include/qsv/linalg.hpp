#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/gaussian_rational.hpp"

namespace qsv {

using Scalar = GaussianRational;

/// Raw coordinate vector; may be zero. States use StateVector instead.
using Vector = std::vector<Scalar>;

inline bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& z) { return z.is_zero(); });
}

/// Unnormalized representative of a ray. Never the zero vector.
class StateVector {
public:
    explicit StateVector(Vector entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw ShapeError("state vector must have positive dimension");
        if (is_zero(entries_)) throw InvalidStateError("the zero vector is not a state");
    }
    StateVector(std::initializer_list<Scalar> entries) : StateVector(Vector(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    const Vector& entries() const { return entries_; }
    const Scalar& operator[](std::size_t k) const { return entries_[k]; }

    StateVector scaled(const Scalar& c) const {
        Vector out = entries_;
        for (auto& z : out) z *= c;
        return StateVector(std::move(out));
    }

    friend bool operator==(const StateVector&, const StateVector&) = default;

private:
    Vector entries_;
};

/// Dense row-major matrix over the Gaussian rationals.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
        if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    }

    Matrix(std::size_t rows, std::size_t cols, Vector entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
        if (data_.size() != rows * cols) throw ShapeError("entry count does not match rows*cols");
    }

    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) : rows_(rows.size()) {
        if (rows_ == 0) throw ShapeError("matrix dimensions must be positive");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw ShapeError("matrix dimensions must be positive");
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw ShapeError("ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
        return m;
    }
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    static Matrix column(std::span<const Scalar> v) { return Matrix(v.size(), 1, Vector(v.begin(), v.end())); }
    static Matrix column(const StateVector& v) { return column(v.entries()); }
    static Matrix row(std::span<const Scalar> v) { return Matrix(1, v.size(), Vector(v.begin(), v.end())); }

    /// Rows stacked top to bottom; all must share one length.
    static Matrix from_rows(std::span<const Vector> rows) {
        if (rows.empty()) throw ShapeError("cannot stack zero rows");
        const std::size_t cols = rows.front().size();
        Vector data;
        data.reserve(rows.size() * cols);
        for (const auto& r : rows) {
            if (r.size() != cols) throw ShapeError("rows of unequal length");
            data.insert(data.end(), r.begin(), r.end());
        }
        return Matrix(rows.size(), cols, std::move(data));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    const Vector& entries() const { return data_; }

    Vector row_vector(std::size_t r) const {
        return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }
    Vector column_vector(std::size_t c) const {
        Vector out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }

    bool is_zero() const { return qsv::is_zero(data_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum shape mismatch");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference shape mismatch");
        Matrix out = a;
        for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
        return out;
    }
    friend Matrix operator*(const Scalar& c, const Matrix& m) {
        Matrix out = m;
        for (auto& z : out.data_) z *= c;
        return out;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    Vector data_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
        }
    }
    return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// m * v for a column vector v.
inline Vector apply(const Matrix& m, std::span<const Scalar> v) {
    if (m.cols() != v.size()) throw ShapeError("apply: matrix/vector dimension mismatch");
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    }
    return out;
}
inline Vector apply(const Matrix& m, const StateVector& v) { return apply(m, std::span<const Scalar>(v.entries())); }

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    return out;
}

inline Matrix conjugate_transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
    return out;
}

/// Kronecker product; applies equally to column vectors.
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar)
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Scalar& s = a(ar, ac);
            if (s.is_zero()) continue;
            for (std::size_t br = 0; br < b.rows(); ++br)
                for (std::size_t bc = 0; bc < b.cols(); ++bc)
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
        }
    return out;
}

inline Vector tensor_product(std::span<const Scalar> a, std::span<const Scalar> b) {
    Vector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(x * y);
    return out;
}

inline StateVector tensor_product(const StateVector& a, const StateVector& b) {
    return StateVector(tensor_product(std::span<const Scalar>(a.entries()), std::span<const Scalar>(b.entries())));
}

/// |u><v| = u v^dagger.
inline Matrix outer_product(std::span<const Scalar> u, std::span<const Scalar> v) {
    Matrix out(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out(r, c) = u[r] * v[c].conj();
    return out;
}

/// <u, v> = sum conj(u_k) v_k.
inline Scalar inner_product(std::span<const Scalar> u, std::span<const Scalar> v) {
    if (u.size() != v.size()) throw ShapeError("inner_product: dimension mismatch");
    Scalar out;
    for (std::size_t k = 0; k < u.size(); ++k) out += u[k].conj() * v[k];
    return out;
}

/// Reduced row-echelon form. Pivot is the first nonzero entry in column
/// order; no magnitude pivoting is needed in exact arithmetic.
inline Matrix rref(const Matrix& m) {
    Matrix out = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < out.cols() && pivot_row < out.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < out.rows() && out(found, col).is_zero()) ++found;
        if (found == out.rows()) continue;

        if (found != pivot_row)
            for (std::size_t c = 0; c < out.cols(); ++c) std::swap(out(found, c), out(pivot_row, c));

        const Scalar scale = out(pivot_row, col).inverse();
        for (std::size_t c = col; c < out.cols(); ++c) out(pivot_row, c) *= scale;

        for (std::size_t r = 0; r < out.rows(); ++r) {
            if (r == pivot_row || out(r, col).is_zero()) continue;
            const Scalar factor = out(r, col);
            for (std::size_t c = col; c < out.cols(); ++c) out(r, c) -= factor * out(pivot_row, c);
        }
        ++pivot_row;
    }
    return out;
}

/// Pivot column of every nonzero row of an RREF matrix, in row order.
inline std::vector<std::size_t> pivot_columns(const Matrix& reduced) {
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t c = 0;
        while (c < reduced.cols() && reduced(r, c).is_zero()) ++c;
        if (c == reduced.cols()) break;
        pivots.push_back(c);
    }
    return pivots;
}

inline std::size_t rank(const Matrix& m) { return pivot_columns(rref(m)).size(); }

/// Basis of {x : m x = 0}: one vector per free column, with a 1 in that column.
inline std::vector<StateVector> kernel_basis(const Matrix& m) {
    const Matrix reduced = rref(m);
    const auto pivots = pivot_columns(reduced);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<StateVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.emplace_back(std::move(v));
    }
    return basis;
}

/// Exact inverse by RREF of [m | I].
inline Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
        augmented(r, n + r) = 1;
    }
    const Matrix reduced = rref(augmented);
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (reduced(r, r) != Scalar(1)) throw SingularMatrixError("matrix is singular");
        for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced(r, n + c);
    }
    return out;
}

inline std::string to_string(std::span<const Scalar> v) {
    std::string out = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += to_string(v[k]);
    }
    return out + "]";
}
inline std::string to_string(const StateVector& v) { return to_string(std::span<const Scalar>(v.entries())); }

/// Row-by-row form, e.g. "[[1,0],[0,-1]]".
inline std::string to_string(const Matrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ",";
        out += to_string(std::span<const Scalar>(m.row_vector(r)));
    }
    return out + "]";
}

/// Comma-separated scalars, e.g. "0,1,-1,0".
inline Vector parse_vector(std::string_view text) {
    Vector out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_scalar(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace qsv
