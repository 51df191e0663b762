#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/linalg.hpp"

namespace qsv {

/// A linear subspace of C^n held in canonical form: its basis rows are the
/// nonzero rows of an RREF matrix, so equal subspaces compare structurally
/// equal. The zero subspace has an empty basis and keeps its ambient dimension.
class Subspace {
public:
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    static Subspace full(std::size_t ambient_dim) {
        std::vector<StateVector> basis;
        for (std::size_t k = 0; k < ambient_dim; ++k) {
            Vector e(ambient_dim);
            e[k] = 1;
            basis.emplace_back(std::move(e));
        }
        return Subspace(ambient_dim, std::move(basis));
    }

    /// span(vectors); zero vectors are accepted and ignored.
    static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors) {
        if (ambient_dim == 0) throw ShapeError("ambient dimension must be positive");
        for (const auto& v : vectors)
            if (v.size() != ambient_dim) throw ShapeError("span: vector dimension does not match ambient");
        if (vectors.empty()) return zero(ambient_dim);
        return from_reduced(rref(Matrix::from_rows(vectors)));
    }

    static Subspace span(std::size_t ambient_dim, std::span<const StateVector> vectors) {
        std::vector<Vector> raw;
        raw.reserve(vectors.size());
        for (const auto& v : vectors) raw.push_back(v.entries());
        return span(ambient_dim, std::span<const Vector>(raw));
    }

    static Subspace span(std::initializer_list<StateVector> vectors) {
        if (vectors.size() == 0) throw ShapeError("span of an empty list needs an explicit ambient dimension");
        return span(vectors.begin()->dim(), std::span<const StateVector>(vectors.begin(), vectors.size()));
    }

    /// Column space of m.
    static Subspace column_space(const Matrix& m) { return from_reduced(rref(transpose(m))); }

    /// Null space of m.
    static Subspace null_space(const Matrix& m) { return span(m.cols(), std::span<const StateVector>(kernel_basis(m))); }

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dimension() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    bool is_full() const { return basis_.size() == ambient_dim_; }
    const std::vector<StateVector>& basis() const { return basis_; }

    /// Basis rows stacked into a matrix; throws on the zero subspace.
    Matrix basis_matrix() const {
        std::vector<Vector> rows;
        for (const auto& b : basis_) rows.push_back(b.entries());
        return Matrix::from_rows(rows);
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
    Subspace(std::size_t ambient_dim, std::vector<StateVector> basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    static Subspace from_reduced(const Matrix& reduced) {
        std::vector<StateVector> basis;
        const auto rank = pivot_columns(reduced).size();
        for (std::size_t r = 0; r < rank; ++r) basis.emplace_back(reduced.row_vector(r));
        return Subspace(reduced.cols(), std::move(basis));
    }

    std::size_t ambient_dim_;
    std::vector<StateVector> basis_;
};

namespace detail {

inline void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
    if (a.ambient_dim() != b.ambient_dim())
        throw ShapeError(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) + " and " +
                         std::to_string(b.ambient_dim()) + " differ");
}

/// Residual of v after elimination against the canonical basis; zero iff v is in s.
inline Vector residual(const Subspace& s, std::span<const Scalar> v) {
    Vector rest(v.begin(), v.end());
    for (const auto& row : s.basis()) {
        std::size_t pivot = 0;
        while (row[pivot].is_zero()) ++pivot;
        if (rest[pivot].is_zero()) continue;
        const Scalar factor = rest[pivot];
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= factor * row[k];
    }
    return rest;
}

} // namespace detail

/// Membership test; scale-invariant in v.
inline bool contains(const Subspace& s, const StateVector& v) {
    if (v.dim() != s.ambient_dim()) throw ShapeError("contains: vector dimension does not match ambient");
    return is_zero(detail::residual(s, v.entries()));
}

/// Subspace inclusion a <= b.
inline bool subspace_leq(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b, "subspace_leq");
    for (const auto& v : a.basis())
        if (!contains(b, v)) return false;
    return true;
}

/// Closed span of the union; in finite dimension this is just the span.
inline Subspace join(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b, "join");
    std::vector<StateVector> stacked = a.basis();
    stacked.insert(stacked.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), std::span<const StateVector>(stacked));
}

/// Set of all sums x + y with x in a, y in b.
inline Subspace sum(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b, "sum");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Columns of [A | B] generate every x + y.
    const std::size_t n = a.ambient_dim();
    Matrix generators(n, a.dimension() + b.dimension());
    std::size_t col = 0;
    for (const auto* s : {&a, &b})
        for (const auto& v : s->basis()) {
            for (std::size_t r = 0; r < n; ++r) generators(r, col) = v[r];
            ++col;
        }
    return Subspace::column_space(generators);
}

/// {v : <b, v> = 0 for every basis vector b of s}.
inline Subspace orthocomplement(const Subspace& s) {
    if (s.is_zero()) return Subspace::full(s.ambient_dim());
    Matrix constraints = s.basis_matrix();
    for (std::size_t r = 0; r < constraints.rows(); ++r)
        for (std::size_t c = 0; c < constraints.cols(); ++c) constraints(r, c) = constraints(r, c).conj();
    return Subspace::null_space(constraints);
}

/// a ∩ b, computed as (a⊥ + b⊥)⊥.
inline Subspace meet(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b, "meet");
    return orthocomplement(sum(orthocomplement(a), orthocomplement(b)));
}

/// All cross inner products between the bases vanish.
inline bool orthogonal(const Subspace& a, const Subspace& b) {
    detail::require_same_ambient(a, b, "orthogonal");
    for (const auto& x : a.basis())
        for (const auto& y : b.basis())
            if (!inner_product(x.entries(), y.entries()).is_zero()) return false;
    return true;
}

/// "span{[0,1,-1,0]}"; the zero subspace prints as "span{}".
inline std::string to_string(const Subspace& s) {
    std::string out = "span{";
    for (std::size_t k = 0; k < s.basis().size(); ++k) {
        if (k) out += ",";
        out += to_string(s.basis()[k]);
    }
    return out + "}";
}

} // namespace qsv
