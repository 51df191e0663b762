#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qsv/errors.hpp"
#include "qsv/linalg.hpp"
#include "qsv/subspace.hpp"

namespace qsv {

/// Orthogonal projection operator: a square matrix with P == P† and P·P == P,
/// both checked exactly on construction.
class Projector {
public:
    explicit Projector(Matrix m) : matrix_(std::move(m)) {
        if (!matrix_.is_square()) throw InvalidProjectorError("projector matrix must be square");
        if (conjugate_transpose(matrix_) != matrix_) throw InvalidProjectorError("projector matrix is not Hermitian");
        if (mat_mul(matrix_, matrix_) != matrix_) throw InvalidProjectorError("projector matrix is not idempotent");
    }

    static Projector zero(std::size_t n) { return Projector(Matrix::zero(n, n)); }
    static Projector identity(std::size_t n) { return Projector(Matrix::identity(n)); }

    const Matrix& matrix() const { return matrix_; }
    std::size_t dim() const { return matrix_.rows(); }

    friend bool operator==(const Projector&, const Projector&) = default;

private:
    Matrix matrix_;
};

/// Projector onto s, as B (B†B)^-1 B† with the basis vectors as the columns of B.
inline Projector projector_onto(const Subspace& s) {
    if (s.is_zero()) return Projector::zero(s.ambient_dim());
    const Matrix b = transpose(s.basis_matrix());
    const Matrix b_adj = conjugate_transpose(b);
    const Matrix gram = mat_mul(b_adj, b);
    return Projector(mat_mul(mat_mul(b, inverse(gram)), b_adj));
}

inline Projector projector_from_span(std::span<const StateVector> vectors) {
    if (vectors.empty()) throw ShapeError("projector_from_span: empty vector list has no dimension");
    const std::size_t n = vectors.front().dim();
    for (const auto& v : vectors)
        if (v.dim() != n) throw ShapeError("projector_from_span: vectors of unequal dimension");
    return projector_onto(Subspace::span(n, vectors));
}

inline Projector projector_from_span(std::initializer_list<StateVector> vectors) {
    return projector_from_span(std::span<const StateVector>(vectors.begin(), vectors.size()));
}

inline Subspace range_of(const Projector& p) { return Subspace::column_space(p.matrix()); }

inline Subspace kernel_of(const Projector& p) { return Subspace::null_space(p.matrix()); }

inline bool commute(const Projector& a, const Projector& b) {
    return mat_mul(a.matrix(), b.matrix()) == mat_mul(b.matrix(), a.matrix());
}

/// a·b == 0, i.e. the ranges are orthogonal.
inline bool orthogonal(const Projector& a, const Projector& b) { return mat_mul(a.matrix(), b.matrix()).is_zero(); }

inline Projector projector_meet(const Projector& a, const Projector& b) {
    if (a.dim() != b.dim()) throw ShapeError("projector_meet: dimension mismatch");
    return projector_onto(meet(range_of(a), range_of(b)));
}

inline Projector projector_join(const Projector& a, const Projector& b) {
    if (a.dim() != b.dim()) throw ShapeError("projector_join: dimension mismatch");
    return projector_onto(join(range_of(a), range_of(b)));
}

/// The orthocomplement projector 1 - p.
inline Projector complement(const Projector& p) { return Projector(Matrix::identity(p.dim()) - p.matrix()); }

} // namespace qsv
