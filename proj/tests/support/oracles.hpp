#pragma once

// Test-only oracles. These deliberately avoid RREF and the library's kernel
// routine: rank comes from nonvanishing minors, membership and equality from
// rank comparisons.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qsv/linalg.hpp"
#include "qsv/subspace.hpp"

namespace qsv::oracle {

/// Determinant by Laplace expansion along the first row.
inline Scalar determinant(const std::vector<std::vector<Scalar>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Scalar(1);
    if (n == 1) return m[0][0];
    Scalar det;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<Scalar>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Scalar> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        const Scalar term = m[0][c] * determinant(minor);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

namespace detail {

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Largest k with a nonzero k×k minor.
inline std::size_t minor_rank(const std::vector<Vector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t nr = rows.size();
    const std::size_t nc = rows.front().size();
    for (std::size_t k = std::min(nr, nc); k > 0; --k) {
        std::vector<std::size_t> ri(k);
        std::iota(ri.begin(), ri.end(), 0);
        do {
            std::vector<std::size_t> ci(k);
            std::iota(ci.begin(), ci.end(), 0);
            do {
                std::vector<std::vector<Scalar>> sub(k, std::vector<Scalar>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = rows[ri[a]][ci[b]];
                if (!determinant(sub).is_zero()) return k;
            } while (detail::next_combination(ci, nc));
        } while (detail::next_combination(ri, nr));
    }
    return 0;
}

inline std::size_t minor_rank(const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_vector(r));
    return minor_rank(rows);
}

inline std::vector<Vector> rows_of(const Subspace& s) {
    std::vector<Vector> out;
    for (const auto& b : s.basis()) out.push_back(b.entries());
    return out;
}

inline std::vector<Vector> rows_of(const std::vector<Vector>& vs) { return vs; }

/// v ∈ span(rows) iff appending v leaves the rank unchanged.
inline bool in_span(const std::vector<Vector>& rows, const Vector& v) {
    auto extended = rows;
    extended.push_back(v);
    return minor_rank(extended) == minor_rank(rows);
}

inline bool included(const Subspace& a, const Subspace& b) {
    const auto rb = rows_of(b);
    for (const auto& v : rows_of(a))
        if (!in_span(rb, v)) return false;
    return true;
}

/// Mutual inclusion: independent of the canonical form.
inline bool same_subspace(const Subspace& a, const Subspace& b) { return included(a, b) && included(b, a); }

inline Matrix naive_product(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Scalar acc;
            for (std::size_t k = 0; k < a.cols(); ++k) acc = acc + a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

inline bool is_hermitian(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != m(j, i).conj()) return false;
    return true;
}

/// Dimension of a ∩ b from dim a + dim b - dim(a + b), all via minor ranks.
inline std::size_t intersection_dimension(const Subspace& a, const Subspace& b) {
    auto stacked = rows_of(a);
    const auto rb = rows_of(b);
    stacked.insert(stacked.end(), rb.begin(), rb.end());
    return minor_rank(rows_of(a)) + minor_rank(rb) - minor_rank(stacked);
}

/// <ψ|P|ψ> / <ψ|ψ>; real for Hermitian P.
inline Rational expectation(const Matrix& p, const StateVector& psi) {
    const Vector image = apply(p, psi);
    Scalar num;
    Scalar den;
    for (std::size_t k = 0; k < psi.dim(); ++k) {
        num = num + psi[k].conj() * image[k];
        den = den + psi[k].conj() * psi[k];
    }
    return num.re() / den.re();
}

} // namespace qsv::oracle
