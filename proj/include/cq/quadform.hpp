#ifndef CQ_QUADFORM_HPP
#define CQ_QUADFORM_HPP

#include "cq/linalg.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cq {

using QMatrix = Matrix<Rational>;
using QPolyMatrix = Matrix<QPoly>;
using QSubspace = Subspace<Rational>;
using QVector = std::vector<Rational>;

// Matrix of the induced form on Lambda^i, rows and columns indexed by
// lexicographic i-subsets; entry (J, K) is the minor det q[J, K].
template <class R>
Matrix<R> wedge_power(const Matrix<R>& q, std::size_t i) {
    if (!q.is_square()) throw std::invalid_argument("wedge_power: non-square form");
    if (i < 1 || i > q.rows()) throw std::out_of_range("wedge_power: index out of range");
    return compound(q, i);
}

template <class T>
struct Congruence {
    Matrix<T> P;  // invertible, P^T q P = D
    Matrix<T> D;  // diagonal
};

// Symmetric elimination: pivot on the current diagonal entry when it is
// nonzero, otherwise swap in or create one (e_k + e_j) from the first
// nonzero off-diagonal entry of the row.
template <class T>
Congruence<T> congruence_diagonalize(const Matrix<T>& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("congruence_diagonalize: form not symmetric");
    const std::size_t n = q.rows();
    Matrix<T> a = q;
    Matrix<T> p = Matrix<T>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t j = k + 1;
        while (j < n && is_zero(a(k, j))) ++j;
        if (j == n) continue;
        if (is_zero(a(k, k))) {
            if (!is_zero(a(j, j))) {
                a.swap_rows(k, j);
                a.swap_cols(k, j);
                p.swap_cols(k, j);
            } else {
                for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
                for (std::size_t r = 0; r < n; ++r) p(r, k) += p(r, j);
            }
        }
        const T piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(a(i, k))) continue;
            const T f = a(i, k) / piv;
            for (std::size_t c = 0; c < n; ++c) a(i, c) -= f * a(k, c);
            for (std::size_t r = 0; r < n; ++r) a(r, i) -= f * a(r, k);
            for (std::size_t r = 0; r < n; ++r) p(r, i) -= f * p(r, k);
        }
    }
    return {std::move(p), std::move(a)};
}

// Gram matrix of q restricted to the canonical complement of g inside f.
// q is any symmetric matrix on the ambient space whose restriction to f
// has g in its radical.
QMatrix subquotient_form(const QMatrix& q, const QSubspace& f, const QSubspace& g);

// Projective canonical representative: integer entries with content 1 and
// first nonzero entry (row-major) positive. The zero matrix is returned as is.
QMatrix primitive(const QMatrix& m);
QVector primitive(const QVector& v);

// Does a equal c * b for some nonzero scalar c?
bool projectively_equal(const QMatrix& a, const QMatrix& b);

// Subspace of the (co)vectors spanned by a matrix's rows.
QSubspace row_space(const QMatrix& m);

} // namespace cq

#endif
