#ifndef CQ_LINALG_HPP
#define CQ_LINALG_HPP

#include "cq/matrix.hpp"
#include "cq/unipoly.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cq {

// Strictly increasing i-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t i);
std::size_t binomial(std::size_t n, std::size_t k);

// Fraction-free determinant over an integral domain R. Every division is exact.
template <class R>
R det(Matrix<R> m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return R(1);
    bool negate = false;
    R prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && is_zero(m(p, k))) ++p;
        if (p == n) return R(0);
        if (p != k) {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_quotient(v, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
}

template <class T>
struct Echelon {
    Matrix<T> rref;                   // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

// Reduced row echelon form with leftmost pivots normalized to 1.
template <class T>
Echelon<T> rref(Matrix<T> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        const T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    Matrix<T> out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
    return {std::move(out), std::move(piv)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
    return rref(m).pivots.size();
}

// Kernel {x : m x = 0}, as rows in reduced echelon form.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
    const auto e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_piv(n, false);
    for (auto p : e.pivots) is_piv[p] = true;
    Matrix<T> k(0, n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(n, T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, f);
        k.append_row(v);
    }
    if (k.rows() == 0) return k;
    return rref(k).rref;
}

template <class T>
struct RankKernelImage {
    std::size_t rank = 0;
    Matrix<T> kernel;   // rows, echelon-canonical
    Matrix<T> image;    // rows spanning the column space, echelon-canonical
    Matrix<T> rref;
};

template <class T>
RankKernelImage<T> rank_kernel_image(const Matrix<T>& m) {
    RankKernelImage<T> out;
    auto e = rref(m);
    out.rank = e.pivots.size();
    out.kernel = kernel(m);
    out.image = rref(m.transpose()).rref;
    out.rref = std::move(e.rref);
    return out;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

// Some x with a x = b, if any.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
    const std::size_t n = a.cols();
    Matrix<T> aug(a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto e = rref(aug);
    std::vector<T> x(n, T(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == n) return std::nullopt;
        x[e.pivots[r]] = e.rref(r, n);
    }
    return x;
}

// i-th compound matrix: entry (J, K) is det m[J, K] over lexicographic i-subsets.
template <class R>
Matrix<R> compound(const Matrix<R>& m, std::size_t i) {
    const auto rs = combinations(m.rows(), i);
    const auto cs = combinations(m.cols(), i);
    Matrix<R> out(rs.size(), cs.size());
    const bool sym = m.is_symmetric();
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) {
            if (sym && b < a) {
                out(a, b) = out(b, a);
                continue;
            }
            out(a, b) = det(m.submatrix(rs[a], cs[b]));
        }
    return out;
}

// Pluecker vector of the row space of an i x n matrix: all maximal minors.
template <class T>
std::vector<T> plucker(const Matrix<T>& rows) {
    const auto cs = combinations(rows.cols(), rows.rows());
    std::vector<std::size_t> all(rows.rows());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    std::vector<T> out;
    out.reserve(cs.size());
    for (const auto& c : cs) out.push_back(det(rows.submatrix(all, c)));
    return out;
}

// Lowest t-adic order of a polynomial matrix and its coefficient matrix there.
template <class T>
std::pair<int, Matrix<T>> lowest_order(const Matrix<UniPoly<T>>& m) {
    int v = -1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const int w = m(i, j).valuation();
            if (w >= 0 && (v < 0 || w < v)) v = w;
        }
    if (v < 0) throw std::domain_error("lowest_order: zero matrix");
    Matrix<T> c(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).coeff(static_cast<std::size_t>(v));
    return {v, std::move(c)};
}

template <class T>
Matrix<UniPoly<T>> to_poly_matrix(const Matrix<T>& m) {
    Matrix<UniPoly<T>> p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = UniPoly<T>(m(i, j));
    return p;
}

template <class T>
Matrix<T> eval_poly_matrix(const Matrix<UniPoly<T>>& m, const T& t) {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).eval(t);
    return out;
}

// A linear subspace of T^n, stored by its reduced echelon basis rows; equality
// of subspaces is equality of these bases.
template <class T>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t n) : m_n(n), m_basis(0, n) {}

    static Subspace zero(std::size_t n) { return Subspace(n); }
    static Subspace full(std::size_t n) { return span(Matrix<T>::identity(n)); }
    static Subspace span(const Matrix<T>& rows) {
        Subspace s(rows.cols());
        if (rows.rows() == 0) return s;
        auto e = rref(rows);
        s.m_basis = std::move(e.rref);
        s.m_pivots = std::move(e.pivots);
        return s;
    }
    static Subspace span(const std::vector<std::vector<T>>& vecs, std::size_t n) {
        return span(Matrix<T>::from_rows(vecs, n));
    }

    std::size_t ambient() const { return m_n; }
    std::size_t dim() const { return m_basis.rows(); }
    const Matrix<T>& basis() const { return m_basis; }
    const std::vector<std::size_t>& pivots() const { return m_pivots; }

    bool contains(const std::vector<T>& v) const {
        std::vector<T> w = v;
        for (std::size_t r = 0; r < dim(); ++r) {
            const T c = w[m_pivots[r]];
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < m_n; ++j) w[j] -= c * m_basis(r, j);
        }
        for (const auto& x : w)
            if (!is_zero(x)) return false;
        return true;
    }
    bool contains(const Subspace& o) const {
        for (std::size_t r = 0; r < o.dim(); ++r)
            if (!contains(o.m_basis.row(r))) return false;
        return true;
    }

    // Coordinates of v in the echelon basis; v must lie in the subspace.
    std::vector<T> coords(const std::vector<T>& v) const {
        std::vector<T> c(dim());
        for (std::size_t r = 0; r < dim(); ++r) c[r] = v[m_pivots[r]];
        return c;
    }

    Subspace operator+(const Subspace& o) const {
        Matrix<T> m = m_basis;
        for (std::size_t r = 0; r < o.dim(); ++r) m.append_row(o.m_basis.row(r));
        if (m.rows() == 0) return Subspace(m_n);
        return span(m);
    }

    // Annihilator under the standard pairing: {x : b . x = 0 for all basis rows b}.
    Subspace annihilator() const {
        if (dim() == 0) return full(m_n);
        Subspace s(m_n);
        Matrix<T> k = kernel(m_basis);
        return k.rows() ? span(k) : s;
    }

    Subspace intersect(const Subspace& o) const {
        return (annihilator() + o.annihilator()).annihilator();
    }

    // Rows of this echelon basis whose pivots are not pivots of g (g must be a
    // subspace). They span a complement of g and are canonical.
    Matrix<T> complement_rows(const Subspace& g) const {
        if (!contains(g)) throw std::invalid_argument("Subspace: complement of a non-subspace");
        std::vector<std::size_t> idx = complement_indices(g);
        return m_basis.rows_of(idx);
    }
    std::vector<std::size_t> complement_indices(const Subspace& g) const {
        std::vector<std::size_t> idx;
        for (std::size_t r = 0; r < dim(); ++r)
            if (std::find(g.m_pivots.begin(), g.m_pivots.end(), m_pivots[r]) == g.m_pivots.end()) idx.push_back(r);
        return idx;
    }

    // Coordinates of the class of v in this / g with respect to complement_rows(g).
    std::vector<T> quotient_coords(const Subspace& g, const std::vector<T>& v) const {
        Matrix<T> c = complement_rows(g);
        Matrix<T> sys = c;
        for (std::size_t r = 0; r < g.dim(); ++r) sys.append_row(g.m_basis.row(r));
        auto x = solve(sys.transpose(), v);
        if (!x) throw std::invalid_argument("Subspace: vector outside the subspace");
        return std::vector<T>(x->begin(), x->begin() + static_cast<long>(c.rows()));
    }

    // Image of the subspace under v -> m v (m acts on column vectors).
    Subspace image_under(const Matrix<T>& m) const {
        if (dim() == 0) return Subspace(m.rows());
        return span((m * m_basis.transpose()).transpose());
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.m_n == b.m_n && a.m_basis == b.m_basis;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t m_n = 0;
    Matrix<T> m_basis;
    std::vector<std::size_t> m_pivots;
};

} // namespace cq

#endif
