#ifndef CQ_MATRIX_HPP
#define CQ_MATRIX_HPP

#include "cq/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cq {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_a(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill) : m_rows(rows), m_cols(cols), m_a(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        m_rows = rows.size();
        m_cols = m_rows ? rows.begin()->size() : 0;
        m_a.reserve(m_rows * m_cols);
        for (const auto& r : rows) {
            if (r.size() != m_cols) throw std::invalid_argument("Matrix: ragged initializer");
            for (const auto& x : r) m_a.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool is_square() const { return m_rows == m_cols; }

    T& operator()(std::size_t i, std::size_t j) { return m_a[i * m_cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return m_a[i * m_cols + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(m_a.begin() + i * m_cols, m_a.begin() + (i + 1) * m_cols);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c;
        c.reserve(m_rows);
        for (std::size_t i = 0; i < m_rows; ++i) c.push_back((*this)(i, j));
        return c;
    }
    void append_row(const std::vector<T>& r) {
        if (m_rows == 0 && m_cols == 0) m_cols = r.size();
        if (r.size() != m_cols) throw std::invalid_argument("Matrix: row length mismatch");
        m_a.insert(m_a.end(), r.begin(), r.end());
        ++m_rows;
    }
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < m_cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) return;
        for (std::size_t i = 0; i < m_rows; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }

    Matrix transpose() const {
        Matrix t(m_cols, m_rows);
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = 0; j < m_cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
        Matrix s(r.size(), c.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) s(i, j) = (*this)(r[i], c[j]);
        return s;
    }
    Matrix rows_of(const std::vector<std::size_t>& r) const {
        Matrix s(r.size(), m_cols);
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < m_cols; ++j) s(i, j) = (*this)(r[i], j);
        return s;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < m_rows; ++i)
            for (std::size_t j = i + 1; j < m_cols; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }
    bool is_zero_matrix() const {
        for (const auto& x : m_a)
            if (!is_zero(x)) return false;
        return true;
    }

    const std::vector<T>& data() const { return m_a; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.m_cols != b.m_rows) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i)
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.m_cols; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t k = 0; k < a.m_a.size(); ++k) a.m_a[k] += b.m_a[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same(b);
        for (std::size_t k = 0; k < a.m_a.size(); ++k) a.m_a[k] -= b.m_a[k];
        return a;
    }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.m_a) x = -x;
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a) {
        for (auto& x : a.m_a) x = s * x;
        return a;
    }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        if (a.m_cols != v.size()) throw std::invalid_argument("Matrix: shape mismatch in matvec");
        std::vector<T> r(a.m_rows, T(0));
        for (std::size_t i = 0; i < a.m_rows; ++i)
            for (std::size_t j = 0; j < a.m_cols; ++j) r[i] += a(i, j) * v[j];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_a == b.m_a;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    void check_same(const Matrix& b) const {
        if (m_rows != b.m_rows || m_cols != b.m_cols) throw std::invalid_argument("Matrix: shape mismatch");
    }
    std::size_t m_rows = 0, m_cols = 0;
    std::vector<T> m_a;
};

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <class T>
T trace(const Matrix<T>& m) {
    T s(0);
    for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
    return s;
}

} // namespace cq

#endif
