#ifndef CQ_UNIPOLY_HPP
#define CQ_UNIPOLY_HPP

#include "cq/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cq {

// Polynomial in one variable t. Coefficients are stored from t^0 upwards with
// no trailing zeros; the zero polynomial has no coefficients at all.
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const T& c) {
        if (!is_zero(c)) m_c.push_back(c);
    }
    UniPoly(int c) : UniPoly(T(c)) {}
    explicit UniPoly(std::vector<T> coeffs) : m_c(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const T& c, std::size_t k) {
        if (is_zero(c)) return UniPoly();
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(m_c.size()) - 1; }

    // Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const {
        for (std::size_t k = 0; k < m_c.size(); ++k)
            if (!is_zero(m_c[k])) return static_cast<int>(k);
        return -1;
    }

    T coeff(std::size_t k) const { return k < m_c.size() ? m_c[k] : T(0); }
    const std::vector<T>& coeffs() const { return m_c; }

    T eval(const T& t) const {
        T r(0);
        for (std::size_t k = m_c.size(); k-- > 0;) r = r * t + m_c[k];
        return r;
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.m_c.size() > m_c.size()) m_c.resize(o.m_c.size(), T(0));
        for (std::size_t k = 0; k < o.m_c.size(); ++k) m_c[k] += o.m_c[k];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.m_c.size() > m_c.size()) m_c.resize(o.m_c.size(), T(0));
        for (std::size_t k = 0; k < o.m_c.size(); ++k) m_c[k] -= o.m_c[k];
        trim();
        return *this;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a) {
        for (auto& c : a.m_c) c = -c;
        return a;
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.m_c.empty() || b.m_c.empty()) return UniPoly();
        std::vector<T> r(a.m_c.size() + b.m_c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.m_c.size(); ++i) {
            if (is_zero(a.m_c[i])) continue;
            for (std::size_t j = 0; j < b.m_c.size(); ++j) r[i + j] += a.m_c[i] * b.m_c[j];
        }
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.m_c == b.m_c; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    friend bool is_zero(const UniPoly& p) { return p.m_c.empty(); }

    // Division that must leave no remainder (Bareiss steps); throws otherwise.
    friend UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
        if (b.m_c.empty()) throw std::domain_error("UniPoly: division by zero polynomial");
        if (a.m_c.empty()) return UniPoly();
        std::vector<T> rem = a.m_c;
        const std::size_t db = b.m_c.size() - 1;
        if (rem.size() < b.m_c.size()) throw std::domain_error("UniPoly: inexact division");
        std::vector<T> q(rem.size() - db, T(0));
        const T lead = b.m_c.back();
        for (std::size_t k = q.size(); k-- > 0;) {
            T c = rem[k + db] / lead;
            q[k] = c;
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= c * b.m_c[j];
        }
        for (const auto& r : rem)
            if (!is_zero(r)) throw std::domain_error("UniPoly: inexact division");
        return UniPoly(std::move(q));
    }

private:
    void trim() {
        while (!m_c.empty() && is_zero(m_c.back())) m_c.pop_back();
    }
    std::vector<T> m_c;
};

using QPoly = UniPoly<Rational>;

} // namespace cq

#endif
