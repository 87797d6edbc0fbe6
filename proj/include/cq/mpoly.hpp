#ifndef CQ_MPOLY_HPP
#define CQ_MPOLY_HPP

#include "cq/scalar.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace cq {

// Sparse polynomial over the rationals in variables z_0, z_1, ...
// Exponent vectors carry no trailing zeros, so the variable count is implicit.
class MPoly {
public:
    using Exps = std::vector<unsigned>;

    MPoly() = default;
    MPoly(const Rational& c);
    MPoly(int c) : MPoly(Rational(c)) {}

    static MPoly variable(std::size_t i);
    static MPoly monomial(const Exps& e, const Rational& c);

    const std::map<Exps, Rational>& terms() const { return m_terms; }
    std::size_t nvars() const;  // one past the highest variable present
    int total_degree() const;   // -1 for zero
    Rational coeff(const Exps& e) const;
    Rational constant_term() const { return coeff({}); }

    Rational eval(const std::vector<Rational>& point) const;
    MPoly derivative(std::size_t var) const;
    // Homogeneous part of the given total degree.
    MPoly homogeneous_part(int degree) const;

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.m_terms == b.m_terms; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
    friend bool is_zero(const MPoly& p) { return p.m_terms.empty(); }

    // Human-readable rendering with the given variable names, terms in
    // decreasing graded-lex order.
    std::string to_string(const std::vector<std::string>& names) const;

    static Exps trimmed(Exps e);

private:
    void add_term(const Exps& e, const Rational& c);
    std::map<Exps, Rational> m_terms;
};

// Graded lexicographic comparison of exponent vectors (padded with zeros).
bool grlex_less(const MPoly::Exps& a, const MPoly::Exps& b);

// All exponent vectors in n variables of exact total degree k, in
// lexicographic order with x_1 largest (x^2, xy, y^2, ...).
std::vector<MPoly::Exps> monomials_of_degree(std::size_t n, unsigned k);

} // namespace cq

#endif
