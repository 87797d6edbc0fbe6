#ifndef CQ_ARTIN_HPP
#define CQ_ARTIN_HPP

#include "cq/mpoly.hpp"
#include "cq/quadform.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cq {

// Commuting operators X_1..X_n on k^D; column j of X_k is X_k e_j.
struct ArtinModule {
    std::vector<QMatrix> ops;

    std::size_t dim() const { return ops.empty() ? 0 : ops[0].rows(); }
    std::size_t nvars() const { return ops.size(); }
};

// A module with a cyclic vector v: k[X] v = k^D, so k^D is the algebra itself.
struct ArtinAlgebra {
    std::vector<QMatrix> ops;
    QVector v;

    std::size_t dim() const { return v.size(); }
    std::size_t nvars() const { return ops.size(); }
    ArtinModule module() const { return ArtinModule{ops}; }
};

struct Diagnostics {
    bool commuting = true;
    std::optional<std::pair<std::size_t, std::size_t>> noncommuting;
    bool nilpotent = true;
    std::vector<std::size_t> not_nilpotent;
    bool cyclic = true;
    std::size_t cyclic_span = 0;

    bool ok() const { return commuting && nilpotent && cyclic; }
    std::string message() const;
};

Diagnostics validate(const std::vector<QMatrix>& ops, const std::optional<QVector>& v = std::nullopt);

// X^beta w.
QVector apply_monomial(const std::vector<QMatrix>& ops, const MPoly::Exps& beta, QVector w);
// p(X) w.
QVector apply_poly(const std::vector<QMatrix>& ops, const MPoly& p, const QVector& w);

// m^0 M, m^1 M, ..., ending with the first zero subspace.
std::vector<QSubspace> power_filtration(const ArtinModule& m);
// (0:m^0) = 0, (0:m^1), ..., ending with the first occurrence of M.
std::vector<QSubspace> loewy_filtration(const ArtinModule& m);
// Largest i with m^i M != 0.
std::size_t socle_degree(const ArtinModule& m);
std::vector<std::size_t> hilbert_function(const ArtinModule& m);

// Monomials gamma whose images X^gamma v form a basis adapted to the m-adic
// filtration: per degree, lexicographic candidates are kept when independent
// modulo m^{i+1}. Ordered by degree, then lexicographically.
std::vector<MPoly::Exps> graded_monomial_basis(const ArtinAlgebra& a);

// Matrix of multiplication by the algebra element a (a vector of k^D).
QMatrix multiplication_operator(const ArtinAlgebra& a, const QVector& elt);

struct SymDecomp {
    std::size_t s = 0;
    // delta[d][i] = dim Q(d)_i for 0 <= i <= s; rows stop at the last nonzero one.
    std::vector<std::vector<std::size_t>> delta;
    // basis[d][i]: rows of k^D representing a basis of Q(d)_i.
    std::vector<std::vector<QMatrix>> basis;
};

// Throws std::domain_error when alpha does not give a nondegenerate pairing.
SymDecomp symmetric_decomposition(const ArtinAlgebra& a, const QVector& alpha);
// Module version: form is a symmetric nondegenerate matrix with X^T form = form X.
SymDecomp symmetric_decomposition(const ArtinModule& m, const QMatrix& form);

struct GradedAlgebra {
    ArtinAlgebra alg;
    std::vector<std::size_t> degree;  // degree of each basis vector
};

// gr A on the canonical complements of m^{i+1} inside m^i.
GradedAlgebra assoc_graded(const ArtinAlgebra& a);

struct MonomialGraded {
    std::vector<MPoly::Exps> monomials;  // graded_monomial_basis
    GradedAlgebra gr;                    // gr A in the basis of monomial classes
    QMatrix lifts;                       // column k is X^{gamma_k} v in A
};

MonomialGraded graded_monomial_presentation(const ArtinAlgebra& a);

// Minimal homogeneous generators of the ideal of polynomials p with p(X)v = 0
// for a graded algebra, degree by degree up to max_degree. Each degree
// contributes canonical complement rows of S_1 I_{e-1} inside I_e.
std::vector<MPoly> graded_ideal_generators(const ArtinAlgebra& graded, std::size_t max_degree);

struct OrientedQuadric {
    QMatrix phi;  // phi(a, b) = alpha(a b), a form on A
    QMatrix q;    // phi^{-1}, the quadric on A^*
};

// Throws std::domain_error("not an orientation") when phi is degenerate.
OrientedQuadric orientation_to_quadric(const ArtinAlgebra& a, const QVector& alpha);

struct Apolar {
    ArtinAlgebra alg;
    QVector alpha;
    std::vector<MPoly> basis;  // the derivatives of F spanning the algebra
};

// k[x_1..x_n]/Ann(F) acting on the span of all partial derivatives of F.
Apolar apolar_algebra(const MPoly& f, std::size_t nvars);

} // namespace cq

#endif
