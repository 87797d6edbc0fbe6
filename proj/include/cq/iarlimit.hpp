#ifndef CQ_IARLIMIT_HPP
#define CQ_IARLIMIT_HPP

#include "cq/artin.hpp"
#include "cq/completed.hpp"

#include <string>
#include <vector>

namespace cq {

// Limit at u -> 0 of the oriented algebra under the standard torus, all data
// in the coordinates of gr.monomials (graded monomial basis of A).
struct TorusLimitResult {
    MonomialGraded gr;
    std::size_t s = 0;
    // ideals[d] = I_d inside gr(A): I_0 = gr(A) > I_1 > ... > I_{s+1} = 0.
    // I_d / I_{d+1} is the graded piece Q(d).
    std::vector<QSubspace> ideals;
    // phi[d]: Gram matrix of Phi_d on the canonical complement of I_{d+1} in I_d.
    std::vector<QMatrix> phi;
    BrokenQuadric phi_limit;  // flag of ideals, forms [Phi_0], [Phi_1], ...
    BrokenQuadric q_limit;    // dualize(phi_limit)
    SymDecomp decomp;
};

TorusLimitResult torus_limit(const ArtinAlgebra& a, const QVector& alpha);

// phi_u[k][l] = u^{s - |g_k| - |g_l|} alpha(X^{g_k + g_l} v) in the graded
// monomial basis; zero when the exponent would be negative.
QPolyMatrix torus_pairing_family(const ArtinAlgebra& a, const QVector& alpha);

// limit_minor of the pairing family, dualized. Returns the q-side limit.
BrokenQuadric torus_limit_oracle(const ArtinAlgebra& a, const QVector& alpha,
                                 LimitStrategy strategy = LimitStrategy::Auto);

struct BBLimit {
    MonomialGraded gr;
    std::vector<MPoly> generators;  // minimal homogeneous generators of the limit ideal
    std::string family;             // description of the homogenized family
};

BBLimit bb_limit_ideal(const ArtinAlgebra& a);

// A family of cyclic algebras over k[t] with a fixed monomial basis.
struct AlgebraFamily {
    std::vector<QPolyMatrix> ops;
    QVector v;
    std::vector<MPoly::Exps> basis;  // e_k = X^{basis[k]} v
};

// phi_t[k][l] = alpha(X^{g_k + g_l}(t) v).
QPolyMatrix pairing_family(const AlgebraFamily& f, const QVector& alpha);

struct OrientedLimit {
    BrokenQuadric phi;
    BrokenQuadric q;
};

// Limit of phi_t and of its inverse family. A Laurent family t^{-k} M(t) is
// passed as M(t): scalar factors do not change the projective class.
OrientedLimit oriented_family_limit(const QPolyMatrix& phi_t);

} // namespace cq

#endif
