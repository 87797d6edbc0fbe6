#ifndef CQ_COMPAT_HPP
#define CQ_COMPAT_HPP

#include "cq/completed.hpp"
#include "cq/mpoly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cq {

using MPolyMatrix = Matrix<MPoly>;

// An endomorphism x of V acts on column vectors; x^T acts on covectors
// (rows) by phi -> phi x. Compatibility is decided in the adapted basis B of
// the broken quadric: Y = B x B^{-1} must be block upper triangular and each
// diagonal block Y_ii must make Y_ii S_i symmetric (resp. antisymmetric).
bool is_compatible(const QMatrix& x, const BrokenQuadric& bq);
bool is_anticompatible(const QMatrix& x, const BrokenQuadric& bq);

// A subspace of End(V); basis rows are the d x d matrices flattened row-major.
struct OperatorSpace {
    std::size_t d = 0;
    QMatrix basis;

    std::size_t dim() const { return basis.rows(); }
    QMatrix element(std::size_t i) const;
    bool contains(const QMatrix& x) const;
};

OperatorSpace compatible_space(const BrokenQuadric& bq);
OperatorSpace anticompatible_space(const BrokenQuadric& bq);

struct LevelCheck {
    std::size_t level = 0;
    bool invariant = false;  // x^T(F_i) inside F_i
    bool symmetric = false;  // induced map self-adjoint for q_i
    QMatrix induced;         // induced map on F_i / F_{i+1}, canonical complement coordinates
};

struct SelfDualReport {
    bool pass = false;
    // checks[k][i]: generator k, level i.
    std::vector<std::vector<LevelCheck>> checks;
};

// Throws std::invalid_argument if the generators do not commute.
SelfDualReport selfdual_graded_report(const std::vector<QMatrix>& action, const BrokenQuadric& bq);

struct PolySystem {
    std::vector<std::string> vars;
    std::vector<MPoly> equations;
    std::size_t nparams = 0;  // leading variables that belong to the action
};

// Variable names of the Tyrrell chart in dimension d: y1..y{d-1}, then x_ij
// for i < j in lexicographic order.
std::vector<std::string> chart_variable_names(std::size_t d);
// Flatten chart coordinates into the variable order above.
std::vector<Rational> chart_point(const TyrrellCoords& c);

// Equations tr(X_k M) = 0, M running over the anticompatible basis over the
// chart read in the given basis (columns). Action entries may be polynomials in
// nparams leading parameters, named by param_names.
PolySystem compat_equations(const std::vector<MPolyMatrix>& action, const std::vector<std::string>& param_names,
                            const QMatrix& basis);
PolySystem compat_equations(const std::vector<QMatrix>& action, const QMatrix& basis);
PolySystem compat_equations(const std::vector<QMatrix>& action);

// dim ker of the Jacobian at a point of the locus. With fiber_only, the
// parameter columns are dropped (the action is held fixed).
std::size_t tangent_dim(const PolySystem& sys, const std::vector<Rational>& point, bool fiber_only = false);

// The Iar_d(A^1) model: multiplication by x on k[x]/(x^d + a_{d-1}x^{d-1} + ... + a_0)
// in the basis (x^{d-1}, ..., x, 1), entries in the parameters a_0..a_{d-1}.
MPolyMatrix jordan_model_action(std::size_t d);
std::vector<std::string> jordan_model_params(std::size_t d);
// Evaluated at given coefficients a_0..a_{d-1}.
QMatrix jordan_model_matrix(const std::vector<Rational>& a);

// Compatible point over k[x]/(x^d) with ideal flag (x^{nu_1}) > ... and the
// quadric on each step induced by a functional with alpha(x^{len-1}) = 1.
// params lists alpha(x^0..x^{len-2}) level by level. breaks may omit d.
BrokenQuadric jordan_fiber_point(std::size_t d, std::vector<std::size_t> breaks, const std::vector<Rational>& params);
// Inverse of jordan_fiber_point on its image.
std::vector<Rational> jordan_fiber_params(const BrokenQuadric& bq);

} // namespace cq

#endif
