#ifndef CQ_GOLDEN_HPP
#define CQ_GOLDEN_HPP

#include "cq/artin.hpp"
#include "cq/completed.hpp"
#include "cq/iarlimit.hpp"

#include <vector>

// Fixed worked examples shared by the tests, the acceptance binary and
// `cqcli verify-paper`.
namespace cq::golden {

// k[x,y]/(xy, x^2 - y^3) in the basis (1, y, y^2, y^3, x); variables (x, y).
ArtinAlgebra plane_algebra();
QVector plane_orientation();  // (y^3)^*
QMatrix plane_phi();
QMatrix plane_q();
std::vector<std::size_t> plane_hilbert();  // (1, 2, 1, 1)
// Torus pairing family in the basis (1, y, y^2, y^3, x): u at (x, x).
QPolyMatrix plane_phi_u();
// perm[k] = position in (1, y, y^2, y^3, x) of the k-th graded monomial.
std::vector<std::size_t> plane_monomial_positions();
// Limit broken quadrics in the basis (1, y, y^2, y^3, x).
BrokenQuadric plane_phi_limit();  // gr > (x), forms [1* y3* + y* y2*], [x*^2]
BrokenQuadric plane_q_limit();    // V* > <1*, y*, y2*, y3*>
std::vector<MPoly> plane_gr_generators();  // x^2, xy, y^4

// diag(1, t, t^2, t^2) and its limit: <e2*,e3*,e4*> > <e3*,e4*>, e1^2, e2^2, e3^2 + e4^2.
QPolyMatrix diagonal_family();
BrokenQuadric diagonal_limit();
// Dual flags V > <e1, e2> > <e1> with the inverse forms in reversed order.
BrokenQuadric diagonal_dual_limit();

// e1^2 + e2^2 + t^2 (e1 e3 + e2 e4), optionally + t^3 e3^2.
QPolyMatrix perturbed_family(bool extra);
BrokenQuadric perturbed_limit(bool extra);

// Degenerations to k[x,y,z]/(x,y,z)^2 in the basis (1, x, y, z).
// literal: (x^2, y^2, tz - xy) with alpha = z^*.
AlgebraFamily square_zero_family();
QVector square_zero_orientation();
// Pairing matrix with t^{-1} on the (x, y) entries, multiplied by t.
QPolyMatrix square_zero_display();
// Same family with x and z exchanged: (y^2, z^2, tx - yz), alpha = x^*.
AlgebraFamily square_zero_relabeled();
QVector square_zero_relabeled_orientation();
// phi-side flag V > <y, z>, forms [1* x*], [y* z*]; q-side <1*, x*>, [y z], [1 x].
OrientedLimit square_zero_relabeled_limit();

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Every worked example above, checked against the library.
std::vector<CaseResult> verify_all();

} // namespace cq::golden

#endif
