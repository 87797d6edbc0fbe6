#ifndef CQ_COMPLETED_HPP
#define CQ_COMPLETED_HPP

#include "cq/quadform.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cq {

// A broken quadric on V = k^d: a strictly decreasing flag
// V^* = F_0 > F_1 > ... > F_k > F_{k+1} = 0 of covector subspaces and, for
// each level i, a full-rank symmetric form on F_i / F_{i+1}, stored as its
// Gram matrix on the canonical complement rows of F_{i+1} inside F_i and
// normalized to the primitive projective representative.
class BrokenQuadric {
public:
    BrokenQuadric() = default;

    // flag_tail = F_1, ..., F_k; forms[i] on the canonical complement of F_{i+1} in F_i.
    static BrokenQuadric make(std::size_t d, std::vector<QSubspace> flag_tail, std::vector<QMatrix> forms);
    // Forms given on arbitrary complement rows W_i of F_{i+1} inside F_i.
    static BrokenQuadric from_complements(std::size_t d, std::vector<QSubspace> flag_tail,
                                          const std::vector<QMatrix>& complements,
                                          const std::vector<QMatrix>& grams);
    static BrokenQuadric unbroken(const QMatrix& q);

    std::size_t dim() const { return m_d; }
    std::size_t levels() const { return m_forms.size(); }
    // F_i for 0 <= i <= levels(); F_levels() is the zero subspace.
    const QSubspace& flag(std::size_t i) const { return m_flag.at(i); }
    const QMatrix& form(std::size_t i) const { return m_forms.at(i); }
    QMatrix complement(std::size_t i) const { return m_flag.at(i).complement_rows(m_flag.at(i + 1)); }
    std::vector<std::size_t> ranks() const;
    bool is_unbroken() const { return m_forms.size() == 1; }

    // Rows of all canonical complements stacked in level order: a basis of V^*
    // adapted to the flag.
    QMatrix adapted_basis() const;
    // Quadric on V (d x d) lifting form i: it pairs complement i with itself by
    // the stored Gram matrix and vanishes on every other adapted basis vector.
    QMatrix lift(std::size_t i) const;

    friend bool operator==(const BrokenQuadric& a, const BrokenQuadric& b) {
        return a.m_d == b.m_d && a.m_flag == b.m_flag && a.m_forms == b.m_forms;
    }
    friend bool operator!=(const BrokenQuadric& a, const BrokenQuadric& b) { return !(a == b); }

private:
    std::size_t m_d = 0;
    std::vector<QSubspace> m_flag;  // F_0 .. F_{k+1}
    std::vector<QMatrix> m_forms;
};

// Point of prod_i P Sym^2 Lambda^i V; factors[i-1] is the primitive class p_i.
struct ExteriorTuple {
    std::size_t d = 0;
    std::vector<QMatrix> factors;

    friend bool operator==(const ExteriorTuple& a, const ExteriorTuple& b) {
        return a.d == b.d && a.factors == b.factors;
    }
    friend bool operator!=(const ExteriorTuple& a, const ExteriorTuple& b) { return !(a == b); }
};

// Canonicalizes every factor; checks shapes and symmetry.
ExteriorTuple make_exterior_tuple(std::size_t d, std::vector<QMatrix> factors);

class ReconstructionError : public std::runtime_error {
public:
    ReconstructionError(std::size_t factor, const std::string& what)
        : std::runtime_error("factor " + std::to_string(factor) + ": " + what), m_factor(factor) {}
    std::size_t factor() const { return m_factor; }

private:
    std::size_t m_factor;
};

ExteriorTuple to_exterior(const BrokenQuadric& bq);
BrokenQuadric from_exterior(const ExteriorTuple& t);

enum class LimitStrategy {
    Auto,   // full exterior tuple for d <= 7, probes beyond
    Full,   // every Lambda^i q_t, lowest order, then from_exterior
    Probe,  // only the factors that carry new information, evaluated on
            // decomposable vectors adapted to the partial flag
};

BrokenQuadric limit_minor(const QPolyMatrix& q_t, LimitStrategy strategy = LimitStrategy::Auto);

class DvrError : public std::runtime_error {
public:
    enum class Kind { ExtensionRequired, TruncationCap };
    DvrError(Kind k, const std::string& what) : std::runtime_error(what), m_kind(k) {}
    Kind kind() const { return m_kind; }

private:
    Kind m_kind;
};

// Symmetric elimination over k[[t]] / t^N with N = val(det q_t) + 1.
// max_order, when set, caps N and raises DvrError::TruncationCap beyond it.
BrokenQuadric limit_dvr(const QPolyMatrix& q_t, std::optional<std::size_t> max_order = std::nullopt);

// The duality CQ(V) -> CQ(V^*): annihilator flag in reversed order, inverse
// forms in reversed order.
BrokenQuadric dualize(const BrokenQuadric& bq);

// Coordinates of the Tyrrell chart attached to the standard full flag.
struct TyrrellCoords {
    QVector y;  // y_1 .. y_{d-1}
    QMatrix x;  // strictly upper triangular part is used
    friend bool operator==(const TyrrellCoords& a, const TyrrellCoords& b) { return a.y == b.y && a.x == b.x; }
};

ExteriorTuple tyrrell_point(const QVector& y, const QMatrix& x);
// basis: columns are the ordered basis of V in which the chart is read.
bool tyrrell_membership(const ExteriorTuple& t, const QMatrix& basis);
bool tyrrell_membership(const ExteriorTuple& t);
// Throws std::domain_error("not in patch") when membership fails.
TyrrellCoords tyrrell_coords(const BrokenQuadric& bq, const QMatrix& basis);
TyrrellCoords tyrrell_coords(const BrokenQuadric& bq);

// Coordinates with respect to a new basis of V (columns of basis).
ExteriorTuple change_basis(const ExteriorTuple& t, const QMatrix& basis);
BrokenQuadric change_basis(const BrokenQuadric& bq, const QMatrix& basis);

// Unit upper triangular matrix with the strictly upper entries of x.
QMatrix unipotent_from(const QMatrix& x);

} // namespace cq

#endif
