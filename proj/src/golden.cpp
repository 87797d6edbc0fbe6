#include "cq/golden.hpp"
#include "cq/compat.hpp"

#include <sstream>

namespace cq::golden {

ArtinAlgebra plane_algebra() {
    // Columns are images of 1, y, y^2, y^3, x.
    QMatrix x(5, 5), y(5, 5);
    x(4, 0) = 1;  // 1 -> x
    x(3, 4) = 1;  // x -> x^2 = y^3
    y(1, 0) = 1;
    y(2, 1) = 1;
    y(3, 2) = 1;
    return ArtinAlgebra{{x, y}, QVector{1, 0, 0, 0, 0}};
}

QVector plane_orientation() { return QVector{0, 0, 0, 1, 0}; }

QMatrix plane_phi() {
    return QMatrix{{0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 0, 0, 0, 1}};
}

QMatrix plane_q() { return plane_phi(); }

std::vector<std::size_t> plane_hilbert() { return {1, 2, 1, 1}; }

namespace {

QPoly tp(std::size_t k, const Rational& c = 1) { return QPoly::monomial(c, k); }

QSubspace rows(std::initializer_list<std::initializer_list<Rational>> r) { return QSubspace::span(QMatrix(r)); }

const QMatrix hyperbolic{{0, 1}, {1, 0}};

} // namespace

QPolyMatrix plane_phi_u() {
    QPolyMatrix m(5, 5);
    for (std::size_t i = 0; i < 4; ++i) m(i, 3 - i) = 1;
    m(4, 4) = tp(1);
    return m;
}

std::vector<std::size_t> plane_monomial_positions() { return {0, 4, 1, 2, 3}; }

BrokenQuadric plane_phi_limit() {
    QMatrix anti{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    return BrokenQuadric::make(5, {rows({{0, 0, 0, 0, 1}})}, {anti, QMatrix{{1}}});
}

BrokenQuadric plane_q_limit() {
    QMatrix anti{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    return BrokenQuadric::make(5, {rows({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}})},
                               {QMatrix{{1}}, anti});
}

std::vector<MPoly> plane_gr_generators() {
    MPoly x = MPoly::variable(0), y = MPoly::variable(1);
    return {x * x, x * y, y * y * y * y};
}

QPolyMatrix diagonal_family() {
    QPolyMatrix q(4, 4);
    q(0, 0) = 1;
    q(1, 1) = tp(1);
    q(2, 2) = tp(2);
    q(3, 3) = tp(2);
    return q;
}

BrokenQuadric diagonal_limit() {
    return BrokenQuadric::make(4, {rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), rows({{0, 0, 1, 0}, {0, 0, 0, 1}})},
                               {QMatrix{{1}}, QMatrix{{1}}, QMatrix{{1, 0}, {0, 1}}});
}

BrokenQuadric diagonal_dual_limit() {
    return BrokenQuadric::make(4, {rows({{1, 0, 0, 0}, {0, 1, 0, 0}}), rows({{1, 0, 0, 0}})},
                               {QMatrix{{1, 0}, {0, 1}}, QMatrix{{1}}, QMatrix{{1}}});
}

QPolyMatrix perturbed_family(bool extra) {
    QPolyMatrix q(4, 4);
    q(0, 0) = q(1, 1) = 1;
    q(0, 2) = q(2, 0) = tp(2, Rational(1, 2));
    q(1, 3) = q(3, 1) = tp(2, Rational(1, 2));
    if (extra) q(2, 2) = tp(3);
    return q;
}

BrokenQuadric perturbed_limit(bool extra) {
    const QMatrix id2{{1, 0}, {0, 1}};
    if (!extra) return BrokenQuadric::make(4, {rows({{0, 0, 1, 0}, {0, 0, 0, 1}})}, {id2, id2});
    return BrokenQuadric::make(4, {rows({{0, 0, 1, 0}, {0, 0, 0, 1}}), rows({{0, 0, 0, 1}})}, {id2, QMatrix{{1}}, QMatrix{{1}}});
}

namespace {

// Operators of k[a,b,c][t]/(a^2, b^2, t c - a b, ...) on (1, a, b, c), variable
// order given by slot: a, b, c are the positions of the three variables.
AlgebraFamily square_zero(std::size_t a, std::size_t b, std::size_t c) {
    AlgebraFamily f;
    f.ops.assign(3, QPolyMatrix(4, 4));
    // Coordinates: 0 = 1, and 1 + slot for each variable.
    f.ops[a](1 + a, 0) = 1;
    f.ops[b](1 + b, 0) = 1;
    f.ops[c](1 + c, 0) = 1;
    f.ops[a](1 + c, 1 + b) = tp(1);  // a * b = t c
    f.ops[b](1 + c, 1 + a) = tp(1);
    f.v = QVector{1, 0, 0, 0};
    f.basis = {{}, {1}, {0, 1}, {0, 0, 1}};
    return f;
}

} // namespace

AlgebraFamily square_zero_family() { return square_zero(0, 1, 2); }
QVector square_zero_orientation() { return QVector{0, 0, 0, 1}; }

QPolyMatrix square_zero_display() {
    QPolyMatrix m(4, 4);
    m(0, 3) = m(3, 0) = tp(1);
    m(1, 2) = m(2, 1) = 1;
    return m;
}

AlgebraFamily square_zero_relabeled() { return square_zero(1, 2, 0); }
QVector square_zero_relabeled_orientation() { return QVector{0, 1, 0, 0}; }

OrientedLimit square_zero_relabeled_limit() {
    OrientedLimit o;
    o.phi = BrokenQuadric::make(4, {rows({{0, 0, 1, 0}, {0, 0, 0, 1}})}, {hyperbolic, hyperbolic});
    o.q = BrokenQuadric::make(4, {rows({{1, 0, 0, 0}, {0, 1, 0, 0}})}, {hyperbolic, hyperbolic});
    return o;
}

namespace {

template <class F>
CaseResult run_case(const std::string& name, F&& body) {
    CaseResult r;
    r.name = name;
    try {
        std::string detail;
        r.pass = body(detail);
        r.detail = detail.empty() ? (r.pass ? "ok" : "mismatch") : detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

// Coordinates of a graded-monomial-basis result expressed in the plane basis.
BrokenQuadric plane_to_listed_basis(const BrokenQuadric& bq) {
    auto pos = plane_monomial_positions();
    QMatrix basis(5, 5);
    for (std::size_t k = 0; k < 5; ++k) basis(k, pos[k]) = 1;
    return change_basis(bq, basis);
}

} // namespace

std::vector<CaseResult> verify_all() {
    std::vector<CaseResult> out;
    out.push_back(run_case("diagonal-limit", [](std::string&) {
        const auto q = diagonal_family();
        return limit_minor(q, LimitStrategy::Full) == diagonal_limit() && limit_minor(q, LimitStrategy::Probe) == diagonal_limit() &&
               limit_dvr(q) == diagonal_limit();
    }));
    out.push_back(run_case("perturbed-limits", [](std::string&) {
        return limit_minor(perturbed_family(false)) == perturbed_limit(false) &&
               limit_minor(perturbed_family(true)) == perturbed_limit(true) && perturbed_limit(false) != perturbed_limit(true);
    }));
    out.push_back(run_case("duality-flags", [](std::string&) {
        return dualize(diagonal_limit()) == diagonal_dual_limit() && dualize(diagonal_dual_limit()) == diagonal_limit();
    }));
    out.push_back(run_case("plane-hilbert", [](std::string& d) {
        auto h = hilbert_function(plane_algebra().module());
        d = "s=" + std::to_string(socle_degree(plane_algebra().module()));
        return h == plane_hilbert();
    }));
    out.push_back(run_case("plane-decomposition", [](std::string&) {
        SymDecomp sd = symmetric_decomposition(plane_algebra(), plane_orientation());
        return sd.s == 3 && sd.delta.size() == 2 && sd.delta[0] == std::vector<std::size_t>{1, 1, 1, 1} &&
               sd.delta[1] == std::vector<std::size_t>{0, 1, 0, 0} && sd.basis[1][1] == QMatrix{{0, 0, 0, 0, 1}};
    }));
    out.push_back(run_case("plane-orientation", [](std::string&) {
        OrientedQuadric o = orientation_to_quadric(plane_algebra(), plane_orientation());
        return o.phi == plane_phi() && o.q == plane_q();
    }));
    out.push_back(run_case("plane-gr-ideal", [](std::string&) {
        return bb_limit_ideal(plane_algebra()).generators == plane_gr_generators() &&
               graded_ideal_generators(assoc_graded(plane_algebra()).alg, 4) == plane_gr_generators();
    }));
    out.push_back(run_case("plane-pairing-family", [](std::string&) {
        QPolyMatrix f = torus_pairing_family(plane_algebra(), plane_orientation());
        auto pos = plane_monomial_positions();
        QPolyMatrix expect = plane_phi_u();
        for (std::size_t k = 0; k < 5; ++k)
            for (std::size_t l = 0; l < 5; ++l)
                if (f(k, l) != expect(pos[k], pos[l])) return false;
        return true;
    }));
    out.push_back(run_case("plane-torus-limit", [](std::string&) {
        TorusLimitResult r = torus_limit(plane_algebra(), plane_orientation());
        BrokenQuadric oracle = torus_limit_oracle(plane_algebra(), plane_orientation());
        return r.q_limit == oracle && plane_to_listed_basis(r.q_limit) == plane_q_limit() &&
               plane_to_listed_basis(r.phi_limit) == plane_phi_limit() && limit_minor(plane_phi_u()) == plane_phi_limit() &&
               dualize(limit_minor(plane_phi_u())) == plane_q_limit();
    }));
    out.push_back(run_case("square-zero-limit", [](std::string&) {
        OrientedLimit o = oriented_family_limit(pairing_family(square_zero_relabeled(), square_zero_relabeled_orientation()));
        OrientedLimit e = square_zero_relabeled_limit();
        return o.phi == e.phi && o.q == e.q;
    }));
    out.push_back(run_case("square-zero-not-principal", [](std::string& d) {
        // The limit flag piece <y, z> is not generated by one element.
        OrientedLimit e = square_zero_relabeled_limit();
        const QSubspace& piece = e.phi.flag(1);
        AlgebraFamily f = square_zero_relabeled();
        std::vector<QMatrix> ops0;
        for (const auto& x : f.ops) ops0.push_back(eval_poly_matrix(x, Rational(0)));
        for (std::size_t r = 0; r < piece.dim(); ++r) {
            QSubspace gen = QSubspace::span(QMatrix::from_rows({piece.basis().row(r)}, 4));
            for (const auto& x : ops0) gen = gen + gen.image_under(x);
            if (gen == piece) return false;
        }
        d = "ideal of dimension " + std::to_string(piece.dim()) + " with zero multiplication";
        return piece.dim() == 2;
    }));
    return out;
}

} // namespace cq::golden
