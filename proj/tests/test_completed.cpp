#include "doctest.h"
#include "support.hpp"

using namespace cq;
using namespace cqtest;

namespace {

QPoly tp(int k, Rational c = 1) { return QPoly::monomial(c, static_cast<std::size_t>(k)); }

QPolyMatrix diag_family(std::initializer_list<int> exps) {
    QPolyMatrix q(exps.size(), exps.size());
    std::size_t i = 0;
    for (int e : exps) {
        q(i, i) = tp(e);
        ++i;
    }
    return q;
}

// Flag <e2*,e3*,e4*> > <e3*,e4*> with q0 = e1^2, q1 = e2^2, q2 = e3^2 + e4^2.
BrokenQuadric diagonal_point() {
    return BrokenQuadric::make(4, {span_rows({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}), span_rows({{0, 0, 1, 0}, {0, 0, 0, 1}})},
                               {QMatrix{{1}}, QMatrix{{1}}, QMatrix{{1, 0}, {0, 1}}});
}

// q(t) = e1^2 + e2^2 + t^2 (e1 e3 + e2 e4), as a Gram matrix on covectors.
QPolyMatrix perturbed_family(bool extra) {
    QPolyMatrix q(4, 4);
    q(0, 0) = q(1, 1) = 1;
    q(0, 2) = q(2, 0) = tp(2, Rational(1, 2));
    q(1, 3) = q(3, 1) = tp(2, Rational(1, 2));
    if (extra) q(2, 2) = tp(3);
    return q;
}

} // namespace

TEST_CASE("broken quadric validation") {
    CHECK_THROWS(BrokenQuadric::make(2, {}, {QMatrix{{1, 0}, {0, 0}}}));
    CHECK_THROWS(BrokenQuadric::make(2, {}, {QMatrix{{1, 2}, {3, 1}}}));
    CHECK_THROWS(BrokenQuadric::make(2, {span_rows({{1, 0}})}, {QMatrix{{1}}}));
    CHECK_THROWS(BrokenQuadric::make(2, {QSubspace::full(2)}, {QMatrix{{1}}, QMatrix{{1}}}));
    auto bq = BrokenQuadric::unbroken(QMatrix{{2, 4}, {4, 6}});
    CHECK(bq.form(0) == QMatrix{{1, 2}, {2, 3}});
    CHECK(bq.ranks() == std::vector<std::size_t>{2});
}

TEST_CASE("limit of diag(1, l, l^2, l^2)") {
    QPolyMatrix q = diag_family({0, 1, 2, 2});
    ExteriorTuple t = make_exterior_tuple(4, {lowest_order(wedge_power(q, 1)).second, lowest_order(wedge_power(q, 2)).second,
                                              lowest_order(wedge_power(q, 3)).second, lowest_order(wedge_power(q, 4)).second});
    CHECK(t.factors[0] == diag({1, 0, 0, 0}));
    CHECK(t.factors[1] == diag({1, 0, 0, 0, 0, 0}));
    CHECK(t.factors[2] == diag({1, 1, 0, 0}));  // (123),(124),(134),(234)
    BrokenQuadric expect = diagonal_point();
    CHECK(to_exterior(expect) == t);
    CHECK(from_exterior(t) == expect);
    CHECK(limit_minor(q) == expect);
    CHECK(limit_minor(q, LimitStrategy::Probe) == expect);
    CHECK(limit_dvr(q) == expect);
}

TEST_CASE("higher-order perturbation changes the limit") {
    BrokenQuadric a = limit_minor(perturbed_family(false));
    BrokenQuadric b = limit_minor(perturbed_family(true));
    BrokenQuadric ea = BrokenQuadric::make(4, {span_rows({{0, 0, 1, 0}, {0, 0, 0, 1}})}, {QMatrix{{1, 0}, {0, 1}}, QMatrix{{1, 0}, {0, 1}}});
    BrokenQuadric eb = BrokenQuadric::make(4, {span_rows({{0, 0, 1, 0}, {0, 0, 0, 1}}), span_rows({{0, 0, 0, 1}})},
                                           {QMatrix{{1, 0}, {0, 1}}, QMatrix{{1}}, QMatrix{{1}}});
    CHECK(a == ea);
    CHECK(b == eb);
    CHECK(a != b);
    CHECK(limit_minor(perturbed_family(true), LimitStrategy::Probe) == eb);
    CHECK(limit_dvr(perturbed_family(false)) == ea);
    CHECK(limit_dvr(perturbed_family(true)) == eb);
}

TEST_CASE("to_exterior on small cases") {
    QMatrix q{{2, 1}, {1, 3}};
    auto t = to_exterior(BrokenQuadric::unbroken(q));
    CHECK(t.factors[0] == q);
    CHECK(t.factors[1] == QMatrix{{1}});
    auto one = to_exterior(BrokenQuadric::unbroken(QMatrix{{-5}}));
    CHECK(one.factors.size() == 1);
    CHECK(one.factors[0] == QMatrix{{1}});
    CHECK(from_exterior(t) == BrokenQuadric::unbroken(q));
}

TEST_CASE("from_exterior rejects inconsistent tuples") {
    auto t = to_exterior(diagonal_point());
    t.factors[1] = diag({0, 0, 0, 0, 0, 1});  // kernel pattern of p1 violated
    CHECK_THROWS_AS(from_exterior(t), ReconstructionError);
    try {
        from_exterior(t);
    } catch (const ReconstructionError& e) {
        CHECK(e.factor() == 2);
    }
    auto u = to_exterior(diagonal_point());
    u.factors[2] = diag({0, 0, 1, 0});
    CHECK_THROWS_AS(from_exterior(u), ReconstructionError);
}

TEST_CASE("exterior round trip on random broken quadrics") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        BrokenQuadric bq = random_broken_quadric(rng, 1 + trial % 5);
        CHECK(from_exterior(to_exterior(bq)) == bq);
    }
}

TEST_CASE("limit strategies agree with the dvr oracle") {
    std::mt19937 rng(32);
    for (int trial = 0; trial < 30; ++trial) {
        QPolyMatrix q = random_family(rng, 1 + trial % 5, 3);
        BrokenQuadric full = limit_minor(q, LimitStrategy::Full);
        CHECK(limit_minor(q, LimitStrategy::Probe) == full);
        CHECK(limit_dvr(q) == full);
    }
}

TEST_CASE("degenerate families with prescribed broken limits") {
    // q(t) = sum_j t^j (lift of q_j) recovers a random broken quadric.
    std::mt19937 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        BrokenQuadric bq = random_broken_quadric(rng, 2 + trial % 4);
        const std::size_t d = bq.dim();
        QPolyMatrix q(d, d);
        for (std::size_t j = 0; j < bq.levels(); ++j) {
            QMatrix l = bq.lift(j);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) q(a, b) += tp(static_cast<int>(j), l(a, b));
        }
        CHECK(limit_minor(q) == bq);
        CHECK(limit_minor(q, LimitStrategy::Probe) == bq);
        CHECK(limit_dvr(q) == bq);
    }
}

TEST_CASE("limit rescaling invariance and errors") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 10; ++trial) {
        QPolyMatrix q = random_family(rng, 3, 2);
        QPolyMatrix s(3, 3);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) s(a, b) = tp(2, Rational(-3)) * q(a, b);
        CHECK(limit_minor(s) == limit_minor(q));
    }
    QPolyMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = sing(1, 0) = tp(1);
    sing(1, 1) = tp(2);
    CHECK_THROWS_AS(limit_minor(sing), std::domain_error);
    CHECK_THROWS_AS(limit_dvr(sing), std::domain_error);
    CHECK(limit_minor(to_poly_matrix(QMatrix{{1, 2}, {2, 1}})) == BrokenQuadric::unbroken(QMatrix{{1, 2}, {2, 1}}));
    CHECK_THROWS_AS(limit_dvr(diag_family({0, 1, 2, 2}), 3), DvrError);
}

TEST_CASE("corank one quadrics have a unique completion") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t d = 2 + trial % 3;
        QMatrix g = random_matrix(rng, d, d - 1);
        QMatrix q0 = g * random_full_rank_symmetric(rng, d - 1) * g.transpose();
        if (rank(q0) != d - 1) continue;
        auto fam = [&](const QMatrix& r) {
            QPolyMatrix q = to_poly_matrix(q0);
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) q(a, b) += tp(1, r(a, b));
            return q;
        };
        QMatrix r1 = random_full_rank_symmetric(rng, d), r2 = random_full_rank_symmetric(rng, d);
        QPolyMatrix f1 = fam(r1), f2 = fam(r2);
        if (is_zero(det(f1)) || is_zero(det(f2))) continue;
        BrokenQuadric l1 = limit_minor(f1), l2 = limit_minor(f2);
        // Independence holds when r is generic: nonzero on the kernel line of q0.
        QVector k = kernel(q0).row(0);
        if (is_zero(dot(k, r1 * k)) || is_zero(dot(k, r2 * k))) continue;
        CHECK(l1 == l2);
        CHECK(l1.form(0) == primitive(subquotient_form(q0, QSubspace::full(d), QSubspace::span(kernel(q0)))));
    }
}

TEST_CASE("dualize") {
    QMatrix q{{2, 1}, {1, 1}};
    CHECK(dualize(BrokenQuadric::unbroken(q)) == BrokenQuadric::unbroken(inverse(q)));

    BrokenQuadric d = dualize(diagonal_point());
    CHECK(d.levels() == 3);
    CHECK(d.flag(1) == span_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(d.flag(2) == span_rows({{1, 0, 0, 0}}));
    CHECK(d.form(0) == QMatrix{{1, 0}, {0, 1}});
    CHECK(d.form(1) == QMatrix{{1}});
    CHECK(d.form(2) == QMatrix{{1}});
    CHECK(dualize(d) == diagonal_point());

    std::mt19937 rng(36);
    for (int trial = 0; trial < 30; ++trial) {
        BrokenQuadric bq = random_broken_quadric(rng, 1 + trial % 5);
        CHECK(dualize(dualize(bq)) == bq);
    }
}

TEST_CASE("dualize commutes with limits of inverse families") {
    // q(t) diagonal with t-powers; its inverse family is t^N q(t)^{-1}.
    QPolyMatrix q = diag_family({0, 1, 3});
    QPolyMatrix qi = diag_family({3, 2, 0});
    CHECK(dualize(limit_minor(q)) == limit_minor(qi));
}

TEST_CASE("tyrrell_point") {
    QVector y{Rational(3)};
    QMatrix x{{0, 2}, {0, 0}};
    auto t = tyrrell_point(y, x);
    CHECK(t.factors[0] == QMatrix{{1, 2}, {2, 7}});
    CHECK(t.factors[1] == QMatrix{{1}});

    std::mt19937 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 1 + trial % 4;
        QVector yy(d - 1);
        for (auto& v : yy) v = small_rational(rng, -2, 2);
        QMatrix xx = random_matrix(rng, d, d, -2, 2);
        auto p = tyrrell_point(yy, xx);
        bool all_nonzero = true;
        for (auto& v : yy) all_nonzero = all_nonzero && !is_zero(v);
        BrokenQuadric bq = from_exterior(p);
        CHECK(to_exterior(bq) == p);
        if (all_nonzero) CHECK(bq.is_unbroken());
        auto c = tyrrell_coords(bq);
        CHECK(c.y == yy);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) CHECK(c.x(i, j) == xx(i, j));
    }

    auto zero = tyrrell_point(QVector(3, Rational(0)), QMatrix(4, 4));
    BrokenQuadric full = from_exterior(zero);
    CHECK(full.levels() == 4);
    for (std::size_t i = 1; i < 4; ++i) {
        QMatrix rows(0, 4);
        for (std::size_t k = i; k < 4; ++k) {
            QVector e(4);
            e[k] = 1;
            rows.append_row(e);
        }
        CHECK(full.flag(i) == QSubspace::span(rows));
    }
    auto zc = tyrrell_coords(full);
    CHECK(zc.y == QVector(3, Rational(0)));
    CHECK(zc.x.is_zero_matrix());
}

TEST_CASE("tyrrell membership and coordinates") {
    auto id = to_exterior(BrokenQuadric::unbroken(QMatrix::identity(3)));
    CHECK(tyrrell_membership(id));
    auto p = to_exterior(diagonal_point());
    CHECK(tyrrell_membership(p));
    QMatrix rev(4, 4);
    for (std::size_t i = 0; i < 4; ++i) rev(3 - i, i) = 1;
    CHECK_FALSE(tyrrell_membership(p, rev));
    CHECK_THROWS_AS(tyrrell_coords(diagonal_point(), rev), std::domain_error);

    auto c = tyrrell_coords(BrokenQuadric::unbroken(diag({1, 5})));
    CHECK(c.y == QVector{Rational(5)});
    CHECK(is_zero(c.x(0, 1)));

    // Reading the chart in another basis agrees with changing the point first.
    std::mt19937 rng(38);
    for (int trial = 0; trial < 10; ++trial) {
        BrokenQuadric bq = random_broken_quadric(rng, 3);
        QMatrix e = random_invertible(rng, 3);
        CHECK(to_exterior(change_basis(bq, e)) == change_basis(to_exterior(bq), e));
        if (tyrrell_membership(to_exterior(bq), e)) CHECK(tyrrell_coords(bq, e) == tyrrell_coords(change_basis(bq, e)));
    }
}
