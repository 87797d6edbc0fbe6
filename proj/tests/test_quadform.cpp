#include "doctest.h"
#include "support.hpp"

using namespace cq;
using namespace cqtest;

namespace {

QPoly lam(int k) { return QPoly::monomial(Rational(1), static_cast<std::size_t>(k)); }

} // namespace

TEST_CASE("wedge_power examples") {
    for (std::size_t i = 1; i <= 4; ++i) CHECK(wedge_power(QMatrix::identity(4), i) == QMatrix::identity(binomial(4, i)));

    QPolyMatrix q(4, 4);
    q(0, 0) = 1;
    q(1, 1) = lam(1);
    q(2, 2) = q(3, 3) = lam(2);
    QPolyMatrix w = wedge_power(q, 2);
    const int expect[] = {1, 2, 2, 3, 3, 4};  // (12),(13),(14),(23),(24),(34)
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) CHECK(w(a, b) == (a == b ? lam(expect[a]) : QPoly()));

    QMatrix s{{2, 3}, {3, 5}};
    CHECK(wedge_power(s, 2) == QMatrix{{1}});
    CHECK_THROWS_AS(wedge_power(s, 3), std::out_of_range);
    CHECK_THROWS_AS(wedge_power(s, 0), std::out_of_range);
}

TEST_CASE("wedge_power top degree and minor-rank identity") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 + trial % 4;
        const std::size_t r = 1 + trial % d;
        QMatrix g = random_matrix(rng, d, r);
        QMatrix q = g * random_full_rank_symmetric(rng, r) * g.transpose();
        CHECK(wedge_power(q, d) == QMatrix{{det(q)}});
        const std::size_t rq = rank(q);
        for (std::size_t i = 1; i <= d; ++i) CHECK(rank(wedge_power(q, i)) == binomial(rq, i));
    }
}

TEST_CASE("congruence_diagonalize examples") {
    QMatrix h{{0, 1}, {1, 0}};
    auto c = congruence_diagonalize(h);
    CHECK(c.P.transpose() * h * c.P == c.D);
    CHECK(c.D == QMatrix{{2, 0}, {0, Rational(-1, 2)}});

    QMatrix dg = diag({3, -1, 2});
    auto c2 = congruence_diagonalize(dg);
    CHECK(c2.P == QMatrix::identity(3));
    CHECK(c2.D == dg);

    QMatrix ones{{1, 1}, {1, 1}};
    auto c3 = congruence_diagonalize(ones);
    CHECK(c3.D == diag({1, 0}));
    CHECK(c3.P.transpose() * ones * c3.P == c3.D);
}

TEST_CASE("congruence_diagonalize on random forms") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = 1 + trial % 5;
        QMatrix q = random_symmetric(rng, d, -1, 1);
        if (trial % 3 == 0)
            for (std::size_t i = 0; i < d; ++i) q(i, i) = 0;
        auto c = congruence_diagonalize(q);
        CHECK(rank(c.P) == d);
        CHECK(c.P.transpose() * q * c.P == c.D);
        std::size_t nz = 0;
        for (std::size_t i = 0; i < d; ++i) {
            if (!is_zero(c.D(i, i))) ++nz;
            for (std::size_t j = 0; j < d; ++j)
                if (i != j) CHECK(is_zero(c.D(i, j)));
        }
        CHECK(nz == rank(q));
    }
}

TEST_CASE("subquotient_form") {
    std::mt19937 rng(23);
    QMatrix q = random_symmetric(rng, 4);
    CHECK(subquotient_form(q, QSubspace::full(4), QSubspace::zero(4)) == q);

    // Basis (1, x, x^2) of k[x]/(x^3); on (x)/(x^3), identified with k[x]/(x^2),
    // the form a', a'' -> alpha(a' a'') with alpha(x) = 1, alpha(1) = 5.
    QMatrix qj{{0, 0, 0}, {0, 5, 1}, {0, 1, 0}};
    QSubspace f1 = span_rows({{0, 1, 0}, {0, 0, 1}});
    QMatrix s = subquotient_form(qj, f1, QSubspace::zero(3));
    CHECK(s == QMatrix{{5, 1}, {1, 0}});
    CHECK(rank(s) == 2);

    QMatrix g = random_matrix(rng, 4, 2);
    QMatrix deg = g * random_full_rank_symmetric(rng, 2) * g.transpose();
    QSubspace ker = QSubspace::span(kernel(deg));
    CHECK(subquotient_form(deg, ker, QSubspace::zero(4)).is_zero_matrix());

    CHECK_THROWS(subquotient_form(q, ker, QSubspace::full(4)));
}

TEST_CASE("subquotient form does not depend on the lift") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        // q with g in the radical of q restricted to f: build q = C^T S C with C vanishing on g.
        QMatrix b = random_invertible(rng, 4);
        QSubspace f = QSubspace::span(b.rows_of({0, 1, 2}));
        QSubspace g = QSubspace::span(b.rows_of({2}));
        QMatrix binv = inverse(b);
        QMatrix m(4, 4);
        QMatrix s = random_full_rank_symmetric(rng, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(i, j) = s(i, j);
        QMatrix q1 = binv * m * binv.transpose();
        // A second lift differing on the fourth basis vector, which lies outside f.
        m(3, 3) = 7;
        m(0, 3) = m(3, 0) = 2;
        QMatrix q2 = binv * m * binv.transpose();
        CHECK(subquotient_form(q1, f, g) == subquotient_form(q2, f, g));
    }
}

TEST_CASE("primitive representatives") {
    CHECK(primitive(QMatrix{{Rational(-1, 2), Rational(1, 3)}}) == QMatrix{{3, -2}});
    CHECK(primitive(QMatrix{{0, 4}, {6, 0}}) == QMatrix{{0, 2}, {3, 0}});
    CHECK(projectively_equal(QMatrix{{1, 2}}, QMatrix{{-2, -4}}));
    CHECK_FALSE(projectively_equal(QMatrix{{1, 2}}, QMatrix{{1, 3}}));
    CHECK(primitive(QMatrix(2, 2)).is_zero_matrix());
}
