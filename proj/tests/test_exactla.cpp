#include "doctest.h"
#include "support.hpp"

#include <numeric>

using namespace cq;
using namespace cqtest;

namespace {

// Leibniz expansion over all permutations.
template <class R>
R leibniz(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    R total(0);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        R term(1);
        for (std::size_t i = 0; i < n; ++i) term = term * m(i, p[i]);
        total = (inv % 2) ? R(total - term) : R(total + term);
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

QPoly t_pow(int k) { return QPoly::monomial(Rational(1), static_cast<std::size_t>(k)); }

} // namespace

TEST_CASE("scalar parsing and printing") {
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(to_string(parse_rational("10/5")) == "2");
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("unipoly arithmetic") {
    QPoly a(std::vector<Rational>{0, 1, 2});  // t + 2t^2
    CHECK(a.degree() == 2);
    CHECK(a.valuation() == 1);
    CHECK(QPoly().degree() == -1);
    CHECK(QPoly().valuation() == -1);
    QPoly b = a * a;
    CHECK(b == QPoly(std::vector<Rational>{0, 0, 1, 4, 4}));
    CHECK(exact_quotient(b, a) == a);
    CHECK_THROWS(exact_quotient(a, QPoly(std::vector<Rational>{1, 1, 1})));
    CHECK(is_zero(a - a));
}

TEST_CASE("det examples") {
    CHECK(det(QMatrix::identity(3)) == 1);
    CHECK(det(QMatrix{{1, 2}, {3, 4}}) == -2);
    QPolyMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = m(1, 0) = t_pow(1);
    m(1, 1) = t_pow(2);
    CHECK(is_zero(det(m)));
    CHECK_THROWS_AS(det(QMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with Leibniz expansion") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + trial % 5;
        QMatrix a = random_matrix(rng, n, n);
        CHECK(det(a) == leibniz(a));
    }
    for (int trial = 0; trial < 10; ++trial) {
        QPolyMatrix q = random_family(rng, 1 + trial % 4, 2);
        CHECK(det(q) == leibniz(q));
    }
}

TEST_CASE("det is multiplicative") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + trial % 5;
        QMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("det over a prime field") {
    using F = Zp<10007>;
    Matrix<F> m{{F(1), F(2)}, {F(3), F(4)}};
    CHECK(det(m) == F(-2));
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> u(0, 10006);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + trial % 4;
        Matrix<F> a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) = F(u(rng));
                b(i, j) = F(u(rng));
            }
        CHECK(det(a * b) == det(a) * det(b));
        CHECK(det(a) == leibniz(a));
        auto k = kernel(a);
        for (std::size_t r = 0; r < k.rows(); ++r)
            for (const auto& x : a * k.row(r)) CHECK(is_zero(x));
    }
    CHECK(F(2) * F(2).inverse() == F(1));
}

TEST_CASE("rank, kernel, image examples") {
    auto z = rank_kernel_image(QMatrix(2, 3));
    CHECK(z.rank == 0);
    CHECK(z.kernel == QMatrix::identity(3));
    auto id = rank_kernel_image(QMatrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.rows() == 0);
    auto ones = rank_kernel_image(QMatrix{{1, 1}, {1, 1}});
    CHECK(ones.rank == 1);
    CHECK(ones.kernel == QMatrix{{1, -1}});
    CHECK(ones.image == QMatrix{{1, 1}});
}

TEST_CASE("rank-nullity and kernel annihilation on random matrices") {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
        QMatrix a = random_matrix(rng, r, c, -1, 1);
        auto rki = rank_kernel_image(a);
        CHECK(rki.rank + rki.kernel.rows() == c);
        for (std::size_t k = 0; k < rki.kernel.rows(); ++k)
            for (const auto& x : a * rki.kernel.row(k)) CHECK(is_zero(x));
        QMatrix g = random_invertible(rng, r);
        CHECK(rank(g * a) == rki.rank);
        CHECK(rref(g * a).rref == rki.rref);
    }
}

TEST_CASE("lowest_order examples") {
    QPolyMatrix m(2, 2);
    m(0, 0) = t_pow(1);
    m(0, 1) = m(1, 0) = t_pow(2);
    m(1, 1) = t_pow(3);
    auto [v, c] = lowest_order(m);
    CHECK(v == 1);
    CHECK(c == QMatrix{{1, 0}, {0, 0}});

    QPolyMatrix d(4, 4);
    d(0, 0) = 1;
    d(1, 1) = t_pow(1);
    d(2, 2) = d(3, 3) = t_pow(2);
    auto [v2, c2] = lowest_order(d);
    CHECK(v2 == 0);
    CHECK(c2 == diag({1, 0, 0, 0}));

    QPolyMatrix one(1, 1);
    one(0, 0) = t_pow(3);
    CHECK(lowest_order(one).first == 3);
    CHECK(lowest_order(one).second == QMatrix{{1}});
    CHECK_THROWS(lowest_order(QPolyMatrix(2, 2)));
}

TEST_CASE("lowest_order under monomial rescaling") {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        QPolyMatrix q = random_family(rng, 3, 3);
        auto [v, c] = lowest_order(q);
        const int k = trial % 4;
        const Rational s(trial + 1, 3);
        QPolyMatrix scaled(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) scaled(i, j) = QPoly::monomial(s, k) * q(i, j);
        auto [v2, c2] = lowest_order(scaled);
        CHECK(v2 == v + k);
        CHECK(c2 == Rational(s) * c);
    }
}

TEST_CASE("subspace operations") {
    QSubspace u = span_rows({{1, 1, 0}, {0, 0, 1}});
    QSubspace w = span_rows({{1, 0, 0}, {0, 1, 0}});
    CHECK((u + w).dim() == 3);
    CHECK(u.intersect(w) == span_rows({{1, 1, 0}}));
    CHECK(u.annihilator() == span_rows({{1, -1, 0}}));
    CHECK(u.annihilator().annihilator() == u);
    QSubspace g = span_rows({{0, 0, 1}});
    CHECK(u.complement_rows(g) == QMatrix{{1, 1, 0}});
    CHECK(u.quotient_coords(g, {2, 2, 5}) == std::vector<Rational>{2});
    CHECK_THROWS(g.complement_rows(u));
}
