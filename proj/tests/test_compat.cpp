#include "doctest.h"
#include "locus.hpp"

using namespace cq;
using namespace cqtest;

namespace {

QMatrix jordan_block(std::size_t d) { return jordan_model_matrix(std::vector<Rational>(d, Rational(0))); }

Rational trace_pair(const QMatrix& a, const QMatrix& b) { return trace(a * b); }

} // namespace

TEST_CASE("is_compatible examples") {
    // k[x]/(x^3) in the basis (x^2, x, 1); ideal flag (x) > (x^2) on the dual side.
    BrokenQuadric jb = jordan_fiber_point(3, {1, 2}, {});
    CHECK(is_compatible(jordan_block(3), jb));
    BrokenQuadric un = jordan_fiber_point(3, {}, {Rational(2), Rational(-1)});
    CHECK(is_compatible(jordan_block(3), un));

    // Flag <e1*> is not preserved by the transpose of a Jordan block.
    BrokenQuadric bad = BrokenQuadric::make(2, {span_rows({{1, 0}})}, {QMatrix{{1}}, QMatrix{{1}}});
    CHECK_FALSE(is_compatible(jordan_block(2), bad));

    std::mt19937 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix q = random_full_rank_symmetric(rng, 3);
        QMatrix x = random_matrix(rng, 3, 3, -1, 1);
        if (trial % 2) x = random_symmetric(rng, 3) * inverse(q);
        CHECK(is_compatible(x, BrokenQuadric::unbroken(q)) == (x * q == q * x.transpose()));
    }
    CHECK_THROWS(is_compatible(QMatrix::identity(2), un));
}

TEST_CASE("compatible and anticompatible spaces: examples") {
    auto c = compatible_space(BrokenQuadric::unbroken(QMatrix::identity(2)));
    CHECK(c.dim() == 3);
    for (std::size_t i = 0; i < c.dim(); ++i) CHECK(c.element(i).is_symmetric());

    for (std::size_t d = 1; d <= 4; ++d) {
        BrokenQuadric full = from_exterior(tyrrell_point(QVector(d - 1, Rational(0)), QMatrix(d, d)));
        auto cs = compatible_space(full), as = anticompatible_space(full);
        CHECK(cs.dim() == binomial(d + 1, 2));
        CHECK(as.dim() == binomial(d, 2));
        for (std::size_t i = 0; i < cs.dim(); ++i) {
            QMatrix m = cs.element(i);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < r; ++s) CHECK(is_zero(m(r, s)));
        }
        for (std::size_t i = 0; i < as.dim(); ++i) {
            QMatrix m = as.element(i);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s <= r; ++s) CHECK(is_zero(m(r, s)));
        }
    }

    // q = e0^2 + l e1^2: compatible = [[a11, a12], [l a12, a22]].
    for (int l : {1, 2, -3}) {
        BrokenQuadric bq = BrokenQuadric::unbroken(diag({1, l}));
        auto cs = compatible_space(bq);
        CHECK(cs.dim() == 3);
        CHECK(cs.contains(QMatrix{{0, 1}, {l, 0}}));
        CHECK(cs.contains(QMatrix{{1, 0}, {0, 0}}));
        CHECK(cs.contains(QMatrix{{0, 0}, {0, 1}}));
    }

    // Generic q = [[l11, l12], [l12, l22]]: anticompatible spanned by [[l12, -l11], [l22, -l12]].
    std::mt19937 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix q = random_full_rank_symmetric(rng, 2);
        auto as = anticompatible_space(BrokenQuadric::unbroken(q));
        CHECK(as.dim() == 1);
        CHECK(as.contains(QMatrix{{q(0, 1), -q(0, 0)}, {q(1, 1), -q(0, 1)}}));
    }
}

TEST_CASE("compatible spaces of random broken quadrics") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + trial % 5;
        BrokenQuadric bq = random_broken_quadric(rng, d);
        auto cs = compatible_space(bq), as = anticompatible_space(bq);
        CHECK(cs.dim() == binomial(d + 1, 2));
        CHECK(as.dim() == binomial(d, 2));
        for (std::size_t i = 0; i < cs.dim(); ++i) {
            CHECK(is_compatible(cs.element(i), bq));
            for (std::size_t j = 0; j < as.dim(); ++j) CHECK(is_zero(trace_pair(cs.element(i), as.element(j))));
        }
        for (std::size_t j = 0; j < as.dim(); ++j) CHECK(is_anticompatible(as.element(j), bq));
    }
}

TEST_CASE("compatible space at the block-diagonal model") {
    // Standard flag with blocks (2, 1): B = I, so compatible x are block upper
    // triangular with x_00 S_0 symmetric.
    QMatrix s0{{1, 2}, {2, -1}};
    BrokenQuadric bq = BrokenQuadric::make(3, {span_rows({{0, 0, 1}})}, {s0, QMatrix{{1}}});
    auto cs = compatible_space(bq);
    // Explicit block description: {[[Y S0^{-1} with Y symmetric], [*], [0, 0, c]]}.
    QMatrix expect(0, 9);
    QMatrix s0inv = inverse(s0);
    for (auto y : {QMatrix{{1, 0}, {0, 0}}, QMatrix{{0, 1}, {1, 0}}, QMatrix{{0, 0}, {0, 1}}}) {
        QMatrix blk = y * s0inv, full(3, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) full(i, j) = blk(i, j);
        std::vector<Rational> v;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) v.push_back(full(i, j));
        expect.append_row(v);
    }
    for (auto idx : {2, 5, 8}) {
        std::vector<Rational> v(9, Rational(0));
        v[static_cast<std::size_t>(idx)] = 1;
        expect.append_row(v);
    }
    CHECK(cs.basis == QSubspace::span(expect).basis());
}

TEST_CASE("selfdual_graded_report") {
    std::vector<QMatrix> diag_action{diag({1, 2, 3}), diag({0, 1, 0})};
    auto r = selfdual_graded_report(diag_action, BrokenQuadric::unbroken(diag({2, -1, 5})));
    CHECK(r.pass);
    CHECK(r.checks.size() == 2);
    CHECK(r.checks[0].size() == 1);

    auto j = selfdual_graded_report({jordan_block(4)}, jordan_fiber_point(4, {2}, {Rational(1), Rational(3)}));
    CHECK(j.pass);
    CHECK(j.checks[0][0].induced == QMatrix{{0, 1}, {0, 0}});

    // Flag <e1*, e3*> is not an ideal: x^T e1* = e2*.
    BrokenQuadric notideal = BrokenQuadric::make(3, {span_rows({{1, 0, 0}, {0, 0, 1}})}, {QMatrix{{1}}, diag({1, 1})});
    auto f = selfdual_graded_report({jordan_block(3)}, notideal);
    CHECK_FALSE(f.pass);
    CHECK_FALSE(f.checks[0][1].invariant);

    CHECK_THROWS_AS(selfdual_graded_report({QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 0}, {1, 0}}}, BrokenQuadric::unbroken(diag({1, 1}))),
                    std::invalid_argument);
}

TEST_CASE("compat_equations: counts and trivial cases") {
    CHECK(compat_equations({QMatrix{{5}}}).equations.empty());
    auto s = compat_equations({jordan_block(3), jordan_block(3) * jordan_block(3)});
    CHECK(s.equations.size() == 2 * 3);
    CHECK(s.vars == std::vector<std::string>{"y1", "y2", "x12", "x13", "x23"});
    CHECK_THROWS(compat_equations({QMatrix{{0, 1}, {0, 0}}, QMatrix{{0, 0}, {1, 0}}}));
}

TEST_CASE("compat_equations: diagonal action cuts out the torus closure") {
    auto s = compat_equations({diag({1, 2, 3})});
    std::mt19937 rng(44);
    for (int trial = 0; trial < 15; ++trial) {
        TyrrellCoords c{QVector(2), QMatrix(3, 3)};
        for (auto& y : c.y) y = small_rational(rng, -2, 2);
        for (const auto& e : s.equations) CHECK(is_zero(e.eval(chart_point(c))));
        // Moving off the diagonal leaves the locus.
        c.x(0, 2) = 1;
        bool some = false;
        for (const auto& e : s.equations) some = some || !is_zero(e.eval(chart_point(c)));
        CHECK(some);
    }
}

TEST_CASE("compat_equations vanish exactly on compatible chart points") {
    std::mt19937 rng(45);
    int on_locus = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t d = 2 + trial % 3;
        auto pt = sample_jordan_locus(rng, d);
        if (!pt) continue;
        QMatrix x = jordan_model_matrix(pt->a);
        auto sys = compat_equations({x});
        std::vector<Rational> chart(pt->coords.begin() + static_cast<long>(d), pt->coords.end());
        CHECK(is_compatible(x, pt->bq));
        for (const auto& e : sys.equations) CHECK(is_zero(e.eval(chart)));
        ++on_locus;
        // A random chart point: equations vanish iff compatible.
        TyrrellCoords c{QVector(d - 1), random_matrix(rng, d, d, -1, 1)};
        for (auto& y : c.y) y = small_rational(rng, -1, 1);
        bool vanish = true;
        for (const auto& e : sys.equations) vanish = vanish && is_zero(e.eval(chart_point(c)));
        CHECK(vanish == is_compatible(x, from_exterior(tyrrell_point(c.y, c.x))));
    }
    CHECK(on_locus >= 20);
}

TEST_CASE("compat_equations in a permuted chart basis") {
    std::mt19937 rng(46);
    QMatrix perm{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    int seen = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto pt = sample_jordan_locus(rng, 3);
        if (!pt) continue;
        QMatrix x = jordan_model_matrix(pt->a);
        if (!tyrrell_membership(to_exterior(pt->bq), perm)) continue;
        auto sys = compat_equations({x}, perm);
        for (const auto& e : sys.equations) CHECK(is_zero(e.eval(chart_point(tyrrell_coords(pt->bq, perm)))));
        ++seen;
    }
    CHECK(seen > 0);
}

TEST_CASE("Jordan model: tangent dimension 2d-1 on the locus") {
    std::mt19937 rng(47);
    CHECK(tangent_dim(jordan_system(1), {Rational(3), }) == 1);
    for (std::size_t d = 2; d <= 4; ++d) {
        PolySystem sys = jordan_system(d);
        CHECK(sys.equations.size() == binomial(d, 2));
        int count = 0;
        for (int trial = 0; trial < 60 && count < 8; ++trial) {
            auto pt = sample_jordan_locus(rng, d);
            if (!pt) continue;
            CHECK(tangent_dim(sys, pt->coords) == 2 * d - 1);
            ++count;
        }
        CHECK(count == 8);
    }
}

TEST_CASE("Jordan fiber over k[x]/(x^3): singular full-flag point") {
    PolySystem sys = jordan_system(3);
    std::vector<Rational> pt(3 + 5, Rational(0));
    CHECK(tangent_dim(sys, pt) == 5);
    CHECK(tangent_dim(sys, pt, true) == 3);
    // First-order check of the tangent vector y1 = e, y2 = -e, x13 = e.
    std::vector<Rational> dir{0, 0, 0, 1, -1, 0, 1, 0};
    for (const auto& e : sys.equations) {
        Rational lin(0);
        for (std::size_t v = 0; v < dir.size(); ++v) lin += e.derivative(v).eval(pt) * dir[v];
        CHECK(is_zero(lin));
    }
    CHECK_THROWS_AS(tangent_dim(sys, {0, 0, 0, 0, 0, 1, 0, 0}), std::domain_error);
}

TEST_CASE("jordan_fiber_point strata") {
    BrokenQuadric un = jordan_fiber_point(3, {}, {Rational(0), Rational(0)});
    CHECK(un.is_unbroken());
    CHECK(un.form(0) == QMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(jordan_fiber_point(3, {1, 2, 3}, {}).levels() == 3);
    CHECK_THROWS(jordan_fiber_point(3, {2, 1}, {}));
    CHECK_THROWS(jordan_fiber_point(4, {2}, {Rational(1)}));

    std::mt19937 rng(48);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + trial % 4;
        std::vector<std::size_t> breaks;
        for (std::size_t k = 1; k < d; ++k)
            if (rng() % 2) breaks.push_back(k);
        std::size_t dim = 0, prev = 0;
        for (auto b : breaks) {
            dim += b - prev - 1;
            prev = b;
        }
        dim += d - prev - 1;
        std::vector<Rational> params(dim);
        for (auto& p : params) p = small_rational(rng);
        BrokenQuadric bq = jordan_fiber_point(d, breaks, params);
        CHECK(is_compatible(jordan_block(d), bq));
        CHECK(jordan_fiber_params(bq) == params);
        if (breaks.empty()) CHECK(dim == d - 1);
    }
}
