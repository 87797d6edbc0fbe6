#ifndef CQ_TEST_SUPPORT_HPP
#define CQ_TEST_SUPPORT_HPP

#include "cq/completed.hpp"

#include <random>

namespace cqtest {

using cq::QMatrix;
using cq::QPoly;
using cq::QPolyMatrix;
using cq::QSubspace;
using cq::Rational;

inline Rational small_rational(std::mt19937& rng, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    return Rational(num(rng));
}

inline QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = small_rational(rng, lo, hi);
    return m;
}

inline QMatrix random_symmetric(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = small_rational(rng, lo, hi);
    return m;
}

inline QMatrix random_invertible(std::mt19937& rng, std::size_t n) {
    while (true) {
        QMatrix m = random_matrix(rng, n, n);
        if (cq::rank(m) == n) return m;
    }
}

inline QMatrix random_full_rank_symmetric(std::mt19937& rng, std::size_t n) {
    while (true) {
        QMatrix m = random_symmetric(rng, n);
        if (cq::rank(m) == n) return m;
    }
}

// Random broken quadric: random adapted basis, random composition of d,
// random full-rank forms on the blocks.
inline cq::BrokenQuadric random_broken_quadric(std::mt19937& rng, std::size_t d) {
    QMatrix b = random_invertible(rng, d);
    std::vector<std::size_t> sizes;
    std::size_t left = d;
    while (left > 0) {
        std::uniform_int_distribution<std::size_t> pick(1, left);
        sizes.push_back(pick(rng));
        left -= sizes.back();
    }
    std::vector<QSubspace> tail;
    std::vector<QMatrix> comps, grams;
    std::size_t start = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<std::size_t> idx;
        for (std::size_t k = start; k < start + sizes[i]; ++k) idx.push_back(k);
        comps.push_back(b.rows_of(idx));
        grams.push_back(random_full_rank_symmetric(rng, sizes[i]));
        start += sizes[i];
        if (start < d) {
            std::vector<std::size_t> rest;
            for (std::size_t k = start; k < d; ++k) rest.push_back(k);
            tail.push_back(QSubspace::span(b.rows_of(rest)));
        }
    }
    return cq::BrokenQuadric::from_complements(d, tail, comps, grams);
}

// Random symmetric polynomial family sum_k t^k A_k with det not identically zero.
inline QPolyMatrix random_family(std::mt19937& rng, std::size_t d, std::size_t max_deg) {
    while (true) {
        QPolyMatrix q(d, d);
        std::uniform_int_distribution<std::size_t> deg(0, max_deg);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                std::vector<Rational> c(deg(rng) + 1);
                for (auto& x : c) x = small_rational(rng, -2, 2);
                q(i, j) = q(j, i) = QPoly(c);
            }
        if (!is_zero(cq::det(q))) return q;
    }
}

inline QMatrix diag(std::initializer_list<int> v) {
    std::vector<Rational> d;
    for (int x : v) d.emplace_back(x);
    return QMatrix::diagonal(d);
}

inline QSubspace span_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    return QSubspace::span(QMatrix(rows));
}

} // namespace cqtest

#endif
