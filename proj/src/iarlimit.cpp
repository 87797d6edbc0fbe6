#include "cq/iarlimit.hpp"

#include <stdexcept>

namespace cq {

namespace {

unsigned degree_of(const MPoly::Exps& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

MPoly::Exps add_exps(const MPoly::Exps& a, const MPoly::Exps& b) {
    MPoly::Exps e(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) e[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) e[i] += b[i];
    return e;
}

void require_oriented(const ArtinAlgebra& a, const QVector& alpha) {
    Diagnostics d = validate(a.ops, a.v);
    if (!d.ok()) throw std::domain_error("not a local cyclic algebra: " + d.message());
    orientation_to_quadric(a, alpha);
}

QPolyMatrix apply_family_monomial(const std::vector<QPolyMatrix>& ops, const MPoly::Exps& e, QPolyMatrix w) {
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] && k >= ops.size()) throw std::invalid_argument("family monomial uses a missing variable");
        for (unsigned j = 0; j < e[k]; ++j) w = ops[k] * w;
    }
    return w;
}

} // namespace

QPolyMatrix torus_pairing_family(const ArtinAlgebra& a, const QVector& alpha) {
    require_oriented(a, alpha);
    const auto mons = graded_monomial_basis(a);
    const std::size_t n = a.dim();
    const unsigned s = static_cast<unsigned>(socle_degree(a.module()));
    QPolyMatrix phi(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            const unsigned dk = degree_of(mons[k]) + degree_of(mons[l]);
            if (dk > s) continue;
            Rational c = dot(alpha, apply_monomial(a.ops, add_exps(mons[k], mons[l]), a.v));
            phi(k, l) = QPoly::monomial(c, s - dk);
            phi(l, k) = phi(k, l);
        }
    return phi;
}

BrokenQuadric torus_limit_oracle(const ArtinAlgebra& a, const QVector& alpha, LimitStrategy strategy) {
    return dualize(limit_minor(torus_pairing_family(a, alpha), strategy));
}

TorusLimitResult torus_limit(const ArtinAlgebra& a, const QVector& alpha) {
    require_oriented(a, alpha);
    TorusLimitResult r;
    r.gr = graded_monomial_presentation(a);
    r.decomp = symmetric_decomposition(a, alpha);
    r.s = r.decomp.s;
    const std::size_t n = a.dim();
    const long s = static_cast<long>(r.s);
    const auto p = power_filtration(a.module());
    const auto l = loewy_filtration(a.module());
    auto power = [&](long i) { return i < static_cast<long>(p.size()) ? p[static_cast<std::size_t>(i)] : QSubspace::zero(n); };
    auto ann = [&](long j) {
        if (j <= 0) return QSubspace::zero(n);
        return j < static_cast<long>(l.size()) ? l[static_cast<std::size_t>(j)] : QSubspace::full(n);
    };

    // Columns of the monomial lifts, grouped by degree.
    std::vector<std::vector<std::size_t>> by_degree(r.s + 1);
    for (std::size_t k = 0; k < n; ++k) by_degree[r.gr.gr.degree[k]].push_back(k);
    // gr coordinates of an element of m^i, read modulo m^{i+1}.
    auto gr_class = [&](long i, const QVector& w) {
        const auto& idx = by_degree[static_cast<std::size_t>(i)];
        QMatrix cols(0, n);
        for (auto k : idx) cols.append_row(r.gr.lifts.col(k));
        const QSubspace next = power(i + 1);
        for (std::size_t j = 0; j < next.dim(); ++j) cols.append_row(next.basis().row(j));
        auto x = solve(cols.transpose(), w);
        if (!x) throw std::logic_error("torus_limit: element outside m^i");
        QVector g(n, Rational(0));
        for (std::size_t j = 0; j < idx.size(); ++j) g[idx[j]] = (*x)[j];
        return g;
    };

    // I_d = sum over i of the classes of m^i and (0 : m^{s+1-i-d}) in degree i,
    // remembering a lift in A for each class.
    struct Piece {
        QMatrix classes;  // rows in gr coordinates
        QMatrix lifts;    // matching rows in A
    };
    std::vector<QSubspace> ideals;
    std::vector<std::vector<Piece>> pieces;
    for (long d = 0; d <= s + 1; ++d) {
        QMatrix rows(0, n);
        std::vector<Piece> per_degree;
        for (long i = 0; i <= s; ++i) {
            const QSubspace num = power(i).intersect(ann(s + 1 - i - d));
            Piece pc{QMatrix(0, n), QMatrix(0, n)};
            for (std::size_t j = 0; j < num.dim(); ++j) {
                const QVector w = num.basis().row(j);
                pc.classes.append_row(gr_class(i, w));
                pc.lifts.append_row(w);
            }
            for (std::size_t j = 0; j < pc.classes.rows(); ++j) rows.append_row(pc.classes.row(j));
            per_degree.push_back(pc);
        }
        ideals.push_back(rows.rows() ? QSubspace::span(rows) : QSubspace::zero(n));
        pieces.push_back(per_degree);
    }
    if (ideals.front() != QSubspace::full(n) || ideals.back().dim() != 0)
        throw std::logic_error("torus_limit: filtration does not run from gr(A) to 0");
    r.ideals = ideals;

    // Lift of a homogeneous class c in degree i, taken inside m^i and (0 : m^{s+1-i-d}).
    auto lift = [&](long d, long i, const QVector& c) {
        const Piece& pc = pieces[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)];
        auto x = solve(pc.classes.transpose(), c);
        if (!x) throw std::logic_error("torus_limit: class has no lift");
        QVector w(n, Rational(0));
        for (std::size_t j = 0; j < pc.lifts.rows(); ++j)
            for (std::size_t m = 0; m < n; ++m) w[m] += (*x)[j] * pc.lifts(j, m);
        return w;
    };
    auto degree_of_row = [&](const QVector& c) {
        long deg = -1;
        for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(c[k])) {
                const long dk = static_cast<long>(r.gr.gr.degree[k]);
                if (deg >= 0 && dk != deg) throw std::logic_error("torus_limit: inhomogeneous complement row");
                deg = dk;
            }
        return deg;
    };

    std::vector<QSubspace> tail;
    std::vector<QMatrix> forms;
    for (long d = 0; d <= s; ++d) {
        const QSubspace& hi = ideals[static_cast<std::size_t>(d)];
        const QSubspace& lo = ideals[static_cast<std::size_t>(d) + 1];
        const QMatrix c = hi.complement_rows(lo);
        QMatrix g(c.rows(), c.rows());
        std::vector<long> deg(c.rows());
        std::vector<QVector> lifted(c.rows());
        for (std::size_t j = 0; j < c.rows(); ++j) {
            deg[j] = degree_of_row(c.row(j));
            lifted[j] = lift(d, deg[j], c.row(j));
        }
        for (std::size_t j = 0; j < c.rows(); ++j)
            for (std::size_t k = j; k < c.rows(); ++k) {
                if (deg[j] + deg[k] != s - d) continue;
                QMatrix mul = multiplication_operator(a, lifted[j]);
                g(j, k) = dot(alpha, mul * lifted[k]);
                g(k, j) = g(j, k);
            }
        if (rank(g) != c.rows()) throw std::logic_error("torus_limit: degenerate form on Q(" + std::to_string(d) + ")");
        r.phi.push_back(g);
        if (c.rows() == 0) continue;
        if (!forms.empty()) tail.push_back(hi);
        forms.push_back(g);
    }
    r.phi_limit = BrokenQuadric::make(n, tail, forms);
    r.q_limit = dualize(r.phi_limit);
    return r;
}

BBLimit bb_limit_ideal(const ArtinAlgebra& a) {
    Diagnostics d = validate(a.ops, a.v);
    if (!d.ok()) throw std::domain_error("not a local cyclic algebra: " + d.message());
    BBLimit b;
    b.gr = graded_monomial_presentation(a);
    b.generators = graded_ideal_generators(b.gr.gr.alg, socle_degree(a.module()) + 1);
    b.family = "ideal of the family over k[u] is the homogenization of I by u; the fiber at u = 0 is gr(A)";
    return b;
}

QPolyMatrix pairing_family(const AlgebraFamily& f, const QVector& alpha) {
    const std::size_t n = f.basis.size();
    if (f.v.size() != n || alpha.size() != n) throw std::invalid_argument("pairing_family: size mismatch");
    for (const auto& x : f.ops)
        if (x.rows() != n || x.cols() != n) throw std::invalid_argument("pairing_family: operator size mismatch");
    QPolyMatrix v0(n, 1);
    for (std::size_t i = 0; i < n; ++i) v0(i, 0) = QPoly(f.v[i]);
    QPolyMatrix phi(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            QPolyMatrix w = apply_family_monomial(f.ops, add_exps(f.basis[k], f.basis[l]), v0);
            QPoly s;
            for (std::size_t i = 0; i < n; ++i) s += QPoly(alpha[i]) * w(i, 0);
            phi(k, l) = s;
            phi(l, k) = s;
        }
    return phi;
}

OrientedLimit oriented_family_limit(const QPolyMatrix& phi_t) {
    OrientedLimit o;
    o.phi = limit_minor(phi_t);
    o.q = dualize(o.phi);
    return o;
}

} // namespace cq
