#include "cq/artin.hpp"
#include "cq/compat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cq {

std::string Diagnostics::message() const {
    std::ostringstream os;
    if (ok()) return "ok";
    if (!commuting && noncommuting)
        os << "operators " << noncommuting->first << " and " << noncommuting->second << " do not commute; ";
    if (!nilpotent) {
        os << "not nilpotent:";
        for (auto k : not_nilpotent) os << " " << k;
        os << "; ";
    }
    if (!cyclic) os << "vector generates a subspace of dimension " << cyclic_span << "; ";
    std::string s = os.str();
    return s.substr(0, s.size() - 2);
}

Diagnostics validate(const std::vector<QMatrix>& ops, const std::optional<QVector>& v) {
    Diagnostics d;
    const std::size_t n = ops.empty() ? (v ? v->size() : 0) : ops[0].rows();
    for (const auto& x : ops)
        if (x.rows() != n || x.cols() != n) throw std::invalid_argument("validate: operators of different sizes");
    for (std::size_t i = 0; i < ops.size() && d.commuting; ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (ops[i] * ops[j] != ops[j] * ops[i]) {
                d.commuting = false;
                d.noncommuting = std::make_pair(i, j);
                break;
            }
    for (std::size_t k = 0; k < ops.size(); ++k) {
        QMatrix p = QMatrix::identity(n);
        for (std::size_t e = 0; e < n; ++e) p = p * ops[k];
        if (!p.is_zero_matrix()) {
            d.nilpotent = false;
            d.not_nilpotent.push_back(k);
        }
    }
    if (v) {
        if (v->size() != n) throw std::invalid_argument("validate: cyclic vector has wrong length");
        QSubspace span = QSubspace::span(QMatrix::from_rows({*v}, n));
        if (span.dim() == 0) span = QSubspace::zero(n);
        QMatrix frontier = span.basis();
        while (frontier.rows() > 0) {
            QMatrix fresh(0, n);
            for (std::size_t r = 0; r < frontier.rows(); ++r)
                for (const auto& x : ops) {
                    QVector w = x * frontier.row(r);
                    if (!span.contains(w)) {
                        fresh.append_row(w);
                        span = span + QSubspace::span(QMatrix::from_rows({w}, n));
                    }
                }
            frontier = fresh;
        }
        d.cyclic_span = span.dim();
        d.cyclic = span.dim() == n;
    }
    return d;
}

QVector apply_monomial(const std::vector<QMatrix>& ops, const MPoly::Exps& beta, QVector w) {
    for (std::size_t k = 0; k < beta.size(); ++k) {
        if (beta[k] && k >= ops.size()) throw std::invalid_argument("apply_monomial: variable out of range");
        for (unsigned e = 0; e < beta[k]; ++e) w = ops[k] * w;
    }
    return w;
}

QVector apply_poly(const std::vector<QMatrix>& ops, const MPoly& p, const QVector& w) {
    QVector out(w.size(), Rational(0));
    for (const auto& [beta, c] : p.terms()) {
        QVector t = apply_monomial(ops, beta, w);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += c * t[i];
    }
    return out;
}

namespace {

void require_local(const ArtinModule& m) {
    Diagnostics d = validate(m.ops);
    if (!d.commuting || !d.nilpotent) throw std::domain_error("module is not local at the origin: " + d.message());
}

QSubspace image_sum(const std::vector<QMatrix>& ops, const QSubspace& s) {
    QSubspace out = QSubspace::zero(s.ambient());
    for (const auto& x : ops) out = out + s.image_under(x);
    return out;
}

// P[i] for all i >= 0 (zero beyond the list), L[j] likewise (M beyond).
struct Filtrations {
    std::vector<QSubspace> p, l;
    std::size_t n = 0;
    QSubspace pw(long i) const {
        if (i <= 0) return p[0];
        if (static_cast<std::size_t>(i) < p.size()) return p[static_cast<std::size_t>(i)];
        return QSubspace::zero(n);
    }
    QSubspace ann(long j) const {
        if (j <= 0) return QSubspace::zero(n);
        if (static_cast<std::size_t>(j) < l.size()) return l[static_cast<std::size_t>(j)];
        return QSubspace::full(n);
    }
};

Filtrations filtrations(const ArtinModule& m) {
    Filtrations f;
    f.n = m.dim();
    f.p = power_filtration(m);
    f.l = loewy_filtration(m);
    return f;
}

SymDecomp decompose(const ArtinModule& m) {
    Filtrations f = filtrations(m);
    const std::size_t n = m.dim();
    SymDecomp out;
    out.s = socle_degree(m);
    const long s = static_cast<long>(out.s);
    for (long d = 0; d <= s; ++d) {
        std::vector<std::size_t> row;
        std::vector<QMatrix> bases;
        for (long i = 0; i <= s; ++i) {
            QSubspace num = f.pw(i).intersect(f.ann(s + 1 - i - d));
            QSubspace den = f.pw(i + 1).intersect(f.ann(s + 1 - i - d)) + f.pw(i).intersect(f.ann(s - i - d));
            QMatrix c = num.dim() ? num.complement_rows(den) : QMatrix(0, n);
            row.push_back(c.rows());
            bases.push_back(c);
        }
        out.delta.push_back(row);
        out.basis.push_back(bases);
    }
    while (out.delta.size() > 1) {
        const auto& last = out.delta.back();
        if (std::any_of(last.begin(), last.end(), [](std::size_t x) { return x != 0; })) break;
        out.delta.pop_back();
        out.basis.pop_back();
    }
    std::vector<std::size_t> h = hilbert_function(m);
    for (std::size_t i = 0; i <= out.s; ++i) {
        std::size_t sum = 0;
        for (const auto& row : out.delta) sum += row[i];
        if (sum != h[i]) throw std::logic_error("symmetric decomposition does not sum to the Hilbert function");
    }
    for (std::size_t d = 0; d < out.delta.size(); ++d)
        for (std::size_t i = 0; i <= out.s; ++i) {
            const long mirror = s - static_cast<long>(d) - static_cast<long>(i);
            const std::size_t other = mirror >= 0 ? out.delta[d][static_cast<std::size_t>(mirror)] : 0;
            if (out.delta[d][i] != other) throw std::logic_error("symmetric decomposition is not symmetric");
        }
    return out;
}

QMatrix monomial_matrix(const std::vector<QMatrix>& ops, const MPoly::Exps& beta, std::size_t n) {
    QMatrix m = QMatrix::identity(n);
    for (std::size_t k = 0; k < beta.size(); ++k)
        for (unsigned e = 0; e < beta[k]; ++e) m = ops[k] * m;
    return m;
}

MPoly::Exps add_exps(const MPoly::Exps& a, const MPoly::Exps& b) {
    MPoly::Exps e(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) e[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) e[i] += b[i];
    return e;
}

} // namespace

std::vector<QSubspace> power_filtration(const ArtinModule& m) {
    require_local(m);
    std::vector<QSubspace> out{QSubspace::full(m.dim())};
    while (out.back().dim() > 0) out.push_back(image_sum(m.ops, out.back()));
    return out;
}

std::vector<QSubspace> loewy_filtration(const ArtinModule& m) {
    require_local(m);
    const std::size_t n = m.dim();
    std::vector<QSubspace> out{QSubspace::zero(n)};
    while (out.back().dim() < n) {
        QMatrix ann = out.back().annihilator().basis();
        QMatrix sys(0, n);
        for (const auto& x : m.ops) {
            QMatrix r = ann * x;
            for (std::size_t i = 0; i < r.rows(); ++i) sys.append_row(r.row(i));
        }
        QMatrix k = sys.rows() ? kernel(sys) : QMatrix::identity(n);
        out.push_back(k.rows() ? QSubspace::span(k) : QSubspace::zero(n));
    }
    return out;
}

std::size_t socle_degree(const ArtinModule& m) {
    auto p = power_filtration(m);
    return p.size() >= 2 ? p.size() - 2 : 0;
}

std::vector<std::size_t> hilbert_function(const ArtinModule& m) {
    auto p = power_filtration(m);
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) h.push_back(p[i].dim() - p[i + 1].dim());
    return h;
}

std::vector<MPoly::Exps> graded_monomial_basis(const ArtinAlgebra& a) {
    auto p = power_filtration(a.module());
    std::vector<MPoly::Exps> out;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const std::size_t want = p[i].dim() - p[i + 1].dim();
        QSubspace acc = p[i + 1];
        std::size_t got = 0;
        for (const auto& g : monomials_of_degree(a.nvars(), static_cast<unsigned>(i))) {
            if (got == want) break;
            QVector w = apply_monomial(a.ops, g, a.v);
            if (acc.contains(w)) continue;
            acc = acc + QSubspace::span(QMatrix::from_rows({w}, a.dim()));
            out.push_back(g);
            ++got;
        }
        if (got != want) throw std::domain_error("graded_monomial_basis: vector is not cyclic");
    }
    return out;
}

QMatrix multiplication_operator(const ArtinAlgebra& a, const QVector& elt) {
    const std::size_t n = a.dim();
    auto mons = graded_monomial_basis(a);
    QMatrix lifts(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        QVector w = apply_monomial(a.ops, mons[k], a.v);
        for (std::size_t r = 0; r < n; ++r) lifts(r, k) = w[r];
    }
    auto c = solve(lifts, elt);
    QMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k)
        if (!is_zero((*c)[k])) out = out + (*c)[k] * monomial_matrix(a.ops, mons[k], n);
    return out;
}

OrientedQuadric orientation_to_quadric(const ArtinAlgebra& a, const QVector& alpha) {
    const std::size_t n = a.dim();
    if (alpha.size() != n) throw std::invalid_argument("orientation: functional has wrong length");
    auto mons = graded_monomial_basis(a);
    QMatrix lifts(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        QVector w = apply_monomial(a.ops, mons[k], a.v);
        for (std::size_t r = 0; r < n; ++r) lifts(r, k) = w[r];
    }
    QMatrix pm(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l) {
            pm(k, l) = dot(alpha, apply_monomial(a.ops, add_exps(mons[k], mons[l]), a.v));
            pm(l, k) = pm(k, l);
        }
    QMatrix c = inverse(lifts);
    OrientedQuadric o;
    o.phi = c.transpose() * pm * c;
    if (rank(o.phi) != n) throw std::domain_error("not an orientation: the pairing alpha(ab) is degenerate");
    o.q = inverse(o.phi);
    const BrokenQuadric bq = BrokenQuadric::unbroken(o.q);
    for (const auto& x : a.ops)
        if (!is_compatible(x, bq)) throw std::logic_error("orientation: quadric is not compatible with the action");
    return o;
}

SymDecomp symmetric_decomposition(const ArtinAlgebra& a, const QVector& alpha) {
    Diagnostics d = validate(a.ops, a.v);
    if (!d.ok()) throw std::domain_error("symmetric_decomposition: " + d.message());
    orientation_to_quadric(a, alpha);
    return decompose(a.module());
}

SymDecomp symmetric_decomposition(const ArtinModule& m, const QMatrix& form) {
    require_local(m);
    if (form.rows() != m.dim() || form.cols() != m.dim()) throw std::invalid_argument("symmetric_decomposition: form has wrong size");
    if (!form.is_symmetric() || rank(form) != m.dim()) throw std::domain_error("not self-dual: form is not symmetric of full rank");
    for (const auto& x : m.ops)
        if (x.transpose() * form != form * x) throw std::domain_error("not self-dual: form is not linear for the action");
    return decompose(m);
}

GradedAlgebra assoc_graded(const ArtinAlgebra& a) {
    Diagnostics diag = validate(a.ops, a.v);
    if (!diag.ok()) throw std::domain_error("assoc_graded: " + diag.message());
    auto p = power_filtration(a.module());
    const std::size_t n = a.dim();
    std::vector<QMatrix> comp;
    std::vector<std::size_t> start;
    GradedAlgebra g;
    std::size_t pos = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        comp.push_back(p[i].complement_rows(p[i + 1]));
        start.push_back(pos);
        for (std::size_t r = 0; r < comp.back().rows(); ++r) g.degree.push_back(i);
        pos += comp.back().rows();
    }
    for (const auto& x : a.ops) {
        QMatrix gx(n, n);
        for (std::size_t i = 0; i + 1 < comp.size(); ++i)
            for (std::size_t r = 0; r < comp[i].rows(); ++r) {
                QVector img = x * comp[i].row(r);
                QVector c = p[i + 1].quotient_coords(p[i + 2], img);
                for (std::size_t k = 0; k < c.size(); ++k) gx(start[i + 1] + k, start[i] + r) = c[k];
            }
        g.alg.ops.push_back(gx);
    }
    g.alg.v = QVector(n, Rational(0));
    if (n) g.alg.v[0] = p[0].quotient_coords(p[1], a.v)[0];
    return g;
}

MonomialGraded graded_monomial_presentation(const ArtinAlgebra& a) {
    MonomialGraded out;
    out.monomials = graded_monomial_basis(a);
    const std::size_t n = a.dim();
    auto p = power_filtration(a.module());
    out.lifts = QMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        QVector w = apply_monomial(a.ops, out.monomials[k], a.v);
        for (std::size_t r = 0; r < n; ++r) out.lifts(r, k) = w[r];
    }
    std::map<std::size_t, std::vector<std::size_t>> by_degree;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t deg = 0;
        for (auto e : out.monomials[k]) deg += e;
        out.gr.degree.push_back(deg);
        by_degree[deg].push_back(k);
    }
    // Class of w in m^i / m^{i+1} in terms of the degree-i monomial images.
    auto graded_coords = [&](std::size_t i, const QVector& w) {
        std::vector<std::size_t> idx = by_degree.count(i) ? by_degree[i] : std::vector<std::size_t>{};
        QMatrix cols(0, n);
        for (auto k : idx) cols.append_row(out.lifts.col(k));
        QMatrix next = i + 1 < p.size() ? p[i + 1].basis() : QMatrix(0, n);
        for (std::size_t r = 0; r < next.rows(); ++r) cols.append_row(next.row(r));
        QVector c(idx.size(), Rational(0));
        if (cols.rows() == 0) return std::make_pair(idx, c);
        auto x = solve(cols.transpose(), w);
        if (!x) throw std::logic_error("graded_monomial_presentation: element outside m^i");
        for (std::size_t j = 0; j < idx.size(); ++j) c[j] = (*x)[j];
        return std::make_pair(idx, c);
    };
    for (const auto& x : a.ops) {
        QMatrix gx(n, n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t deg = out.gr.degree[k];
            auto [idx, c] = graded_coords(deg + 1, x * out.lifts.col(k));
            for (std::size_t j = 0; j < idx.size(); ++j) gx(idx[j], k) = c[j];
        }
        out.gr.alg.ops.push_back(gx);
    }
    out.gr.alg.v = QVector(n, Rational(0));
    if (n) out.gr.alg.v[0] = 1;
    return out;
}

std::vector<MPoly> graded_ideal_generators(const ArtinAlgebra& graded, std::size_t max_degree) {
    const std::size_t nv = graded.nvars();
    std::vector<MPoly> gens;
    QMatrix prev(0, 0);
    std::vector<MPoly::Exps> prev_mons;
    for (std::size_t e = 0; e <= max_degree; ++e) {
        auto mons = monomials_of_degree(nv, static_cast<unsigned>(e));
        std::map<MPoly::Exps, std::size_t> index;
        for (std::size_t k = 0; k < mons.size(); ++k) index[MPoly::trimmed(mons[k])] = k;
        QMatrix images(graded.dim(), mons.size());
        for (std::size_t k = 0; k < mons.size(); ++k) {
            QVector w = apply_monomial(graded.ops, mons[k], graded.v);
            for (std::size_t r = 0; r < w.size(); ++r) images(r, k) = w[r];
        }
        QMatrix ker = kernel(images);
        // S_1 * I_{e-1} in degree-e monomial coordinates.
        QMatrix lower(0, mons.size());
        for (std::size_t r = 0; r < prev.rows(); ++r)
            for (std::size_t var = 0; var < nv; ++var) {
                QVector row(mons.size(), Rational(0));
                for (std::size_t k = 0; k < prev_mons.size(); ++k) {
                    if (is_zero(prev(r, k))) continue;
                    MPoly::Exps m = prev_mons[k];
                    m.resize(nv, 0);
                    ++m[var];
                    row[index.at(MPoly::trimmed(m))] += prev(r, k);
                }
                lower.append_row(row);
            }
        QSubspace ie = ker.rows() ? QSubspace::span(ker) : QSubspace::zero(mons.size());
        QSubspace low = lower.rows() ? QSubspace::span(lower) : QSubspace::zero(mons.size());
        QMatrix fresh = ie.complement_rows(low);
        for (std::size_t r = 0; r < fresh.rows(); ++r) {
            MPoly g;
            for (std::size_t k = 0; k < mons.size(); ++k)
                if (!is_zero(fresh(r, k))) g += MPoly::monomial(mons[k], fresh(r, k));
            gens.push_back(g);
        }
        prev = ie.dim() ? ie.basis() : QMatrix(0, mons.size());
        prev_mons = mons;
    }
    return gens;
}

Apolar apolar_algebra(const MPoly& f, std::size_t nvars) {
    if (is_zero(f)) throw std::invalid_argument("apolar_algebra: F must be nonzero");
    if (f.nvars() > nvars) throw std::invalid_argument("apolar_algebra: F uses more variables than declared");
    // Coordinates: every monomial dividing a monomial of F.
    std::map<MPoly::Exps, std::size_t> index;
    std::vector<MPoly::Exps> coords;
    for (const auto& [e, c] : f.terms()) {
        MPoly::Exps full = e;
        full.resize(nvars, 0);
        std::vector<MPoly::Exps> divs{MPoly::Exps{}};
        for (std::size_t v = 0; v < nvars; ++v) {
            std::vector<MPoly::Exps> next;
            for (const auto& d : divs)
                for (unsigned k = 0; k <= full[v]; ++k) {
                    MPoly::Exps x = d;
                    x.resize(nvars, 0);
                    x[v] = k;
                    next.push_back(x);
                }
            divs = next;
        }
        for (auto& d : divs) {
            auto t = MPoly::trimmed(d);
            if (!index.count(t)) {
                index[t] = 0;
                coords.push_back(t);
            }
        }
    }
    // Highest degree first so echelon pivots sit on leading forms.
    std::sort(coords.begin(), coords.end(), [](const auto& a, const auto& b) { return grlex_less(b, a); });
    for (std::size_t k = 0; k < coords.size(); ++k) index[coords[k]] = k;
    const std::size_t nc = coords.size();
    auto to_vec = [&](const MPoly& p) {
        QVector v(nc, Rational(0));
        for (const auto& [e, c] : p.terms()) v[index.at(e)] = c;
        return v;
    };
    // All derivatives of F.
    std::vector<MPoly> derivs{f};
    QSubspace span = QSubspace::span(QMatrix::from_rows({to_vec(f)}, nc));
    for (std::size_t head = 0; head < derivs.size(); ++head)
        for (std::size_t v = 0; v < nvars; ++v) {
            MPoly d = derivs[head].derivative(v);
            if (is_zero(d)) continue;
            QVector w = to_vec(d);
            if (span.contains(w)) continue;
            span = span + QSubspace::span(QMatrix::from_rows({w}, nc));
            derivs.push_back(d);
        }
    const QMatrix& b = span.basis();
    const std::size_t n = b.rows();
    Apolar out;
    for (std::size_t r = 0; r < n; ++r) {
        MPoly p;
        for (std::size_t k = 0; k < nc; ++k)
            if (!is_zero(b(r, k))) p += MPoly::monomial(coords[k], b(r, k));
        out.basis.push_back(p);
    }
    auto coords_of = [&](const MPoly& p) { return span.coords(to_vec(p)); };
    for (std::size_t v = 0; v < nvars; ++v) {
        QMatrix x(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            QVector c = coords_of(out.basis[j].derivative(v));
            for (std::size_t i = 0; i < n; ++i) x(i, j) = c[i];
        }
        out.alg.ops.push_back(x);
    }
    out.alg.v = coords_of(f);
    out.alpha = QVector(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) out.alpha[j] = out.basis[j].constant_term();
    return out;
}

} // namespace cq
