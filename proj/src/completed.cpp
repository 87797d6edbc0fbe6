#include "cq/completed.hpp"

#include <algorithm>
#include <map>

namespace cq {

namespace {

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() == 0) return b;
    QMatrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

std::size_t combo_index(const std::vector<std::vector<std::size_t>>& combos, const std::vector<std::size_t>& c) {
    auto it = std::lower_bound(combos.begin(), combos.end(), c);
    if (it == combos.end() || *it != c) throw std::logic_error("combination not found");
    return static_cast<std::size_t>(it - combos.begin());
}

// Coordinates T with rows(target) = T * rows(w) modulo the subspace g.
QMatrix coords_modulo(const QMatrix& target, const QMatrix& w, const QSubspace& g) {
    QMatrix sys = vstack(w, g.basis());
    QMatrix sysT = sys.transpose();
    QMatrix t(target.rows(), w.rows());
    for (std::size_t a = 0; a < target.rows(); ++a) {
        auto x = solve(sysT, target.row(a));
        if (!x) throw std::invalid_argument("complement rows do not span the subquotient");
        for (std::size_t b = 0; b < w.rows(); ++b) t(a, b) = (*x)[b];
    }
    return t;
}

} // namespace

BrokenQuadric BrokenQuadric::make(std::size_t d, std::vector<QSubspace> flag_tail, std::vector<QMatrix> forms) {
    if (forms.size() != flag_tail.size() + 1) throw std::invalid_argument("BrokenQuadric: need one form per flag level");
    BrokenQuadric bq;
    bq.m_d = d;
    bq.m_flag.push_back(QSubspace::full(d));
    for (auto& f : flag_tail) bq.m_flag.push_back(std::move(f));
    bq.m_flag.push_back(QSubspace::zero(d));
    for (std::size_t i = 0; i + 1 < bq.m_flag.size(); ++i) {
        const auto& a = bq.m_flag[i];
        const auto& b = bq.m_flag[i + 1];
        if (a.ambient() != d || b.ambient() != d) throw std::invalid_argument("BrokenQuadric: flag ambient mismatch");
        if (!a.contains(b) || a.dim() == b.dim()) throw std::invalid_argument("BrokenQuadric: flag not strictly decreasing");
    }
    for (std::size_t i = 0; i < forms.size(); ++i) {
        const std::size_t r = bq.m_flag[i].dim() - bq.m_flag[i + 1].dim();
        const QMatrix& s = forms[i];
        if (s.rows() != r || s.cols() != r) throw std::invalid_argument("BrokenQuadric: form shape does not match subquotient");
        if (!s.is_symmetric()) throw std::invalid_argument("BrokenQuadric: form not symmetric");
        if (rank(s) != r) throw std::invalid_argument("BrokenQuadric: form not of full rank on its subquotient");
        bq.m_forms.push_back(primitive(s));
    }
    return bq;
}

BrokenQuadric BrokenQuadric::from_complements(std::size_t d, std::vector<QSubspace> flag_tail,
                                              const std::vector<QMatrix>& complements,
                                              const std::vector<QMatrix>& grams) {
    if (complements.size() != flag_tail.size() + 1 || grams.size() != complements.size())
        throw std::invalid_argument("BrokenQuadric: need one complement and form per level");
    std::vector<QSubspace> flag;
    flag.push_back(QSubspace::full(d));
    for (const auto& f : flag_tail) flag.push_back(f);
    flag.push_back(QSubspace::zero(d));
    std::vector<QMatrix> forms;
    for (std::size_t i = 0; i < complements.size(); ++i) {
        const QMatrix& w = complements[i];
        for (std::size_t r = 0; r < w.rows(); ++r)
            if (!flag[i].contains(w.row(r))) throw std::invalid_argument("BrokenQuadric: complement row outside its flag piece");
        QMatrix c = flag[i].complement_rows(flag[i + 1]);
        if (w.rows() != c.rows()) throw std::invalid_argument("BrokenQuadric: complement has wrong size");
        QMatrix t = coords_modulo(c, w, flag[i + 1]);
        forms.push_back(t * grams[i] * t.transpose());
    }
    return make(d, std::move(flag_tail), std::move(forms));
}

BrokenQuadric BrokenQuadric::unbroken(const QMatrix& q) {
    if (!q.is_square()) throw std::invalid_argument("BrokenQuadric: non-square form");
    return make(q.rows(), {}, {q});
}

std::vector<std::size_t> BrokenQuadric::ranks() const {
    std::vector<std::size_t> r;
    for (const auto& s : m_forms) r.push_back(s.rows());
    return r;
}

QMatrix BrokenQuadric::adapted_basis() const {
    QMatrix b(0, m_d);
    for (std::size_t i = 0; i < levels(); ++i) b = vstack(b, complement(i));
    return b;
}

QMatrix BrokenQuadric::lift(std::size_t i) const {
    QMatrix b = adapted_basis();
    QMatrix binv = inverse(b);
    QMatrix m(m_d, m_d);
    std::size_t off = 0;
    for (std::size_t l = 0; l < i; ++l) off += m_forms[l].rows();
    const QMatrix& s = m_forms.at(i);
    for (std::size_t a = 0; a < s.rows(); ++a)
        for (std::size_t c = 0; c < s.cols(); ++c) m(off + a, off + c) = s(a, c);
    return binv * m * binv.transpose();
}

ExteriorTuple make_exterior_tuple(std::size_t d, std::vector<QMatrix> factors) {
    if (factors.size() != d) throw std::invalid_argument("ExteriorTuple: need d factors");
    ExteriorTuple t;
    t.d = d;
    for (std::size_t i = 1; i <= d; ++i) {
        QMatrix& p = factors[i - 1];
        const std::size_t n = binomial(d, i);
        if (p.rows() != n || p.cols() != n) throw std::invalid_argument("ExteriorTuple: factor " + std::to_string(i) + " has wrong size");
        if (!p.is_symmetric()) throw std::invalid_argument("ExteriorTuple: factor " + std::to_string(i) + " not symmetric");
        if (p.is_zero_matrix()) throw std::invalid_argument("ExteriorTuple: factor " + std::to_string(i) + " is zero");
        t.factors.push_back(primitive(p));
    }
    return t;
}

ExteriorTuple to_exterior(const BrokenQuadric& bq) {
    const std::size_t d = bq.dim();
    const QMatrix binv = inverse(bq.adapted_basis());
    std::vector<QMatrix> factors;
    std::size_t level = 0, before = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        while (i > before + bq.form(level).rows()) before += bq.form(level++).rows();
        const QMatrix& s = bq.form(level);
        const std::size_t m = i - before;
        const auto rows = combinations(d, i);
        const auto inner = combinations(s.rows(), m);
        // Lowest-order block of Lambda^i of the block-diagonal model, read in
        // the adapted basis; the determinants of earlier levels are a common
        // scalar and are dropped.
        QMatrix l(inner.size(), inner.size());
        for (std::size_t a = 0; a < inner.size(); ++a)
            for (std::size_t b = a; b < inner.size(); ++b) {
                l(a, b) = det(s.submatrix(inner[a], inner[b]));
                l(b, a) = l(a, b);
            }
        QMatrix tcols(rows.size(), inner.size());
        for (std::size_t b = 0; b < inner.size(); ++b) {
            std::vector<std::size_t> cols;
            for (std::size_t k = 0; k < before; ++k) cols.push_back(k);
            for (auto k : inner[b]) cols.push_back(before + k);
            for (std::size_t a = 0; a < rows.size(); ++a) tcols(a, b) = det(binv.submatrix(rows[a], cols));
        }
        factors.push_back(tcols * l * tcols.transpose());
    }
    return make_exterior_tuple(d, std::move(factors));
}

BrokenQuadric from_exterior(const ExteriorTuple& t) {
    const std::size_t d = t.d;
    if (t.factors.size() != d) throw ReconstructionError(t.factors.size() + 1, "tuple has the wrong number of factors");
    for (std::size_t i = 1; i <= d; ++i) {
        const std::size_t n = binomial(d, i);
        if (t.factors[i - 1].rows() != n || t.factors[i - 1].cols() != n)
            throw ReconstructionError(i, "factor has the wrong size");
    }
    std::vector<QSubspace> tail;
    std::vector<QMatrix> forms;
    QMatrix acc(0, d);
    QSubspace cur = QSubspace::full(d);
    std::size_t done = 0;
    while (done < d) {
        const std::size_t i = done + 1;
        const QMatrix& p = t.factors[i - 1];
        const std::size_t m = cur.dim();
        // Evaluate p_i on wedge(acc, b_a) x wedge(acc, b_b) for the echelon basis b of cur.
        std::vector<QVector> w(m);
        for (std::size_t a = 0; a < m; ++a) {
            QMatrix rows = acc;
            rows.append_row(cur.basis().row(a));
            w[a] = plucker(rows);
        }
        QMatrix g(m, m);
        for (std::size_t b = 0; b < m; ++b) {
            QVector pw = p * w[b];
            for (std::size_t a = 0; a <= b; ++a) {
                g(a, b) = dot(w[a], pw);
                g(b, a) = g(a, b);
            }
        }
        if (g.is_zero_matrix()) throw ReconstructionError(i, "vanishes on the flag piece recovered so far");
        QMatrix rad = kernel(g);
        QSubspace next = rad.rows() ? QSubspace::span(rad * cur.basis()) : QSubspace::zero(d);
        auto idx = cur.complement_indices(next);
        forms.push_back(g.submatrix(idx, idx));
        acc = vstack(acc, cur.basis().rows_of(idx));
        done += idx.size();
        cur = next;
        if (cur.dim() > 0) tail.push_back(cur);
    }
    BrokenQuadric bq = BrokenQuadric::make(d, std::move(tail), std::move(forms));
    ExteriorTuple back = to_exterior(bq);
    for (std::size_t i = 0; i < d; ++i)
        if (back.factors[i] != primitive(t.factors[i]))
            throw ReconstructionError(i + 1, "not of the form det q_0 ^ ... ^ Lambda^j q_next");
    return bq;
}

namespace {

QPolyMatrix scalar_times(const QMatrix& a, const QPolyMatrix& b) {
    QPolyMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            const QPoly c(a(i, k));
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += c * b(k, j);
        }
    return out;
}

QPolyMatrix times_scalar_transpose(const QPolyMatrix& a, const QMatrix& b) {
    // a * b^T
    QPolyMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j) {
            QPoly s;
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!is_zero(b(j, k))) s += a(i, k) * QPoly(b(j, k));
            out(i, j) = s;
        }
    return out;
}

QPolyMatrix adjugate(const QPolyMatrix& a) {
    const std::size_t n = a.rows();
    QPolyMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = QPoly(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> r, c;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i) r.push_back(k);
                if (k != j) c.push_back(k);
            }
            QPoly m = det(a.submatrix(r, c));
            adj(j, i) = ((i + j) % 2) ? -m : m;
        }
    return adj;
}

void require_symmetric_nonsingular(const QPolyMatrix& q) {
    if (!q.is_square()) throw std::invalid_argument("limit: family is not square");
    if (!q.is_symmetric()) throw std::invalid_argument("limit: family is not symmetric");
    if (q.rows() == 0) throw std::invalid_argument("limit: empty family");
    if (is_zero(det(q))) throw std::domain_error("limit: family is identically singular (det = 0)");
}

BrokenQuadric limit_full(const QPolyMatrix& q) {
    const std::size_t d = q.rows();
    std::vector<QMatrix> factors;
    for (std::size_t i = 1; i <= d; ++i) factors.push_back(lowest_order(wedge_power(q, i)).second);
    return from_exterior(make_exterior_tuple(d, std::move(factors)));
}

BrokenQuadric limit_probe(const QPolyMatrix& q) {
    const std::size_t d = q.rows();
    std::vector<QSubspace> tail;
    std::vector<QMatrix> forms;
    QMatrix acc(0, d);
    QSubspace cur = QSubspace::full(d);
    while (true) {
        const QMatrix& b = cur.basis();
        const std::size_t m = cur.dim();
        // G(t)_{ab} = det of the Gram matrix of q(t) on (acc, b_a) x (acc, b_b),
        // expanded along the last row and column.
        QPolyMatrix qb = scalar_times(b, q);               // m x d
        QPolyMatrix bb = times_scalar_transpose(qb, b);    // m x m
        QPolyMatrix g(m, m);
        if (acc.rows() == 0) {
            g = bb;
        } else {
            QPolyMatrix qa = scalar_times(acc, q);
            QPolyMatrix aa = times_scalar_transpose(qa, acc);
            QPolyMatrix ab = times_scalar_transpose(qa, b);  // R x m
            QPoly da = det(aa);
            QPolyMatrix adj = adjugate(aa);
            QPolyMatrix adjab = adj * ab;
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = x; y < m; ++y) {
                    QPoly s = da * bb(x, y);
                    for (std::size_t k = 0; k < acc.rows(); ++k) s -= ab(k, x) * adjab(k, y);
                    g(x, y) = s;
                    g(y, x) = s;
                }
        }
        QMatrix g0 = lowest_order(g).second;
        QMatrix rad = kernel(g0);
        QSubspace next = rad.rows() ? QSubspace::span(rad * b) : QSubspace::zero(d);
        auto idx = cur.complement_indices(next);
        forms.push_back(g0.submatrix(idx, idx));
        acc = vstack(acc, b.rows_of(idx));
        cur = next;
        if (cur.dim() == 0) break;
        tail.push_back(cur);
    }
    return BrokenQuadric::make(d, std::move(tail), std::move(forms));
}

} // namespace

BrokenQuadric limit_minor(const QPolyMatrix& q_t, LimitStrategy strategy) {
    require_symmetric_nonsingular(q_t);
    if (strategy == LimitStrategy::Auto) strategy = q_t.rows() <= 7 ? LimitStrategy::Full : LimitStrategy::Probe;
    return strategy == LimitStrategy::Full ? limit_full(q_t) : limit_probe(q_t);
}

namespace {

using Series = std::vector<Rational>;

int series_val(const Series& s) {
    for (std::size_t k = 0; k < s.size(); ++k)
        if (!is_zero(s[k])) return static_cast<int>(k);
    return -1;
}

// a / b where b has valuation v and a has valuation >= v; result mod t^n.
Series series_div(const Series& a, const Series& b, std::size_t v, std::size_t n) {
    Series out(n, Rational(0));
    const Rational inv = Rational(1) / b[v];
    for (std::size_t k = 0; k < n; ++k) {
        Rational s = (k + v < a.size()) ? a[k + v] : Rational(0);
        for (std::size_t j = 1; j <= k && j + v < b.size(); ++j) s -= b[j + v] * out[k - j];
        out[k] = s * inv;
    }
    return out;
}

} // namespace

BrokenQuadric limit_dvr(const QPolyMatrix& q_t, std::optional<std::size_t> max_order) {
    require_symmetric_nonsingular(q_t);
    const std::size_t d = q_t.rows();
    const std::size_t n_trunc = static_cast<std::size_t>(det(q_t).valuation()) + 1;
    if (max_order && n_trunc > *max_order)
        throw DvrError(DvrError::Kind::TruncationCap,
                       "limit_dvr: truncation order " + std::to_string(n_trunc) + " exceeds cap " + std::to_string(*max_order));
    std::vector<std::vector<Series>> a(d, std::vector<Series>(d, Series(n_trunc, Rational(0))));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < n_trunc; ++k) a[i][j][k] = q_t(i, j).coeff(k);
    // Constant term of the congruence transform P (P^T q P diagonal).
    QMatrix p0 = QMatrix::identity(d);
    std::vector<int> val(d);
    std::vector<Rational> unit(d);
    auto swap_index = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        std::swap(a[x], a[y]);
        for (auto& row : a) std::swap(row[x], row[y]);
        p0.swap_cols(x, y);
    };
    for (std::size_t k = 0; k < d; ++k) {
        int vmin = -1;
        for (std::size_t i = k; i < d; ++i)
            for (std::size_t j = k; j < d; ++j) {
                int v = series_val(a[i][j]);
                if (v >= 0 && (vmin < 0 || v < vmin)) vmin = v;
            }
        if (vmin < 0) throw std::logic_error("limit_dvr: block vanishes modulo the truncation order");
        std::size_t piv = d;
        for (std::size_t i = k; i < d && piv == d; ++i)
            if (series_val(a[i][i]) == vmin) piv = i;
        if (piv == d) {
            std::size_t r = d, c = d;
            for (std::size_t i = k; i < d && r == d; ++i)
                for (std::size_t j = i + 1; j < d; ++j)
                    if (series_val(a[i][j]) == vmin) {
                        r = i;
                        c = j;
                        break;
                    }
            // e_r <- e_r + e_c; the new diagonal entry has valuation vmin since 2 is a unit.
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t t = 0; t < n_trunc; ++t) a[r][j][t] += a[c][j][t];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t t = 0; t < n_trunc; ++t) a[i][r][t] += a[i][c][t];
            for (std::size_t i = 0; i < d; ++i) p0(i, r) += p0(i, c);
            if (series_val(a[r][r]) != vmin)
                throw DvrError(DvrError::Kind::ExtensionRequired, "limit_dvr: could not create a pivot over the base field");
            piv = r;
        }
        swap_index(k, piv);
        const std::size_t v = static_cast<std::size_t>(vmin);
        const Series pk = a[k][k];
        val[k] = vmin;
        unit[k] = pk[v];
        for (std::size_t i = k + 1; i < d; ++i) {
            if (series_val(a[i][k]) < 0) continue;
            Series c = series_div(a[i][k], pk, v, n_trunc - v);
            for (std::size_t j = k + 1; j < d; ++j) {
                // a[i][j] -= c * a[k][j]
                const Series& akj = a[k][j];
                Series& aij = a[i][j];
                for (std::size_t s = 0; s < c.size(); ++s) {
                    if (is_zero(c[s])) continue;
                    for (std::size_t t = v; t + s < n_trunc; ++t)
                        if (!is_zero(akj[t])) aij[t + s] -= c[s] * akj[t];
                }
            }
            for (std::size_t r = 0; r < d; ++r) p0(r, i) -= c[0] * p0(r, k);
        }
        for (std::size_t i = k + 1; i < d; ++i) {
            std::fill(a[i][k].begin(), a[i][k].end(), Rational(0));
            std::fill(a[k][i].begin(), a[k][i].end(), Rational(0));
        }
        // Keep the trailing block symmetric (the update above touched only i > k rows).
    }
    // q = sum_k u_k t^{v_k} w_k w_k^T with w_k the columns of P^{-T}.
    QMatrix w = inverse(p0).transpose();
    std::vector<int> classes(val.begin(), val.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<QSubspace> flag{QSubspace::full(d)};
    QMatrix spanned(0, d);
    for (int c : classes) {
        for (std::size_t k = 0; k < d; ++k)
            if (val[k] == c) spanned.append_row(w.col(k));
        flag.push_back(QSubspace::span(spanned).annihilator());
    }
    std::vector<QMatrix> forms;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        QMatrix comp = flag[j].complement_rows(flag[j + 1]);
        QMatrix s(comp.rows(), comp.rows());
        for (std::size_t k = 0; k < d; ++k) {
            if (val[k] != classes[j]) continue;
            QVector wk = w.col(k);
            QVector pr(comp.rows());
            for (std::size_t a2 = 0; a2 < comp.rows(); ++a2) pr[a2] = dot(comp.row(a2), wk);
            for (std::size_t a2 = 0; a2 < comp.rows(); ++a2)
                for (std::size_t b2 = 0; b2 < comp.rows(); ++b2) s(a2, b2) += unit[k] * pr[a2] * pr[b2];
        }
        forms.push_back(s);
    }
    std::vector<QSubspace> tail(flag.begin() + 1, flag.end() - 1);
    return BrokenQuadric::make(d, std::move(tail), std::move(forms));
}

BrokenQuadric dualize(const BrokenQuadric& bq) {
    const std::size_t d = bq.dim();
    const std::size_t lv = bq.levels();
    // G_j = ann(F_{lv - j}), j = 0..lv.
    std::vector<QSubspace> g;
    for (std::size_t j = 0; j <= lv; ++j) g.push_back(bq.flag(lv - j).annihilator());
    std::vector<QMatrix> forms;
    for (std::size_t j = 0; j < lv; ++j) {
        const std::size_t orig = lv - 1 - j;
        QMatrix c = bq.complement(orig);
        QMatrix dj = g[j].complement_rows(g[j + 1]);
        QMatrix pair = dj * c.transpose();
        forms.push_back(pair * inverse(bq.form(orig)) * pair.transpose());
    }
    std::vector<QSubspace> tail(g.begin() + 1, g.end() - 1);
    return BrokenQuadric::make(d, std::move(tail), std::move(forms));
}

QMatrix unipotent_from(const QMatrix& x) {
    const std::size_t d = x.rows();
    QMatrix u = QMatrix::identity(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) u(i, j) = x(i, j);
    return u;
}

namespace {

// Diagonal of Lambda^i D / (y_1^{i-1} ... y_{i-1}) at the subset J (0-based).
Rational tyrrell_weight(const QVector& y, const std::vector<std::size_t>& j_set) {
    const std::size_t i = j_set.size();
    Rational w(1);
    for (std::size_t l = 0; l < y.size(); ++l) {
        std::size_t above = 0;
        for (auto j : j_set)
            if (j > l) ++above;
        const std::size_t base = i > l + 1 ? i - (l + 1) : 0;
        for (std::size_t e = base; e < above; ++e) w *= y[l];
    }
    return w;
}

QMatrix tyrrell_factor(const QVector& y, const QMatrix& u, std::size_t i) {
    const std::size_t d = u.rows();
    QMatrix lu = compound(u, i);
    const auto js = combinations(d, i);
    std::vector<Rational> diag;
    for (const auto& j : js) diag.push_back(tyrrell_weight(y, j));
    return lu.transpose() * QMatrix::diagonal(diag) * lu;
}

} // namespace

ExteriorTuple tyrrell_point(const QVector& y, const QMatrix& x) {
    const std::size_t d = x.rows();
    if (x.cols() != d) throw std::invalid_argument("tyrrell_point: x must be square");
    if (y.size() + 1 != d) throw std::invalid_argument("tyrrell_point: need d-1 values y");
    QMatrix u = unipotent_from(x);
    std::vector<QMatrix> f;
    for (std::size_t i = 1; i <= d; ++i) f.push_back(tyrrell_factor(y, u, i));
    return make_exterior_tuple(d, std::move(f));
}

ExteriorTuple change_basis(const ExteriorTuple& t, const QMatrix& basis) {
    QMatrix einv = inverse(basis);
    std::vector<QMatrix> f;
    for (std::size_t i = 1; i <= t.d; ++i) {
        QMatrix c = compound(einv, i);
        f.push_back(c * t.factors[i - 1] * c.transpose());
    }
    return make_exterior_tuple(t.d, std::move(f));
}

BrokenQuadric change_basis(const BrokenQuadric& bq, const QMatrix& basis) {
    if (rank(basis) != bq.dim()) throw std::invalid_argument("change_basis: basis is not invertible");
    std::vector<QSubspace> tail;
    for (std::size_t i = 1; i < bq.levels(); ++i) tail.push_back(QSubspace::span(bq.flag(i).basis() * basis));
    std::vector<QMatrix> comps, grams;
    for (std::size_t i = 0; i < bq.levels(); ++i) {
        comps.push_back(bq.complement(i) * basis);
        grams.push_back(bq.form(i));
    }
    return BrokenQuadric::from_complements(bq.dim(), std::move(tail), comps, grams);
}

bool tyrrell_membership(const ExteriorTuple& t) {
    for (const auto& p : t.factors)
        if (is_zero(p(0, 0))) return false;
    return true;
}

bool tyrrell_membership(const ExteriorTuple& t, const QMatrix& basis) {
    return tyrrell_membership(change_basis(t, basis));
}

TyrrellCoords tyrrell_coords(const BrokenQuadric& bq) {
    return tyrrell_coords(bq, QMatrix::identity(bq.dim()));
}

TyrrellCoords tyrrell_coords(const BrokenQuadric& bq, const QMatrix& basis) {
    const std::size_t d = bq.dim();
    const ExteriorTuple t = to_exterior(change_basis(bq, basis));
    if (!tyrrell_membership(t)) throw std::domain_error("tyrrell_coords: not in patch");
    QMatrix x(d, d);
    for (std::size_t r = 0; r + 1 < d; ++r) {
        const QMatrix& p = t.factors[r];
        const auto combos = combinations(d, r + 1);
        for (std::size_t c = r + 1; c < d; ++c) {
            std::vector<std::size_t> k;
            for (std::size_t s = 0; s < r; ++s) k.push_back(s);
            k.push_back(c);
            x(r, c) = p(0, combo_index(combos, k)) / p(0, 0);
        }
    }
    QMatrix u = unipotent_from(x);
    QVector y(d > 0 ? d - 1 : 0);
    for (std::size_t i = 1; i < d; ++i) {
        const QMatrix& p = t.factors[i - 1];
        QMatrix luinv = inverse(compound(u, i));
        QMatrix dd = luinv.transpose() * p * luinv;
        const auto combos = combinations(d, i);
        std::vector<std::size_t> k;
        for (std::size_t s = 0; s + 1 < i; ++s) k.push_back(s);
        k.push_back(i);
        y[i - 1] = dd(combo_index(combos, k), combo_index(combos, k)) / dd(0, 0);
    }
    TyrrellCoords out{y, x};
    if (tyrrell_point(y, x) != t) throw std::logic_error("tyrrell_coords: chart inversion failed");
    return out;
}

} // namespace cq
