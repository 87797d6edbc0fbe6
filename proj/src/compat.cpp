#include "cq/compat.hpp"

#include <stdexcept>

namespace cq {

namespace {

struct Adapted {
    QMatrix b, binv;
    std::vector<std::size_t> block;  // level of each adapted basis row
    std::vector<std::size_t> start;  // first row of each level
};

Adapted adapted(const BrokenQuadric& bq) {
    Adapted a;
    a.b = bq.adapted_basis();
    a.binv = inverse(a.b);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < bq.levels(); ++i) {
        a.start.push_back(pos);
        for (std::size_t k = 0; k < bq.form(i).rows(); ++k) a.block.push_back(i);
        pos += bq.form(i).rows();
    }
    a.start.push_back(pos);
    return a;
}

// Linear conditions on x; all vanish iff x is (anti)compatible.
std::vector<Rational> violations(const Adapted& ad, const BrokenQuadric& bq, const QMatrix& x, bool anti) {
    const std::size_t d = bq.dim();
    QMatrix y = ad.b * x * ad.binv;
    std::vector<Rational> out;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c)
            if (ad.block[c] < ad.block[a]) out.push_back(y(a, c));
    for (std::size_t i = 0; i < bq.levels(); ++i) {
        const QMatrix& s = bq.form(i);
        const std::size_t r = s.rows(), off = ad.start[i];
        QMatrix ys(r, r);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                Rational v(0);
                for (std::size_t c = 0; c < r; ++c) v += y(off + a, off + c) * s(c, b);
                ys(a, b) = v;
            }
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = anti ? a : a + 1; b < r; ++b) out.push_back(anti ? Rational(ys(a, b) + ys(b, a)) : Rational(ys(a, b) - ys(b, a)));
    }
    return out;
}

void require_dim(const QMatrix& x, const BrokenQuadric& bq) {
    if (x.rows() != bq.dim() || x.cols() != bq.dim()) throw std::invalid_argument("compatibility: dimension mismatch");
}

bool all_zero(const std::vector<Rational>& v) {
    for (const auto& c : v)
        if (!is_zero(c)) return false;
    return true;
}

OperatorSpace solve_space(const BrokenQuadric& bq, bool anti) {
    const std::size_t d = bq.dim();
    Adapted ad = adapted(bq);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            QMatrix e(d, d);
            e(p, q) = 1;
            cols.push_back(violations(ad, bq, e, anti));
        }
    const std::size_t m = cols.empty() ? 0 : cols[0].size();
    QMatrix sys(m, d * d);
    for (std::size_t j = 0; j < d * d; ++j)
        for (std::size_t i = 0; i < m; ++i) sys(i, j) = cols[j][i];
    OperatorSpace s;
    s.d = d;
    s.basis = m ? kernel(sys) : QMatrix::identity(d * d);
    return s;
}

void require_commuting(const std::vector<QMatrix>& action) {
    for (std::size_t i = 0; i < action.size(); ++i)
        for (std::size_t j = i + 1; j < action.size(); ++j)
            if (action[i] * action[j] != action[j] * action[i])
                throw std::invalid_argument("action generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
}

} // namespace

bool is_compatible(const QMatrix& x, const BrokenQuadric& bq) {
    require_dim(x, bq);
    return all_zero(violations(adapted(bq), bq, x, false));
}

bool is_anticompatible(const QMatrix& x, const BrokenQuadric& bq) {
    require_dim(x, bq);
    return all_zero(violations(adapted(bq), bq, x, true));
}

QMatrix OperatorSpace::element(std::size_t i) const {
    QMatrix m(d, d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) m(p, q) = basis(i, p * d + q);
    return m;
}

bool OperatorSpace::contains(const QMatrix& x) const {
    std::vector<Rational> v(d * d);
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) v[p * d + q] = x(p, q);
    return QSubspace::span(basis.rows() ? basis : QMatrix(0, d * d)).contains(v);
}

OperatorSpace compatible_space(const BrokenQuadric& bq) { return solve_space(bq, false); }
OperatorSpace anticompatible_space(const BrokenQuadric& bq) { return solve_space(bq, true); }

SelfDualReport selfdual_graded_report(const std::vector<QMatrix>& action, const BrokenQuadric& bq) {
    require_commuting(action);
    Adapted ad = adapted(bq);
    SelfDualReport rep;
    rep.pass = true;
    for (const auto& x : action) {
        require_dim(x, bq);
        QMatrix y = ad.b * x * ad.binv;
        std::vector<LevelCheck> levels;
        for (std::size_t i = 0; i < bq.levels(); ++i) {
            LevelCheck lc;
            lc.level = i;
            lc.invariant = true;
            for (std::size_t a = ad.start[i]; a < bq.dim(); ++a)
                for (std::size_t c = 0; c < ad.start[i]; ++c)
                    if (!is_zero(y(a, c))) lc.invariant = false;
            const std::size_t off = ad.start[i], r = bq.form(i).rows();
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < r; ++k) idx.push_back(off + k);
            lc.induced = y.submatrix(idx, idx);
            QMatrix ys = lc.induced * bq.form(i);
            lc.symmetric = ys.is_symmetric();
            rep.pass = rep.pass && lc.invariant && lc.symmetric;
            levels.push_back(std::move(lc));
        }
        rep.checks.push_back(std::move(levels));
    }
    return rep;
}

std::vector<std::string> chart_variable_names(std::size_t d) {
    std::vector<std::string> names;
    for (std::size_t l = 1; l < d; ++l) names.push_back("y" + std::to_string(l));
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j)
            names.push_back(d <= 9 ? "x" + std::to_string(i) + std::to_string(j)
                                   : "x" + std::to_string(i) + "_" + std::to_string(j));
    return names;
}

std::vector<Rational> chart_point(const TyrrellCoords& c) {
    std::vector<Rational> p(c.y.begin(), c.y.end());
    const std::size_t d = c.x.rows();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) p.push_back(c.x(i, j));
    return p;
}

namespace {

MPolyMatrix to_mpoly(const QMatrix& m) {
    MPolyMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = MPoly(m(i, j));
    return out;
}

} // namespace

PolySystem compat_equations(const std::vector<MPolyMatrix>& action, const std::vector<std::string>& param_names,
                            const QMatrix& basis) {
    const std::size_t d = basis.rows();
    if (basis.cols() != d || rank(basis) != d) throw std::invalid_argument("compat_equations: basis is not invertible");
    PolySystem sys;
    sys.nparams = param_names.size();
    sys.vars = param_names;
    for (auto& n : chart_variable_names(d)) sys.vars.push_back(n);
    const std::size_t p = sys.nparams;
    auto yvar = [&](std::size_t l) { return MPoly::variable(p + l); };
    std::vector<std::vector<std::size_t>> xidx(d, std::vector<std::size_t>(d, 0));
    std::size_t next = p + (d ? d - 1 : 0);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) xidx[i][j] = next++;

    MPolyMatrix u = MPolyMatrix::identity(d), nil(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            u(i, j) = MPoly::variable(xidx[i][j]);
            nil(i, j) = -u(i, j);
        }
    // U^{-1} = sum_k (-N)^k with N the strictly upper part.
    MPolyMatrix uinv = MPolyMatrix::identity(d), power = MPolyMatrix::identity(d);
    for (std::size_t k = 1; k < d; ++k) {
        power = power * nil;
        uinv = uinv + power;
    }
    const MPolyMatrix e = to_mpoly(basis), einv = to_mpoly(inverse(basis));
    for (const auto& xk : action) {
        if (xk.rows() != d || xk.cols() != d) throw std::invalid_argument("compat_equations: action has wrong size");
        // tr(X' U^T A U^{-T}) = tr(W A) with W = U^{-T} X' U^T, X' the action in the chart basis.
        MPolyMatrix w = uinv.transpose() * (einv * xk * e) * u.transpose();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                MPoly prod(1);
                for (std::size_t l = i; l < j; ++l) prod *= yvar(l);
                sys.equations.push_back(w(i, j) * prod - w(j, i));
            }
    }
    return sys;
}

PolySystem compat_equations(const std::vector<QMatrix>& action, const QMatrix& basis) {
    require_commuting(action);
    std::vector<MPolyMatrix> a;
    for (const auto& x : action) a.push_back(to_mpoly(x));
    return compat_equations(a, {}, basis);
}

PolySystem compat_equations(const std::vector<QMatrix>& action) {
    const std::size_t d = action.empty() ? 0 : action[0].rows();
    return compat_equations(action, QMatrix::identity(d));
}

std::size_t tangent_dim(const PolySystem& sys, const std::vector<Rational>& point, bool fiber_only) {
    if (point.size() != sys.vars.size()) throw std::invalid_argument("tangent_dim: point has wrong length");
    for (const auto& eq : sys.equations)
        if (!is_zero(eq.eval(point))) throw std::domain_error("tangent_dim: point is not on the locus");
    const std::size_t first = fiber_only ? sys.nparams : 0;
    const std::size_t n = sys.vars.size() - first;
    QMatrix jac(sys.equations.size(), n);
    for (std::size_t e = 0; e < sys.equations.size(); ++e)
        for (std::size_t v = 0; v < n; ++v) jac(e, v) = sys.equations[e].derivative(first + v).eval(point);
    return n - rank(jac);
}

MPolyMatrix jordan_model_action(std::size_t d) {
    MPolyMatrix x(d, d);
    for (std::size_t k = 1; k < d; ++k) x(k - 1, k) = MPoly(1);
    for (std::size_t r = 0; r < d; ++r) x(r, 0) = x(r, 0) - MPoly::variable(d - 1 - r);
    return x;
}

std::vector<std::string> jordan_model_params(std::size_t d) {
    std::vector<std::string> n;
    for (std::size_t i = 0; i < d; ++i) n.push_back("a" + std::to_string(i));
    return n;
}

QMatrix jordan_model_matrix(const std::vector<Rational>& a) {
    const std::size_t d = a.size();
    QMatrix x(d, d);
    for (std::size_t k = 1; k < d; ++k) x(k - 1, k) = 1;
    for (std::size_t r = 0; r < d; ++r) x(r, 0) -= a[d - 1 - r];
    return x;
}

BrokenQuadric jordan_fiber_point(std::size_t d, std::vector<std::size_t> breaks, const std::vector<Rational>& params) {
    if (d == 0) throw std::invalid_argument("jordan_fiber_point: d must be positive");
    if (breaks.empty() || breaks.back() != d) breaks.push_back(d);
    std::size_t prev = 0, need = 0;
    for (auto b : breaks) {
        if (b <= prev || b > d) throw std::invalid_argument("jordan_fiber_point: breaks must increase strictly within 1..d");
        need += b - prev - 1;
        prev = b;
    }
    if (params.size() != need)
        throw std::invalid_argument("jordan_fiber_point: expected " + std::to_string(need) + " functional parameters");
    std::vector<QSubspace> tail;
    std::vector<QMatrix> forms;
    std::size_t lo = 0, used = 0;
    for (auto hi : breaks) {
        const std::size_t len = hi - lo;
        std::vector<Rational> alpha(2 * len, Rational(0));
        for (std::size_t j = 0; j + 1 < len; ++j) alpha[j] = params[used++];
        alpha[len - 1] = 1;
        QMatrix s(len, len);
        for (std::size_t m = 0; m < len; ++m)
            for (std::size_t n = 0; n < len; ++n) s(m, n) = alpha[m + n];
        forms.push_back(s);
        if (hi < d) {
            QMatrix rows(0, d);
            for (std::size_t k = hi; k < d; ++k) {
                std::vector<Rational> e(d, Rational(0));
                e[k] = 1;
                rows.append_row(e);
            }
            tail.push_back(QSubspace::span(rows));
        }
        lo = hi;
    }
    return BrokenQuadric::make(d, std::move(tail), std::move(forms));
}

std::vector<Rational> jordan_fiber_params(const BrokenQuadric& bq) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < bq.levels(); ++i) {
        const QMatrix& s = bq.form(i);
        const std::size_t len = s.rows();
        const Rational top = s(0, len - 1);
        if (is_zero(top)) throw std::invalid_argument("jordan_fiber_params: not a point of the Jordan fiber");
        for (std::size_t j = 0; j + 1 < len; ++j) out.push_back(s(0, j) / top);
    }
    return out;
}

} // namespace cq
