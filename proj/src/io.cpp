#include "cq/io.hpp"

namespace cq::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& array_at(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + ": array expected");
    return j;
}

std::size_t size_from(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) fail(std::string(what) + ": non-negative integer expected");
    return j.get<std::size_t>();
}

std::string exps_key(const MPoly::Exps& e) {
    std::string k;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) k += ",";
        k += std::to_string(e[i]);
    }
    return k;
}

MPoly::Exps exps_from_key(const std::string& k) {
    MPoly::Exps e;
    if (k.empty()) return e;
    std::size_t pos = 0;
    while (pos <= k.size()) {
        std::size_t comma = k.find(',', pos);
        std::string part = k.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) fail("bad monomial key: " + k);
        e.push_back(static_cast<unsigned>(std::stoul(part)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return MPoly::trimmed(e);
}

} // namespace

const Json& member(const Json& j, const std::string& key) {
    if (!j.is_object()) fail("object expected around '" + key + "'");
    auto it = j.find(key);
    if (it == j.end()) fail("missing key '" + key + "'");
    return *it;
}

Json to_json(const Rational& x) { return cq::to_string(x); }

Json to_json(const QVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

Json to_json(const QMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Json to_json(const QPoly& p) {
    Json o = Json::object();
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (!is_zero(p.coeffs()[k])) o[std::to_string(k)] = to_json(p.coeffs()[k]);
    return o;
}

Json to_json(const QPolyMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        a.push_back(row);
    }
    return a;
}

Json to_json(const MPoly& p) {
    Json o = Json::object();
    for (const auto& [e, c] : p.terms()) o[exps_key(e)] = to_json(c);
    return o;
}

Json to_json(const QSubspace& s) { return to_json(s.basis()); }

Json to_json(const BrokenQuadric& bq) {
    Json flag = Json::array(), forms = Json::array();
    for (std::size_t i = 1; i < bq.levels(); ++i) flag.push_back(to_json(bq.flag(i)));
    for (std::size_t i = 0; i < bq.levels(); ++i) forms.push_back(to_json(bq.form(i)));
    return Json{{"dim", bq.dim()}, {"flag", flag}, {"forms", forms}};
}

Json to_json(const ExteriorTuple& t) {
    Json f = Json::array();
    for (const auto& m : t.factors) f.push_back(to_json(m));
    return Json{{"dim", t.d}, {"factors", f}};
}

Json to_json(const TyrrellCoords& c) { return Json{{"x", to_json(c.x)}, {"y", to_json(c.y)}}; }

Json to_json(const ArtinAlgebra& a) {
    Json ops = Json::array();
    for (const auto& x : a.ops) ops.push_back(to_json(x));
    return Json{{"ops", ops}, {"v", to_json(a.v)}};
}

Json to_json(const SymDecomp& sd) {
    Json basis = Json::array();
    for (const auto& row : sd.basis) {
        Json r = Json::array();
        for (const auto& m : row) r.push_back(to_json(m));
        basis.push_back(r);
    }
    return Json{{"basis", basis}, {"delta", sd.delta}, {"s", sd.s}};
}

Json to_json(const PolySystem& sys) {
    Json eqs = Json::array();
    for (const auto& e : sys.equations) eqs.push_back(to_json(e));
    Json text = Json::array();
    for (const auto& e : sys.equations) text.push_back(e.to_string(sys.vars));
    return Json{{"equations", eqs}, {"nparams", sys.nparams}, {"text", text}, {"vars", sys.vars}};
}

Json to_json(const OperatorSpace& sp) {
    Json b = Json::array();
    for (std::size_t i = 0; i < sp.dim(); ++i) b.push_back(to_json(sp.element(i)));
    return Json{{"basis", b}, {"d", sp.d}, {"dim", sp.dim()}};
}

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail("rational: string \"p/q\" expected");
    const std::string s = j.get<std::string>();
    Rational r;
    try {
        r = parse_rational(s);
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    if (cq::to_string(r) != s) fail("rational not in lowest terms: " + s);
    return r;
}

QVector vector_from(const Json& j) {
    QVector v;
    for (const auto& x : array_at(j, "vector")) v.push_back(rational_from(x));
    return v;
}

QMatrix matrix_from(const Json& j) {
    const auto& a = array_at(j, "matrix");
    std::size_t cols = 0;
    std::vector<QVector> rows;
    for (const auto& r : a) {
        rows.push_back(vector_from(r));
        if (rows.size() == 1) cols = rows[0].size();
        if (rows.back().size() != cols) fail("matrix: ragged rows");
    }
    return QMatrix::from_rows(rows, cols);
}

QPoly upoly_from(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return QPoly(rational_from(j));
    if (!j.is_object()) fail("polynomial in t: object {exponent: coefficient} expected");
    std::vector<Rational> c;
    for (const auto& [k, v] : j.items()) {
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) fail("bad exponent: " + k);
        const std::size_t e = std::stoul(k);
        if (e > 4096) fail("exponent too large: " + k);
        if (c.size() <= e) c.resize(e + 1, Rational(0));
        c[e] = rational_from(v);
    }
    return QPoly(c);
}

QPolyMatrix poly_matrix_from(const Json& j) {
    const auto& a = array_at(j, "family");
    const std::size_t n = a.size();
    QPolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = array_at(a[i], "family row");
        if (row.size() != n) fail("family: square matrix expected");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = upoly_from(row[k]);
    }
    return m;
}

MPoly mpoly_from(const Json& j) {
    if (!j.is_object()) fail("polynomial: object {\"e1,e2,...\": coefficient} expected");
    MPoly p;
    for (const auto& [k, v] : j.items()) p += MPoly::monomial(exps_from_key(k), rational_from(v));
    return p;
}

QSubspace subspace_from(const Json& j, std::size_t ambient) {
    QMatrix m = matrix_from(j);
    if (m.rows() == 0) return QSubspace::zero(ambient);
    if (m.cols() != ambient) fail("subspace: rows of the wrong length");
    return QSubspace::span(m);
}

BrokenQuadric broken_quadric_from(const Json& j) {
    const std::size_t d = size_from(member(j, "dim"), "dim");
    std::vector<QSubspace> flag;
    for (const auto& f : array_at(member(j, "flag"), "flag")) flag.push_back(subspace_from(f, d));
    std::vector<QMatrix> forms;
    for (const auto& f : array_at(member(j, "forms"), "forms")) forms.push_back(matrix_from(f));
    if (j.contains("complements")) {
        std::vector<QMatrix> comps;
        for (const auto& c : array_at(j["complements"], "complements")) comps.push_back(matrix_from(c));
        return BrokenQuadric::from_complements(d, flag, comps, forms);
    }
    return BrokenQuadric::make(d, flag, forms);
}

ExteriorTuple exterior_from(const Json& j) {
    const std::size_t d = size_from(member(j, "dim"), "dim");
    std::vector<QMatrix> f;
    for (const auto& m : array_at(member(j, "factors"), "factors")) f.push_back(matrix_from(m));
    return make_exterior_tuple(d, f);
}

TyrrellCoords tyrrell_from(const Json& j) { return TyrrellCoords{vector_from(member(j, "y")), matrix_from(member(j, "x"))}; }

ArtinAlgebra algebra_from(const Json& j) {
    ArtinAlgebra a;
    for (const auto& m : array_at(member(j, "ops"), "ops")) a.ops.push_back(matrix_from(m));
    a.v = vector_from(member(j, "v"));
    for (const auto& x : a.ops)
        if (x.rows() != a.v.size() || x.cols() != a.v.size()) fail("algebra: operator size does not match v");
    return a;
}

SymDecomp decomposition_from(const Json& j) {
    SymDecomp sd;
    sd.s = size_from(member(j, "s"), "s");
    for (const auto& row : array_at(member(j, "delta"), "delta")) {
        std::vector<std::size_t> r;
        for (const auto& x : array_at(row, "delta row")) r.push_back(size_from(x, "delta entry"));
        sd.delta.push_back(r);
    }
    for (const auto& row : array_at(member(j, "basis"), "basis")) {
        std::vector<QMatrix> r;
        for (const auto& m : array_at(row, "basis row")) r.push_back(matrix_from(m));
        sd.basis.push_back(r);
    }
    return sd;
}

PolySystem system_from(const Json& j) {
    PolySystem sys;
    for (const auto& v : array_at(member(j, "vars"), "vars")) {
        if (!v.is_string()) fail("vars: strings expected");
        sys.vars.push_back(v.get<std::string>());
    }
    for (const auto& e : array_at(member(j, "equations"), "equations")) sys.equations.push_back(mpoly_from(e));
    sys.nparams = size_from(member(j, "nparams"), "nparams");
    return sys;
}

} // namespace cq::io
