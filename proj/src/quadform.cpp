#include "cq/quadform.hpp"

namespace cq {

QMatrix subquotient_form(const QMatrix& q, const QSubspace& f, const QSubspace& g) {
    if (!f.contains(g)) throw std::invalid_argument("subquotient_form: G is not contained in F");
    if (q.rows() != f.ambient()) throw std::invalid_argument("subquotient_form: dimension mismatch");
    QMatrix c = f.complement_rows(g);
    return c * q * c.transpose();
}

namespace {

template <class It>
void normalize_range(It begin, It end) {
    mpz_class den = 1, content = 0;
    for (It it = begin; it != end; ++it) {
        if (is_zero(*it)) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), it->get_den_mpz_t());
    }
    for (It it = begin; it != end; ++it) {
        if (is_zero(*it)) continue;
        mpz_class v = it->get_num() * (den / it->get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    if (content == 0) return;
    int sign = 0;
    for (It it = begin; it != end; ++it)
        if (!is_zero(*it)) {
            sign = sgn(*it);
            break;
        }
    Rational scale(den, content);
    if (sign < 0) scale = -scale;
    for (It it = begin; it != end; ++it) *it *= scale;
}

} // namespace

QMatrix primitive(const QMatrix& m) {
    std::vector<Rational> v = m.data();
    normalize_range(v.begin(), v.end());
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = v[i * m.cols() + j];
    return out;
}

QVector primitive(const QVector& v) {
    QVector w = v;
    normalize_range(w.begin(), w.end());
    return w;
}

bool projectively_equal(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.is_zero_matrix() || b.is_zero_matrix()) return a.is_zero_matrix() && b.is_zero_matrix();
    return primitive(a) == primitive(b);
}

QSubspace row_space(const QMatrix& m) {
    return QSubspace::span(m);
}

} // namespace cq
