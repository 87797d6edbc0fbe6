#include "cq/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cq {

MPoly::Exps MPoly::trimmed(Exps e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

MPoly::MPoly(const Rational& c) {
    if (!is_zero(c)) m_terms.emplace(Exps{}, c);
}

MPoly MPoly::variable(std::size_t i) {
    Exps e(i + 1, 0);
    e[i] = 1;
    return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const Exps& e, const Rational& c) {
    MPoly p;
    p.add_term(trimmed(e), c);
    return p;
}

void MPoly::add_term(const Exps& e, const Rational& c) {
    if (is_zero(c)) return;
    auto it = m_terms.find(e);
    if (it == m_terms.end()) {
        m_terms.emplace(e, c);
        return;
    }
    it->second += c;
    if (is_zero(it->second)) m_terms.erase(it);
}

std::size_t MPoly::nvars() const {
    std::size_t n = 0;
    for (const auto& [e, c] : m_terms) n = std::max(n, e.size());
    return n;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : m_terms) {
        int s = 0;
        for (auto x : e) s += static_cast<int>(x);
        d = std::max(d, s);
    }
    return d;
}

Rational MPoly::coeff(const Exps& e) const {
    auto it = m_terms.find(trimmed(e));
    return it == m_terms.end() ? Rational(0) : it->second;
}

Rational MPoly::eval(const std::vector<Rational>& point) const {
    Rational s(0);
    for (const auto& [e, c] : m_terms) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= point.size()) throw std::invalid_argument("MPoly::eval: point too short");
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            p.canonicalize();
            t *= p;
        }
        s += t;
    }
    return s;
}

MPoly MPoly::derivative(std::size_t var) const {
    MPoly d;
    for (const auto& [e, c] : m_terms) {
        if (var >= e.size() || e[var] == 0) continue;
        Exps f = e;
        Rational k(static_cast<long>(f[var]));
        --f[var];
        d.add_term(trimmed(f), c * k);
    }
    return d;
}

MPoly MPoly::homogeneous_part(int degree) const {
    MPoly h;
    for (const auto& [e, c] : m_terms) {
        int s = 0;
        for (auto x : e) s += static_cast<int>(x);
        if (s == degree) h.m_terms.emplace(e, c);
    }
    return h;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.m_terms) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.m_terms) add_term(e, -c);
    return *this;
}

MPoly operator-(MPoly a) {
    for (auto& [e, c] : a.m_terms) c = -c;
    return a;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.m_terms)
        for (const auto& [eb, cb] : b.m_terms) {
            MPoly::Exps e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

bool grlex_less(const MPoly::Exps& a, const MPoly::Exps& b) {
    unsigned da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    if (da != db) return da < db;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
    if (m_terms.empty()) return "0";
    std::vector<const std::pair<const Exps, Rational>*> order;
    for (const auto& t : m_terms) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return grlex_less(y->first, x->first); });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const Rational& c = t->second;
        const bool constant = t->first.empty();
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (constant || mag != 1) {
            os << cq::to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (t->first[i] == 0) continue;
            if (wrote) os << "*";
            os << (i < names.size() ? names[i] : "z" + std::to_string(i));
            if (t->first[i] > 1) os << "^" << t->first[i];
            wrote = true;
        }
    }
    return os.str();
}

std::vector<MPoly::Exps> monomials_of_degree(std::size_t n, unsigned k) {
    std::vector<MPoly::Exps> out;
    if (n == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    MPoly::Exps cur(n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == n) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (unsigned a = left + 1; a-- > 0;) {
            cur[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, k);
    return out;
}

} // namespace cq
