#include "cq/linalg.hpp"
#include "cq/scalar.hpp"

#include <cctype>

namespace cq {

std::string to_string(const Rational& x) {
    return x.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t i = 0, slash = std::string::npos;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw std::invalid_argument("malformed rational: " + s);
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/') {
            if (slash != std::string::npos || k == i || k + 1 == s.size())
                throw std::invalid_argument("malformed rational: " + s);
            slash = k;
        } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rational r;
    if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (slash != std::string::npos && sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t i) {
    std::vector<std::vector<std::size_t>> out;
    if (i > n) return out;
    std::vector<std::size_t> c(i);
    for (std::size_t k = 0; k < i; ++k) c[k] = k;
    while (true) {
        out.push_back(c);
        std::size_t k = i;
        while (k > 0 && c[k - 1] == n - i + k - 1) --k;
        if (k == 0) break;
        ++c[k - 1];
        for (std::size_t j = k; j < i; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

} // namespace cq
