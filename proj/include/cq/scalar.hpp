#ifndef CQ_SCALAR_HPP
#define CQ_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cq {

// Reference scalar field: arbitrary precision rationals.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

// "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& x);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& s);

// Z/p for an odd prime p below 2^31. Drop-in for the linear algebra templates.
template <std::uint32_t P>
class Zp {
    static_assert(P > 2 && P < (1u << 31), "odd prime below 2^31 expected");

public:
    Zp() = default;
    Zp(long long v)
        : m_v(static_cast<std::uint32_t>(((v % static_cast<long long>(P)) + P) % P)) {}

    std::uint32_t value() const { return m_v; }

    Zp inverse() const {
        if (m_v == 0) throw std::domain_error("Zp: inverse of zero");
        return pow(P - 2);
    }
    Zp pow(std::uint64_t e) const {
        Zp base = *this, r = 1;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    friend Zp operator+(Zp a, Zp b) { return raw((a.m_v + static_cast<std::uint64_t>(b.m_v)) % P); }
    friend Zp operator-(Zp a, Zp b) { return raw((a.m_v + static_cast<std::uint64_t>(P) - b.m_v) % P); }
    friend Zp operator*(Zp a, Zp b) { return raw((static_cast<std::uint64_t>(a.m_v) * b.m_v) % P); }
    friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
    friend Zp operator-(Zp a) { return raw((P - a.m_v) % P); }
    Zp& operator+=(Zp b) { return *this = *this + b; }
    Zp& operator-=(Zp b) { return *this = *this - b; }
    Zp& operator*=(Zp b) { return *this = *this * b; }
    Zp& operator/=(Zp b) { return *this = *this / b; }
    friend bool operator==(Zp a, Zp b) { return a.m_v == b.m_v; }
    friend bool operator!=(Zp a, Zp b) { return a.m_v != b.m_v; }

    friend bool is_zero(Zp a) { return a.m_v == 0; }
    friend Zp exact_quotient(Zp a, Zp b) { return a / b; }
    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.m_v; }

private:
    static Zp raw(std::uint64_t v) {
        Zp z;
        z.m_v = static_cast<std::uint32_t>(v);
        return z;
    }
    std::uint32_t m_v = 0;
};

} // namespace cq

#endif
