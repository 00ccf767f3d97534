#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace aptorus {

/// Exact rational number. The scale parameter epsilon is kept rational end
/// to end: the non-resonance guarantee for sqrt-of-prime frequencies needs
/// the rescaling amplitudes to be rational, not merely close to rational.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    static Rational parse(const std::string& s);

    void reduce() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    Rational pow(int e) const;

    Rational operator*(const Rational& o) const;

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
    if (p > INT64_MAX || p < INT64_MIN)
        throw std::overflow_error("Rational: 64-bit overflow");
    return static_cast<std::int64_t>(p);
}

inline Rational Rational::operator*(const Rational& o) const {
    Rational r;
    r.num = checked_mul_i64(num, o.num);
    r.den = checked_mul_i64(den, o.den);
    r.reduce();
    return r;
}

inline Rational Rational::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Rational: negative exponent");
    Rational r(1, 1);
    Rational b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
        e >>= 1;
    }
    return r;
}

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            std::int64_t n = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return Rational(n, 1);
        }
        std::size_t pos = 0;
        std::int64_t n = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("trailing characters");
        std::int64_t d = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1) throw std::invalid_argument("trailing characters");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("Rational: cannot parse '" + s + "' (expected p or p/q)");
    }
}

}  // namespace aptorus
