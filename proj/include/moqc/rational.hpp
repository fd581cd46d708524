#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace moqc {

/*
 * Exact rational arithmetic for density values.
 *
 * Densities are ratios of edge counts to vertex-pair counts, so numerator and
 * denominator stay well inside 64 bits for any graph this library can solve.
 * Comparisons cross-multiply in 128 bits, so no overflow and no floating
 * point anywhere in the ordering logic. Doubles are produced only for
 * rendering.
 */
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1; // always > 0

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }
    static Rational integer(std::int64_t n) { return Rational(n, 1); }

    void normalize() {
        if (den == 0) throw invalid_input("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // "p/q" in lowest terms; integers render without the denominator.
    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

inline int cmp(const Rational& a, const Rational& b) {
    __int128 l = static_cast<__int128>(a.num) * b.den;
    __int128 r = static_cast<__int128>(b.num) * a.den;
    if (l < r) return -1;
    if (l > r) return 1;
    return 0;
}

inline bool operator==(const Rational& a, const Rational& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Rational& a, const Rational& b) { return cmp(a, b) != 0; }
inline bool operator<(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Rational& a, const Rational& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Rational& a, const Rational& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Rational& a, const Rational& b) { return cmp(a, b) >= 0; }

} // namespace moqc
