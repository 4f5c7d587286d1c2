#ifndef CLUSTER_A11_MONOMIAL_HPP
#define CLUSTER_A11_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <string>

#include "cluster_a11/errors.hpp"

namespace cluster_a11 {

[[noreturn, gnu::cold, gnu::noinline]] inline void throw_exponent_overflow(std::int64_t a, char op,
                                                                        std::int64_t b) {
    throw ExponentOverflowError("exponent overflow: " + std::to_string(a) + ' ' + op + ' ' +
                                std::to_string(b));
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) [[unlikely]] throw_exponent_overflow(a, '+', b);
    return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) [[unlikely]] throw_exponent_overflow(a, '-', b);
    return out;
}

/// x1^e1 * x2^e2 with signed exponents. Ordered lexicographically on (e1, e2).
struct Monomial {
    std::int64_t e1 = 0;
    std::int64_t e2 = 0;

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
    friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

    std::int64_t total_degree() const { return checked_add(e1, e2); }
    Monomial swapped() const { return {e2, e1}; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    return {checked_add(a.e1, b.e1), checked_add(a.e2, b.e2)};
}

inline Monomial operator/(const Monomial& a, const Monomial& b) {
    return {checked_sub(a.e1, b.e1), checked_sub(a.e2, b.e2)};
}

/// Graded-lex order: total degree first, ties broken by the exponent of x1.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        // __int128 keeps the comparison exact even for extreme exponents.
        const __int128 da = static_cast<__int128>(a.e1) + a.e2;
        const __int128 db = static_cast<__int128>(b.e1) + b.e2;
        if (da != db) return da < db;
        return a.e1 < b.e1;
    }
};

}  // namespace cluster_a11

#endif  // CLUSTER_A11_MONOMIAL_HPP
