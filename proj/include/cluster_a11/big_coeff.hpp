#ifndef CLUSTER_A11_BIG_COEFF_HPP
#define CLUSTER_A11_BIG_COEFF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "cluster_a11/errors.hpp"

namespace cluster_a11 {

/// Arbitrary-precision signed integer. GMP keeps zero canonical (size 0, no sign).
using BigCoeff = mpz_class;

/// Exact rational, the codomain of integer evaluation.
using BigRational = mpq_class;

inline BigCoeff big_from_int(std::int64_t v) {
    BigCoeff out;
    // mpz_set_si takes a long; on LP64 that is 64 bits.
    static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 data model expected");
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

inline std::string to_decimal(const BigCoeff& v) { return v.get_str(10); }

/// True when `text` is `-?[1-9][0-9]*` or `0`.
inline bool is_canonical_decimal(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = 0;
    if (text[0] == '-') {
        if (text.size() == 1) return false;
        i = 1;
    }
    if (text[i] == '0') return text.size() == 1;  // "0" only, never "-0" or "01"
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

/// Parses a canonical decimal integer; anything else is a ParseError.
inline BigCoeff parse_decimal(std::string_view text) {
    if (!is_canonical_decimal(text)) {
        throw ParseError("not a canonical decimal integer: '" + std::string(text) + "'",
                         ParseError::npos);
    }
    return BigCoeff(std::string(text), 10);
}

/// Number of bits in |v|; 0 for zero.
inline std::uint64_t bit_length(const BigCoeff& v) {
    return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace cluster_a11

#endif  // CLUSTER_A11_BIG_COEFF_HPP
