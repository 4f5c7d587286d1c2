#ifndef CLUSTER_A11_DETAIL_KRONECKER_HPP
#define CLUSTER_A11_DETAIL_KRONECKER_HPP

// Kronecker substitution: a bivariate polynomial with small exponents is packed
// into one big integer by evaluating at x2 = 2^k, x1 = 2^(k*D). Products and
// exact quotients of the packed integers are then done by GMP and unpacked
// with balanced (signed) base-2^k digits.

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "cluster_a11/laurent_poly.hpp"

namespace cluster_a11::detail {

static_assert(GMP_NUMB_BITS == 64 && GMP_NAIL_BITS == 0, "64-bit nail-free GMP limbs expected");

/// Lattice steps shared by the exponent offsets of several polynomials.
struct LatticeStep {
    std::uint64_t g1 = 1;
    std::uint64_t g2 = 1;
};

/// Largest compressed coordinates (u, v) of a polynomial relative to its minimum.
struct Extent {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
};

inline std::uint64_t offset_of(std::int64_t e, std::int64_t lo) {
    return static_cast<std::uint64_t>(e) - static_cast<std::uint64_t>(lo);
}

inline LatticeStep common_step(std::initializer_list<const LaurentPoly*> polys) {
    std::uint64_t g1 = 0, g2 = 0;
    for (const LaurentPoly* p : polys) {
        const Monomial lo = p->min_exponents();
        for (const auto& t : *p) {
            g1 = std::gcd(g1, offset_of(t.mono.e1, lo.e1));
            g2 = std::gcd(g2, offset_of(t.mono.e2, lo.e2));
        }
    }
    return {g1 == 0 ? 1 : g1, g2 == 0 ? 1 : g2};
}

inline Extent extent_of(const LaurentPoly& p, LatticeStep step) {
    const Monomial lo = p.min_exponents();
    const Monomial hi = p.max_exponents();
    return {offset_of(hi.e1, lo.e1) / step.g1, offset_of(hi.e2, lo.e2) / step.g2};
}

inline std::uint64_t bits_of_count(std::size_t n) { return std::bit_width(static_cast<std::uint64_t>(n)); }

/// Geometry of one packing: slot (u, v) starts at bit (u * row_stride + v) * slot_bits.
struct Packing {
    LatticeStep step;
    std::uint64_t row_stride = 1;
    std::uint64_t slot_bits = 1;
};

inline void or_bits(mp_limb_t* dst, std::uint64_t bit_offset, mpz_srcptr value) {
    const std::size_t n = mpz_size(value);
    const mp_limb_t* src = mpz_limbs_read(value);
    const std::size_t li = bit_offset / 64;
    const unsigned sh = bit_offset % 64;
    if (sh == 0) {
        for (std::size_t j = 0; j < n; ++j) dst[li + j] |= src[j];
    } else {
        for (std::size_t j = 0; j < n; ++j) {
            dst[li + j] |= src[j] << sh;
            dst[li + j + 1] |= src[j] >> (64 - sh);
        }
    }
}

/// Reads `nbits` bits starting at `bit_offset` of a limb array into `out` (nonnegative).
inline void read_bits(mpz_ptr out, const mp_limb_t* src, std::size_t nsrc, std::uint64_t bit_offset,
                      std::uint64_t nbits) {
    const std::size_t nl = (nbits + 63) / 64;
    const std::size_t li = bit_offset / 64;
    const unsigned sh = bit_offset % 64;
    auto limb = [&](std::size_t i) -> mp_limb_t { return i < nsrc ? src[i] : 0; };
    mp_limb_t* d = mpz_limbs_write(out, static_cast<mp_size_t>(nl));
    for (std::size_t i = 0; i < nl; ++i) {
        mp_limb_t lo = limb(li + i) >> sh;
        if (sh != 0) lo |= limb(li + i + 1) << (64 - sh);
        d[i] = lo;
    }
    if (const unsigned top = nbits % 64; top != 0) d[nl - 1] &= (mp_limb_t{1} << top) - 1;
    mpz_limbs_finish(out, static_cast<mp_size_t>(nl));
}

inline std::uint64_t slot_index(const Term& t, const Monomial& lo, const Packing& pk) {
    const std::uint64_t u = offset_of(t.mono.e1, lo.e1) / pk.step.g1;
    const std::uint64_t v = offset_of(t.mono.e2, lo.e2) / pk.step.g2;
    return u * pk.row_stride + v;
}

/// Signed image of p at the packing point. `slots` bounds the slot count.
inline mpz_class pack(const LaurentPoly& p, const Packing& pk, std::uint64_t slots) {
    const Monomial lo = p.min_exponents();
    const std::size_t nlimbs = (slots * pk.slot_bits + 63) / 64 + 2;

    auto fill = [&](bool negative_part) {
        mpz_class z;
        mp_limb_t* d = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(nlimbs));
        std::memset(d, 0, nlimbs * sizeof(mp_limb_t));
        bool any = false;
        for (const auto& t : p) {
            if ((mpz_sgn(t.coeff.get_mpz_t()) < 0) != negative_part) continue;
            or_bits(d, slot_index(t, lo, pk) * pk.slot_bits, t.coeff.get_mpz_t());
            any = true;
        }
        mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(any ? nlimbs : 0));
        return z;
    };

    mpz_class out = fill(false);
    const bool has_negative = std::any_of(p.begin(), p.end(), [](const Term& t) { return t.coeff < 0; });
    if (has_negative) out -= fill(true);
    return out;
}

inline Monomial lattice_point(const Monomial& origin, std::uint64_t u, std::uint64_t v, LatticeStep step) {
    auto along = [](std::int64_t base, std::uint64_t k, std::uint64_t g) {
        std::uint64_t delta;
        if (__builtin_mul_overflow(k, g, &delta) || delta > static_cast<std::uint64_t>(INT64_MAX)) {
            throw ExponentOverflowError("exponent overflow while unpacking");
        }
        return checked_add(base, static_cast<std::int64_t>(delta));
    };
    return {along(origin.e1, u, step.g1), along(origin.e2, v, step.g2)};
}

/// Inverse of `pack` for a value whose digits all lie in [-2^(k-1), 2^(k-1)).
inline std::vector<Term> unpack(const mpz_class& value, const Packing& pk, const Monomial& origin) {
    std::vector<Term> out;
    if (value == 0) return out;

    const bool negative = value < 0;
    mpz_class mag = abs(value);
    const mp_limb_t* src = mpz_limbs_read(mag.get_mpz_t());
    const std::size_t nsrc = mpz_size(mag.get_mpz_t());
    const std::uint64_t total_bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    const std::uint64_t k = pk.slot_bits;

    mpz_class full, half;
    mpz_setbit(full.get_mpz_t(), k);
    mpz_setbit(half.get_mpz_t(), k - 1);

    mpz_class digit;
    bool carry = false;
    for (std::uint64_t idx = 0;; ++idx) {
        const std::uint64_t off = idx * k;
        if (off >= total_bits && !carry) break;
        read_bits(digit.get_mpz_t(), src, nsrc, off, k);
        if (carry) digit += 1;
        carry = digit >= half;
        if (carry) digit -= full;
        if (digit == 0) continue;
        if (negative) digit = -digit;
        out.push_back({lattice_point(origin, idx / pk.row_stride, idx % pk.row_stride, pk.step), digit});
    }
    return out;
}

/// Slot count of the product grid, or nullopt when it is too large to pack.
inline std::optional<std::uint64_t> product_slots(const LaurentPoly& p, const LaurentPoly& q) {
    const LatticeStep step = common_step({&p, &q});
    const Extent ep = extent_of(p, step), eq = extent_of(q, step);
    const unsigned __int128 rows = static_cast<unsigned __int128>(ep.u) + eq.u + 1;
    const unsigned __int128 cols = static_cast<unsigned __int128>(ep.v) + eq.v + 1;
    const unsigned __int128 slots = rows * cols;
    if (slots > (static_cast<unsigned __int128>(1) << 40)) return std::nullopt;
    return static_cast<std::uint64_t>(slots);
}

inline LaurentPoly mul_kronecker(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const LatticeStep step = common_step({&p, &q});
    const Extent ep = extent_of(p, step), eq = extent_of(q, step);

    Packing pk;
    pk.step = step;
    pk.row_stride = ep.v + eq.v + 1;
    pk.slot_bits = p.max_coeff_bits() + q.max_coeff_bits() + bits_of_count(std::min(p.size(), q.size())) + 1;
    const std::uint64_t slots = (ep.u + eq.u + 1) * pk.row_stride;

    mpz_class prod;
    const mpz_class a = pack(p, pk, slots);
    if (&p == &q || p == q) {
        mpz_mul(prod.get_mpz_t(), a.get_mpz_t(), a.get_mpz_t());  // GMP squares when operands alias
    } else {
        const mpz_class b = pack(q, pk, slots);
        mpz_mul(prod.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    return LaurentPoly::from_canonical(unpack(prod, pk, p.min_exponents() * q.min_exponents()));
}

/// Exact quotient p / q through packed integers.
///
/// Returns the quotient when it is certified, throws ExactDivisionError when
/// the packed integers prove that q does not divide p, and returns nullopt when
/// neither could be established (the caller then uses sparse division).
///
/// Certificate: with r the unpacked quotient, q*r fits the row stride and its
/// coefficients are bounded below 2^(k-1); then q*r and p are both balanced
/// base-2^k expansions of the same integer, hence equal.
inline std::optional<LaurentPoly> div_exact_kronecker(const LaurentPoly& p, const LaurentPoly& q) {
    const LatticeStep step = common_step({&p, &q});
    const Extent ep = extent_of(p, step), eq = extent_of(q, step);
    if (eq.u > ep.u || eq.v > ep.v) throw ExactDivisionError("divisor has larger degree span than dividend");

    Packing pk;
    pk.step = step;
    pk.row_stride = ep.v + 1;
    pk.slot_bits = p.max_coeff_bits() + bits_of_count(p.size()) + 2;
    const std::uint64_t slots = (ep.u + 1) * pk.row_stride;
    const Monomial origin = p.min_exponents() / q.min_exponents();
    const std::uint64_t q_bits = q.max_coeff_bits();

    for (int attempt = 0; attempt < 3; ++attempt) {
        const mpz_class big_p = pack(p, pk, slots);
        const mpz_class big_q = pack(q, pk, slots);
        mpz_class big_r;
        mpz_divexact(big_r.get_mpz_t(), big_p.get_mpz_t(), big_q.get_mpz_t());
        if (big_r * big_q != big_p) {
            // Evaluation is a ring map, so q | p would force Q | P.
            throw ExactDivisionError("packed dividend is not divisible by packed divisor");
        }

        std::vector<Term> r = unpack(big_r, pk, origin);
        if (r.empty()) return std::nullopt;
        const LaurentPoly quotient = LaurentPoly::from_canonical(std::move(r));
        const Extent er = extent_of(quotient, step);
        const std::uint64_t r_bits = quotient.max_coeff_bits();
        const std::uint64_t needed = q_bits + r_bits + bits_of_count(std::min(q.size(), quotient.size())) + 1;
        const bool fits = quotient.min_exponents() == origin && er.u + eq.u <= ep.u && er.v + eq.v <= ep.v;
        if (fits && needed <= pk.slot_bits) return quotient;
        if (needed <= pk.slot_bits) break;
        pk.slot_bits = needed + 1;
    }
    return std::nullopt;
}

}  // namespace cluster_a11::detail

#endif  // CLUSTER_A11_DETAIL_KRONECKER_HPP
