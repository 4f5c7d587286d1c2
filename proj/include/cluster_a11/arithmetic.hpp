#ifndef CLUSTER_A11_ARITHMETIC_HPP
#define CLUSTER_A11_ARITHMETIC_HPP

#include <cstdint>

#include "cluster_a11/detail/kronecker.hpp"
#include "cluster_a11/detail/sparse.hpp"
#include "cluster_a11/laurent_poly.hpp"

namespace cluster_a11 {

namespace detail {

// Operands with at most this many terms are multiplied term by term.
inline constexpr std::size_t kFewTerms = 8;

// Packed kernels only pay off when the product grid is not much larger than
// the number of term pairs.
inline bool packing_pays_off(const LaurentPoly& p, const LaurentPoly& q) {
    const auto slots = product_slots(p, q);
    if (!slots) return false;
    const unsigned __int128 pairs = static_cast<unsigned __int128>(p.size()) * q.size();
    return *slots <= 4 * pairs + 64;
}

}  // namespace detail

inline LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    const bool p_smaller = p.size() <= q.size();
    const LaurentPoly& few = p_smaller ? p : q;
    const LaurentPoly& many = p_smaller ? q : p;
    if (few.size() <= detail::kFewTerms) return detail::mul_by_few(few, many);
    if (detail::packing_pays_off(p, q)) return detail::mul_kronecker(p, q);
    return detail::mul_schoolbook(p, q);
}

inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }
inline LaurentPoly& operator*=(LaurentPoly& p, const LaurentPoly& q) { return p = mul(p, q); }

/// The unique r with q * r == p.
///
/// Throws DivisionByZeroError for q == 0 and ExactDivisionError when p is not
/// a multiple of q in the Laurent ring.
inline LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    if (p.is_zero()) return {};

    if (q.size() == 1) {
        const Term& m = q.terms().front();
        std::vector<Term> out;
        out.reserve(p.size());
        for (const auto& t : p) {
            if (!mpz_divisible_p(t.coeff.get_mpz_t(), m.coeff.get_mpz_t())) {
                throw ExactDivisionError("coefficient not divisible by monomial divisor");
            }
            Term r{t.mono / m.mono, {}};
            mpz_divexact(r.coeff.get_mpz_t(), t.coeff.get_mpz_t(), m.coeff.get_mpz_t());
            out.push_back(std::move(r));
        }
        return LaurentPoly::from_canonical(std::move(out));
    }

    if (p.size() > detail::kFewTerms && detail::packing_pays_off(p, q)) {
        if (auto r = detail::div_exact_kronecker(p, q)) return *std::move(r);
    }
    return detail::div_exact_sparse(p, q);
}

/// p^e by repeated squaring.
inline LaurentPoly pow(LaurentPoly base, std::uint64_t e) {
    LaurentPoly acc = LaurentPoly::one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return acc;
}

}  // namespace cluster_a11

#endif  // CLUSTER_A11_ARITHMETIC_HPP
