#ifndef CLUSTER_A11_DETAIL_SPARSE_HPP
#define CLUSTER_A11_DETAIL_SPARSE_HPP

// Term-by-term kernels. They are the reference routes the packed kernels are
// tested against, and the fast path when one operand has only a few terms.

#include <map>
#include <vector>

#include "cluster_a11/laurent_poly.hpp"

namespace cluster_a11::detail {

/// Product with an operand of few terms as one k-way merge: each term of
/// `few` shifts `many` without reordering it.
inline LaurentPoly mul_by_few(const LaurentPoly& few, const LaurentPoly& many) {
    const auto& fs = few.terms();
    const auto& ms = many.terms();
    if (fs.empty() || ms.empty()) return {};
    const std::size_t k = fs.size();
    std::vector<std::size_t> cursor(k, 0);
    std::vector<Monomial> head(k);
    std::vector<bool> live(k, true);
    for (std::size_t i = 0; i < k; ++i) head[i] = ms[0].mono * fs[i].mono;

    std::vector<int> unit(k);  // +1, -1, or 0 for a general coefficient
    for (std::size_t i = 0; i < k; ++i) unit[i] = fs[i].coeff == 1 ? 1 : fs[i].coeff == -1 ? -1 : 0;

    // Sized once so that accumulating never reallocates.
    const mp_bitcnt_t acc_bits = many.max_coeff_bits() + few.max_coeff_bits() + 8 * sizeof(std::size_t);

    std::vector<Term> out;
    out.reserve(ms.size() + (k - 1) * 8);
    std::size_t remaining = k;
    while (remaining > 0) {
        std::size_t lo = k;
        for (std::size_t i = 0; i < k; ++i) {
            if (live[i] && (lo == k || head[i] < head[lo])) lo = i;
        }
        Term t{head[lo], {}};
        mpz_ptr acc = t.coeff.get_mpz_t();
        mpz_realloc2(acc, acc_bits);
        for (std::size_t i = lo; i < k; ++i) {
            if (!live[i] || head[i] != t.mono) continue;
            mpz_srcptr a = ms[cursor[i]].coeff.get_mpz_t();
            if (unit[i] > 0) {
                mpz_add(acc, acc, a);
            } else if (unit[i] < 0) {
                mpz_sub(acc, acc, a);
            } else {
                mpz_addmul(acc, a, fs[i].coeff.get_mpz_t());
            }
            if (++cursor[i] == ms.size()) {
                live[i] = false;
                --remaining;
            } else {
                head[i] = ms[cursor[i]].mono * fs[i].mono;
            }
        }
        if (t.coeff != 0) out.push_back(std::move(t));
    }
    return LaurentPoly::from_canonical(std::move(out));
}

inline LaurentPoly mul_schoolbook(const LaurentPoly& p, const LaurentPoly& q) {
    std::vector<Term> prod;
    prod.reserve(p.size() * q.size());
    for (const auto& a : p) {
        for (const auto& b : q) prod.push_back({a.mono * b.mono, a.coeff * b.coeff});
    }
    return LaurentPoly::make(std::move(prod));
}

/// Exact division by sparse leading-term elimination.
///
/// Both operands are first shifted by monomials so that their minimum
/// exponents are zero; a Laurent quotient exists only if the shifted quotient
/// is an ordinary polynomial, so elimination in graded-lex order terminates.
/// Fails on the first leading term that does not divide.
inline LaurentPoly div_exact_sparse(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw DivisionByZeroError("division by the zero polynomial");
    if (p.is_zero()) return {};

    const Monomial p_low = p.min_exponents();
    const Monomial q_low = q.min_exponents();
    const LaurentPoly q0 = q.shifted(Monomial{} / q_low);

    std::map<Monomial, BigCoeff, GradedLexLess> rem;
    for (const auto& t : p) rem.emplace(t.mono / p_low, t.coeff);

    const Term& q_lead = *std::max_element(q0.begin(), q0.end(), [](const Term& a, const Term& b) {
        return GradedLexLess{}(a.mono, b.mono);
    });

    std::vector<Term> quotient;
    BigCoeff c;
    while (!rem.empty()) {
        const auto lead = std::prev(rem.end());
        const Monomial d = lead->first / q_lead.mono;
        if (d.e1 < 0 || d.e2 < 0) {
            throw ExactDivisionError("leading monomial of the remainder is not divisible");
        }
        if (!mpz_divisible_p(lead->second.get_mpz_t(), q_lead.coeff.get_mpz_t())) {
            throw ExactDivisionError("leading coefficient of the remainder is not divisible");
        }
        mpz_divexact(c.get_mpz_t(), lead->second.get_mpz_t(), q_lead.coeff.get_mpz_t());
        for (const auto& t : q0) {
            auto [it, fresh] = rem.try_emplace(t.mono * d, 0);
            mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
            if (it->second == 0) rem.erase(it);
        }
        quotient.push_back({d, c});
    }
    return LaurentPoly::make(std::move(quotient)).shifted(p_low / q_low);
}

}  // namespace cluster_a11::detail

#endif  // CLUSTER_A11_DETAIL_SPARSE_HPP
