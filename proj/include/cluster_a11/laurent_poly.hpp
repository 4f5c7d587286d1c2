#ifndef CLUSTER_A11_LAURENT_POLY_HPP
#define CLUSTER_A11_LAURENT_POLY_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "cluster_a11/big_coeff.hpp"
#include "cluster_a11/errors.hpp"
#include "cluster_a11/monomial.hpp"

namespace cluster_a11 {

struct Term {
    Monomial mono;
    BigCoeff coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

/// Loose input form accepted by LaurentPoly::make.
struct RawTerm {
    std::int64_t e1;
    std::int64_t e2;
    BigCoeff coeff;
};

/// Sparse Laurent polynomial in x1, x2 over the integers.
///
/// Terms are kept sorted strictly ascending in (e1, e2) order and no stored
/// coefficient is zero, so two polynomials are equal exactly when their term
/// vectors are equal. Values are immutable once built; arithmetic returns new
/// values.
class LaurentPoly {
public:
    LaurentPoly() = default;

    /// Merges duplicate monomials and drops zero coefficients.
    static LaurentPoly make(std::vector<Term> terms) {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.mono < b.mono; });
        std::vector<Term> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().mono == t.mono) {
                out.back().coeff += t.coeff;
            } else {
                if (!out.empty() && out.back().coeff == 0) out.pop_back();
                out.push_back(std::move(t));
            }
        }
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        return LaurentPoly(std::move(out));
    }

    static LaurentPoly make(std::initializer_list<RawTerm> raw) {
        std::vector<Term> terms;
        terms.reserve(raw.size());
        for (const auto& r : raw) terms.push_back({{r.e1, r.e2}, r.coeff});
        return make(std::move(terms));
    }

    /// Takes ownership of terms that are already canonical.
    static LaurentPoly from_canonical(std::vector<Term> terms) {
        assert(is_canonical(terms));
        return LaurentPoly(std::move(terms));
    }

    static LaurentPoly constant(const BigCoeff& c) { return monomial({0, 0}, c); }
    static LaurentPoly one() { return constant(1); }
    static LaurentPoly x1() { return monomial({1, 0}); }
    static LaurentPoly x2() { return monomial({0, 1}); }

    static LaurentPoly monomial(Monomial m, const BigCoeff& c = 1) {
        if (c == 0) return {};
        return LaurentPoly({Term{m, c}});
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// Componentwise minimum exponents over all terms.
    Monomial min_exponents() const {
        require_nonzero("min_exponents");
        Monomial m = terms_.front().mono;
        for (const auto& t : terms_) m.e2 = std::min(m.e2, t.mono.e2);
        return m;  // e1 is already minimal: terms are sorted by e1 first
    }

    /// Componentwise maximum exponents over all terms.
    Monomial max_exponents() const {
        require_nonzero("max_exponents");
        Monomial m = terms_.back().mono;
        for (const auto& t : terms_) m.e2 = std::max(m.e2, t.mono.e2);
        return m;
    }

    BigCoeff coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& v) { return t.mono < v; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return 0;
    }

    /// Largest absolute coefficient, in bits.
    std::uint64_t max_coeff_bits() const {
        std::uint64_t b = 0;
        for (const auto& t : terms_) b = std::max(b, bit_length(t.coeff));
        return b;
    }

    /// Product with the monomial `by`. Order is preserved, so this is linear.
    LaurentPoly shifted(const Monomial& by) const {
        std::vector<Term> out(terms_);
        for (auto& t : out) t.mono = t.mono * by;
        return LaurentPoly(std::move(out));
    }

    LaurentPoly operator-() const {
        std::vector<Term> out(terms_);
        for (auto& t : out) t.coeff = -t.coeff;
        return LaurentPoly(std::move(out));
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Moves the term vector out, leaving the zero polynomial.
    std::vector<Term> release_terms() && { return std::move(terms_); }

    static bool is_canonical(const std::vector<Term>& terms) {
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].coeff == 0) return false;
            if (i > 0 && !(terms[i - 1].mono < terms[i].mono)) return false;
        }
        return true;
    }

private:
    explicit LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {}

    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw ZeroPolynomialError(std::string(what) + " of the zero polynomial");
    }

    std::vector<Term> terms_;
};

namespace detail {

/// Sorted merge of a and sign*b. Takes `a` by value so that a temporary
/// left operand donates its coefficients instead of having them copied.
inline LaurentPoly merge_add(LaurentPoly a, const LaurentPoly& b, int sign) {
    std::vector<Term> ta = std::move(a).release_terms();
    const auto& tb = b.terms();
    std::vector<Term> out;
    out.reserve(ta.size() + tb.size());
    std::size_t i = 0, j = 0;
    while (i < ta.size() || j < tb.size()) {
        if (j == tb.size() || (i < ta.size() && ta[i].mono < tb[j].mono)) {
            out.push_back(std::move(ta[i++]));
        } else if (i == ta.size() || tb[j].mono < ta[i].mono) {
            out.push_back(tb[j++]);
            if (sign < 0) mpz_neg(out.back().coeff.get_mpz_t(), out.back().coeff.get_mpz_t());
        } else {
            Term t = std::move(ta[i]);
            if (sign < 0) {
                t.coeff -= tb[j].coeff;
            } else {
                t.coeff += tb[j].coeff;
            }
            if (t.coeff != 0) out.push_back(std::move(t));
            ++i;
            ++j;
        }
    }
    return LaurentPoly::from_canonical(std::move(out));
}

}  // namespace detail

inline LaurentPoly add(LaurentPoly p, const LaurentPoly& q) { return detail::merge_add(std::move(p), q, 1); }
inline LaurentPoly sub(LaurentPoly p, const LaurentPoly& q) { return detail::merge_add(std::move(p), q, -1); }

inline LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return add(std::move(p), q); }
inline LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return sub(std::move(p), q); }
inline LaurentPoly& operator+=(LaurentPoly& p, const LaurentPoly& q) { return p = add(std::move(p), q); }
inline LaurentPoly& operator-=(LaurentPoly& p, const LaurentPoly& q) { return p = sub(std::move(p), q); }

/// The ring automorphism exchanging x1 and x2. An involution.
inline LaurentPoly swap_vars(const LaurentPoly& p) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back({t.mono.swapped(), t.coeff});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
    return LaurentPoly::from_canonical(std::move(out));
}

/// Exact value of p at x1 = a, x2 = b.
inline BigRational eval_int(const LaurentPoly& p, std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) throw EvalAtZeroError("Laurent polynomial evaluated on a coordinate axis");
    if (p.is_zero()) return 0;

    const BigCoeff ba = big_from_int(a);
    const BigCoeff bb = big_from_int(b);
    const Monomial lo = p.min_exponents();

    // Sum with exponents shifted to be nonnegative, then restore the shift as a
    // rational factor.
    BigCoeff sum = 0;
    BigCoeff pa, pb;
    for (const auto& t : p) {
        const auto u = static_cast<unsigned long>(checked_sub(t.mono.e1, lo.e1));
        const auto v = static_cast<unsigned long>(checked_sub(t.mono.e2, lo.e2));
        mpz_pow_ui(pa.get_mpz_t(), ba.get_mpz_t(), u);
        mpz_pow_ui(pb.get_mpz_t(), bb.get_mpz_t(), v);
        pa *= pb;
        mpz_addmul(sum.get_mpz_t(), pa.get_mpz_t(), t.coeff.get_mpz_t());
    }

    BigCoeff num = sum, den = 1;
    auto apply = [&](const BigCoeff& base, std::int64_t e) {
        BigCoeff pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(),
                   static_cast<unsigned long>(e < 0 ? -static_cast<__int128>(e) : e));
        if (e < 0) {
            den *= pw;
        } else {
            num *= pw;
        }
    };
    apply(ba, lo.e1);
    apply(bb, lo.e2);

    BigRational out(num, den);
    out.canonicalize();
    return out;
}

}  // namespace cluster_a11

#endif  // CLUSTER_A11_LAURENT_POLY_HPP
