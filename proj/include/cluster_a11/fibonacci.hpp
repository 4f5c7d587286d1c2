#ifndef CLUSTER_A11_FIBONACCI_HPP
#define CLUSTER_A11_FIBONACCI_HPP

// Fibonacci polynomials F(w_1, ..., w_N): the sum, over subsets D of {1..N}
// without two consecutive elements, of the products of w_k for k in D.
// Coefficients are all 1, so F is stored as its set of index subsets.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cluster_a11/errors.hpp"
#include "cluster_a11/laurent_poly.hpp"

namespace cluster_a11 {

/// A square-free monomial w_{i_1} ... w_{i_k} with no two consecutive indices.
class SubsetMonomial {
public:
    SubsetMonomial() = default;

    explicit SubsetMonomial(std::vector<std::int32_t> indices) : indices_(std::move(indices)) {
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (indices_[i] < 1) throw DomainError("subset indices start at 1");
            if (i > 0 && indices_[i] <= indices_[i - 1] + 1) {
                throw DomainError("subset indices must be increasing and pairwise non-consecutive");
            }
        }
    }

    const std::vector<std::int32_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }

    /// The subset extended by `index`, which must exceed every member by at least 2.
    SubsetMonomial with(std::int32_t index) const {
        if (index < 1 || (!indices_.empty() && index <= indices_.back() + 1)) {
            throw DomainError("appended index would break the subset invariant");
        }
        SubsetMonomial out;
        out.indices_.reserve(indices_.size() + 1);
        out.indices_.assign(indices_.begin(), indices_.end());
        out.indices_.push_back(index);
        return out;
    }

    friend bool operator==(const SubsetMonomial&, const SubsetMonomial&) = default;

    /// Shorter subsets first, then lexicographic.
    friend std::strong_ordering operator<=>(const SubsetMonomial& a, const SubsetMonomial& b) {
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        return a.indices_ <=> b.indices_;
    }

private:
    std::vector<std::int32_t> indices_;
};

/// F(w_1, ..., w_N) as a sorted set of subset monomials.
class FibPoly {
public:
    FibPoly(std::int32_t n_vars, std::vector<SubsetMonomial> monomials)
        : n_vars_(n_vars), monomials_(std::move(monomials)) {
        std::sort(monomials_.begin(), monomials_.end());
        if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end()) {
            throw DomainError("Fibonacci polynomial monomials must be distinct");
        }
        for (const auto& m : monomials_) {
            if (!m.empty() && m.indices().back() > n_vars_) {
                throw DomainError("subset index exceeds the number of variables");
            }
        }
    }

    std::int32_t n_vars() const noexcept { return n_vars_; }
    const std::vector<SubsetMonomial>& monomials() const noexcept { return monomials_; }
    std::size_t size() const noexcept { return monomials_.size(); }

    friend bool operator==(const FibPoly&, const FibPoly&) = default;

private:
    std::int32_t n_vars_;
    std::vector<SubsetMonomial> monomials_;
};

inline constexpr std::int32_t kMaxEnumerationVars = 25;

/// Brute force over all 2^N subsets of {1..N}.
inline FibPoly fib_enumerate(std::int32_t n) {
    if (n < 0) throw DomainError("number of variables must be nonnegative");
    if (n > kMaxEnumerationVars) {
        throw ScaleError("subset enumeration is limited to N <= " + std::to_string(kMaxEnumerationVars));
    }
    std::vector<SubsetMonomial> out;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if ((mask & (mask >> 1)) != 0) continue;  // two consecutive members
        std::vector<std::int32_t> idx;
        for (std::int32_t k = 0; k < n; ++k) {
            if (mask & (std::uint32_t{1} << k)) idx.push_back(k + 1);
        }
        out.emplace_back(std::move(idx));
    }
    return FibPoly(n, std::move(out));
}

/// F_N = F_{N-1} + w_N F_{N-2}, starting from F_0 = 1 and F_1 = w_1 + 1.
inline FibPoly fib_recurrence(std::int32_t n) {
    if (n < 0) throw DomainError("number of variables must be nonnegative");
    std::vector<SubsetMonomial> older{SubsetMonomial{}};  // F_{k-2}
    std::vector<SubsetMonomial> prev{SubsetMonomial{}};   // F_{k-1}
    if (n >= 1) prev.push_back(SubsetMonomial({1}));
    for (std::int32_t k = 2; k <= n; ++k) {
        std::vector<SubsetMonomial> next;
        next.reserve(prev.size() + older.size());
        next.insert(next.end(), prev.begin(), prev.end());
        for (const auto& m : older) next.push_back(m.with(k));
        older = std::move(prev);
        prev = std::move(next);
    }
    return FibPoly(n, std::move(prev));
}

/// JSON array of index arrays, e.g. [[],[1],[2],[3],[1,3]].
inline std::string to_json(const FibPoly& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i > 0) out += ',';
        out += '[';
        const auto& idx = f.monomials()[i].indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (j > 0) out += ',';
            out += std::to_string(idx[j]);
        }
        out += ']';
    }
    out += ']';
    return out;
}

/// The element of {1, 2} congruent to k modulo 2.
constexpr int residue_index(std::int64_t k) { return (k % 2 == 0) ? 2 : 1; }

/// x1^{-floor((N+1)/2)} x2^{-floor(N/2)}, the denominator monomial of f_N.
inline Monomial f_denominator_shift(std::int64_t n) { return {-((n + 1) / 2), -(n / 2)}; }

/// x_1 or x_2 as a monomial.
inline Monomial generator(int which) { return which == 1 ? Monomial{1, 0} : Monomial{0, 1}; }

/// f_0 and f_1 straight from the definition.
inline LaurentPoly f_base(std::int64_t n) {
    if (n == 0) return LaurentPoly::one();
    if (n == 1) return LaurentPoly::make({{-1, 0, 1}, {-1, 2, 1}});
    throw DomainError("f_base is defined for N = 0, 1");
}

/// f_N from f_{N-1} and f_{N-2}: x_<N> f_N = f_{N-1} + x_<N-1> f_{N-2}.
inline LaurentPoly f_step(const LaurentPoly& f_prev, const LaurentPoly& f_older, std::int64_t n) {
    const Monomial up = generator(residue_index(n - 1));
    const Monomial down = Monomial{} / generator(residue_index(n));
    return add(f_prev, f_older.shifted(up)).shifted(down);
}

/// The Laurent polynomial f_N, computed with the single-variable recurrence.
inline LaurentPoly substitute_f(std::int64_t n) {
    if (n < 0) throw DomainError("f_N is defined for N >= 0");
    if (n <= 1) return f_base(n);
    LaurentPoly older = f_base(0), prev = f_base(1);
    for (std::int64_t k = 2; k <= n; ++k) {
        LaurentPoly next = f_step(prev, older, k);
        older = std::move(prev);
        prev = std::move(next);
    }
    return prev;
}

}  // namespace cluster_a11

#endif  // CLUSTER_A11_FIBONACCI_HPP
