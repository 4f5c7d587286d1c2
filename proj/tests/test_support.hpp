#ifndef CLUSTER_A11_TESTS_TEST_SUPPORT_HPP
#define CLUSTER_A11_TESTS_TEST_SUPPORT_HPP

// Random inputs for property tests and independent reference computations.

#include <cstdint>
#include <random>
#include <vector>

#include "cluster_a11/cluster_a11.hpp"

namespace cluster_a11::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    /// Nonzero integer with a magnitude of up to `bits` bits, random sign.
    BigCoeff coefficient(unsigned bits) {
        const auto width = static_cast<unsigned>(uniform(1, bits));
        BigCoeff c = 0;
        for (unsigned done = 0; done < width; done += 32) {
            c <<= 32;
            c += static_cast<unsigned long>(rng_() & 0xffffffffu);
        }
        c >>= (width + 31) / 32 * 32 - width;
        if (c == 0) c = 1;
        return coin() ? -c : c;
    }

    /// Up to `max_terms` terms with exponents in [-max_exp, max_exp]. May be zero
    /// when duplicates cancel, unless `nonzero` is set.
    LaurentPoly poly(std::size_t max_terms = 12, std::int64_t max_exp = 20, unsigned bits = 128,
                     bool nonzero = false) {
        for (;;) {
            const auto n = static_cast<std::size_t>(uniform(nonzero ? 1 : 0, static_cast<std::int64_t>(max_terms)));
            std::vector<Term> terms;
            for (std::size_t i = 0; i < n; ++i) {
                terms.push_back({{uniform(-max_exp, max_exp), uniform(-max_exp, max_exp)}, coefficient(bits)});
            }
            LaurentPoly p = LaurentPoly::make(std::move(terms));
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    /// Dense-ish polynomial on a small box, which sends products through the
    /// packed kernels.
    LaurentPoly dense_poly(std::int64_t width, unsigned bits, bool nonzero = true) {
        for (;;) {
            const std::int64_t e1 = uniform(-10, 10), e2 = uniform(-10, 10);
            std::vector<Term> terms;
            for (std::int64_t u = 0; u < width; ++u) {
                for (std::int64_t v = 0; v < width; ++v) {
                    if (uniform(0, 3) != 0) terms.push_back({{e1 + u, e2 + v}, coefficient(bits)});
                }
            }
            LaurentPoly p = LaurentPoly::make(std::move(terms));
            if (!nonzero || !p.is_zero()) return p;
        }
    }

private:
    std::mt19937_64 rng_;
};

/// Plain product of every term pair, used as the reference for the kernels.
inline LaurentPoly naive_product(const LaurentPoly& p, const LaurentPoly& q) {
    std::vector<Term> out;
    for (const auto& a : p) {
        for (const auto& b : q) out.push_back({a.mono * b.mono, a.coeff * b.coeff});
    }
    return LaurentPoly::make(std::move(out));
}

}  // namespace cluster_a11::testing

#endif  // CLUSTER_A11_TESTS_TEST_SUPPORT_HPP
