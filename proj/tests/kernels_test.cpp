// The packed kernels against the term-by-term ones.

#include <gtest/gtest.h>

#include "cluster_a11/arithmetic.hpp"
#include "test_support.hpp"

namespace cluster_a11 {
namespace {

using testing::Gen;
using testing::naive_product;

TEST(Kernels, MulRoutesAgreeOnDenseInputs) {
    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        const auto p = gen.dense_poly(gen.uniform(3, 9), static_cast<unsigned>(gen.uniform(1, 200)));
        const auto q = gen.dense_poly(gen.uniform(3, 9), static_cast<unsigned>(gen.uniform(1, 200)));
        const auto expected = naive_product(p, q);
        EXPECT_EQ(detail::mul_schoolbook(p, q), expected);
        EXPECT_EQ(detail::mul_kronecker(p, q), expected);
        EXPECT_EQ(mul(p, q), expected);
    }
}

TEST(Kernels, KroneckerSquare) {
    Gen gen(12);
    for (int i = 0; i < 100; ++i) {
        const auto p = gen.dense_poly(gen.uniform(2, 10), 150);
        EXPECT_EQ(detail::mul_kronecker(p, p), naive_product(p, p));
    }
}

TEST(Kernels, KroneckerOnStridedSupport) {
    // Only even exponents in x1 and multiples of 3 in x2: the packing works on
    // the coarser lattice.
    Gen gen(13);
    for (int i = 0; i < 100; ++i) {
        std::vector<Term> a, b;
        for (int u = 0; u < 6; ++u) {
            for (int v = 0; v < 6; ++v) {
                a.push_back({{2 * u - 7, 3 * v + 1}, gen.coefficient(90)});
                b.push_back({{2 * v, -3 * u}, gen.coefficient(90)});
            }
        }
        const auto p = LaurentPoly::make(std::move(a));
        const auto q = LaurentPoly::make(std::move(b));
        EXPECT_EQ(detail::mul_kronecker(p, q), naive_product(p, q));
    }
}

TEST(Kernels, MulByFewMatchesNaive) {
    Gen gen(14);
    for (int i = 0; i < 300; ++i) {
        const auto few = gen.poly(8, 6, 64, true);
        const auto many = gen.poly(60, 6, 200, true);
        EXPECT_EQ(detail::mul_by_few(few, many), naive_product(few, many));
    }
}

TEST(Kernels, ZeroCancellationInProducts) {
    // (x1 - x2)(x1 + x2) = x1^2 - x2^2: the cross terms cancel.
    const auto a = LaurentPoly::make({{1, 0, 1}, {0, 1, -1}});
    const auto b = LaurentPoly::make({{1, 0, 1}, {0, 1, 1}});
    const auto expected = LaurentPoly::make({{2, 0, 1}, {0, 2, -1}});
    EXPECT_EQ(detail::mul_kronecker(a, b), expected);
    EXPECT_EQ(detail::mul_schoolbook(a, b), expected);
    EXPECT_EQ(detail::mul_by_few(a, b), expected);
}

TEST(Kernels, DivisionRoutesAgree) {
    Gen gen(15);
    for (int i = 0; i < 150; ++i) {
        const auto q = gen.dense_poly(gen.uniform(3, 8), static_cast<unsigned>(gen.uniform(1, 120)));
        const auto r = gen.dense_poly(gen.uniform(3, 8), static_cast<unsigned>(gen.uniform(1, 120)));
        const auto p = naive_product(q, r);
        EXPECT_EQ(detail::div_exact_sparse(p, q), r);
        const auto packed = detail::div_exact_kronecker(p, q);
        if (packed) {
            EXPECT_EQ(*packed, r);
        }
        EXPECT_EQ(div_exact(p, q), r);
    }
}

TEST(Kernels, DivisionRejectsNonMultiples) {
    Gen gen(16);
    for (int i = 0; i < 150; ++i) {
        const auto q = gen.dense_poly(gen.uniform(3, 7), 60);
        const auto r = gen.dense_poly(gen.uniform(3, 7), 60);
        // Perturbing one coefficient of an exact product leaves a nonzero
        // remainder unless q is a unit, which a dense random q is not.
        std::vector<Term> terms = naive_product(q, r).terms();
        terms[static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(terms.size()) - 1))].coeff += 1;
        const auto p = LaurentPoly::make(std::move(terms));
        EXPECT_THROW(detail::div_exact_sparse(p, q), ExactDivisionError);
        EXPECT_THROW(div_exact(p, q), ExactDivisionError);
        try {
            const auto packed = detail::div_exact_kronecker(p, q);
            EXPECT_FALSE(packed.has_value());
        } catch (const ExactDivisionError&) {
        }
    }
}

TEST(Kernels, DivisionWhereQuotientIsSmallerThanExtent) {
    // (x1^3 - 1) / (x1 - 1) = x1^2 + x1 + 1, through the public entry point
    // with enough terms to engage the packed route.
    const auto base = LaurentPoly::make({{1, 0, 1}, {0, 0, -1}});
    const auto other = pow(LaurentPoly::make({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}), 6);
    const auto p = base * other;
    EXPECT_EQ(div_exact(p, other), base);
    EXPECT_EQ(div_exact(p, base), other);
}

}  // namespace
}  // namespace cluster_a11
