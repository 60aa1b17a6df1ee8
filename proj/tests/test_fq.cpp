#include "tdorbit/error.hpp"
#include "tdorbit/fq.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace tdorbit;

TEST(Field, PrimalityGate) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(7919));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(9));
    EXPECT_THROW(FieldElement(1, 4), NotPrime);
    EXPECT_THROW(require_prime(0), NotPrime);
}

TEST(Field, NormalizesNegativeValues) {
    EXPECT_EQ(FieldElement(-1, 5).value(), 4u);
    EXPECT_EQ(FieldElement(12, 5).value(), 2u);
}

TEST(Field, AxiomsExhaustive) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (std::uint32_t a = 0; a < p; ++a)
            for (std::uint32_t b = 0; b < p; ++b) {
                const FieldElement x(a, p), y(b, p);
                EXPECT_EQ((x + y).value(), (a + b) % p);
                EXPECT_EQ((x * y).value(), (a * b) % p);
                EXPECT_EQ(x - y + y, x);
                if (b != 0) EXPECT_EQ(x / y * y, x);
            }
        for (std::uint32_t a = 1; a < p; ++a) EXPECT_EQ(FieldElement(a, p) * FieldElement(a, p).inv(), FieldElement::one(p));
    }
}

TEST(Field, Errors) {
    EXPECT_THROW(FieldElement::zero(5).inv(), DivisionByZero);
    EXPECT_THROW(FieldElement(1, 3) / FieldElement(0, 3), DivisionByZero);
    EXPECT_THROW(FieldElement(1, 3) + FieldElement(1, 5), ModulusMismatch);
}

// Rank against a brute count of the kernel: |ker| = p^(cols - rank).
TEST(Matrix, RankMatchesKernelCount) {
    const std::uint32_t p = 3;
    const auto m = FqMatrix::from_values({{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 1, 1, 0}}, p);
    std::size_t kernel = 0;
    for (int v = 0; v < 81; ++v) {
        FqVector x = make_vector({v / 27, v / 9 % 3, v / 3 % 3, v % 3}, p);
        bool zero = true;
        for (const auto& c : m.apply(x)) zero = zero && c.is_zero();
        kernel += zero;
    }
    std::size_t expect = 1;
    for (std::size_t i = 0; i < 4 - m.rank(); ++i) expect *= p;
    EXPECT_EQ(kernel, expect);
    EXPECT_EQ(m.rank(), 2u);
}

TEST(Matrix, RrefIsIdempotent) {
    const auto m = FqMatrix::from_values({{0, 3, 1}, {2, 1, 4}, {2, 4, 5}}, 7);
    std::vector<std::size_t> piv;
    const auto r = m.rref(&piv);
    EXPECT_EQ(r.rref(), r);
    EXPECT_EQ(piv.size(), m.rank());
    EXPECT_TRUE(std::is_sorted(piv.begin(), piv.end()));
}

TEST(Matrix, TransposeAndIdentity) {
    const auto m = FqMatrix::from_values({{1, 2, 3}, {4, 5, 6}}, 7);
    EXPECT_EQ(m.transpose().transpose(), m);
    EXPECT_EQ(m.transpose().at(2, 1).value(), 6u);
    const auto x = make_vector({3, 1, 4}, 7);
    EXPECT_EQ(FqMatrix::identity(3, 7).apply(x), x);
    EXPECT_THROW(m.apply(make_vector({1, 2}, 7)), DimensionMismatch);
}

// The coset representative is the same for every vector of one coset, and
// distinct cosets give distinct representatives.
TEST(Matrix, CosetRepresentativesSeparateCosets) {
    const std::uint32_t p = 3;
    const auto m = FqMatrix::from_values({{1, 0}, {1, 0}, {0, 1}}, p);
    std::set<std::vector<std::uint32_t>> reps;
    for (int v = 0; v < 27; ++v) {
        const FqVector b = make_vector({v / 9, v / 3 % 3, v % 3}, p);
        const auto ic = image_and_coset(m, b);
        reps.insert(values_of(ic.representative));
        EXPECT_EQ(reduce_modulo(ic.basis, ic.pivots, b), ic.representative);
        EXPECT_EQ(reduce_modulo(ic.basis, ic.pivots, ic.representative), ic.representative);
    }
    EXPECT_EQ(reps.size(), 3u);  // 27 / |image| = 27 / 9
}
