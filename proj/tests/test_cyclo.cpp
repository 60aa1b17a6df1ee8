#include "tdorbit/cyclo.hpp"
#include "tdorbit/error.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tdorbit;

namespace {

// Independent model: a length-p vector f stands for sum f_j zeta^j and is zero
// in Z[zeta_p] iff all f_j are equal.
std::vector<std::int64_t> full(const CycInt& c) {
    std::vector<std::int64_t> f(c.coeffs().begin(), c.coeffs().end());
    f.push_back(0);
    return f;
}

bool same_element(std::vector<std::int64_t> f, const std::vector<std::int64_t>& g) {
    for (std::size_t j = 0; j < f.size(); ++j) f[j] -= g[j];
    for (auto v : f)
        if (v != f[0]) return false;
    return true;
}

CycInt random_cyc(std::uint32_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(-9, 9);
    std::vector<std::int64_t> c(p - 1);
    for (auto& v : c) v = d(rng);
    return CycInt(p, c);
}

}  // namespace

TEST(Cyclotomic, ZetaPowersSumToZero) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        CycInt s(p);
        for (std::uint32_t k = 0; k < p; ++k) s += CycInt::zeta_power(p, k);
        EXPECT_TRUE(s.is_zero());
        EXPECT_EQ(CycInt::zeta_power(p, p), CycInt::integer(p, 1));
    }
}

TEST(Cyclotomic, ProductMatchesConvolution) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_cyc(p, rng), b = random_cyc(p, rng);
            const auto fa = full(a), fb = full(b);
            std::vector<std::int64_t> conv(p, 0);
            for (std::uint32_t i = 0; i < p; ++i)
                for (std::uint32_t j = 0; j < p; ++j) conv[(i + j) % p] += fa[i] * fb[j];
            EXPECT_TRUE(same_element(full(a * b), conv));
            EXPECT_EQ(a.times_zeta(3), a * CycInt::zeta_power(p, 3));
        }
}

TEST(Cyclotomic, ConjugationInvertsZeta) {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {3u, 5u}) {
        for (std::int64_t k = 0; k < p; ++k) EXPECT_EQ(CycInt::zeta_power(p, k).conj(), CycInt::zeta_power(p, -k));
        const auto a = random_cyc(p, rng), b = random_cyc(p, rng);
        EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
        EXPECT_TRUE((a * a.conj()).conj() == a * a.conj());
    }
}

TEST(Cyclotomic, RationalityAndDivision) {
    EXPECT_TRUE(CycInt::integer(5, -3).is_rational());
    EXPECT_FALSE(CycInt::zeta_power(5, 1).is_rational());
    EXPECT_EQ(CycInt(3, {4, 6}).divided_exactly(2), CycInt(3, {2, 3}));
    EXPECT_ANY_THROW(CycInt(3, {4, 5}).divided_exactly(2));
    EXPECT_THROW(CycInt(3, {1, 2, 3}), LengthMismatch);
    EXPECT_THROW(CycInt::integer(3, 1) + CycInt::integer(5, 1), ModulusMismatch);
}

TEST(Cyclotomic, OverflowIsReported) {
    const auto big = CycInt::integer(3, std::int64_t{1} << 62);
    EXPECT_THROW(big + big, Overflow);
    EXPECT_THROW(big.scaled(4), Overflow);
}

TEST(Cyclotomic, CharacterOfFieldElement) {
    EXPECT_EQ(e_char(FieldElement(2, 5)), CycInt::zeta_power(5, 2));
    EXPECT_EQ(e_char(FieldElement::zero(5)), CycInt::integer(5, 1));
}

// Additive characters of F_p are orthonormal.
TEST(Cyclotomic, HermitianInnerOnAdditiveCharacters) {
    const std::uint32_t p = 5;
    for (std::uint32_t u = 0; u < p; ++u)
        for (std::uint32_t v = 0; v < p; ++v) {
            std::vector<CycInt> a, b;
            for (std::uint32_t x = 0; x < p; ++x) {
                a.push_back(e_char(FieldElement(u * x, p)));
                b.push_back(e_char(FieldElement(v * x, p)));
            }
            EXPECT_EQ(hermitian_inner(a, b, p), ExactRational(u == v ? 1 : 0, 1));
            EXPECT_EQ(class_inner(a, b, std::vector<std::uint64_t>(p, 1), p), ExactRational(u == v ? 1 : 0, 1));
        }
}

TEST(Cyclotomic, InnerProductErrors) {
    const std::vector<CycInt> one{CycInt::integer(3, 1)};
    EXPECT_THROW(hermitian_inner(one, one, 2), LengthMismatch);
    EXPECT_THROW(hermitian_inner({CycInt::zeta_power(3, 1)}, one, 1), RationalityViolation);
    EXPECT_EQ(hermitian_inner({CycInt::integer(3, 1), CycInt::integer(3, 1)}, {CycInt::integer(3, 1), CycInt::integer(3, 0)}, 2),
              ExactRational(1, 2));
}
