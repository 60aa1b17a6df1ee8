#include "tdorbit/error.hpp"
#include "tdorbit/oracle.hpp"

#include <gtest/gtest.h>

using namespace tdorbit;

TEST(Oracle, PointIndexRoundTrip) {
    for (std::uint64_t i = 0; i < 243; ++i) EXPECT_EQ(oracle::point_index(oracle::point_at(3, 3, i)), i);
}

TEST(Oracle, OneDimensionalGroupHasSingletons) {
    for (std::uint32_t q : {2u, 5u}) {
        EXPECT_EQ(oracle::brute_coadjoint_orbits(1, q).block_count(), q);
        EXPECT_EQ(oracle::brute_conjugacy_classes(1, q).block_count(), q);
    }
}

TEST(Oracle, BlocksAreLabelledByMinimum) {
    const auto part = oracle::brute_conjugacy_classes(3, 2);
    for (std::size_t i = 0; i < part.universe(); ++i) {
        EXPECT_LE(part.block[i], i);
        EXPECT_EQ(part.block[part.block[i]], part.block[i]);
    }
    EXPECT_EQ(part.block[0], 0u);  // identity is alone
    for (std::size_t i = 1; i < part.universe(); ++i) EXPECT_NE(part.block[i], 0u);
}

TEST(Oracle, BlockSizesArePowersOfQ) {
    for (const auto& [rep, size] : oracle::brute_coadjoint_orbits(4, 3).block_sizes()) {
        auto s = size;
        while (s % 3 == 0) s /= 3;
        EXPECT_EQ(s, 1u);
    }
    EXPECT_EQ(oracle::brute_coadjoint_orbits(3, 2).block_count(), 14u);
}

TEST(Oracle, InduceFromWholeGroupAndFromIdentity) {
    const int n = 3;
    const std::uint32_t p = 2;
    const auto all = enumerate_group(n, p);
    const auto trivial = [p](const GroupElement&) { return CycInt::integer(p, 1); };
    const auto from_g = oracle::brute_induce(n, p, [](const GroupElement&) { return true; }, trivial, all);
    for (const auto& v : from_g) EXPECT_EQ(v, CycInt::integer(p, 1));
    const auto regular = oracle::brute_induce(n, p, [](const GroupElement& g) { return g.is_identity(); }, trivial, all);
    EXPECT_EQ(regular[0], CycInt::integer(p, 32));
    for (std::size_t i = 1; i < regular.size(); ++i) EXPECT_TRUE(regular[i].is_zero());
}

TEST(Oracle, Budget) {
    EXPECT_THROW(oracle::brute_coadjoint_orbits(6, 3, 1000), BudgetExceeded);
    EXPECT_THROW(oracle::brute_conjugacy_classes(6, 3, 1000), BudgetExceeded);
}
