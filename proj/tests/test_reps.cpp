#include "tdorbit/error.hpp"
#include "tdorbit/oracle.hpp"
#include "tdorbit/reps.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace tdorbit;

namespace {

const std::vector<std::pair<int, std::uint32_t>> kDesk = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};

bool in_h(const GroupElement& g) {
    for (int e = 2; e <= g.n(); e += 2)
        if (!g.alpha(e).is_zero()) return false;
    return true;
}

std::vector<OrbitDescriptor> basic_descriptors(int n, std::uint32_t p) {
    std::vector<OrbitDescriptor> out;
    for (const auto& d : enumerate_descriptors(n, p))
        if (d.partition.size() == 1) out.push_back(d);
    return out;
}

}  // namespace

TEST(MasterEquation, SolvesCosetDecomposition) {
    std::mt19937_64 rng(12);
    for (int n : {2, 3, 4, 5, 6, 7}) {
        const std::uint32_t p = 5;
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = random_element(n, p, rng);
            FqVector t;
            for (int s = 0; s < n / 2; ++s) t.push_back(FieldElement(static_cast<std::int64_t>(rng() % p), p));
            const auto sol = solve_master_equation(g, t);
            EXPECT_TRUE(in_h(sol.h));
            EXPECT_EQ(multiply(transversal(n, t), g), multiply(sol.h, transversal(n, sol.t_prime)));
            for (int i = 1; i <= n; i += 2) EXPECT_EQ(sol.h.alpha(i), g.alpha(i));
        }
    }
}

TEST(BasicRepresentation, TraceEqualsClosedFormEverywhere) {
    for (auto [n, p] : std::vector<std::pair<int, std::uint32_t>>{{1, 3}, {2, 3}, {3, 3}, {4, 2}, {5, 2}, {4, 3}}) {
        const auto all = enumerate_group(n, p);
        for (const auto& d : basic_descriptors(n, p)) {
            const auto rep = make_basic(d);
            EXPECT_EQ(rep.dim(), ipow(BigInt(p), n / 2));
            for (const auto& g : all) EXPECT_EQ(basic_rep_matrix(rep, g).trace(), basic_character(rep, g));
        }
    }
}

// Closed-form basic characters against a raw Frobenius sum from H with
// rho(h) = e(sum x_i alpha_i + sum y_j beta_j).
TEST(BasicRepresentation, ClosedFormIsInducedCharacter) {
    for (auto [n, p] : std::vector<std::pair<int, std::uint32_t>>{{2, 3}, {3, 3}, {4, 2}, {5, 2}}) {
        const auto all = enumerate_group(n, p);
        for (const auto& d : basic_descriptors(n, p)) {
            const auto rep = make_basic(d);
            const auto rho = [&](const GroupElement& h) {
                FieldElement ph = FieldElement::zero(p);
                for (int i = 1; i <= n; ++i) ph += rep.x[i - 1] * h.alpha(i);
                for (int j = 1; j < n; ++j) ph += rep.y[j - 1] * h.beta(j);
                return e_char(ph);
            };
            const auto brute = oracle::brute_induce(n, p, in_h, rho, all);
            for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(brute[i], basic_character(rep, all[i]));
        }
    }
}

TEST(BasicRepresentation, HomomorphismOnAllPairs) {
    const auto all = enumerate_group(3, 3);
    for (const auto& d : basic_descriptors(3, 3)) {
        const auto rep = make_basic(d);
        for (const auto& g : all)
            for (const auto& h : all) EXPECT_EQ(basic_rep_matrix(rep, multiply(g, h)), basic_rep_matrix(rep, g) * basic_rep_matrix(rep, h));
    }
}

TEST(BasicRepresentation, Errors) {
    EXPECT_THROW(make_basic(make_vector({1, 0}, 3), FieldElement::zero(3)), ZeroInteriorY);
    const auto ds = enumerate_descriptors(3, 2);
    const auto split = std::find_if(ds.begin(), ds.end(), [](const OrbitDescriptor& d) { return d.partition.size() > 1; });
    ASSERT_NE(split, ds.end());
    EXPECT_THROW(make_basic(*split), NotBasicOrbit);
    EXPECT_THROW(transversal(4, make_vector({1}, 3)), ShapeMismatch);
}

TEST(Monomial, KroneckerIsMultiplicative) {
    const auto d = basic_descriptors(2, 3).front();
    const auto rep = make_basic(d);
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const auto a1 = random_element(2, 3, rng), a2 = random_element(2, 3, rng);
        const auto b1 = random_element(2, 3, rng), b2 = random_element(2, 3, rng);
        const auto A1 = basic_rep_matrix(rep, a1), A2 = basic_rep_matrix(rep, a2);
        const auto B1 = basic_rep_matrix(rep, b1), B2 = basic_rep_matrix(rep, b2);
        EXPECT_EQ(kronecker(A1, B1) * kronecker(A2, B2), kronecker(A1 * A2, B1 * B2));
        EXPECT_EQ(kronecker(A1, B1).trace(), A1.trace() * B1.trace());
    }
    EXPECT_EQ(MonomialMatrix::identity(3, 5).trace(), CycInt::integer(5, 3));
}

TEST(Irreducible, ProjectIsHomomorphism) {
    std::mt19937_64 rng(14);
    const auto part = Composition::parse("213");
    for (int t = 0; t < 200; ++t) {
        const auto g = random_element(6, 3, rng), h = random_element(6, 3, rng);
        const auto pg = project(g, part), ph = project(h, part), pgh = project(multiply(g, h), part);
        for (std::size_t r = 0; r < pg.size(); ++r) EXPECT_EQ(pgh[r], multiply(pg[r], ph[r]));
    }
}

TEST(Irreducible, TraceEqualsClosedFormEverywhere) {
    for (auto [n, p] : kDesk) {
        const auto all = enumerate_group(n, p);
        for (const auto& d : enumerate_descriptors(n, p)) {
            const IrreducibleRepresentation rep(d);
            EXPECT_EQ(rep.dim(), ipow(BigInt(p), dimension(d) / 2));
            EXPECT_EQ(rep.value(GroupElement::identity(n, p)), CycInt::integer(p, static_cast<std::int64_t>(rep.dim())));
            for (const auto& g : all) EXPECT_EQ(rep.matrix(g).trace(), rep.value(g));
        }
    }
}

TEST(Irreducible, HomomorphismExhaustive) {
    for (auto [n, p] : std::vector<std::pair<int, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}}) {
        const auto all = enumerate_group(n, p);
        for (const auto& d : enumerate_descriptors(n, p)) {
            const IrreducibleRepresentation rep(d);
            for (const auto& g : all)
                for (const auto& h : all) ASSERT_EQ(rep.matrix(multiply(g, h)), rep.matrix(g) * rep.matrix(h));
        }
    }
}

TEST(CharacterTable, Orthonormal) {
    for (auto [n, p] : kDesk) {
        const ClassTable table(n, p);
        const auto chars = character_table(table, 2);
        ASSERT_EQ(chars.size(), table.size());
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j)
                EXPECT_EQ(inner(chars[i], chars[j], table), ExactRational(i == j ? 1 : 0, 1)) << n << "," << p;
    }
}

// Second orthogonality: sum_chi chi(g) conj(chi(h)) = |C_G(g)| [g ~ h].
TEST(CharacterTable, ColumnOrthogonality) {
    const ClassTable table(3, 3);
    const auto chars = character_table(table);
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = 0; b < table.size(); ++b) {
            CycInt s(3);
            for (const auto& c : chars) s += c.values[a] * c.values[b].conj();
            const std::int64_t expect = a == b ? static_cast<std::int64_t>(table.group_order() / table.sizes()[a]) : 0;
            EXPECT_EQ(s, CycInt::integer(3, expect));
        }
}

TEST(CharacterTable, SmallCensus) {
    const ClassTable table(2, 2);
    const auto chars = character_table(table);
    int linear = 0, two = 0;
    for (const auto& c : chars) (c.dim == 1 ? linear : two) += 1;
    EXPECT_EQ(linear, 4);
    EXPECT_EQ(two, 1);
    // The q^n linear characters are g -> e(v . alpha).
    const auto ones = enumerate_descriptors(3, 3);
    int count = 0;
    for (const auto& d : ones) count += d.partition == Composition::parse("111");
    EXPECT_EQ(count, 27);
}

TEST(Completeness, SumOfSquaresIsGroupOrder) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u})
        for (int n = 1; n <= 12; ++n) {
            const auto r = completeness_check(n, q);
            EXPECT_TRUE(r.ok()) << n << "," << q;
            EXPECT_EQ(r.sum_of_squares, ipow(BigInt(q), 2 * n - 1));
        }
    BigInt dims = 0;
    for (const auto& d : enumerate_descriptors(5, 3)) dims += ipow(BigInt(3), dimension(d));
    EXPECT_EQ(dims, ipow(BigInt(3), 9));
}
