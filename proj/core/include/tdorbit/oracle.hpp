#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/cyclo.hpp"
#include "tdorbit/group.hpp"
#include "tdorbit/liealg.hpp"

#include <cstdint>
#include <functional>
#include <vector>

// Brute-force ground truth. Nothing here uses the structural modules
// (orbits, classes, reps, model); only field, cyclotomic, group and action
// primitives.
namespace tdorbit::oracle {

/// Set partition of {0..N-1}; block[i] is the smallest element of i's block.
struct PartitionOfSet {
    std::vector<std::uint64_t> block;

    std::size_t universe() const { return block.size(); }
    std::size_t block_count() const;
    // Size of each block keyed by its minimum, in increasing minimum order.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> block_sizes() const;
};

// Coadjoint points are indexed lexicographically, x_1 most significant,
// then y.
std::uint64_t point_index(const CoadjointPoint& f);
CoadjointPoint point_at(int n, std::uint32_t p, std::uint64_t index);

// Closure of every point under act(g(alpha; 0), .) for all alpha.
PartitionOfSet brute_coadjoint_orbits(int n, std::uint32_t p,
                                      std::uint64_t budget = kDefaultBudget);

// Closure under conjugation by g(alpha; 0), computed as by^-1 * x * by with
// three group multiplications. Indices follow element_index.
PartitionOfSet brute_conjugacy_classes(int n, std::uint32_t p,
                                       std::uint64_t budget = kDefaultBudget);

using Membership = std::function<bool(const GroupElement&)>;
using SubgroupCharacter = std::function<CycInt(const GroupElement&)>;

// Frobenius formula chi^(s) = (1/|H|) sum_{t in G, t^-1 s t in H} chi(t^-1 s t),
// evaluated at each element of `at`.
std::vector<CycInt> brute_induce(int n, std::uint32_t p, const Membership& in_h,
                                 const SubgroupCharacter& chi,
                                 const std::vector<GroupElement>& at,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace tdorbit::oracle
