#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/fq.hpp"
#include "tdorbit/liealg.hpp"
#include "tdorbit/partitions.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace tdorbit {

/// Canonical label of a coadjoint orbit.
///
/// The partition is read off the zero positions of y (a part ends at every
/// break i with y_i = 0); every odd part r carries its segment invariant v_r.
struct OrbitDescriptor {
    int n;
    std::uint32_t p;
    Composition partition;
    FqVector y;
    std::map<int, FieldElement> odd_invariants;  // part index (0-based) -> v_r

    // Breaks i_1 < ... < i_m, i.e. the positions with y = 0.
    std::vector<int> breaks() const;
    bool operator==(const OrbitDescriptor& o) const;
    bool operator!=(const OrbitDescriptor& o) const { return !(*this == o); }
    bool operator<(const OrbitDescriptor& o) const;
};

OrbitDescriptor classify(const CoadjointPoint& f);

// n - nu; always even.
int dimension(const OrbitDescriptor& d);

// x = 0 except the first coordinate of each odd part, chosen so that the
// part's segment invariant equals v_r. y is the descriptor's y.
CoadjointPoint canonical_representative(const OrbitDescriptor& d);

// (q-1)^(n-m-1) q^nu orbits share the partition P.
BigInt orbits_for_partition(const Composition& part, std::uint32_t q);

// Every orbit once: partitions in lexicographic order of parts, then y in
// lexicographic order, then the v_r in lexicographic order.
std::vector<OrbitDescriptor> enumerate_descriptors(int n, std::uint32_t p,
                                                   std::uint64_t budget = kDefaultBudget);

// q^(n-k-1) (q-1)^k (C(n-k-1, k) q + C(n-k-1, k-1)) orbits of dimension 2k.
BigInt count_by_dimension(int n, std::uint32_t q, int k);

// Compositions of n with mu even and nu odd parts:
// C(mu+nu, mu) C((n+nu)/2 - 1, mu+nu-1).
BigInt count_partitions_even_odd(int n, int mu, int nu);

}  // namespace tdorbit
