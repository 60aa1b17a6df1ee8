#include "tdorbit/oracle.hpp"

#include "tdorbit/error.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <map>

namespace tdorbit::oracle {
namespace {

std::vector<GroupElement> alpha_generators(int n, std::uint32_t p, std::uint64_t budget) {
    const std::uint64_t count = checked_power(p, static_cast<unsigned>(n), budget, "generators");
    std::vector<GroupElement> gens;
    gens.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        FqVector a = zero_vector(n, p);
        std::uint64_t rest = i;
        for (int j = n - 1; j >= 0; --j) {
            a[j] = FieldElement(static_cast<std::int64_t>(rest % p), p);
            rest /= p;
        }
        gens.emplace_back(std::move(a), zero_vector(n - 1, p));
    }
    return gens;
}

template <typename Step>
PartitionOfSet closure(std::uint64_t universe, std::size_t generators, Step step) {
    std::vector<std::size_t> rank(universe), parent(universe);
    boost::disjoint_sets<std::size_t*, std::size_t*> ds(rank.data(), parent.data());
    for (std::uint64_t i = 0; i < universe; ++i) ds.make_set(i);
    for (std::uint64_t i = 0; i < universe; ++i)
        for (std::size_t g = 0; g < generators; ++g) ds.union_set(i, step(i, g));
    // Canonical block label: minimum member.
    std::vector<std::uint64_t> min_of(universe, universe);
    for (std::uint64_t i = 0; i < universe; ++i) {
        auto r = ds.find_set(i);
        if (min_of[r] == universe) min_of[r] = i;
    }
    PartitionOfSet out;
    out.block.resize(universe);
    for (std::uint64_t i = 0; i < universe; ++i) out.block[i] = min_of[ds.find_set(i)];
    return out;
}

}  // namespace

std::size_t PartitionOfSet::block_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < block.size(); ++i)
        if (block[i] == i) ++c;
    return c;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PartitionOfSet::block_sizes() const {
    std::map<std::uint64_t, std::uint64_t> sizes;
    for (auto b : block) ++sizes[b];
    return {sizes.begin(), sizes.end()};
}

std::uint64_t point_index(const CoadjointPoint& f) {
    const auto p = f.p();
    std::uint64_t idx = 0;
    for (const auto& v : f.x) idx = idx * p + v.value();
    for (const auto& v : f.y) idx = idx * p + v.value();
    return idx;
}

CoadjointPoint point_at(int n, std::uint32_t p, std::uint64_t index) {
    std::vector<std::int64_t> digits(2 * n - 1);
    for (int i = 2 * n - 2; i >= 0; --i) {
        digits[i] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    return CoadjointPoint::from_values({digits.begin(), digits.begin() + n},
                                       {digits.begin() + n, digits.end()}, p);
}

PartitionOfSet brute_coadjoint_orbits(int n, std::uint32_t p, std::uint64_t budget) {
    const std::uint64_t universe = group_order(n, p, budget);
    const auto gens = alpha_generators(n, p, budget);
    if (universe > budget / gens.size()) throw BudgetExceeded("coadjoint closure work");
    std::vector<CoadjointPoint> points;
    points.reserve(universe);
    for (std::uint64_t i = 0; i < universe; ++i) points.push_back(point_at(n, p, i));
    return closure(universe, gens.size(), [&](std::uint64_t i, std::size_t g) {
        return point_index(coadjoint_act(gens[g], points[i]));
    });
}

PartitionOfSet brute_conjugacy_classes(int n, std::uint32_t p, std::uint64_t budget) {
    const std::uint64_t universe = group_order(n, p, budget);
    const auto gens = alpha_generators(n, p, budget);
    if (universe > budget / gens.size()) throw BudgetExceeded("conjugation closure work");
    std::vector<GroupElement> inv;
    for (const auto& g : gens) inv.push_back(inverse(g));
    const auto elements = enumerate_group(n, p, budget);
    return closure(universe, gens.size(), [&](std::uint64_t i, std::size_t g) {
        return element_index(multiply(multiply(inv[g], elements[i]), gens[g]));
    });
}

std::vector<CycInt> brute_induce(int n, std::uint32_t p, const Membership& in_h,
                                 const SubgroupCharacter& chi,
                                 const std::vector<GroupElement>& at, std::uint64_t budget) {
    const auto elements = enumerate_group(n, p, budget);
    if (elements.size() > budget / std::max<std::size_t>(at.size(), 1))
        throw BudgetExceeded("Frobenius sum work");
    std::vector<GroupElement> inv;
    inv.reserve(elements.size());
    for (const auto& t : elements) inv.push_back(inverse(t));
    std::int64_t h_order = 0;
    for (const auto& t : elements)
        if (in_h(t)) ++h_order;

    std::vector<CycInt> out;
    out.reserve(at.size());
    for (const auto& s : at) {
        CycInt acc(p);
        for (std::size_t t = 0; t < elements.size(); ++t) {
            const GroupElement c = multiply(multiply(inv[t], s), elements[t]);
            if (in_h(c)) acc += chi(c);
        }
        out.push_back(acc.divided_exactly(h_order));
    }
    return out;
}

}  // namespace tdorbit::oracle
