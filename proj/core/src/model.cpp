#include "tdorbit/model.hpp"

#include "tdorbit/error.hpp"
#include "tdorbit/parallel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace tdorbit {

bool Container::in_minus(int i) const { return std::binary_search(minus.begin(), minus.end(), i); }

bool Container::in_stabilizer(const GroupElement& g) const {
    for (int i : minus)
        if (!g.alpha(i).is_zero()) return false;
    return true;
}

Container make_container(int n, const SparseSequence& I) {
    auto nb = iminus_iplus(I, n);
    return Container{n, I, std::move(nb.minus), std::move(nb.plus)};
}

void validate(const StabCharacter& chi, const Container& c) {
    const int n = c.n;
    if (static_cast<int>(chi.A.size()) != n || static_cast<int>(chi.B.size()) != n - 1)
        throw InvalidStabCharacter("coefficient vectors have the wrong length");
    if (chi.I != c.I) throw InvalidStabCharacter("character belongs to " + chi.I.str());
    for (int i : c.minus)
        if (!chi.A[i - 1].is_zero())
            throw InvalidStabCharacter("A_" + std::to_string(i) + " != 0 with " + std::to_string(i) +
                                       " in I^-");
    for (int j = 1; j < n; ++j)
        if (c.in_plus(j) && c.in_plus(j + 1) && !chi.B[j - 1].is_zero())
            throw InvalidStabCharacter("B_" + std::to_string(j) + " != 0 with " + std::to_string(j) +
                                       ", " + std::to_string(j + 1) + " in I^+");
}

CycInt stab_value(const StabCharacter& chi, const GroupElement& g) {
    const auto p = g.p();
    FieldElement phase = FieldElement::zero(p);
    for (int i = 1; i <= g.n(); ++i) phase += chi.A[i - 1] * g.alpha(i);
    for (int j = 1; j < g.n(); ++j) phase += chi.B[j - 1] * g.beta(j);
    return e_char(phase);
}

CycInt induced_value(const Container& c, const StabCharacter& chi, const GroupElement& g) {
    validate(chi, c);
    const int n = c.n;
    const auto p = g.p();
    if (!c.in_stabilizer(g)) return CycInt::zero(p);
    const auto zero = FieldElement::zero(p);
    auto a = [&](int i) { return i >= 1 && i <= n ? g.alpha(i) : zero; };
    auto B = [&](int j) { return j >= 1 && j < n ? chi.B[j - 1] : zero; };
    for (int j : c.minus)
        if (B(j - 1) * a(j - 1) != B(j) * a(j + 1)) return CycInt::zero(p);
    std::int64_t scale = 1;
    for (std::size_t s = 0; s < c.minus.size(); ++s) scale *= p;
    return stab_value(chi, g).scaled(scale);
}

Character induced_character(const Container& c, const StabCharacter& chi, const ClassTable& table) {
    validate(chi, c);
    std::uint64_t dim = 1;
    for (std::size_t s = 0; s < c.minus.size(); ++s) dim *= table.p();
    Character ch{table.n(), table.p(), dim, {}};
    ch.values.reserve(table.size());
    for (const auto& g : table.representatives()) ch.values.push_back(induced_value(c, chi, g));
    return ch;
}

MClassCensus m_classes(int n, std::uint32_t p, std::uint64_t budget) {
    require_prime(p);
    MClassCensus census;
    for (const auto& I : sparse_sequences(n)) census.containers.push_back(make_container(n, I));
    for (std::size_t ci = 0; ci < census.containers.size(); ++ci) {
        const auto& c = census.containers[ci];
        const auto& idx = c.I.indices;
        // Nonzero values on I, lexicographic.
        std::vector<std::uint32_t> vals(idx.size(), 1);
        while (true) {
            FqVector a = zero_vector(n, p);
            for (std::size_t s = 0; s < idx.size(); ++s) a[idx[s] - 1] = FieldElement(vals[s], p);
            std::vector<std::size_t> pivots;
            if (n > 1) pivots = image_and_coset(b_shift_matrix(a), zero_vector(n - 1, p)).pivots;
            std::vector<bool> is_pivot(n > 1 ? n - 1 : 0, false);
            for (auto v : pivots) is_pivot[v] = true;
            std::vector<int> free;
            for (int j = 0; j + 1 < n; ++j)
                if (!is_pivot[j]) free.push_back(j);
            const std::uint64_t reps = checked_power(p, static_cast<unsigned>(free.size()), budget, "M-classes");
            const std::uint64_t size = checked_power(p, static_cast<unsigned>(pivots.size()), budget, "class size");
            if (census.classes.size() + reps > budget) throw BudgetExceeded("M-class census");
            for (std::uint64_t r = 0; r < reps; ++r) {
                FqVector b = zero_vector(n - 1, p);
                std::uint64_t rest = r;
                for (std::size_t s = free.size(); s-- > 0;) {
                    b[free[s]] = FieldElement(static_cast<std::int64_t>(rest % p), p);
                    rest /= p;
                }
                GroupElement g(a, b);
                census.classes.push_back(MClass{ci, ClassDescriptor{n, p, a, b}, named_invariants(g), size});
            }
            // Odometer over the nonzero values.
            std::size_t s = idx.size();
            while (s > 0 && vals[s - 1] == p - 1) vals[--s] = 1;
            if (s == 0) break;
            ++vals[s - 1];
        }
    }
    return census;
}

namespace {

struct SlotLayout {
    std::vector<int> a_slots_B;  // B indices fed by a-invariants
    std::vector<int> a_slots_A;  // A indices fed by a-invariants (all-ones odd flock)
    // (index, is_B) slots fed by b-invariants, sorted by index, A before B.
    std::vector<std::pair<int, bool>> b_slots;
};

SlotLayout layout_for(const Flock& f, const Container& c) {
    const int n = f.n();
    SlotLayout lay;
    const auto starts = f.tail.starts();
    const auto& parts = f.tail.parts();
    const auto head_div = f.head.dividers();
    std::set<int> dotted(f.dotted_dividers.begin(), f.dotted_dividers.end());
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (int i = starts[r]; i < starts[r] + parts[r] - 1; ++i) lay.a_slots_B.push_back(i);
        if (parts[r] % 2 == 1 && c.in_plus(starts[r])) lay.b_slots.emplace_back(starts[r], false);
    }
    for (int d : dotted) lay.b_slots.emplace_back(d, true);
    std::sort(lay.b_slots.begin(), lay.b_slots.end());
    std::sort(lay.a_slots_B.begin(), lay.a_slots_B.end());

    if (f.k() == 0) {
        // No tail pieces longer than 1: the all-ones flocks.
        if (f.type == FlockType::Odd) {
            lay.a_slots_A.push_back(1);
        }
        lay.b_slots.erase(std::remove(lay.b_slots.begin(), lay.b_slots.end(), std::make_pair(1, false)),
                          lay.b_slots.end());
    }
    (void)n;
    return lay;
}

}  // namespace

std::vector<ModelAssignment> assign_characters(const MClassCensus& census, int n, std::uint32_t p) {
    // Container -> flock.
    std::map<SparseSequence, Flock> flock_for;
    for (auto t : {FlockType::Odd, FlockType::Even})
        for (auto& f : all_flocks(n, t)) {
            auto I = container_of_flock(f);
            if (!flock_for.emplace(I, f).second)
                throw SlotCountMismatch("two flocks share container " + I.str());
        }

    std::vector<SlotLayout> layouts;
    for (const auto& c : census.containers) {
        auto it = flock_for.find(c.I);
        if (it == flock_for.end()) throw SlotCountMismatch("no flock for container " + c.I.str());
        layouts.push_back(layout_for(it->second, c));
    }

    std::vector<ModelAssignment> out;
    out.reserve(census.classes.size());
    for (std::size_t mi = 0; mi < census.classes.size(); ++mi) {
        const auto& mc = census.classes[mi];
        const auto& c = census.containers[mc.container];
        const auto& lay = layouts[mc.container];
        const auto& I = c.I.indices;
        if (lay.a_slots_B.size() + lay.a_slots_A.size() != I.size())
            throw SlotCountMismatch(c.I.str() + ": " + std::to_string(I.size()) + " a-invariants for " +
                                    std::to_string(lay.a_slots_B.size() + lay.a_slots_A.size()) + " slots");
        if (lay.b_slots.size() != mc.b_invariants.size())
            throw SlotCountMismatch(c.I.str() + ": " + std::to_string(mc.b_invariants.size()) +
                                    " b-invariants for " + std::to_string(lay.b_slots.size()) + " slots");

        ModelAssignment as{mi, flock_for.at(c.I), StabCharacter{c.I, zero_vector(n, p), zero_vector(n - 1, p)}, {}};
        std::size_t next_a = 0;
        for (int i : lay.a_slots_A) {
            as.chi.A[i - 1] = mc.cls.a[I[next_a] - 1];
            as.slots.push_back({"A" + std::to_string(i), "a" + std::to_string(I[next_a])});
            ++next_a;
        }
        for (int j : lay.a_slots_B) {
            as.chi.B[j - 1] = mc.cls.a[I[next_a] - 1];
            as.slots.push_back({"B" + std::to_string(j), "a" + std::to_string(I[next_a])});
            ++next_a;
        }
        auto binv = mc.b_invariants;
        std::stable_sort(binv.begin(), binv.end(),
                         [](const NamedInvariant& x, const NamedInvariant& y) { return x.lowest_b < y.lowest_b; });
        for (std::size_t s = 0; s < lay.b_slots.size(); ++s) {
            const auto [idx, is_b] = lay.b_slots[s];
            (is_b ? as.chi.B[idx - 1] : as.chi.A[idx - 1]) = binv[s].value;
            as.slots.push_back({(is_b ? "B" : "A") + std::to_string(idx), binv[s].label});
        }
        validate(as.chi, c);
        out.push_back(std::move(as));
    }
    return out;
}

Character build_model(const MClassCensus& census, const std::vector<ModelAssignment>& assignments,
                      const ClassTable& table, unsigned jobs) {
    std::vector<Character> parts(assignments.size());
    parallel_for(assignments.size(), jobs, [&](std::size_t i) {
        const auto& as = assignments[i];
        parts[i] = induced_character(census.containers[census.classes[as.m_class].container], as.chi, table);
    });
    Character model{table.n(), table.p(), 0, std::vector<CycInt>(table.size(), CycInt::zero(table.p()))};
    for (const auto& ch : parts) {
        model.dim += ch.dim;
        for (std::size_t k = 0; k < ch.values.size(); ++k) model.values[k] += ch.values[k];
    }
    return model;
}

ModelReport multiplicity_report(const Character& model, const std::vector<Character>& irreducibles,
                                const ClassTable& table) {
    ModelReport rep{{}, {}, model.dim, 0};
    for (std::size_t i = 0; i < irreducibles.size(); ++i) {
        rep.irreducible_dimension_sum += irreducibles[i].dim;
        rep.multiplicities.push_back(inner(model, irreducibles[i], table));
        if (!rep.multiplicities.back().is_integer(1)) rep.deviations.push_back(i);
    }
    return rep;
}

ModelReport verify_model(int n, std::uint32_t p, unsigned jobs, std::uint64_t budget) {
    const ClassTable table(n, p, budget);
    const auto census = m_classes(n, p, budget);
    const auto assignments = assign_characters(census, n, p);
    const auto model = build_model(census, assignments, table, jobs);
    const auto irreducibles = character_table(table, jobs, budget);
    return multiplicity_report(model, irreducibles, table);
}

ContainerCounts count_container(const Container& c, std::uint32_t p, std::uint64_t budget) {
    const int n = c.n;
    const auto& idx = c.I.indices;
    const std::uint64_t b_total = checked_power(p, static_cast<unsigned>(n - 1), budget, "b vectors");
    ContainerCounts out{0, 0, 0, 0};
    std::map<std::vector<std::uint32_t>, std::uint64_t> class_sizes;
    std::set<std::size_t> inv_counts;
    std::vector<GroupElement> reps;
    std::vector<std::uint32_t> vals(idx.size(), 1);
    while (true) {
        FqVector a = zero_vector(n, p);
        for (std::size_t s = 0; s < idx.size(); ++s) a[idx[s] - 1] = FieldElement(vals[s], p);
        for (std::uint64_t bi = 0; bi < b_total; ++bi) {
            FqVector b = zero_vector(n - 1, p);
            std::uint64_t rest = bi;
            for (int j = n - 2; j >= 0; --j) {
                b[j] = FieldElement(static_cast<std::int64_t>(rest % p), p);
                rest /= p;
            }
            GroupElement g(a, b);
            const auto d = class_of(g);
            auto key = values_of(d.a);
            for (auto v : values_of(d.b_coset)) key.push_back(v);
            if (class_sizes[key]++ == 0) {
                reps.push_back(d.representative());
                inv_counts.insert(named_invariants(g).size());
            }
        }
        std::size_t s = idx.size();
        while (s > 0 && vals[s - 1] == p - 1) vals[--s] = 1;
        if (s == 0) break;
        ++vals[s - 1];
    }
    out.classes = class_sizes.size();
    std::set<std::uint64_t> sizes;
    for (const auto& [k, v] : class_sizes) sizes.insert(v);
    out.class_size = sizes.size() == 1 ? BigInt(*sizes.begin()) : BigInt(0);
    out.b_invariants = inv_counts.size() == 1 ? BigInt(*inv_counts.begin()) : BigInt(-1);

    // Centralizer of the first representative; beta is central so only alpha matters.
    const std::uint64_t a_total = checked_power(p, static_cast<unsigned>(n), budget, "alpha vectors");
    std::uint64_t fixing = 0;
    for (std::uint64_t ai = 0; ai < a_total; ++ai) {
        FqVector al = zero_vector(n, p);
        std::uint64_t rest = ai;
        for (int i = n - 1; i >= 0; --i) {
            al[i] = FieldElement(static_cast<std::int64_t>(rest % p), p);
            rest /= p;
        }
        const GroupElement y(al, zero_vector(n - 1, p));
        if (conjugate(reps.front(), y) == reps.front()) ++fixing;
    }
    out.stabilizer = BigInt(fixing) * BigInt(b_total);
    return out;
}

}  // namespace tdorbit
