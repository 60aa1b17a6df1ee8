#include "verify.hpp"

#include "tdorbit/classes.hpp"
#include "tdorbit/error.hpp"
#include "tdorbit/model.hpp"
#include "tdorbit/oracle.hpp"
#include "tdorbit/orbits.hpp"
#include "tdorbit/partitions.hpp"
#include "tdorbit/reps.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace tdorbit::cli {
namespace {

// log_q of a power of q; -1 if s is not one.
int log_q(std::uint64_t s, std::uint32_t q) {
    int e = 0;
    while (s > 1) {
        if (s % q != 0) return -1;
        s /= q;
        ++e;
    }
    return s == 1 ? e : -1;
}

std::map<int, BigInt> by_dimension(const oracle::PartitionOfSet& part, std::uint32_t q, int scale) {
    std::map<int, BigInt> out;
    for (const auto& [rep, size] : part.block_sizes()) out[scale * log_q(size, q)] += 1;
    return out;
}

template <typename M>
std::string show(const M& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [k, v] : m) {
        os << (first ? "" : ", ") << k << ": " << v;
        first = false;
    }
    os << '}';
    return os.str();
}

struct Suite {
    std::string name;
    std::vector<Check> checks;
    void add(std::string check, bool pass, std::string detail = {}) {
        checks.push_back({name, std::move(check), pass, std::move(detail)});
    }
};

std::vector<Check> orbits_suite(const VerifyOptions& o) {
    Suite s{"orbits", {}};
    std::map<int, BigInt> closed;
    for (int k = 0; 2 * k <= o.n; ++k) {
        auto c = count_by_dimension(o.n, o.q, k);
        if (c != 0) closed[2 * k] = c;
    }
    std::map<int, BigInt> enumerated;
    const auto descriptors = enumerate_descriptors(o.n, o.q, o.budget);
    for (const auto& d : descriptors) enumerated[dimension(d)] += 1;
    const auto brute = by_dimension(oracle::brute_coadjoint_orbits(o.n, o.q, o.budget), o.q, 1);
    s.add("closed form = enumeration", closed == enumerated, show(closed) + " vs " + show(enumerated));
    s.add("closed form = brute force", closed == brute, show(closed) + " vs " + show(brute));

    bool roundtrip = true;
    for (const auto& d : descriptors) roundtrip = roundtrip && classify(canonical_representative(d)) == d;
    s.add("canonical representatives classify back", roundtrip);

    BigInt per_partition = 0;
    for (const auto& c : all_compositions(o.n)) per_partition += orbits_for_partition(c, o.q);
    s.add("per-partition counts sum to total", per_partition == BigInt(descriptors.size()));
    return s.checks;
}

std::vector<Check> classes_suite(const VerifyOptions& o) {
    Suite s{"classes", {}};
    const auto strings = count_classes_by_strings(o.n, o.q, o.budget);
    if (o.n >= 2) {
        const auto rec = count_classes_recursive(o.n, o.q);
        s.add("recursion = dot-string sum", rec == strings);
    }
    std::map<int, BigInt> from_strings;
    for (int k = 0; k < o.n; ++k)
        if (strings.total(k) != 0) from_strings[k] = strings.total(k);
    const auto brute = by_dimension(oracle::brute_conjugacy_classes(o.n, o.q, o.budget), o.q, 1);
    s.add("dot-string sum = brute force", from_strings == brute, show(from_strings) + " vs " + show(brute));

    const ClassTable table(o.n, o.q, o.budget);
    s.add("class table size = brute force", BigInt(table.size()) == strings.grand_total());
    BigInt orbits = 0;
    for (int k = 0; 2 * k <= o.n; ++k) orbits += count_by_dimension(o.n, o.q, k);
    s.add("orbit total = class total", orbits == strings.grand_total());
    return s.checks;
}

std::vector<Check> chars_suite(const VerifyOptions& o) {
    Suite s{"chars", {}};
    const ClassTable table(o.n, o.q, o.budget);
    const auto descriptors = enumerate_descriptors(o.n, o.q, o.budget);
    const auto chars = character_table(table, o.jobs, o.budget);

    const auto elements = enumerate_group(o.n, o.q, o.budget);
    if (elements.size() * descriptors.size() > o.budget) throw BudgetExceeded("trace check");
    bool trace_ok = true;
    for (const auto& d : descriptors) {
        const IrreducibleRepresentation rep(d);
        for (const auto& g : elements) trace_ok = trace_ok && rep.matrix(g).trace() == rep.value(g);
    }
    s.add("closed form = trace on every element", trace_ok);

    bool ortho = true;
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = i; j < chars.size(); ++j)
            ortho = ortho && inner(chars[i], chars[j], table).is_integer(i == j ? 1 : 0);
    s.add("characters are orthonormal", ortho);

    BigInt squares = 0;
    for (const auto& c : chars) squares += BigInt(c.dim) * c.dim;
    s.add("sum of squared dimensions = |G|", squares == BigInt(table.group_order()));
    s.add("completeness identity", completeness_check(o.n, o.q).ok());

    // Homomorphism: exhaustive when small, random pairs otherwise.
    const std::uint64_t pairs = elements.size() * elements.size();
    bool hom = true;
    std::mt19937_64 rng(o.seed);
    const bool exhaustive = pairs * descriptors.size() <= o.budget;
    const std::uint64_t trials = exhaustive ? pairs : o.random_pairs;
    std::vector<IrreducibleRepresentation> reps;
    for (const auto& d : descriptors) reps.emplace_back(d);
    for (std::uint64_t t = 0; t < trials && hom; ++t) {
        const GroupElement g1 = exhaustive ? elements[t / elements.size()] : random_element(o.n, o.q, rng);
        const GroupElement g2 = exhaustive ? elements[t % elements.size()] : random_element(o.n, o.q, rng);
        const GroupElement g12 = multiply(g1, g2);
        for (const auto& r : reps) hom = hom && r.matrix(g12) == r.matrix(g1) * r.matrix(g2);
    }
    s.add(exhaustive ? "homomorphism on all pairs" : "homomorphism on random pairs", hom,
          std::to_string(trials) + " pairs");
    return s.checks;
}

std::vector<Check> model_suite(const VerifyOptions& o) {
    Suite s{"model", {}};
    const ClassTable table(o.n, o.q, o.budget);
    const auto census = m_classes(o.n, o.q, o.budget);
    const auto assignments = assign_characters(census, o.n, o.q);
    const auto chars = character_table(table, o.jobs, o.budget);
    const auto model = build_model(census, assignments, table, o.jobs);
    const auto report = multiplicity_report(model, chars, table);
    s.add("every multiplicity is 1", report.ok(),
          std::to_string(report.deviations.size()) + " deviations among " + std::to_string(chars.size()));

    bool commutator_slots = true;
    for (const auto& a : assignments) {
        const auto& c = census.containers[census.classes[a.m_class].container];
        for (int j = 1; j < o.n; ++j)
            if (c.in_plus(j) && c.in_plus(j + 1)) commutator_slots = commutator_slots && a.chi.B[j - 1].is_zero();
    }
    s.add("no B on commutator slots", commutator_slots);

    bool props = true;
    std::string failing;
    for (const auto& c : census.containers) {
        const auto counts = count_container(c, o.q, o.budget);
        const auto q = BigInt(o.q);
        const auto expect_classes =
            ipow(q - 1, c.I.indices.size()) * ipow(q, static_cast<unsigned>(c.plus.size() - 1));
        const bool ok = counts.classes == expect_classes &&
                        counts.class_size == ipow(q, static_cast<unsigned>(c.minus.size())) &&
                        counts.stabilizer == ipow(q, static_cast<unsigned>(o.n - 1 + c.plus.size())) &&
                        counts.b_invariants == BigInt(c.plus.size() - 1);
        if (!ok && failing.empty()) failing = c.I.str();
        props = props && ok;
    }
    s.add("container cardinalities", props, failing);
    s.add("container count = F_{n+2}", BigInt(census.containers.size()) == fibonacci(o.n + 2));

    // Closed-form induction against the Frobenius sum on random characters.
    std::mt19937_64 rng(o.seed);
    bool induce = true;
    for (const auto& c : census.containers) {
        StabCharacter chi{c.I, zero_vector(o.n, o.q), zero_vector(o.n - 1, o.q)};
        std::uniform_int_distribution<std::uint32_t> val(0, o.q - 1);
        for (int i : c.plus) chi.A[i - 1] = FieldElement(val(rng), o.q);
        for (int j = 1; j < o.n; ++j)
            if (!(c.in_plus(j) && c.in_plus(j + 1))) chi.B[j - 1] = FieldElement(val(rng), o.q);
        const auto closed = induced_character(c, chi, table);
        const auto brute = oracle::brute_induce(
            o.n, o.q, [&](const GroupElement& g) { return c.in_stabilizer(g); },
            [&](const GroupElement& g) { return stab_value(chi, g); }, table.representatives(), o.budget);
        induce = induce && closed.values == brute;
    }
    s.add("closed-form induction = Frobenius sum", induce);

    // Negative control: drop one nontrivial assigned character to the trivial one.
    auto mutated = assignments;
    auto it = std::find_if(mutated.begin(), mutated.end(), [](const ModelAssignment& a) {
        return std::any_of(a.chi.A.begin(), a.chi.A.end(), [](auto& v) { return !v.is_zero(); }) ||
               std::any_of(a.chi.B.begin(), a.chi.B.end(), [](auto& v) { return !v.is_zero(); });
    });
    if (it != mutated.end()) {
        std::fill(it->chi.A.begin(), it->chi.A.end(), FieldElement::zero(o.q));
        std::fill(it->chi.B.begin(), it->chi.B.end(), FieldElement::zero(o.q));
        const auto broken = multiplicity_report(build_model(census, mutated, table, o.jobs), chars, table);
        s.add("mutated assignment breaks multiplicity one", !broken.ok());
    }
    return s.checks;
}

std::vector<Check> combinatorics_suite(const VerifyOptions& o) {
    Suite s{"combinatorics", {}};
    const int n = o.n;
    const auto comps = all_compositions(n);
    std::uint64_t even = 0, odd = 0, ones_twos = 0, all_odd = 0;
    for (const auto& c : comps) {
        const auto t = type_of(c);
        even += t != PartitionType::Odd;
        odd += t != PartitionType::Even;
        ones_twos += std::all_of(c.parts().begin(), c.parts().end(), [](int x) { return x <= 2; });
        all_odd += c.even_parts() == 0;
    }
    s.add("Q_even closed form", even == q_even(n), std::to_string(even));
    s.add("Q_odd closed form", odd == q_odd(n), std::to_string(odd));
    s.add("parts 1 and 2 count F_{n+1}", BigInt(ones_twos) == fibonacci(n + 1) && ones_twos == count_ones_twos(n));
    s.add("odd parts count F_n", BigInt(all_odd) == fibonacci(n) && all_odd == count_all_odd(n));
    s.add("sparse sequences count F_{n+2}", BigInt(sparse_sequences(n).size()) == fibonacci(n + 2));

    bool partition_ok = true;
    std::vector<SparseSequence> seen;
    for (auto t : {FlockType::Odd, FlockType::Even}) {
        std::map<std::uint64_t, int> hits;
        for (const auto& f : all_flocks(n, t)) {
            const auto members = f.members();
            const std::size_t expect = f.k() >= 1 ? std::size_t{1} << (f.k() - 1) : 1;
            partition_ok = partition_ok && members.size() == expect;
            for (const auto& m : members) ++hits[m.mask()];
            seen.push_back(container_of_flock(f));
        }
        for (const auto& c : comps)
            if (has_type(c, t)) partition_ok = partition_ok && hits[c.mask()] == 1;
        std::size_t typed = 0;
        for (const auto& c : comps) typed += has_type(c, t);
        partition_ok = partition_ok && hits.size() == typed;
    }
    s.add("flocks partition each type", partition_ok);
    auto sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    auto all = sparse_sequences(n);
    std::sort(all.begin(), all.end());
    s.add("containers biject with flocks", sorted == all &&
                                               BigInt(all_flocks(n, FlockType::Odd).size()) == fibonacci(n) &&
                                               BigInt(all_flocks(n, FlockType::Even).size()) == fibonacci(n + 1));
    return s.checks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"orbits", "classes", "chars", "model", "combinatorics"};
    return names;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& opt) {
    if (suite == "all") {
        std::vector<Check> out;
        for (const auto& s : suite_names()) {
            auto part = run_suite(s, opt);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (suite == "orbits") return orbits_suite(opt);
    if (suite == "classes") return classes_suite(opt);
    if (suite == "chars") return chars_suite(opt);
    if (suite == "model") return model_suite(opt);
    if (suite == "combinatorics") return combinatorics_suite(opt);
    throw OutOfRange("unknown suite " + suite);
}

}  // namespace tdorbit::cli
