// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "tdorbit/classes.hpp"
#include "tdorbit/error.hpp"
#include "tdorbit/model.hpp"
#include "tdorbit/oracle.hpp"
#include "tdorbit/orbits.hpp"
#include "tdorbit/partitions.hpp"
#include "tdorbit/reps.hpp"

#include "flock_diagrams.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>

using namespace tdorbit;

namespace {

using Pairs = std::vector<std::pair<int, std::uint32_t>>;

const Pairs kOrbitSet = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}};
const Pairs kCharSet = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};

unsigned jobs() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

// Records the first failure so the summary line can name it.
struct Outcome {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why = what;
        }
    }
};

std::string label(int n, std::uint32_t q) { return "(" + std::to_string(n) + "," + std::to_string(q) + ")"; }

std::map<int, BigInt> blocks_by_log(const oracle::PartitionOfSet& part, std::uint32_t q) {
    std::map<int, BigInt> out;
    for (const auto& [rep, size] : part.block_sizes()) {
        int d = 0;
        for (auto s = size; s > 1; s /= q) ++d;
        out[d] += 1;
    }
    return out;
}

std::map<int, BigInt> closed_orbits(int n, std::uint32_t q) {
    std::map<int, BigInt> out;
    for (int k = 0; 2 * k <= n; ++k) {
        const auto c = count_by_dimension(n, q, k);
        if (c != 0) out[2 * k] = c;
    }
    return out;
}

std::map<int, BigInt> string_classes(int n, std::uint32_t q) {
    std::map<int, BigInt> out;
    const auto t = count_classes_by_strings(n, q);
    for (int k = 0; k < n; ++k)
        if (t.total(k) != 0) out[k] = t.total(k);
    return out;
}

BigInt total(const std::map<int, BigInt>& m) {
    BigInt s = 0;
    for (const auto& [k, v] : m) s += v;
    return s;
}

Outcome orbit_counts() {
    Outcome o;
    for (auto [n, q] : kOrbitSet) {
        const auto closed = closed_orbits(n, q);
        std::map<int, BigInt> enumerated;
        for (const auto& d : enumerate_descriptors(n, q)) enumerated[dimension(d)] += 1;
        const auto brute = blocks_by_log(oracle::brute_coadjoint_orbits(n, q), q);
        o.require(closed == enumerated, "closed form vs enumeration at " + label(n, q));
        o.require(closed == brute, "closed form vs brute force at " + label(n, q));
    }
    const std::map<int, BigInt> example{{0, 8}, {2, 6}};
    o.require(closed_orbits(3, 2) == example, "n=3, q=2 example");
    return o;
}

Outcome class_counts() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u, 5u})
        for (int n = 4; n <= 15; ++n)
            o.require(count_classes_recursive(n, q) == count_classes_by_strings(n, q),
                      "recursion vs strings at " + label(n, q));
    for (auto [n, q] : kOrbitSet) {
        const auto brute = blocks_by_log(oracle::brute_conjugacy_classes(n, q), q);
        o.require(string_classes(n, q) == brute, "strings vs brute force at " + label(n, q));
        if (n >= 2) {
            const auto rec = count_classes_recursive(n, q);
            std::map<int, BigInt> r;
            for (int k = 0; k < n; ++k)
                if (rec.total(k) != 0) r[k] = rec.total(k);
            o.require(r == brute, "recursion vs brute force at " + label(n, q));
        }
    }
    // Three-dot table as polynomials in q, sampled at several primes; the
    // two-dot values d_2^o(1) = q-1, d_2^*(1) = q(q-1) alongside.
    for (long q : {2, 3, 5, 7}) {
        const auto t = count_classes_by_strings(3, static_cast<std::uint32_t>(q));
        o.require(t.light == std::vector<BigInt>{q * q, q * (q - 1), q * (q - 1)}, "three-dot light row");
        o.require(t.heavy == std::vector<BigInt>{0, q * q * (q - 1), q * (q - 1) * (q - 1)}, "three-dot heavy row");
        o.require(t.total(0) == q * q && t.total(1) == q * (q * q - 1) && t.total(2) == q * q * (q - 1),
                  "three-dot totals");
        const auto two = count_classes_by_strings(2, static_cast<std::uint32_t>(q));
        o.require(two.light == std::vector<BigInt>{q, q - 1} && two.heavy == std::vector<BigInt>{0, q * (q - 1)},
                  "two-dot values");
    }
    return o;
}

Outcome orbits_equal_classes() {
    Outcome o;
    for (auto [n, q] : kOrbitSet) {
        const auto orbits = oracle::brute_coadjoint_orbits(n, q).block_count();
        const auto classes = oracle::brute_conjugacy_classes(n, q).block_count();
        o.require(orbits == classes, "brute totals differ at " + label(n, q));
        o.require(total(closed_orbits(n, q)) == total(string_classes(n, q)), "formula totals differ at " + label(n, q));
    }
    return o;
}

Outcome character_table_checks() {
    Outcome o;
    for (auto [n, q] : kCharSet) {
        const ClassTable table(n, q);
        const auto descriptors = enumerate_descriptors(n, q);
        const auto all = enumerate_group(n, q);
        for (const auto& d : descriptors) {
            const IrreducibleRepresentation rep(d);
            for (const auto& g : all)
                o.require(rep.matrix(g).trace() == rep.value(g), "trace vs closed form at " + label(n, q));
        }
        const auto chars = character_table(table, jobs());
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j)
                o.require(inner(chars[i], chars[j], table).is_integer(i == j ? 1 : 0), "orthonormality at " + label(n, q));
        BigInt squares = 0;
        for (const auto& c : chars) squares += BigInt(c.dim) * c.dim;
        o.require(squares == ipow(BigInt(q), static_cast<unsigned>(2 * n - 1)), "sum of squares at " + label(n, q));
    }
    for (std::uint32_t q : {2u, 3u, 5u, 7u})
        for (int n = 1; n <= 12; ++n) o.require(completeness_check(n, q).ok(), "completeness identity at " + label(n, q));
    return o;
}

Outcome homomorphism() {
    Outcome o;
    for (auto [n, q] : Pairs{{2, 2}, {2, 3}, {3, 2}}) {
        const auto all = enumerate_group(n, q);
        for (const auto& d : enumerate_descriptors(n, q)) {
            const IrreducibleRepresentation rep(d);
            for (const auto& g : all)
                for (const auto& h : all)
                    o.require(rep.matrix(multiply(g, h)) == rep.matrix(g) * rep.matrix(h), "exhaustive at " + label(n, q));
        }
    }
    std::mt19937_64 rng(20240611);
    for (auto [n, q] : Pairs{{4, 2}, {3, 3}}) {
        std::vector<IrreducibleRepresentation> reps;
        for (const auto& d : enumerate_descriptors(n, q)) reps.emplace_back(d);
        for (int t = 0; t < 10000; ++t) {
            const auto g = random_element(n, q, rng), h = random_element(n, q, rng);
            const auto gh = multiply(g, h);
            for (const auto& rep : reps)
                o.require(rep.matrix(gh) == rep.matrix(g) * rep.matrix(h), "random pairs at " + label(n, q));
        }
    }
    return o;
}

Outcome combinatorics() {
    Outcome o;
    const std::vector<std::uint64_t> even_table{1, 2, 3, 6, 11}, odd_table{1, 1, 2, 3, 6};
    for (int n = 1; n <= 5; ++n)
        o.require(q_even(n) == even_table[n - 1] && q_odd(n) == odd_table[n - 1], "type table at n=" + std::to_string(n));
    for (int n = 1; n <= 20; ++n) {
        const auto comps = all_compositions(n);
        std::uint64_t even = 0, odd = 0, ones_twos = 0, all_odd = 0;
        for (const auto& c : comps) {
            even += has_type(c, FlockType::Even);
            odd += has_type(c, FlockType::Odd);
            const auto& ps = c.parts();
            ones_twos += std::all_of(ps.begin(), ps.end(), [](int v) { return v <= 2; });
            all_odd += std::all_of(ps.begin(), ps.end(), [](int v) { return v % 2 == 1; });
        }
        if (n <= 16) o.require(even == q_even(n) && odd == q_odd(n), "type counts at n=" + std::to_string(n));
        o.require(BigInt(ones_twos) == fibonacci(n + 1), "parts 1 and 2 at n=" + std::to_string(n));
        o.require(BigInt(all_odd) == fibonacci(n), "odd parts at n=" + std::to_string(n));

        const auto sparse = sparse_sequences(n);
        o.require(BigInt(sparse.size()) == fibonacci(n + 2), "sparse sequences at n=" + std::to_string(n));
        if (n > 14) continue;  // flock enumeration stays small
        std::set<SparseSequence> containers;
        for (auto t : {FlockType::Odd, FlockType::Even}) {
            std::map<std::uint64_t, int> hits;
            std::size_t typed = 0;
            const auto flocks = all_flocks(n, t);
            for (const auto& f : flocks) {
                const auto ms = f.members();
                o.require(ms.size() == (f.k() >= 1 ? std::size_t{1} << (f.k() - 1) : 1u), "flock size");
                for (const auto& m : ms) ++hits[m.mask()];
                containers.insert(container_of_flock(f));
            }
            for (const auto& c : comps) typed += has_type(c, t);
            o.require(hits.size() == typed, "flocks cover each type at n=" + std::to_string(n));
            for (const auto& [m, h] : hits) o.require(h == 1, "flocks overlap at n=" + std::to_string(n));
            o.require(BigInt(flocks.size()) == fibonacci(t == FlockType::Odd ? n : n + 1), "flock count");
        }
        o.require(containers == std::set<SparseSequence>(sparse.begin(), sparse.end()),
                  "container bijection at n=" + std::to_string(n));
    }
    using namespace tdorbit::testing;
    o.require(diagram_of(6, FlockType::Odd) == kOdd6, "n=6 odd diagram");
    o.require(diagram_of(6, FlockType::Even) == kEven6, "n=6 even diagram");
    o.require(diagram_of(7, FlockType::Odd) == kOdd7, "n=7 odd diagram");
    o.require(diagram_of(7, FlockType::Even) == kEven7, "n=7 even diagram");
    return o;
}

Outcome model() {
    Outcome o;
    std::mt19937_64 rng(7);
    for (auto [n, q] : kCharSet) {
        const ClassTable table(n, q);
        const auto census = m_classes(n, q);
        const auto assignments = assign_characters(census, n, q);
        const auto chars = character_table(table, jobs());
        const auto report = multiplicity_report(build_model(census, assignments, table, jobs()), chars, table);
        for (const auto& m : report.multiplicities) o.require(m == ExactRational(1, 1), "multiplicity at " + label(n, q));
        o.require(report.ok(), "model report at " + label(n, q));

        for (const auto& c : census.containers)
            for (int sample = 0; sample < 3; ++sample) {
                StabCharacter chi{c.I, zero_vector(n, q), zero_vector(n - 1, q)};
                for (int i : c.plus) chi.A[i - 1] = FieldElement(static_cast<std::int64_t>(rng() % q), q);
                for (int j = 1; j < n; ++j)
                    if (!(c.in_plus(j) && c.in_plus(j + 1)))
                        chi.B[j - 1] = FieldElement(static_cast<std::int64_t>(rng() % q), q);
                const auto brute = oracle::brute_induce(
                    n, q, [&](const GroupElement& g) { return c.in_stabilizer(g); },
                    [&](const GroupElement& g) { return stab_value(chi, g); }, table.representatives());
                o.require(induced_character(c, chi, table).values == brute, "induction at " + label(n, q) + " " + c.I.str());
            }
    }
    for (std::uint32_t q : {2u, 3u})
        for (int n = 1; n <= 8; ++n)
            for (const auto& I : sparse_sequences(n)) {
                const auto c = make_container(n, I);
                const auto k = count_container(c, q);
                const BigInt Q = q;
                const auto at = label(n, q) + " " + I.str();
                o.require(k.stabilizer == ipow(Q, n - 1 + static_cast<unsigned>(c.plus.size())), "stabilizer order " + at);
                o.require(k.class_size == ipow(Q, static_cast<unsigned>(c.minus.size())), "class size " + at);
                o.require(k.b_invariants == BigInt(c.plus.size() - 1), "b-invariant count " + at);
                o.require(k.classes == ipow(Q - 1, static_cast<unsigned>(I.indices.size())) *
                                           ipow(Q, static_cast<unsigned>(c.plus.size() - 1)),
                          "class count " + at);
            }
    return o;
}

Outcome negative_controls() {
    Outcome o;
    for (auto [n, q] : kCharSet) {
        const ClassTable table(n, q);
        const auto census = m_classes(n, q);
        const auto assignments = assign_characters(census, n, q);
        const auto chars = character_table(table);
        auto it = std::find_if(assignments.begin(), assignments.end(), [](const ModelAssignment& a) {
            return std::any_of(a.chi.A.begin(), a.chi.A.end(), [](const FieldElement& v) { return !v.is_zero(); }) ||
                   std::any_of(a.chi.B.begin(), a.chi.B.end(), [](const FieldElement& v) { return !v.is_zero(); });
        });
        o.require(it != assignments.end(), "no nontrivial character to mutate at " + label(n, q));
        if (it == assignments.end()) continue;
        auto mutated = assignments;
        auto& chi = mutated[static_cast<std::size_t>(it - assignments.begin())].chi;
        std::fill(chi.A.begin(), chi.A.end(), FieldElement::zero(q));
        std::fill(chi.B.begin(), chi.B.end(), FieldElement::zero(q));
        o.require(!multiplicity_report(build_model(census, mutated, table), chars, table).ok(),
                  "mutation kept multiplicity one at " + label(n, q));
    }
    // Broken invariants must raise.
    const auto c = make_container(4, SparseSequence{{2}});  // I- = {1,3}, I+ = {2,4}
    StabCharacter bad_a{c.I, zero_vector(4, 3), zero_vector(3, 3)};
    bad_a.A[0] = FieldElement::one(3);
    const auto e = make_container(4, SparseSequence{});
    StabCharacter bad_b{e.I, zero_vector(4, 3), zero_vector(3, 3)};
    bad_b.B[1] = FieldElement::one(3);
    for (const auto& [cont, chi] : std::vector<std::pair<Container, StabCharacter>>{{c, bad_a}, {e, bad_b}}) {
        bool raised = false;
        try {
            validate(chi, cont);
        } catch (const InvalidStabCharacter&) {
            raised = true;
        }
        o.require(raised, "invalid character accepted on " + cont.I.str());
    }
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no runtime bound
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "orbit counts: closed form = enumeration = brute force", 120, orbit_counts},
        {2, "class counts: recursion = dot strings = brute force", 0, class_counts},
        {3, "orbit total = class total", 0, orbits_equal_classes},
        {4, "character table: traces, orthonormality, completeness", 300, character_table_checks},
        {5, "representation matrices are homomorphisms", 0, homomorphism},
        {6, "combinatorics: type counts, Fibonacci families, flocks, containers", 0, combinatorics},
        {7, "model: multiplicity one, induced characters, container cardinalities", 600, model},
        {8, "negative controls", 0, negative_controls},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.why = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.ok = false;
            o.why = "runtime limit exceeded";
        }
        failed += !o.ok;
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title, secs,
                    o.ok ? "" : " -- ", o.why.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
