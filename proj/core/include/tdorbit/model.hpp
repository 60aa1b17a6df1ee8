#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/classes.hpp"
#include "tdorbit/cyclo.hpp"
#include "tdorbit/partitions.hpp"
#include "tdorbit/reps.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tdorbit {

/// C(I): the elements whose a-support is exactly the sparse set I.
///
/// All of them share the centralizer Stab(I) = {alpha_i = 0 for i in I^-},
/// of order q^(n-1+|I^+|).
struct Container {
    int n;
    SparseSequence I;
    std::vector<int> minus;  // I^-
    std::vector<int> plus;   // I^+

    bool in_minus(int i) const;
    bool in_plus(int i) const { return i >= 1 && i <= n && !in_minus(i); }
    bool in_stabilizer(const GroupElement& g) const;
};

Container make_container(int n, const SparseSequence& I);

/// One-dimensional character g(alpha; beta) -> e(sum A_i alpha_i + sum B_j beta_j)
/// of Stab(I). Well defined iff A vanishes on I^- and B_j = 0 whenever
/// j, j+1 are both in I^+ (those beta lie in the commutator subgroup).
struct StabCharacter {
    SparseSequence I;
    FqVector A;  // n entries
    FqVector B;  // n-1 entries
};

// Throws InvalidStabCharacter when an invariant fails.
void validate(const StabCharacter& chi, const Container& c);
CycInt stab_value(const StabCharacter& chi, const GroupElement& g);

// q^|I^-| chi(g) if g in Stab(I) and B_{j-1} a_{j-1} = B_j a_{j+1} for every
// j in I^- (a_0 = a_{n+1} = 0, B_0 = B_n = 0); 0 otherwise.
CycInt induced_value(const Container& c, const StabCharacter& chi, const GroupElement& g);
Character induced_character(const Container& c, const StabCharacter& chi, const ClassTable& table);

/// Conjugacy class with sparse a-support, together with its invariants.
struct MClass {
    std::size_t container;                   // index into MClassCensus::containers
    ClassDescriptor cls;
    std::vector<NamedInvariant> b_invariants;  // |I^+| - 1 of them
    std::uint64_t size;                        // q^|I^-|
};

struct MClassCensus {
    std::vector<Container> containers;  // sparse_sequences order
    std::vector<MClass> classes;        // grouped by container, canonical order inside
};

MClassCensus m_classes(int n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

/// Where each coefficient of an assigned stabilizer character came from.
struct SlotAssignment {
    std::string slot;    // "A1", "B4"
    std::string source;  // "a3", "b3a5+b4a3"
};

struct ModelAssignment {
    std::size_t m_class;  // index into MClassCensus::classes
    Flock flock;
    StabCharacter chi;
    std::vector<SlotAssignment> slots;  // nonzero-capable slots only
};

/// Flock-driven choice of one stabilizer character per M-class.
///
/// The flock [H, T] attached to the container fixes the slots: B on the
/// inner beta of each tail piece takes the a-invariants (ascending); B on
/// dotted dividers and A on starts of odd tail pieces inside I^+ take the
/// b-invariants, both lists ascending (slots by index, A before B; invariants
/// by lowest b index). Solid dividers and everything else get 0. The two
/// all-ones flocks have no tail pieces: C(1) puts a_1 on A_1 and C() leaves
/// A_1 at 0. SlotCountMismatch if the counts do not line up.
std::vector<ModelAssignment> assign_characters(const MClassCensus& census, int n, std::uint32_t p);

// Sum over assignments of the induced characters.
Character build_model(const MClassCensus& census, const std::vector<ModelAssignment>& assignments,
                      const ClassTable& table, unsigned jobs = 1);

struct ModelReport {
    std::vector<ExactRational> multiplicities;  // per irreducible, descriptor order
    std::vector<std::size_t> deviations;        // irreducibles with multiplicity != 1
    std::uint64_t model_dimension;
    std::uint64_t irreducible_dimension_sum;
    bool ok() const { return deviations.empty() && model_dimension == irreducible_dimension_sum; }
};

ModelReport multiplicity_report(const Character& model, const std::vector<Character>& irreducibles,
                                const ClassTable& table);

// Full pipeline: census, assignment, model, character table, multiplicities.
ModelReport verify_model(int n, std::uint32_t p, unsigned jobs = 1,
                         std::uint64_t budget = kDefaultBudget);

// Proposition-style cardinalities for one container, counted directly.
struct ContainerCounts {
    BigInt classes;        // M-classes in C(I)
    BigInt class_size;     // common size, 0 if sizes differ
    BigInt stabilizer;     // |{y : y commutes with a representative}|
    BigInt b_invariants;   // per class
};
ContainerCounts count_container(const Container& c, std::uint32_t p,
                                std::uint64_t budget = kDefaultBudget);

}  // namespace tdorbit
