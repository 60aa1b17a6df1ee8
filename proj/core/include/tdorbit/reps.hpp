#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/classes.hpp"
#include "tdorbit/cyclo.hpp"
#include "tdorbit/group.hpp"
#include "tdorbit/orbits.hpp"
#include "tdorbit/partitions.hpp"

#include <cstdint>
#include <vector>

namespace tdorbit {

/// Monomial matrix: row r has its only nonzero entry coef[r] in column col[r].
struct MonomialMatrix {
    std::vector<std::uint64_t> col;
    std::vector<CycInt> coef;

    std::size_t dim() const { return col.size(); }
    static MonomialMatrix identity(std::size_t dim, std::uint32_t p);
    CycInt trace() const;
    bool operator==(const MonomialMatrix& o) const { return col == o.col && coef == o.coef; }
};

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
MonomialMatrix kronecker(const MonomialMatrix& a, const MonomialMatrix& b);

/// Representation attached to a basic orbit (no zero y).
///
/// Induced from the abelian subgroup H = {alpha_i = 0 for even i} with
/// transversal s(t) = g(t on even positions; 0). Basis vectors are indexed by
/// t = (t_2, t_4, ...) in lexicographic order, so dim = q^floor(n/2).
/// Convention: (pi(g) f)(t) = rho(h') f(t') where s(t) g = h' s(t'); this makes
/// pi a homomorphism, pi(g1 g2) = pi(g1) pi(g2).
struct BasicRepresentation {
    int n;
    std::uint32_t p;
    FqVector y;              // n-1 nonzero entries
    FieldElement invariant;  // I for odd n, 0 for even n
    FqVector x;              // orbit representative, zero off position 1 (odd n)

    std::uint64_t dim() const;
};

// From a descriptor with a single-part partition; NotBasicOrbit otherwise.
BasicRepresentation make_basic(const OrbitDescriptor& d);
// From raw data; ZeroInteriorY on a zero y, invariant ignored for even n.
BasicRepresentation make_basic(const FqVector& y, const FieldElement& invariant);

// s(t) = g(t on even positions, 0 elsewhere; 0). t has floor(n/2) entries.
GroupElement transversal(int n, const FqVector& t);

// Solution of s(t) g = h' s(t') with h' in H.
struct MasterSolution {
    GroupElement h;
    FqVector t_prime;
};
MasterSolution solve_master_equation(const GroupElement& g, const FqVector& t);

// Row t holds rho(h') in column t', rho(h) = e(sum x_i alpha_i + sum y_j beta_j).
MonomialMatrix basic_rep_matrix(const BasicRepresentation& rep, const GroupElement& g);

// Even n: q^(n/2) prod e(y_j beta_j) if alpha = 0, else 0.
// Odd n: q^((n-1)/2) e(kappa I) prod e(y_j beta_j) if alpha vanishes at even
// positions and alpha_1 y_1 = alpha_3 y_2, alpha_3 y_3 = alpha_5 y_4, ...;
// else 0. Here kappa = alpha_1 / (y_2 y_4 ... y_{n-1}).
CycInt basic_character(const BasicRepresentation& rep, const GroupElement& g);

// Component r gets alpha_{i_r+1..i_{r+1}} and beta_{i_r+1..i_{r+1}-1}; the
// beta at each break lies in the kernel.
std::vector<GroupElement> project(const GroupElement& g, const Composition& part);

/// Irreducible representation of an orbit: tensor product of the basic
/// representations of its parts, ordered left to right.
struct IrreducibleRepresentation {
    OrbitDescriptor orbit;
    std::vector<BasicRepresentation> parts;

    explicit IrreducibleRepresentation(OrbitDescriptor d);
    std::uint64_t dim() const;
    MonomialMatrix matrix(const GroupElement& g) const;
    CycInt value(const GroupElement& g) const;  // closed form
};

/// Class function stored once per class of a ClassTable.
struct Character {
    int n;
    std::uint32_t p;
    std::uint64_t dim;
    std::vector<CycInt> values;
};

Character irreducible_character(const OrbitDescriptor& d, const ClassTable& table);

// One character per orbit, in enumerate_descriptors order.
std::vector<Character> character_table(const ClassTable& table, unsigned jobs = 1,
                                       std::uint64_t budget = kDefaultBudget);

ExactRational inner(const Character& a, const Character& b, const ClassTable& table);

struct CompletenessReport {
    BigInt sum_of_squares;  // sum_k count_by_dimension(n,q,k) q^(2k)
    BigInt group_order;     // q^(2n-1)
    bool integer_identity;
    // P_i = q P_{i-1} + q^3 (q-1) P_{i-2} for 3 <= i <= n, P_i as above.
    bool recurrence;
    // Same identity with q kept as an indeterminate.
    bool symbolic;
    bool ok() const { return integer_identity && recurrence && symbolic; }
};

CompletenessReport completeness_check(int n, std::uint32_t q);

}  // namespace tdorbit
