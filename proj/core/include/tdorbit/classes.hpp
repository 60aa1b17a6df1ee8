#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/fq.hpp"
#include "tdorbit/group.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace tdorbit {

// Matrix of alpha' -> (a_i alpha'_{i+1} - a_{i+1} alpha'_i)_i, size (n-1) x n.
// Conjugation moves b exactly by its column space.
FqMatrix b_shift_matrix(const FqVector& a);

/// Canonical label of a conjugacy class: the fixed a together with the
/// representative of b modulo the image of b_shift_matrix(a).
struct ClassDescriptor {
    int n;
    std::uint32_t p;
    FqVector a;
    FqVector b_coset;

    GroupElement representative() const { return GroupElement(a, b_coset); }
    bool operator==(const ClassDescriptor& o) const { return a == o.a && b_coset == o.b_coset; }
    bool operator!=(const ClassDescriptor& o) const { return !(*this == o); }
};

ClassDescriptor class_of(const GroupElement& g);

// rank of b_shift_matrix(a); the class of g has q^rank elements.
int class_dimension(const FqVector& a);

struct NamedInvariant {
    std::string label;  // e.g. "b3", "b3a5+b4a3"
    FieldElement value;
    int lowest_b;       // smallest b index occurring in the functional
};

// Invariant functionals per maximal string of zero a's: an interior isolated
// zero at i gives b_{i-1} a_{i+1} + b_i a_{i-1}; a string i..e of length >= 2
// gives b_i, ..., b_{e-1}; an isolated zero at either end gives nothing.
std::vector<NamedInvariant> named_invariants(const GroupElement& g);

/// Heavy/light dot pattern of a (heavy iff a_i != 0).
struct DotString {
    std::vector<bool> heavy;
    int m;    // number of heavy dots
    int ell;  // number of b-invariants, n - 1 - rank
    int k() const { return static_cast<int>(heavy.size()) - 1 - ell; }
};

// ell from the rank of b_shift_matrix at a_i = 1 on heavy dots.
DotString dot_string(const std::vector<bool>& heavy, std::uint32_t p = 2);

/// Class counts by dimension k, split by the first dot (light: a_1 = 0).
struct ClassCountTable {
    int n;
    std::vector<BigInt> light;  // d_n^o(k), k = 0..n-1
    std::vector<BigInt> heavy;  // d_n^*(k)
    BigInt total(int k) const { return light.at(k) + heavy.at(k); }
    BigInt grand_total() const;
    bool operator==(const ClassCountTable& o) const {
        return n == o.n && light == o.light && heavy == o.heavy;
    }
};

// Sum over all 2^n dot strings of (q-1)^m q^ell in dimension k = n-1-ell.
ClassCountTable count_classes_by_strings(int n, std::uint32_t q,
                                         std::uint64_t budget = kDefaultBudget);

// Recursion on the first dot, bases from strings at n = 2, 3:
//   d_n^o(k) = q d_{n-1}^o(k) + d_{n-1}^*(k-1)
//   d_n^*(k) = (q-1) d_{n-1}^*(k-1) + q(q-1) d_{n-2}(k-1)
// The weights count the extra heavy dot and the extra invariant created by
// prepending a dot. Valid for n >= 2.
ClassCountTable count_classes_recursive(int n, std::uint32_t q);

/// All conjugacy classes of G_n in canonical order (a lexicographic, then
/// b_coset lexicographic), with constant-time-ish lookup of an element's class.
class ClassTable {
public:
    ClassTable(int n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

    int n() const { return n_; }
    std::uint32_t p() const { return p_; }
    std::uint64_t group_order() const { return order_; }
    std::size_t size() const { return classes_.size(); }

    const std::vector<ClassDescriptor>& classes() const { return classes_; }
    const std::vector<GroupElement>& representatives() const { return reps_; }
    const std::vector<std::uint64_t>& sizes() const { return sizes_; }

    std::size_t index_of(const GroupElement& g) const;

private:
    struct Image {
        std::vector<FqVector> basis;
        std::vector<std::size_t> pivots;
    };
    std::uint64_t a_index(const FqVector& a) const;

    int n_;
    std::uint32_t p_;
    std::uint64_t order_;
    std::vector<ClassDescriptor> classes_;
    std::vector<GroupElement> reps_;
    std::vector<std::uint64_t> sizes_;
    std::vector<Image> images_;  // by lexicographic index of a
    std::unordered_map<std::uint64_t, std::size_t> by_rep_;
};

}  // namespace tdorbit
