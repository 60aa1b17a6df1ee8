#pragma once

#include "tdorbit/bigint.hpp"

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace tdorbit {

/// Ordered partition (composition) of n.
///
/// Equivalently a divider set D in {1..n-1}: i in D iff a part ends at
/// position i. Both views are kept consistent; parts are always >= 1.
class Composition {
public:
    explicit Composition(std::vector<int> parts);
    static Composition from_dividers(int n, const std::set<int>& dividers);
    // Bit i-1 of mask set iff there is a divider after position i.
    static Composition from_mask(int n, std::uint64_t mask);
    // Digits as written in diagrams, e.g. "1132" -> 1+1+3+2 (parts <= 9).
    static Composition parse(const std::string& digits);

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    std::set<int> dividers() const;
    std::uint64_t mask() const;
    int odd_parts() const;   // nu
    int even_parts() const;  // mu
    // k = (n - nu) / 2, half the dimension of the associated orbits.
    int k() const { return (n_ - odd_parts()) / 2; }
    // First position of every part (1-based).
    std::vector<int> starts() const;

    std::string str() const;     // "1+3+2"
    std::string digits() const;  // "132"; parts > 9 are bracketed

    bool operator==(const Composition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
    bool operator<(const Composition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int n_;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

// All 2^(n-1) compositions in increasing divider-mask order.
std::vector<Composition> all_compositions(int n);

// P1 precedes P2 iff P2 refines P1 (dividers(P1) subset of dividers(P2)).
bool preceq(const Composition& p1, const Composition& p2);
// [P1, P2] in divider-mask order; NotComparable unless P1 precedes P2.
std::vector<Composition> interval(const Composition& p1, const Composition& p2);

enum class PartitionType { Even, Odd, Both };
enum class FlockType { Even, Odd };

const char* to_string(PartitionType t);
const char* to_string(FlockType t);

// Parity of the first part not equal to 1; all-ones is Both.
PartitionType type_of(const Composition& p);
bool has_type(const Composition& p, FlockType t);

std::uint64_t q_even(int n);
std::uint64_t q_odd(int n);

BigInt fibonacci(int n);  // F_0 = 0, F_1 = 1

// Number of compositions of n into parts 1 and 2.
std::uint64_t count_ones_twos(int n);
// Number of compositions of n into odd parts.
std::uint64_t count_all_odd(int n);

/// Interval [head, tail] of compositions of one type.
///
/// Members are the compositions whose dividers are the head dividers plus
/// any subset of the dotted dividers (tail dividers not in the head), so a
/// flock has 2^(k-1) members for k >= 1 and one member for k = 0.
struct Flock {
    Composition head;
    Composition tail;
    FlockType type;
    std::vector<int> dotted_dividers;

    int n() const { return head.n(); }
    int k() const { return head.k(); }
    std::vector<Composition> members() const;
    bool contains(const Composition& p) const;
    bool operator==(const Flock& o) const {
        return head == o.head && type == o.type && tail == o.tail;
    }
};

// Head of the unique flock of the given type containing p. TypeMismatch
// if p does not have that type.
Composition flock_head(const Composition& p, FlockType t);
// Tail of the flock with the given head.
Composition flock_tail(const Composition& head, FlockType t);
Flock flock_of(const Composition& p, FlockType t);
// Every flock of a type, ordered by head in divider-mask order.
std::vector<Flock> all_flocks(int n, FlockType t);

/// Strictly increasing subset of {1..n} with consecutive gaps >= 2.
struct SparseSequence {
    std::vector<int> indices;

    bool contains(int i) const;
    std::string str() const;  // "C(3,5,8,11)", "C()"
    bool operator==(const SparseSequence& o) const { return indices == o.indices; }
    bool operator<(const SparseSequence& o) const { return indices < o.indices; }
};

bool is_sparse(const std::vector<int>& indices, int n);
// All sparse sequences of {1..n}, ordered by their 0/1 indicator read as a
// binary word with position 1 least significant.
std::vector<SparseSequence> sparse_sequences(int n);

struct NeighbourSets {
    std::vector<int> minus;  // I^-: positions adjacent to I
    std::vector<int> plus;   // I^+: complement of I^-
};
NeighbourSets iminus_iplus(const SparseSequence& s, int n);

SparseSequence container_of_flock(const Flock& f);

}  // namespace tdorbit
