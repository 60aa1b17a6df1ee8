#pragma once

#include "tdorbit/fq.hpp"
#include "tdorbit/group.hpp"

#include <cstdint>
#include <ostream>

namespace tdorbit {

// Point (a; b) of g_n: a has n entries, b has n-1.
struct AdjointPoint {
    FqVector a;
    FqVector b;

    AdjointPoint(FqVector a_, FqVector b_);
    int n() const { return static_cast<int>(a.size()); }
    std::uint32_t p() const { return a.front().modulus(); }
    bool operator==(const AdjointPoint& o) const { return a == o.a && b == o.b; }
};

// Point (x; y) of g_n^*: x has n entries, y has n-1.
struct CoadjointPoint {
    FqVector x;
    FqVector y;

    CoadjointPoint(FqVector x_, FqVector y_);
    static CoadjointPoint from_values(const std::vector<std::int64_t>& x,
                                      const std::vector<std::int64_t>& y, std::uint32_t p);
    int n() const { return static_cast<int>(x.size()); }
    std::uint32_t p() const { return x.front().modulus(); }
    bool operator==(const CoadjointPoint& o) const { return x == o.x && y == o.y; }
};

std::ostream& operator<<(std::ostream& os, const CoadjointPoint& f);

// x'_i = x_i + alpha_{i-1} y_{i-1} - alpha_{i+1} y_i with alpha_0 = alpha_{n+1} = 0
// and y_0 = y_n = 0; y is fixed.
//
// Only alpha enters and it enters additively, so g -> act(g, .) is a
// homomorphism onto a group of translations: act(gh) = act(g) o act(h) =
// act(h) o act(g). Both composition orders are asserted by the tests.
CoadjointPoint coadjoint_act(const GroupElement& g, const CoadjointPoint& f);

// b'_i = b_i + alpha_i a_{i+1} - alpha_{i+1} a_i; a is fixed. Same
// composition behaviour as coadjoint_act.
AdjointPoint adjoint_act(const GroupElement& g, const AdjointPoint& a);

// Invariant of the coadjoint action on the odd-length segment of positions
// lo+1..hi (1-based). With relative indices 1..j:
//   I = sum_{t} (y_1 y_3 ... y_{2t-1}) x_{2t+1} (y_{2t+2} y_{2t+4} ... y_{j-1}).
// Requires j = hi - lo odd (EvenSegment) and y nonzero strictly inside the
// segment (ZeroInteriorY).
FieldElement segment_invariant(const CoadjointPoint& f, int lo, int hi);

}  // namespace tdorbit
