#include "tdorbit/liealg.hpp"

#include "tdorbit/error.hpp"

#include <string>

namespace tdorbit {
namespace {

void check_shape(const FqVector& d, const FqVector& off) {
    if (d.empty()) throw ShapeMismatch("point needs n >= 1");
    if (off.size() + 1 != d.size()) throw ShapeMismatch("second coordinate needs n-1 entries");
    const auto p = d.front().modulus();
    for (const auto& v : d)
        if (v.modulus() != p) throw ModulusMismatch("mixed moduli");
    for (const auto& v : off)
        if (v.modulus() != p) throw ModulusMismatch("mixed moduli");
}

void check_pair(const GroupElement& g, int n, std::uint32_t p) {
    if (g.n() != n || g.p() != p)
        throw ShapeMismatch("group element and point live over different (n, q)");
}

}  // namespace

AdjointPoint::AdjointPoint(FqVector a_, FqVector b_) : a(std::move(a_)), b(std::move(b_)) {
    check_shape(a, b);
}

CoadjointPoint::CoadjointPoint(FqVector x_, FqVector y_) : x(std::move(x_)), y(std::move(y_)) {
    check_shape(x, y);
}

CoadjointPoint CoadjointPoint::from_values(const std::vector<std::int64_t>& x,
                                           const std::vector<std::int64_t>& y, std::uint32_t p) {
    return CoadjointPoint(make_vector(x, p), make_vector(y, p));
}

std::ostream& operator<<(std::ostream& os, const CoadjointPoint& f) {
    os << "F(";
    for (std::size_t i = 0; i < f.x.size(); ++i) os << (i ? "," : "") << f.x[i];
    os << ';';
    for (std::size_t j = 0; j < f.y.size(); ++j) os << (j ? "," : "") << f.y[j];
    return os << ')';
}

CoadjointPoint coadjoint_act(const GroupElement& g, const CoadjointPoint& f) {
    const int n = f.n();
    check_pair(g, n, f.p());
    const auto& al = g.alpha();
    FqVector x = f.x;
    for (int i = 0; i < n; ++i) {
        if (i >= 1) x[i] += al[i - 1] * f.y[i - 1];
        if (i + 1 < n) x[i] -= al[i + 1] * f.y[i];
    }
    return CoadjointPoint(std::move(x), f.y);
}

AdjointPoint adjoint_act(const GroupElement& g, const AdjointPoint& pt) {
    const int n = pt.n();
    check_pair(g, n, pt.p());
    const auto& al = g.alpha();
    FqVector b = pt.b;
    for (int i = 0; i + 1 < n; ++i) b[i] += al[i] * pt.a[i + 1] - al[i + 1] * pt.a[i];
    return AdjointPoint(pt.a, std::move(b));
}

FieldElement segment_invariant(const CoadjointPoint& f, int lo, int hi) {
    const int n = f.n();
    if (lo < 0 || hi > n || lo >= hi) throw OutOfRange("segment bounds outside 0..n");
    const int j = hi - lo;
    if (j % 2 == 0) throw EvenSegment("segment length " + std::to_string(j) + " is even");
    // Relative accessors: x(r) = x_{lo+r}, y(r) = y_{lo+r}.
    auto x = [&](int r) { return f.x[lo + r - 1]; };
    auto y = [&](int r) { return f.y[lo + r - 1]; };
    for (int r = 1; r < j; ++r)
        if (y(r).is_zero()) throw ZeroInteriorY("y_" + std::to_string(lo + r) + " = 0 inside segment");

    const auto p = f.p();
    FieldElement total = FieldElement::zero(p);
    for (int t = 0; 2 * t + 1 <= j; ++t) {
        FieldElement term = x(2 * t + 1);
        for (int s = 1; s <= 2 * t - 1; s += 2) term *= y(s);
        for (int s = 2 * t + 2; s <= j - 1; s += 2) term *= y(s);
        total += term;
    }
    return total;
}

}  // namespace tdorbit
