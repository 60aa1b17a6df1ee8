#include "tdorbit/group.hpp"

#include "tdorbit/error.hpp"

#include <string>

namespace tdorbit {
namespace {

void same_shape(const GroupElement& g, const GroupElement& h) {
    if (g.n() != h.n() || g.p() != h.p())
        throw ShapeMismatch("G_" + std::to_string(g.n()) + "(F_" + std::to_string(g.p()) +
                            ") vs G_" + std::to_string(h.n()) + "(F_" + std::to_string(h.p()) +
                            ")");
}

}  // namespace

GroupElement::GroupElement(FqVector alpha, FqVector beta)
    : p_(alpha.empty() ? 0 : alpha.front().modulus()),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)) {
    if (alpha_.empty()) throw ShapeMismatch("G_n needs n >= 1");
    if (beta_.size() + 1 != alpha_.size())
        throw ShapeMismatch("beta must have n-1 entries");
    for (const auto& v : alpha_)
        if (v.modulus() != p_) throw ModulusMismatch("mixed moduli in alpha");
    for (const auto& v : beta_)
        if (v.modulus() != p_) throw ModulusMismatch("mixed moduli in beta");
}

GroupElement GroupElement::identity(int n, std::uint32_t p) {
    if (n < 1) throw ShapeMismatch("G_n needs n >= 1");
    return GroupElement(zero_vector(n, p), zero_vector(n - 1, p));
}

GroupElement GroupElement::from_values(const std::vector<std::int64_t>& alpha,
                                       const std::vector<std::int64_t>& beta, std::uint32_t p) {
    return GroupElement(make_vector(alpha, p), make_vector(beta, p));
}

bool GroupElement::is_identity() const {
    for (const auto& v : alpha_)
        if (!v.is_zero()) return false;
    for (const auto& v : beta_)
        if (!v.is_zero()) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
    os << "g(";
    for (int i = 1; i <= g.n(); ++i) os << (i > 1 ? "," : "") << g.alpha(i);
    os << ';';
    for (int j = 1; j < g.n(); ++j) os << (j > 1 ? "," : "") << g.beta(j);
    return os << ')';
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
    same_shape(g, h);
    const int n = g.n();
    FqVector a = g.alpha();
    FqVector b = g.beta();
    for (int i = 0; i < n; ++i) a[i] += h.alpha()[i];
    for (int i = 0; i + 1 < n; ++i) b[i] += h.beta()[i] + g.alpha()[i] * h.alpha()[i + 1];
    return GroupElement(std::move(a), std::move(b));
}

GroupElement inverse(const GroupElement& g) {
    const int n = g.n();
    FqVector a(g.alpha());
    FqVector b(g.beta());
    for (auto& v : a) v = -v;
    for (int i = 0; i + 1 < n; ++i) b[i] = -g.beta()[i] + g.alpha()[i] * g.alpha()[i + 1];
    return GroupElement(std::move(a), std::move(b));
}

GroupElement conjugate(const GroupElement& x, const GroupElement& by) {
    same_shape(x, by);
    const int n = x.n();
    const auto& a = x.alpha();
    const auto& t = by.alpha();
    FqVector b = x.beta();
    for (int i = 0; i + 1 < n; ++i) b[i] += a[i] * t[i + 1] - a[i + 1] * t[i];
    return GroupElement(a, std::move(b));
}

std::uint64_t group_order(int n, std::uint32_t p, std::uint64_t budget) {
    if (n < 1) throw ShapeMismatch("G_n needs n >= 1");
    require_prime(p);
    return checked_power(p, static_cast<unsigned>(2 * n - 1), budget, "group order");
}

std::uint64_t element_index(const GroupElement& g) {
    std::uint64_t idx = 0;
    for (const auto& v : g.alpha()) idx = idx * g.p() + v.value();
    for (const auto& v : g.beta()) idx = idx * g.p() + v.value();
    return idx;
}

GroupElement element_at(int n, std::uint32_t p, std::uint64_t index) {
    std::vector<std::int64_t> digits(2 * n - 1);
    for (int i = 2 * n - 2; i >= 0; --i) {
        digits[i] = static_cast<std::int64_t>(index % p);
        index /= p;
    }
    if (index != 0) throw OutOfRange("element index beyond group order");
    std::vector<std::int64_t> a(digits.begin(), digits.begin() + n);
    std::vector<std::int64_t> b(digits.begin() + n, digits.end());
    return GroupElement::from_values(a, b, p);
}

std::vector<GroupElement> enumerate_group(int n, std::uint32_t p, std::uint64_t budget) {
    const std::uint64_t order = group_order(n, p, budget);
    std::vector<GroupElement> out;
    out.reserve(order);
    for (std::uint64_t i = 0; i < order; ++i) out.push_back(element_at(n, p, i));
    return out;
}

GroupElement random_element(int n, std::uint32_t p, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, p - 1);
    std::vector<std::int64_t> a(n), b(n - 1);
    for (auto& v : a) v = d(rng);
    for (auto& v : b) v = d(rng);
    return GroupElement::from_values(a, b, p);
}

}  // namespace tdorbit
