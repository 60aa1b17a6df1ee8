#include "tdorbit/classes.hpp"

#include "tdorbit/error.hpp"

#include <string>

namespace tdorbit {

FqMatrix b_shift_matrix(const FqVector& a) {
    const int n = static_cast<int>(a.size());
    const auto p = a.front().modulus();
    FqMatrix m(n - 1, n, p);
    for (int r = 0; r + 1 < n; ++r) {
        m.set(r, r + 1, a[r]);
        m.set(r, r, -a[r + 1]);
    }
    return m;
}

ClassDescriptor class_of(const GroupElement& g) {
    if (g.n() == 1) return ClassDescriptor{1, g.p(), g.alpha(), {}};
    const auto ic = image_and_coset(b_shift_matrix(g.alpha()), g.beta());
    return ClassDescriptor{g.n(), g.p(), g.alpha(), ic.representative};
}

int class_dimension(const FqVector& a) {
    if (a.size() == 1) return 0;
    return static_cast<int>(b_shift_matrix(a).rank());
}

std::vector<NamedInvariant> named_invariants(const GroupElement& g) {
    const int n = g.n();
    std::vector<NamedInvariant> out;
    auto a = [&](int i) { return g.alpha(i); };
    auto b = [&](int j) { return g.beta(j); };
    int i = 1;
    while (i <= n) {
        if (!a(i).is_zero()) {
            ++i;
            continue;
        }
        int e = i;
        while (e + 1 <= n && a(e + 1).is_zero()) ++e;
        if (e == i) {
            if (i > 1 && i < n) {
                const std::string label = "b" + std::to_string(i - 1) + "a" + std::to_string(i + 1) +
                                          "+b" + std::to_string(i) + "a" + std::to_string(i - 1);
                out.push_back({label, b(i - 1) * a(i + 1) + b(i) * a(i - 1), i - 1});
            }
        } else {
            for (int j = i; j < e; ++j) out.push_back({"b" + std::to_string(j), b(j), j});
        }
        i = e + 1;
    }
    return out;
}

DotString dot_string(const std::vector<bool>& heavy, std::uint32_t p) {
    const int n = static_cast<int>(heavy.size());
    if (n < 1) throw OutOfRange("dot string needs n >= 1");
    FqVector a = zero_vector(n, p);
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (heavy[i]) {
            a[i] = FieldElement::one(p);
            ++m;
        }
    return DotString{heavy, m, n - 1 - class_dimension(a)};
}

BigInt ClassCountTable::grand_total() const {
    BigInt t = 0;
    for (std::size_t k = 0; k < light.size(); ++k) t += light[k] + heavy[k];
    return t;
}

ClassCountTable count_classes_by_strings(int n, std::uint32_t q, std::uint64_t budget) {
    require_prime(q);
    if (n < 1) throw OutOfRange("n must be >= 1");
    const std::uint64_t strings = checked_power(2, static_cast<unsigned>(n), budget, "dot strings");
    ClassCountTable t{n, std::vector<BigInt>(n, 0), std::vector<BigInt>(n, 0)};
    for (std::uint64_t mask = 0; mask < strings; ++mask) {
        std::vector<bool> heavy(n);
        for (int i = 0; i < n; ++i) heavy[i] = mask >> i & 1u;
        const auto ds = dot_string(heavy, q);
        const BigInt c = ipow(BigInt(q - 1), ds.m) * ipow(BigInt(q), ds.ell);
        (heavy[0] ? t.heavy : t.light)[ds.k()] += c;
    }
    return t;
}

ClassCountTable count_classes_recursive(int n, std::uint32_t q) {
    require_prime(q);
    if (n < 2) throw OutOfRange("the recursion starts at n = 2");
    if (n <= 3) return count_classes_by_strings(n, q);
    const BigInt Q = q;
    ClassCountTable prev2 = count_classes_by_strings(2, q);
    ClassCountTable prev1 = count_classes_by_strings(3, q);
    for (int m = 4; m <= n; ++m) {
        ClassCountTable cur{m, std::vector<BigInt>(m, 0), std::vector<BigInt>(m, 0)};
        for (int k = 0; k < m; ++k) {
            if (k < m - 1) cur.light[k] += Q * prev1.light[k];
            if (k >= 1) {
                cur.light[k] += prev1.heavy[k - 1];
                cur.heavy[k] += (Q - 1) * prev1.heavy[k - 1];
                if (k - 1 < m - 2) cur.heavy[k] += Q * (Q - 1) * prev2.total(k - 1);
            }
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

ClassTable::ClassTable(int n, std::uint32_t p, std::uint64_t budget)
    : n_(n), p_(p), order_(tdorbit::group_order(n, p, budget)) {
    const std::uint64_t a_count = checked_power(p, static_cast<unsigned>(n), budget, "a vectors");
    images_.reserve(a_count);
    for (std::uint64_t ai = 0; ai < a_count; ++ai) {
        FqVector a = zero_vector(n, p);
        std::uint64_t rest = ai;
        for (int i = n - 1; i >= 0; --i) {
            a[i] = FieldElement(static_cast<std::int64_t>(rest % p), p);
            rest /= p;
        }
        Image img;
        if (n > 1) {
            auto ic = image_and_coset(b_shift_matrix(a), zero_vector(n - 1, p));
            img.basis = std::move(ic.basis);
            img.pivots = std::move(ic.pivots);
        }
        // Coset representatives are exactly the vectors vanishing on pivots.
        std::vector<bool> pivot(n > 1 ? n - 1 : 0, false);
        for (auto c : img.pivots) pivot[c] = true;
        std::vector<int> free;
        for (int j = 0; j + 1 < n; ++j)
            if (!pivot[j]) free.push_back(j);
        const std::uint64_t size = checked_power(p, static_cast<unsigned>(img.pivots.size()), budget, "class size");
        const std::uint64_t reps = checked_power(p, static_cast<unsigned>(free.size()), budget, "classes per a");
        for (std::uint64_t r = 0; r < reps; ++r) {
            FqVector b = zero_vector(n - 1, p);
            std::uint64_t rr = r;
            for (std::size_t s = free.size(); s-- > 0;) {
                b[free[s]] = FieldElement(static_cast<std::int64_t>(rr % p), p);
                rr /= p;
            }
            GroupElement g(a, b);
            by_rep_.emplace(element_index(g), classes_.size());
            classes_.push_back(ClassDescriptor{n, p, a, std::move(b)});
            reps_.push_back(std::move(g));
            sizes_.push_back(size);
        }
        images_.push_back(std::move(img));
    }
}

std::uint64_t ClassTable::a_index(const FqVector& a) const {
    std::uint64_t idx = 0;
    for (const auto& v : a) idx = idx * p_ + v.value();
    return idx;
}

std::size_t ClassTable::index_of(const GroupElement& g) const {
    if (g.n() != n_ || g.p() != p_) throw ShapeMismatch("element outside this group");
    const auto& img = images_[a_index(g.alpha())];
    FqVector b = reduce_modulo(img.basis, img.pivots, g.beta());
    return by_rep_.at(element_index(GroupElement(g.alpha(), std::move(b))));
}

}  // namespace tdorbit
