#include "tdorbit/orbits.hpp"

#include "tdorbit/error.hpp"

#include <algorithm>
#include <string>

namespace tdorbit {

std::vector<int> OrbitDescriptor::breaks() const {
    std::vector<int> b;
    for (int i = 1; i < n; ++i)
        if (y[i - 1].is_zero()) b.push_back(i);
    return b;
}

bool OrbitDescriptor::operator==(const OrbitDescriptor& o) const {
    return n == o.n && p == o.p && partition == o.partition && y == o.y &&
           odd_invariants == o.odd_invariants;
}

bool OrbitDescriptor::operator<(const OrbitDescriptor& o) const {
    if (partition != o.partition) return partition < o.partition;
    const auto ya = values_of(y), yb = values_of(o.y);
    if (ya != yb) return ya < yb;
    std::vector<std::uint32_t> va, vb;
    for (const auto& [r, v] : odd_invariants) va.push_back(v.value());
    for (const auto& [r, v] : o.odd_invariants) vb.push_back(v.value());
    return va < vb;
}

OrbitDescriptor classify(const CoadjointPoint& f) {
    const int n = f.n();
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < n; ++i) {
        if (f.y[i - 1].is_zero()) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    OrbitDescriptor d{n, f.p(), Composition(parts), f.y, {}};
    int lo = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const int hi = lo + parts[r];
        if (parts[r] % 2 == 1) d.odd_invariants.emplace(static_cast<int>(r), segment_invariant(f, lo, hi));
        lo = hi;
    }
    return d;
}

int dimension(const OrbitDescriptor& d) { return d.n - d.partition.odd_parts(); }

CoadjointPoint canonical_representative(const OrbitDescriptor& d) {
    FqVector x = zero_vector(d.n, d.p);
    const auto& parts = d.partition.parts();
    int lo = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const int j = parts[r];
        if (j % 2 == 1) {
            // I = x_1 y_2 y_4 ... y_{j-1} when every other x in the part is 0.
            FieldElement denom = FieldElement::one(d.p);
            for (int s = 2; s <= j - 1; s += 2) denom *= d.y[lo + s - 1];
            x[lo] = d.odd_invariants.at(static_cast<int>(r)) / denom;
        }
        lo += j;
    }
    return CoadjointPoint(std::move(x), d.y);
}

BigInt orbits_for_partition(const Composition& part, std::uint32_t q) {
    const int n = part.n();
    const int m = static_cast<int>(part.size()) - 1;
    return ipow(BigInt(q - 1), static_cast<unsigned>(n - m - 1)) *
           ipow(BigInt(q), static_cast<unsigned>(part.odd_parts()));
}

namespace {

// Odometer over digit ranges [lo, hi]; returns false once exhausted.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t lo, std::uint32_t hi) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] < hi) {
            ++digits[i];
            return true;
        }
        digits[i] = lo;
    }
    return false;
}

}  // namespace

std::vector<OrbitDescriptor> enumerate_descriptors(int n, std::uint32_t p, std::uint64_t budget) {
    require_prime(p);
    if (n < 1) throw OutOfRange("n must be >= 1");
    BigInt total = 0;
    for (int k = 0; 2 * k <= n; ++k) total += count_by_dimension(n, p, k);
    if (total > budget)
        throw BudgetExceeded(total.str() + " orbits exceed budget " + std::to_string(budget));

    auto comps = all_compositions(n);
    std::sort(comps.begin(), comps.end());
    std::vector<OrbitDescriptor> out;
    out.reserve(static_cast<std::size_t>(total));
    for (const auto& c : comps) {
        const auto br = c.dividers();
        std::vector<int> odd_idx;
        for (std::size_t r = 0; r < c.size(); ++r)
            if (c.parts()[r] % 2 == 1) odd_idx.push_back(static_cast<int>(r));

        std::vector<std::uint32_t> ys(n - 1 - br.size(), 1);
        do {
            FqVector y = zero_vector(n - 1, p);
            std::size_t t = 0;
            for (int i = 1; i < n; ++i)
                if (!br.count(i)) y[i - 1] = FieldElement(ys[t++], p);
            std::vector<std::uint32_t> vs(odd_idx.size(), 0);
            do {
                OrbitDescriptor d{n, p, c, y, {}};
                for (std::size_t s = 0; s < odd_idx.size(); ++s)
                    d.odd_invariants.emplace(odd_idx[s], FieldElement(vs[s], p));
                out.push_back(std::move(d));
            } while (advance(vs, 0, p - 1));
        } while (advance(ys, 1, p - 1));
    }
    return out;
}

BigInt count_by_dimension(int n, std::uint32_t q, int k) {
    require_prime(q);
    if (n < 1) throw OutOfRange("n must be >= 1");
    if (k < 0 || 2 * k > n) throw OutOfRange("k=" + std::to_string(k) + " outside 0..floor(n/2)");
    const BigInt Q = q;
    return ipow(Q, static_cast<unsigned>(n - k - 1)) * ipow(Q - 1, static_cast<unsigned>(k)) *
           (binomial(n - k - 1, k) * Q + binomial(n - k - 1, k - 1));
}

BigInt count_partitions_even_odd(int n, int mu, int nu) {
    if (n < 1 || mu < 0 || nu < 0) throw OutOfRange("need n >= 1 and mu, nu >= 0");
    if ((n - nu) % 2 != 0)
        throw ParityViolation("n=" + std::to_string(n) + " and nu=" + std::to_string(nu) +
                              " differ in parity");
    return binomial(mu + nu, mu) * binomial((n + nu) / 2 - 1, mu + nu - 1);
}

}  // namespace tdorbit
