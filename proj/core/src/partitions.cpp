#include "tdorbit/partitions.hpp"

#include "tdorbit/error.hpp"

#include <algorithm>
#include <sstream>

namespace tdorbit {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)), n_(0) {
    if (parts_.empty()) throw ShapeMismatch("composition needs at least one part");
    for (int v : parts_) {
        if (v < 1) throw ShapeMismatch("composition parts must be >= 1");
        n_ += v;
    }
}

Composition Composition::from_dividers(int n, const std::set<int>& dividers) {
    std::vector<int> parts;
    int last = 0;
    for (int d : dividers) {
        if (d <= last || d >= n) throw OutOfRange("divider outside 1..n-1");
        parts.push_back(d - last);
        last = d;
    }
    parts.push_back(n - last);
    return Composition(std::move(parts));
}

Composition Composition::from_mask(int n, std::uint64_t mask) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    std::vector<int> parts;
    int run = 1;
    for (int i = 1; i < n; ++i) {
        if (mask >> (i - 1) & 1u) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    return Composition(std::move(parts));
}

Composition Composition::parse(const std::string& digits) {
    std::vector<int> parts;
    for (char c : digits) {
        if (c < '1' || c > '9') throw ShapeMismatch("composition digit out of 1..9");
        parts.push_back(c - '0');
    }
    return Composition(std::move(parts));
}

std::set<int> Composition::dividers() const {
    std::set<int> d;
    int pos = 0;
    for (std::size_t r = 0; r + 1 < parts_.size(); ++r) {
        pos += parts_[r];
        d.insert(pos);
    }
    return d;
}

std::uint64_t Composition::mask() const {
    std::uint64_t m = 0;
    for (int d : dividers()) m |= std::uint64_t{1} << (d - 1);
    return m;
}

int Composition::odd_parts() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int v) { return v % 2; }));
}

int Composition::even_parts() const { return static_cast<int>(parts_.size()) - odd_parts(); }

std::vector<int> Composition::starts() const {
    std::vector<int> s;
    int pos = 1;
    for (int v : parts_) {
        s.push_back(pos);
        pos += v;
    }
    return s;
}

std::string Composition::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < parts_.size(); ++r) os << (r ? "+" : "") << parts_[r];
    return os.str();
}

std::string Composition::digits() const {
    std::ostringstream os;
    for (int v : parts_) {
        if (v <= 9)
            os << v;
        else
            os << '[' << v << ']';
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << c.str(); }

std::vector<Composition> all_compositions(int n) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    if (n > 40) throw BudgetExceeded("2^(n-1) compositions for n > 40");
    std::vector<Composition> out;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    out.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) out.push_back(Composition::from_mask(n, m));
    return out;
}

bool preceq(const Composition& p1, const Composition& p2) {
    if (p1.n() != p2.n()) return false;
    const auto m1 = p1.mask();
    return (m1 & p2.mask()) == m1;
}

std::vector<Composition> interval(const Composition& p1, const Composition& p2) {
    if (!preceq(p1, p2)) throw NotComparable(p1.str() + " does not precede " + p2.str());
    const std::uint64_t lo = p1.mask();
    const std::uint64_t extra = p2.mask() & ~lo;
    std::vector<Composition> out;
    // Enumerate subsets of extra in increasing numeric order.
    std::uint64_t s = 0;
    do {
        out.push_back(Composition::from_mask(p1.n(), lo | s));
        s = (s - extra) & extra;
    } while (s != 0);
    std::sort(out.begin(), out.end(),
              [](const Composition& a, const Composition& b) { return a.mask() < b.mask(); });
    return out;
}

const char* to_string(PartitionType t) {
    switch (t) {
        case PartitionType::Even: return "even";
        case PartitionType::Odd: return "odd";
        case PartitionType::Both: return "both";
    }
    return "?";
}

const char* to_string(FlockType t) { return t == FlockType::Even ? "even" : "odd"; }

PartitionType type_of(const Composition& p) {
    for (int v : p.parts())
        if (v != 1) return v % 2 == 0 ? PartitionType::Even : PartitionType::Odd;
    return PartitionType::Both;
}

bool has_type(const Composition& p, FlockType t) {
    const auto pt = type_of(p);
    if (pt == PartitionType::Both) return true;
    return (pt == PartitionType::Even) == (t == FlockType::Even);
}

std::uint64_t q_even(int n) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    const std::uint64_t pw = std::uint64_t{1} << n;
    return n % 2 == 0 ? (pw + 2) / 3 : (pw + 1) / 3;
}

std::uint64_t q_odd(int n) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    const std::uint64_t pw = std::uint64_t{1} << (n - 1);
    return n % 2 == 0 ? (pw + 1) / 3 : (pw + 2) / 3;
}

BigInt fibonacci(int n) {
    if (n < 0) throw OutOfRange("fibonacci index must be >= 0");
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return a;
}

std::uint64_t count_ones_twos(int n) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    // c[m] = compositions of m into 1s and 2s, by the last part.
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) c[m] = c[m - 1] + (m >= 2 ? c[m - 2] : 0);
    return c[n];
}

std::uint64_t count_all_odd(int n) {
    if (n < 1) throw OutOfRange("n must be >= 1");
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int last = 1; last <= m; last += 2) c[m] += c[m - last];
    return c[n];
}

std::vector<Composition> Flock::members() const { return interval(head, tail); }

bool Flock::contains(const Composition& p) const { return preceq(head, p) && preceq(p, tail); }

Composition flock_head(const Composition& p, FlockType t) {
    if (!has_type(p, t))
        throw TypeMismatch(p.str() + " is not of the " + to_string(t) + " type");
    // A head part starts at every odd part and at the first part != 1; even
    // parts are absorbed into the head part before them. For the odd type
    // the first part != 1 is odd, so the second rule adds nothing there.
    std::vector<int> head;
    bool seen_non_one = false;
    for (int v : p.parts()) {
        const bool first_non_one = v != 1 && !seen_non_one;
        if (v != 1) seen_non_one = true;
        if (v % 2 == 1 || first_non_one || head.empty())
            head.push_back(v);
        else
            head.back() += v;
    }
    return Composition(std::move(head));
}

Composition flock_tail(const Composition& head, FlockType t) {
    if (flock_head(head, t) != head)
        throw TypeMismatch(head.str() + " is not a flock head of the " + to_string(t) + " type");
    std::vector<int> tail;
    bool three_placed = false;
    for (int v : head.parts()) {
        int rest = v;
        if (v % 2 == 0) {
            // Only even-type heads have an even part.
        } else if (t == FlockType::Odd && v >= 3 && !three_placed) {
            tail.push_back(3);
            rest -= 3;
            three_placed = true;
        } else {
            tail.push_back(1);
            rest -= 1;
        }
        for (; rest > 0; rest -= 2) tail.push_back(2);
    }
    return Composition(std::move(tail));
}

Flock flock_of(const Composition& p, FlockType t) {
    Composition head = flock_head(p, t);
    Composition tail = flock_tail(head, t);
    const auto hd = head.dividers();
    std::vector<int> dotted;
    for (int d : tail.dividers())
        if (!hd.count(d)) dotted.push_back(d);
    return Flock{std::move(head), std::move(tail), t, std::move(dotted)};
}

std::vector<Flock> all_flocks(int n, FlockType t) {
    std::vector<Flock> out;
    for (const auto& p : all_compositions(n))
        if (has_type(p, t) && flock_head(p, t) == p) out.push_back(flock_of(p, t));
    return out;
}

bool SparseSequence::contains(int i) const {
    return std::binary_search(indices.begin(), indices.end(), i);
}

std::string SparseSequence::str() const {
    std::ostringstream os;
    os << "C(";
    for (std::size_t s = 0; s < indices.size(); ++s) os << (s ? "," : "") << indices[s];
    os << ')';
    return os.str();
}

bool is_sparse(const std::vector<int>& indices, int n) {
    for (std::size_t s = 0; s < indices.size(); ++s) {
        if (indices[s] < 1 || indices[s] > n) return false;
        if (s > 0 && indices[s] - indices[s - 1] < 2) return false;
    }
    return true;
}

std::vector<SparseSequence> sparse_sequences(int n) {
    if (n < 0) throw OutOfRange("n must be >= 0");
    if (n > 40) throw BudgetExceeded("sparse sequences for n > 40");
    std::vector<SparseSequence> out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < total; ++m) {
        if (m & (m >> 1)) continue;
        SparseSequence s;
        for (int i = 1; i <= n; ++i)
            if (m >> (i - 1) & 1u) s.indices.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

NeighbourSets iminus_iplus(const SparseSequence& s, int n) {
    if (!is_sparse(s.indices, n)) throw OutOfRange(s.str() + " is not sparse in 1.." + std::to_string(n));
    NeighbourSets out;
    for (int i = 1; i <= n; ++i) {
        const bool nb = s.contains(i - 1) || s.contains(i + 1);
        (nb ? out.minus : out.plus).push_back(i);
    }
    return out;
}

SparseSequence container_of_flock(const Flock& f) {
    const auto& parts = f.tail.parts();
    SparseSequence s;
    if (f.type == FlockType::Even) {
        // s-th part equal to 2, at part number i_s, gives i_s + s.
        int s_count = 0;
        for (std::size_t r = 0; r < parts.size(); ++r)
            if (parts[r] == 2) s.indices.push_back(static_cast<int>(r) + 1 + ++s_count);
        return s;
    }
    // Odd type: 1, then i_1 + 2 for the part 3 and i_s + s + 1 for the 2s.
    s.indices.push_back(1);
    int s_count = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (parts[r] == 3 || parts[r] == 2) {
            ++s_count;
            s.indices.push_back(static_cast<int>(r) + 1 + s_count + 1);
        }
    }
    return s;
}

}  // namespace tdorbit
