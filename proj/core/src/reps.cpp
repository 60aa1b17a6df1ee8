#include "tdorbit/reps.hpp"

#include "tdorbit/error.hpp"
#include "tdorbit/parallel.hpp"

#include <string>

namespace tdorbit {

MonomialMatrix MonomialMatrix::identity(std::size_t dim, std::uint32_t p) {
    MonomialMatrix m;
    m.col.resize(dim);
    m.coef.assign(dim, CycInt::integer(p, 1));
    for (std::size_t r = 0; r < dim; ++r) m.col[r] = r;
    return m;
}

CycInt MonomialMatrix::trace() const {
    if (coef.empty()) throw DimensionMismatch("trace of an empty matrix");
    CycInt t(coef.front().p());
    for (std::size_t r = 0; r < col.size(); ++r)
        if (col[r] == r) t += coef[r];
    return t;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("monomial product dimensions");
    MonomialMatrix c;
    c.col.resize(a.dim());
    c.coef.reserve(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        const auto mid = a.col[r];
        c.col[r] = b.col[mid];
        c.coef.push_back(a.coef[r] * b.coef[mid]);
    }
    return c;
}

MonomialMatrix kronecker(const MonomialMatrix& a, const MonomialMatrix& b) {
    MonomialMatrix c;
    const auto db = b.dim();
    c.col.reserve(a.dim() * db);
    c.coef.reserve(a.dim() * db);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < db; ++j) {
            c.col.push_back(a.col[i] * db + b.col[j]);
            c.coef.push_back(a.coef[i] * b.coef[j]);
        }
    return c;
}

std::uint64_t BasicRepresentation::dim() const {
    std::uint64_t d = 1;
    for (int i = 0; i < n / 2; ++i) d *= p;
    return d;
}

BasicRepresentation make_basic(const FqVector& y, const FieldElement& invariant) {
    const int n = static_cast<int>(y.size()) + 1;
    const auto p = invariant.modulus();
    for (std::size_t j = 0; j < y.size(); ++j)
        if (y[j].is_zero()) throw ZeroInteriorY("basic orbit needs y_" + std::to_string(j + 1) + " != 0");
    FqVector x = zero_vector(n, p);
    FieldElement inv = FieldElement::zero(p);
    if (n % 2 == 1) {
        inv = invariant;
        FieldElement denom = FieldElement::one(p);
        for (int s = 2; s <= n - 1; s += 2) denom *= y[s - 1];
        x[0] = inv / denom;
    }
    return BasicRepresentation{n, p, y, inv, std::move(x)};
}

BasicRepresentation make_basic(const OrbitDescriptor& d) {
    if (d.partition.size() != 1)
        throw NotBasicOrbit("partition " + d.partition.str() + " has more than one part");
    const FieldElement inv = d.n % 2 == 1 ? d.odd_invariants.at(0) : FieldElement::zero(d.p);
    return make_basic(d.y, inv);
}

namespace {

void check_rep_shape(const BasicRepresentation& rep, const GroupElement& g) {
    if (g.n() != rep.n || g.p() != rep.p)
        throw ShapeMismatch("element of G_" + std::to_string(g.n()) + " applied to a rep of G_" +
                            std::to_string(rep.n));
}

}  // namespace

GroupElement transversal(int n, const FqVector& t) {
    if (static_cast<int>(t.size()) != n / 2) throw ShapeMismatch("transversal needs floor(n/2) entries");
    const auto p = t.empty() ? 0u : t.front().modulus();
    if (t.empty()) throw ShapeMismatch("G_1 has a trivial transversal; use the identity");
    FqVector a = zero_vector(n, p);
    for (std::size_t s = 0; s < t.size(); ++s) a[2 * s + 1] = t[s];
    return GroupElement(std::move(a), zero_vector(n - 1, p));
}

MasterSolution solve_master_equation(const GroupElement& g, const FqVector& t) {
    const int n = g.n();
    if (static_cast<int>(t.size()) != n / 2) throw ShapeMismatch("t needs floor(n/2) entries");
    FqVector tp = t;
    for (std::size_t s = 0; s < t.size(); ++s) tp[s] += g.alpha(static_cast<int>(2 * s + 2));
    FqVector a = g.alpha();
    for (int e = 2; e <= n; e += 2) a[e - 1] = FieldElement::zero(g.p());
    FqVector b = g.beta();
    for (int i = 1; i < n; ++i) {
        if (i % 2 == 1)
            b[i - 1] -= tp[(i + 1) / 2 - 1] * g.alpha(i);
        else
            b[i - 1] += t[i / 2 - 1] * g.alpha(i + 1);
    }
    return MasterSolution{GroupElement(std::move(a), std::move(b)), std::move(tp)};
}

MonomialMatrix basic_rep_matrix(const BasicRepresentation& rep, const GroupElement& g) {
    check_rep_shape(rep, g);
    const int n = rep.n;
    const auto p = rep.p;
    const int half = n / 2;
    const std::uint64_t dim = rep.dim();
    // 1-based coordinate helpers.
    auto al = [&](int i) { return g.alpha(i).value(); };
    auto be = [&](int j) { return g.beta(j).value(); };
    auto yv = [&](int j) { return rep.y[j - 1].value(); };

    // Phase part independent of t: sum_{i odd} x_i alpha_i + sum_j y_j beta_j.
    std::uint64_t base = 0;
    for (int i = 1; i <= n; i += 2) base += std::uint64_t{rep.x[i - 1].value()} * al(i);
    for (int j = 1; j < n; ++j) base += std::uint64_t{yv(j)} * be(j);
    base %= p;

    MonomialMatrix m;
    m.col.resize(dim);
    m.coef.reserve(dim);
    std::vector<std::uint32_t> t(half), tp(half);
    for (std::uint64_t r = 0; r < dim; ++r) {
        std::uint64_t rest = r;
        for (int s = half - 1; s >= 0; --s) {
            t[s] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        // Master Equation, solved: t'_e = t_e + alpha_e for even e; then
        // beta'_i = beta_i - t'_{i+1} alpha_i (i odd), beta_i + t_i alpha_{i+1} (i even).
        std::uint64_t col = 0;
        for (int s = 0; s < half; ++s) {
            tp[s] = static_cast<std::uint32_t>((t[s] + al(2 * s + 2)) % p);
            col = col * p + tp[s];
        }
        std::uint64_t phase = base;
        for (int i = 1; i < n; ++i) {
            if (i % 2 == 1) {
                const std::uint64_t d = std::uint64_t{tp[(i + 1) / 2 - 1]} * al(i) % p;
                phase += (p - d) * yv(i);
            } else {
                phase += std::uint64_t{t[i / 2 - 1]} * al(i + 1) % p * yv(i);
            }
            phase %= p;
        }
        m.col[r] = col;
        m.coef.push_back(CycInt::zeta_power(p, static_cast<std::int64_t>(phase)));
    }
    return m;
}

CycInt basic_character(const BasicRepresentation& rep, const GroupElement& g) {
    check_rep_shape(rep, g);
    const int n = rep.n;
    const auto p = rep.p;
    auto y = [&](int j) { return rep.y[j - 1]; };

    FieldElement phase = FieldElement::zero(p);
    for (int j = 1; j < n; ++j) phase += y(j) * g.beta(j);

    if (n % 2 == 0) {
        for (int i = 1; i <= n; ++i)
            if (!g.alpha(i).is_zero()) return CycInt::zero(p);
    } else {
        for (int e = 2; e < n; e += 2) {
            if (!g.alpha(e).is_zero()) return CycInt::zero(p);
            if (g.alpha(e - 1) * y(e - 1) != g.alpha(e + 1) * y(e)) return CycInt::zero(p);
        }
        FieldElement denom = FieldElement::one(p);
        for (int s = 2; s <= n - 1; s += 2) denom *= y(s);
        const FieldElement kappa = g.alpha(1) / denom;
        phase += kappa * rep.invariant;
    }
    return e_char(phase).scaled(static_cast<std::int64_t>(rep.dim()));
}

std::vector<GroupElement> project(const GroupElement& g, const Composition& part) {
    if (part.n() != g.n()) throw ShapeMismatch("composition of " + std::to_string(part.n()) +
                                               " applied to G_" + std::to_string(g.n()));
    std::vector<GroupElement> out;
    int lo = 0;
    for (int j : part.parts()) {
        FqVector a(g.alpha().begin() + lo, g.alpha().begin() + lo + j);
        FqVector b(g.beta().begin() + lo, g.beta().begin() + lo + j - 1);
        out.emplace_back(std::move(a), std::move(b));
        lo += j;
    }
    return out;
}

IrreducibleRepresentation::IrreducibleRepresentation(OrbitDescriptor d) : orbit(std::move(d)) {
    const auto& parts_ = orbit.partition.parts();
    int lo = 0;
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        const int j = parts_[r];
        FqVector y(orbit.y.begin() + lo, orbit.y.begin() + lo + j - 1);
        const FieldElement v = j % 2 == 1 ? orbit.odd_invariants.at(static_cast<int>(r))
                                          : FieldElement::zero(orbit.p);
        parts.push_back(make_basic(y, v));
        lo += j;
    }
}

std::uint64_t IrreducibleRepresentation::dim() const {
    std::uint64_t d = 1;
    for (const auto& b : parts) d *= b.dim();
    return d;
}

MonomialMatrix IrreducibleRepresentation::matrix(const GroupElement& g) const {
    const auto comps = project(g, orbit.partition);
    MonomialMatrix m = basic_rep_matrix(parts[0], comps[0]);
    for (std::size_t r = 1; r < parts.size(); ++r) m = kronecker(m, basic_rep_matrix(parts[r], comps[r]));
    return m;
}

CycInt IrreducibleRepresentation::value(const GroupElement& g) const {
    const auto comps = project(g, orbit.partition);
    CycInt v = CycInt::integer(orbit.p, 1);
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const CycInt c = basic_character(parts[r], comps[r]);
        if (c.is_zero()) return c;
        v *= c;
    }
    return v;
}

Character irreducible_character(const OrbitDescriptor& d, const ClassTable& table) {
    if (d.n != table.n() || d.p != table.p()) throw ShapeMismatch("descriptor and table disagree");
    const IrreducibleRepresentation rep(d);
    Character ch{d.n, d.p, rep.dim(), {}};
    ch.values.reserve(table.size());
    for (const auto& g : table.representatives()) ch.values.push_back(rep.value(g));
    return ch;
}

std::vector<Character> character_table(const ClassTable& table, unsigned jobs, std::uint64_t budget) {
    const auto orbits = enumerate_descriptors(table.n(), table.p(), budget);
    std::vector<Character> out(orbits.size());
    parallel_for(orbits.size(), jobs,
                 [&](std::size_t i) { out[i] = irreducible_character(orbits[i], table); });
    return out;
}

ExactRational inner(const Character& a, const Character& b, const ClassTable& table) {
    return class_inner(a.values, b.values, table.sizes(), table.group_order());
}

namespace {

// Integer polynomials in q, coefficient i of q^i.
using Poly = std::vector<BigInt>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

Poly poly_add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_pow(const Poly& a, int e) {
    Poly r{1};
    for (int i = 0; i < e; ++i) r = poly_mul(r, a);
    return r;
}

Poly monomial(int e) {
    Poly r(e + 1, 0);
    r[e] = 1;
    return r;
}

}  // namespace

CompletenessReport completeness_check(int n, std::uint32_t q) {
    require_prime(q);
    if (n < 1) throw OutOfRange("n must be >= 1");
    const BigInt Q = q;
    CompletenessReport rep;
    rep.sum_of_squares = 0;
    for (int k = 0; 2 * k <= n; ++k) rep.sum_of_squares += count_by_dimension(n, q, k) * ipow(Q, 2 * k);
    rep.group_order = ipow(Q, static_cast<unsigned>(2 * n - 1));
    rep.integer_identity = rep.sum_of_squares == rep.group_order;

    // P_i = sum_k q^(i+k) (q-1)^k C(i-k-1, k).
    auto P = [&](int i) {
        BigInt s = 0;
        for (int k = 0; k <= i; ++k)
            s += ipow(Q, static_cast<unsigned>(i + k)) * ipow(Q - 1, static_cast<unsigned>(k)) *
                 binomial(i - k - 1, k);
        return s;
    };
    rep.recurrence = P(1) == Q && (n < 2 || P(2) == Q * Q);
    for (int i = 3; i <= n; ++i)
        rep.recurrence = rep.recurrence && P(i) == Q * P(i - 1) + ipow(Q, 3) * (Q - 1) * P(i - 2);
    if (n >= 2) rep.recurrence = rep.recurrence && P(n) + Q * (Q - 1) * P(n - 1) == rep.group_order;

    const Poly qp{0, 1}, qm1{-1, 1};
    Poly lhs{0};
    for (int k = 0; 2 * k <= n; ++k) {
        Poly bracket = poly_add(poly_mul(Poly{binomial(n - k - 1, k)}, qp), Poly{binomial(n - k - 1, k - 1)});
        Poly term = poly_mul(poly_mul(monomial(n + k - 1), poly_pow(qm1, k)), bracket);
        lhs = poly_add(lhs, term);
    }
    rep.symbolic = lhs == monomial(2 * n - 1);
    return rep;
}

}  // namespace tdorbit
