#include "tdorbit/fq.hpp"

#include "tdorbit/error.hpp"

#include <string>
#include <utility>

namespace tdorbit {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
    require_prime(p);
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    v_ = static_cast<std::uint32_t>(r);
}

void FieldElement::same_field(const FieldElement& o) const {
    if (p_ != o.p_)
        throw ModulusMismatch("F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    same_field(o);
    std::uint32_t s = v_ + o.v_;
    return {s >= p_ ? s - p_ : s, p_, Unchecked{}};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    same_field(o);
    return {v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_, Unchecked{}};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    same_field(o);
    auto prod = static_cast<std::uint64_t>(v_) * o.v_;
    return {static_cast<std::uint32_t>(prod % p_), p_, Unchecked{}};
}

FieldElement FieldElement::operator-() const {
    return {v_ == 0 ? 0u : p_ - v_, p_, Unchecked{}};
}

FieldElement FieldElement::inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
    // Extended Euclid on (v, p).
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        std::tie(a, b) = std::make_pair(b, a - t * b);
        std::tie(x0, x1) = std::make_pair(x1, x0 - t * x1);
    }
    std::int64_t r = x0 % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r), p_, Unchecked{}};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    same_field(o);
    return *this * o.inv();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

FqVector zero_vector(std::size_t len, std::uint32_t p) {
    return FqVector(len, FieldElement(0, p));
}

FqVector make_vector(const std::vector<std::int64_t>& values, std::uint32_t p) {
    require_prime(p);
    FqVector out;
    out.reserve(values.size());
    for (auto v : values) out.emplace_back(v, p);
    return out;
}

std::vector<std::uint32_t> values_of(const FqVector& v) {
    std::vector<std::uint32_t> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(e.value());
    return out;
}

FqMatrix::FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
    require_prime(p);
}

FqMatrix FqMatrix::identity(std::size_t n, std::uint32_t p) {
    FqMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.e_[m.idx(i, i)] = 1;
    return m;
}

FqMatrix FqMatrix::from_values(const std::vector<std::vector<std::int64_t>>& rows,
                               std::uint32_t p) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    FqMatrix m(rows.size(), c, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != c) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.set(r, j, FieldElement(rows[r][j], p));
    }
    return m;
}

FieldElement FqMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    return FieldElement(e_[idx(r, c)], p_);
}

void FqMatrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
    if (v.modulus() != p_) throw ModulusMismatch("matrix entry modulus");
    e_[idx(r, c)] = v.value();
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.e_[t.idx(c, r)] = e_[idx(r, c)];
    return t;
}

FqVector FqMatrix::apply(const FqVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix/vector size");
    FqVector out = zero_vector(rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out[r] += FieldElement(e_[idx(r, c)], p_) * v[c];
    return out;
}

FqMatrix FqMatrix::rref(std::vector<std::size_t>* pivots) const {
    FqMatrix m = *this;
    const std::uint64_t p = p_;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t sel = row;
        while (sel < rows_ && m.e_[m.idx(sel, col)] == 0) ++sel;
        if (sel == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m.e_[m.idx(sel, c)], m.e_[m.idx(row, c)]);
        const auto inv = FieldElement(m.e_[m.idx(row, col)], p_).inv().value();
        for (std::size_t c = 0; c < cols_; ++c)
            m.e_[m.idx(row, c)] = static_cast<std::uint32_t>(m.e_[m.idx(row, c)] * std::uint64_t{inv} % p);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            const std::uint64_t f = m.e_[m.idx(r, col)];
            if (f == 0) continue;
            for (std::size_t c = 0; c < cols_; ++c) {
                const std::uint64_t sub = f * m.e_[m.idx(row, c)] % p;
                m.e_[m.idx(r, c)] = static_cast<std::uint32_t>((m.e_[m.idx(r, c)] + p - sub) % p);
            }
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

std::size_t FqMatrix::rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
}

FqVector reduce_modulo(const std::vector<FqVector>& basis,
                       const std::vector<std::size_t>& pivots, FqVector v) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const FieldElement f = v[pivots[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis[i][j];
    }
    return v;
}

ImageCoset image_and_coset(const FqMatrix& m, const FqVector& v) {
    if (v.size() != m.rows())
        throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                " vs matrix rows " + std::to_string(m.rows()));
    for (const auto& e : v)
        if (e.modulus() != m.modulus()) throw ModulusMismatch("vector/matrix modulus");

    // Column space of M = row space of M^T.
    std::vector<std::size_t> piv;
    const FqMatrix r = m.transpose().rref(&piv);
    ImageCoset out;
    out.pivots = piv;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        FqVector row = zero_vector(m.rows(), m.modulus());
        for (std::size_t c = 0; c < m.rows(); ++c) row[c] = r.at(i, c);
        out.basis.push_back(std::move(row));
    }
    out.representative = reduce_modulo(out.basis, out.pivots, v);
    return out;
}

}  // namespace tdorbit
