#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <vector>

namespace tdorbit {

bool is_prime(std::uint32_t p);

// Throws NotPrime unless p is a prime >= 2.
void require_prime(std::uint32_t p);

/// Residue class in the prime field F_p.
///
/// Invariant: 0 <= value < p and p is prime. Primality is checked by the
/// public constructor; results of arithmetic inherit the operands' modulus.
class FieldElement {
public:
    FieldElement(std::int64_t value, std::uint32_t p);

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    bool operator==(const FieldElement& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // Orders by value; only meaningful within one modulus.
    bool operator<(const FieldElement& o) const { return v_ < o.v_; }

    static FieldElement zero(std::uint32_t p) { return {0u, p, Unchecked{}}; }
    static FieldElement one(std::uint32_t p) { return {1u, p, Unchecked{}}; }

private:
    struct Unchecked {};
    FieldElement(std::uint32_t v, std::uint32_t p, Unchecked) : v_(v), p_(p) {}
    void same_field(const FieldElement& o) const;

    std::uint32_t v_;
    std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

using FqVector = std::vector<FieldElement>;

FqVector zero_vector(std::size_t len, std::uint32_t p);
FqVector make_vector(const std::vector<std::int64_t>& values, std::uint32_t p);
std::vector<std::uint32_t> values_of(const FqVector& v);

// Rectangular matrix over F_p; dimensions may be zero.
class FqMatrix {
public:
    FqMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);
    static FqMatrix identity(std::size_t n, std::uint32_t p);
    static FqMatrix from_values(const std::vector<std::vector<std::int64_t>>& rows,
                                std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }

    FieldElement at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const FieldElement& v);

    FqMatrix transpose() const;
    FqVector apply(const FqVector& v) const;  // M * v

    // Reduced row echelon form; pivot columns are reported in increasing order.
    FqMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;

    bool operator==(const FqMatrix& o) const;

private:
    std::size_t idx(std::size_t r, std::size_t c) const { return r * cols_ + c; }

    std::size_t rows_;
    std::size_t cols_;
    std::uint32_t p_;
    std::vector<std::uint32_t> e_;
};

struct ImageCoset {
    // Rows form the reduced echelon basis of the column space of M.
    std::vector<FqVector> basis;
    // pivots[i] is the leading coordinate of basis[i].
    std::vector<std::size_t> pivots;
    // v with every pivot coordinate cleared by subtracting basis rows.
    FqVector representative;
};

ImageCoset image_and_coset(const FqMatrix& m, const FqVector& v);

// Representative of v modulo span(basis) when basis/pivots come from
// image_and_coset; avoids re-echelonizing on every lookup.
FqVector reduce_modulo(const std::vector<FqVector>& basis,
                       const std::vector<std::size_t>& pivots, FqVector v);

}  // namespace tdorbit

template <>
struct std::hash<tdorbit::FieldElement> {
    std::size_t operator()(const tdorbit::FieldElement& a) const noexcept {
        return (static_cast<std::size_t>(a.modulus()) << 32) ^ a.value();
    }
};
