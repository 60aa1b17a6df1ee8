#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/fq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <vector>

namespace tdorbit {

/// Element of Z[zeta_p] in the power basis zeta^0 .. zeta^(p-2).
///
/// zeta^(p-1) is rewritten as -(1 + zeta + ... + zeta^(p-2)), so the
/// coefficient tuple is unique and equality is coefficientwise. Coefficient
/// arithmetic is checked; exceeding int64 raises Overflow.
class CycInt {
public:
    explicit CycInt(std::uint32_t p);  // zero
    CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs);

    static CycInt zero(std::uint32_t p) { return CycInt(p); }
    static CycInt integer(std::uint32_t p, std::int64_t c);
    static CycInt zeta_power(std::uint32_t p, std::int64_t k);

    std::uint32_t p() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    // True iff the element lies in Z (all non-constant coefficients vanish).
    bool is_rational() const;
    std::int64_t constant() const { return c_[0]; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }
    CycInt scaled(std::int64_t k) const;
    // Multiplication by zeta^k; cheaper than a full product.
    CycInt times_zeta(std::int64_t k) const;
    // Field automorphism zeta -> zeta^(-1), i.e. complex conjugation.
    CycInt conj() const;
    // Exact division of every coefficient; Overflow-free, throws if inexact.
    CycInt divided_exactly(std::int64_t d) const;

    bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

private:
    void same_ring(const CycInt& o) const;
    // Full length-p representation modulo zeta^p - 1, reduced to length p-1.
    static CycInt reduce(std::uint32_t p, const std::vector<std::int64_t>& full);

    std::uint32_t p_;
    std::vector<std::int64_t> c_;
};

std::ostream& operator<<(std::ostream& os, const CycInt& a);

// e(x) = zeta_p^x.
CycInt e_char(const FieldElement& x);

/// Reduced fraction with arbitrary-precision parts and positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(BigInt num, BigInt den);
    explicit ExactRational(const boost::multiprecision::cpp_rational& r) : r_(r) {}

    BigInt num() const { return boost::multiprecision::numerator(r_); }
    BigInt den() const { return boost::multiprecision::denominator(r_); }
    bool is_integer(long v) const { return r_ == v; }

    bool operator==(const ExactRational& o) const { return r_ == o.r_; }
    bool operator!=(const ExactRational& o) const { return r_ != o.r_; }
    ExactRational operator+(const ExactRational& o) const { return ExactRational(r_ + o.r_); }

private:
    boost::multiprecision::cpp_rational r_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

// (1/|G|) sum_g chi1(g) conj(chi2(g)) over an aligned enumeration of G.
ExactRational hermitian_inner(const std::vector<CycInt>& vals1,
                              const std::vector<CycInt>& vals2,
                              std::uint64_t group_order);

// Same inner product for class functions stored once per conjugacy class.
ExactRational class_inner(const std::vector<CycInt>& vals1,
                          const std::vector<CycInt>& vals2,
                          const std::vector<std::uint64_t>& class_sizes,
                          std::uint64_t group_order);

}  // namespace tdorbit
