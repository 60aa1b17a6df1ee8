#include "tdorbit/cyclo.hpp"

#include "tdorbit/error.hpp"

#include <string>

namespace tdorbit {
namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("cyclotomic coefficient addition");
    return r;
}

std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("cyclotomic coefficient subtraction");
    return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("cyclotomic coefficient product");
    return r;
}

std::int64_t mod_p(std::int64_t k, std::uint32_t p) {
    std::int64_t r = k % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p - 1, 0) { require_prime(p); }

CycInt::CycInt(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    require_prime(p);
    if (c_.size() != p - 1)
        throw LengthMismatch("Z[zeta_" + std::to_string(p) + "] needs " + std::to_string(p - 1) +
                             " coefficients");
}

CycInt CycInt::integer(std::uint32_t p, std::int64_t c) {
    CycInt r(p);
    r.c_[0] = c;
    return r;
}

CycInt CycInt::zeta_power(std::uint32_t p, std::int64_t k) {
    CycInt r(p);
    const auto e = static_cast<std::size_t>(mod_p(k, p));
    if (e < p - 1) {
        r.c_[e] = 1;
    } else {
        for (auto& c : r.c_) c = -1;
    }
    return r;
}

CycInt CycInt::reduce(std::uint32_t p, const std::vector<std::int64_t>& full) {
    CycInt r(p);
    const std::int64_t top = full[p - 1];
    for (std::size_t j = 0; j + 1 < p; ++j) r.c_[j] = sub_checked(full[j], top);
    return r;
}

void CycInt::same_ring(const CycInt& o) const {
    if (p_ != o.p_)
        throw ModulusMismatch("Z[zeta_" + std::to_string(p_) + "] vs Z[zeta_" +
                              std::to_string(o.p_) + "]");
}

bool CycInt::is_zero() const {
    for (auto c : c_)
        if (c != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
    CycInt r = *this;
    r += o;
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    CycInt r = *this;
    r -= o;
    return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
    same_ring(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = add_checked(c_[j], o.c_[j]);
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    same_ring(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] = sub_checked(c_[j], o.c_[j]);
    return *this;
}

CycInt CycInt::operator-() const { return CycInt(p_) - *this; }

CycInt CycInt::operator*(const CycInt& o) const {
    same_ring(o);
    std::vector<std::int64_t> full(p_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            auto& slot = full[(i + j) % p_];
            slot = add_checked(slot, mul_checked(c_[i], o.c_[j]));
        }
    }
    return reduce(p_, full);
}

CycInt CycInt::scaled(std::int64_t k) const {
    CycInt r = *this;
    for (auto& c : r.c_) c = mul_checked(c, k);
    return r;
}

CycInt CycInt::times_zeta(std::int64_t k) const {
    const auto s = static_cast<std::size_t>(mod_p(k, p_));
    std::vector<std::int64_t> full(p_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) full[(i + s) % p_] = c_[i];
    return reduce(p_, full);
}

CycInt CycInt::conj() const {
    std::vector<std::int64_t> full(p_, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) full[(p_ - i) % p_] = c_[i];
    return reduce(p_, full);
}

CycInt CycInt::divided_exactly(std::int64_t d) const {
    if (d == 0) throw DivisionByZero("cyclotomic division by 0");
    CycInt r = *this;
    for (auto& c : r.c_) {
        if (c % d != 0) throw RationalityViolation("coefficient not divisible by " + std::to_string(d));
        c /= d;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const CycInt& a) {
    os << '[';
    for (std::size_t j = 0; j < a.coeffs().size(); ++j) os << (j ? "," : "") << a.coeffs()[j];
    return os << ']';
}

CycInt e_char(const FieldElement& x) { return CycInt::zeta_power(x.modulus(), x.value()); }

ExactRational::ExactRational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    r_ = boost::multiprecision::cpp_rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    os << r.num();
    if (r.den() != 1) os << '/' << r.den();
    return os;
}

namespace {

ExactRational finish_inner(const CycInt& acc, std::uint64_t group_order) {
    if (!acc.is_rational()) throw RationalityViolation("inner product left Z");
    if (group_order == 0) throw LengthMismatch("empty group");
    return ExactRational(BigInt(acc.constant()), BigInt(group_order));
}

}  // namespace

ExactRational hermitian_inner(const std::vector<CycInt>& vals1,
                              const std::vector<CycInt>& vals2,
                              std::uint64_t group_order) {
    if (vals1.size() != vals2.size() || vals1.size() != group_order)
        throw LengthMismatch("value lists and group order disagree");
    if (vals1.empty()) throw LengthMismatch("empty value lists");
    CycInt acc(vals1.front().p());
    for (std::size_t i = 0; i < vals1.size(); ++i) acc += vals1[i] * vals2[i].conj();
    return finish_inner(acc, group_order);
}

ExactRational class_inner(const std::vector<CycInt>& vals1,
                          const std::vector<CycInt>& vals2,
                          const std::vector<std::uint64_t>& class_sizes,
                          std::uint64_t group_order) {
    if (vals1.size() != vals2.size() || vals1.size() != class_sizes.size())
        throw LengthMismatch("class function lengths disagree");
    if (vals1.empty()) throw LengthMismatch("empty class function");
    std::uint64_t total = 0;
    for (auto s : class_sizes) total += s;
    if (total != group_order) throw LengthMismatch("class sizes do not sum to the group order");
    CycInt acc(vals1.front().p());
    for (std::size_t i = 0; i < vals1.size(); ++i)
        acc += (vals1[i] * vals2[i].conj()).scaled(static_cast<std::int64_t>(class_sizes[i]));
    return finish_inner(acc, group_order);
}

}  // namespace tdorbit
