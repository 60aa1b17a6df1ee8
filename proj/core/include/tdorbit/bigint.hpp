#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace tdorbit {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(const BigInt& base, unsigned exponent);

// C(a, b), zero when b < 0 or b > a.
BigInt binomial(long a, long b);

// Default ceiling on the number of objects any enumeration may materialize.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 22;

// Throws BudgetExceeded when q^e exceeds the budget; returns q^e otherwise.
std::uint64_t checked_power(std::uint64_t q, unsigned e, std::uint64_t budget,
                            const char* what);

}  // namespace tdorbit
