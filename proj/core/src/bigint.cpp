#include "tdorbit/bigint.hpp"

#include "tdorbit/error.hpp"

#include <string>

namespace tdorbit {

BigInt ipow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigInt binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

std::uint64_t checked_power(std::uint64_t q, unsigned e, std::uint64_t budget,
                            const char* what) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > budget / q) {
            throw BudgetExceeded(std::string(what) + ": " + std::to_string(q) + "^" +
                                 std::to_string(e) + " exceeds budget " +
                                 std::to_string(budget));
        }
        r *= q;
    }
    if (r > budget)
        throw BudgetExceeded(std::string(what) + ": exceeds budget " + std::to_string(budget));
    return r;
}

}  // namespace tdorbit
