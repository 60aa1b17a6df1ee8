#pragma once

#include "tdorbit/bigint.hpp"
#include "tdorbit/fq.hpp"

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

namespace tdorbit {

/// Element g(alpha; beta) of the two-diagonal group G_n over F_p.
///
/// alpha has n entries (first superdiagonal), beta has n-1 entries (second
/// superdiagonal); all entries share one modulus.
class GroupElement {
public:
    GroupElement(FqVector alpha, FqVector beta);
    static GroupElement identity(int n, std::uint32_t p);
    static GroupElement from_values(const std::vector<std::int64_t>& alpha,
                                    const std::vector<std::int64_t>& beta, std::uint32_t p);

    int n() const { return static_cast<int>(alpha_.size()); }
    std::uint32_t p() const { return p_; }
    const FqVector& alpha() const { return alpha_; }
    const FqVector& beta() const { return beta_; }
    // 1-based accessors matching the coordinate names alpha_i, beta_j.
    const FieldElement& alpha(int i) const { return alpha_[i - 1]; }
    const FieldElement& beta(int j) const { return beta_[j - 1]; }

    bool is_identity() const;
    bool operator==(const GroupElement& o) const {
        return p_ == o.p_ && alpha_ == o.alpha_ && beta_ == o.beta_;
    }
    bool operator!=(const GroupElement& o) const { return !(*this == o); }

private:
    std::uint32_t p_;
    FqVector alpha_;
    FqVector beta_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

// beta''_i = beta_i + beta'_i + alpha_i alpha'_{i+1}.
GroupElement multiply(const GroupElement& g, const GroupElement& h);
// g(-alpha; -beta_i + alpha_i alpha_{i+1}).
GroupElement inverse(const GroupElement& g);
// by^-1 * x * by, evaluated by the closed-form beta shift
// a_i alpha'_{i+1} - a_{i+1} alpha'_i; alpha is unchanged.
GroupElement conjugate(const GroupElement& x, const GroupElement& by);

// q^(2n-1); throws BudgetExceeded above the budget.
std::uint64_t group_order(int n, std::uint32_t p, std::uint64_t budget = kDefaultBudget);

// Lexicographic position of g among all elements, alpha_1 most significant.
std::uint64_t element_index(const GroupElement& g);
GroupElement element_at(int n, std::uint32_t p, std::uint64_t index);

// All q^(2n-1) elements in lexicographic (alpha, beta) order.
std::vector<GroupElement> enumerate_group(int n, std::uint32_t p,
                                          std::uint64_t budget = kDefaultBudget);

// Uniform random element.
GroupElement random_element(int n, std::uint32_t p, std::mt19937_64& rng);

}  // namespace tdorbit
