#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tdorbit::cli {

struct Check {
    std::string suite;
    std::string name;
    bool pass;
    std::string detail;
};

struct VerifyOptions {
    int n;
    std::uint32_t q;
    unsigned jobs;
    std::uint64_t budget;
    std::uint64_t random_pairs = 10000;
    std::uint64_t seed = 20240611;
};

const std::vector<std::string>& suite_names();  // without "all"

// Runs one suite, or every suite for "all". BudgetExceeded propagates.
std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace tdorbit::cli
