#pragma once

// Randomised invariant checks shared by the unit tests and the acceptance
// runner. Each returns how many cases ran and the first failure, if any.

#include <cstdint>
#include <string>
#include <vector>

#include "lscat/differential.hpp"

namespace lscat::testing {

struct CheckResult {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    bool ok(int min_cases) const { return failures == 0 && cases >= min_cases; }
};

inline constexpr int kPropertyCases = 200;
inline constexpr std::uint64_t kPropertySeed = 20261018;

// Catalog models plus every file of the curated pool.
std::vector<SullivanModel> property_fixtures();

CheckResult check_graded_commutativity(int cases, std::uint64_t seed);
CheckResult check_leibniz(int cases, std::uint64_t seed);
CheckResult check_d_squared(int cases, std::uint64_t seed);
CheckResult check_delta_squared(int cases, std::uint64_t seed);
CheckResult check_delta_derivation(int cases, std::uint64_t seed);
// One case per elliptic fixture; every degree 0..N+2 is compared.
CheckResult check_poincare_duality();
// One case per (fixture, degree <= max_degree).
CheckResult check_basis_counts(int max_degree);

}  // namespace lscat::testing
