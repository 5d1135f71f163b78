#pragma once

// Random elements for property checks.

#include <random>

#include "lscat/algebra.hpp"
#include "lscat/spectral.hpp"

namespace lscat {

// Homogeneous element of the given degree with up to `max_terms` terms and
// small integer coefficients; zero when the degree has no monomials.
Element random_homogeneous(const AlgebraPtr& algebra, int degree, std::mt19937_64& rng, int max_terms = 4);

// Homogeneous element of a random degree in [0, max_degree].
Element random_element(const AlgebraPtr& algebra, int max_degree, std::mt19937_64& rng, int max_terms = 4);

// Random (u, v) in pair p of degree n.
FilteredPair random_pair(const AlgebraPtr& algebra, int p, int n, std::mt19937_64& rng, int max_terms = 3);

}  // namespace lscat
