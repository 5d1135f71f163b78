#include "lscat/random.hpp"

namespace lscat {

namespace {

Element random_from(const AlgebraPtr& algebra, const std::vector<Monomial>& monomials, std::mt19937_64& rng,
                    int max_terms) {
    Element e(algebra);
    if (monomials.empty()) return e;
    std::uniform_int_distribution<std::size_t> pick(0, monomials.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        int c = 0;
        while (c == 0) c = coeff(rng);
        e.add_term(monomials[pick(rng)], c);
    }
    return e;
}

}  // namespace

Element random_homogeneous(const AlgebraPtr& algebra, int degree, std::mt19937_64& rng, int max_terms) {
    return random_from(algebra, basis(*algebra, degree), rng, max_terms);
}

Element random_element(const AlgebraPtr& algebra, int max_degree, std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    return random_homogeneous(algebra, deg(rng), rng, max_terms);
}

FilteredPair random_pair(const AlgebraPtr& algebra, int p, int n, std::mt19937_64& rng, int max_terms) {
    const auto us = basis(*algebra, n, WordlengthRange::exactly(2 * p));
    const auto vs = basis(*algebra, n, WordlengthRange::exactly(2 * p + 1));
    return FilteredPair(algebra, p, n, random_from(algebra, us, rng, max_terms), random_from(algebra, vs, rng, max_terms));
}

}  // namespace lscat
