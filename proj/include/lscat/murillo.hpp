#pragma once

// Closed-form fundamental class of a pure elliptic model: with
// dy_j = sum_i a_j^i x_i, the class is the alternating sum over n-subsets
// J of the odd generators of det(A_J) times the product of the remaining
// odd generators.

#include <cstddef>
#include <vector>

#include "lscat/algebra.hpp"
#include "lscat/differential.hpp"

namespace lscat {

struct CoefficientMatrix {
    std::vector<std::size_t> even;  // column generators x_1..x_n
    std::vector<std::size_t> odd;   // row generators y_1..y_m
    std::vector<std::vector<Element>> entries;  // entries[j][i] = a_j^i

    std::size_t rows() const { return odd.size(); }
    std::size_t cols() const { return even.size(); }
    const Element& at(std::size_t j, std::size_t i) const { return entries.at(j).at(i); }
};

// Greedy extraction: a_j^i collects the remaining terms of dy_j divisible
// by x_i, divided by x_i. Entries of column i only involve x_i, ..., x_n.
CoefficientMatrix coefficient_matrix(const PureModel& pure);

// Determinant of a square matrix over the commutative subalgebra
// Lambda(V^even).
Element determinant(const std::vector<std::vector<Element>>& square, const AlgebraPtr& algebra);

// The alternating minor sum, sign-normalised so that its leading term (in
// MonomialOrder) is positive. Verified to be a d-cocycle of degree N that
// is not a d-boundary. Throws PreconditionError for non-elliptic input or
// fewer odd than even generators, InconsistencyError if verification fails.
Element murillo_fundamental_class(const PureModel& pure);

// Same sum without sign normalisation or verification.
Element murillo_minor_sum(const PureModel& pure, const CoefficientMatrix& a);

}  // namespace lscat
