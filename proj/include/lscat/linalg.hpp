#pragma once

// Dense exact linear algebra over Q.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lscat/rational.hpp"

namespace lscat {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RationalMatrix identity(std::size_t n);
    // Matrix whose columns are the given vectors, each of length `rows`.
    static RationalMatrix from_columns(std::size_t rows, const std::vector<Vector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    Vector apply(std::span<const Rational> x) const;

    // Rows selected by index, in the given order.
    RationalMatrix select_rows(std::span<const std::size_t> indices) const;

    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

// Gauss-Jordan elimination; the pivot of each row is its first nonzero
// column.
RrefResult rref(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

// Null space basis, one vector per free column with that variable set to 1
// and the other free variables set to 0.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

// Some x with m * x = b (free variables zero), or nullopt if b is not in
// the column space.
std::optional<Vector> solve_membership(const RationalMatrix& m, std::span<const Rational> b);

// ambient_dim - rank of the span of the columns of `generators`.
std::size_t quotient_dim(const RationalMatrix& generators, std::size_t ambient_dim);

// Indices of those `candidates` that are linearly independent modulo the
// column span of `subspace`, chosen greedily in order.
std::vector<std::size_t> independent_modulo(const RationalMatrix& subspace, const std::vector<Vector>& candidates);

}  // namespace lscat
