#include "lscat/linalg.hpp"

#include <stdexcept>

namespace lscat {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long x : r) data_.emplace_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
    RationalMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector RationalMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector RationalMatrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector RationalMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length mismatch");
    Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> indices) const {
    RationalMatrix out(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(indices[i], c);
    return out;
}

RrefResult rref(RationalMatrix m) {
    RrefResult result;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && sgn(m(r, c)) == 0) ++r;
        if (r == rows) continue;
        if (r != pivot_row)
            for (std::size_t k = 0; k < cols; ++k) swap(m(r, k), m(pivot_row, k));
        const Rational inv = 1 / m(pivot_row, c);
        for (std::size_t k = c; k < cols; ++k) m(pivot_row, k) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || sgn(m(i, c)) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m(pivot_row, k)) != 0) m(i, k) -= factor * m(pivot_row, k);
        }
        result.pivots.push_back(c);
        ++pivot_row;
    }
    result.rank = result.pivots.size();
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }

std::vector<Vector> kernel_basis(const RationalMatrix& m) {
    const auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vector> solve_membership(const RationalMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto red = rref(std::move(aug));
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
    return x;
}

std::size_t quotient_dim(const RationalMatrix& generators, std::size_t ambient_dim) {
    if (generators.cols() > 0 && generators.rows() != ambient_dim)
        throw std::invalid_argument("generators do not live in the ambient space");
    return ambient_dim - rank(generators);
}

std::vector<std::size_t> independent_modulo(const RationalMatrix& subspace, const std::vector<Vector>& candidates) {
    const std::size_t rows = candidates.empty() ? subspace.rows() : candidates.front().size();
    const std::size_t base = subspace.cols();
    RationalMatrix stacked(rows, base + candidates.size());
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < base; ++c) stacked(r, c) = subspace(r, c);
        for (std::size_t c = 0; c < candidates.size(); ++c) stacked(r, base + c) = candidates[c][r];
    }
    std::vector<std::size_t> out;
    for (auto p : rref(std::move(stacked)).pivots)
        if (p >= base) out.push_back(p - base);
    return out;
}

}  // namespace lscat
