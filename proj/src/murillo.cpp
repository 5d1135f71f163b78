#include "lscat/murillo.hpp"

#include <map>

#include "lscat/cohomology.hpp"
#include "lscat/errors.hpp"

namespace lscat {

CoefficientMatrix coefficient_matrix(const PureModel& pure) {
    const auto& model = pure.model();
    const Algebra& alg = *model.algebra;
    CoefficientMatrix a;
    a.even = alg.even_indices();
    a.odd = alg.odd_indices();
    for (auto y : a.odd) {
        Element remaining = model.d.image(y);
        std::vector<Element> row;
        for (auto x : a.even) {
            Element entry(model.algebra);
            Element rest(model.algebra);
            for (const auto& [m, c] : remaining.terms()) {
                if (m.exponent(x) > 0) {
                    auto exps = m.exponents();
                    --exps[x];
                    entry.add_term(Monomial(alg, std::move(exps)), c);
                } else {
                    rest.add_term(m, c);
                }
            }
            row.push_back(std::move(entry));
            remaining = std::move(rest);
        }
        if (!remaining.is_zero()) throw InconsistencyError("pure differential has a term with no even factor");
        a.entries.push_back(std::move(row));
    }
    return a;
}

Element determinant(const std::vector<std::vector<Element>>& square, const AlgebraPtr& algebra) {
    const std::size_t n = square.size();
    if (n == 0) return Element::scalar(algebra, 1);
    if (n > 20) throw PreconditionError("determinant too large");
    // Laplace expansion along rows, memoised on the set of unused columns.
    std::map<unsigned long, Element> memo;
    auto det = [&](auto&& self, std::size_t row, unsigned long cols) -> Element {
        if (row == n) return Element::scalar(algebra, 1);
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        Element total(algebra);
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(cols & (1UL << c))) continue;
            const Element& entry = square[row][c];
            if (!entry.is_zero()) {
                Element minor = self(self, row + 1, cols & ~(1UL << c));
                Element term = entry * minor;
                if (position % 2 == 0)
                    total += term;
                else
                    total -= term;
            }
            ++position;
        }
        memo.emplace(cols, total);
        return total;
    };
    return det(det, 0, (1UL << n) - 1);
}

Element murillo_minor_sum(const PureModel& pure, const CoefficientMatrix& a) {
    const auto& algebra = pure.model().algebra;
    const std::size_t n = a.cols();
    const std::size_t m = a.rows();
    if (m < n) throw PreconditionError("fewer odd than even generators: no maximal minors");
    Element omega(algebra);
    // Enumerate subsets j_1 < ... < j_n of {1..m} via index vectors.
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    for (;;) {
        std::vector<std::vector<Element>> minor;
        std::size_t index_sum = 0;
        for (auto j : pick) {
            minor.push_back(a.entries[j]);
            index_sum += j + 1;
        }
        Element p = determinant(minor, algebra);
        if (!p.is_zero()) {
            Element complement = Element::scalar(algebra, 1);
            std::size_t next = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (next < n && pick[next] == j) {
                    ++next;
                    continue;
                }
                complement = complement * Element::generator(algebra, a.odd[j]);
            }
            Element term = p * complement;
            if (index_sum % 2 == 0)
                omega += term;
            else
                omega -= term;
        }
        // Advance to the next combination.
        std::size_t i = n;
        while (i > 0 && pick[i - 1] == m - n + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t k = i; k < n; ++k) pick[k] = pick[k - 1] + 1;
    }
    return omega;
}

Element murillo_fundamental_class(const PureModel& pure) {
    const auto& model = pure.model();
    const auto cert = is_elliptic(model);
    if (!cert.is_elliptic()) throw PreconditionError("model is not elliptic (" + to_string(cert.status) + ")");
    const auto a = coefficient_matrix(pure);
    Element omega = murillo_minor_sum(pure, a);
    if (omega.is_zero()) throw InconsistencyError("minor sum vanishes");
    if (sgn(omega.terms().begin()->second) < 0) omega = -omega;

    const int n = formal_dimension(model);
    if (omega.degree() != n)
        throw InconsistencyError("minor sum has degree " + std::to_string(omega.degree().value_or(-1)) +
                                 ", expected " + std::to_string(n));
    if (!apply_d(model.d, omega).is_zero()) throw InconsistencyError("minor sum is not a cocycle");
    if (is_boundary(model, omega)) throw InconsistencyError("minor sum is a boundary");
    return omega;
}

}  // namespace lscat
