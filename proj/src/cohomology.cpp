#include "lscat/cohomology.hpp"

#include <algorithm>

#include "lscat/errors.hpp"

namespace lscat {

RationalMatrix derivation_matrix(const Derivation& derivation, const GradedBasis& src, const GradedBasis& tgt) {
    RationalMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Element image = derivation.apply(src[j]);
        for (const auto& [mono, c] : image.terms()) {
            auto row = tgt.index_of(mono);
            if (!row) throw InconsistencyError("derivation image outside the target basis");
            m(*row, j) = c;
        }
    }
    return m;
}

CochainMaps cochain_maps(const SullivanModel& model, int n) {
    const Algebra& alg = *model.algebra;
    CochainMaps maps;
    maps.previous = GradedBasis(basis(alg, n - 1));
    maps.current = GradedBasis(basis(alg, n));
    maps.next = GradedBasis(basis(alg, n + 1));
    maps.outgoing = derivation_matrix(model.d.derivation(), maps.current, maps.next);
    maps.incoming = derivation_matrix(model.d.derivation(), maps.previous, maps.current);
    return maps;
}

CohomologySpace cohomology_basis(const SullivanModel& model, int n) {
    const auto maps = cochain_maps(model, n);
    CohomologySpace space;
    space.degree = n;
    const auto cycles = kernel_basis(maps.outgoing);
    const auto boundary = rref(maps.incoming);
    for (auto c : boundary.pivots)
        space.boundary_basis.push_back(maps.current.element(model.algebra, maps.incoming.column(c)));
    for (auto idx : independent_modulo(maps.incoming, cycles))
        space.representatives.push_back(maps.current.element(model.algebra, cycles[idx]));
    space.dimension = space.representatives.size();
    return space;
}

int formal_dimension(const Algebra& algebra) {
    int n = static_cast<int>(algebra.count_even());
    for (const auto& g : algebra.generators()) n += g.is_odd() ? g.degree : -g.degree;
    return n;
}

std::string to_string(EllipticStatus status) {
    switch (status) {
        case EllipticStatus::elliptic: return "elliptic";
        case EllipticStatus::not_elliptic: return "not_elliptic";
        case EllipticStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

// dim of (Lambda Q / I)^n with I generated by the given homogeneous
// elements of Lambda Q.
std::size_t quotient_dimension(const Algebra& alg, const AlgebraPtr& ptr, const std::vector<Element>& relations,
                               int n) {
    const GradedBasis ambient(even_basis(alg, n));
    if (ambient.size() == 0) return 0;
    std::vector<Vector> spanning;
    for (const auto& f : relations) {
        const int shift = n - *f.degree();
        if (shift < 0) continue;
        for (const auto& m : even_basis(alg, shift)) spanning.push_back(ambient.coordinates(Element(ptr, m) * f));
    }
    return quotient_dim(RationalMatrix::from_columns(ambient.size(), spanning), ambient.size());
}

}  // namespace

EllipticityCertificate is_elliptic(const SullivanModel& model, std::optional<int> scan_bound) {
    const Algebra& alg = *model.algebra;
    const auto pure = pure_projection(model);
    std::vector<Element> relations;
    for (auto i : alg.odd_indices())
        if (!pure.model().d.image(i).is_zero()) relations.push_back(pure.model().d.image(i));

    EllipticityCertificate cert;
    cert.window_length = alg.max_even_degree();
    cert.scan_bound = scan_bound.value_or(std::max(2 * formal_dimension(alg) + alg.max_degree(), 1));

    if (alg.count_even() == 0) {
        cert.status = EllipticStatus::elliptic;
        cert.window_start = 1;
        cert.reason = "no even generators";
        return cert;
    }

    int run_start = 1;
    for (int n = 1; n <= cert.scan_bound; ++n) {
        if (quotient_dimension(alg, model.algebra, relations, n) != 0) {
            cert.nonvanishing_degrees.push_back(n);
            run_start = n + 1;
        } else if (n - run_start + 1 == cert.window_length) {
            cert.status = EllipticStatus::elliptic;
            cert.window_start = run_start;
            cert.reason = "quotient vanishes on a window of length max even degree";
            return cert;
        }
    }

    // Sound infinite-dimensionality certificates.
    if (relations.size() < alg.count_even()) {
        cert.status = EllipticStatus::not_elliptic;
        cert.reason = std::to_string(relations.size()) + " nonzero relation(s) in a polynomial ring on " +
                      std::to_string(alg.count_even()) + " even generator(s)";
        return cert;
    }
    for (auto i : alg.even_indices()) {
        // If every relation vanishes once all other even generators are set
        // to zero, no power of x_i lies in the ideal.
        bool survives = true;
        for (const auto& f : relations)
            for (const auto& [m, c] : f.terms())
                if (m.wordlength() == m.exponent(i)) survives = false;
        if (survives) {
            cert.status = EllipticStatus::not_elliptic;
            cert.reason = "no power of " + alg.generator(i).name + " lies in the ideal of relations";
            return cert;
        }
    }
    cert.status = EllipticStatus::inconclusive;
    cert.reason = "no vanishing window found up to degree " + std::to_string(cert.scan_bound);
    return cert;
}

TopClass top_class(const SullivanModel& model, std::optional<int> scan_bound) {
    const auto cert = is_elliptic(model, scan_bound);
    if (!cert.is_elliptic()) throw PreconditionError("model is not elliptic (" + to_string(cert.status) + ": " + cert.reason + ")");
    TopClass top;
    top.degree = formal_dimension(model);
    top.space = cohomology_basis(model, top.degree);
    if (top.space.dimension != 1)
        throw InconsistencyError("dim H^" + std::to_string(top.degree) + " = " + std::to_string(top.space.dimension) +
                                 ", expected 1 for an elliptic model");
    return top;
}

DepthResult maximize_depth(const Element& cocycle, const std::vector<Element>& boundaries, int degree) {
    const auto& algebra = cocycle.algebra();
    const GradedBasis full(basis(*algebra, degree));
    const Vector target = full.coordinates(cocycle);
    std::vector<Vector> columns;
    columns.reserve(boundaries.size());
    for (const auto& b : boundaries) columns.push_back(full.coordinates(b));
    const RationalMatrix bmat = RationalMatrix::from_columns(full.size(), columns);

    if (solve_membership(bmat, target)) throw PreconditionError("class is zero: no finite depth");

    int max_wl = 0;
    for (const auto& m : full.monomials()) max_wl = std::max(max_wl, m.wordlength());
    for (int s = max_wl; s >= 0; --s) {
        // Coordinates of word-length < s must be cancelled by boundaries.
        std::vector<std::size_t> low;
        for (std::size_t i = 0; i < full.size(); ++i)
            if (full[i].wordlength() < s) low.push_back(i);
        Vector rhs;
        for (auto i : low) rhs.push_back(target[i]);
        auto sol = solve_membership(bmat.select_rows(low), rhs);
        if (!sol) continue;
        Element rep = cocycle;
        for (std::size_t j = 0; j < boundaries.size(); ++j)
            if (sgn((*sol)[j]) != 0) rep -= boundaries[j] * (*sol)[j];
        return {s, rep};
    }
    throw InconsistencyError("depth search exhausted");
}

bool is_boundary(const SullivanModel& model, const Element& e) {
    if (e.is_zero()) return true;
    auto deg = e.degree();
    if (!deg) throw ModelError("is_boundary needs a homogeneous element");
    const auto maps = cochain_maps(model, *deg);
    return solve_membership(maps.incoming, maps.current.coordinates(e)).has_value();
}

std::string to_string(ToomerMethod method) { return method == ToomerMethod::oracle ? "oracle" : "spectral"; }

ToomerResult toomer_oracle(const SullivanModel& model, std::optional<int> scan_bound) {
    const auto top = top_class(model, scan_bound);
    const auto best = maximize_depth(top.representative(), top.space.boundary_basis, top.degree);
    ToomerResult result;
    result.e0 = best.depth;
    result.method = ToomerMethod::oracle;
    result.representative = best.representative;
    return result;
}

int lechuga_murillo_formula(const SullivanModel& model) {
    if (!model.k) throw PreconditionError("d = 0: k is undefined");
    return (*model.k - 2) * static_cast<int>(model.algebra->count_even()) +
           static_cast<int>(model.algebra->count_odd());
}

}  // namespace lscat
