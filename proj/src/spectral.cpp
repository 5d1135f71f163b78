#include "lscat/spectral.hpp"

#include <algorithm>

#include "lscat/element_io.hpp"
#include "lscat/errors.hpp"
#include "lscat/linalg.hpp"

namespace lscat {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Matrix of `map` from src into tgt, dropping image terms outside tgt.
template <typename Map>
RationalMatrix projected_matrix(const Map& map, const GradedBasis& src, const GradedBasis& tgt) {
    RationalMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Element image = map(src[j]);
        for (const auto& [mono, c] : image.terms())
            if (auto row = tgt.index_of(mono)) m(*row, j) = c;
    }
    return m;
}

void require_not_quadratic(const SullivanModel& model) {
    if (model.k && *model.k == 2) throw PreconditionError("k = 2: the delta differential is defined for k = 3");
}

}  // namespace

std::vector<Monomial> filtration_basis(const SullivanModel& model, int p, int n) {
    if (!model.k) throw PreconditionError("d = 0: k is undefined");
    if (p < 0) return {};
    const int k = *model.k;
    return basis(*model.algebra, n, WordlengthRange::between(p * (k - 1), p * (k - 1) + k - 2));
}

std::vector<Monomial> pair_basis(const Algebra& algebra, int p, int n) {
    if (p < 0) return {};
    return basis(algebra, n, WordlengthRange::between(2 * p, 2 * p + 1));
}

// --- FilteredPair -----------------------------------------------------------

FilteredPair::FilteredPair(AlgebraPtr algebra, int p, int n, Element u, Element v)
    : p_(p), n_(n), u_(u.is_zero() ? Element(algebra) : std::move(u)), v_(v.is_zero() ? Element(algebra) : std::move(v)) {
    if (p < 0) throw ModelError("negative filtration index");
    if (!same_algebra(u_.algebra(), algebra) || !same_algebra(v_.algebra(), algebra))
        throw ModelError("pair components belong to a different algebra");
    for (const auto& [m, c] : u_.terms())
        if (m.wordlength() != 2 * p || m.degree() != n)
            throw ModelError("u must lie in (Lambda^" + std::to_string(2 * p) + " V)^" + std::to_string(n));
    for (const auto& [m, c] : v_.terms())
        if (m.wordlength() != 2 * p + 1 || m.degree() != n)
            throw ModelError("v must lie in (Lambda^" + std::to_string(2 * p + 1) + " V)^" + std::to_string(n));
}

FilteredPair FilteredPair::from_element(int p, int n, const Element& e) {
    return FilteredPair(e.algebra(), p, n, e.wordlength_range(2 * p, 2 * p), e.wordlength_range(2 * p + 1, 2 * p + 1));
}

std::string format_pair(const FilteredPair& pair) {
    return "(" + format_element(pair.u()) + ", " + format_element(pair.v()) + ")";
}

// --- delta ------------------------------------------------------------------

DeltaOperator::DeltaOperator(const SullivanModel& model)
    : d3_(model.algebra), d4_(model.algebra) {
    require_not_quadratic(model);
    d3_ = homogeneous_component(model.d, 3);
    d4_ = homogeneous_component(model.d, 4);
}

Element DeltaOperator::apply(const Monomial& m) const {
    Element out = d3_.apply(m);
    if (m.wordlength() % 2 == 0) out += d4_.apply(m);
    return out;
}

Element DeltaOperator::apply(const Element& e) const {
    Element out(e.algebra());
    for (const auto& [m, c] : e.terms()) out += apply(m) * c;
    return out;
}

RationalMatrix DeltaOperator::matrix(const GradedBasis& src, const GradedBasis& tgt) const {
    RationalMatrix m(tgt.size(), src.size());
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Element image = apply(src[j]);
        for (const auto& [mono, c] : image.terms()) {
            auto row = tgt.index_of(mono);
            if (!row) throw InconsistencyError("delta image outside the target basis");
            m(*row, j) = c;
        }
    }
    return m;
}

FilteredPair pair_product(const SullivanModel& model, const FilteredPair& a, const FilteredPair& b) {
    if (model.k != 3) throw PreconditionError("pair product is defined for k = 3");
    if (!same_algebra(a.algebra(), model.algebra) || !same_algebra(b.algebra(), model.algebra))
        throw ModelError("pairs belong to a different model");
    return FilteredPair(model.algebra, a.p() + b.p(), a.n() + b.n(), a.u() * b.u(), a.u() * b.v() + a.v() * b.u());
}

FilteredPair delta_apply(const SullivanModel& model, const FilteredPair& pair) {
    require_not_quadratic(model);
    if (!same_algebra(pair.algebra(), model.algebra)) throw ModelError("pair belongs to a different model");
    const Derivation d3 = homogeneous_component(model.d, 3);
    const Derivation d4 = homogeneous_component(model.d, 4);
    return FilteredPair(model.algebra, pair.p() + 1, pair.n() + 1, d3.apply(pair.u()),
                        d3.apply(pair.v()) + d4.apply(pair.u()));
}

// --- delta cohomology -------------------------------------------------------

std::size_t DeltaCohomology::dimension() const {
    std::size_t total = 0;
    for (const auto& [p, classes] : by_filtration) total += classes.size();
    return total;
}

std::size_t DeltaCohomology::dimension(int p) const {
    auto it = by_filtration.find(p);
    return it == by_filtration.end() ? 0 : it->second.size();
}

std::vector<DeltaClass> DeltaCohomology::classes() const {
    std::vector<DeltaClass> out;
    for (const auto& [p, classes] : by_filtration) out.insert(out.end(), classes.begin(), classes.end());
    return out;
}

DeltaCohomology delta_cohomology(const SullivanModel& model, int n) {
    const DeltaOperator delta(model);
    const Algebra& alg = *model.algebra;
    DeltaCohomology result;
    result.degree = n;
    for (int p = 0; 2 * p <= std::max(n, 0); ++p) {
        const GradedBasis src(pair_basis(alg, p, n));
        if (src.size() == 0) continue;
        const GradedBasis tgt(pair_basis(alg, p + 1, n + 1));
        const GradedBasis prev(pair_basis(alg, p - 1, n - 1));
        const auto cycles = kernel_basis(delta.matrix(src, tgt));
        const auto incoming = delta.matrix(prev, src);
        std::vector<DeltaClass> classes;
        for (auto idx : independent_modulo(incoming, cycles)) {
            const Element rep = src.element(model.algebra, cycles[idx]);
            classes.push_back(DeltaClass{p, n, FilteredPair::from_element(p, n, rep), classes.size()});
        }
        if (!classes.empty()) result.by_filtration.emplace(p, std::move(classes));
    }
    return result;
}

DepthResult representative_depth(const SullivanModel& model, const Element& cocycle, int n) {
    const DeltaOperator delta(model);
    if (!delta.apply(cocycle).is_zero()) throw PreconditionError("not a delta-cocycle");
    const Algebra& alg = *model.algebra;
    const GradedBasis prev(basis(alg, n - 1));
    const GradedBasis cur(basis(alg, n));
    const auto incoming = delta.matrix(prev, cur);
    std::vector<Element> boundaries;
    for (auto c : rref(incoming).pivots) boundaries.push_back(cur.element(model.algebra, incoming.column(c)));
    return maximize_depth(cocycle, boundaries, n);
}

// --- lifting ----------------------------------------------------------------

std::string to_string(LiftOutcome outcome) {
    switch (outcome) {
        case LiftOutcome::success: return "success";
        case LiftOutcome::died: return "died";
        case LiftOutcome::collapsed: return "collapsed";
    }
    return "?";
}

LiftTrace lift_to_d_cocycle(const SullivanModel& model, const Element& start) {
    require_not_quadratic(model);
    LiftTrace trace;
    trace.start = start;
    trace.final_cocycle = start;
    if (start.is_zero()) {
        trace.iterates.push_back(start);
        trace.outcome = LiftOutcome::collapsed;
        return trace;
    }
    const auto degree = start.degree();
    if (!degree) throw PreconditionError("lift start must be homogeneous");
    const int n = *degree;
    const Algebra& alg = *model.algebra;
    const DeltaOperator delta(model);
    if (!delta.apply(start).is_zero()) throw PreconditionError("lift start is not a delta-cocycle");

    trace.p = start.min_wordlength() / 2;
    trace.l = start.max_wordlength() / 2 - trace.p;
    trace.t_bound = floor_div(n - 4 * trace.p - 4 * trace.l - 1, 4);

    Element omega = start;
    trace.iterates.push_back(omega);
    // The lowest pair of d(omega) rises with every step and is bounded by
    // the largest word-length in degree n + 1.
    const int max_steps = (n + 1) / 2 + 2;
    for (int step = 0;; ++step) {
        if (step > max_steps) throw InconsistencyError("lift did not terminate");
        const Element d_omega = apply_d(model.d, omega);
        if (d_omega.is_zero()) break;
        const int q = d_omega.min_wordlength() / 2;
        const auto obstruction = FilteredPair::from_element(q, n + 1, d_omega.wordlength_range(2 * q, 2 * q + 1));
        if (!delta.apply(obstruction.total()).is_zero())
            throw InconsistencyError("obstruction is not a delta-cocycle");

        LiftStep record{obstruction, Element(model.algebra), false};
        const GradedBasis src(pair_basis(alg, q - 1, n));
        const GradedBasis tgt(pair_basis(alg, q, n + 1));
        if (auto b = solve_membership(delta.matrix(src, tgt), tgt.coordinates(obstruction.total()))) {
            record.corrector = src.element(model.algebra, *b);
        } else {
            // Kill the obstruction with a correction spread over pairs
            // p+1 .. q-1, leaving d(omega) zero through pair q.
            const GradedBasis wide_src(basis(alg, n, WordlengthRange::between(2 * trace.p + 2, 2 * q - 1)));
            const GradedBasis wide_tgt(basis(alg, n + 1, WordlengthRange::between(0, 2 * q + 1)));
            const auto map = [&](const Monomial& m) { return model.d.derivation().apply(m); };
            auto c = solve_membership(projected_matrix(map, wide_src, wide_tgt),
                                      wide_tgt.coordinates(d_omega.wordlength_range(0, 2 * q + 1)));
            if (!c) {
                trace.steps.push_back(std::move(record));
                trace.outcome = LiftOutcome::died;
                trace.died_at = trace.steps.size() - 1;
                trace.final_cocycle = omega;
                return trace;
            }
            record.corrector = wide_src.element(model.algebra, *c);
            record.extended = true;
        }
        omega -= record.corrector;
        trace.steps.push_back(std::move(record));
        trace.iterates.push_back(omega);
    }
    trace.final_cocycle = omega;
    trace.outcome = (omega.is_zero() || is_boundary(model, omega)) ? LiftOutcome::collapsed : LiftOutcome::success;
    return trace;
}

// --- e0 ---------------------------------------------------------------------

SpectralToomer toomer_spectral_detailed(const SullivanModel& model, std::optional<int> scan_bound) {
    if (model.k != 3)
        throw PreconditionError("the spectral method requires k = 3 (model has " +
                                (model.k ? "k = " + std::to_string(*model.k) : std::string("d = 0")) +
                                "); use the oracle");
    const auto cert = is_elliptic(model, scan_bound);
    if (!cert.is_elliptic()) throw PreconditionError("model is not elliptic (" + to_string(cert.status) + ")");

    const int n = formal_dimension(model);
    SpectralToomer out{ToomerResult{}, delta_cohomology(model, n), {}};
    std::optional<std::size_t> best;
    for (const auto& cls : out.top.classes()) {
        auto start = representative_depth(model, cls.representative.total(), n);
        auto trace = lift_to_d_cocycle(model, start.representative);
        out.lifts.push_back(ClassLift{cls, std::move(start), std::move(trace)});
        const auto& lift = out.lifts.back();
        if (lift.trace.outcome != LiftOutcome::success) continue;
        if (!best || lift.start.depth > out.lifts[*best].start.depth) best = out.lifts.size() - 1;
    }
    if (!best) throw InconsistencyError("no class of H^" + std::to_string(n) + "(delta) survives to a d-cocycle");

    const auto& winner = out.lifts[*best];
    out.result.method = ToomerMethod::spectral;
    out.result.e0 = winner.trace.final_cocycle.min_wordlength();
    out.result.representative = winner.trace.final_cocycle;
    out.result.witness = FiltrationWitness{winner.delta_class.p, out.result.e0 == 2 * winner.delta_class.p + 1};
    return out;
}

ToomerResult toomer_spectral(const SullivanModel& model, std::optional<int> scan_bound) {
    return toomer_spectral_detailed(model, scan_bound).result;
}

ToomerComparison compare_toomer(const SullivanModel& model, std::optional<int> scan_bound) {
    return ToomerComparison{toomer_oracle(model, scan_bound), toomer_spectral(model, scan_bound)};
}

ToomerComparison toomer_checked(const SullivanModel& model, std::optional<int> scan_bound) {
    auto cmp = compare_toomer(model, scan_bound);
    if (!cmp.agree())
        throw InconsistencyError("oracle e0 = " + std::to_string(cmp.oracle.e0) + " but spectral e0 = " +
                                 std::to_string(cmp.spectral.e0));
    return cmp;
}

}  // namespace lscat
