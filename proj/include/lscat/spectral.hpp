#pragma once

// Word-length filtration spectral sequence F^p = Lambda^{>=(k-1)p} V.
// For k = 3 the E_1 term is Lambda V regraded by pairs
// (Lambda^{2p} V + Lambda^{2p+1} V) with differential
// delta(u, v) = (d3 u, d3 v + d4 u).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lscat/algebra.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/differential.hpp"

namespace lscat {

// Monomial basis of (F^p / F^{p+1})^n: word-lengths p(k-1) .. p(k-1)+k-2.
// Throws PreconditionError when d = 0 (k undefined).
std::vector<Monomial> filtration_basis(const SullivanModel& model, int p, int n);

// Monomials of degree n and word-length 2p or 2p+1.
std::vector<Monomial> pair_basis(const Algebra& algebra, int p, int n);

// (u, v) in (Lambda^{2p} V)^n + (Lambda^{2p+1} V)^n.
class FilteredPair {
public:
    // Throws ModelError if a term of u (v) is not of word-length 2p (2p+1)
    // and degree n.
    FilteredPair(AlgebraPtr algebra, int p, int n, Element u, Element v);
    // Splits an element living entirely in pair p.
    static FilteredPair from_element(int p, int n, const Element& e);

    int p() const { return p_; }
    int n() const { return n_; }
    const Element& u() const { return u_; }
    const Element& v() const { return v_; }
    Element total() const { return u_ + v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    const AlgebraPtr& algebra() const { return u_.algebra(); }

    bool operator==(const FilteredPair&) const = default;

private:
    int p_;
    int n_;
    Element u_;
    Element v_;
};

std::string format_pair(const FilteredPair& pair);

// The delta differential of the k = 3 spectral sequence, as a map on all of
// Lambda V: delta(e) = d3(e) + d4(even word-length part of e).
class DeltaOperator {
public:
    // Throws PreconditionError when k = 2.
    explicit DeltaOperator(const SullivanModel& model);

    Element apply(const Element& e) const;
    Element apply(const Monomial& m) const;
    RationalMatrix matrix(const GradedBasis& src, const GradedBasis& tgt) const;

private:
    Derivation d3_;
    Derivation d4_;
};

// (u, v)(u', v') = (uu', uv' + vu'). Requires k = 3.
FilteredPair pair_product(const SullivanModel& model, const FilteredPair& a, const FilteredPair& b);

// delta(u, v) = (d3 u, d3 v + d4 u), landing in (p + 1, n + 1).
FilteredPair delta_apply(const SullivanModel& model, const FilteredPair& pair);

struct DeltaClass {
    int p = 0;
    int n = 0;
    FilteredPair representative;
    std::size_t index = 0;  // position within the basis of H^{p, n-p}
};

struct DeltaCohomology {
    int degree = 0;
    std::map<int, std::vector<DeltaClass>> by_filtration;

    std::size_t dimension() const;
    std::size_t dimension(int p) const;
    std::vector<DeltaClass> classes() const;
};

DeltaCohomology delta_cohomology(const SullivanModel& model, int n);

// Largest s such that the delta-class of `cocycle` (degree n) has a
// representative in Lambda^{>=s} V, with that representative. Boundaries
// come from the whole delta-complex in degree n - 1.
DepthResult representative_depth(const SullivanModel& model, const Element& cocycle, int n);

enum class LiftOutcome { success, died, collapsed };

std::string to_string(LiftOutcome outcome);

struct LiftStep {
    FilteredPair obstruction;  // lowest pair component of d(omega_j)
    Element corrector;         // subtracted from omega_j
    // False when the corrector solves delta(b) = obstruction in the pair
    // just below; true when it had to be spread over several lower pairs
    // (the obstruction is killed by a longer differential).
    bool extended = false;
};

struct LiftTrace {
    Element start;
    int p = 0;        // start lies in Lambda^{>=2p} V
    int l = 0;        // number of pair components of start minus one
    int t_bound = 0;  // floor((N - 4p - 4l - 1) / 4)
    std::vector<Element> iterates;  // omega_0, omega_1, ...
    std::vector<LiftStep> steps;
    LiftOutcome outcome = LiftOutcome::collapsed;
    std::optional<std::size_t> died_at;
    Element final_cocycle;
};

// Corrects a delta-cocycle of homogeneous degree into a d-cocycle by
// killing the lowest pair component of d(omega_j) at each step. Throws
// PreconditionError if start is not a delta-cocycle or k = 2.
LiftTrace lift_to_d_cocycle(const SullivanModel& model, const Element& start);

struct ClassLift {
    DeltaClass delta_class;
    DepthResult start;
    LiftTrace trace;
};

struct SpectralToomer {
    ToomerResult result;
    DeltaCohomology top;
    std::vector<ClassLift> lifts;
};

// e0 as the best depth among delta-classes of H^N(Lambda V, delta) whose
// lift is a nontrivial d-cocycle. Requires k = 3 and an elliptic model.
SpectralToomer toomer_spectral_detailed(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);
ToomerResult toomer_spectral(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);

struct ToomerComparison {
    ToomerResult oracle;
    ToomerResult spectral;
    bool agree() const { return oracle.e0 == spectral.e0; }
};

ToomerComparison compare_toomer(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);

// As compare_toomer, throwing InconsistencyError on disagreement.
ToomerComparison toomer_checked(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);

}  // namespace lscat
