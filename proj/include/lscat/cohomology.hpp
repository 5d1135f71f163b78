#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lscat/algebra.hpp"
#include "lscat/differential.hpp"
#include "lscat/linalg.hpp"

namespace lscat {

// Matrix of a derivation between two monomial bases: column j holds the
// coordinates of D(src[j]) in `tgt`.
RationalMatrix derivation_matrix(const Derivation& derivation, const GradedBasis& src, const GradedBasis& tgt);

struct CochainMaps {
    GradedBasis previous;  // (Lambda V)^{n-1}
    GradedBasis current;   // (Lambda V)^n
    GradedBasis next;      // (Lambda V)^{n+1}
    RationalMatrix outgoing;  // d: (Lambda V)^n -> (Lambda V)^{n+1}
    RationalMatrix incoming;  // d: (Lambda V)^{n-1} -> (Lambda V)^n
};

CochainMaps cochain_maps(const SullivanModel& model, int n);

struct CohomologySpace {
    int degree = 0;
    std::size_t dimension = 0;
    std::vector<Element> representatives;  // cocycles, independent modulo boundaries
    std::vector<Element> boundary_basis;
};

CohomologySpace cohomology_basis(const SullivanModel& model, int n);

// dim V^even - sum (-1)^|x| |x|; the formal dimension of an elliptic model.
int formal_dimension(const Algebra& algebra);
inline int formal_dimension(const SullivanModel& model) { return formal_dimension(*model.algebra); }

enum class EllipticStatus { elliptic, not_elliptic, inconclusive };

std::string to_string(EllipticStatus status);

// Outcome of the finiteness test on Lambda(V^even) / (d_sigma V^odd).
struct EllipticityCertificate {
    EllipticStatus status = EllipticStatus::inconclusive;
    // Elliptic: the quotient vanishes on [window_start, window_start +
    // window_length), hence in every degree >= window_start.
    std::optional<int> window_start;
    int window_length = 0;
    int scan_bound = 0;
    // Degrees (<= scan_bound) in which the quotient is nonzero.
    std::vector<int> nonvanishing_degrees;
    std::string reason;

    bool is_elliptic() const { return status == EllipticStatus::elliptic; }
};

// Default scan bound is 2N + max generator degree.
EllipticityCertificate is_elliptic(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);

struct TopClass {
    int degree = 0;
    CohomologySpace space;
    const Element& representative() const { return space.representatives.front(); }
};

// Throws PreconditionError unless the model is elliptic and
// InconsistencyError if dim H^N != 1.
TopClass top_class(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);

// Best representative of a class modulo a subspace spanned by boundaries.
struct DepthResult {
    int depth = 0;
    Element representative;
};

// Largest s such that `cocycle` is congruent to an element of
// Lambda^{>=s} V modulo span(boundaries), with such a representative.
// All inputs live in degree `degree`. Throws PreconditionError if the
// cocycle itself lies in the span (no finite depth).
DepthResult maximize_depth(const Element& cocycle, const std::vector<Element>& boundaries, int degree);

// True if `e` (homogeneous) is a d-boundary.
bool is_boundary(const SullivanModel& model, const Element& e);

enum class ToomerMethod { oracle, spectral };

std::string to_string(ToomerMethod method);

struct FiltrationWitness {
    int p = 0;
    bool odd = false;  // e0 = 2p + 1 rather than 2p
};

struct ToomerResult {
    int e0 = 0;
    ToomerMethod method = ToomerMethod::oracle;
    Element representative;
    std::optional<FiltrationWitness> witness;
};

// e0 straight from the definition: the deepest word-length filtration
// containing a representative of the top class.
ToomerResult toomer_oracle(const SullivanModel& model, std::optional<int> scan_bound = std::nullopt);

// (k - 2) dim V^even + dim V^odd.
int lechuga_murillo_formula(const SullivanModel& model);

}  // namespace lscat
