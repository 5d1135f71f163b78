#pragma once

#include <optional>
#include <vector>

#include "lscat/algebra.hpp"

namespace lscat {

// Degree +1 derivation of Lambda V determined by its generator images.
// No validation beyond degrees: word-length components d_i of a
// differential are Derivations, and d_i^2 need not vanish.
class Derivation {
public:
    explicit Derivation(AlgebraPtr algebra);  // the zero map
    Derivation(AlgebraPtr algebra, std::vector<Element> images);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Element& image(std::size_t generator) const { return images_.at(generator); }
    const std::vector<Element>& images() const { return images_; }
    bool is_zero() const;

    // Leibniz extension: d(L x^e R) contributes (-1)^|L| e L x^(e-1) d(x) R.
    Element apply(const Element& e) const;
    Element apply(const Monomial& m) const;

    Derivation operator+(const Derivation& other) const;

private:
    AlgebraPtr algebra_;
    std::vector<Element> images_;
};

// A validated minimal differential: images in Lambda^{>=2} V of the right
// degree, and d^2 = 0. Since d^2 is itself a derivation, checking it on
// generators suffices.
class Differential {
public:
    const AlgebraPtr& algebra() const { return derivation_.algebra(); }
    const Derivation& derivation() const { return derivation_; }
    const Element& image(std::size_t generator) const { return derivation_.image(generator); }
    bool is_zero() const { return derivation_.is_zero(); }

    Element operator()(const Element& e) const { return derivation_.apply(e); }

private:
    explicit Differential(Derivation d) : derivation_(std::move(d)) {}
    friend Differential build_differential(const AlgebraPtr&, std::vector<Element>);

    Derivation derivation_;
};

// Throws ModelError naming the offending generator on a degree mismatch, a
// linear (non-minimal) term, or d^2 != 0.
Differential build_differential(const AlgebraPtr& algebra, std::vector<Element> images);

Element apply_d(const Differential& d, const Element& e);

// d_i: generator images cut down to their word-length-i part. Maps
// Lambda^s V into Lambda^{s+i-1} V.
Derivation homogeneous_component(const Differential& d, int i);

// Smallest word-length of a nonzero image component; nullopt when d = 0.
std::optional<int> detect_k(const Differential& d);

struct SullivanModel {
    AlgebraPtr algebra;
    Differential d;
    std::optional<int> k;  // nullopt iff d = 0

    explicit SullivanModel(Differential differential);
};

bool is_pure(const SullivanModel& model);

// A Sullivan model whose differential vanishes on V^even and maps V^odd
// into Lambda(V^even).
class PureModel {
public:
    // Throws PreconditionError if `model` is not pure.
    explicit PureModel(SullivanModel model);
    const SullivanModel& model() const { return model_; }

private:
    SullivanModel model_;
};

// d_sigma: zero on even generators, the Lambda(V^even) part of d on odd ones.
PureModel pure_projection(const SullivanModel& model);

}  // namespace lscat
