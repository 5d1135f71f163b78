#pragma once

// Free graded-commutative algebra over Q generated by finitely many
// homogeneous generators of degree >= 2: polynomial on the even
// generators, exterior on the odd ones.

#include <climits>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lscat/rational.hpp"

namespace lscat {

struct Generator {
    std::string name;
    int degree = 0;
    std::size_t index = 0;

    bool is_odd() const { return degree % 2 != 0; }
    bool is_even() const { return !is_odd(); }
    bool operator==(const Generator&) const = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

class Algebra {
public:
    // Generator indices follow declaration order. Throws ModelError on a
    // duplicate or malformed name, or on a degree below 2.
    static AlgebraPtr create(const std::vector<std::pair<std::string, int>>& specs);

    std::span<const Generator> generators() const { return generators_; }
    std::size_t size() const { return generators_.size(); }
    const Generator& generator(std::size_t i) const { return generators_.at(i); }
    std::optional<std::size_t> find(std::string_view name) const;

    std::size_t count_even() const;
    std::size_t count_odd() const;
    int max_degree() const;
    int max_even_degree() const;

    // Indices of even (resp. odd) generators in declaration order.
    std::vector<std::size_t> even_indices() const;
    std::vector<std::size_t> odd_indices() const;

    bool operator==(const Algebra& other) const { return generators_ == other.generators_; }

private:
    explicit Algebra(std::vector<Generator> gens) : generators_(std::move(gens)) {}
    std::vector<Generator> generators_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// A monomial is stored sign-free as its exponent vector; degree and
// word-length are cached at construction.
class Monomial {
public:
    Monomial() = default;
    // Throws ModelError if an odd generator has exponent > 1 or the vector
    // length does not match the algebra.
    Monomial(const Algebra& algebra, std::vector<int> exponents);

    static Monomial unit(const Algebra& algebra);
    static Monomial power(const Algebra& algebra, std::size_t generator, int exponent = 1);

    const std::vector<int>& exponents() const { return exponents_; }
    int exponent(std::size_t i) const { return exponents_[i]; }
    int degree() const { return degree_; }
    int wordlength() const { return wordlength_; }
    bool is_unit() const { return wordlength_ == 0; }
    // True if no odd generator occurs.
    bool is_even_only(const Algebra& algebra) const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> exponents_;
    int degree_ = 0;
    int wordlength_ = 0;
};

// Canonical term order: degree, then word-length, then lexicographically
// larger exponent vectors first (x1^2 before x1*x2 before x2^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Product of two monomials in canonical form: the result monomial and the
// Koszul sign, or nullopt when an odd generator would appear twice.
std::optional<std::pair<Monomial, int>> multiply(const Algebra& algebra, const Monomial& a,
                                                 const Monomial& b);

// Finite Q-linear combination of monomials. Coefficients are nonzero and
// kept in lowest terms by GMP.
class Element {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Element() = default;  // zero element not yet bound to an algebra
    explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
    Element(AlgebraPtr algebra, const Monomial& m, const Rational& coefficient = 1);

    static Element scalar(AlgebraPtr algebra, const Rational& value);
    static Element generator(AlgebraPtr algebra, std::string_view name);
    static Element generator(AlgebraPtr algebra, std::size_t index);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& coefficient);

    // Degree of the element if all terms share one degree (zero counts as
    // homogeneous of any degree; returns nullopt for it).
    std::optional<int> degree() const;
    bool is_homogeneous() const;
    int min_wordlength() const;  // requires nonzero
    int max_wordlength() const;  // requires nonzero

    // Terms whose word-length lies in [lo, hi].
    Element wordlength_range(int lo, int hi) const;

    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element& operator*=(const Rational& factor);
    Element operator-() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& q) { return a *= q; }
    friend Element operator*(const Rational& q, Element a) { return a *= q; }

    bool operator==(const Element& other) const;

private:
    void check_same(const Element& other) const;

    AlgebraPtr algebra_;
    Terms terms_;
};

// Bilinear graded-commutative product. Throws ModelError on mismatched algebras.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

struct WordlengthRange {
    int min = 0;
    int max = INT_MAX;

    static WordlengthRange exactly(int s) { return {s, s}; }
    static WordlengthRange at_least(int s) { return {s, INT_MAX}; }
    static WordlengthRange between(int lo, int hi) { return {lo, hi}; }
    bool contains(int s) const { return s >= min && s <= max; }
};

// Complete monomial basis of degree n, optionally restricted by
// word-length, sorted by MonomialOrder.
std::vector<Monomial> basis(const Algebra& algebra, int degree, WordlengthRange range = {});

// Monomial basis of Lambda(V^even) in degree n.
std::vector<Monomial> even_basis(const Algebra& algebra, int degree);

// e = sum of components; each component lies in Lambda^s V exactly.
std::map<int, Element> wordlength_split(const Element& e);

// Ordered monomial basis with a reverse index, used to move between
// elements and coordinate vectors.
class GradedBasis {
public:
    GradedBasis() = default;
    explicit GradedBasis(std::vector<Monomial> monomials);

    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    // Throws ModelError if e has a term outside the basis.
    Vector coordinates(const Element& e) const;
    Element element(const AlgebraPtr& algebra, const Vector& coords) const;

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t, MonomialOrder> index_;
};

}  // namespace lscat
