#include "lscat/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "lscat/errors.hpp"

namespace lscat {

namespace {

bool valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

AlgebraPtr Algebra::create(const std::vector<std::pair<std::string, int>>& specs) {
    std::vector<Generator> gens;
    gens.reserve(specs.size());
    for (const auto& [name, degree] : specs) {
        if (!valid_name(name)) throw ModelError("invalid generator name '" + name + "'");
        if (degree < 2)
            throw ModelError("generator '" + name + "' has degree " + std::to_string(degree) +
                             " < 2: not simply connected");
        for (const auto& g : gens)
            if (g.name == name) throw ModelError("duplicate generator name '" + name + "'");
        gens.push_back(Generator{name, degree, gens.size()});
    }
    return AlgebraPtr(new Algebra(std::move(gens)));
}

std::optional<std::size_t> Algebra::find(std::string_view name) const {
    for (const auto& g : generators_)
        if (g.name == name) return g.index;
    return std::nullopt;
}

std::size_t Algebra::count_even() const {
    return static_cast<std::size_t>(
        std::count_if(generators_.begin(), generators_.end(), [](const Generator& g) { return g.is_even(); }));
}

std::size_t Algebra::count_odd() const { return size() - count_even(); }

int Algebra::max_degree() const {
    int m = 0;
    for (const auto& g : generators_) m = std::max(m, g.degree);
    return m;
}

int Algebra::max_even_degree() const {
    int m = 0;
    for (const auto& g : generators_)
        if (g.is_even()) m = std::max(m, g.degree);
    return m;
}

std::vector<std::size_t> Algebra::even_indices() const {
    std::vector<std::size_t> out;
    for (const auto& g : generators_)
        if (g.is_even()) out.push_back(g.index);
    return out;
}

std::vector<std::size_t> Algebra::odd_indices() const {
    std::vector<std::size_t> out;
    for (const auto& g : generators_)
        if (g.is_odd()) out.push_back(g.index);
    return out;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    return a && b && *a == *b;
}

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(const Algebra& algebra, std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.size() != algebra.size()) throw ModelError("monomial does not match algebra");
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        const auto& g = algebra.generator(i);
        const int e = exponents_[i];
        if (e < 0) throw ModelError("negative exponent on '" + g.name + "'");
        if (g.is_odd() && e > 1) throw ModelError("odd generator '" + g.name + "' squared");
        degree_ += e * g.degree;
        wordlength_ += e;
    }
}

Monomial Monomial::unit(const Algebra& algebra) { return Monomial(algebra, std::vector<int>(algebra.size(), 0)); }

Monomial Monomial::power(const Algebra& algebra, std::size_t generator, int exponent) {
    std::vector<int> e(algebra.size(), 0);
    e.at(generator) = exponent;
    return Monomial(algebra, std::move(e));
}

bool Monomial::is_even_only(const Algebra& algebra) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] != 0 && algebra.generator(i).is_odd()) return false;
    return true;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.wordlength() != b.wordlength()) return a.wordlength() < b.wordlength();
    return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                        a.exponents().end());
}

std::optional<std::pair<Monomial, int>> multiply(const Algebra& algebra, const Monomial& a, const Monomial& b) {
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    std::vector<int> out(ea.size());
    // Moving each odd factor of b leftwards past the odd factors of a with a
    // larger index costs one sign per transposition.
    int odd_a_after = 0;
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (algebra.generator(i).is_odd() && ea[i] != 0) ++odd_a_after;
    int swaps = 0;
    for (std::size_t i = 0; i < ea.size(); ++i) {
        const bool odd = algebra.generator(i).is_odd();
        if (odd && ea[i] != 0) --odd_a_after;
        if (odd && ea[i] != 0 && eb[i] != 0) return std::nullopt;
        if (odd && eb[i] != 0) swaps += odd_a_after;
        out[i] = ea[i] + eb[i];
    }
    return std::make_pair(Monomial(algebra, std::move(out)), swaps % 2 == 0 ? 1 : -1);
}

// --- Element ----------------------------------------------------------------

Element::Element(AlgebraPtr algebra, const Monomial& m, const Rational& coefficient) : algebra_(std::move(algebra)) {
    add_term(m, coefficient);
}

Element Element::scalar(AlgebraPtr algebra, const Rational& value) {
    auto unit = Monomial::unit(*algebra);
    return Element(std::move(algebra), unit, value);
}

Element Element::generator(AlgebraPtr algebra, std::string_view name) {
    auto idx = algebra->find(name);
    if (!idx) throw ModelError("unknown generator '" + std::string(name) + "'");
    return generator(std::move(algebra), *idx);
}

Element Element::generator(AlgebraPtr algebra, std::size_t index) {
    auto m = Monomial::power(*algebra, index);
    return Element(std::move(algebra), m);
}

Rational Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Monomial& m, const Rational& coefficient) {
    if (lscat::is_zero(coefficient)) return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (lscat::is_zero(it->second)) terms_.erase(it);
    }
}

std::optional<int> Element::degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return std::nullopt;
    return d;
}

bool Element::is_homogeneous() const { return terms_.empty() || degree().has_value(); }

int Element::min_wordlength() const {
    int best = INT_MAX;
    for (const auto& [m, c] : terms_) best = std::min(best, m.wordlength());
    return best;
}

int Element::max_wordlength() const {
    int best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, m.wordlength());
    return best;
}

Element Element::wordlength_range(int lo, int hi) const {
    Element out(algebra_);
    for (const auto& [m, c] : terms_)
        if (m.wordlength() >= lo && m.wordlength() <= hi) out.terms_.emplace(m, c);
    return out;
}

void Element::check_same(const Element& other) const {
    if (!same_algebra(algebra_, other.algebra_)) throw ModelError("elements belong to different algebras");
}

Element& Element::operator+=(const Element& other) {
    check_same(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& other) {
    check_same(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Element& Element::operator*=(const Rational& factor) {
    if (lscat::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= factor;
    return *this;
}

Element Element::operator-() const {
    Element out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool Element::operator==(const Element& other) const {
    return same_algebra(algebra_, other.algebra_) && terms_ == other.terms_;
}

Element multiply(const Element& a, const Element& b) {
    if (!same_algebra(a.algebra(), b.algebra())) throw ModelError("elements belong to different algebras");
    const Algebra& alg = *a.algebra();
    Element out(a.algebra());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            auto prod = multiply(alg, ma, mb);
            if (!prod) continue;
            Rational c = ca * cb;
            if (prod->second < 0) c = -c;
            out.add_term(prod->first, c);
        }
    return out;
}

// --- bases ------------------------------------------------------------------

namespace {

void enumerate(const Algebra& algebra, std::size_t index, int remaining, int wordlength, bool even_only,
               const WordlengthRange& range, std::vector<int>& exps, std::vector<Monomial>& out) {
    if (wordlength > range.max) return;
    if (index == algebra.size()) {
        if (remaining == 0 && range.contains(wordlength)) out.emplace_back(algebra, exps);
        return;
    }
    const auto& g = algebra.generator(index);
    int max_e = remaining / g.degree;
    if (g.is_odd()) max_e = even_only ? 0 : std::min(max_e, 1);
    for (int e = 0; e <= max_e; ++e) {
        exps[index] = e;
        enumerate(algebra, index + 1, remaining - e * g.degree, wordlength + e, even_only, range, exps, out);
    }
    exps[index] = 0;
}

std::vector<Monomial> enumerate_basis(const Algebra& algebra, int degree, WordlengthRange range, bool even_only) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> exps(algebra.size(), 0);
    enumerate(algebra, 0, degree, 0, even_only, range, exps, out);
    std::sort(out.begin(), out.end(), MonomialOrder{});
    return out;
}

}  // namespace

std::vector<Monomial> basis(const Algebra& algebra, int degree, WordlengthRange range) {
    return enumerate_basis(algebra, degree, range, false);
}

std::vector<Monomial> even_basis(const Algebra& algebra, int degree) {
    return enumerate_basis(algebra, degree, {}, true);
}

std::map<int, Element> wordlength_split(const Element& e) {
    std::map<int, Element> out;
    for (const auto& [m, c] : e.terms()) {
        auto it = out.try_emplace(m.wordlength(), e.algebra()).first;
        it->second.add_term(m, c);
    }
    return out;
}

// --- GradedBasis ------------------------------------------------------------

GradedBasis::GradedBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> GradedBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vector GradedBasis::coordinates(const Element& e) const {
    Vector v(monomials_.size());
    for (const auto& [m, c] : e.terms()) {
        auto idx = index_of(m);
        if (!idx) throw ModelError("element has a term outside the basis");
        v[*idx] = c;
    }
    return v;
}

Element GradedBasis::element(const AlgebraPtr& algebra, const Vector& coords) const {
    Element out(algebra);
    for (std::size_t i = 0; i < coords.size() && i < monomials_.size(); ++i) out.add_term(monomials_[i], coords[i]);
    return out;
}

}  // namespace lscat
