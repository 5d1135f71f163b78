#include "lscat/differential.hpp"

#include "lscat/element_io.hpp"
#include "lscat/errors.hpp"

namespace lscat {

Derivation::Derivation(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    images_.assign(algebra_->size(), Element(algebra_));
}

Derivation::Derivation(AlgebraPtr algebra, std::vector<Element> images)
    : algebra_(std::move(algebra)), images_(std::move(images)) {
    if (images_.size() != algebra_->size()) throw ModelError("one image per generator required");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const auto& g = algebra_->generator(i);
        if (!same_algebra(images_[i].algebra(), algebra_))
            throw ModelError("image of '" + g.name + "' belongs to a different algebra");
        if (images_[i].is_zero()) continue;
        auto deg = images_[i].degree();
        if (!deg || *deg != g.degree + 1)
            throw ModelError("image of '" + g.name + "' must be homogeneous of degree " +
                             std::to_string(g.degree + 1));
    }
}

bool Derivation::is_zero() const {
    for (const auto& e : images_)
        if (!e.is_zero()) return false;
    return true;
}

Element Derivation::apply(const Monomial& m) const {
    const Algebra& alg = *algebra_;
    Element out(algebra_);
    const auto& exps = m.exponents();
    int left_degree = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        const int e = exps[i];
        if (e == 0) continue;
        const auto& dx = images_[i];
        if (!dx.is_zero()) {
            std::vector<int> left(exps.size(), 0), right(exps.size(), 0);
            for (std::size_t j = 0; j < i; ++j) left[j] = exps[j];
            left[i] = e - 1;
            for (std::size_t j = i + 1; j < exps.size(); ++j) right[j] = exps[j];
            Rational coeff = e;
            if (left_degree % 2 != 0) coeff = -coeff;
            Element term = Element(algebra_, Monomial(alg, std::move(left)), coeff) * dx;
            out += term * Element(algebra_, Monomial(alg, std::move(right)));
        }
        left_degree += e * alg.generator(i).degree;
    }
    return out;
}

Element Derivation::apply(const Element& e) const {
    if (!same_algebra(e.algebra(), algebra_)) throw ModelError("element belongs to a different algebra");
    Element out(algebra_);
    for (const auto& [m, c] : e.terms()) out += apply(m) * c;
    return out;
}

Derivation Derivation::operator+(const Derivation& other) const {
    if (!same_algebra(algebra_, other.algebra_)) throw ModelError("derivations on different algebras");
    std::vector<Element> sum = images_;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.images_[i];
    return Derivation(algebra_, std::move(sum));
}

Differential build_differential(const AlgebraPtr& algebra, std::vector<Element> images) {
    Derivation d(algebra, std::move(images));
    for (std::size_t i = 0; i < algebra->size(); ++i) {
        const auto& img = d.image(i);
        if (!img.is_zero() && img.min_wordlength() < 2)
            throw ModelError("image of '" + algebra->generator(i).name +
                             "' has a linear term: model is not minimal");
    }
    for (std::size_t i = 0; i < algebra->size(); ++i) {
        Element dd = d.apply(d.image(i));
        if (!dd.is_zero())
            throw ModelError("d^2 != 0 on generator '" + algebra->generator(i).name + "': d(d(" +
                             algebra->generator(i).name + ")) = " + format_element(dd));
    }
    return Differential(std::move(d));
}

Element apply_d(const Differential& d, const Element& e) { return d(e); }

Derivation homogeneous_component(const Differential& d, int i) {
    std::vector<Element> images;
    images.reserve(d.algebra()->size());
    for (const auto& img : d.derivation().images()) images.push_back(img.wordlength_range(i, i));
    return Derivation(d.algebra(), std::move(images));
}

std::optional<int> detect_k(const Differential& d) {
    std::optional<int> k;
    for (const auto& img : d.derivation().images())
        if (!img.is_zero() && (!k || img.min_wordlength() < *k)) k = img.min_wordlength();
    return k;
}

SullivanModel::SullivanModel(Differential differential)
    : algebra(differential.algebra()), d(std::move(differential)), k(detect_k(d)) {}

bool is_pure(const SullivanModel& model) {
    const Algebra& alg = *model.algebra;
    for (std::size_t i = 0; i < alg.size(); ++i) {
        const auto& img = model.d.image(i);
        if (alg.generator(i).is_even()) {
            if (!img.is_zero()) return false;
            continue;
        }
        for (const auto& [m, c] : img.terms())
            if (!m.is_even_only(alg)) return false;
    }
    return true;
}

PureModel::PureModel(SullivanModel model) : model_(std::move(model)) {
    if (!is_pure(model_)) throw PreconditionError("model is not pure");
}

PureModel pure_projection(const SullivanModel& model) {
    const Algebra& alg = *model.algebra;
    std::vector<Element> images;
    for (std::size_t i = 0; i < alg.size(); ++i) {
        Element img(model.algebra);
        if (alg.generator(i).is_odd())
            for (const auto& [m, c] : model.d.image(i).terms())
                if (m.is_even_only(alg)) img.add_term(m, c);
        images.push_back(std::move(img));
    }
    try {
        return PureModel(SullivanModel(build_differential(model.algebra, std::move(images))));
    } catch (const ModelError& e) {
        throw InconsistencyError(std::string("pure projection is not a differential: ") + e.what());
    }
}

}  // namespace lscat
