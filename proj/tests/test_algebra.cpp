#include <gtest/gtest.h>

#include <random>

#include "lscat/algebra.hpp"
#include "lscat/element_io.hpp"
#include "lscat/errors.hpp"
#include "test_support.hpp"

using namespace lscat;
using lscat::testing::el;

namespace {

AlgebraPtr example1_algebra() {
    return Algebra::create({{"x2", 2}, {"x6", 6}, {"y5", 5}, {"y15", 15}, {"y23", 23}});
}

// Sign of sorting a word of generator indices, counting only swaps of two
// odd letters. Independent of the library's multiplication.
int koszul_sign_by_inversions(const Algebra& a, const std::vector<std::size_t>& word) {
    int sign = 1;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j] && a.generator(word[i]).is_odd() && a.generator(word[j]).is_odd()) sign = -sign;
    return sign;
}

}  // namespace

TEST(Algebra, CreateValidates) {
    EXPECT_THROW(Algebra::create({{"x1", 1}}), ModelError);
    EXPECT_THROW(Algebra::create({{"x2", 2}, {"x2", 4}}), ModelError);
    EXPECT_THROW(Algebra::create({{"2x", 2}}), ModelError);
    auto a = example1_algebra();
    EXPECT_EQ(a->count_even(), 2u);
    EXPECT_EQ(a->count_odd(), 3u);
    EXPECT_EQ(a->max_even_degree(), 6);
    EXPECT_EQ(*a->find("y15"), 3u);
    EXPECT_FALSE(a->find("z").has_value());
}

TEST(Algebra, MonomialRejectsSquaredOdd) {
    auto a = example1_algebra();
    EXPECT_THROW(Monomial(*a, {0, 0, 2, 0, 0}), ModelError);
    EXPECT_THROW(Monomial(*a, {1, 1}), ModelError);
}

TEST(Algebra, KoszulSigns) {
    auto a = example1_algebra();
    auto y5 = Element::generator(a, "y5");
    auto y15 = Element::generator(a, "y15");
    auto x2 = Element::generator(a, "x2");
    EXPECT_EQ(y15 * y5, -(y5 * y15));
    EXPECT_TRUE((y5 * y5).is_zero());
    EXPECT_EQ(x2 * y5, y5 * x2);
    EXPECT_EQ(y15 * x2 * y5, -(x2 * y5 * y15));
}

TEST(Algebra, KoszulSignMatchesInversionCount) {
    auto a = example1_algebra();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::size_t> word;
        std::vector<int> used(a->size(), 0);
        int len = 1 + static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i) {
            std::size_t g = rng() % a->size();
            if (a->generator(g).is_odd() && used[g]) continue;
            ++used[g];
            word.push_back(g);
        }
        Element product = Element::scalar(a, 1);
        for (std::size_t g : word) product = product * Element::generator(a, g);
        Monomial expected(*a, used);
        ASSERT_EQ(product.size(), 1u);
        EXPECT_EQ(product.coefficient(expected), koszul_sign_by_inversions(*a, word));
    }
}

TEST(Algebra, BasisExamples) {
    auto a = example1_algebra();
    auto b4 = basis(*a, 4);
    ASSERT_EQ(b4.size(), 1u);
    EXPECT_EQ(format_monomial(*a, b4[0]), "x2^2");
    auto b7 = basis(*a, 7);
    ASSERT_EQ(b7.size(), 1u);
    EXPECT_EQ(format_monomial(*a, b7[0]), "x2*y5");
    EXPECT_EQ(basis(*a, 0).size(), 1u);
    EXPECT_TRUE(basis(*a, 1).empty());
    EXPECT_TRUE(basis(*a, 3).empty());
    // degree 8: x2^4, x2*x6
    EXPECT_EQ(basis(*a, 8).size(), 2u);
    EXPECT_EQ(basis(*a, 8, WordlengthRange::exactly(2)).size(), 1u);
    EXPECT_EQ(even_basis(*a, 12).size(), 3u);  // x2^6, x2^3 x6, x6^2
}

TEST(Algebra, MonomialOrder) {
    auto a = Algebra::create({{"x1", 2}, {"x2", 2}});
    auto b = basis(*a, 4);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(format_monomial(*a, b[0]), "x1^2");
    EXPECT_EQ(format_monomial(*a, b[1]), "x1*x2");
    EXPECT_EQ(format_monomial(*a, b[2]), "x2^2");
}

TEST(Algebra, WordlengthSplit) {
    auto a = example1_algebra();
    auto e = el(a, "x2^3*x6 + x6^2 + x2^6");
    auto parts = wordlength_split(e);
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts.at(2), el(a, "x6^2"));
    EXPECT_EQ(parts.at(4), el(a, "x2^3*x6"));
    EXPECT_EQ(parts.at(6), el(a, "x2^6"));
    EXPECT_EQ(e.min_wordlength(), 2);
    EXPECT_EQ(e.max_wordlength(), 6);
    EXPECT_EQ(e.wordlength_range(3, 10), el(a, "x2^3*x6 + x2^6"));
}

TEST(Algebra, ElementArithmetic) {
    auto a = example1_algebra();
    auto e = el(a, "x2^2 + 1/2*x2^2");
    EXPECT_EQ(e, el(a, "3/2*x2^2"));
    EXPECT_TRUE((e - e).is_zero());
    EXPECT_EQ(e.degree(), 4);
    EXPECT_FALSE(Element(a).degree().has_value());
    EXPECT_FALSE(el(a, "x2 + x6").is_homogeneous());
    auto other = Algebra::create({{"x2", 2}});
    EXPECT_THROW(Element::generator(a, "x2") + Element::generator(other, "x2"), ModelError);
}

TEST(Algebra, GradedBasisCoordinates) {
    auto a = example1_algebra();
    GradedBasis b(basis(*a, 8));
    auto e = el(a, "2*x2^4 - x2*x6");
    auto c = b.coordinates(e);
    EXPECT_EQ(b.element(a, c), e);
    EXPECT_THROW(b.coordinates(el(a, "x2*y5")), ModelError);
}

TEST(ElementIo, ParseAndFormat) {
    auto a = example1_algebra();
    EXPECT_EQ(format_element(el(a, "x2*x6^5*y5 - x2^2*x6^3*y15")), "-x2^2*x6^3*y15 + x2*x6^5*y5");
    EXPECT_EQ(format_element(el(a, "0")), "0");
    EXPECT_EQ(format_element(el(a, "-3/6 x2")), "-1/2*x2");
    EXPECT_EQ(format_element(el(a, "y15*y5")), "-y5*y15");
    EXPECT_EQ(format_element(el(a, "x2 * x2 # comment")), "x2^2");
    EXPECT_EQ(format_element(el(a, "7")), "7");
}

TEST(ElementIo, RoundTrip) {
    auto a = example1_algebra();
    for (const char* text : {"-x2^2*x6^3*y15 + x2*x6^5*y5", "x2^3 - 1/3*x6 + 2", "y5*y15*y23"}) {
        auto e = el(a, text);
        EXPECT_EQ(el(a, format_element(e)), e) << text;
    }
}

TEST(ElementIo, Errors) {
    auto a = example1_algebra();
    try {
        el(a, "x2 + z7");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 6u);
    }
    EXPECT_THROW(el(a, "y5^2"), ParseError);
    EXPECT_THROW(el(a, "y5*y5"), ParseError);
    EXPECT_THROW(el(a, "1/0"), ParseError);
    EXPECT_THROW(el(a, "x2 +"), ParseError);
    EXPECT_THROW(el(a, "x2^"), ParseError);
    EXPECT_THROW(el(a, ""), ParseError);
}
