#include <gtest/gtest.h>

#include "lscat/differential.hpp"
#include "lscat/element_io.hpp"
#include "lscat/errors.hpp"
#include "test_support.hpp"

using namespace lscat;
using lscat::testing::builtin;
using lscat::testing::el;

TEST(Differential, ExampleOneProductRule) {
    auto m = builtin("example1");
    // d(y5 y15) = x2^3 y15 - y5 x2^2 x6^2
    EXPECT_EQ(apply_d(m.d, el(m, "y5*y15")), el(m, "x2^3*y15 - x2^2*x6^2*y5"));
    EXPECT_EQ(apply_d(m.d, el(m, "x2^5")), Element(m.algebra));
    EXPECT_EQ(apply_d(m.d, el(m, "1")), Element(m.algebra));
    // d(x6 y23) = x6^5
    EXPECT_EQ(apply_d(m.d, el(m, "x6*y23")), el(m, "x6^5"));
}

TEST(Differential, HomogeneousComponents) {
    auto m = builtin("example1");
    auto d3 = homogeneous_component(m.d, 3);
    auto d4 = homogeneous_component(m.d, 4);
    EXPECT_EQ(d3.image(*m.algebra->find("y5")), el(m, "x2^3"));
    EXPECT_TRUE(d3.image(*m.algebra->find("y15")).is_zero());
    EXPECT_EQ(d4.image(*m.algebra->find("y15")), el(m, "x2^2*x6^2"));
    EXPECT_EQ(d4.image(*m.algebra->find("y23")), el(m, "x6^4"));
    EXPECT_TRUE(homogeneous_component(m.d, 5).is_zero());
    EXPECT_TRUE(homogeneous_component(m.d, 2).is_zero());
    EXPECT_EQ(detect_k(m.d), 3);
    auto sum = d3 + d4;
    auto e = el(m, "y5*y15*y23");
    EXPECT_EQ(sum.apply(e), apply_d(m.d, e));
}

TEST(Differential, DetectK) {
    EXPECT_EQ(builtin("sphere2").k, 2);
    EXPECT_EQ(builtin("example2").k, 3);
    auto a = Algebra::create({{"x2", 2}, {"y3", 3}});
    SullivanModel zero(build_differential(a, {Element(a), Element(a)}));
    EXPECT_FALSE(zero.k.has_value());
    EXPECT_TRUE(is_pure(zero));
}

TEST(Differential, Validation) {
    auto a = Algebra::create({{"x2", 2}, {"y3", 3}, {"y5", 5}});
    auto z = Element(a);
    // degree mismatch
    EXPECT_THROW(build_differential(a, {z, el(a, "x2"), z}), ModelError);
    // linear term
    auto b = Algebra::create({{"x2", 2}, {"y3", 3}, {"x4", 4}});
    EXPECT_THROW(build_differential(b, {Element(b), el(b, "x4 + x2^2"), Element(b)}), ModelError);
    auto c = Algebra::create({{"x2", 2}, {"x6", 6}, {"y5", 5}});
    EXPECT_THROW(build_differential(c, {Element(c), el(c, "x2^2*y5"), el(c, "x2^3")}), ModelError);
    try {
        build_differential(c, {Element(c), el(c, "x2^2*y5"), el(c, "x2^3")});
    } catch (const ModelError& e) {
        EXPECT_NE(std::string(e.what()).find("x6"), std::string::npos);
    }
    EXPECT_NO_THROW(build_differential(a, {z, el(a, "x2^2"), el(a, "x2^3")}));
}

TEST(Differential, PureProjection) {
    auto m = lscat::testing::model_file("pool/even-twist.sullivan");
    EXPECT_FALSE(is_pure(m));
    EXPECT_THROW(PureModel{m}, PreconditionError);
    SullivanModel sigma = pure_projection(m).model();
    EXPECT_TRUE(is_pure(sigma));
    const auto& a = *sigma.algebra;
    EXPECT_TRUE(sigma.d.image(*a.find("x8")).is_zero());
    EXPECT_EQ(sigma.d.image(*a.find("y23")), el(sigma.algebra, "x8^3"));
    EXPECT_EQ(sigma.d.image(*a.find("y5")), el(sigma.algebra, "x2^3"));
    EXPECT_TRUE(is_pure(builtin("example1")));
}
