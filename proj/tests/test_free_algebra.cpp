#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skewcy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

GeneratorTable plane() {
    GeneratorTable t(1);
    t.add("x", {1});
    t.add("y", {1});
    return t;
}

TEST(Generators, Validation) {
    GeneratorTable t(2);
    t.add("x", {1, 0});
    EXPECT_THROW(t.add("x", {0, 1}), Error);
    try {
        t.add("y", {1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeMismatch);
    }
    try {
        t.add("w", {0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroDegreeGenerator);
    }
}

TEST(Deglex, Examples) {
    auto t = plane();
    Word x = Word::letter(t, 0), y = Word::letter(t, 1);
    EXPECT_LT(x, y);
    EXPECT_GT(x * y, x);
    EXPECT_GT(Word(t, {0, 1, 0}), Word(t, {0, 0, 1}));
}

TEST(Deglex, TotalDegreeComesFirst) {
    GeneratorTable t(1);
    t.add("a", {2});
    t.add("b", {1});
    // a has total degree 2, so a > b*b is decided lexicographically
    EXPECT_EQ(Word(t, {0}).degree(), 2);
    EXPECT_LT(Word(t, {1}), Word(t, {0}));
}

TEST(Polynomial, Noncommutative) {
    auto t = plane();
    auto x = NcPolynomial::generator(t, 0, Q), y = NcPolynomial::generator(t, 1, Q);
    EXPECT_NE(x * y, y * x);
    EXPECT_TRUE((x + Scalar::from_integer(Q, -1) * x).is_zero());
    auto sq = (x + y) * (x + y);
    EXPECT_EQ(sq, x * x + x * y + y * x + y * y);
    EXPECT_EQ(sq.terms().size(), 4u);
}

TEST(Polynomial, TextIsDeglexDescending) {
    auto t = plane();
    auto x = NcPolynomial::generator(t, 0, Q), y = NcPolynomial::generator(t, 1, Q);
    EXPECT_EQ((y * x - Scalar::from_integer(Q, 3) * (x * y)).to_string(t), "y*x - 3*x*y");
    EXPECT_EQ((x * x * y).to_string(t), "x^2*y");
}

TEST(Polynomial, Homogeneity) {
    GeneratorTable t(2);
    t.add("x", {1, 0});
    t.add("y", {0, 1});
    auto x = NcPolynomial::generator(t, 0, Q), y = NcPolynomial::generator(t, 1, Q);
    EXPECT_TRUE((x * y - y * x).is_homogeneous(t));
    EXPECT_FALSE((x * x - y * x).is_homogeneous(t));
}

TEST(ApplyLinear, IdentityFixes) {
    auto t = plane();
    auto x = NcPolynomial::generator(t, 0, Q), y = NcPolynomial::generator(t, 1, Q);
    auto f = x * y * x - Scalar::from_integer(Q, 2) * (y * y);
    EXPECT_EQ(apply_linear(t, Matrix::identity(Q, 2), f), f);
}

TEST(ApplyLinear, DownUpSlots) {
    FieldSpec f = FieldSpec::cyclotomic(4);
    auto t = plane();
    auto x = NcPolynomial::generator(t, 0, f), y = NcPolynomial::generator(t, 1, f);
    Matrix s = Matrix::diagonal(f, {Scalar::one(f), Scalar::zeta(f)});
    std::vector<Matrix> slots{s.pow(-2), s.pow(-1), Matrix::identity(f, 2)};
    EXPECT_EQ(apply_linear(t, slots, x * x * y - y * x * x), x * x * y + y * x * x);
    EXPECT_EQ(apply_linear(t, slots, y * y * x - x * y * y), Scalar::zeta(f) * (y * y * x + x * y * y));
}

TEST(ApplyLinear, RejectsDegreeMixing) {
    GeneratorTable t(2);
    t.add("x", {1, 0});
    t.add("y", {0, 1});
    Matrix m = Matrix::identity(Q, 2);
    m(0, 1) = Scalar::one(Q);
    EXPECT_THROW(check_degree_preserving(t, m), Error);
}

}  // namespace
