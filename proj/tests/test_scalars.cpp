#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skewcy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

TEST(Field, PrimeValidation) {
    EXPECT_NO_THROW(FieldSpec::prime(101));
    try {
        FieldSpec::prime(100);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrime);
    }
}

TEST(Field, Names) {
    EXPECT_EQ(FieldSpec::rationals().to_string(), "rationals");
    EXPECT_EQ(FieldSpec::prime(7).to_string(), "prime 7");
    EXPECT_EQ(FieldSpec::cyclotomic(12).to_string(), "cyclotomic 12");
}

TEST(Scalar, RationalArithmetic) {
    Scalar a = Scalar::from_rational(Q, mpq_class(1, 2));
    Scalar b = Scalar::from_rational(Q, mpq_class(-2, 3));
    EXPECT_EQ((a + b).to_string(), "-1/6");
    EXPECT_EQ((a * b).to_string(), "-1/3");
    EXPECT_EQ((a / b).to_string(), "-3/4");
    EXPECT_EQ(b.inverse().to_string(), "-3/2");
    EXPECT_EQ(a.pow(-3).to_string(), "8");
}

TEST(Scalar, NonCanonicalInputIsNormalised) {
    EXPECT_EQ(Scalar::from_rational(Q, mpq_class(6, 3)), Scalar::from_integer(Q, 2));
    EXPECT_EQ(Scalar::from_rational(Q, mpq_class(4, 8)).to_string(), "1/2");
}

TEST(Scalar, PrimeField) {
    FieldSpec f = FieldSpec::prime(7);
    Scalar a = Scalar::from_integer(f, 3);
    EXPECT_EQ((a * a).to_string(), "2");
    EXPECT_EQ(a.inverse().to_string(), "5");
    EXPECT_EQ(Scalar::from_integer(f, -1).to_string(), "6");
    EXPECT_EQ(Scalar::from_rational(f, mpq_class(1, 2)).to_string(), "4");
    try {
        Scalar::from_rational(f, mpq_class(1, 7));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FieldLiteralOutOfRange);
    }
}

TEST(Scalar, DivisionByZero) {
    EXPECT_THROW(Scalar::zero(Q).inverse(), Error);
    EXPECT_THROW(Scalar::one(Q) / Scalar::zero(Q), Error);
}

TEST(Scalar, FieldMismatch) {
    try {
        (void)(Scalar::one(Q) + Scalar::one(FieldSpec::prime(5)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::FieldMismatch);
    }
}

TEST(Cyclotomic, ZetaPowers) {
    for (std::uint32_t n : {3u, 4u, 5u, 8u, 12u}) {
        FieldSpec f = FieldSpec::cyclotomic(n);
        Scalar z = Scalar::zeta(f);
        EXPECT_TRUE(z.pow(n).is_one()) << n;
        for (std::uint32_t k = 1; k < n; ++k) EXPECT_FALSE(z.pow(k).is_one()) << n << " " << k;
    }
}

TEST(Cyclotomic, Zeta4SquaredIsMinusOne) {
    FieldSpec f = FieldSpec::cyclotomic(4);
    EXPECT_EQ(Scalar::zeta(f) * Scalar::zeta(f), Scalar::from_integer(f, -1));
}

TEST(Cyclotomic, InverseAgainstDefinition) {
    std::mt19937_64 rng(7);
    for (std::uint32_t n : {3u, 5u, 7u, 9u, 12u}) {
        FieldSpec f = FieldSpec::cyclotomic(n);
        for (int i = 0; i < 10; ++i) {
            Scalar a = oracle::nonzero_scalar(f, rng);
            EXPECT_TRUE((a * a.inverse()).is_one()) << a.to_string();
        }
    }
}

TEST(Cyclotomic, CanonicalText) {
    FieldSpec f = FieldSpec::cyclotomic(8);
    Scalar z = Scalar::zeta(f);
    EXPECT_EQ((z.pow(3) - z).to_string(), "z^3 - z");
    Scalar h = Scalar::from_rational(f, mpq_class(1, 2));
    EXPECT_EQ((h * z + Scalar::from_integer(f, 3)).to_string(), "1/2*z + 3");
}

TEST(Embed, TowerIsCompatible) {
    FieldSpec f4 = FieldSpec::cyclotomic(4), f8 = FieldSpec::cyclotomic(8);
    Scalar i = embed(Scalar::zeta(f4), f8);
    EXPECT_EQ(i, Scalar::zeta(f8).pow(2));
    EXPECT_THROW(embed(Scalar::zeta(f8), f4), Error);
}

TEST(RootOfUnity, Identity) {
    auto r = root_of_unity_solve(Scalar::one(Q), 5);
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->root.is_one());
}

TEST(RootOfUnity, SquareRootOfMinusOne) {
    FieldSpec f = FieldSpec::cyclotomic(4);
    auto r = root_of_unity_solve(Scalar::from_integer(f, -1), 2);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->field, f);
    EXPECT_EQ(r->root.pow(2), Scalar::from_integer(f, -1));
}

TEST(RootOfUnity, EnlargesField) {
    auto r = root_of_unity_solve(Scalar::from_integer(Q, -1), 2);
    ASSERT_TRUE(r);
    EXPECT_TRUE(r->field.is_cyclotomic());
    EXPECT_EQ(r->root.pow(2), Scalar::from_integer(r->field, -1));
}

TEST(RootOfUnity, NotRepresentable) {
    EXPECT_FALSE(root_of_unity_solve(Scalar::from_integer(Q, 2), 2));
    // oracle: 2^k != 1 for every k up to twice the field degree
    Scalar two = Scalar::from_integer(Q, 2);
    for (int k = 1; k <= 4; ++k) EXPECT_FALSE(two.pow(k).is_one());
}

TEST(RootOfUnity, Errors) {
    EXPECT_THROW(root_of_unity_solve(Scalar::zero(Q), 2), Error);
    EXPECT_THROW(root_of_unity_solve(Scalar::one(Q), 0), Error);
    EXPECT_THROW(root_of_unity_solve(Scalar::one(FieldSpec::prime(5)), 2), Error);
}

TEST(RootOfUnity, Orders) {
    FieldSpec f = FieldSpec::cyclotomic(12);
    EXPECT_EQ(*root_of_unity_order(Scalar::zeta(f)), 12u);
    EXPECT_EQ(*root_of_unity_order(Scalar::zeta(f).pow(4)), 3u);
    EXPECT_FALSE(root_of_unity_order(Scalar::from_integer(f, 2)));
}

TEST(Matrix, InverseDeterminantKernel) {
    Matrix m(Q, 2, 2);
    m(0, 0) = Scalar::from_integer(Q, 2);
    m(0, 1) = Scalar::from_integer(Q, 3);
    m(1, 0) = Scalar::from_integer(Q, 1);
    m(1, 1) = Scalar::from_integer(Q, 5);
    EXPECT_EQ(m.determinant().to_string(), "7");
    EXPECT_TRUE((m * m.inverse()).is_identity());
    Matrix s(Q, 2, 2);
    s(0, 0) = s(0, 1) = s(1, 0) = s(1, 1) = Scalar::one(Q);
    EXPECT_EQ(s.rank(), 1u);
    auto k = s.kernel();
    ASSERT_EQ(k.size(), 1u);
    EXPECT_TRUE((k[0][0] + k[0][1]).is_zero());
    EXPECT_THROW(s.inverse(), Error);
}

}  // namespace
