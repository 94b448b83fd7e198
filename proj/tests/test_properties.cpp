// Seeded property tests against independent oracles.
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skewcy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(Seeded, FieldAxioms) {
    std::mt19937_64 rng(GetParam());
    for (const FieldSpec& f : {Q, FieldSpec::prime(101), FieldSpec::cyclotomic(5), FieldSpec::cyclotomic(12)}) {
        Scalar a = oracle::small_scalar(f, rng, false), b = oracle::small_scalar(f, rng, false),
               c = oracle::nonzero_scalar(f, rng);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a / c) * c, a);
        EXPECT_EQ(c.pow(3) * c.pow(-3), Scalar::one(f));
    }
}

TEST_P(Seeded, SkewNakayamaMatchesFormula) {
    std::mt19937_64 rng(GetParam());
    std::size_t w = 2 + GetParam() % 2;
    Vector p = oracle::random_skew_parameters(w, Q, rng);
    auto a = oracle::skewpoly(w, p, 5);
    EXPECT_EQ(nakayama_koszul(a).matrix(), oracle::skew_mu(w, p));
}

TEST_P(Seeded, HdetIsMultiplicative) {
    std::mt19937_64 rng(GetParam());
    auto a = oracle::polynomial(2, Q, 5);
    auto s = validated_automorphism(a, oracle::random_invertible(Q, 2, rng));
    auto t = validated_automorphism(a, oracle::random_invertible(Q, 2, rng));
    EXPECT_EQ(hdet_koszul(a, compose(s, t)), hdet_koszul(a, s) * hdet_koszul(a, t));
}

TEST_P(Seeded, HdetOfDiagonalOnSkewRing) {
    std::mt19937_64 rng(GetParam());
    Vector p = oracle::random_skew_parameters(3, Q, rng);
    auto a = oracle::skewpoly(3, p, 4);
    Matrix d = oracle::random_diagonal(Q, 3, rng);
    EXPECT_EQ(hdet_koszul(a, validated_automorphism(a, d)), d.determinant());
}

TEST_P(Seeded, HI2OnRandomBigradedPlane) {
    std::mt19937_64 rng(GetParam());
    Vector p = oracle::random_skew_parameters(2, Q, rng);
    auto a = oracle::skewpoly(2, p, 5);
    auto s = validated_automorphism(a, oracle::random_diagonal(Q, 2, rng));
    auto t = validated_automorphism(a, oracle::random_diagonal(Q, 2, rng));
    auto v = verify_hi2(a, {s, t});
    EXPECT_TRUE(v.equal) << v.to_text();
}

TEST_P(Seeded, GroebnerAgreesWithBruteForce) {
    std::mt19937_64 rng(GetParam());
    Scalar q = oracle::nonzero_scalar(Q, rng);
    GeneratorTable t(1);
    t.add("x", {1});
    t.add("y", {1});
    auto x = NcPolynomial::generator(t, 0, Q), y = NcPolynomial::generator(t, 1, Q);
    std::vector<NcPolynomial> rels{y * x - q * (x * y) + oracle::small_scalar(Q, rng, false) * (x * x)};
    auto rs = buchberger_truncated(t, Q, rels, 5);
    EXPECT_EQ(rs.hilbert_prefix(), oracle::brute_force_dimensions(t, Q, rels, 5));
}

TEST_P(Seeded, ParserRoundTrip) {
    std::mt19937_64 rng(GetParam());
    Vector p = oracle::random_skew_parameters(3, Q, rng);
    auto pf = catalog_skewpoly(3, p);
    auto back = parse_presentation(serialize(pf));
    EXPECT_TRUE(back == pf);
}

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1u, 2u, 3u, 4u, 5u, 6u));

}  // namespace
