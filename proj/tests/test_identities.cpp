#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skewcy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar num(long long v) { return Scalar::from_integer(Q, v); }

TEST(HI2, BigradedPlane) {
    Scalar p = num(7);
    auto a = oracle::skewpoly(2, {p}, 6);
    auto s = xi(a, Vector{num(2), num(3)});
    auto v = verify_hi2(a, {s, identity_automorphism(a)});
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_EQ(v.kind, "verification");
    EXPECT_EQ(v.provenance, (std::vector<std::string>{"computed-koszul"}));
}

TEST(HI2, PolynomialByDiagonal) {
    auto a = oracle::polynomial(2, Q, 6);
    auto s = validated_automorphism(a, Matrix::diagonal(Q, {num(1), num(-1)}));
    auto v = verify_hi2(a, {s});
    EXPECT_TRUE(v.equal) << v.to_text();
    // rhs = mu_A sigma^2 xi(hdet^-1) = id * id * (-1) = -I
    EXPECT_EQ(v.rhs, (num(-1) * Matrix::identity(Q, 2)).to_string());
}

TEST(HI2, DownUpRegistry) {
    auto pf = catalog_downup_010();
    auto a = pf.algebra();
    auto v = verify_hi2(a, {pf.automorphism(a, "sigma")});
    EXPECT_EQ(v.kind, "consistency");
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_NE(std::find(v.provenance.begin(), v.provenance.end(), "registry"), v.provenance.end());
}

TEST(HI3, Examples) {
    std::mt19937_64 rng(21);
    for (std::size_t w : {2u, 3u}) {
        auto v = verify_hi3(oracle::skewpoly(w, oracle::random_skew_parameters(w, Q, rng), 5));
        EXPECT_TRUE(v.equal) << v.to_text();
    }
    auto du = verify_hi3(catalog_downup_010().algebra());
    EXPECT_TRUE(du.equal);
    EXPECT_EQ(du.kind, "consistency");
}

TEST(OreHdet, Skew) {
    auto a = oracle::skewpoly(2, {num(3)}, 5);
    auto phi = xi(a, Vector{num(5), num(7)});
    auto v = verify_ore_hdet(a, phi);
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_EQ(v.lhs, "35");
}

TEST(Center, QuantumPlane) {
    Scalar q = num(3);
    auto a = oracle::quantum_plane(q, 5);
    auto d = validated_automorphism(a, Matrix::diagonal(Q, {num(2), num(5)}));
    EXPECT_TRUE(verify_center(a, {d}).equal);
}

TEST(HI1, DownUp) {
    auto pf = catalog_downup_010();
    auto a = pf.algebra();
    auto v = verify_hi1_cy(a, pf.group(a, "G"));
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_EQ(v.kind, "consistency");
    EXPECT_EQ(v.lhs, "inner");
}

TEST(HI1, MinusOnePlane) {
    auto pf = catalog_kminus1_plane();
    pf.degree_bound = 5;
    auto a = pf.algebra();
    auto v = verify_hi1_cy(a, pf.group(a, "G"));
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_EQ(v.details[0].second, "4");
    // mu = -1 is not in <swap>, so rho is not inner there
    auto s = verify_hi1_cy(a, {pf.automorphism(a, "swap")});
    EXPECT_FALSE(s.equal);
}

TEST(HI1, PolynomialWithMinusIdentity) {
    auto a = oracle::polynomial(2, Q, 5);
    auto g = validated_automorphism(a, num(-1) * Matrix::identity(Q, 2));
    auto v = verify_hi1_cy(a, {g});
    EXPECT_TRUE(v.equal) << v.to_text();
}

TEST(HI1, NonTrivialHdetIsNotInner) {
    auto a = oracle::polynomial(2, Q, 5);
    auto g = validated_automorphism(a, Matrix::diagonal(Q, {num(1), num(-1)}));
    auto v = verify_hi1_cy(a, {g});
    EXPECT_FALSE(v.equal);
}

TEST(Tensor, LinesAndPlanes) {
    auto a = oracle::quantum_plane(num(2), 4);
    auto b = oracle::polynomial(1, Q, 4);
    auto s = validated_automorphism(a, Matrix::diagonal(Q, {num(2), num(3)}));
    auto t = validated_automorphism(b, Matrix::diagonal(Q, {num(5)}));
    auto v = verify_tensor(a, b, s, t);
    EXPECT_TRUE(v.equal) << v.to_text();
}

TEST(Quotient, SkewPlane) {
    auto a = oracle::quantum_plane(num(3), 6);
    auto v = verify_quotient(a, a->gen(0));
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_EQ(v.lhs, "[[1]]");
}

TEST(Quotient, DownUpCommutator) {
    auto a = catalog_downup_010().algebra();
    auto x = a->gen(0), y = a->gen(1);
    auto v = verify_quotient(a, x * y - y * x);
    // A/(xy - yx) is k[x,y]; mu_A comes from the registry
    EXPECT_EQ(v.kind, "consistency");
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_TRUE(Matrix::identity(a->field(), 2).to_string() == v.lhs);
    auto it = std::find_if(v.details.begin(), v.details.end(), [](const auto& d) { return d.first == "derived_mu_A_matches"; });
    ASSERT_NE(it, v.details.end());
    EXPECT_EQ(it->second, "yes");
}

TEST(Descent, SkewPlane) {
    auto a = oracle::quantum_plane(num(3), 6);
    auto s = validated_automorphism(a, Matrix::diagonal(Q, {num(7), num(5)}));
    auto v = verify_hdet_descent(a, a->gen(0), s);
    EXPECT_TRUE(v.equal) << v.to_text();
    EXPECT_EQ(v.lhs, "35");
}

TEST(Verdict, JsonShapeAndReproducible) {
    auto a = oracle::quantum_plane(num(3), 5);
    auto v1 = verify_hi3(a).to_json();
    auto v2 = verify_hi3(a).to_json();
    EXPECT_EQ(v1.dump(), v2.dump());
    for (const char* k : {"identity", "kind", "lhs", "rhs", "equal", "provenance", "checked_to"})
        EXPECT_TRUE(v1.contains(k)) << k;
}

TEST(Registry, ConsistentWithCatalog) {
    for (const auto& c : catalog_selftest()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
