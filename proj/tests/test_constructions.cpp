#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace skewcy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Matrix swap2(const FieldSpec& f) {
    Matrix m(f, 2, 2);
    m(0, 1) = m(1, 0) = Scalar::one(f);
    return m;
}

Scalar num(long long v) { return Scalar::from_integer(Q, v); }

TEST(Twist, PolynomialByDiagonal) {
    auto a = oracle::polynomial(2, Q, 6);
    auto s = validated_automorphism(a, Matrix::diagonal(Q, {num(1), num(-1)}));
    auto t = graded_twist(a, {s});
    auto x = t->gen(0), y = t->gen(1);
    // a o b = sigma^|b|(a) b, so y o x = -y x and x o y = x y: the twist has yx = -xy
    EXPECT_TRUE(t->normal_form(y * x + x * y).is_zero());
    EXPECT_EQ(nakayama_koszul(t).matrix(), num(-1) * Matrix::identity(Q, 2));
}

TEST(Twist, Errors) {
    auto a = oracle::skewpoly(2, {num(2)}, 5);
    auto s = validated_automorphism(a, Matrix::diagonal(Q, {num(2), num(3)}));
    try {
        graded_twist(a, {s});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeMismatch);
    }
    auto fam = graded_twist(a, {identity_automorphism(a), xi(a, Vector{num(2), num(1)})});
    EXPECT_EQ(fam->num_generators(), 2u);
}

TEST(Ore, PolynomialLine) {
    auto a = oracle::polynomial(1, Q, 6);
    Scalar q = num(5);
    auto phi = validated_automorphism(a, Matrix::diagonal(Q, {q}));
    auto o = ore_extension(a, phi, widened_t_degree(a));
    ASSERT_EQ(o->num_generators(), 2u);
    auto x = o->gen(0), t = o->gen(1);
    EXPECT_TRUE(o->normal_form(t * x - q * (x * t)).is_zero());
    EXPECT_EQ(o->grading_rank(), 2);
}

TEST(Ore, NakayamaOfExtension) {
    auto a = oracle::polynomial(2, Q, 6);
    auto phi = validated_automorphism(a, Matrix::diagonal(Q, {num(1), num(-1)}));
    auto o = ore_extension(a, phi, widened_t_degree(a));
    EXPECT_EQ(nakayama_koszul(o).matrix(), Matrix::diagonal(Q, {num(1), num(-1), num(-1)}));
}

TEST(Tensor, PolynomialLines) {
    auto a = oracle::polynomial(1, Q, 6);
    auto t = tensor_product(a, a);
    ASSERT_EQ(t->num_generators(), 2u);
    EXPECT_EQ(t->generators().name(1), "x2");
    auto x = t->gen(0), y = t->gen(1);
    EXPECT_TRUE(t->normal_form(y * x - x * y).is_zero());
    auto h = t->rewrite().hilbert_prefix();
    for (std::size_t n = 0; n < h.size(); ++n) EXPECT_EQ(h[n], static_cast<long long>(n + 1));
}

TEST(Tensor, HilbertIsProduct) {
    auto a = oracle::polynomial(2, Q, 5);
    auto t = tensor_product(a, a);
    EXPECT_EQ(t->rewrite().hilbert_prefix(), (std::vector<long long>{1, 4, 10, 20, 35, 56}));
}

TEST(Normality, DownUpCommutator) {
    auto a = catalog_downup_010().algebra();
    auto x = a->gen(0), y = a->gen(1);
    auto r = normality_witness(a, x * y - y * x);
    ASSERT_TRUE(r) << r.report;
    EXPECT_EQ(r.tau->matrix(), Scalar::from_integer(a->field(), -1) * Matrix::identity(a->field(), 2));
}

TEST(Normality, QuantumPlaneGenerator) {
    Scalar q = num(3);
    auto a = oracle::quantum_plane(q, 6);
    auto r = normality_witness(a, a->gen(0));
    ASSERT_TRUE(r);
    EXPECT_EQ(r.tau->matrix(), Matrix::diagonal(Q, {num(1), q.inverse()}));
    // oracle: x y = tau(y) x
    auto x = a->gen(0), y = a->gen(1);
    EXPECT_EQ(a->normal_form(x * y), a->normal_form(r.tau->apply(y) * x));
}

TEST(Normality, FreeAlgebraNotNormal) {
    GeneratorTable t(1);
    t.add("x", {1});
    t.add("y", {1});
    auto a = make_algebra(t, Q, {}, 4);
    auto r = normality_witness(a, a->gen(0));
    EXPECT_FALSE(r);
    EXPECT_FALSE(r.report.empty());
}

TEST(Quotient, SkewPlaneByGenerator) {
    auto a = oracle::quantum_plane(num(3), 6);
    auto q = quotient_by_normal(a, a->gen(0));
    EXPECT_EQ(q.algebra->num_generators(), 1u);
    EXPECT_EQ(q.kept, (std::vector<std::size_t>{1}));
    auto h = q.algebra->rewrite().hilbert_prefix();
    for (auto v : h) EXPECT_EQ(v, 1);
    EXPECT_TRUE(nakayama_koszul(q.algebra).matrix().is_identity());
}

TEST(Quotient, MinimizeDropsRedundant) {
    GeneratorTable t(1);
    t.add("x", {1});
    t.add("y", {1});
    auto x = NcPolynomial::generator(t, 0, Q), y = NcPolynomial::generator(t, 1, Q);
    auto m = minimize_relations(t, Q, {x * y, x * y * x, y * x * y});
    EXPECT_EQ(m.size(), 1u);
}

TEST(Quotient, NotEigenvector) {
    auto a = oracle::polynomial(2, Q, 5);
    auto q = quotient_by_normal(a, a->gen(0));
    Matrix m = Matrix::identity(Q, 2);
    m(1, 0) = num(1);  // x -> x + y
    auto s = validated_automorphism(a, m);
    try {
        restrict_to_quotient(q, s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotEigenvector);
    }
}

TEST(Smash, SwapSquares) {
    auto a = oracle::polynomial(2, Q, 5);
    auto b = smash_product(a, {validated_automorphism(a, swap2(Q))});
    ASSERT_EQ(b.order(), 2u);
    auto x = a->gen(0), y = a->gen(1);
    auto xs = b.element(x, 1);
    EXPECT_EQ(b.multiply(xs, xs), b.element(a->normal_form(x * y), 0));
    EXPECT_EQ(b.mult(1, 1), 0);
    EXPECT_EQ(b.basis(1).size(), 4u);
}

TEST(Smash, GroupClosureCap) {
    auto a = oracle::polynomial(1, Q, 4);
    auto s = validated_automorphism(a, Matrix::diagonal(Q, {num(2)}));
    SmashOptions opt;
    opt.group_cap = 8;
    try {
        smash_product(a, {s}, opt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::GroupClosureExceeded);
    }
}

TEST(Smash, TrivialGroupWitnessFailsWhenMuNotIdentity) {
    Scalar q = num(3);
    auto a = oracle::quantum_plane(q, 5);
    auto b = smash_product(a, {identity_automorphism(a)});
    auto mu = nakayama_koszul(a);
    auto c = hi1_candidate(b, mu, Vector{Scalar::one(Q)}, SmashOptions{});
    ASSERT_TRUE(c) << c.report;
    auto w = inner_witness(b, *c.candidate);
    EXPECT_FALSE(w);
}

TEST(Rectify, ThirdRootPlane) {
    FieldSpec f = FieldSpec::cyclotomic(3);
    Scalar z = Scalar::zeta(f);
    auto a = regrade_total(oracle::skewpoly(2, {z}, 5));
    auto mu = nakayama_koszul(a);
    auto r = rectify_diagonal(a, mu, 2);
    auto nu = nakayama_koszul(r.twist);
    EXPECT_TRUE(nu.matrix().is_diagonal());
    EXPECT_EQ(nu.matrix()(0, 0), nu.matrix()(1, 1));
}

TEST(Rectify, NotRootOfUnity) {
    auto a = oracle::skewpoly(2, {num(2)}, 5);
    auto mu = nakayama_koszul(a);
    try {
        rectify_diagonal(regrade_total(a), validated_automorphism(regrade_total(a), mu.matrix()), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotRepresentable);
    }
    try {
        rectify_diagonal(a, mu, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroASIndex);
    }
}

}  // namespace
