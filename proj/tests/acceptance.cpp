// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>

#include "oracles.hpp"

using namespace skewcy;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F101 = FieldSpec::prime(101);

// 1. Skew polynomial Nakayama against the product formula.
void skew_nakayama() {
    std::mt19937_64 rng(101);
    for (const FieldSpec& f : {F101, Q})
        for (std::size_t w : {2u, 3u, 4u})
            for (int trial = 0; trial < 20; ++trial) {
                Vector p = oracle::random_skew_parameters(w, f, rng);
                auto a = oracle::skewpoly(w, p);
                Matrix mu = nakayama_koszul(a).matrix();
                expect(mu == oracle::skew_mu(w, p), "w=" + std::to_string(w) + " over " + f.to_string() + ": " + mu.to_string());
            }
}

// 2. hdet(mu) = 1.
void hi3() {
    for (std::size_t n = 1; n <= 4; ++n) expect(verify_hi3(oracle::polynomial(n)).equal, "polynomial(" + std::to_string(n) + ")");
    std::mt19937_64 rng(202);
    for (const FieldSpec& f : {F101, Q})
        for (std::size_t w : {2u, 3u, 4u})
            for (int trial = 0; trial < 5; ++trial) {
                auto v = verify_hi3(oracle::skewpoly(w, oracle::random_skew_parameters(w, f, rng)));
                expect(v.equal && v.lhs == "1", "skewpoly: " + v.lhs);
            }
    for (long long q : {2, 3, -5, 7}) expect(verify_hi3(oracle::quantum_plane(Scalar::from_integer(Q, q))).equal, "quantum_plane");
    expect(verify_hi3(catalog_kminus1_plane().algebra()).equal, "kminus1_plane");
}

// 3. hdet = det on polynomial rings.
void hdet_det() {
    std::mt19937_64 rng(303);
    for (std::size_t n : {2u, 3u}) {
        auto a = oracle::polynomial(n, F101);
        for (int trial = 0; trial < 20; ++trial) {
            Matrix m = oracle::random_invertible(F101, n, rng);
            auto s = validated_automorphism(a, m);
            expect(hdet_koszul(a, s) == m.determinant(), m.to_string());
        }
    }
}

// 4. Swap on k_{-1}[x,y].
void swap_hdet() {
    auto pf = catalog_kminus1_plane();
    auto a = pf.algebra();
    Scalar h = hdet_koszul(a, pf.automorphism(a, "swap"));
    expect(h.is_one(), "hdet(swap) = " + h.to_string());
}

// 5. Twist of bigraded k[x,y] by (diag(1,p), id).
void hi2_bigraded() {
    auto a = oracle::skewpoly(2, {Scalar::one(Q)});
    for (int p = 2; p < 22; ++p) {
        Scalar ps = Scalar::from_integer(Q, p % 2 ? p : -p);
        auto s = validated_automorphism(a, Matrix::diagonal(Q, {Scalar::one(Q), ps}));
        auto fam = std::vector<GradedAutomorphism>{s, identity_automorphism(a)};
        auto tw = graded_twist(a, fam);
        expect(oracle::ideals_agree(tw, oracle::skewpoly(2, {ps})), "twist is not k_p[x,y] for p = " + ps.to_string());
        Verdict v = verify_hi2(a, fam);
        Matrix expected = Matrix::diagonal(Q, {ps.inverse(), ps});
        expect(v.equal && v.kind == "verification", "verdict unequal for p = " + ps.to_string());
        expect(v.lhs == expected.to_string() && v.rhs == expected.to_string(), "lhs/rhs " + v.lhs + " / " + v.rhs);
    }
}

// 6. Down-up twist.
void downup_twist() {
    auto pf = catalog_downup_010();
    auto a = pf.algebra();
    const FieldSpec& f = a->field();
    auto sigma = pf.automorphism(a, "sigma");
    auto tw = graded_twist(a, {sigma});
    auto x = a->gen(0), y = a->gen(1);
    auto expected = make_algebra(a->generators(), f, {x * x * y + y * x * x, y * y * x + x * y * y}, 8);
    expect(same_ideal(tw->rewrite(), expected->rewrite(), 3), "twisted ideal differs");
    Scalar minus = Scalar::from_integer(f, -1);
    Matrix xi_m = minus * Matrix::identity(f, 2);
    Matrix rhs = xi_m * sigma.matrix().pow(4) * xi_m.inverse();  // hdet sigma = -1, xi_{-1}^{-1} = xi_{-1}
    expect(rhs.is_identity(), "independent rhs " + rhs.to_string());
    expect(hdet_lookup(a, sigma).value == minus, "hdet sigma");
    Verdict v = verify_hi2(a, {sigma});
    expect(v.equal && v.rhs == Matrix::identity(f, 2).to_string(), "HI2 rhs " + v.rhs);
}

// 7. Smash of down-up with <xi_{-1}> is CY with witness 1 # xi_{-1}.
void hi1_downup() {
    auto pf = catalog_downup_010();
    auto a = pf.algebra();
    auto b = smash_product(a, pf.group(a, "G"));
    expect(b.order() == 2, "group order");
    Invariants inv(a);
    Vector h;
    for (const auto& g : b.group()) h.push_back(inv.hdet(g).value);
    auto cand = hi1_candidate(b, inv.nakayama(), h);
    expect(bool(cand), cand.report);
    auto w = inner_witness(b, *cand.candidate);
    expect(bool(w), w.report);
    std::size_t g_xi = b.group()[0].matrix().is_identity() ? 1 : 0;
    expect((*w.unit)[1 - g_xi].is_zero() && !(*w.unit)[g_xi].is_zero(), "witness is not a multiple of 1 # xi");
    expect(!verify_witness(b, *cand.candidate, *w.unit, a->degree_bound()), "witness fails");
}

// 8. hdet(phi) = t-eigenvalue of mu on A[t; phi].
void ore_hdet() {
    std::mt19937_64 rng(808);
    auto check = [&](const AlgebraPtr& a, const Matrix& m) {
        auto phi = validated_automorphism(a, m);
        auto o = ore_extension(a, phi, widened_t_degree(a));
        const std::size_t t = a->num_generators();
        Matrix mu = nakayama_koszul(o).matrix();
        for (std::size_t r = 0; r < t; ++r) expect(mu(r, t).is_zero(), "t is not an eigenvector");
        expect(hdet_koszul(a, phi) == mu(t, t), "hdet " + hdet_koszul(a, phi).to_string() + " vs " + mu(t, t).to_string());
    };
    auto k1 = oracle::polynomial(1);
    auto k2 = oracle::polynomial(2);
    auto kq = oracle::quantum_plane(Scalar::from_integer(Q, 3));
    for (int i = 0; i < 10; ++i) {
        check(k1, oracle::random_diagonal(Q, 1, rng));
        check(k2, oracle::random_invertible(Q, 2, rng));
        check(kq, oracle::random_diagonal(Q, 2, rng));
    }
}

// 9. A[t; mu_A] is CY.
void ore_cy() {
    std::mt19937_64 rng(909);
    std::vector<AlgebraPtr> as{oracle::quantum_plane(Scalar::from_integer(Q, 5)),
                               oracle::skewpoly(3, oracle::random_skew_parameters(3, Q, rng))};
    for (const auto& a : as) {
        auto o = ore_extension(a, nakayama_koszul(a), widened_t_degree(a));
        Matrix mu = nakayama_koszul(o).matrix();
        expect(mu.is_identity(), mu.to_string());
    }
}

// 10. Tensor identities on k_q[x,y] (x) k[t].
void tensor() {
    std::mt19937_64 rng(1010);
    auto a = oracle::quantum_plane(Scalar::from_integer(Q, 3));
    auto b = oracle::polynomial(1);
    for (int i = 0; i < 5; ++i) {
        auto s = validated_automorphism(a, oracle::random_diagonal(Q, 2, rng));
        auto t = validated_automorphism(b, oracle::random_diagonal(Q, 1, rng));
        Verdict v = verify_tensor(a, b, s, t);
        expect(v.equal, v.lhs + " vs " + v.rhs);
        auto ab = tensor_product(a, b);
        Scalar h = hdet_koszul(ab, tensor_automorphism(ab, s, t));
        expect(h == s.matrix().determinant() * t.matrix()(0, 0), "hdet product");
        expect(total_degree(Invariants(ab).as_index()) == 3, "l additivity");
    }
}

// 11. mu is central among validated automorphisms.
void centrality() {
    std::mt19937_64 rng(1111);
    std::size_t total = 0;
    auto run = [&](const AlgebraPtr& a, const std::vector<Matrix>& ms) {
        std::vector<GradedAutomorphism> fam;
        for (const auto& m : ms) fam.push_back(validated_automorphism(a, m));
        Verdict v = verify_center(a, fam);
        expect(v.equal, a->name() + ": " + v.lhs);
        total += fam.size();
    };
    {
        auto a = oracle::polynomial(2);
        std::vector<Matrix> ms;
        for (int i = 0; i < 10; ++i) ms.push_back(oracle::random_invertible(Q, 2, rng));
        run(a, ms);
    }
    {
        auto a = oracle::quantum_plane(Scalar::from_integer(Q, 2));
        std::vector<Matrix> ms;
        for (int i = 0; i < 10; ++i) ms.push_back(oracle::random_diagonal(Q, 2, rng));
        run(a, ms);
    }
    {
        auto a = oracle::skewpoly(3, oracle::random_skew_parameters(3, Q, rng));
        std::vector<Matrix> ms;
        for (int i = 0; i < 10; ++i) ms.push_back(oracle::random_diagonal(Q, 3, rng));
        run(a, ms);
    }
    {
        auto a = catalog_kminus1_plane().algebra();
        std::vector<Matrix> ms;
        for (int i = 0; i < 10; ++i) {
            Matrix d = oracle::random_diagonal(Q, 2, rng);
            if (i % 2) {
                Matrix sw(Q, 2, 2);
                sw(0, 1) = sw(1, 0) = Scalar::one(Q);
                d = d * sw;
            }
            ms.push_back(d);
        }
        run(a, ms);
    }
    {
        auto a = catalog_downup_010().algebra();
        const FieldSpec& f = a->field();
        std::vector<Matrix> ms;
        for (int i = 0; i < 10; ++i) {
            Matrix d = oracle::random_diagonal(f, 2, rng);
            if (i % 2) {
                Matrix sw(f, 2, 2);
                sw(0, 1) = sw(1, 0) = Scalar::one(f);
                d = d * sw;
            }
            ms.push_back(d);
        }
        run(a, ms);
    }
    expect(total >= 50, "only " + std::to_string(total) + " automorphisms");
}

// 12. Quotient rule and hdet descent.
void quotient_rules() {
    auto kq = oracle::quantum_plane(Scalar::from_integer(Q, 3));
    Verdict v = verify_quotient(kq, kq->gen(0));
    expect(v.equal && v.lhs == "[[1]]", "k_q[x,y]/(x): " + v.lhs + " vs " + v.rhs);
    auto k2 = oracle::polynomial(2);
    expect(verify_quotient(k2, k2->gen(0)).equal, "k[x,y]/(x)");
    std::mt19937_64 rng(1212);
    for (int i = 0; i < 5; ++i) {
        auto s = validated_automorphism(k2, oracle::random_diagonal(Q, 2, rng));
        Verdict d = verify_hdet_descent(k2, k2->gen(0), s);
        expect(d.equal && d.lhs == s.matrix().determinant().to_string(), "descent " + d.lhs + " vs " + d.rhs);
    }
    auto du = catalog_downup_010().algebra();
    auto x = du->gen(0), y = du->gen(1);
    Verdict c = verify_quotient(du, x * y - y * x);
    expect(c.equal && c.kind == "consistency", "down-up quotient");
    bool derived = false;
    for (const auto& [k, val] : c.details)
        if (k == "derived_mu_A") derived = val == Matrix::diagonal(du->field(), {Scalar::from_integer(du->field(), -1), Scalar::from_integer(du->field(), -1)}).to_string();
    expect(derived, "mu_A = xi_-1 not reproduced");
}

// 13. Property suites.
void properties() {
    std::mt19937_64 rng(1313);
    // twist involutivity
    {
        auto a = oracle::polynomial(2);
        for (int i = 0; i < 5; ++i) {
            auto s = validated_automorphism(a, oracle::random_invertible(Q, 2, rng));
            auto tw = graded_twist(a, {s});
            auto back = graded_twist(tw, {validated_automorphism(tw, s.matrix().inverse())});
            expect(same_ideal(back->rewrite(), a->rewrite(), a->degree_bound()), "twist involutivity");
        }
    }
    // double dual
    for (const auto& a : {oracle::polynomial(3), oracle::quantum_plane(Scalar::from_integer(Q, 7)),
                          catalog_kminus1_plane().algebra(),
                          oracle::skewpoly(3, oracle::random_skew_parameters(3, Q, rng))}) {
        auto dd = quadratic_dual(quadratic_dual(a));
        expect(oracle::ideals_agree(a, dd), "double dual of " + a->name());
    }
    // deglex axioms
    {
        GeneratorTable t(1);
        t.add("x", {1});
        t.add("y", {1});
        std::vector<Word> ws;
        for (int n = 0; n <= 5; ++n)
            for (const auto& l : oracle::all_words(2, n)) ws.emplace_back(t, l);
        for (std::size_t i = 0; i < ws.size(); ++i)
            for (std::size_t j = 0; j < ws.size(); j += 7) {
                const Word &u = ws[i], &v = ws[j];
                expect(((u < v) + (v < u) + (u == v)) == 1, "trichotomy");
                if (u < v)
                    for (std::size_t k = 0; k < ws.size(); k += 13) {
                        expect(ws[k] * u < ws[k] * v && u * ws[k] < v * ws[k], "compatibility");
                    }
                if (u.degree() < v.degree()) expect(u < v, "degree first");
            }
    }
    // Groebner vs brute force
    {
        std::vector<PresentationFile> cat{catalog_polynomial(2), catalog_polynomial(3), catalog_polynomial(4),
                                          catalog_skewpoly(3, default_skew_parameters(3)), catalog_quantum_plane(Scalar::from_integer(Q, 2)),
                                          catalog_kminus1_plane(), catalog_downup_010()};
        for (auto& pf : cat) {
            pf.degree_bound = 5;
            auto a = pf.algebra();
            auto h = a->rewrite().hilbert_prefix();
            h.resize(6);
            auto b = oracle::brute_force_dimensions(a->generators(), a->field(), a->relations(), 5);
            expect(h == b, "dimensions of " + pf.name);
        }
    }
    // hdet multiplicativity
    {
        auto a = oracle::polynomial(2, F101);
        auto kq = oracle::quantum_plane(Scalar::from_integer(Q, 3));
        for (int i = 0; i < 25; ++i) {
            auto s = validated_automorphism(a, oracle::random_invertible(F101, 2, rng));
            auto t = validated_automorphism(a, oracle::random_invertible(F101, 2, rng));
            expect(hdet_koszul(a, compose(s, t)) == hdet_koszul(a, s) * hdet_koszul(a, t), "hdet multiplicative");
            auto u = validated_automorphism(kq, oracle::random_diagonal(Q, 2, rng));
            auto v = validated_automorphism(kq, oracle::random_diagonal(Q, 2, rng));
            expect(hdet_koszul(kq, compose(u, v)) == hdet_koszul(kq, u) * hdet_koszul(kq, v), "hdet multiplicative");
        }
    }
    // verdict reproducibility
    {
        auto pf = catalog_downup_010();
        auto a1 = pf.algebra();
        auto a2 = pf.algebra();
        auto j1 = verify_hi1_cy(a1, pf.group(a1, "G")).to_json().dump();
        auto j2 = verify_hi1_cy(a2, pf.group(a2, "G")).to_json().dump();
        expect(j1 == j2, "verdict bytes differ");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"1 skew polynomial Nakayama formula", skew_nakayama},
        {"2 hdet(mu_A) = 1", hi3},
        {"3 hdet = det on polynomial rings", hdet_det},
        {"4 swap on k_{-1}[x,y] has hdet 1", swap_hdet},
        {"5 twist of bigraded k[x,y]", hi2_bigraded},
        {"6 down-up twist", downup_twist},
        {"7 down-up smash product is CY", hi1_downup},
        {"8 hdet(phi) = mu(t) t^-1 on Ore extensions", ore_hdet},
        {"9 A[t; mu_A] is CY", ore_cy},
        {"10 tensor product identities", tensor},
        {"11 mu is central", centrality},
        {"12 quotient rule and hdet descent", quotient_rules},
        {"13 property suites", properties},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        try {
            fn();
        } catch (const Failure& f) {
            why = f.what;
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2fs", secs);
        if (why.empty()) {
            std::cout << "PASS " << name << " (" << buf << ")\n";
        } else {
            ++failed;
            std::cout << "FAIL " << name << " (" << buf << "): " << why << "\n";
        }
        std::cout.flush();
    }
    return failed == 0 ? 0 : 1;
}
