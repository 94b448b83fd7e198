#ifndef SKEWCY_KOSZUL_HPP
#define SKEWCY_KOSZUL_HPP

// Quadratic duals, numerical Koszul/AS-regular certification, the Frobenius structure of the
// dual E = A^!, and the Koszul-route Nakayama automorphism and homological determinant.
//
// Conventions (pinned by the self-test below):
//   * V* carries the dual basis; <X_i X_j, x_k x_l> = delta_ik delta_jl.
//   * <a, b> is the coefficient of the top normal word in nf(a b), and nu is defined by
//     <a, b> = <nu(b), a>.
//   * mu_A on V has matrix (-1)^(d+1) * transpose(nu on V*).
//   * hdet(sigma) = lambda^-1 where the contragredient of sigma acts on E_d by lambda.

#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skewcy/graded_algebra.hpp"

namespace skewcy {

/// Relation space R inside V (x) V (rows, coordinate i*n + j for x_i x_j) and its annihilator.
struct QuadraticData {
    GeneratorTable generators;
    Matrix relations;
    Matrix dual_relations;
};

inline QuadraticData quadratic_data(const AlgebraPtr& a) {
    if (!a->is_quadratic())
        throw Error(Errc::NotQuadratic, "algebra must be generated in degree 1 with quadratic relations");
    const auto& t = a->generators();
    const std::size_t n = t.size();
    Matrix rel(a->field(), a->relations().size(), n * n);
    for (std::size_t r = 0; r < a->relations().size(); ++r)
        for (const auto& [w, c] : a->relations()[r].terms())
            rel(r, static_cast<std::size_t>(w[0]) * n + static_cast<std::size_t>(w[1])) = c;
    Matrix basis = rel;
    auto pivots = basis.row_reduce();
    Matrix R(a->field(), pivots.size(), n * n);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) R(r, c) = basis(r, c);
    auto perp = R.kernel();
    Matrix P(a->field(), perp.size(), n * n);
    for (std::size_t r = 0; r < perp.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) P(r, c) = perp[r][c];
    return {t, std::move(R), std::move(P)};
}

inline std::string dual_name(const std::string& s) { return s + "'"; }

/// T(V*)/(R^perp) on the dual generators x' (same multidegrees), completed to A's degree bound.
inline AlgebraPtr quadratic_dual(const AlgebraPtr& a) {
    QuadraticData q = quadratic_data(a);
    const auto& t = a->generators();
    const std::size_t n = t.size();
    GeneratorTable dt(t.rank());
    for (std::size_t i = 0; i < n; ++i) dt.add(dual_name(t.name(i)), t.degree(i));
    std::vector<NcPolynomial> rels;
    for (std::size_t r = 0; r < q.dual_relations.rows(); ++r) {
        NcPolynomial p(a->field());
        for (std::size_t c = 0; c < n * n; ++c)
            p.add_term(Word(dt, {static_cast<int>(c / n), static_cast<int>(c % n)}), q.dual_relations(r, c));
        rels.push_back(std::move(p));
    }
    return make_algebra(std::move(dt), a->field(), std::move(rels), a->degree_bound(), {},
                        a->name().empty() ? std::string() : a->name() + "^!");
}

struct KoszulCertificate {
    AlgebraPtr algebra;
    AlgebraPtr dual;
    int checked_to = 0;
    int top_degree = 0;  // d, the global dimension
    MultiDegree as_index;
    Word top_word;
    std::vector<long long> hilbert;       // of A
    std::vector<long long> dual_hilbert;  // of A^!

    std::string statement() const {
        return "numerically certified Koszul AS-regular to degree " + std::to_string(checked_to) +
               " (global dimension " + std::to_string(top_degree) + ", AS index " + degree_to_string(as_index) +
               "); Nakayama normalised so that skew polynomial rings give mu(x_s) = prod_{a<s} p_as prod_{b>s} "
               "p_sb^-1 x_s, the inverse convention is not used";
    }
};

struct CertificationResult {
    std::optional<KoszulCertificate> certificate;
    std::string report;

    explicit operator bool() const { return certificate.has_value(); }
};

namespace detail {

/// Coefficient of the top word in nf(a b).
inline Scalar top_coefficient(const KoszulCertificate& c, const NcPolynomial& a, const NcPolynomial& b) {
    return c.dual->normal_form(a * b).coefficient(c.top_word);
}

inline Matrix pairing_matrix(const KoszulCertificate& c, int i) {
    const auto& E = *c.dual;
    auto left = E.rewrite().monomial_basis(i);
    auto right = E.rewrite().monomial_basis(c.top_degree - i);
    Matrix m(E.field(), left.size(), right.size());
    for (std::size_t r = 0; r < left.size(); ++r)
        for (std::size_t s = 0; s < right.size(); ++s)
            m(r, s) = top_coefficient(c, NcPolynomial::monomial(left[r], E.field()),
                                      NcPolynomial::monomial(right[s], E.field()));
    return m;
}

}  // namespace detail

/// Checks (i) A^! has a one-dimensional top degree d with nothing above it up to the bound,
/// (ii) every pairing E_i x E_{d-i} -> E_d is nondegenerate, (iii) the numerical Koszul identity
/// sum_i (-1)^i dim E_i dim A_{n-i} = 0 for 1 <= n <= D.
inline CertificationResult certify_koszul_as_regular(const AlgebraPtr& a) {
    AlgebraPtr e = quadratic_dual(a);
    const int D = a->degree_bound();
    KoszulCertificate c;
    c.algebra = a;
    c.dual = e;
    c.checked_to = D;
    c.hilbert = a->rewrite().hilbert_prefix();
    c.dual_hilbert = e->rewrite().hilbert_prefix();

    int d = -1;
    for (int i = 0; i <= D; ++i)
        if (c.dual_hilbert[static_cast<std::size_t>(i)] != 0) d = i;
    if (d >= D)
        return {std::nullopt, "dual is nonzero up to the degree bound " + std::to_string(D) +
                                  "; finite dimensionality not observed"};
    if (c.dual_hilbert[static_cast<std::size_t>(d)] != 1)
        return {std::nullopt, "top degree " + std::to_string(d) + " of the dual has dimension " +
                                  std::to_string(c.dual_hilbert[static_cast<std::size_t>(d)])};
    c.top_degree = d;
    c.top_word = e->rewrite().monomial_basis(d).front();
    c.as_index = c.top_word.multidegree(e->generators());

    for (int i = 0; i <= d; ++i) {
        Matrix p = detail::pairing_matrix(c, i);
        if (!p.square() || p.rank() != p.rows())
            return {std::nullopt, "pairing E_" + std::to_string(i) + " x E_" + std::to_string(d - i) +
                                      " -> E_" + std::to_string(d) + " is degenerate"};
    }
    for (int n = 1; n <= D; ++n) {
        long long s = 0;
        for (int i = 0; i <= n && i <= d; ++i)
            s += (i % 2 ? -1 : 1) * c.dual_hilbert[static_cast<std::size_t>(i)] *
                 c.hilbert[static_cast<std::size_t>(n - i)];
        if (s != 0)
            return {std::nullopt, "numerical Koszul identity fails in degree " + std::to_string(n) + " (sum " +
                                      std::to_string(s) + ")"};
    }
    return {std::move(c), "certified"};
}

inline KoszulCertificate require_certificate(const AlgebraPtr& a) {
    auto r = certify_koszul_as_regular(a);
    if (!r) throw Error(Errc::NotCertified, r.report);
    return *r.certificate;
}

/// Frobenius structure of E = A^!: pairing matrices and the classical Nakayama automorphism.
struct FrobeniusData {
    KoszulCertificate certificate;
    std::vector<Matrix> pairings;  // pairings[i]: E_i x E_{d-i}
    GradedAutomorphism nu;         // on E, column convention on the dual generators
};

inline FrobeniusData classical_nakayama(const KoszulCertificate& c) {
    const int d = c.top_degree;
    std::vector<Matrix> pairings;
    for (int i = 0; i <= d; ++i) pairings.push_back(detail::pairing_matrix(c, i));
    const FieldSpec& f = c.dual->field();
    const std::size_t n = c.dual->num_generators();
    auto deg1 = c.dual->rewrite().monomial_basis(1);
    if (deg1.size() != n) throw Error(Errc::DegeneratePairing, "dual degree-1 piece has the wrong dimension");
    Matrix p1 = pairings[1];
    Matrix pd1 = pairings[static_cast<std::size_t>(d - 1)];
    Matrix nu_mat(f, n, n);
    try {
        nu_mat = p1.transpose().inverse() * pd1;
    } catch (const Error&) {
        throw Error(Errc::DegeneratePairing, "degree-1 pairing is singular");
    }
    auto chk = check_automorphism(c.dual, nu_mat);
    if (!chk) throw Error(Errc::AutomorphismValidationFailed, "classical Nakayama map is not multiplicative: " + chk.report);
    GradedAutomorphism nu = *chk.automorphism;
    for (int i = 0; i <= d; ++i) {
        auto left = c.dual->rewrite().monomial_basis(i);
        auto right = c.dual->rewrite().monomial_basis(d - i);
        for (std::size_t r = 0; r < left.size(); ++r)
            for (std::size_t s = 0; s < right.size(); ++s) {
                NcPolynomial a = NcPolynomial::monomial(left[r], f);
                NcPolynomial b = NcPolynomial::monomial(right[s], f);
                if (detail::top_coefficient(c, a, b) != detail::top_coefficient(c, nu.apply(b), a))
                    throw Error(Errc::AutomorphismValidationFailed,
                                "<a, b> = <nu(b), a> fails for a = " + left[r].to_string(c.dual->generators()) +
                                    ", b = " + right[s].to_string(c.dual->generators()));
            }
    }
    return {c, std::move(pairings), std::move(nu)};
}

namespace detail {

inline GradedAutomorphism nakayama_unchecked(const KoszulCertificate& c) {
    FrobeniusData fr = classical_nakayama(c);
    Scalar sign = Scalar::from_integer(c.algebra->field(), c.top_degree % 2 == 0 ? -1 : 1);
    Matrix mu = sign * fr.nu.matrix().transpose();
    auto chk = check_automorphism(c.algebra, mu);
    if (!chk) throw Error(Errc::AutomorphismValidationFailed, "Koszul-route Nakayama map rejected: " + chk.report);
    return *chk.automorphism;
}

inline Scalar hdet_unchecked(const KoszulCertificate& c, const GradedAutomorphism& s) {
    if (!same_algebra(s.algebra(), c.algebra))
        throw Error(Errc::AlgebraMismatch, "automorphism is not defined on the certified algebra");
    Matrix contra = s.matrix().inverse().transpose();
    auto chk = check_automorphism(c.dual, contra);
    if (!chk) throw Error(Errc::DualNotPreserved, chk.report);
    const FieldSpec& f = c.dual->field();
    NcPolynomial top = NcPolynomial::monomial(c.top_word, f);
    Scalar lambda = chk.automorphism->apply(top).coefficient(c.top_word);
    return lambda.inverse();
}

/// Reproduces the two anchoring facts: mu = diag(1/2, 2) on k_2[x,y] and hdet = det on k[x,y].
inline void check_conventions() {
    const FieldSpec q = FieldSpec::rationals();
    GeneratorTable t(1);
    t.add("x", {1});
    t.add("y", {1});
    auto x = NcPolynomial::generator(t, 0, q);
    auto y = NcPolynomial::generator(t, 1, q);
    auto two = Scalar::from_integer(q, 2);
    auto skew = make_algebra(t, q, {y * x - two * (x * y)}, 4);
    Matrix mu = nakayama_unchecked(require_certificate(skew)).matrix();
    if (mu != Matrix::diagonal(q, {two.inverse(), two}))
        throw Error(Errc::AutomorphismValidationFailed, "Nakayama convention self-test failed: " + mu.to_string());
    auto poly = make_algebra(t, q, {y * x - x * y}, 4);
    Matrix s(q, 2, 2);
    s(0, 0) = Scalar::from_integer(q, 2);
    s(0, 1) = Scalar::from_integer(q, 3);
    s(1, 0) = Scalar::from_integer(q, 1);
    s(1, 1) = Scalar::from_integer(q, 5);
    auto c = require_certificate(poly);
    Scalar h = hdet_unchecked(c, validated_automorphism(poly, s));
    if (h != s.determinant())
        throw Error(Errc::AutomorphismValidationFailed, "hdet convention self-test failed: " + h.to_string());
}

inline void ensure_conventions() {
    static std::once_flag once;
    std::call_once(once, check_conventions);
}

}  // namespace detail

/// mu_A on V = (-1)^(d+1) (nu on V*)^T, validated on A.
inline GradedAutomorphism nakayama_koszul(const KoszulCertificate& c) {
    detail::ensure_conventions();
    return detail::nakayama_unchecked(c);
}

inline GradedAutomorphism nakayama_koszul(const AlgebraPtr& a) { return nakayama_koszul(require_certificate(a)); }

/// Inverse of the scalar by which the contragredient of sigma acts on the top degree of A^!.
inline Scalar hdet_koszul(const KoszulCertificate& c, const GradedAutomorphism& s) {
    detail::ensure_conventions();
    return detail::hdet_unchecked(c, s);
}

inline Scalar hdet_koszul(const AlgebraPtr& a, const GradedAutomorphism& s) {
    return hdet_koszul(require_certificate(a), s);
}

struct Sourced {
    Scalar value;
    std::string provenance;
};

/// If s = xi_delta, the vector delta (read off generators of unit multidegree).
inline std::optional<Vector> xi_parameters(const GradedAutomorphism& s) {
    const Matrix& m = s.matrix();
    if (!m.is_diagonal()) return std::nullopt;
    const auto& t = s.algebra()->generators();
    const int w = t.rank();
    Vector delta;
    for (int k = 0; k < w; ++k) {
        std::optional<Scalar> dk;
        for (std::size_t i = 0; i < t.size() && !dk; ++i) {
            MultiDegree e(static_cast<std::size_t>(w), 0);
            e[static_cast<std::size_t>(k)] = 1;
            if (t.degree(i) == e) dk = m(i, i);
        }
        if (!dk) return std::nullopt;
        delta.push_back(*dk);
    }
    if (xi(s.algebra(), delta).matrix() != m) return std::nullopt;
    return delta;
}

/// Closed-form hdet from registry rules: xi_delta with a known AS index gives delta^l; otherwise
/// the algebra's registered determinant rule.
inline Sourced hdet_lookup(const AlgebraPtr& a, const GradedAutomorphism& s) {
    const KnownData& k = a->known();
    if (k.as_index) {
        if (auto delta = xi_parameters(s)) {
            Scalar v = Scalar::one(a->field());
            for (std::size_t i = 0; i < delta->size(); ++i) v *= (*delta)[i].pow((*k.as_index)[i]);
            return {v, "registry: hdet xi_delta = delta^l with l = " + degree_to_string(*k.as_index) +
                           (k.provenance.empty() ? "" : " [" + k.provenance + "]")};
        }
    }
    if (k.hdet_rule != HdetRule::None) {
        if (!a->generators().all_degree_one())
            throw Error(Errc::NoRuleAvailable, "determinant rules need generators of degree 1");
        Scalar det = s.matrix().determinant();
        if (k.hdet_rule == HdetRule::DeterminantSquared) det *= det;
        return {det, std::string("registry: hdet = ") + hdet_rule_name(k.hdet_rule) + " of the degree-1 action" +
                         (k.provenance.empty() ? "" : " [" + k.provenance + "]")};
    }
    throw Error(Errc::NoRuleAvailable, "no registered hdet rule for " + a->name());
}

/// Route selection for one algebra: the Koszul computation when certification succeeds,
/// otherwise registry facts. Certification runs once.
class Invariants {
public:
    explicit Invariants(AlgebraPtr a) : a_(std::move(a)) {
        if (a_->is_quadratic()) {
            auto r = certify_koszul_as_regular(a_);
            report_ = r.report;
            cert_ = std::move(r.certificate);
        } else {
            report_ = "not quadratic";
        }
    }

    const AlgebraPtr& algebra() const { return a_; }
    bool certified() const { return cert_.has_value(); }
    const KoszulCertificate& certificate() const {
        if (!cert_) throw Error(Errc::NotCertified, report_);
        return *cert_;
    }
    const std::string& report() const { return report_; }
    int checked_to() const { return a_->degree_bound(); }

    bool has_nakayama() const { return cert_ || a_->known().nakayama; }

    GradedAutomorphism nakayama() const {
        if (cert_) {
            if (!mu_) mu_ = nakayama_koszul(*cert_);
            return *mu_;
        }
        if (a_->known().nakayama) return validated_automorphism(a_, *a_->known().nakayama);
        throw Error(Errc::NotCertified, "no Koszul certificate (" + report_ + ") and no registry Nakayama automorphism");
    }

    std::string nakayama_provenance() const {
        if (cert_) return "computed-koszul";
        return "registry" + (a_->known().provenance.empty() ? std::string() : ": " + a_->known().provenance);
    }

    MultiDegree as_index() const {
        if (cert_) return cert_->as_index;
        if (a_->known().as_index) return *a_->known().as_index;
        throw Error(Errc::NotCertified, "AS index unavailable (" + report_ + ")");
    }

    std::string as_index_provenance() const { return nakayama_provenance(); }

    Sourced hdet(const GradedAutomorphism& s) const {
        if (cert_) return {hdet_koszul(*cert_, s), "computed-koszul"};
        return hdet_lookup(a_, s);
    }

private:
    AlgebraPtr a_;
    std::optional<KoszulCertificate> cert_;
    std::string report_;
    mutable std::optional<GradedAutomorphism> mu_;
};

}  // namespace skewcy

#endif
