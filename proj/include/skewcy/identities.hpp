#ifndef SKEWCY_IDENTITIES_HPP
#define SKEWCY_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skewcy/constructions.hpp"

namespace skewcy {

/// Outcome of one identity check. A "verification" computes both sides by independent routes; a
/// "consistency" verdict uses a registry value for at least one side.
struct Verdict {
    std::string identity;
    std::string kind = "verification";
    std::string lhs;
    std::string rhs;
    bool equal = false;
    std::vector<std::string> provenance;
    int checked_to = 0;
    std::vector<std::pair<std::string, std::string>> details;

    void note(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
    void source(const std::string& p) {
        for (const auto& q : provenance)
            if (q == p) return;
        provenance.push_back(p);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["identity"] = identity;
        j["kind"] = kind;
        j["lhs"] = lhs;
        j["rhs"] = rhs;
        j["equal"] = equal;
        j["provenance"] = provenance;
        j["checked_to"] = checked_to;
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        for (const auto& [k, v] : details) d[k] = v;
        j["details"] = d;
        return j;
    }

    std::string to_text() const {
        std::string s = identity + " (" + kind + "): " + (equal ? "EQUAL" : "UNEQUAL") + "\n";
        s += "  lhs: " + lhs + "\n  rhs: " + rhs + "\n";
        s += "  checked to degree " + std::to_string(checked_to) + "\n";
        std::string p;
        for (const auto& q : provenance) p += (p.empty() ? "" : ", ") + q;
        s += "  provenance: " + p + "\n";
        for (const auto& [k, v] : details) s += "  " + k + ": " + v + "\n";
        return s;
    }
};

namespace detail {

inline std::string provenance_tag(const Invariants& inv) { return inv.certified() ? "computed-koszul" : "registry"; }

inline Matrix power_product(const std::vector<GradedAutomorphism>& family, const MultiDegree& e) {
    Matrix m = Matrix::identity(family.front().algebra()->field(), family.front().matrix().rows());
    for (std::size_t s = 0; s < family.size(); ++s) m = m * family[s].matrix().pow(e[s]);
    return m;
}

inline bool registry_lists_twist(const AlgebraPtr& a, const std::vector<GradedAutomorphism>& family) {
    for (const auto& fam : a->known().cy_twists) {
        if (fam.size() != family.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < fam.size(); ++i) same = same && fam[i] == family[i].matrix();
        if (same) return true;
    }
    return false;
}

inline std::string scalars_to_string(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

}  // namespace detail

/// mu of the twist against mu_A o sigma^l o xi_{hdet sigma}^{-1}.
inline Verdict verify_hi2(const AlgebraPtr& a, const std::vector<GradedAutomorphism>& family) {
    Verdict v;
    v.identity = "HI2";
    v.checked_to = a->degree_bound();
    Invariants inv(a);
    GradedAutomorphism mu = inv.nakayama();
    MultiDegree l = inv.as_index();
    v.source(detail::provenance_tag(inv));
    Vector h;
    for (const auto& s : family) {
        Sourced hs = inv.hdet(s);
        h.push_back(hs.value);
        v.source(detail::provenance_tag(inv));
    }
    auto tw = graded_twist(a, family);  // validates the family
    Vector hinv;
    for (const auto& x : h) hinv.push_back(x.inverse());
    Matrix rhs = mu.matrix() * detail::power_product(family, l) * xi(a, hinv).matrix();
    v.rhs = rhs.to_string();
    v.note("as_index", degree_to_string(l));
    v.note("hdet_sigma", detail::scalars_to_string(h));
    v.note("mu_A", mu.matrix().to_string());

    Invariants tinv(tw);
    if (tinv.certified()) {
        Matrix lhs = tinv.nakayama().matrix();
        v.lhs = lhs.to_string();
        v.equal = lhs == rhs;
        v.source("computed-koszul");
        v.note("twist_relations", [&] {
            std::string s;
            for (const auto& r : tw->relations()) s += (s.empty() ? "" : "; ") + r.to_string(tw->generators());
            return s;
        }());
    } else if (detail::registry_lists_twist(a, family)) {
        Matrix lhs = Matrix::identity(a->field(), a->num_generators());
        v.kind = "consistency";
        v.lhs = lhs.to_string();
        v.equal = lhs == rhs;
        v.source("registry");
        v.note("lhs_source", "registered: the twist is Calabi-Yau");
    } else {
        throw Error(Errc::NotCertified, "twist is not certifiable and no registered value: " + tinv.report());
    }
    if (!inv.certified()) v.kind = "consistency";
    return v;
}

/// hdet(mu_A) = 1.
inline Verdict verify_hi3(const AlgebraPtr& a) {
    Verdict v;
    v.identity = "HI3";
    v.checked_to = a->degree_bound();
    Invariants inv(a);
    GradedAutomorphism mu = inv.nakayama();
    Sourced h = inv.hdet(mu);
    v.source(detail::provenance_tag(inv));
    if (!inv.certified()) v.kind = "consistency";
    v.lhs = h.value.to_string();
    v.rhs = Scalar::one(a->field()).to_string();
    v.equal = h.value.is_one();
    v.note("mu_A", mu.to_string());
    v.note("hdet_source", h.provenance);
    return v;
}

/// hdet_A(phi) against the t-eigenvalue of mu on A[t; phi].
inline Verdict verify_ore_hdet(const AlgebraPtr& a, const GradedAutomorphism& phi) {
    Verdict v;
    v.identity = "ORE-HDET";
    v.checked_to = a->degree_bound();
    Invariants inv(a);
    Scalar lhs = hdet_koszul(inv.certificate(), phi);
    auto ore = ore_extension(a, phi, widened_t_degree(a));
    Invariants oinv(ore);
    GradedAutomorphism mu = oinv.nakayama();
    const std::size_t t = a->num_generators();
    const Matrix& m = mu.matrix();
    bool eigen = true;
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (r != t && !m(r, t).is_zero()) eigen = false;
    v.source("computed-koszul");
    v.lhs = lhs.to_string();
    v.rhs = eigen ? m(t, t).to_string() : "t is not a mu-eigenvector";
    v.equal = eigen && lhs == m(t, t);
    v.note("mu_ore", mu.to_string());
    return v;
}

/// mu_A o s = s o mu_A for every supplied automorphism.
inline Verdict verify_center(const AlgebraPtr& a, const std::vector<GradedAutomorphism>& family) {
    Verdict v;
    v.identity = "CENTER";
    v.checked_to = a->degree_bound();
    Invariants inv(a);
    GradedAutomorphism mu = inv.nakayama();
    v.source(detail::provenance_tag(inv));
    if (!inv.certified()) v.kind = "consistency";
    std::size_t bad = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!same_algebra(family[i].algebra(), a)) throw Error(Errc::AlgebraMismatch, "automorphism of another algebra");
        if (!commute(mu.matrix(), family[i].matrix())) {
            if (bad++ == 0) first_bad = family[i].to_string();
        }
    }
    v.lhs = "mu commutes with " + std::to_string(family.size() - bad) + " of " + std::to_string(family.size());
    v.rhs = "mu commutes with " + std::to_string(family.size()) + " of " + std::to_string(family.size());
    v.equal = bad == 0;
    v.note("mu_A", mu.to_string());
    if (bad) v.note("first_noncommuting", first_bad);
    return v;
}

/// A # kG is CY: rho = mu_A # Xi_hdet is multiplicative and inner via a degree-0 unit.
inline Verdict verify_hi1_cy(const AlgebraPtr& a, const std::vector<GradedAutomorphism>& gens,
                             const SmashOptions& opt = {}) {
    Verdict v;
    v.identity = "HI1-CY";
    v.checked_to = a->degree_bound();
    v.rhs = "inner";
    Invariants inv(a);
    GradedAutomorphism mu = inv.nakayama();
    v.source(detail::provenance_tag(inv));
    if (!inv.certified()) v.kind = "consistency";
    SmashAlgebra b = smash_product(a, gens, opt);
    v.note("group_order", std::to_string(b.order()));
    v.note("seed", std::to_string(opt.seed));
    bool mu_in_group = false;
    for (const auto& g : b.group()) mu_in_group = mu_in_group || g.matrix() == mu.matrix();
    Vector h;
    for (const auto& g : b.group()) {
        Sourced s = inv.hdet(g);
        h.push_back(s.value);
    }
    v.note("hdet_on_G", detail::scalars_to_string(h));
    bool trivial = true;
    for (const auto& x : h) trivial = trivial && x.is_one();
    if (!mu_in_group) v.note("precondition", "mu_A is not in G");
    if (!trivial) v.note("precondition", "hdet is not trivial on G");
    CandidateResult cand;
    try {
        cand = hi1_candidate(b, mu, h, opt);
    } catch (const Error& e) {
        if (e.code() != Errc::NotMultiplicative) throw;
        cand.report = e.what();
    }
    if (!cand) {
        v.lhs = "rho is not an algebra map (mu_A not central in the action): " + cand.report;
        return v;
    }
    v.note("multiplicativity", cand.report);
    WitnessResult w = inner_witness(b, *cand.candidate, opt.seed);
    if (!w) {
        v.lhs = "not inner: " + w.report;
        return v;
    }
    if (auto bad = verify_witness(b, *cand.candidate, *w.unit, a->degree_bound())) {
        v.lhs = "witness fails: " + *bad;
        return v;
    }
    std::string u;
    for (std::size_t g = 0; g < w.unit->size(); ++g) {
        if ((*w.unit)[g].is_zero()) continue;
        u += (u.empty() ? "" : " + ") + ("(" + (*w.unit)[g].to_string() + ")*(1 # g" + std::to_string(g) + ")");
    }
    for (std::size_t g = 0; g < b.order(); ++g) v.note("g" + std::to_string(g), b.group()[g].matrix().to_string());
    v.note("witness", u);
    v.lhs = "inner";
    v.equal = true;
    return v;
}

/// mu_{A (x) B} = mu_A (x) mu_B, hdet(s (x) t) = hdet s * hdet t, l_{A (x) B} = (l_A, l_B).
inline Verdict verify_tensor(const AlgebraPtr& a, const AlgebraPtr& b, const GradedAutomorphism& s,
                             const GradedAutomorphism& t) {
    Verdict v;
    v.identity = "TENSOR";
    Invariants ia(a), ib(b);
    auto ab = tensor_product(a, b);
    v.checked_to = ab->degree_bound();
    Invariants iab(ab);
    Matrix mu_lhs = iab.nakayama().matrix();
    Matrix mu_rhs = block_diagonal(ia.nakayama().matrix(), ib.nakayama().matrix());
    Scalar h_lhs = iab.hdet(tensor_automorphism(ab, s, t)).value;
    Scalar h_rhs = ia.hdet(s).value * ib.hdet(t).value;
    MultiDegree l_lhs = iab.as_index();
    MultiDegree l_rhs = ia.as_index();
    for (int x : ib.as_index()) l_rhs.push_back(x);
    v.source(detail::provenance_tag(iab));
    v.source(detail::provenance_tag(ia));
    v.source(detail::provenance_tag(ib));
    if (!(ia.certified() && ib.certified() && iab.certified())) v.kind = "consistency";
    v.lhs = "mu = " + mu_lhs.to_string() + "; hdet = " + h_lhs.to_string() + "; l = " + degree_to_string(l_lhs);
    v.rhs = "mu = " + mu_rhs.to_string() + "; hdet = " + h_rhs.to_string() + "; l = " + degree_to_string(l_rhs);
    v.equal = mu_lhs == mu_rhs && h_lhs == h_rhs && l_lhs == l_rhs;
    v.note("total_as_index", std::to_string(total_degree(l_lhs)) + " = " + std::to_string(total_degree(ia.as_index())) +
                                 " + " + std::to_string(total_degree(ib.as_index())));
    return v;
}

/// mu_{A/(z)} against (mu_A o tau) restricted to A/(z).
inline Verdict verify_quotient(const AlgebraPtr& a, const NcPolynomial& z) {
    Verdict v;
    v.identity = "QUOTIENT";
    v.checked_to = a->degree_bound();
    Invariants inv(a);
    GradedAutomorphism mu = inv.nakayama();
    NormalityResult nw = normality_witness(a, z, mu);
    if (!nw) throw Error(Errc::NotNormal, nw.report);
    if (!nw.eigenvalue) throw Error(Errc::NotEigenvector, "z is not an eigenvector of mu_A");
    Quotient q = quotient_by_normal(a, z);
    GradedAutomorphism rhs = nakayama_of_quotient(q, mu, *nw.tau);
    Invariants qinv(q.algebra);
    GradedAutomorphism lhs = qinv.nakayama();
    v.source(detail::provenance_tag(qinv));
    v.source(detail::provenance_tag(inv));
    if (!inv.certified() || !qinv.certified()) v.kind = "consistency";
    v.lhs = lhs.matrix().to_string();
    v.rhs = rhs.matrix().to_string();
    v.equal = lhs.matrix() == rhs.matrix();
    v.note("tau", nw.tau->to_string());
    v.note("mu_A", mu.to_string());
    v.note("mu_eigenvalue_of_z", nw.eigenvalue->to_string());
    std::string rels;
    for (const auto& r : q.algebra->relations()) rels += (rels.empty() ? "" : "; ") + r.to_string(q.algebra->generators());
    v.note("quotient_relations", rels.empty() ? "(none)" : rels);
    if (q.kept.size() == a->num_generators()) {
        // same generators: mu_A is recovered as mu_{A/(z)} o tau^-1 on degree 1
        Matrix derived = lhs.matrix() * nw.tau->matrix().inverse();
        v.note("derived_mu_A", derived.to_string());
        v.note("derived_mu_A_matches", derived == mu.matrix() ? "yes" : "no");
        if (!(derived == mu.matrix())) v.equal = false;
    }
    return v;
}

/// hdet_A(s) against lambda * hdet_{A/(z)}(s restricted), where s(z) = lambda z.
inline Verdict verify_hdet_descent(const AlgebraPtr& a, const NcPolynomial& z, const GradedAutomorphism& s) {
    Verdict v;
    v.identity = "HDET-DESCENT";
    v.checked_to = a->degree_bound();
    auto lambda = eigenvalue_of(s, z);
    if (!lambda) throw Error(Errc::NotEigenvector, "sigma(z) is not a multiple of z");
    NormalityResult nw = normality_witness(a, z);
    if (!nw) throw Error(Errc::NotNormal, nw.report);
    Quotient q = quotient_by_normal(a, z);
    GradedAutomorphism sq = restrict_to_quotient(q, s);
    Invariants inv(a), qinv(q.algebra);
    Sourced ha = inv.hdet(s);
    Sourced hq = qinv.hdet(sq);
    v.source(detail::provenance_tag(inv));
    v.source(detail::provenance_tag(qinv));
    if (!inv.certified() || !qinv.certified()) v.kind = "consistency";
    v.lhs = ha.value.to_string();
    Scalar rhs = *lambda * hq.value;
    v.rhs = rhs.to_string();
    v.equal = ha.value == rhs;
    v.note("lambda", lambda->to_string());
    v.note("hdet_quotient", hq.value.to_string());
    v.note("sigma_restricted", sq.to_string());
    return v;
}

}  // namespace skewcy

#endif
