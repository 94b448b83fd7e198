#ifndef SKEWCY_CONSTRUCTIONS_HPP
#define SKEWCY_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "skewcy/koszul.hpp"

namespace skewcy {

/// Seed for every sampled check unless the caller supplies one; echoed in reports.
inline constexpr std::uint64_t kDefaultSeed = 1729;

inline bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

// ---------------------------------------------------------------------------
// Graded twists

/// Left graded twist a o b = sigma^|b|(a) b by a commuting family sigma_1..sigma_w. A relation
/// word x_{i1} ... x_{in} is rewritten in twisted products by sending slot j to
/// sigma^-(|x_{i(j+1)}| + ... + |x_{in}|).
inline AlgebraPtr graded_twist(const AlgebraPtr& a, const std::vector<GradedAutomorphism>& family) {
    const auto& t = a->generators();
    if (static_cast<int>(family.size()) != t.rank())
        throw Error(Errc::DegreeMismatch, "twisting family needs one automorphism per grading coordinate");
    for (const auto& s : family)
        if (!same_algebra(s.algebra(), a)) throw Error(Errc::AlgebraMismatch, "twisting map is not an automorphism of A");
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!commute(family[i].matrix(), family[j].matrix()))
                throw Error(Errc::NonCommutingFamily, "sigma_" + std::to_string(i + 1) + " and sigma_" +
                                                          std::to_string(j + 1) + " do not commute");

    std::vector<Matrix> inverses;
    for (const auto& s : family) inverses.push_back(s.matrix().inverse());
    std::map<MultiDegree, Matrix> powers;
    auto power_for = [&](const MultiDegree& e) -> const Matrix& {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        Matrix m = Matrix::identity(a->field(), t.size());
        for (std::size_t s = 0; s < e.size(); ++s) m = m * inverses[s].pow(e[s]);
        return powers.emplace(e, std::move(m)).first->second;
    };
    SlotAction slot = [&](const Word& w, std::size_t pos) -> const Matrix& {
        MultiDegree right(static_cast<std::size_t>(t.rank()), 0);
        for (std::size_t k = pos + 1; k < w.length(); ++k) right += t.degree(static_cast<std::size_t>(w[k]));
        return power_for(right);
    };
    std::vector<NcPolynomial> rels;
    for (const auto& r : a->relations()) rels.push_back(apply_linear(t, slot, r));
    return make_algebra(t, a->field(), std::move(rels), a->degree_bound(), {},
                        a->name().empty() ? std::string() : a->name() + "^twist");
}

// ---------------------------------------------------------------------------
// Ore extensions and tensor products

inline std::string fresh_name(const GeneratorTable& t, const std::string& base) {
    if (t.index_of(base) < 0) return base;
    for (int k = 1;; ++k)
        if (t.index_of(base + std::to_string(k)) < 0) return base + std::to_string(k);
}

/// A[t; phi] with t a = phi(a) t. A t_degree of length w + 1 adds a grading coordinate (the old
/// generators get 0 there); length w keeps the grading group. t is the last generator.
inline AlgebraPtr ore_extension(const AlgebraPtr& a, const GradedAutomorphism& phi, const MultiDegree& t_degree) {
    if (!same_algebra(phi.algebra(), a)) throw Error(Errc::AlgebraMismatch, "phi is not an automorphism of A");
    const auto& t = a->generators();
    const int w = t.rank();
    const bool widen = static_cast<int>(t_degree.size()) == w + 1;
    if (!widen && static_cast<int>(t_degree.size()) != w)
        throw Error(Errc::DegreeMismatch, "t degree must have length w or w + 1");
    GeneratorTable nt(widen ? w + 1 : w);
    for (std::size_t i = 0; i < t.size(); ++i) {
        MultiDegree d = t.degree(i);
        if (widen) d.push_back(0);
        nt.add(t.name(i), d);
    }
    nt.add(fresh_name(t, "t"), t_degree);
    const int ti = static_cast<int>(t.size());
    auto lift = [&](const NcPolynomial& p) {
        NcPolynomial out(a->field());
        for (const auto& [wd, c] : p.terms()) out.add_term(Word(nt, wd.letters()), c);
        return out;
    };
    std::vector<NcPolynomial> rels;
    for (const auto& r : a->relations()) rels.push_back(lift(r));
    NcPolynomial tt = NcPolynomial::generator(nt, ti, a->field());
    for (std::size_t i = 0; i < t.size(); ++i) {
        NcPolynomial xi_ = NcPolynomial::generator(nt, static_cast<int>(i), a->field());
        rels.push_back(tt * xi_ - lift(phi.image(i)) * tt);
    }
    return make_algebra(std::move(nt), a->field(), std::move(rels), a->degree_bound(), {},
                        a->name().empty() ? std::string() : a->name() + "[t;phi]");
}

/// The default t degree: a new grading coordinate of total degree `total`.
inline MultiDegree widened_t_degree(const AlgebraPtr& a, int total = 1) {
    MultiDegree d(static_cast<std::size_t>(a->grading_rank()) + 1, 0);
    d.back() = total;
    return d;
}

/// A (x) B: generators of A then B (renamed on collision), grading Z^(wA + wB), relations of
/// both factors plus all commutators a_i b_j - b_j a_i.
inline AlgebraPtr tensor_product(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!(a->field() == b->field())) throw Error(Errc::FieldMismatch, a->field().to_string() + " vs " + b->field().to_string());
    const auto& ta = a->generators();
    const auto& tb = b->generators();
    const int wa = ta.rank(), wb = tb.rank();
    GeneratorTable t(wa + wb);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        MultiDegree d = ta.degree(i);
        d.resize(static_cast<std::size_t>(wa + wb), 0);
        t.add(ta.name(i), d);
    }
    for (std::size_t i = 0; i < tb.size(); ++i) {
        MultiDegree d(static_cast<std::size_t>(wa), 0);
        d.insert(d.end(), tb.degree(i).begin(), tb.degree(i).end());
        std::string name = tb.name(i);
        while (t.index_of(name) >= 0) name += "2";
        t.add(name, d);
    }
    const int na = static_cast<int>(ta.size());
    auto shift = [&](const NcPolynomial& p, int off) {
        NcPolynomial out(a->field());
        for (const auto& [wd, c] : p.terms()) {
            std::vector<int> l = wd.letters();
            for (int& x : l) x += off;
            out.add_term(Word(t, l), c);
        }
        return out;
    };
    std::vector<NcPolynomial> rels;
    for (const auto& r : a->relations()) rels.push_back(shift(r, 0));
    for (const auto& r : b->relations()) rels.push_back(shift(r, na));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < static_cast<int>(tb.size()); ++j) {
            auto x = NcPolynomial::generator(t, i, a->field());
            auto y = NcPolynomial::generator(t, na + j, a->field());
            rels.push_back(x * y - y * x);
        }
    std::string name = a->name().empty() || b->name().empty() ? std::string() : a->name() + " (x) " + b->name();
    return make_algebra(std::move(t), a->field(), std::move(rels), std::max(a->degree_bound(), b->degree_bound()), {},
                        name);
}

inline Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

/// sigma (x) tau on A (x) B.
inline GradedAutomorphism tensor_automorphism(const AlgebraPtr& ab, const GradedAutomorphism& s, const GradedAutomorphism& t) {
    return validated_automorphism(ab, block_diagonal(s.matrix(), t.matrix()));
}

// ---------------------------------------------------------------------------
// Normal elements and quotients

struct NormalityResult {
    std::optional<GradedAutomorphism> tau;  // z a = tau(a) z
    std::string report;
    std::optional<Scalar> eigenvalue;  // mu(z) = c z, when a mu was supplied and z is an eigenvector

    explicit operator bool() const { return tau.has_value(); }
};

/// If z is an eigenvector of s, the eigenvalue.
inline std::optional<Scalar> eigenvalue_of(const GradedAutomorphism& s, const NcPolynomial& z) {
    const AlgebraPtr& a = s.algebra();
    NcPolynomial nz = a->normal_form(z);
    if (nz.is_zero()) return std::nullopt;
    NcPolynomial img = s.apply(nz);
    Scalar c = img.coefficient(nz.leading_word()) / nz.leading_coefficient();
    NcPolynomial diff = img - c * nz;
    if (!diff.is_zero()) return std::nullopt;
    return c;
}

/// Solves z x_i = tau(x_i) z for tau(x_i) in the span of the generators of the same multidegree.
inline NormalityResult normality_witness(const AlgebraPtr& a, const NcPolynomial& z,
                                         const std::optional<GradedAutomorphism>& mu = std::nullopt) {
    const auto& t = a->generators();
    const FieldSpec& f = a->field();
    NcPolynomial nz = a->normal_form(z);
    if (nz.is_zero() || nz.max_degree() < 1) throw Error(Errc::ZeroInput, "z must be a nonzero element of positive degree");
    if (!nz.is_homogeneous(t) || !nz.is_total_homogeneous())
        throw Error(Errc::InhomogeneousRelation, "z must be homogeneous");
    Matrix tau(f, t.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        NcPolynomial target = a->normal_form(nz * a->gen(i));
        std::vector<std::size_t> cand;
        for (std::size_t j = 0; j < t.size(); ++j)
            if (t.degree(j) == t.degree(i)) cand.push_back(j);
        std::vector<NcPolynomial> cols;
        std::map<Word, std::size_t> rows;
        for (std::size_t j : cand) {
            cols.push_back(a->normal_form(a->gen(j) * nz));
            for (const auto& [w, c] : cols.back().terms()) rows.emplace(w, 0);
        }
        for (const auto& [w, c] : target.terms()) rows.emplace(w, 0);
        std::size_t k = 0;
        for (auto& [w, idx] : rows) idx = k++;
        Matrix m(f, rows.size(), cand.size());
        Vector rhs(rows.size(), Scalar::zero(f));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [w, s] : cols[c].terms()) m(rows[w], c) = s;
        for (const auto& [w, s] : target.terms()) rhs[rows[w]] = s;
        auto sol = m.solve(rhs);
        if (!sol) return {std::nullopt, "z * " + t.name(i) + " is not of the form f * z with f in the generator span", {}};
        for (std::size_t c = 0; c < cand.size(); ++c) tau(cand[c], i) = (*sol)[c];
    }
    if (tau.determinant().is_zero()) return {std::nullopt, "the induced map on generators is singular", {}};
    auto chk = check_automorphism(a, tau);
    if (!chk) return {std::nullopt, "induced map is not an automorphism: " + chk.report, {}};
    if (!(chk.automorphism->apply(nz) == nz)) return {std::nullopt, "tau(z) != z", {}};
    NormalityResult res{chk.automorphism, "normal", std::nullopt};
    if (mu) res.eigenvalue = eigenvalue_of(*mu, nz);
    return res;
}

/// A / (z) with the induced map on generators. A degree-1 z eliminates its leading generator.
struct Quotient {
    AlgebraPtr algebra;
    AlgebraPtr parent;
    NcPolynomial z;
    Matrix projection;               // new generators x old generators
    std::vector<std::size_t> kept;   // old index of each new generator
};

/// Drops every relation that already lies in the ideal of the earlier (lower-degree) ones.
inline std::vector<NcPolynomial> minimize_relations(const GeneratorTable& t, const FieldSpec& f,
                                                    std::vector<NcPolynomial> rels) {
    std::stable_sort(rels.begin(), rels.end(),
                     [](const NcPolynomial& x, const NcPolynomial& y) { return x.max_degree() < y.max_degree(); });
    std::vector<NcPolynomial> kept;
    for (auto& r : rels) {
        if (r.is_zero()) continue;
        if (!kept.empty()) {
            RewriteSystem rs = buchberger_truncated(t, f, kept, r.max_degree());
            if (rs.normal_form(r).is_zero()) continue;
        }
        kept.push_back(std::move(r));
    }
    return kept;
}

inline Quotient quotient_by_normal(const AlgebraPtr& a, const NcPolynomial& z) {
    const auto& t = a->generators();
    const FieldSpec& f = a->field();
    NcPolynomial nz = a->normal_form(z);
    if (nz.is_zero()) throw Error(Errc::ZeroInput, "z is zero in A");
    if (nz.max_degree() == 1) {
        std::size_t lead = static_cast<std::size_t>(nz.leading_word()[0]);
        Scalar cl = nz.leading_coefficient();
        GeneratorTable nt(t.rank());
        std::vector<std::size_t> kept;
        std::vector<int> new_index(t.size(), -1);
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == lead) continue;
            new_index[i] = static_cast<int>(kept.size());
            kept.push_back(i);
            nt.add(t.name(i), t.degree(i));
        }
        Matrix proj(f, kept.size(), t.size());
        for (std::size_t k = 0; k < kept.size(); ++k) proj(k, kept[k]) = Scalar::one(f);
        for (const auto& [w, c] : nz.terms()) {
            std::size_t j = static_cast<std::size_t>(w[0]);
            if (j != lead) proj(static_cast<std::size_t>(new_index[j]), lead) = -(c / cl);
        }
        std::vector<NcPolynomial> images;
        for (std::size_t i = 0; i < t.size(); ++i) images.push_back(linear_image(nt, proj, i));
        auto image = [&](const Word& w, std::size_t pos) -> const NcPolynomial& {
            return images[static_cast<std::size_t>(w[pos])];
        };
        std::vector<NcPolynomial> rels;
        for (const auto& r : a->relations()) rels.push_back(substitute(r, image, f));
        rels = minimize_relations(nt, f, std::move(rels));
        auto q = make_algebra(nt, f, std::move(rels), a->degree_bound(), {},
                              a->name().empty() ? std::string() : a->name() + "/(" + nz.to_string(t) + ")");
        return {q, a, nz, std::move(proj), std::move(kept)};
    }
    std::vector<NcPolynomial> rels = a->relations();
    rels.push_back(nz);
    rels = minimize_relations(t, f, std::move(rels));
    auto q = make_algebra(t, f, std::move(rels), a->degree_bound(), {},
                          a->name().empty() ? std::string() : a->name() + "/(" + nz.to_string(t) + ")");
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < t.size(); ++i) kept.push_back(i);
    return {q, a, nz, Matrix::identity(f, t.size()), std::move(kept)};
}

/// The map induced on A/(z) by an automorphism that preserves the line through z.
inline Matrix restricted_matrix(const Quotient& q, const Matrix& m) {
    Matrix lift(m.field(), q.projection.cols(), q.kept.size());
    for (std::size_t k = 0; k < q.kept.size(); ++k) lift(q.kept[k], k) = Scalar::one(m.field());
    return q.projection * m * lift;
}

inline GradedAutomorphism restrict_to_quotient(const Quotient& q, const GradedAutomorphism& s) {
    if (!eigenvalue_of(s, q.z)) throw Error(Errc::NotEigenvector, "automorphism does not preserve the line through z");
    return validated_automorphism(q.algebra, restricted_matrix(q, s.matrix()));
}

/// (mu_A o tau) restricted to A/(z); requires z to be a mu_A-eigenvector.
inline GradedAutomorphism nakayama_of_quotient(const Quotient& q, const GradedAutomorphism& mu, const GradedAutomorphism& tau) {
    if (!eigenvalue_of(mu, q.z)) throw Error(Errc::NotEigenvector, "z is not an eigenvector of the Nakayama automorphism");
    return validated_automorphism(q.algebra, restricted_matrix(q, compose(mu, tau).matrix()));
}

// ---------------------------------------------------------------------------
// Smash products A # kG

/// Element of A # kG: one normal-form component of A per group element.
struct SmashElement {
    std::vector<NcPolynomial> parts;

    friend bool operator==(const SmashElement& a, const SmashElement& b) { return a.parts == b.parts; }
    SmashElement& operator+=(const SmashElement& o) {
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i] += o.parts[i];
        return *this;
    }
    SmashElement& operator-=(const SmashElement& o) {
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i] -= o.parts[i];
        return *this;
    }
    bool is_zero() const {
        for (const auto& p : parts)
            if (!p.is_zero()) return false;
        return true;
    }
};

struct SmashOptions {
    std::size_t group_cap = 64;
    std::size_t samples_per_degree = 200;
    std::uint64_t seed = kDefaultSeed;
};

class SmashAlgebra {
public:
    const AlgebraPtr& base() const { return a_; }
    const std::vector<GradedAutomorphism>& group() const { return group_; }
    std::size_t order() const { return group_.size(); }
    int mult(std::size_t g, std::size_t h) const { return table_[g][h]; }
    int inverse(std::size_t g) const { return inverse_[g]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    SmashElement zero() const { return {std::vector<NcPolynomial>(group_.size(), NcPolynomial(a_->field()))}; }

    SmashElement element(const NcPolynomial& p, std::size_t g) const {
        SmashElement e = zero();
        e.parts[g] = a_->normal_form(p);
        return e;
    }
    SmashElement group_element(std::size_t g) const {
        return element(NcPolynomial::constant(Scalar::one(a_->field())), g);
    }

    /// (a # g)(b # h) = a g(b) # gh
    SmashElement multiply(const SmashElement& x, const SmashElement& y) const {
        SmashElement out = zero();
        for (std::size_t g = 0; g < group_.size(); ++g) {
            if (x.parts[g].is_zero()) continue;
            for (std::size_t h = 0; h < group_.size(); ++h) {
                if (y.parts[h].is_zero()) continue;
                NcPolynomial gb = group_[g].apply(y.parts[h]);
                out.parts[static_cast<std::size_t>(table_[g][h])] += a_->normal_form(x.parts[g] * gb);
            }
        }
        return out;
    }

    /// Basis {w # g : w normal of total degree n}.
    std::vector<SmashElement> basis(int degree) const {
        std::vector<SmashElement> out;
        for (const auto& w : a_->rewrite().monomial_basis(degree))
            for (std::size_t g = 0; g < group_.size(); ++g) out.push_back(element(NcPolynomial::monomial(w, a_->field()), g));
        return out;
    }

    std::string element_to_string(const SmashElement& e) const {
        std::string s;
        for (std::size_t g = 0; g < group_.size(); ++g) {
            if (e.parts[g].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + e.parts[g].to_string(a_->generators()) + ") # g" + std::to_string(g);
        }
        return s.empty() ? "0" : s;
    }

    /// Checks (ab)c = a(bc) on seeded random basis triples in every degree up to the bound.
    std::optional<std::string> check_associativity(const SmashOptions& opt) const {
        std::mt19937_64 rng(opt.seed);
        const int D = a_->degree_bound();
        std::vector<std::vector<SmashElement>> bases;
        for (int n = 0; n <= D; ++n) bases.push_back(basis(n));
        for (int n = 0; n <= D; ++n)
            for (std::size_t s = 0; s < opt.samples_per_degree; ++s) {
                std::uniform_int_distribution<int> di(0, n);
                int i = di(rng);
                std::uniform_int_distribution<int> dj(0, n - i);
                int j = dj(rng);
                int k = n - i - j;
                const auto& bi = bases[static_cast<std::size_t>(i)];
                const auto& bj = bases[static_cast<std::size_t>(j)];
                const auto& bk = bases[static_cast<std::size_t>(k)];
                if (bi.empty() || bj.empty() || bk.empty()) continue;
                const auto& x = bi[std::uniform_int_distribution<std::size_t>(0, bi.size() - 1)(rng)];
                const auto& y = bj[std::uniform_int_distribution<std::size_t>(0, bj.size() - 1)(rng)];
                const auto& z = bk[std::uniform_int_distribution<std::size_t>(0, bk.size() - 1)(rng)];
                if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                    return "associativity fails on " + element_to_string(x) + ", " + element_to_string(y) + ", " +
                           element_to_string(z);
            }
        return std::nullopt;
    }

private:
    friend SmashAlgebra smash_product(const AlgebraPtr&, const std::vector<GradedAutomorphism>&, const SmashOptions&);

    AlgebraPtr a_;
    std::vector<GradedAutomorphism> group_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

/// Closes the generators to a finite group (identity first) and builds A # kG.
inline SmashAlgebra smash_product(const AlgebraPtr& a, const std::vector<GradedAutomorphism>& gens,
                                  const SmashOptions& opt = {}) {
    SmashAlgebra b;
    b.a_ = a;
    b.group_.push_back(identity_automorphism(a));
    for (const auto& g : gens)
        if (!same_algebra(g.algebra(), a)) throw Error(Errc::AlgebraMismatch, "group element is not an automorphism of A");
    auto find = [&](const Matrix& m) -> int {
        for (std::size_t i = 0; i < b.group_.size(); ++i)
            if (b.group_[i].matrix() == m) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < b.group_.size(); ++i)
        for (const auto& g : gens) {
            Matrix m = g.matrix() * b.group_[i].matrix();
            if (find(m) >= 0) continue;
            if (b.group_.size() >= opt.group_cap)
                throw Error(Errc::GroupClosureExceeded, "group closure exceeds " + std::to_string(opt.group_cap) + " elements");
            b.group_.push_back(GradedAutomorphism::trusted(a, std::move(m)));
        }
    const std::size_t n = b.group_.size();
    b.table_.assign(n, std::vector<int>(n, -1));
    b.inverse_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int k = find(b.group_[i].matrix() * b.group_[j].matrix());
            if (k < 0) throw Error(Errc::GroupClosureExceeded, "group is not closed under composition");
            b.table_[i][j] = k;
            if (k == 0) b.inverse_[i] = static_cast<int>(j);
        }
    if (auto bad = b.check_associativity(opt)) throw Error(Errc::NotMultiplicative, *bad);
    return b;
}

/// rho(a # g) = mu(a) # chi(g) phi(g) with phi = identity.
struct SmashAutomorphismCandidate {
    GradedAutomorphism base;
    Vector chi;

    SmashElement apply(const SmashAlgebra& b, const SmashElement& e) const {
        SmashElement out = b.zero();
        for (std::size_t g = 0; g < e.parts.size(); ++g) {
            if (e.parts[g].is_zero()) continue;
            out.parts[g] = chi[g] * base.apply(e.parts[g]);
        }
        return out;
    }
};

struct CandidateResult {
    std::optional<SmashAutomorphismCandidate> candidate;
    std::string report;

    explicit operator bool() const { return candidate.has_value(); }
};

/// Builds rho = mu_A # Xi_hdet and checks rho(xy) = rho(x) rho(y) on all generator pairs
/// {x_i # 1} u {1 # g} and on seeded basis pairs up to the degree bound.
inline CandidateResult hi1_candidate(const SmashAlgebra& b, const GradedAutomorphism& mu, const Vector& hdet_values,
                                     const SmashOptions& opt = {}) {
    const std::size_t n = b.order();
    if (hdet_values.size() != n) throw Error(Errc::DegreeMismatch, "one hdet value per group element required");
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (hdet_values[static_cast<std::size_t>(b.mult(g, h))] != hdet_values[g] * hdet_values[h])
                throw Error(Errc::NotMultiplicative, "hdet values are not a character of G");
    SmashAutomorphismCandidate rho{mu, hdet_values};
    const AlgebraPtr& a = b.base();
    std::vector<SmashElement> gens;
    for (std::size_t i = 0; i < a->num_generators(); ++i) gens.push_back(b.element(a->gen(i), 0));
    for (std::size_t g = 0; g < n; ++g) gens.push_back(b.group_element(g));
    auto check_pair = [&](const SmashElement& x, const SmashElement& y) -> std::optional<std::string> {
        if (!(rho.apply(b, b.multiply(x, y)) == b.multiply(rho.apply(b, x), rho.apply(b, y))))
            return "rho(xy) != rho(x) rho(y) for x = " + b.element_to_string(x) + ", y = " + b.element_to_string(y);
        return std::nullopt;
    };
    for (const auto& x : gens)
        for (const auto& y : gens)
            if (auto bad = check_pair(x, y)) return {std::nullopt, *bad};
    std::mt19937_64 rng(opt.seed);
    const int D = a->degree_bound();
    for (std::size_t s = 0; s < opt.samples_per_degree; ++s) {
        int i = std::uniform_int_distribution<int>(0, D)(rng);
        int j = std::uniform_int_distribution<int>(0, D - i)(rng);
        auto bi = b.basis(i);
        auto bj = b.basis(j);
        if (bi.empty() || bj.empty()) continue;
        const auto& x = bi[std::uniform_int_distribution<std::size_t>(0, bi.size() - 1)(rng)];
        const auto& y = bj[std::uniform_int_distribution<std::size_t>(0, bj.size() - 1)(rng)];
        if (auto bad = check_pair(x, y)) return {std::nullopt, *bad};
    }
    return {rho, "multiplicative on all generator pairs and " + std::to_string(opt.samples_per_degree) + " sampled pairs"};
}

struct WitnessResult {
    std::optional<Vector> unit;  // coefficients of u = sum_g u_g (1 # g)
    std::string report;

    explicit operator bool() const { return unit.has_value(); }
};

inline SmashElement degree_zero_element(const SmashAlgebra& b, const Vector& u) {
    SmashElement e = b.zero();
    for (std::size_t g = 0; g < u.size(); ++g) e.parts[g] = NcPolynomial::constant(u[g]);
    return e;
}

/// Left multiplication by u on kG is invertible.
inline bool is_unit_in_group_algebra(const SmashAlgebra& b, const Vector& u) {
    const std::size_t n = b.order();
    Matrix m(u.front().field(), n, n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) m(static_cast<std::size_t>(b.mult(g, h)), h) += u[g];
    return !m.determinant().is_zero();
}

/// Searches B_0 = kG for a unit u with rho(b) u = u b for all algebra generators b.
inline WitnessResult inner_witness(const SmashAlgebra& b, const SmashAutomorphismCandidate& rho,
                                   std::uint64_t seed = kDefaultSeed) {
    const AlgebraPtr& a = b.base();
    const FieldSpec& f = a->field();
    const std::size_t n = b.order();
    std::vector<SmashElement> gens;
    for (std::size_t i = 0; i < a->num_generators(); ++i) gens.push_back(b.element(a->gen(i), 0));
    for (std::size_t g = 0; g < n; ++g) gens.push_back(b.group_element(g));

    // columns: unknown u_g; rows: coordinates (generator, group element, word)
    std::map<std::tuple<std::size_t, std::size_t, Word>, std::size_t> rows;
    std::vector<std::vector<std::tuple<std::size_t, std::size_t, Scalar>>> entries;  // per column
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::tuple<std::size_t, std::size_t, Scalar>> e;
        SmashElement ug = b.group_element(col);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            SmashElement v = b.multiply(rho.apply(b, gens[k]), ug);
            v -= b.multiply(ug, gens[k]);
            for (std::size_t h = 0; h < n; ++h)
                for (const auto& [w, c] : v.parts[h].terms()) {
                    auto key = std::make_tuple(k, h, w);
                    auto it = rows.emplace(key, rows.size()).first;
                    e.emplace_back(it->second, col, c);
                }
        }
        entries.push_back(std::move(e));
    }
    Matrix m(f, std::max<std::size_t>(rows.size(), 1), n);
    for (const auto& col : entries)
        for (const auto& [r, c, s] : col) m(r, c) += s;
    auto kernel = m.kernel();
    if (kernel.empty()) return {std::nullopt, "no degree-0 witness: the intertwining system has only the zero solution"};
    for (const auto& v : kernel)
        if (is_unit_in_group_algebra(b, v)) return {v, "degree-0 witness found"};
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Vector v(n, Scalar::zero(f));
        for (const auto& k : kernel) {
            Scalar c = random_nonzero_scalar(f, rng);
            for (std::size_t i = 0; i < n; ++i) v[i] += c * k[i];
        }
        if (is_unit_in_group_algebra(b, v)) return {v, "degree-0 witness found (random combination)"};
    }
    return {std::nullopt, "no degree-0 witness: solutions exist but none is a unit of kG"};
}

/// rho(x) u = u x for every basis element x of degree <= max_degree.
inline std::optional<std::string> verify_witness(const SmashAlgebra& b, const SmashAutomorphismCandidate& rho,
                                                 const Vector& u, int max_degree) {
    SmashElement ue = degree_zero_element(b, u);
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& x : b.basis(d)) {
            if (!(b.multiply(rho.apply(b, x), ue) == b.multiply(ue, x)))
                return "rho(x) u != u x for x = " + b.element_to_string(x);
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rectification of a diagonal Nakayama automorphism

struct Rectification {
    AlgebraPtr algebra;  // A, Z-graded by total degree, over the possibly enlarged field
    GradedAutomorphism sigma;
    AlgebraPtr twist;
};

/// sigma = diag(delta_i) with delta_i^-l = a_i where mu = diag(a_i); the twist by sigma has
/// Nakayama automorphism of the form xi_c.
inline Rectification rectify_diagonal(const AlgebraPtr& a, const GradedAutomorphism& mu, long long l) {
    if (l == 0) throw Error(Errc::ZeroASIndex, "AS index must be nonzero");
    if (!a->field().characteristic_zero()) throw Error(Errc::CharacteristicZeroRequired, "rectification needs characteristic 0");
    const Matrix& m = mu.matrix();
    if (!m.is_diagonal()) throw Error(Errc::NotRepresentable, "Nakayama automorphism is not diagonal");
    FieldSpec f = a->field();
    Vector delta;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar ai = embed(m(i, i), f);
        auto sol = root_of_unity_solve(ai.inverse(), l);
        if (!sol) throw Error(Errc::NotRepresentable, "eigenvalue " + ai.to_string() + " is not a root of unity");
        if (!(sol->field == f)) {
            f = sol->field;
            for (auto& d : delta) d = embed(d, f);
        }
        delta.push_back(sol->root);
    }
    for (auto& d : delta) d = embed(d, f);
    AlgebraPtr z = extend_scalars(regrade_total(a), f);
    GradedAutomorphism sigma = validated_automorphism(z, Matrix::diagonal(f, delta));
    AlgebraPtr tw = graded_twist(z, {sigma});
    return {z, sigma, tw};
}

}  // namespace skewcy

#endif
