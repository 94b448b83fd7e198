#ifndef SKEWCY_GRADED_ALGEBRA_HPP
#define SKEWCY_GRADED_ALGEBRA_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewcy/rewriting.hpp"

namespace skewcy {

/// Closed-form homological determinant rules that enter from the literature rather than from
/// the Koszul route.
enum class HdetRule { None, Determinant, DeterminantSquared };

inline const char* hdet_rule_name(HdetRule r) {
    switch (r) {
    case HdetRule::None: return "none";
    case HdetRule::Determinant: return "det";
    case HdetRule::DeterminantSquared: return "det_squared";
    }
    return "none";
}

/// Registry facts that cannot be recomputed by the Koszul route. Every entry is reported with
/// its provenance wherever it is used.
struct KnownData {
    std::optional<Matrix> nakayama;
    std::optional<MultiDegree> as_index;
    HdetRule hdet_rule = HdetRule::None;
    /// Twisting families whose twist is known to be Calabi-Yau (Nakayama = identity).
    std::vector<std::vector<Matrix>> cy_twists;
    std::string provenance;

    bool empty() const { return !nakayama && !as_index && hdet_rule == HdetRule::None && cy_twists.empty(); }
};

class GradedAlgebra;
using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

/// A connected graded algebra F/I given by generators and homogeneous relations, together with
/// its truncated rewriting system.
class GradedAlgebra {
public:
    GradedAlgebra(GeneratorTable t, FieldSpec f, std::vector<NcPolynomial> relations, RewriteSystem rs,
                  KnownData known, std::string name)
        : table_(std::move(t)), field_(std::move(f)), relations_(std::move(relations)), rs_(std::move(rs)),
          known_(std::move(known)), name_(std::move(name)) {}

    const GeneratorTable& generators() const { return table_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<NcPolynomial>& relations() const { return relations_; }
    const RewriteSystem& rewrite() const { return rs_; }
    const KnownData& known() const { return known_; }
    const std::string& name() const { return name_; }
    int degree_bound() const { return rs_.complete_to(); }
    std::size_t num_generators() const { return table_.size(); }
    int grading_rank() const { return table_.rank(); }

    NcPolynomial gen(std::size_t i) const { return NcPolynomial::generator(table_, static_cast<int>(i), field_); }
    NcPolynomial normal_form(const NcPolynomial& f) const { return rs_.normal_form(f); }
    Scalar scalar(long long v) const { return Scalar::from_integer(field_, v); }

    /// Generated in total degree 1 with all relations of total degree 2.
    bool is_quadratic() const {
        if (!table_.all_degree_one()) return false;
        for (const auto& r : relations_)
            if (r.max_degree() != 2) return false;
        return true;
    }

private:
    GeneratorTable table_;
    FieldSpec field_;
    std::vector<NcPolynomial> relations_;
    RewriteSystem rs_;
    KnownData known_;
    std::string name_;
};

inline AlgebraPtr make_algebra(GeneratorTable table, FieldSpec field, std::vector<NcPolynomial> relations, int D,
                               KnownData known = {}, std::string name = {}) {
    std::vector<NcPolynomial> kept;
    int max_deg = 0;
    for (auto& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_homogeneous(table)) throw Error(Errc::InhomogeneousRelation, r.to_string(table));
        max_deg = std::max(max_deg, r.max_degree());
        kept.push_back(std::move(r));
    }
    if (D < max_deg)
        throw Error(Errc::DegreeBoundExceeded, "degree bound " + std::to_string(D) + " is below relation degree " +
                                                   std::to_string(max_deg));
    RewriteSystem rs = buchberger_truncated(table, field, kept, D);
    return std::make_shared<const GradedAlgebra>(std::move(table), std::move(field), std::move(kept), std::move(rs),
                                                 std::move(known), std::move(name));
}

inline AlgebraPtr with_known(const AlgebraPtr& a, KnownData known) {
    return std::make_shared<const GradedAlgebra>(a->generators(), a->field(), a->relations(), a->rewrite(),
                                                 std::move(known), a->name());
}

inline AlgebraPtr with_name(const AlgebraPtr& a, std::string name) {
    return std::make_shared<const GradedAlgebra>(a->generators(), a->field(), a->relations(), a->rewrite(), a->known(),
                                                 std::move(name));
}

inline NcPolynomial embed(const NcPolynomial& f, const FieldSpec& target) {
    NcPolynomial out(target);
    for (const auto& [w, c] : f.terms()) out.add_term(w, embed(c, target));
    return out;
}

inline Matrix embed(const Matrix& m, const FieldSpec& target) {
    Matrix out(target, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = embed(m(r, c), target);
    return out;
}

/// The same presentation over a larger characteristic-0 field.
inline AlgebraPtr extend_scalars(const AlgebraPtr& a, const FieldSpec& target) {
    if (a->field() == target) return a;
    std::vector<NcPolynomial> rels;
    for (const auto& r : a->relations()) rels.push_back(embed(r, target));
    KnownData known = a->known();
    if (known.nakayama) known.nakayama = embed(*known.nakayama, target);
    for (auto& fam : known.cy_twists)
        for (auto& m : fam) m = embed(m, target);
    return make_algebra(a->generators(), target, std::move(rels), a->degree_bound(), std::move(known), a->name());
}

/// The same algebra viewed as Z-graded by total degree.
inline AlgebraPtr regrade_total(const AlgebraPtr& a) {
    if (a->grading_rank() == 1) return a;
    GeneratorTable t(1);
    for (std::size_t i = 0; i < a->num_generators(); ++i) t.add(a->generators().name(i), {a->generators().total(i)});
    KnownData known = a->known();
    if (known.as_index) known.as_index = MultiDegree{total_degree(*known.as_index)};
    known.cy_twists.clear();
    std::vector<NcPolynomial> rels;
    for (const auto& r : a->relations()) {
        NcPolynomial p(a->field());
        for (const auto& [w, c] : r.terms()) p.add_term(Word(t, w.letters()), c);
        rels.push_back(std::move(p));
    }
    return make_algebra(std::move(t), a->field(), std::move(rels), a->degree_bound(), std::move(known), a->name());
}

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    return a->generators() == b->generators() && a->field() == b->field() && a->relations() == b->relations();
}

/// A validated graded automorphism, stored as its linear action on the generator space
/// (column j = image of generator j).
class GradedAutomorphism {
public:
    const Matrix& matrix() const { return m_; }
    const AlgebraPtr& algebra() const { return a_; }

    NcPolynomial apply(const NcPolynomial& f) const {
        return a_->normal_form(apply_linear(a_->generators(), m_, f));
    }

    NcPolynomial image(std::size_t gen) const { return linear_image(a_->generators(), m_, gen); }

    /// `x -> ..., y -> ...`
    std::string to_string() const {
        std::string s;
        for (std::size_t j = 0; j < m_.cols(); ++j) {
            if (j) s += ", ";
            s += a_->generators().name(j) + " -> " + image(j).to_string(a_->generators());
        }
        return s;
    }

    friend bool operator==(const GradedAutomorphism& a, const GradedAutomorphism& b) { return a.m_ == b.m_; }

    /// For code that has already validated m against a (e.g. products of validated maps).
    static GradedAutomorphism trusted(AlgebraPtr a, Matrix m) { return GradedAutomorphism(std::move(a), std::move(m)); }

private:
    GradedAutomorphism(AlgebraPtr a, Matrix m) : a_(std::move(a)), m_(std::move(m)) {}

    AlgebraPtr a_;
    Matrix m_;
};

struct AutomorphismCheck {
    std::optional<GradedAutomorphism> automorphism;
    std::string report;

    explicit operator bool() const { return automorphism.has_value(); }
};

/// Accepts m iff it is invertible, preserves the multidegree components of the generators, and
/// sends every relation into the ideal. The report names the first violated relation.
inline AutomorphismCheck check_automorphism(const AlgebraPtr& a, const Matrix& m) {
    const auto& t = a->generators();
    if (m.rows() != t.size() || m.cols() != t.size())
        throw Error(Errc::DegreeMismatch, "automorphism matrix has the wrong size");
    if (!(m.field() == a->field())) throw Error(Errc::FieldMismatch, "automorphism over " + m.field().to_string());
    check_degree_preserving(t, m);
    if (m.determinant().is_zero()) throw Error(Errc::SingularMatrix, "automorphism matrix is singular");
    for (const auto& r : a->relations()) {
        NcPolynomial img = a->normal_form(apply_linear(t, m, r));
        if (!img.is_zero())
            return {std::nullopt, "relation " + r.to_string(t) + " maps to " + img.to_string(t) + " (not in the ideal)"};
    }
    return {GradedAutomorphism::trusted(a, m), "accepted"};
}

inline GradedAutomorphism validated_automorphism(const AlgebraPtr& a, const Matrix& m) {
    auto chk = check_automorphism(a, m);
    if (!chk) throw Error(Errc::AutomorphismValidationFailed, chk.report);
    return *chk.automorphism;
}

inline GradedAutomorphism identity_automorphism(const AlgebraPtr& a) {
    return GradedAutomorphism::trusted(a, Matrix::identity(a->field(), a->num_generators()));
}

/// xi_delta: scales each generator x by delta^|x| (product over the grading coordinates).
inline GradedAutomorphism xi(const AlgebraPtr& a, const Vector& delta) {
    const auto& t = a->generators();
    if (static_cast<int>(delta.size()) != t.rank())
        throw Error(Errc::DegreeMismatch, "xi needs one scalar per grading coordinate");
    for (const auto& d : delta)
        if (d.is_zero()) throw Error(Errc::ZeroScalar, "xi scalar must be nonzero");
    Vector diag;
    for (std::size_t i = 0; i < t.size(); ++i) {
        Scalar s = Scalar::one(a->field());
        for (std::size_t k = 0; k < delta.size(); ++k) s *= delta[k].pow(t.degree(i)[k]);
        diag.push_back(s);
    }
    return GradedAutomorphism::trusted(a, Matrix::diagonal(a->field(), diag));
}

inline GradedAutomorphism xi(const AlgebraPtr& a, const Scalar& c) {
    return xi(a, Vector(static_cast<std::size_t>(a->grading_rank()), c));
}

inline void check_same_algebra(const GradedAutomorphism& s, const GradedAutomorphism& t) {
    if (!same_algebra(s.algebra(), t.algebra()))
        throw Error(Errc::AlgebraMismatch, "automorphisms belong to different algebras");
}

/// s o t (apply t first).
inline GradedAutomorphism compose(const GradedAutomorphism& s, const GradedAutomorphism& t) {
    check_same_algebra(s, t);
    return GradedAutomorphism::trusted(s.algebra(), s.matrix() * t.matrix());
}

inline GradedAutomorphism invert(const GradedAutomorphism& s) {
    return GradedAutomorphism::trusted(s.algebra(), s.matrix().inverse());
}

inline GradedAutomorphism power(const GradedAutomorphism& s, long long e) {
    return GradedAutomorphism::trusted(s.algebra(), s.matrix().pow(e));
}

struct OrderResult {
    enum class Kind { Finite, InfiniteEigenvalue, CapReached };
    Kind kind = Kind::Finite;
    std::uint64_t value = 0;
    std::string detail;

    bool finite() const { return kind == Kind::Finite; }
    std::string to_string() const {
        switch (kind) {
        case Kind::Finite: return std::to_string(value);
        case Kind::InfiniteEigenvalue: return "infinite (" + detail + ")";
        case Kind::CapReached: return "unknown: no finite order up to " + std::to_string(value);
        }
        return {};
    }
};

inline constexpr std::uint64_t kDefaultOrderCap = 10000;

/// Order of s. In characteristic 0 a determinant, or a triangular diagonal entry, that is not a
/// root of unity proves infinite order; otherwise powers are iterated up to `cap`.
inline OrderResult order(const GradedAutomorphism& s, std::uint64_t cap = kDefaultOrderCap) {
    const Matrix& m = s.matrix();
    if (m.field().characteristic_zero()) {
        Scalar det = m.determinant();
        if (!root_of_unity_order(det))
            return {OrderResult::Kind::InfiniteEigenvalue, 0, "determinant " + det.to_string() + " is not a root of unity"};
        bool triangular = true;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < r; ++c)
                if (!m(r, c).is_zero()) triangular = false;
        if (triangular)
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (!root_of_unity_order(m(i, i)))
                    return {OrderResult::Kind::InfiniteEigenvalue, 0,
                            "eigenvalue " + m(i, i).to_string() + " is not a root of unity"};
    }
    Matrix p = m;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (p.is_identity()) return {OrderResult::Kind::Finite, k, {}};
        p = p * m;
    }
    return {OrderResult::Kind::CapReached, cap, {}};
}

}  // namespace skewcy

#endif
