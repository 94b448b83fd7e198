#ifndef SKEWCY_FREE_ALGEBRA_HPP
#define SKEWCY_FREE_ALGEBRA_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewcy/matrix.hpp"
#include "skewcy/scalar.hpp"

namespace skewcy {

using MultiDegree = std::vector<int>;

inline int total_degree(const MultiDegree& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

inline MultiDegree& operator+=(MultiDegree& a, const MultiDegree& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline std::string degree_to_string(const MultiDegree& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

/// Ordered generator names with multidegrees in Z^w; every generator has positive total degree.
class GeneratorTable {
public:
    GeneratorTable() = default;
    explicit GeneratorTable(int rank) : rank_(rank) {}

    void add(std::string name, MultiDegree degree) {
        if (static_cast<int>(degree.size()) != rank_)
            throw Error(Errc::DegreeMismatch, "generator " + name + " needs a degree of length " + std::to_string(rank_));
        if (total_degree(degree) < 1)
            throw Error(Errc::ZeroDegreeGenerator, "generator " + name + " has total degree " +
                                                       std::to_string(total_degree(degree)));
        if (index_of(name) >= 0) throw Error(Errc::SyntaxError, "duplicate generator " + name);
        names_.push_back(std::move(name));
        degrees_.push_back(std::move(degree));
    }

    int rank() const { return rank_; }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const MultiDegree& degree(std::size_t i) const { return degrees_[i]; }
    int total(std::size_t i) const { return total_degree(degrees_[i]); }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        return -1;
    }

    bool all_degree_one() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (total(i) != 1) return false;
        return true;
    }

    friend bool operator==(const GeneratorTable&, const GeneratorTable&) = default;

private:
    int rank_ = 1;
    std::vector<std::string> names_;
    std::vector<MultiDegree> degrees_;
};

/// A monomial of the free algebra. Carries its total degree so that the natural
/// ordering (total degree, then left-lexicographic on generator index) is deglex.
class Word {
public:
    Word() = default;
    Word(const GeneratorTable& t, std::vector<int> letters) : letters_(std::move(letters)) {
        for (int l : letters_) degree_ += t.total(static_cast<std::size_t>(l));
    }

    static Word letter(const GeneratorTable& t, int i) { return Word(t, {i}); }

    int degree() const { return degree_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }
    int operator[](std::size_t i) const { return letters_[i]; }

    MultiDegree multidegree(const GeneratorTable& t) const {
        MultiDegree d(static_cast<std::size_t>(t.rank()), 0);
        for (int l : letters_) d += t.degree(static_cast<std::size_t>(l));
        return d;
    }

    Word subword(const GeneratorTable& t, std::size_t pos, std::size_t len) const {
        return Word(t, std::vector<int>(letters_.begin() + static_cast<long>(pos),
                                        letters_.begin() + static_cast<long>(pos + len)));
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word w;
        w.degree_ = a.degree_ + b.degree_;
        w.letters_ = a.letters_;
        w.letters_.insert(w.letters_.end(), b.letters_.begin(), b.letters_.end());
        return w;
    }

    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.letters_ <=> b.letters_;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

    /// `x^2*y` style text; the unit word prints as `1`.
    std::string to_string(const GeneratorTable& t) const {
        if (letters_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters_.size();) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            if (!s.empty()) s += "*";
            s += t.name(static_cast<std::size_t>(letters_[i]));
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

private:
    int degree_ = 0;
    std::vector<int> letters_;
};

/// Deglex comparison: total degree first, then left-lexicographic by generator index.
inline std::strong_ordering deglex_compare(const Word& u, const Word& v) { return u <=> v; }

/// Element of the free algebra with exact coefficients; zero coefficients are never stored.
class NcPolynomial {
public:
    using Terms = std::map<Word, Scalar>;

    NcPolynomial() = default;
    explicit NcPolynomial(FieldSpec f) : field_(std::move(f)) {}
    NcPolynomial(const Word& w, const Scalar& c) : field_(c.field()) {
        if (!c.is_zero()) terms_.emplace(w, c);
    }

    static NcPolynomial constant(const Scalar& c) { return NcPolynomial(Word(), c); }
    static NcPolynomial monomial(const Word& w, const FieldSpec& f) { return NcPolynomial(w, Scalar::one(f)); }
    static NcPolynomial generator(const GeneratorTable& t, int i, const FieldSpec& f) {
        return monomial(Word::letter(t, i), f);
    }

    const FieldSpec& field() const { return field_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Word& leading_word() const { return terms_.rbegin()->first; }
    const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }

    Scalar coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        if (terms_.empty()) field_ = c.field();
        check(c.field());
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NcPolynomial& operator+=(const NcPolynomial& o) {
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) field_ = o.field_;
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPolynomial& operator-=(const NcPolynomial& o) {
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) field_ = o.field_;
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    NcPolynomial& operator*=(const Scalar& s) {
        if (terms_.empty()) return *this;
        check(s.field());
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= s;
        return *this;
    }

    NcPolynomial operator-() const {
        NcPolynomial r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(const Scalar& s, NcPolynomial a) { return a *= s; }

    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
        if (a.terms_.empty()) return a;
        if (b.terms_.empty()) return b;
        a.check(b.field_);
        NcPolynomial r(a.field_);
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
        return r;
    }

    friend bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
        if (a.terms_.empty() || b.terms_.empty()) return a.terms_.empty() && b.terms_.empty();
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

    /// All words share one multidegree (the zero polynomial counts as homogeneous).
    bool is_homogeneous(const GeneratorTable& t) const {
        if (terms_.empty()) return true;
        MultiDegree d = terms_.begin()->first.multidegree(t);
        for (const auto& [w, c] : terms_)
            if (w.multidegree(t) != d) return false;
        return true;
    }

    bool is_total_homogeneous() const {
        if (terms_.empty()) return true;
        return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
    }

    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    NcPolynomial& make_monic() {
        if (!terms_.empty()) *this *= leading_coefficient().inverse();
        return *this;
    }

    /// Deglex-descending text that the expression parser reads back.
    std::string to_string(const GeneratorTable& t) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Scalar& c = it->second;
            std::string word = it->first.to_string(t);
            bool neg = false;
            std::string coef;
            if (c.is_compound()) {
                coef = "(" + c.to_string() + ")";
            } else {
                coef = c.to_string();
                if (!coef.empty() && coef[0] == '-') {
                    neg = true;
                    coef = coef.substr(1);
                }
            }
            std::string term;
            if (it->first.empty())
                term = coef;
            else if (coef == "1")
                term = word;
            else
                term = coef + "*" + word;
            if (first)
                s += (neg ? "-" : "") + term;
            else
                s += (neg ? " - " : " + ") + term;
            first = false;
        }
        return s;
    }

private:
    void check(const FieldSpec& f) const {
        if (!(field_ == f)) throw Error(Errc::FieldMismatch, field_.to_string() + " vs " + f.to_string());
    }

    FieldSpec field_;
    Terms terms_;
};

/// Image of every letter of a word under a generator-level map: maps (word, position) to the
/// polynomial that replaces the letter at that position.
using LetterImage = std::function<const NcPolynomial&(const Word&, std::size_t)>;

/// Replaces every letter by its image and expands the products.
inline NcPolynomial substitute(const NcPolynomial& f, const LetterImage& image, const FieldSpec& target) {
    NcPolynomial out(target);
    for (const auto& [w, c] : f.terms()) {
        NcPolynomial prod = NcPolynomial::constant(embed(c, target));
        for (std::size_t i = 0; i < w.length() && !prod.is_zero(); ++i) prod = prod * image(w, i);
        out += prod;
    }
    return out;
}

/// Image of generator j under a column-convention matrix, as a polynomial.
inline NcPolynomial linear_image(const GeneratorTable& t, const Matrix& m, std::size_t j) {
    NcPolynomial p(m.field());
    for (std::size_t i = 0; i < m.rows(); ++i) p.add_term(Word::letter(t, static_cast<int>(i)), m(i, j));
    return p;
}

inline void check_degree_preserving(const GeneratorTable& t, const Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero() && t.degree(i) != t.degree(j))
                throw Error(Errc::DegreeNotPreserved,
                            "image of " + t.name(j) + " has a component along " + t.name(i));
}

/// Picks the linear action used at letter position `pos` of word `w`.
using SlotAction = std::function<const Matrix&(const Word&, std::size_t)>;

/// Applies a per-slot linear action on generators to f (each letter replaced by the image under
/// the matrix chosen for its slot).
inline NcPolynomial apply_linear(const GeneratorTable& t, const SlotAction& slot, const NcPolynomial& f) {
    std::map<const Matrix*, std::vector<NcPolynomial>> images;
    auto image = [&](const Word& w, std::size_t pos) -> const NcPolynomial& {
        const Matrix& m = slot(w, pos);
        auto it = images.find(&m);
        if (it == images.end()) {
            check_degree_preserving(t, m);
            std::vector<NcPolynomial> cols;
            for (std::size_t j = 0; j < t.size(); ++j) cols.push_back(linear_image(t, m, j));
            it = images.emplace(&m, std::move(cols)).first;
        }
        return it->second[static_cast<std::size_t>(w[pos])];
    };
    return substitute(f, image, f.field());
}

/// The same matrix in every slot: the algebra endomorphism induced by m.
inline NcPolynomial apply_linear(const GeneratorTable& t, const Matrix& m, const NcPolynomial& f) {
    return apply_linear(t, [&m](const Word&, std::size_t) -> const Matrix& { return m; }, f);
}

/// Fixed slot list for words of one length (slot i acts on letter i).
inline NcPolynomial apply_linear(const GeneratorTable& t, const std::vector<Matrix>& slots, const NcPolynomial& f) {
    return apply_linear(
        t,
        [&slots](const Word& w, std::size_t pos) -> const Matrix& {
            if (w.length() != slots.size())
                throw Error(Errc::DegreeMismatch, "slot list length does not match word length");
            return slots[pos];
        },
        f);
}

}  // namespace skewcy

#endif
