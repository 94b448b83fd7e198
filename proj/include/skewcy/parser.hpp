#ifndef SKEWCY_PARSER_HPP
#define SKEWCY_PARSER_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "skewcy/graded_algebra.hpp"

namespace skewcy {

inline Error located(Errc code, int line, int col, const std::string& msg) {
    return Error(code, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

/// Recursive-descent parser for noncommutative polynomial expressions.
///
///   expr    := signed (('+' | '-') signed)*
///   signed  := '-' signed | product
///   product := power ('*' power)*
///   power   := atom ('^' INT)?
///   atom    := INT ('/' INT)? | NAME | '(' expr ')'
///
/// With a cyclotomic field the name `z` is the primitive root of unity.
class ExpressionParser {
public:
    ExpressionParser(const GeneratorTable* t, FieldSpec f, std::string_view text, int line = 1, int col = 1)
        : t_(t), f_(std::move(f)), s_(text), line_(line), col0_(col) {}

    NcPolynomial parse() {
        skip();
        if (at_end()) fail(Errc::SyntaxError, "empty expression");
        NcPolynomial p = expr();
        skip();
        if (!at_end()) {
            if (is_ident_start(s_[i_]) || std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(')
                fail(Errc::SyntaxError, "missing '*' (juxtaposition is not a product)");
            fail(Errc::SyntaxError, std::string("unexpected '") + s_[i_] + "'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(Errc c, const std::string& msg) const {
        throw located(c, line_, col0_ + static_cast<int>(i_), msg);
    }
    bool at_end() const { return i_ >= s_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (!at_end() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    NcPolynomial expr() {
        NcPolynomial p = signed_term();
        for (;;) {
            if (eat('+'))
                p += signed_term();
            else if (eat('-'))
                p -= signed_term();
            else
                return p;
        }
    }
    NcPolynomial signed_term() {
        if (eat('-')) return -signed_term();
        return product();
    }
    NcPolynomial product() {
        NcPolynomial p = power();
        while (eat('*')) p = p * power();
        return p;
    }
    NcPolynomial power() {
        NcPolynomial base = atom();
        if (!eat('^')) return base;
        skip();
        std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail(Errc::SyntaxError, "exponent must be a nonnegative integer");
        if (i_ - start > 6) fail(Errc::SyntaxError, "exponent too large");
        int k = std::stoi(std::string(s_.substr(start, i_ - start)));
        NcPolynomial r = NcPolynomial::constant(Scalar::one(f_));
        for (int j = 0; j < k; ++j) r = r * base;
        return r;
    }
    mpz_class integer() {
        std::size_t start = i_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return mpz_class(std::string(s_.substr(start, i_ - start)));
    }
    NcPolynomial atom() {
        skip();
        if (at_end()) fail(Errc::SyntaxError, "unexpected end of expression");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            NcPolynomial p = expr();
            if (!eat(')')) fail(Errc::SyntaxError, "expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t at = i_;
            mpq_class q(integer());
            std::size_t save = i_;
            skip();
            if (!at_end() && s_[i_] == '/') {
                ++i_;
                skip();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                    fail(Errc::SyntaxError, "fraction denominator must be an integer literal");
                mpz_class d = integer();
                if (d == 0) {
                    i_ = at;
                    fail(Errc::SyntaxError, "zero denominator");
                }
                q = mpq_class(q.get_num(), d);
                q.canonicalize();
            } else {
                i_ = save;
            }
            try {
                return NcPolynomial::constant(Scalar::from_rational(f_, q));
            } catch (const Error& e) {
                i_ = at;
                fail(e.code(), e.message());
            }
        }
        if (is_ident_start(c)) {
            std::size_t start = i_;
            while (!at_end() && is_ident_char(s_[i_])) ++i_;
            std::string name(s_.substr(start, i_ - start));
            if (f_.is_cyclotomic() && name == "z") return NcPolynomial::constant(Scalar::zeta(f_));
            int g = t_ ? t_->index_of(name) : -1;
            if (g < 0) {
                i_ = start;
                fail(Errc::UnknownGenerator, "unknown generator '" + name + "'");
            }
            return NcPolynomial::generator(*t_, g, f_);
        }
        fail(Errc::SyntaxError, std::string("unexpected '") + c + "'");
    }

    const GeneratorTable* t_;
    FieldSpec f_;
    std::string_view s_;
    std::size_t i_ = 0;
    int line_;
    int col0_;
};

inline NcPolynomial parse_expression(const GeneratorTable& t, const FieldSpec& f, std::string_view text, int line = 1,
                                     int col = 1) {
    return ExpressionParser(&t, f, text, line, col).parse();
}

inline Scalar parse_scalar(const FieldSpec& f, std::string_view text, int line = 1, int col = 1) {
    NcPolynomial p = ExpressionParser(nullptr, f, text, line, col).parse();
    if (p.is_zero()) return Scalar::zero(f);
    if (p.max_degree() != 0) throw located(Errc::SyntaxError, line, col, "expected a scalar");
    return p.leading_coefficient();
}

inline FieldSpec parse_field(std::string_view text, int line = 1, int col = 1) {
    std::istringstream in{std::string(text)};
    std::string kind, extra;
    long long n = 0;
    in >> kind;
    try {
        if (kind == "rationals" && !(in >> extra)) return FieldSpec::rationals();
        if (kind == "prime" && (in >> n) && !(in >> extra) && n > 1) return FieldSpec::prime(static_cast<std::uint64_t>(n));
        if (kind == "cyclotomic" && (in >> n) && !(in >> extra) && n >= 1)
            return FieldSpec::cyclotomic(static_cast<std::uint32_t>(n));
    } catch (const Error& e) {
        throw located(e.code(), line, col, e.message());
    }
    throw located(Errc::SyntaxError, line, col, "field must be 'rationals', 'prime p' or 'cyclotomic n'");
}

/// Splits on commas that are not nested inside brackets or parentheses.
inline std::vector<std::pair<std::string, int>> split_top_level(std::string_view s, int col) {
    std::vector<std::pair<std::string, int>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        char c = i < s.size() ? s[i] : ',';
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.emplace_back(std::string(s.substr(start, i - start)), col + static_cast<int>(start));
            start = i + 1;
        }
    }
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

/// `[[a, b], [c, d]]`, rows of scalar expressions.
inline Matrix parse_matrix(const FieldSpec& f, std::string_view text, int line = 1, int col = 1) {
    std::string s = trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw located(Errc::SyntaxError, line, col, "matrix must look like [[a, b], [c, d]]");
    std::vector<Vector> rows;
    for (auto& [row, rc] : split_top_level(std::string_view(s).substr(1, s.size() - 2), col + 1)) {
        std::string r = trim(row);
        if (r.size() < 2 || r.front() != '[' || r.back() != ']')
            throw located(Errc::SyntaxError, line, rc, "matrix row must be bracketed");
        Vector v;
        for (auto& [entry, ec] : split_top_level(std::string_view(r).substr(1, r.size() - 2), rc + 1))
            v.push_back(parse_scalar(f, entry, line, ec));
        if (!rows.empty() && v.size() != rows.front().size())
            throw located(Errc::SyntaxError, line, rc, "matrix rows differ in length");
        rows.push_back(std::move(v));
    }
    Matrix m(f, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

inline MultiDegree parse_multidegree(std::string_view text, int line, int col) {
    std::string s = trim(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    MultiDegree d;
    for (auto& [part, pc] : split_top_level(s, col)) {
        std::string p = trim(part);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(p, &used);
        } catch (...) {
            used = 0;
        }
        if (p.empty() || used != p.size()) throw located(Errc::SyntaxError, line, pc, "expected an integer degree");
        d.push_back(v);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Presentation files

struct NamedAutomorphism {
    std::string name;
    Matrix matrix;
};

struct NamedGroup {
    std::string name;
    std::vector<std::string> members;
};

struct PresentationFile {
    FieldSpec field = FieldSpec::rationals();
    GeneratorTable generators{1};
    std::vector<NcPolynomial> relations;
    std::vector<NamedAutomorphism> automorphisms;
    std::vector<NamedGroup> groups;
    int degree_bound = 8;
    std::optional<std::uint64_t> seed;
    std::string name;
    // registry facts
    std::optional<Matrix> known_nakayama;
    std::optional<MultiDegree> known_as_index;
    HdetRule known_hdet_rule = HdetRule::None;
    std::string known_provenance;
    std::vector<std::vector<std::string>> known_cy_twists;

    bool has_known() const {
        return known_nakayama || known_as_index || known_hdet_rule != HdetRule::None || !known_provenance.empty() ||
               !known_cy_twists.empty();
    }

    const NamedAutomorphism* find_automorphism(const std::string& n) const {
        for (const auto& a : automorphisms)
            if (a.name == n) return &a;
        return nullptr;
    }
    const NamedGroup* find_group(const std::string& n) const {
        for (const auto& g : groups)
            if (g.name == n) return &g;
        return nullptr;
    }

    KnownData known() const {
        KnownData k;
        k.nakayama = known_nakayama;
        k.as_index = known_as_index;
        k.hdet_rule = known_hdet_rule;
        k.provenance = known_provenance;
        for (const auto& fam : known_cy_twists) {
            std::vector<Matrix> ms;
            for (const auto& n : fam) ms.push_back(find_automorphism(n)->matrix);
            k.cy_twists.push_back(std::move(ms));
        }
        return k;
    }

    /// Runs the truncated completion.
    AlgebraPtr algebra() const { return make_algebra(generators, field, relations, degree_bound, known(), name); }

    GradedAutomorphism automorphism(const AlgebraPtr& a, const std::string& n) const {
        const NamedAutomorphism* na = find_automorphism(n);
        if (!na) throw Error(Errc::Usage, "no automorphism named '" + n + "'");
        auto chk = check_automorphism(a, na->matrix);
        if (!chk) throw Error(Errc::AutomorphismValidationFailed, "automorphism " + n + ": " + chk.report);
        return *chk.automorphism;
    }

    std::vector<GradedAutomorphism> group(const AlgebraPtr& a, const std::string& n) const {
        const NamedGroup* g = find_group(n);
        if (!g) throw Error(Errc::Usage, "no group named '" + n + "'");
        std::vector<GradedAutomorphism> out;
        for (const auto& m : g->members) out.push_back(automorphism(a, m));
        return out;
    }

    friend bool operator==(const PresentationFile& a, const PresentationFile& b) {
        if (!(a.field == b.field) || !(a.generators == b.generators) || a.relations != b.relations) return false;
        if (a.automorphisms.size() != b.automorphisms.size() || a.groups.size() != b.groups.size()) return false;
        for (std::size_t i = 0; i < a.automorphisms.size(); ++i)
            if (a.automorphisms[i].name != b.automorphisms[i].name || !(a.automorphisms[i].matrix == b.automorphisms[i].matrix))
                return false;
        for (std::size_t i = 0; i < a.groups.size(); ++i)
            if (a.groups[i].name != b.groups[i].name || a.groups[i].members != b.groups[i].members) return false;
        if (a.known_nakayama.has_value() != b.known_nakayama.has_value()) return false;
        if (a.known_nakayama && !(*a.known_nakayama == *b.known_nakayama)) return false;
        return a.degree_bound == b.degree_bound && a.seed == b.seed && a.name == b.name &&
               a.known_as_index == b.known_as_index && a.known_hdet_rule == b.known_hdet_rule &&
               a.known_provenance == b.known_provenance && a.known_cy_twists == b.known_cy_twists;
    }
};

namespace detail {

struct Line {
    std::string text;
    int number;
};

inline std::pair<std::string, std::string> key_value(const Line& l, int& value_col) {
    auto eq = l.text.find('=');
    if (eq == std::string::npos) throw located(Errc::SyntaxError, l.number, 1, "expected 'key = value'");
    std::size_t vstart = eq + 1;
    while (vstart < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[vstart]))) ++vstart;
    value_col = static_cast<int>(vstart) + 1;
    return {trim(std::string_view(l.text).substr(0, eq)), trim(std::string_view(l.text).substr(eq + 1))};
}

inline int leading_col(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return static_cast<int>(i) + 1;
}

inline HdetRule parse_hdet_rule(const std::string& v, int line, int col) {
    if (v == "det") return HdetRule::Determinant;
    if (v == "det2") return HdetRule::DeterminantSquared;
    if (v == "none") return HdetRule::None;
    throw located(Errc::SyntaxError, line, col, "hdet_rule must be det, det2 or none");
}

inline const char* hdet_rule_keyword(HdetRule r) {
    switch (r) {
        case HdetRule::Determinant: return "det";
        case HdetRule::DeterminantSquared: return "det2";
        default: return "none";
    }
}

/// Column of generator images; each image must be linear in generators of the same multidegree.
inline Vector parse_linear_image(const GeneratorTable& t, const FieldSpec& f, std::size_t gen, const std::string& text,
                                 int line, int col) {
    NcPolynomial p = parse_expression(t, f, text, line, col);
    Vector v(t.size(), Scalar::zero(f));
    for (const auto& [w, c] : p.terms()) {
        if (w.length() != 1) throw located(Errc::SyntaxError, line, col, "image must be linear in the generators");
        std::size_t i = static_cast<std::size_t>(w[0]);
        if (t.degree(i) != t.degree(gen))
            throw located(Errc::DegreeMismatch, line, col,
                          "image of " + t.name(gen) + " involves " + t.name(i) + " of a different degree");
        v[i] = c;
    }
    return v;
}

}  // namespace detail

/// Line-oriented sections: [field] [grading] [generators] [relations] [automorphism NAME]
/// [group NAME] [options] [known]. `#` starts a comment.
inline PresentationFile parse_presentation(std::string_view text) {
    using detail::Line;
    struct Section {
        std::string kind, arg;
        int line;
        std::vector<Line> body;
    };
    std::vector<Section> sections;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        int n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            auto hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            std::string t = trim(raw);
            if (t.empty()) continue;
            if (t.front() == '[') {
                if (t.back() != ']') throw located(Errc::SyntaxError, n, 1, "unterminated section header");
                std::string inner = trim(std::string_view(t).substr(1, t.size() - 2));
                auto sp = inner.find(' ');
                std::string kind = sp == std::string::npos ? inner : inner.substr(0, sp);
                std::string arg = sp == std::string::npos ? "" : trim(std::string_view(inner).substr(sp + 1));
                static const std::vector<std::string> known_kinds{"field",        "grading", "generators", "relations",
                                                                  "automorphism", "group",   "options",    "known"};
                if (std::find(known_kinds.begin(), known_kinds.end(), kind) == known_kinds.end())
                    throw located(Errc::UnknownKey, n, 2, "unknown section '" + kind + "'");
                bool named = kind == "automorphism" || kind == "group";
                if (named && arg.empty()) throw located(Errc::SyntaxError, n, 2, kind + " section needs a name");
                if (!named && !arg.empty()) throw located(Errc::SyntaxError, n, 2, kind + " section takes no name");
                if (!named)
                    for (const auto& s : sections)
                        if (s.kind == kind) throw located(Errc::SyntaxError, n, 1, "duplicate section [" + kind + "]");
                sections.push_back({kind, arg, n, {}});
                continue;
            }
            if (sections.empty()) throw located(Errc::SyntaxError, n, 1, "content before the first section");
            sections.back().body.push_back({raw, n});
        }
    }
    auto find = [&](const std::string& kind) -> const Section* {
        for (const auto& s : sections)
            if (s.kind == kind) return &s;
        return nullptr;
    };

    PresentationFile pf;
    if (const Section* s = find("field")) {
        if (s->body.size() != 1) throw located(Errc::SyntaxError, s->line, 1, "[field] needs exactly one line");
        pf.field = parse_field(trim(s->body[0].text), s->body[0].number, detail::leading_col(s->body[0].text));
    }
    int w = 1;
    if (const Section* s = find("grading")) {
        if (s->body.size() != 1) throw located(Errc::SyntaxError, s->line, 1, "[grading] needs exactly one line");
        auto d = parse_multidegree(s->body[0].text, s->body[0].number, 1);
        if (d.size() != 1 || d[0] < 1) throw located(Errc::SyntaxError, s->body[0].number, 1, "grading rank must be a positive integer");
        w = d[0];
    }
    pf.generators = GeneratorTable(w);
    if (const Section* s = find("generators")) {
        for (const auto& l : s->body) {
            std::string name, deg;
            int vcol = 1;
            if (l.text.find('=') == std::string::npos) {
                name = trim(l.text);
                if (w != 1) throw located(Errc::DegreeMismatch, l.number, 1, "generator " + name + " needs a multidegree");
                deg = "1";
            } else {
                std::tie(name, deg) = detail::key_value(l, vcol);
            }
            if (name.empty() || !is_ident_start(name[0]) ||
                !std::all_of(name.begin(), name.end(), [](char c) { return is_ident_char(c); }))
                throw located(Errc::SyntaxError, l.number, detail::leading_col(l.text), "bad generator name '" + name + "'");
            if (pf.field.is_cyclotomic() && name == "z")
                throw located(Errc::SyntaxError, l.number, detail::leading_col(l.text),
                              "'z' denotes the root of unity in a cyclotomic field");
            try {
                pf.generators.add(name, parse_multidegree(deg, l.number, vcol));
            } catch (const Error& e) {
                if (e.message().rfind("line ", 0) == 0) throw;
                throw located(e.code(), l.number, vcol, e.message());
            }
        }
    }
    if (const Section* s = find("relations")) {
        for (const auto& l : s->body) {
            NcPolynomial r = parse_expression(pf.generators, pf.field, l.text, l.number, 1);
            if (!r.is_homogeneous(pf.generators))
                throw located(Errc::InhomogeneousRelation, l.number, detail::leading_col(l.text), "relation is not homogeneous");
            pf.relations.push_back(std::move(r));
        }
    }
    const std::size_t n = pf.generators.size();
    for (const auto& s : sections) {
        if (s.kind != "automorphism") continue;
        if (pf.find_automorphism(s.arg)) throw located(Errc::SyntaxError, s.line, 1, "duplicate automorphism " + s.arg);
        Matrix m = Matrix::identity(pf.field, n);
        std::vector<bool> seen(n, false);
        bool via_matrix = false;
        for (const auto& l : s.body) {
            int vcol = 1;
            auto [key, val] = detail::key_value(l, vcol);
            if (key == "matrix") {
                if (via_matrix || std::find(seen.begin(), seen.end(), true) != seen.end())
                    throw located(Errc::SyntaxError, l.number, 1, "matrix form cannot be combined with other lines");
                m = parse_matrix(pf.field, val, l.number, vcol);
                if (m.rows() != n || m.cols() != n)
                    throw located(Errc::DegreeMismatch, l.number, vcol, "matrix must be " + std::to_string(n) + "x" + std::to_string(n));
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t i = 0; i < n; ++i)
                        if (!m(i, j).is_zero() && pf.generators.degree(i) != pf.generators.degree(j))
                            throw located(Errc::DegreeMismatch, l.number, vcol, "matrix mixes generators of different degrees");
                via_matrix = true;
                continue;
            }
            int g = pf.generators.index_of(key);
            if (g < 0) throw located(Errc::UnknownGenerator, l.number, detail::leading_col(l.text), "unknown generator '" + key + "'");
            if (via_matrix || seen[static_cast<std::size_t>(g)])
                throw located(Errc::SyntaxError, l.number, 1, "image of " + key + " given twice");
            seen[static_cast<std::size_t>(g)] = true;
            Vector v = detail::parse_linear_image(pf.generators, pf.field, static_cast<std::size_t>(g), val, l.number, vcol);
            for (std::size_t i = 0; i < n; ++i) m(i, static_cast<std::size_t>(g)) = v[i];
        }
        pf.automorphisms.push_back({s.arg, std::move(m)});
    }
    for (const auto& s : sections) {
        if (s.kind != "group") continue;
        if (pf.find_group(s.arg)) throw located(Errc::SyntaxError, s.line, 1, "duplicate group " + s.arg);
        NamedGroup g{s.arg, {}};
        for (const auto& l : s.body)
            for (auto& [m, c] : split_top_level(l.text, 1)) {
                std::string name = trim(m);
                if (!pf.find_automorphism(name))
                    throw located(Errc::UnknownKey, l.number, c, "group member '" + name + "' is not a named automorphism");
                g.members.push_back(name);
            }
        pf.groups.push_back(std::move(g));
    }
    if (const Section* s = find("options")) {
        for (const auto& l : s->body) {
            int vcol = 1;
            auto [key, val] = detail::key_value(l, vcol);
            try {
                if (key == "degree_bound") {
                    std::size_t used = 0;
                    int d = std::stoi(val, &used);
                    if (used != val.size() || d < 2) throw std::invalid_argument("bound");
                    pf.degree_bound = d;
                } else if (key == "seed") {
                    std::size_t used = 0;
                    unsigned long long v = std::stoull(val, &used);
                    if (used != val.size()) throw std::invalid_argument("seed");
                    pf.seed = v;
                } else if (key == "name") {
                    pf.name = val;
                } else {
                    throw located(Errc::UnknownKey, l.number, detail::leading_col(l.text), "unknown option '" + key + "'");
                }
            } catch (const std::logic_error&) {
                throw located(Errc::SyntaxError, l.number, vcol, "bad value for " + key);
            }
        }
    }
    if (const Section* s = find("known")) {
        for (const auto& l : s->body) {
            int vcol = 1;
            auto [key, val] = detail::key_value(l, vcol);
            if (key == "nakayama") {
                Matrix m = parse_matrix(pf.field, val, l.number, vcol);
                if (m.rows() != n || m.cols() != n) throw located(Errc::DegreeMismatch, l.number, vcol, "nakayama matrix has the wrong size");
                pf.known_nakayama = m;
            } else if (key == "as_index") {
                auto d = parse_multidegree(val, l.number, vcol);
                if (static_cast<int>(d.size()) != w) throw located(Errc::DegreeMismatch, l.number, vcol, "as_index needs length " + std::to_string(w));
                pf.known_as_index = d;
            } else if (key == "hdet_rule") {
                pf.known_hdet_rule = detail::parse_hdet_rule(val, l.number, vcol);
            } else if (key == "provenance") {
                pf.known_provenance = val;
            } else if (key == "cy_twist") {
                std::vector<std::string> fam;
                for (auto& [m, c] : split_top_level(val, vcol)) {
                    std::string name = trim(m);
                    if (!pf.find_automorphism(name))
                        throw located(Errc::UnknownKey, l.number, c, "cy_twist member '" + name + "' is not a named automorphism");
                    fam.push_back(name);
                }
                if (static_cast<int>(fam.size()) != w) throw located(Errc::DegreeMismatch, l.number, vcol, "cy_twist needs one automorphism per grading coordinate");
                pf.known_cy_twists.push_back(std::move(fam));
            } else {
                throw located(Errc::UnknownKey, l.number, detail::leading_col(l.text), "unknown key '" + key + "'");
            }
        }
    }
    return pf;
}

/// Presentation of a constructed algebra (no automorphisms or registry facts).
inline PresentationFile presentation_of(const AlgebraPtr& a) {
    PresentationFile pf;
    pf.field = a->field();
    pf.generators = a->generators();
    pf.relations = a->relations();
    pf.degree_bound = a->degree_bound();
    pf.name = a->name();
    return pf;
}

/// Canonical text form; parse(serialize(p)) == p.
inline std::string serialize(const PresentationFile& pf) {
    std::string s;
    s += "[field]\n" + pf.field.to_string() + "\n";
    s += "[grading]\n" + std::to_string(pf.generators.rank()) + "\n";
    s += "[generators]\n";
    for (std::size_t i = 0; i < pf.generators.size(); ++i)
        s += pf.generators.name(i) + " = " + degree_to_string(pf.generators.degree(i)) + "\n";
    s += "[relations]\n";
    for (const auto& r : pf.relations) s += r.to_string(pf.generators) + "\n";
    for (const auto& a : pf.automorphisms) {
        s += "[automorphism " + a.name + "]\n";
        for (std::size_t j = 0; j < pf.generators.size(); ++j)
            s += pf.generators.name(j) + " = " + linear_image(pf.generators, a.matrix, j).to_string(pf.generators) + "\n";
    }
    for (const auto& g : pf.groups) {
        s += "[group " + g.name + "]\n";
        for (std::size_t i = 0; i < g.members.size(); ++i) s += (i ? ", " : "") + g.members[i];
        s += "\n";
    }
    s += "[options]\ndegree_bound = " + std::to_string(pf.degree_bound) + "\n";
    if (pf.seed) s += "seed = " + std::to_string(*pf.seed) + "\n";
    if (!pf.name.empty()) s += "name = " + pf.name + "\n";
    if (pf.has_known()) {
        s += "[known]\n";
        if (pf.known_nakayama) s += "nakayama = " + pf.known_nakayama->to_string() + "\n";
        if (pf.known_as_index) s += "as_index = " + degree_to_string(*pf.known_as_index) + "\n";
        if (pf.known_hdet_rule != HdetRule::None)
            s += std::string("hdet_rule = ") + detail::hdet_rule_keyword(pf.known_hdet_rule) + "\n";
        if (!pf.known_provenance.empty()) s += "provenance = " + pf.known_provenance + "\n";
        for (const auto& fam : pf.known_cy_twists) {
            s += "cy_twist = ";
            for (std::size_t i = 0; i < fam.size(); ++i) s += (i ? ", " : "") + fam[i];
            s += "\n";
        }
    }
    return s;
}

}  // namespace skewcy

#endif
