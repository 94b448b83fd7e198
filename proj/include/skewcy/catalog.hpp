#ifndef SKEWCY_CATALOG_HPP
#define SKEWCY_CATALOG_HPP

#include <string>
#include <vector>

#include "skewcy/identities.hpp"
#include "skewcy/parser.hpp"

namespace skewcy {

namespace detail {

inline std::vector<std::string> default_names(std::size_t n) {
    if (n == 1) return {"x"};
    if (n == 2) return {"x", "y"};
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

inline Matrix diag_ints(const FieldSpec& f, const std::vector<long long>& v) {
    Vector d;
    for (long long x : v) d.push_back(Scalar::from_integer(f, x));
    return Matrix::diagonal(f, d);
}

inline NcPolynomial commutator_relation(const GeneratorTable& t, const FieldSpec& f, int i, int j, const Scalar& p) {
    auto xi_ = NcPolynomial::generator(t, i, f);
    auto xj = NcPolynomial::generator(t, j, f);
    return xj * xi_ - p * (xi_ * xj);
}

}  // namespace detail

/// k[x_1..x_n]: automorphisms scale = diag(2..n+1), neg = -1, and for n >= 2 swap (x_1 <-> x_2)
/// and shear (x_2 -> x_1 + x_2).
inline PresentationFile catalog_polynomial(std::size_t n, const FieldSpec& f = FieldSpec::rationals()) {
    if (n < 1) throw Error(Errc::Usage, "polynomial(n) needs n >= 1");
    PresentationFile pf;
    pf.field = f;
    pf.name = "polynomial(" + std::to_string(n) + ")";
    pf.generators = GeneratorTable(1);
    for (const auto& s : detail::default_names(n)) pf.generators.add(s, {1});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pf.relations.push_back(detail::commutator_relation(pf.generators, f, static_cast<int>(i), static_cast<int>(j),
                                                               Scalar::one(f)));
    std::vector<long long> sc;
    for (std::size_t i = 0; i < n; ++i) sc.push_back(static_cast<long long>(i) + 2);
    pf.automorphisms.push_back({"scale", detail::diag_ints(f, sc)});
    pf.automorphisms.push_back({"neg", Scalar::from_integer(f, -1) * Matrix::identity(f, n)});
    if (n >= 2) {
        Matrix sw = Matrix::identity(f, n);
        sw(0, 0) = sw(1, 1) = Scalar::zero(f);
        sw(0, 1) = sw(1, 0) = Scalar::one(f);
        pf.automorphisms.push_back({"swap", sw});
        Matrix sh = Matrix::identity(f, n);
        sh(0, 1) = Scalar::one(f);
        pf.automorphisms.push_back({"shear", sh});
    }
    pf.groups.push_back({"signs", {"neg"}});
    return pf;
}

/// Z^w-graded k_{p_ij}[x_1..x_w] with x_j x_i = p_ij x_i x_j (i < j), p listed as p_12, p_13, ..,
/// p_1w, p_23, ... Automorphisms d<k> scale x_k by 2; id.
inline PresentationFile catalog_skewpoly(std::size_t w, const Vector& p) {
    if (w < 1) throw Error(Errc::Usage, "skewpoly needs w >= 1");
    if (p.size() != w * (w - 1) / 2) throw Error(Errc::Usage, "skewpoly(w, ...) needs w(w-1)/2 parameters");
    const FieldSpec f = p.empty() ? FieldSpec::rationals() : p.front().field();
    PresentationFile pf;
    pf.field = f;
    pf.name = "skewpoly(" + std::to_string(w) + ")";
    pf.generators = GeneratorTable(static_cast<int>(w));
    auto names = detail::default_names(w);
    for (std::size_t i = 0; i < w; ++i) {
        MultiDegree d(w, 0);
        d[i] = 1;
        pf.generators.add(names[i], d);
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = i + 1; j < w; ++j, ++k) {
            if (p[k].is_zero()) throw Error(Errc::ZeroScalar, "skew parameters must be nonzero");
            pf.relations.push_back(detail::commutator_relation(pf.generators, f, static_cast<int>(i), static_cast<int>(j), p[k]));
        }
    for (std::size_t i = 0; i < w; ++i) {
        std::vector<long long> d(w, 1);
        d[i] = 2;
        pf.automorphisms.push_back({"d" + std::to_string(i + 1), detail::diag_ints(f, d)});
    }
    pf.automorphisms.push_back({"id", Matrix::identity(f, w)});
    return pf;
}

/// Default skew parameters 2, 3, 5, 7, ... in the given field.
inline Vector default_skew_parameters(std::size_t w, const FieldSpec& f = FieldSpec::rationals()) {
    static const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    Vector p;
    for (std::size_t i = 0; i < w * (w - 1) / 2; ++i) p.push_back(Scalar::from_integer(f, primes[i % 15]));
    return p;
}

/// k_q[x,y] with yx = q xy. Automorphisms diag = diag(2,3), mu_inv = diag(q, q^-1).
inline PresentationFile catalog_quantum_plane(const Scalar& q) {
    if (q.is_zero()) throw Error(Errc::ZeroScalar, "q must be nonzero");
    const FieldSpec& f = q.field();
    PresentationFile pf;
    pf.field = f;
    pf.name = "quantum_plane(" + q.to_string() + ")";
    pf.generators = GeneratorTable(1);
    pf.generators.add("x", {1});
    pf.generators.add("y", {1});
    pf.relations.push_back(detail::commutator_relation(pf.generators, f, 0, 1, q));
    pf.automorphisms.push_back({"diag", detail::diag_ints(f, {2, 3})});
    pf.automorphisms.push_back({"mu_inv", Matrix::diagonal(f, {q, q.inverse()})});
    return pf;
}

/// k_{-1}[x,y]. Automorphisms swap (x <-> y) and diag = diag(2,3); group G = <swap>.
inline PresentationFile catalog_kminus1_plane(const FieldSpec& f = FieldSpec::rationals()) {
    PresentationFile pf = catalog_quantum_plane(Scalar::from_integer(f, -1));
    pf.name = "kminus1_plane";
    pf.automorphisms.clear();
    Matrix sw(f, 2, 2);
    sw(0, 1) = sw(1, 0) = Scalar::one(f);
    pf.automorphisms.push_back({"swap", sw});
    pf.automorphisms.push_back({"diag", detail::diag_ints(f, {2, 3})});
    pf.automorphisms.push_back({"neg", detail::diag_ints(f, {-1, -1})});
    pf.groups.push_back({"G", {"swap", "neg"}});
    return pf;
}

/// The down-up algebra A(0,1,0) over Q(z_4) with registered facts: Nakayama xi_-1, AS index 4,
/// hdet = det^2 on degree 1, and the twist by sigma: y -> z y is Calabi-Yau.
inline PresentationFile catalog_downup_010() {
    const FieldSpec f = FieldSpec::cyclotomic(4);
    PresentationFile pf;
    pf.field = f;
    pf.name = "downup_010";
    pf.generators = GeneratorTable(1);
    pf.generators.add("x", {1});
    pf.generators.add("y", {1});
    auto x = NcPolynomial::generator(pf.generators, 0, f);
    auto y = NcPolynomial::generator(pf.generators, 1, f);
    pf.relations.push_back(x * x * y - y * x * x);
    pf.relations.push_back(y * y * x - x * y * y);
    pf.automorphisms.push_back({"sigma", Matrix::diagonal(f, {Scalar::one(f), Scalar::zeta(f)})});
    Matrix neg = Scalar::from_integer(f, -1) * Matrix::identity(f, 2);
    pf.automorphisms.push_back({"xi", neg});
    pf.groups.push_back({"G", {"xi"}});
    pf.known_nakayama = neg;
    pf.known_as_index = MultiDegree{4};
    pf.known_hdet_rule = HdetRule::DeterminantSquared;
    pf.known_provenance = "down-up algebra A(0,1,0): mu = xi_-1, AS index 4, hdet = det^2, twist by sigma is CY";
    pf.known_cy_twists.push_back({"sigma"});
    return pf;
}

struct CatalogEntry {
    std::string name;
    std::string usage;
    std::string description;
};

inline std::vector<CatalogEntry> catalog() {
    return {
        {"polynomial", "polynomial(n) [; field]", "commutative polynomial ring k[x_1..x_n], default n = 2"},
        {"skewpoly", "skewpoly(w, p_12, p_13, ..) [; field]",
         "Z^w-graded skew polynomial ring x_j x_i = p_ij x_i x_j, default w = 3 with p = 2, 3, 5"},
        {"quantum_plane", "quantum_plane(q) [; field]", "k_q[x,y] with yx = q xy, default q = 2"},
        {"kminus1_plane", "kminus1_plane [; field]", "k_{-1}[x,y] with the swap automorphism and G = <swap, -1>"},
        {"downup_010", "downup_010", "down-up algebra A(0,1,0) over Q(z_4) with registered invariants"},
    };
}

/// Builds an entry from `name`, `name(args)` or `name(args; field)`.
inline PresentationFile catalog_lookup(const std::string& entry) {
    std::string s = trim(entry);
    std::string name = s, args, field_text;
    auto open = s.find('(');
    if (open != std::string::npos) {
        if (s.back() != ')') throw Error(Errc::Usage, "catalog entry must look like name(args)");
        name = trim(std::string_view(s).substr(0, open));
        args = s.substr(open + 1, s.size() - open - 2);
        auto semi = args.find(';');
        if (semi != std::string::npos) {
            field_text = trim(std::string_view(args).substr(semi + 1));
            args = trim(std::string_view(args).substr(0, semi));
        }
        args = trim(args);
    }
    FieldSpec f = field_text.empty() ? FieldSpec::rationals() : parse_field(field_text);
    std::vector<std::string> a;
    if (!args.empty())
        for (auto& [part, col] : split_top_level(args, 1)) a.push_back(trim(part));
    auto as_int = [](const std::string& v) {
        std::size_t used = 0;
        long long n = -1;
        try {
            n = std::stoll(v, &used);
        } catch (...) {
        }
        if (used != v.size() || n < 1 || n > 64) throw Error(Errc::Usage, "expected a small positive integer, got '" + v + "'");
        return static_cast<std::size_t>(n);
    };
    if (name == "polynomial") {
        if (a.size() > 1) throw Error(Errc::Usage, "polynomial takes one argument");
        return catalog_polynomial(a.empty() ? 2 : as_int(a[0]), f);
    }
    if (name == "skewpoly") {
        std::size_t w = a.empty() ? 3 : as_int(a[0]);
        Vector p;
        if (a.size() <= 1) {
            p = default_skew_parameters(w, f);
        } else {
            for (std::size_t i = 1; i < a.size(); ++i) p.push_back(parse_scalar(f, a[i]));
        }
        return catalog_skewpoly(w, p);
    }
    if (name == "quantum_plane") {
        if (a.size() > 1) throw Error(Errc::Usage, "quantum_plane takes one argument");
        return catalog_quantum_plane(a.empty() ? Scalar::from_integer(f, 2) : parse_scalar(f, a[0]));
    }
    if (name == "kminus1_plane") {
        if (!a.empty()) throw Error(Errc::Usage, "kminus1_plane takes no arguments");
        return catalog_kminus1_plane(f);
    }
    if (name == "downup_010") {
        if (!a.empty() || !field_text.empty()) throw Error(Errc::Usage, "downup_010 takes no arguments");
        return catalog_downup_010();
    }
    throw Error(Errc::Usage, "unknown catalog entry '" + name + "'");
}

// ---------------------------------------------------------------------------
// Self-test: re-derive or consistency-check every registered fact.

struct SelfCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// 1 / h(t) truncated to the length of h.
inline std::vector<long long> inverse_series(const std::vector<long long>& h) {
    std::vector<long long> g(h.size(), 0);
    if (h.empty()) return g;
    g[0] = 1;
    for (std::size_t n = 1; n < h.size(); ++n) {
        long long s = 0;
        for (std::size_t k = 1; k <= n; ++k) s += h[k] * g[n - k];
        g[n] = -s;
    }
    return g;
}

/// mu(x_s) = prod_{a<s} p_as prod_{b>s} p_sb^-1 x_s.
inline Matrix skewpoly_nakayama_formula(std::size_t w, const Vector& p) {
    const FieldSpec f = p.empty() ? FieldSpec::rationals() : p.front().field();
    auto at = [&](std::size_t i, std::size_t j) {
        std::size_t k = 0;
        for (std::size_t a = 0; a < i; ++a) k += w - a - 1;
        return p[k + (j - i - 1)];
    };
    Vector d;
    for (std::size_t s = 0; s < w; ++s) {
        Scalar c = Scalar::one(f);
        for (std::size_t a = 0; a < s; ++a) c *= at(a, s);
        for (std::size_t b = s + 1; b < w; ++b) c /= at(s, b);
        d.push_back(c);
    }
    return Matrix::diagonal(f, d);
}

inline std::vector<SelfCheck> catalog_selftest() {
    std::vector<SelfCheck> out;
    auto run = [&](const std::string& name, auto&& body) {
        try {
            auto [ok, detail] = body();
            out.push_back({name, ok, detail});
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("error: ") + e.what()});
        }
    };
    for (std::size_t n = 1; n <= 4; ++n) {
        run("polynomial(" + std::to_string(n) + "): mu = id, l = n, hdet(mu) = 1", [&] {
            auto a = catalog_polynomial(n).algebra();
            Invariants inv(a);
            bool ok = inv.certified() && inv.nakayama().matrix().is_identity() && inv.as_index() == MultiDegree{int(n)} &&
                      verify_hi3(a).equal;
            return std::pair{ok, inv.report()};
        });
    }
    run("skewpoly(3): mu matches the product formula", [&] {
        Vector p = default_skew_parameters(3);
        auto a = catalog_skewpoly(3, p).algebra();
        Matrix mu = Invariants(a).nakayama().matrix();
        return std::pair{mu == skewpoly_nakayama_formula(3, p), mu.to_string()};
    });
    run("quantum_plane(2): mu = diag(1/2, 2), l = 2", [&] {
        auto a = catalog_quantum_plane(Scalar::from_integer(FieldSpec::rationals(), 2)).algebra();
        Invariants inv(a);
        Matrix expect = Matrix::diagonal(a->field(), {Scalar::from_rational(a->field(), mpq_class(1, 2)), a->scalar(2)});
        return std::pair{inv.nakayama().matrix() == expect && inv.as_index() == MultiDegree{2}, inv.nakayama().to_string()};
    });
    run("kminus1_plane: mu = -id, hdet(swap) = 1", [&] {
        auto pf = catalog_kminus1_plane();
        auto a = pf.algebra();
        Invariants inv(a);
        Scalar h = inv.hdet(pf.automorphism(a, "swap")).value;
        return std::pair{inv.nakayama().matrix() == a->scalar(-1) * Matrix::identity(a->field(), 2) && h.is_one(),
                         "hdet(swap) = " + h.to_string()};
    });
    auto du = catalog_downup_010();
    auto dua = du.algebra();
    run("downup_010: registered mu is a graded automorphism", [&] {
        auto chk = check_automorphism(dua, *du.known_nakayama);
        return std::pair{bool(chk), chk.report};
    });
    run("downup_010: 1/h(t) is a polynomial of degree l = 4", [&] {
        auto g = inverse_series(dua->rewrite().hilbert_prefix());
        int deg = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] != 0) deg = static_cast<int>(i);
        bool ok = deg == 4 && g.size() > 5;
        std::string s;
        for (auto v : g) s += (s.empty() ? "" : ",") + std::to_string(v);
        return std::pair{ok, "1/h = " + s};
    });
    run("downup_010: det^2 rule agrees with xi_c -> c^l", [&] {
        const FieldSpec& f = dua->field();
        bool ok = true;
        for (int k = 0; k < 4; ++k) {
            Scalar c = Scalar::zeta(f).pow(k);
            auto s = xi(dua, c);
            Scalar det = s.matrix().determinant();
            ok = ok && det * det == c.pow(4) && hdet_lookup(dua, s).value == c.pow(4);
        }
        return std::pair{ok, std::string("checked c = 1, z, z^2, z^3")};
    });
    run("downup_010: twist by sigma is consistent with a CY twist", [&] {
        auto v = verify_hi2(dua, {du.automorphism(dua, "sigma")});
        return std::pair{v.equal, "rhs = " + v.rhs};
    });
    run("downup_010: registered mu is central among listed automorphisms", [&] {
        std::vector<GradedAutomorphism> fam;
        for (const auto& na : du.automorphisms) fam.push_back(du.automorphism(dua, na.name));
        auto v = verify_center(dua, fam);
        return std::pair{v.equal, v.lhs};
    });
    run("downup_010: quotient by xy - yx reproduces mu = xi_-1", [&] {
        auto x = dua->gen(0), y = dua->gen(1);
        auto v = verify_quotient(dua, x * y - y * x);
        return std::pair{v.equal, v.lhs + " vs " + v.rhs};
    });
    return out;
}

}  // namespace skewcy

#endif
