// skewcy: command-line front end for presentations, Nakayama automorphisms, homological
// determinants and the identity verifiers.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewcy/catalog.hpp"

using namespace skewcy;
using Json = nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    int degree = 0;  // 0 keeps the file's bound
    std::optional<std::uint64_t> seed;
};

struct Loaded {
    std::string source;
    PresentationFile pf;
    AlgebraPtr algebra;
};

struct Output {
    Json doc;
    std::string text;
    int status = 0;
};

Loaded load(const std::string& source, const Options& opt) {
    Loaded l;
    l.source = source;
    if (source.rfind("catalog:", 0) == 0) {
        l.pf = catalog_lookup(source.substr(8));
    } else {
        std::ifstream in(source);
        if (!in) throw Error(Errc::Usage, "cannot read '" + source + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        l.pf = parse_presentation(ss.str());
    }
    if (opt.degree > 0) l.pf.degree_bound = opt.degree;
    l.algebra = l.pf.algebra();
    return l;
}

std::uint64_t seed_of(const Options& opt, const Loaded* l = nullptr) {
    if (opt.seed) return *opt.seed;
    if (l && l->pf.seed) return *l->pf.seed;
    return kDefaultSeed;
}

Json start(const std::string& command, const Options& opt, const Loaded* l = nullptr) {
    Json d;
    d["command"] = command;
    Json in = Json::object();
    if (l) {
        in["algebra"] = l->source;
        in["name"] = l->algebra->name();
        in["field"] = l->algebra->field().to_string();
        in["degree_bound"] = l->algebra->degree_bound();
    }
    d["inputs"] = in;
    d["certificate"] = nullptr;
    d["result"] = Json::object();
    d["verdict"] = nullptr;
    d["provenance"] = Json::array();
    d["seed"] = seed_of(opt, l);
    return d;
}

Json certificate_json(const Invariants& inv) {
    Json c;
    c["certified"] = inv.certified();
    c["report"] = inv.report();
    if (inv.certified()) {
        const auto& k = inv.certificate();
        c["checked_to"] = k.checked_to;
        c["global_dimension"] = k.top_degree;
        c["as_index"] = degree_to_string(k.as_index);
        c["top_word"] = k.top_word.to_string(k.dual->generators());
        c["hilbert"] = k.hilbert;
        c["dual_hilbert"] = k.dual_hilbert;
    }
    return c;
}

std::string relations_text(const AlgebraPtr& a) {
    std::string s;
    for (const auto& r : a->relations()) s += "  " + r.to_string(a->generators()) + "\n";
    return s.empty() ? "  (none)\n" : s;
}

Json relations_json(const AlgebraPtr& a) {
    Json j = Json::array();
    for (const auto& r : a->relations()) j.push_back(r.to_string(a->generators()));
    return j;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    for (auto& [part, col] : split_top_level(s, 1)) out.push_back(trim(part));
    return out;
}

std::vector<GradedAutomorphism> named(const Loaded& l, const std::string& names) {
    std::vector<GradedAutomorphism> out;
    for (const auto& n : split_names(names)) out.push_back(l.pf.automorphism(l.algebra, n));
    return out;
}

Output finish_verdict(Json d, const Verdict& v) {
    d["verdict"] = v.to_json();
    for (const auto& p : v.provenance) d["provenance"].push_back(p);
    return {d, v.to_text(), v.equal ? 0 : 1};
}

// ---------------------------------------------------------------------------

Output cmd_validate(const std::string& file, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("validate", opt, &l);
    const auto& a = l.algebra;
    std::string text = "valid presentation over " + a->field().to_string() + "\n";
    text += "generators: ";
    Json gens = Json::array();
    for (std::size_t i = 0; i < a->num_generators(); ++i) {
        std::string g = a->generators().name(i) + " " + degree_to_string(a->generators().degree(i));
        text += (i ? ", " : "") + g;
        gens.push_back(g);
    }
    text += "\nrelations:\n" + relations_text(a);
    text += "rewriting rules to degree " + std::to_string(a->degree_bound()) + ": " +
            std::to_string(a->rewrite().rules().size()) + "\n";
    Json autos = Json::object();
    for (const auto& na : l.pf.automorphisms) {
        auto chk = check_automorphism(a, na.matrix);
        autos[na.name] = chk ? "ok" : chk.report;
        text += "automorphism " + na.name + ": " + (chk ? "ok" : chk.report) + "\n";
        if (!chk) throw Error(Errc::AutomorphismValidationFailed, na.name + ": " + chk.report);
    }
    Json groups = Json::object();
    for (const auto& g : l.pf.groups) {
        SmashOptions so;
        so.seed = seed_of(opt, &l);
        so.samples_per_degree = 0;
        auto b = smash_product(a, l.pf.group(a, g.name), so);
        groups[g.name] = b.order();
        text += "group " + g.name + ": order " + std::to_string(b.order()) + "\n";
    }
    if (l.pf.known_nakayama) {
        auto chk = check_automorphism(a, *l.pf.known_nakayama);
        if (!chk) throw Error(Errc::AutomorphismValidationFailed, "registered nakayama: " + chk.report);
        text += "registered nakayama: ok\n";
    }
    d["result"] = {{"generators", gens},
                   {"relations", relations_json(a)},
                   {"rules", a->rewrite().rules().size()},
                   {"automorphisms", autos},
                   {"groups", groups}};
    return {d, text, 0};
}

Output cmd_gb(const std::string& file, int deg, Options opt) {
    opt.degree = deg;
    Loaded l = load(file, opt);
    Json d = start("gb", opt, &l);
    const auto& a = l.algebra;
    const auto& t = a->generators();
    std::string text = "Groebner basis (deglex) to degree " + std::to_string(deg) + ":\n";
    Json rules = Json::array();
    for (const auto& r : a->rewrite().rules()) {
        std::string s = r.lead.to_string(t) + " -> " + r.tail.to_string(t);
        rules.push_back(s);
        text += "  " + s + "\n";
    }
    bool conf = a->rewrite().confluent();
    text += std::string("confluent to degree bound: ") + (conf ? "yes" : "no") + "\n";
    d["result"] = {{"rules", rules}, {"confluent", conf}};
    return {d, text, 0};
}

Output cmd_hilbert(const std::string& file, int deg, Options opt) {
    opt.degree = deg;
    Loaded l = load(file, opt);
    Json d = start("hilbert", opt, &l);
    auto h = l.algebra->rewrite().hilbert_prefix();
    std::string text = "Hilbert series prefix:";
    for (auto v : h) text += " " + std::to_string(v);
    text += "\n";
    d["result"] = {{"hilbert", h}};
    return {d, text, 0};
}

Output cmd_dual(const std::string& file, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("dual", opt, &l);
    auto e = quadratic_dual(l.algebra);
    std::string pres = serialize(presentation_of(e));
    d["result"] = {{"generators", e->generators().names()}, {"relations", relations_json(e)}, {"presentation", pres}};
    return {d, pres, 0};
}

Output cmd_certify(const std::string& file, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("certify", opt, &l);
    Invariants inv(l.algebra);
    d["certificate"] = certificate_json(inv);
    std::string text = inv.certified() ? inv.certificate().statement() + "\n" : "not certified: " + inv.report() + "\n";
    d["result"] = {{"certified", inv.certified()}};
    if (inv.certified()) d["provenance"].push_back("computed-koszul");
    return {d, text, inv.certified() ? 0 : 1};
}

Output cmd_nakayama(const std::string& file, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("nakayama", opt, &l);
    Invariants inv(l.algebra);
    d["certificate"] = certificate_json(inv);
    auto mu = inv.nakayama();
    auto ell = inv.as_index();
    std::string text = "mu: " + mu.to_string() + "\n";
    text += "matrix: " + mu.matrix().to_string() + "\n";
    text += "AS index: " + degree_to_string(ell) + "\n";
    text += "source: " + inv.nakayama_provenance() + "\n";
    if (inv.certified()) text += "certificate: " + inv.certificate().statement() + "\n";
    d["result"] = {{"nakayama", mu.to_string()}, {"matrix", mu.matrix().to_string()}, {"as_index", degree_to_string(ell)}};
    d["provenance"].push_back(inv.certified() ? "computed-koszul" : "registry");
    return {d, text, 0};
}

Output cmd_hdet(const std::string& file, const std::string& names, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("hdet", opt, &l);
    d["inputs"]["auto"] = names;
    Invariants inv(l.algebra);
    d["certificate"] = certificate_json(inv);
    std::string text;
    Json res = Json::object();
    for (const auto& n : split_names(names)) {
        auto s = l.pf.automorphism(l.algebra, n);
        Sourced h = inv.hdet(s);
        text += "hdet(" + n + ") = " + h.value.to_string() + "   [" + h.provenance + "]\n";
        res[n] = h.value.to_string();
        d["provenance"].push_back(h.provenance);
    }
    d["result"] = {{"hdet", res}};
    return {d, text, 0};
}

std::string nakayama_line(const AlgebraPtr& a, Json& res) {
    Invariants inv(a);
    if (!inv.has_nakayama()) {
        res["nakayama"] = nullptr;
        return "Nakayama: unavailable (" + inv.report() + ")\n";
    }
    auto mu = inv.nakayama();
    res["nakayama"] = mu.to_string();
    res["as_index"] = degree_to_string(inv.as_index());
    return "Nakayama: " + mu.to_string() + " (AS index " + degree_to_string(inv.as_index()) + ")\n";
}

Output cmd_twist(const std::string& file, const std::string& names, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("twist", opt, &l);
    d["inputs"]["auto"] = names;
    auto tw = graded_twist(l.algebra, named(l, names));
    Json res;
    res["relations"] = relations_json(tw);
    std::string text = "twisted relations:\n" + relations_text(tw) + nakayama_line(tw, res);
    res["presentation"] = serialize(presentation_of(tw));
    d["result"] = res;
    return {d, text, 0};
}

Output cmd_ore(const std::string& file, const std::string& name, int tdeg, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("ore", opt, &l);
    d["inputs"]["auto"] = name;
    d["inputs"]["tdeg"] = tdeg;
    if (tdeg < 1) throw Error(Errc::Usage, "--tdeg must be positive");
    MultiDegree td = tdeg == 1 ? widened_t_degree(l.algebra) : MultiDegree(static_cast<std::size_t>(l.algebra->grading_rank()), 0);
    if (tdeg != 1) td.back() = tdeg;
    auto o = ore_extension(l.algebra, l.pf.automorphism(l.algebra, name), td);
    Json res;
    res["relations"] = relations_json(o);
    std::string text = "Ore extension relations:\n" + relations_text(o) + nakayama_line(o, res);
    res["presentation"] = serialize(presentation_of(o));
    d["result"] = res;
    return {d, text, 0};
}

Output cmd_tensor(const std::string& file, const std::string& file2, const Options& opt) {
    Loaded l = load(file, opt);
    Loaded l2 = load(file2, opt);
    Json d = start("tensor", opt, &l);
    d["inputs"]["algebra2"] = file2;
    auto ab = tensor_product(l.algebra, l2.algebra);
    Json res;
    res["relations"] = relations_json(ab);
    std::string text = "tensor product relations:\n" + relations_text(ab) + nakayama_line(ab, res);
    res["presentation"] = serialize(presentation_of(ab));
    d["result"] = res;
    return {d, text, 0};
}

Output cmd_normal(const std::string& file, const std::string& elem, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("normal", opt, &l);
    d["inputs"]["elem"] = elem;
    auto z = parse_expression(l.algebra->generators(), l.algebra->field(), elem);
    Invariants inv(l.algebra);
    std::optional<GradedAutomorphism> mu;
    if (inv.has_nakayama()) mu = inv.nakayama();
    auto nw = normality_witness(l.algebra, z, mu);
    Json res;
    res["normal"] = bool(nw);
    std::string text;
    if (!nw) {
        res["reason"] = nw.report;
        text = "not normal: " + nw.report + "\n";
    } else {
        res["tau"] = nw.tau->to_string();
        res["mu_eigenvalue"] = nw.eigenvalue ? Json(nw.eigenvalue->to_string()) : Json(nullptr);
        text = "normal: z a = tau(a) z with tau: " + nw.tau->to_string() + "\n";
        if (mu) text += nw.eigenvalue ? "mu(z) = " + nw.eigenvalue->to_string() + " z\n" : "z is not a mu-eigenvector\n";
    }
    d["result"] = res;
    return {d, text, nw ? 0 : 1};
}

Output cmd_quotient(const std::string& file, const std::string& elem, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("quotient", opt, &l);
    d["inputs"]["elem"] = elem;
    auto z = parse_expression(l.algebra->generators(), l.algebra->field(), elem);
    auto nw = normality_witness(l.algebra, z);
    if (!nw) throw Error(Errc::NotNormal, nw.report);
    auto q = quotient_by_normal(l.algebra, z);
    Json res;
    res["relations"] = relations_json(q.algebra);
    res["projection"] = q.projection.to_string();
    std::string text = "quotient generators: ";
    for (std::size_t i = 0; i < q.algebra->num_generators(); ++i) text += (i ? ", " : "") + q.algebra->generators().name(i);
    text += "\nquotient relations:\n" + relations_text(q.algebra) + nakayama_line(q.algebra, res);
    res["presentation"] = serialize(presentation_of(q.algebra));
    d["result"] = res;
    return {d, text, 0};
}

Output cmd_smash(const std::string& file, const std::string& group, const Options& opt) {
    Loaded l = load(file, opt);
    Json d = start("smash", opt, &l);
    d["inputs"]["group"] = group;
    SmashOptions so;
    so.seed = seed_of(opt, &l);
    auto b = smash_product(l.algebra, l.pf.group(l.algebra, group), so);
    Json elems = Json::array(), table = Json::array();
    std::string text = "group of order " + std::to_string(b.order()) + "\n";
    for (std::size_t g = 0; g < b.order(); ++g) {
        elems.push_back(b.group()[g].matrix().to_string());
        text += "  g" + std::to_string(g) + " = " + b.group()[g].matrix().to_string() + "\n";
    }
    text += "multiplication table:\n";
    for (const auto& row : b.table()) {
        table.push_back(row);
        text += " ";
        for (int k : row) text += " g" + std::to_string(k);
        text += "\n";
    }
    text += "associativity sampled with seed " + std::to_string(so.seed) + ": ok\n";
    d["result"] = {{"order", b.order()}, {"elements", elems}, {"table", table}, {"associativity", "ok"}};
    return {d, text, 0};
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string kind, file, file2, autos, autos2, group, elem;
};

Output cmd_verify(const VerifyArgs& va, const Options& opt) {
    Loaded l = load(va.file, opt);
    Json d = start("verify " + va.kind, opt, &l);
    auto need = [](const std::string& v, const char* flag) {
        if (v.empty()) throw Error(Errc::Usage, std::string("missing ") + flag);
    };
    if (va.kind == "hi3") return finish_verdict(d, verify_hi3(l.algebra));
    if (va.kind == "hi2") {
        need(va.autos, "--auto");
        d["inputs"]["auto"] = va.autos;
        return finish_verdict(d, verify_hi2(l.algebra, named(l, va.autos)));
    }
    if (va.kind == "ore-hdet") {
        need(va.autos, "--auto");
        d["inputs"]["auto"] = va.autos;
        return finish_verdict(d, verify_ore_hdet(l.algebra, l.pf.automorphism(l.algebra, va.autos)));
    }
    if (va.kind == "center") {
        std::vector<GradedAutomorphism> fam;
        if (va.autos.empty()) {
            for (const auto& na : l.pf.automorphisms) fam.push_back(l.pf.automorphism(l.algebra, na.name));
        } else {
            fam = named(l, va.autos);
        }
        d["inputs"]["auto"] = va.autos.empty() ? "(all named)" : va.autos;
        return finish_verdict(d, verify_center(l.algebra, fam));
    }
    if (va.kind == "hi1") {
        need(va.group, "--group");
        d["inputs"]["group"] = va.group;
        SmashOptions so;
        so.seed = seed_of(opt, &l);
        return finish_verdict(d, verify_hi1_cy(l.algebra, l.pf.group(l.algebra, va.group), so));
    }
    if (va.kind == "tensor") {
        need(va.file2, "second algebra");
        Loaded l2 = load(va.file2, opt);
        d["inputs"]["algebra2"] = va.file2;
        auto s = va.autos.empty() ? identity_automorphism(l.algebra) : l.pf.automorphism(l.algebra, va.autos);
        auto t = va.autos2.empty() ? identity_automorphism(l2.algebra) : l2.pf.automorphism(l2.algebra, va.autos2);
        return finish_verdict(d, verify_tensor(l.algebra, l2.algebra, s, t));
    }
    if (va.kind == "quotient" || va.kind == "descent") {
        need(va.elem, "--elem");
        d["inputs"]["elem"] = va.elem;
        auto z = parse_expression(l.algebra->generators(), l.algebra->field(), va.elem);
        if (va.kind == "quotient") return finish_verdict(d, verify_quotient(l.algebra, z));
        need(va.autos, "--auto");
        d["inputs"]["auto"] = va.autos;
        return finish_verdict(d, verify_hdet_descent(l.algebra, z, l.pf.automorphism(l.algebra, va.autos)));
    }
    throw Error(Errc::Usage, "unknown identity '" + va.kind + "'");
}

// catalog -----------------------------------------------------------------

Output cmd_catalog_list(const Options& opt) {
    Json d = start("catalog list", opt);
    Json res = Json::array();
    std::string text;
    for (const auto& e : catalog()) {
        res.push_back({{"name", e.name}, {"usage", e.usage}, {"description", e.description}});
        text += e.usage + "\n    " + e.description + "\n";
    }
    d["result"] = {{"entries", res}};
    return {d, text, 0};
}

Output cmd_catalog_show(const std::string& name, const Options& opt) {
    PresentationFile pf = catalog_lookup(name);
    if (opt.degree > 0) pf.degree_bound = opt.degree;
    Json d = start("catalog show", opt);
    d["inputs"]["entry"] = name;
    std::string pres = serialize(pf);
    d["result"] = {{"presentation", pres}};
    if (pf.has_known()) d["provenance"].push_back("registry");
    return {d, pres, 0};
}

Output cmd_catalog_selftest(const Options& opt) {
    Json d = start("catalog selftest", opt);
    Json res = Json::array();
    std::string text;
    bool all = true;
    for (const auto& c : catalog_selftest()) {
        all = all && c.passed;
        res.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        text += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + c.detail + ")\n";
    }
    d["result"] = {{"checks", res}, {"all_passed", all}};
    return {d, text, all ? 0 : 1};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skewcy: Nakayama automorphisms and homological identities of graded algebras"};
    app.require_subcommand(1);
    Options opt;
    auto common = [&](CLI::App* s) {
        s->add_flag("--json", opt.json, "emit one JSON document");
        s->add_option("--degree-bound,-D", opt.degree, "override the degree bound");
        s->add_option("--seed", opt.seed, "sampling seed");
    };
    std::string file, file2, names, names2, group, elem, entry;
    int deg = 8, tdeg = 1;
    std::function<Output()> run;

    auto file_cmd = [&](const char* n, const char* help) {
        auto s = app.add_subcommand(n, help);
        s->add_option("file", file, "presentation file or catalog:NAME")->required();
        common(s);
        return s;
    };
    file_cmd("validate", "parse and validate a presentation")->callback([&] { run = [&] { return cmd_validate(file, opt); }; });
    auto gb = file_cmd("gb", "truncated Groebner basis");
    gb->add_option("--deg", deg, "completion degree");
    gb->callback([&] { run = [&] { return cmd_gb(file, deg, opt); }; });
    auto hil = file_cmd("hilbert", "Hilbert series prefix");
    hil->add_option("--deg", deg, "truncation degree");
    hil->callback([&] { run = [&] { return cmd_hilbert(file, deg, opt); }; });
    file_cmd("dual", "quadratic dual")->callback([&] { run = [&] { return cmd_dual(file, opt); }; });
    file_cmd("certify", "numerical Koszul AS-regular certificate")->callback([&] { run = [&] { return cmd_certify(file, opt); }; });
    file_cmd("nakayama", "Nakayama automorphism and AS index")->callback([&] { run = [&] { return cmd_nakayama(file, opt); }; });
    auto hd = file_cmd("hdet", "homological determinant");
    hd->add_option("--auto", names, "automorphism name(s)")->required();
    hd->callback([&] { run = [&] { return cmd_hdet(file, names, opt); }; });
    auto tw = file_cmd("twist", "graded twist by a commuting family");
    tw->add_option("--auto", names, "one automorphism per grading coordinate")->required();
    tw->callback([&] { run = [&] { return cmd_twist(file, names, opt); }; });
    auto ore = file_cmd("ore", "Ore extension A[t; phi]");
    ore->add_option("--auto", names, "automorphism phi")->required();
    ore->add_option("--tdeg", tdeg, "degree of t (1 adds a grading coordinate)");
    ore->callback([&] { run = [&] { return cmd_ore(file, names, tdeg, opt); }; });
    auto ten = file_cmd("tensor", "tensor product");
    ten->add_option("file2", file2, "second algebra")->required();
    ten->callback([&] { run = [&] { return cmd_tensor(file, file2, opt); }; });
    auto nor = file_cmd("normal", "normality witness");
    nor->add_option("--elem", elem, "element")->required();
    nor->callback([&] { run = [&] { return cmd_normal(file, elem, opt); }; });
    auto quo = file_cmd("quotient", "quotient by a normal element");
    quo->add_option("--elem", elem, "element")->required();
    quo->callback([&] { run = [&] { return cmd_quotient(file, elem, opt); }; });
    auto sm = file_cmd("smash", "smash product with a finite group");
    sm->add_option("--group", group, "group name")->required();
    sm->callback([&] { run = [&] { return cmd_smash(file, group, opt); }; });

    auto ver = app.add_subcommand("verify", "check a homological identity");
    ver->require_subcommand(1);
    VerifyArgs va;
    for (const char* k : {"hi1", "hi2", "hi3", "ore-hdet", "center", "tensor", "quotient", "descent"}) {
        auto s = ver->add_subcommand(k, std::string("verify ") + k);
        s->add_option("file", va.file, "presentation file or catalog:NAME")->required();
        if (std::string(k) == "tensor") {
            s->add_option("file2", va.file2, "second algebra")->required();
            s->add_option("--auto2", va.autos2, "automorphism of the second factor");
        }
        s->add_option("--auto", va.autos, "automorphism name(s)");
        s->add_option("--group", va.group, "group name");
        s->add_option("--elem", va.elem, "element");
        common(s);
        std::string kind = k;
        s->callback([&, kind] {
            va.kind = kind;
            run = [&] { return cmd_verify(va, opt); };
        });
    }

    auto cat = app.add_subcommand("catalog", "built-in algebras");
    cat->require_subcommand(1);
    auto cl = cat->add_subcommand("list", "list entries");
    common(cl);
    cl->callback([&] { run = [&] { return cmd_catalog_list(opt); }; });
    auto cs = cat->add_subcommand("show", "print an entry as a presentation file");
    cs->add_option("name", entry, "entry, e.g. quantum_plane(3)")->required();
    common(cs);
    cs->callback([&] { run = [&] { return cmd_catalog_show(entry, opt); }; });
    auto ct = cat->add_subcommand("selftest", "re-derive registered facts");
    common(ct);
    ct->callback([&] { run = [&] { return cmd_catalog_selftest(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        Output out = run();
        if (opt.json)
            std::cout << out.doc.dump(2) << "\n";
        else
            std::cout << out.text;
        return out.status;
    } catch (const Error& e) {
        if (opt.json) {
            Json d;
            d["command"] = argc > 1 ? argv[1] : "";
            d["error"] = {{"code", errc_name(e.code())}, {"message", e.message()}};
            std::cout << d.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
