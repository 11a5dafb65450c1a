// pperm: command-line front end for the partial permutohedron library.
//
// Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 internal disagreement.

#include "pperm/combinat.hpp"
#include "pperm/ehrhart.hpp"
#include "pperm/exactmath.hpp"
#include "pperm/faces.hpp"
#include "pperm/polytope.hpp"
#include "pperm/volume.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

using json = nlohmann::json;
using namespace pperm;

namespace {

enum Exit { ok = 0, usage = 1, verify_failed = 2, disagreement = 3 };

struct Options {
    int m = 0;
    int n = 0;
    std::string method;
    bool all_methods = false;
    std::string format = "json";
    int max_m = 0;
    int max_n = 0;
    unsigned parallel = 1;
    std::string suite = "all";
    std::string which = "ex-formulas";
};

// rows for csv/tex output alongside the json document
struct Output {
    json doc;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    bool json_lines = false;  // doc is an array emitted one element per line
    int exit = ok;
};

json poly_json(const Polynomial& p, const std::string& var)
{
    json c = json::array();
    for (auto& x : p.coeffs())
        c.push_back(to_string(x));
    return {{"coeffs", c}, {"text", p.render(var)}};
}

json chain_json(const Chain& c)
{
    json a = json::array();
    for (auto& s : c.sets)
        a.push_back(s.elements());
    return a;
}

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string out;
    for (size_t i = 0; i < v.size(); ++i)
        out += (i ? sep : "") + v[i];
    return out;
}

std::string int_vec(const IntVec& v)
{
    std::vector<std::string> s;
    for (auto x : v)
        s.push_back(std::to_string(x));
    return "(" + join(s, ",") + ")";
}

void require_mn(const Options& o)
{
    if (o.m < 1 || o.n < 1)
        throw CLI::ValidationError("--m and --n must both be given and positive");
}

// ------------------------------------------------------------------ commands

Output cmd_vertices(const Options& o)
{
    require_mn(o);
    auto v = vertices(PPSpec(o.m, o.n));
    Output out;
    out.doc = {{"m", o.m}, {"n", o.n}, {"count", v.points.size()}, {"vertices", v.points}};
    for (int i = 1; i <= o.m; ++i)
        out.header.push_back("x" + std::to_string(i));
    for (auto& p : v.points) {
        std::vector<std::string> r;
        for (auto x : p)
            r.push_back(std::to_string(x));
        out.rows.push_back(r);
    }
    return out;
}

Output cmd_facets(const Options& o)
{
    require_mn(o);
    auto h = facets(PPSpec(o.m, o.n));
    Output out;
    json rows = json::array();
    for (auto& r : h.rows)
        rows.push_back({{"a", r.a}, {"b", r.b}});
    out.doc = {{"m", o.m}, {"n", o.n}, {"count", h.rows.size()}, {"inequalities", rows}};
    out.header = {"a", "b"};
    for (auto& r : h.rows)
        out.rows.push_back({int_vec(r.a), std::to_string(r.b)});
    return out;
}

Output cmd_faces(const Options& o)
{
    require_mn(o);
    Output out;
    out.json_lines = true;
    out.doc = json::array();
    out.header = {"chain", "dimension", "vertex_count"};
    for (auto& c : enumerate_chains(o.m, o.n, false)) {
        Face f = face_from_chain(c, o.m, o.n);
        auto fv = face_vertices(c, o.m, o.n);
        out.doc.push_back({{"chain", chain_json(c)}, {"dimension", f.dimension}, {"vertex_count", fv.points.size()}});
        out.rows.push_back({to_string(c), std::to_string(f.dimension), std::to_string(fv.points.size())});
    }
    return out;
}

Output cmd_fvector(const Options& o)
{
    require_mn(o);
    auto f = f_vector(o.m, o.n);
    Output out;
    out.doc = {{"m", o.m}, {"n", o.n}, {"f", f}};
    for (size_t i = 0; i < f.size(); ++i)
        out.header.push_back("f" + std::to_string(i));
    std::vector<std::string> r;
    for (auto x : f)
        r.push_back(std::to_string(x));
    out.rows.push_back(r);
    return out;
}

HMethod parse_hmethod(const std::string& s)
{
    if (s == "from_f")
        return HMethod::from_f;
    if (s == "closed")
        return HMethod::closed;
    if (s == "stellohedron")
        return HMethod::stellohedron;
    if (s == "orientation")
        return HMethod::orientation;
    throw CLI::ValidationError("unknown h-polynomial method: " + s);
}

Output cmd_hpoly(const Options& o)
{
    require_mn(o);
    std::vector<std::string> methods;
    if (o.all_methods) {
        methods = {"from_f", "closed", "orientation"};
        if (o.n >= o.m)
            methods.push_back("stellohedron");
    } else {
        methods = {o.method.empty() ? "closed" : o.method};
    }
    Output out;
    json res = json::array();
    std::optional<Polynomial> first;
    bool agree = true;
    out.header = {"method", "h"};
    for (auto& name : methods) {
        Polynomial h = h_poly(o.m, o.n, parse_hmethod(name));
        agree = agree && (!first || *first == h);
        if (!first)
            first = h;
        res.push_back({{"method", name}, {"h", poly_json(h, "t")}});
        out.rows.push_back({name, h.render("t")});
    }
    out.doc = {{"m", o.m},
               {"n", o.n},
               {"results", res},
               {"agree", agree},
               {"palindromic", is_palindromic(*first, o.m)}};
    if (!agree)
        out.exit = disagreement;
    return out;
}

std::vector<VolumeResult> volume_results(const Options& o)
{
    if (o.all_methods)
        return nvol_all_methods(o.m, o.n, o.parallel);
    VolumeMethod meth = parse_volume_method(o.method.empty() ? "recursive" : o.method);
    auto one = [&](const Rational& v) { return std::vector<VolumeResult>{{v, meth, o.m, o.n}}; };
    switch (meth) {
    case VolumeMethod::oracle: return one(Rational(nvol_oracle(o.m, o.n, o.parallel)));
    case VolumeMethod::recursive: return one(Rational(nvol_recursive(o.m, o.n)));
    case VolumeMethod::closed: return one(Rational(nvol_closed(o.m, o.n).vmn));
    case VolumeMethod::three_term: return one(Rational(nvol_three_term(o.m, o.n)));
    case VolumeMethod::draconian:
        return one(Rational(nvol_draconian(o.m, o.n, DraconianVolumeMode::general)));
    case VolumeMethod::parking:
        return one(Rational(nvol_draconian(o.m, o.n, DraconianVolumeMode::parking_count)));
    case VolumeMethod::lambda: return one(nvol_lambda(o.m, o.n, default_lambda(o.m)));
    case VolumeMethod::small_n: return one(Rational(nvol_small_n(o.m, o.n)));
    }
    throw std::logic_error("unreachable");
}

Output cmd_volume(const Options& o)
{
    require_mn(o);
    auto res = volume_results(o);
    Output out;
    json arr = json::array();
    bool agree = true;
    out.header = {"method", "value"};
    for (auto& r : res) {
        agree = agree && r.value == res.front().value;
        arr.push_back({{"method", to_string(r.method)}, {"value", to_string(r.value)}});
        out.rows.push_back({to_string(r.method), to_string(r.value)});
    }
    out.doc = {{"m", o.m}, {"n", o.n}, {"results", arr}, {"agree", agree}};
    if (!agree)
        out.exit = disagreement;
    return out;
}

bool oracle_in_reach(int m, int n) { return m <= 5 && n <= 6; }

Output cmd_ehrhart(const Options& o)
{
    require_mn(o);
    std::vector<EhrMethod> methods;
    if (o.all_methods) {
        if (oracle_in_reach(o.m, o.n))
            methods.push_back(EhrMethod::interpolate);
        if (o.n <= 3)
            methods.push_back(EhrMethod::closed_small_n);
        if (o.m <= 4 && o.n >= std::max(1, o.m - 1))
            methods.push_back(EhrMethod::closed_small_m);
        if (o.n >= o.m - 1) {
            if (o.m <= 5)
                methods.push_back(EhrMethod::draconian);
            if (o.n == o.m - 1 && o.m <= 5)
                methods.push_back(EhrMethod::parking);
            methods.push_back(EhrMethod::conjecture);
            methods.push_back(EhrMethod::recurrence);
        }
    } else {
        methods.push_back(parse_ehr_method(o.method.empty() ? "interpolate" : o.method));
    }

    std::optional<Polynomial> oracle;
    auto get_oracle = [&]() -> const std::optional<Polynomial>& {
        if (!oracle && oracle_in_reach(o.m, o.n))
            oracle = ehr_interpolate(o.m, o.n, o.parallel).poly;
        return oracle;
    };

    Output out;
    json arr = json::array();
    bool agree = true, proven_agree = true, consistent = true;
    std::optional<Polynomial> first;
    out.header = {"method", "label", "ehr"};
    for (auto meth : methods) {
        Polynomial p = ehrhart(o.m, o.n, meth, o.parallel).poly;
        json r = {{"method", to_string(meth)}, {"ehr", poly_json(p, "t")}};
        std::string label = "proved";
        if (is_conjectural(meth)) {
            label = "conjectural";
            auto& orc = get_oracle();
            std::string verdict = "unchecked";
            if (orc) {
                verdict = *orc == p ? "consistent" : "inconsistent";
                consistent = consistent && *orc == p;
            }
            r["verification"] = verdict;
        } else {
            proven_agree = proven_agree && (!first || *first == p);
            if (!first)
                first = p;
        }
        agree = agree && (!first || *first == p);
        r["label"] = label;
        arr.push_back(r);
        out.rows.push_back({to_string(meth), label, p.render("t")});
    }
    out.doc = {{"m", o.m}, {"n", o.n}, {"results", arr}, {"agree", agree}};
    if (!proven_agree)
        out.exit = disagreement;
    else if (!consistent)
        out.exit = verify_failed;
    return out;
}

// --------------------------------------------------------------------- tables

std::vector<std::string> tex_poly_cells(const Polynomial& p, const std::string& var)
{
    // constant term first, one cell per power, empty where the coefficient vanishes
    std::vector<std::string> cells;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (c == 0) {
            cells.push_back("");
            continue;
        }
        std::string s = c < 0 ? "-" : (i == 0 ? "" : "+");
        Rational a = c < 0 ? Rational(-c) : c;
        std::string mag = to_string(a);
        std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (i > 0 && a == 1)
            mag = "";
        cells.push_back(s + mag + mono);
    }
    return cells;
}

Output cmd_table(const Options& o)
{
    Output out;
    json rows = json::array();
    if (o.which == "ex-formulas" || o.which == "ex-formulas-N") {
        const bool nform = o.which == "ex-formulas";
        const int top = o.max_m > 0 ? o.max_m : (nform ? 7 : 6);
        if (top > 8)
            throw CLI::ValidationError("--max-m is capped at 8 for polynomial tables");
        const int published_rows = nform ? 7 : 6;
        const std::string var = nform ? "n" : "N";
        out.header = {"m", "polynomial", "provenance"};
        for (int m = 1; m <= top; ++m) {
            Polynomial p = nvol_poly(m, nform ? PolyVariable::n : PolyVariable::N);
            std::string prov = m <= published_rows ? "published" : "computed";
            rows.push_back({{"m", m}, {"v", poly_json(p, var)}, {"provenance", prov}});
            auto cells = tex_poly_cells(p, var);
            std::vector<std::string> r{"v(" + std::to_string(m) + ",n)="};
            r.insert(r.end(), cells.begin(), cells.end());
            out.rows.push_back(r);
        }
        out.doc = {{"table", o.which}, {"variable", var}, {"rows", rows}};
        return out;
    }
    if (o.which == "volumes") {
        const int mm = o.max_m > 0 ? o.max_m : 5, nn = o.max_n > 0 ? o.max_n : 6;
        out.header = {"m", "n", "v", "method", "provenance"};
        for (int m = 1; m <= mm; ++m)
            for (int n = 1; n <= nn; ++n) {
                BigInt v;
                std::string meth;
                if (n >= m - 1) {
                    v = nvol_recursive(m, n);
                    meth = "recursive";
                } else if (n <= 4) {
                    v = nvol_small_n(m, n);
                    meth = "small_n";
                } else if (oracle_in_reach(m, n)) {
                    v = nvol_oracle(m, n, o.parallel);
                    meth = "oracle";
                } else {
                    continue;
                }
                rows.push_back({{"m", m}, {"n", n}, {"v", v.str()}, {"method", meth}, {"provenance", "computed"}});
                out.rows.push_back({std::to_string(m), std::to_string(n), v.str(), meth, "computed"});
            }
        out.doc = {{"table", o.which}, {"rows", rows}};
        return out;
    }
    if (o.which == "ehrhart-small-m") {
        const int nn = o.max_n > 0 ? o.max_n : 6;
        out.header = {"m", "n", "ehr", "provenance"};
        for (int m = 1; m <= 4; ++m)
            for (int n = std::max(1, m - 1); n <= nn; ++n) {
                Polynomial p = ehr_closed_small_m(m, n).poly;
                rows.push_back({{"m", m}, {"n", n}, {"ehr", poly_json(p, "t")}, {"provenance", "published"}});
                out.rows.push_back({std::to_string(m), std::to_string(n), p.render("t"), "published"});
            }
        out.doc = {{"table", o.which}, {"rows", rows}};
        return out;
    }
    throw CLI::ValidationError("unknown table: " + o.which);
}

// --------------------------------------------------------------------- verify

struct Battery {
    json checks = json::array();
    std::optional<std::string> first_failure;

    void record(const std::string& name, bool pass, const std::string& detail = "")
    {
        json c = {{"check", name}, {"status", pass ? "pass" : "fail"}};
        if (!detail.empty())
            c["detail"] = detail;
        checks.push_back(c);
        if (!pass && !first_failure)
            first_failure = name + (detail.empty() ? "" : ": " + detail);
    }
    void conjecture(const std::string& name, bool consistent, const std::string& detail = "")
    {
        json c = {{"check", name}, {"status", consistent ? "consistent" : "inconsistent"}};
        if (!detail.empty())
            c["detail"] = detail;
        checks.push_back(c);
        if (!consistent && !first_failure)
            first_failure = name + (detail.empty() ? "" : ": " + detail);
    }
};

std::string mn(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

void suite_engines(Battery& b, int max_m, int max_n, unsigned workers)
{
    for (int m = 1; m <= max_m; ++m)
        for (int n = std::max(1, m - 1); n <= max_n; ++n) {
            if (m == 5 && n < 4)
                continue;
            auto res = nvol_all_methods(m, n, workers);
            bool same = std::all_of(res.begin(), res.end(), [&](auto& r) { return r.value == res.front().value; });
            b.record("volume engines " + mn(m, n), same, "v=" + to_string(res.front().value));
            if (m <= 4) {
                Polynomial e = ehr_interpolate(m, n, workers).poly;
                bool ok = ehr_draconian(m, n).poly == e && ehr_closed_small_m(m, n).poly == e;
                b.record("ehrhart engines " + mn(m, n), ok, e.render("t"));
                b.record("ehrhart leading term " + mn(m, n),
                         e.leading() * Rational(factorial(m)) == res.front().value);
            }
        }
    for (int m = 1; m <= std::min(max_m, 5); ++m)
        for (int n = 1; n <= std::min(max_n, 3); ++n)
            b.record("ehrhart small n " + mn(m, n), ehr_closed_small_n(m, n).poly == ehr_interpolate(m, n, workers).poly);
}

void suite_faces(Battery& b, int max_m, int max_n)
{
    for (int m = 1; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n) {
            auto f = f_vector(m, n);
            bool counts = f[0] == vertex_count_formula(m, n) && (m == 1 || f[m - 1] == facet_count_formula(m, n));
            b.record("f-vector counts " + mn(m, n), counts);
            auto verts = vertices(PPSpec(m, n));
            bool faces_ok = true;
            for (auto& c : enumerate_chains(m, n, false)) {
                Face face = face_from_chain(c, m, n);
                if (face_vertices(c, m, n).points != filter_vertices(verts, face.hyperplanes).points) {
                    faces_ok = false;
                    b.record("face vertices " + mn(m, n), false, to_string(c));
                    break;
                }
            }
            if (faces_ok)
                b.record("face vertices " + mn(m, n), true);
            Polynomial h = h_poly(m, n, HMethod::from_f);
            bool hp = h == h_poly(m, n, HMethod::closed) && h == h_poly(m, n, HMethod::orientation) &&
                      is_palindromic(h, m);
            if (n >= m)
                hp = hp && h == h_poly(m, n, HMethod::stellohedron);
            b.record("h-polynomial " + mn(m, n), hp, h.render("t"));
        }
    Subset a = Subset::of({1, 2, 3}), s = Subset::of({1, 2, 3, 4, 5}), c = Subset::of({1, 2, 3, 4, 5, 6, 7});
    auto n40 = face_vertices(Chain{{a, s, c}}, 10, 6).points.size();
    auto n24 = face_vertices(Chain{{Subset{}, a, s, c}}, 10, 6).points.size();
    b.record("face vertex golden 40", n40 == 40, std::to_string(n40));
    b.record("face vertex golden 24", n24 == 24, std::to_string(n24));
    for (int m = 1; m <= max_m; ++m)
        b.record("combinatorial equivalence m=" + std::to_string(m), comb_equiv_check(m, m, m + 2));
}

void suite_conjectures(Battery& b, int max_m, int max_n, unsigned workers)
{
    for (int m = 1; m <= max_m; ++m)
        for (int n = std::max(1, m - 1); n <= max_n; ++n) {
            if (!oracle_in_reach(m, n))
                continue;
            Polynomial e = ehr_interpolate(m, n, workers).poly;
            b.conjecture("ehrhart generating function " + mn(m, n), ehr_conjecture(m, n).expl1.poly == e);
            b.conjecture("ehrhart recurrence " + mn(m, n), ehr_recurrence(m, n).poly == e);
        }
    for (int n : {3, 4}) {
        auto r = conj_vmn_fit(n);
        std::string d;
        for (auto& t : r.terms)
            d += (d.empty() ? "" : "; ") + std::string("p_") + std::to_string(n) + "," + std::to_string(t.index) +
                 " = " + t.poly.render("m");
        b.conjecture("volume expansion n=" + std::to_string(n), r.status == "consistent", d);
    }
}

void suite_appendix(Battery& b, unsigned workers)
{
    for (int m : {3, 4}) {
        b.record("aux1 m=" + std::to_string(m),
                 nvol_of_vertices(aux1_vertices(m), workers) == formula_bank(FormulaBank::aux1, m));
        b.record("aux2 m=" + std::to_string(m),
                 nvol_of_vertices(aux2_vertices(m), workers) == formula_bank(FormulaBank::aux2, m));
    }
    for (int n : {4, 5})
        for (int t : {1, 2})
            b.record("aux3 n=" + std::to_string(n) + " t=" + std::to_string(t),
                     Rational(aux3_half_open_count(n, t)) == aux_lemma3(n)(Rational(t)));
}

Output cmd_verify(const Options& o)
{
    static const std::vector<std::string> suites{"engines", "faces", "conjectures", "appendix", "all"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
        throw CLI::ValidationError("unknown suite: " + o.suite);
    Battery b;
    auto run = [&](const std::string& s) { return o.suite == "all" || o.suite == s; };
    if (run("engines"))
        suite_engines(b, o.max_m > 0 ? std::min(o.max_m, 5) : 4, o.max_n > 0 ? std::min(o.max_n, 6) : 6, o.parallel);
    if (run("faces"))
        suite_faces(b, o.max_m > 0 ? o.max_m : 4, o.max_n > 0 ? o.max_n : 5);
    if (run("conjectures"))
        suite_conjectures(b, o.max_m > 0 ? o.max_m : 4, o.max_n > 0 ? o.max_n : 6, o.parallel);
    if (run("appendix"))
        suite_appendix(b, o.parallel);

    Output out;
    out.doc = {{"suite", o.suite}, {"checks", b.checks}, {"ok", !b.first_failure.has_value()}};
    out.header = {"check", "status", "detail"};
    for (auto& c : b.checks)
        out.rows.push_back({c["check"], c["status"], c.value("detail", "")});
    if (b.first_failure) {
        out.doc["first_failure"] = *b.first_failure;
        std::cerr << "verification failed: " << *b.first_failure << "\n";
        out.exit = verify_failed;
    }
    return out;
}

// --------------------------------------------------------------------- output

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

void emit(const Output& out, const std::string& format)
{
    if (format == "json") {
        if (out.json_lines)
            for (auto& x : out.doc)
                std::cout << x.dump() << "\n";
        else
            std::cout << out.doc.dump(2) << "\n";
    } else if (format == "csv") {
        std::vector<std::string> h;
        for (auto& x : out.header)
            h.push_back(csv_cell(x));
        std::cout << join(h, ",") << "\n";
        for (auto& r : out.rows) {
            std::vector<std::string> c;
            for (auto& x : r)
                c.push_back(csv_cell(x));
            std::cout << join(c, ",") << "\n";
        }
    } else {
        for (auto& r : out.rows)
            std::cout << join(r, " & ") << " \\\\\n";
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Invariants of partial permutohedra P(m,n)"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_mn = [&](CLI::App* s) {
        s->add_option("--m", o.m, "dimension m")->check(CLI::Range(1, 16));
        s->add_option("--n", o.n, "value bound n")->check(CLI::PositiveNumber);
    };
    auto add_common = [&](CLI::App* s) {
        s->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "tex"}));
        s->add_option("--parallel", o.parallel, "counting workers")->check(CLI::Range(1u, 64u));
    };

    std::map<std::string, std::function<Output(const Options&)>> handlers{
        {"vertices", cmd_vertices}, {"facets", cmd_facets}, {"faces", cmd_faces},   {"fvector", cmd_fvector},
        {"hpoly", cmd_hpoly},       {"volume", cmd_volume}, {"ehrhart", cmd_ehrhart}, {"verify", cmd_verify},
        {"table", cmd_table},
    };
    std::map<std::string, CLI::App*> subs;
    const std::map<std::string, std::string> blurbs{
        {"vertices", "vertex list of P(m,n)"},
        {"facets", "facet inequalities a.x <= b"},
        {"faces", "one JSON line per face: chain, dimension, vertex count"},
        {"fvector", "face numbers by dimension"},
        {"hpoly", "h-polynomial"},
        {"volume", "normalized volume"},
        {"ehrhart", "Ehrhart polynomial"},
        {"verify", "run a check battery"},
        {"table", "formula and value tables"},
    };
    for (auto& [name, _] : handlers) {
        auto* s = app.add_subcommand(name, blurbs.at(name));
        add_common(s);
        subs[name] = s;
    }
    for (auto name : {"vertices", "facets", "faces", "fvector", "hpoly", "volume", "ehrhart"})
        add_mn(subs[name]);
    for (auto name : {"hpoly", "volume", "ehrhart"}) {
        subs[name]->add_option("--method", o.method, "engine");
        subs[name]->add_flag("--all-methods", o.all_methods, "run every applicable engine");
    }
    for (auto name : {"verify", "table"}) {
        subs[name]->add_option("--max-m", o.max_m, "largest m")->check(CLI::PositiveNumber);
        subs[name]->add_option("--max-n", o.max_n, "largest n")->check(CLI::PositiveNumber);
    }
    subs["verify"]->add_option("--suite", o.suite, "engines, faces, conjectures, appendix or all");
    subs["table"]->add_option("--which", o.which, "ex-formulas, ex-formulas-N, volumes or ehrhart-small-m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        std::string name = app.get_subcommands().front()->get_name();
        Output out = handlers.at(name)(o);
        emit(out, o.format);
        return out.exit;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal disagreement: " << e.what() << "\n";
        return disagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return disagreement;
    }
}
