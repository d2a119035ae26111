#include "g2v/cli.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2v/algebra.hpp"
#include "g2v/classify.hpp"
#include "g2v/embed.hpp"
#include "g2v/singular.hpp"

namespace g2v {

namespace {

using nlohmann::json;
using K = SvType::Kind;

std::string weight_str(const Weight& w) {
    return "(" + rat_to_string(w.lambda1) + ", " + rat_to_string(w.lambda2) + ")";
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("expected two comma-separated values, got '" + s + "'");
    return {s.substr(0, comma), s.substr(comma + 1)};
}

Weight parse_weight(const std::string& s) {
    auto [a, b] = split_pair(s);
    return Weight{rat_from_string(a), rat_from_string(b)};
}

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return v;
}

GradeVector parse_grade(const std::string& s) {
    auto [a, b] = split_pair(s);
    return GradeVector{static_cast<int>(parse_long(a)), static_cast<int>(parse_long(b))};
}

std::string cmd_classify(const std::string& lw_str) {
    Weight lw = parse_weight(lw_str);
    std::vector<Finding> findings = classify(lw);
    json out;
    out["lambda"] = {rat_to_string(lw.lambda1), rat_to_string(lw.lambda2)};
    out["case"] = case_label(findings);
    json jf = json::array();
    for (const Finding& f : findings) jf.push_back(finding_to_json(f));
    out["findings"] = jf;
    return out.dump(2) + "\n";
}

std::string cmd_search(const std::string& lw_str, const std::string& grade_str) {
    Weight lw = parse_weight(lw_str);
    GradeVector g = parse_grade(grade_str);
    std::vector<ModuleVector> basis = brute_force_sv(lw, g.p1, g.p2);
    json out;
    out["lambda"] = {rat_to_string(lw.lambda1), rat_to_string(lw.lambda2)};
    out["grade"] = {g.p1, g.p2};
    json jv = json::array();
    for (const ModuleVector& v : basis) jv.push_back(to_json(v));
    out["vectors"] = jv;
    return out.dump(2) + "\n";
}

std::string cmd_diagram(const std::string& lw_str, int max_depth,
                        const std::string& format) {
    Weight lw = parse_weight(lw_str);
    EmbeddingDiagram d = build_diagram(lw, max_depth);
    if (format == "dot") return to_dot(d);
    return to_json(d).dump(2) + "\n";
}

// Accumulates one report line per check; any failure fails the suite.
struct Checker {
    std::ostringstream os;
    bool ok = true;

    void check(bool cond, const std::string& what) {
        os << (cond ? "ok: " : "FAIL: ") << what << "\n";
        if (!cond) ok = false;
    }
    void detail(const std::string& line) { os << "    " << line << "\n"; }
};

void suite_jacobi(Checker& c) {
    int bad_anti = 0;
    for (Generator x : all_generators)
        for (Generator y : all_generators)
            if (!(commutator(x, y) == -commutator(y, x))) ++bad_anti;
    c.check(bad_anti == 0, "antisymmetry on 196 generator pairs");

    int bad_jac = 0;
    for (Generator x : all_generators)
        for (Generator y : all_generators)
            for (Generator z : all_generators)
                if (!jacobiator(x, y, z).is_zero()) ++bad_jac;
    c.check(bad_jac == 0, "jacobi identity on 2744 generator triples");

    int bad_grade = 0;
    for (Generator x : all_generators)
        for (Generator y : all_generators) {
            GradeVector g = adjoint_grade(x) + adjoint_grade(y);
            LinComb xy = commutator(x, y);
            for (const auto& [gen, coeff] : xy.terms)
                if (!(adjoint_grade(gen) == g)) ++bad_grade;
            if (xy.scalar != 0 && !(g == GradeVector{0, 0})) ++bad_grade;
        }
    c.check(bad_grade == 0, "bracket grading is additive on all pairs");

    int bad_eig = 0;
    for (Generator x : all_generators) {
        GradeVector g = adjoint_grade(x);
        LinComb e1;
        e1.add(x, frac(g.p1, 2));
        LinComb e2;
        e2.add(x, frac(g.p2, 2));
        if (!(commutator(Generator::h1, x) == e1)) ++bad_eig;
        if (!(commutator(Generator::h2, x) == e2)) ++bad_eig;
    }
    c.check(bad_eig == 0, "cartan brackets are diagonal with half-grade eigenvalues");
}

void suite_parity(Checker& c, std::mt19937_64& rng, int bound) {
    const std::vector<long> dens{1, 2, 3, 4, 8};
    for (int rep = 0; rep < 10; ++rep) {
        Weight lw = sample_weight(rng, dens, 16);
        int odd_grades = 0, nonempty = 0;
        for (int p1 = 0; p1 <= bound; ++p1)
            for (int p2 = -bound; p2 <= bound; ++p2) {
                if ((p1 + p2) % 2 == 0) continue;
                ++odd_grades;
                if (!brute_force_sv(lw, p1, p2).empty()) ++nonempty;
            }
        c.check(nonempty == 0, "no singular vectors at the " + std::to_string(odd_grades) +
                                   " odd grades of " + weight_str(lw));
    }
}

// One deterministic weight satisfying the type condition, with the free
// component sampled from rng.
Weight weight_for_type(const SvType& t, std::mt19937_64& rng,
                       const std::vector<long>& dens) {
    Rational r = sample_rational(rng, dens, 16);
    switch (t.kind) {
        case K::i:
            return Weight{r + frac(1 - t.p, 2), r};
        case K::ii:
            return Weight{r, Rational(3, 4) - frac(t.p, 2)};
        case K::iii:
            return type_weight(t);
        case K::iv:
            return Weight{r, 2 - frac(t.p, 2) - r};
        case K::v:
            return Weight{Rational(5, 4) - frac(t.p, 2), r};
    }
    throw std::invalid_argument("unknown singular vector type");
}

std::vector<SvType> closed_form_configs(int bound) {
    std::vector<SvType> out;
    int bi = bound > 0 ? bound : 6;
    int bii = bound > 0 ? bound : 5;
    int biii = bound > 0 ? bound : 6;
    int biv = bound > 0 ? bound : 5;
    int bv = bound > 0 ? bound : 4;
    for (int p = 1; p <= bi; ++p) out.push_back(SvType{K::i, p, 0});
    for (int p = 1; p <= bii; ++p) out.push_back(SvType{K::ii, p, 0});
    for (int p = 1; p <= biii; ++p)
        for (int q = 1; q <= biii; ++q) {
            if (p == q || p == 2 * q) continue;
            out.push_back(SvType{K::iii, p, q});
        }
    for (int p = 1; p <= biv; ++p) out.push_back(SvType{K::iv, p, 0});
    for (int p = 1; p <= bv; ++p) out.push_back(SvType{K::v, p, 0});
    return out;
}

std::string sv_desc(const SvType& t, const Weight& lw) {
    std::string s = "type " + std::string(t.name()) + " p=" + std::to_string(t.p);
    if (t.kind == K::iii) s += " q=" + std::to_string(t.q);
    return s + " at " + weight_str(lw);
}

void suite_closed_forms(Checker& c, std::mt19937_64& rng, int bound) {
    const std::vector<long> dens{1, 2, 3, 4, 8};
    for (const SvType& t : closed_form_configs(bound)) {
        int reps = t.kind == K::iii ? 1 : 10;
        for (int rep = 0; rep < reps; ++rep) {
            Weight lw = weight_for_type(t, rng, dens);
            ModuleVector v = closed_form_sv(t, lw);
            c.check(is_singular(v), "closed form annihilated, " + sv_desc(t, lw));
        }
    }
}

bool proportional(const ModuleVector& a, const ModuleVector& b) {
    if (!(a.weight == b.weight) || a.terms.size() != b.terms.size()) return false;
    if (a.terms.empty()) return true;
    auto ia = a.terms.begin();
    auto ib = b.terms.begin();
    if (!(ia->first == ib->first) || ib->second == 0) return false;
    Rational s = ia->second / ib->second;
    for (; ia != a.terms.end(); ++ia, ++ib)
        if (!(ia->first == ib->first) || ia->second != ib->second * s) return false;
    return true;
}

void suite_oracle(Checker& c, std::mt19937_64& rng, int bound) {
    const std::vector<long> dens{1, 2, 3, 4, 8};
    for (const SvType& t : closed_form_configs(bound)) {
        if (t.kind == K::iii) continue;  // its weight always satisfies several conditions
        for (int rep = 0; rep < 10; ++rep) {
            Weight lw = weight_for_type(t, rng, dens);
            std::vector<Finding> fs = classify(lw);
            if (fs.size() != 1 || !(fs[0].sv_type == t)) continue;  // need exactly one
            GradeVector g = sv_grade(t);
            std::vector<ModuleVector> basis = brute_force_sv(lw, g.p1, g.p2);
            bool one = basis.size() == 1;
            c.check(one, "nullspace dimension 1, " + sv_desc(t, lw));
            if (one)
                c.check(proportional(basis[0], closed_form_sv(t, lw)),
                        "nullspace spans the closed form, " + sv_desc(t, lw));
        }
    }
}

void suite_diagrams(Checker& c) {
    for (const CatalogInstance& inst : catalog_instances()) {
        std::string label = catalog_label(inst);
        EmbeddingDiagram cat = catalog_diagram(inst.case_id, inst.params);
        EmbeddingDiagram dia = build_diagram(cat.nodes[0]);
        std::vector<std::string> diffs = diagram_diff(dia, cat);
        c.check(diffs.empty(), "closure matches catalog for " + label);
        for (const std::string& line : diffs) c.detail(line);
        EmbeddingDiagram again = build_diagram(cat.nodes[0]);
        c.check(to_dot(dia) == to_dot(again) &&
                    to_json(dia).dump(2) == to_json(again).dump(2),
                "serialization byte-stable for " + label);
        c.check(diagram_from_json(to_json(dia)) == dia, "JSON round-trip for " + label);
    }
}

}  // namespace

Rational sample_rational(std::mt19937_64& rng, const std::vector<long>& denominators,
                         long numerator_bound) {
    unsigned long long span = 2ULL * static_cast<unsigned long long>(numerator_bound) + 1ULL;
    long num = static_cast<long>(rng() % span) - numerator_bound;
    long den = denominators[static_cast<std::size_t>(rng() % denominators.size())];
    return frac(num, den);
}

Weight sample_weight(std::mt19937_64& rng, const std::vector<long>& denominators,
                     long numerator_bound) {
    Rational l1 = sample_rational(rng, denominators, numerator_bound);
    Rational l2 = sample_rational(rng, denominators, numerator_bound);
    return Weight{l1, l2};
}

SuiteResult run_suite(const std::string& name, unsigned long long seed, int bound) {
    Checker c;
    std::mt19937_64 rng(seed);
    if (name == "jacobi")
        suite_jacobi(c);
    else if (name == "parity")
        suite_parity(c, rng, bound > 0 ? bound : 6);
    else if (name == "closed-forms")
        suite_closed_forms(c, rng, bound);
    else if (name == "oracle")
        suite_oracle(c, rng, bound);
    else if (name == "diagrams")
        suite_diagrams(c);
    else
        throw std::invalid_argument("unknown suite '" + name + "'");
    c.os << "suite " << name << ": " << (c.ok ? "PASS" : "FAIL") << "\n";
    return {c.ok, c.os.str()};
}

CliResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact singular vectors, reducibility classification and embedding "
                 "diagrams for lowest-weight modules of the rank-2 Jacobi algebra",
                 "g2v"};
    app.require_subcommand(1);

    std::string lw_str, grade_str, type_str, format_str, suite_str;
    long p1 = 0, p2 = 0, p3 = 0, q3 = 0, p4 = 0, p5 = 0;
    int max_depth = 16;
    unsigned long long seed = 0;
    int bound = 0;

    CLI::App* c_classify =
        app.add_subcommand("classify", "reducibility findings and case label of a weight");
    c_classify->add_option("--lw", lw_str, "lowest weight <rat>,<rat>")->required();

    CLI::App* c_sv =
        app.add_subcommand("sv", "closed-form singular vector of a given type");
    c_sv->add_option("--type", type_str, "singular vector type")
        ->required()
        ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v"}));
    CLI::Option* o_p1 = c_sv->add_option("--p1", p1, "type i parameter");
    CLI::Option* o_p2 = c_sv->add_option("--p2", p2, "type ii parameter");
    CLI::Option* o_p3 = c_sv->add_option("--p3", p3, "type iii first parameter");
    CLI::Option* o_q3 = c_sv->add_option("--q3", q3, "type iii second parameter");
    CLI::Option* o_p4 = c_sv->add_option("--p4", p4, "type iv parameter");
    CLI::Option* o_p5 = c_sv->add_option("--p5", p5, "type v parameter");
    CLI::Option* o_lw_sv = c_sv->add_option(
        "--lw", lw_str, "lowest weight <rat>,<rat>; required except for type iii");

    CLI::App* c_search =
        app.add_subcommand("search", "brute-force singular vector basis at a grade");
    c_search->add_option("--lw", lw_str, "lowest weight <rat>,<rat>")->required();
    c_search->add_option("--grade", grade_str, "grade <int>,<int>")->required();

    CLI::App* c_diagram = app.add_subcommand("diagram", "embedding diagram of a weight");
    c_diagram->add_option("--lw", lw_str, "lowest weight <rat>,<rat>")->required();
    c_diagram->add_option("--max-depth", max_depth, "closure depth limit");
    c_diagram->add_option("--format", format_str, "output format")
        ->required()
        ->check(CLI::IsMember({"dot", "json"}));

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite_str, "suite name")
        ->required()
        ->check(CLI::IsMember({"jacobi", "parity", "closed-forms", "oracle", "diagrams"}));
    c_verify->add_option("--seed", seed, "sampling seed");
    c_verify->add_option("--bound", bound, "suite size bound (default per suite)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        return {code == 0 ? 0 : 2, os.str()};
    }

    try {
        if (app.got_subcommand(c_classify)) return {0, cmd_classify(lw_str)};
        if (app.got_subcommand(c_sv)) {
            SvType t;
            auto need = [&](CLI::Option* o, long v, const char* flag) -> int {
                if (o->count() == 0)
                    throw std::invalid_argument(std::string("--") + flag +
                                                " is required for type " + type_str);
                return static_cast<int>(v);
            };
            auto forbid = [&](CLI::Option* o, const char* flag) {
                if (o->count() > 0)
                    throw std::invalid_argument(std::string("--") + flag +
                                                " does not apply to type " + type_str);
            };
            if (type_str == "i") {
                t.kind = K::i;
                t.p = need(o_p1, p1, "p1");
            } else if (type_str == "ii") {
                t.kind = K::ii;
                t.p = need(o_p2, p2, "p2");
            } else if (type_str == "iii") {
                t.kind = K::iii;
                t.p = need(o_p3, p3, "p3");
                t.q = need(o_q3, q3, "q3");
            } else if (type_str == "iv") {
                t.kind = K::iv;
                t.p = need(o_p4, p4, "p4");
            } else {
                t.kind = K::v;
                t.p = need(o_p5, p5, "p5");
            }
            if (type_str != "i") forbid(o_p1, "p1");
            if (type_str != "ii") forbid(o_p2, "p2");
            if (type_str != "iii") {
                forbid(o_p3, "p3");
                forbid(o_q3, "q3");
            }
            if (type_str != "iv") forbid(o_p4, "p4");
            if (type_str != "v") forbid(o_p5, "p5");
            t.validate();
            Weight lw;
            if (o_lw_sv->count() > 0)
                lw = parse_weight(lw_str);
            else if (t.kind == K::iii)
                lw = type_weight(t);
            else
                throw std::invalid_argument("--lw is required for type " + type_str);
            ModuleVector v = closed_form_sv(t, lw);
            return {0, to_json(v).dump(2) + "\n"};
        }
        if (app.got_subcommand(c_search)) return {0, cmd_search(lw_str, grade_str)};
        if (app.got_subcommand(c_diagram))
            return {0, cmd_diagram(lw_str, max_depth, format_str)};
        if (app.got_subcommand(c_verify)) {
            SuiteResult r = run_suite(suite_str, seed, bound);
            return {r.ok ? 0 : 3, r.report};
        }
        return {2, "error: no subcommand given\n"};
    } catch (const DepthExhausted& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const std::domain_error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace g2v
