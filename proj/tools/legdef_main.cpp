#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "legdef/deform.hpp"
#include "legdef/json_io.hpp"

using namespace legdef;

namespace {

struct Options {
    std::string equation, branches, equation2, branches2, transform;
    std::string space_vars, params, xi_vars;
    std::string format = "json";
    int truncation = 0;
    unsigned seed = 1;
    bool conormal_sub = false;
    bool list = false;
    std::vector<std::string> items;
};

struct ParseFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input-side failures exit with 2, compute-side precondition failures with 3.
MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    try {
        return MultiPoly::parse(text, vars);
    } catch (const std::exception& e) {
        throw ParseFail(e.what());
    }
}

int default_trunc(const Options& o) {
    if (o.truncation > 0) return o.truncation;
    if (const char* env = std::getenv("LEGDEF_TRUNCATION")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    return 64;
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

PlaneCurve load_curve(const Options& o, const std::string& eq, const std::string& br) {
    try {
        njson j;
        if (!br.empty()) {
            j = njson::parse(br);
            if (j.is_object() && !eq.empty()) j["equation"] = eq;
            if (j.is_array() && !eq.empty()) j = njson{{"equation", eq}, {"branches", j}};
        } else if (!eq.empty()) {
            j = njson{{"equation", eq}};
        } else {
            throw std::invalid_argument("provide --equation or --branches");
        }
        return curve_from_json(j, default_trunc(o));
    } catch (const std::exception& e) {
        throw ParseFail(e.what());
    }
}

void emit(const njson& j) { std::cout << j.dump(2) << "\n"; }

njson branch_json(const TruncSeries& x, const TruncSeries& y) {
    return njson{{"x", x.str()}, {"y", y.str()}};
}

int cmd_newton(const Options& o) {
    MultiPoly f = parse_poly(o.equation, {"x", "y"});
    NewtonDiagram d = newton_diagram(f);
    if (o.format == "json") {
        njson j{{"schema", 1}};
        j.update(diagram_to_json(d));
        emit(j);
    } else {
        for (auto& face : d.faces)
            std::cout << "face (" << face.u << "," << face.v << ";" << face.d
                      << "): " << face.poly.str() << "\n";
        std::cout << ascii_diagram(d);
    }
    return 0;
}

int cmd_classify(const Options& o) {
    MultiPoly f = parse_poly(o.equation, {"x", "y"});
    Classification cl = classify(f);
    std::string kind = cl.kind == CurveClass::SQH   ? "SQH"
                       : cl.kind == CurveClass::NND ? "NND"
                                                    : "degenerate";
    if (o.format == "json") {
        emit(njson{{"schema", 1}, {"class", kind}, {"reason", cl.reason}});
    } else {
        std::cout << kind << ": " << cl.reason << "\n";
    }
    return 0;
}

int cmd_generic(const Options& o) {
    PlaneCurve c = load_curve(o, o.equation, o.branches);
    GenericityReport r = is_generic(c);
    if (o.format == "json") {
        emit(njson{{"schema", 1}, {"generic", r.generic}, {"witness", r.witness}});
    } else {
        std::cout << (r.generic ? "generic" : "not generic") << ": " << r.witness << "\n";
    }
    return 0;
}

int cmd_conormal(const Options& o) {
    if (!o.space_vars.empty()) {
        std::vector<std::string> space = split_names(o.space_vars);
        std::vector<std::string> params = split_names(o.params);
        std::vector<std::string> xi = split_names(o.xi_vars);
        if (xi.empty()) {
            const char* def[] = {"u", "v", "w"};
            for (size_t i = 0; i < space.size(); ++i)
                xi.push_back(i < 3 ? def[i] : "xi" + std::to_string(i + 1));
        }
        std::vector<std::string> all = space;
        all.insert(all.end(), params.begin(), params.end());
        MultiPoly F = parse_poly(o.equation, all);
        RelConormalIdeal ideal = relative_conormal_ideal(F, space, xi, params);
        if (o.format == "singular") {
            std::cout << singular_text(ideal, F);
        } else if (o.format == "json") {
            njson gens = njson::array();
            for (auto& g : *ideal.generators.reduced_groebner) gens.push_back(g.str());
            emit(njson{{"schema", 1},
                       {"ring", ideal.ring_vars},
                       {"xi_homogeneous", xi_homogeneous(ideal)},
                       {"generators", gens}});
        } else {
            for (auto& g : *ideal.generators.reduced_groebner) std::cout << g.str() << "\n";
        }
        return 0;
    }
    PlaneCurve c = load_curve(o, o.equation, o.branches);
    if (c.branches.empty()) c.branches = branches_of(*c.equation);
    LegendrianCurve L = conormal_of(c);
    GenericPositionReport gp = generic_position(L);
    if (o.format == "json") {
        njson j{{"schema", 1}, {"generic_position", gp.generic}, {"branches", njson::array()}};
        for (auto& b : L.branches)
            j["branches"].push_back(
                njson{{"x", b.x.str()}, {"y", b.y.str()}, {"p", b.p.str()}});
        emit(j);
    } else {
        for (auto& b : L.branches)
            std::cout << "x = " << b.x.str() << "\ny = " << b.y.str() << "\np = " << b.p.str()
                      << "\n";
        std::cout << (gp.generic ? "generic position" : "not in generic position") << "\n";
    }
    return 0;
}

int cmd_semigroup(const Options& o) {
    PlaneCurve c = load_curve(o, o.equation, o.branches);
    if (c.branches.empty()) c.branches = branches_of(*c.equation);
    njson out{{"schema", 1}, {"branches", njson::array()}};
    for (size_t i = 0; i < c.branches.size(); ++i) {
        std::vector<TruncSeries> gens;
        if (o.conormal_sub) {
            PlaneCurve one;
            one.branches = {c.branches[i]};
            LegendrianCurve L = conormal_of(one);
            gens = {L.branches[0].x, L.branches[0].y, L.branches[0].p};
        } else {
            Branch nb = normalize_branch(c.branches[i]);
            gens = {nb.x, nb.y};
        }
        SemigroupData s = semigroup_of_subring(gens);
        if (o.format == "json") {
            out["branches"].push_back(semigroup_to_json(s));
        } else {
            std::cout << "generators {";
            for (size_t k = 0; k < s.generators.size(); ++k)
                std::cout << (k ? "," : "") << s.generators[k];
            std::cout << "} conductor " << s.conductor << "\n";
        }
    }
    if (o.format == "json") emit(out);
    return 0;
}

int cmd_contact_act(const Options& o) {
    ContactTransform T = [&] {
        try {
            return transform_from_json(njson::parse(o.transform));
        } catch (const std::exception& e) {
            throw ParseFail(e.what());
        }
    }();
    PlaneCurve c = load_curve(o, o.equation, o.branches);
    PlaneCurve image = plane_action(T, c);
    PreservationReport pr = equisingularity_preservation_test(T, c);
    std::string status = pr.status == PreservationReport::Status::Passed   ? "passed"
                         : pr.status == PreservationReport::Status::Failed ? "failed"
                                                                           : "skipped";
    if (o.format == "json") {
        njson j{{"schema", 1}, {"branches", njson::array()}};
        for (auto& b : image.branches) j["branches"].push_back(branch_json(b.x, b.y));
        if (image.equation) j["equation"] = image.equation->str();
        j["preservation"] = njson{{"status", status}, {"reason", pr.reason}};
        emit(j);
    } else {
        for (auto& b : image.branches)
            std::cout << "x = " << b.x.str() << "\ny = " << b.y.str() << "\n";
        if (image.equation) std::cout << "equation: " << image.equation->str() << "\n";
        std::cout << "preservation " << status << ": " << pr.reason << "\n";
    }
    return 0;
}

int cmd_equisingular(const Options& o) {
    PlaneCurve a = load_curve(o, o.equation, o.branches);
    PlaneCurve b = load_curve(o, o.equation2, o.branches2);
    EquisingClass ca = equising_class(a), cb = equising_class(b);
    bool eq = equisingular_equal(ca, cb);
    if (o.format == "json") {
        emit(njson{{"schema", 1},
                   {"first", equising_to_json(ca)},
                   {"second", equising_to_json(cb)},
                   {"equal", eq}});
    } else {
        std::cout << (eq ? "equisingular" : "not equisingular") << "\n";
    }
    return 0;
}

int cmd_deform_basis(const Options& o) {
    MultiPoly f = parse_poly(o.equation, {"x", "y"});
    DeformSetup s = deform_setup(f);
    SemiuniversalDeformation es = es_arrow_basis(s);
    njson basis = njson::array();
    for (auto& r : es.reps) basis.push_back(r.str());
    if (o.format == "json") {
        emit(njson{{"schema", 1}, {"dimension", es.dimension}, {"basis", basis}});
    } else {
        std::cout << "dimension " << es.dimension << "\n";
        for (auto& r : es.reps) std::cout << r.str() << "\n";
    }
    return 0;
}

int cmd_semiuniversal(const Options& o) {
    MultiPoly f = parse_poly(o.equation, {"x", "y"});
    DeformSetup s = deform_setup(f);
    SemiuniversalDeformation q = quotient_basis(s);
    std::string g = q.display.rfind("G = ", 0) == 0 ? q.display.substr(4) : q.display;
    njson basis = njson::array();
    for (auto& r : q.reps) basis.push_back(r.str());
    if (o.format == "json") {
        emit(njson{{"schema", 1}, {"dimension", q.dimension}, {"basis", basis}, {"G", g}});
    } else {
        std::cout << "dimension " << q.dimension << "\n" << q.display << "\n";
    }
    return 0;
}

// ---- golden examples -------------------------------------------------------

struct Golden {
    std::string id;
    std::string (*run)(unsigned seed);  // empty string on pass, reason on fail
};

std::string golden_final_newton(unsigned) {
    MultiPoly f = MultiPoly::parse("(y^3+x^7)*(y^3+x^10)", {"x", "y"});
    NewtonConditions cond = es_monomial_conditions(f);
    if (cond.faces.size() != 2) return "expected 2 faces";
    auto& a = cond.faces[0];
    auto& b = cond.faces[1];
    if (!(a.u == 3 && a.v == 7 && a.d == 42)) return "first face is not 3i+7j >= 42";
    if (!(b.u == 3 && b.v == 10 && b.d == 51)) return "second face is not 3i+10j >= 51";
    return "";
}

std::string golden_final_mu(unsigned) {
    MultiPoly f = MultiPoly::parse("(y^3+x^7)*(y^3+x^10)", {"x", "y"});
    DeformSetup s = deform_setup(f);
    SemiuniversalDeformation q = quotient_basis(s);
    if (q.dimension != 3) return "dimension " + std::to_string(q.dimension) + " != 3";
    // the published representatives must map to a basis mod the mu-ideal span
    MuIdeal mu = ideal_mu(s);
    Echelon span = jet_span(mu.generators, s.jets);
    std::vector<QVec> rows = span.rows;
    int before = span.rank();
    for (const char* m : {"x^3*y^5", "x^5*y^4", "x^14*y"})
        rows.push_back(s.jets.to_vec(MultiPoly::parse(m, {"x", "y"})));
    if (echelon(rows, s.jets.dim()).rank() != before + 3)
        return "published monomials do not have rank 3 mod the mu ideal";
    return "";
}

std::string golden_final_es(unsigned) {
    MultiPoly f = MultiPoly::parse("(y^3+x^7)*(y^3+x^10)", {"x", "y"});
    DeformSetup s = deform_setup(f);
    SemiuniversalDeformation es = es_arrow_basis(s);
    std::vector<std::string> got;
    for (auto& r : es.reps) got.push_back(r.str());
    std::sort(got.begin(), got.end());
    std::vector<std::string> want = {"x^11*y^2", "x^12*y^2", "x^14*y", "x^15*y",
                                     "x^16*y",   "x^3*y^5",  "x^5*y^4"};
    if (got != want || es.dimension != 7) return "basis differs from the published display";
    return "";
}

std::string golden_ex51(unsigned) {
    MultiPoly f = MultiPoly::parse("y^3-x^10", {"x", "y"});
    PlaneCurve c;
    c.equation = f;
    c.branches = branches_of(f, 40);
    LegendrianCurve L = conormal_of(c);
    SemigroupData s = semigroup_of_subring({L.branches[0].x, L.branches[0].y, L.branches[0].p});
    if (s.conductor != 12) return "conductor != 12";
    for (int n : {3, 6, 7, 9, 10})
        if (!s.contains(n)) return "missing " + std::to_string(n);
    for (int n : {1, 2, 4, 5, 8, 11})
        if (s.contains(n)) return "spurious " + std::to_string(n);
    // deformed y = t^10 + t^11: the subring orders must now reach 11
    Branch b;
    b.x = TruncSeries::parse("t^3", 40);
    b.y = TruncSeries::parse("t^10+t^11", 40);
    PlaneCurve one;
    one.branches = {b};
    LegendrianCurve Ld = conormal_of(one);
    SemigroupData sd = semigroup_of_subring({Ld.branches[0].x, Ld.branches[0].y, Ld.branches[0].p});
    if (!sd.contains(11)) return "deformed subring misses order 11";
    return "";
}

std::string golden_ex45b(unsigned) {
    std::vector<std::string> xyp{"x", "y", "p"};
    ContactTransform T = ContactTransform::vertical(MultiPoly::parse("x+p", xyp),
                                                    MultiPoly::parse("y+1/2*p^2", xyp),
                                                    MultiPoly::parse("p", xyp));
    MultiPoly f = MultiPoly::parse("y^3-x^7", {"x", "y"});
    PlaneCurve c;
    c.equation = f;
    PlaneCurve image = plane_action(T, c);
    if (image.branches.size() != 1) return "expected a single branch";
    TruncSeries ex = TruncSeries::parse("t^3+7/3*t^4", image.branches[0].x.trunc);
    TruncSeries ey = TruncSeries::parse("t^7+49/18*t^8", image.branches[0].y.trunc);
    if (!image.branches[0].x.same_up_to_trunc(ex)) return "image x differs";
    if (!image.branches[0].y.same_up_to_trunc(ey)) return "image y differs";
    PreservationReport pr = equisingularity_preservation_test(T, c);
    if (pr.status != PreservationReport::Status::Passed) return "preservation: " + pr.reason;
    std::vector<int> want{3, 7};
    if (branch_invariants(c.branches.empty() ? branches_of(f)[0] : c.branches[0]).char_exps != want)
        return "source char exponents differ";
    Branch ib = image.branches[0];
    ib.exact = false;
    if (branch_invariants(ib).char_exps != want) return "image char exponents differ";
    return "";
}

std::string golden_routine(unsigned seed) {
    std::vector<std::string> space{"x", "y", "z"}, xi{"u", "v", "w"}, params{"s"};
    std::vector<std::string> all{"x", "y", "z", "s"};
    MultiPoly F = MultiPoly::parse("z^2+y^3+s*x^4", all);
    RelConormalIdeal ideal = relative_conormal_ideal(F, space, xi, params);
    if (!xi_homogeneous(ideal)) return "a generator is not xi-homogeneous";
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(-6, 6);
    auto nonzero = [&]() -> Rat {
        int v = 0;
        while (v == 0) v = pick(rng);
        return Rat(v) / Rat(std::abs(pick(rng)) + 1);
    };
    for (int k = 0; k < 5; ++k) {
        Rat m = nonzero(), cc = nonzero(), sv = nonzero();
        // witness family on the fibre {x = 0}: (0, -m^2, m^3) with
        // conormal direction (0, 3cm^4, 2cm^3)
        std::map<std::string, Rat> pt{{"x", Rat(0)},           {"y", -m * m},
                                      {"z", m * m * m},        {"u", Rat(0)},
                                      {"v", 3 * cc * m * m * m * m},
                                      {"w", 2 * cc * m * m * m},
                                      {"s", sv}};
        for (auto& g : *ideal.generators.reduced_groebner)
            if (g.evaluated(pt) != 0) return "generator " + g.str() + " does not vanish";
    }
    return "";
}

const Golden kGolden[] = {
    {"final-newton", golden_final_newton}, {"final-mu", golden_final_mu},
    {"final-es", golden_final_es},         {"ex51-semigroup", golden_ex51},
    {"ex45b-action", golden_ex45b},        {"routine-relative-conormal", golden_routine},
};

int cmd_paper_examples(const Options& o) {
    if (o.list) {
        for (auto& g : kGolden) std::cout << g.id << "\n";
        return 0;
    }
    bool all_pass = true;
    for (auto& g : kGolden) {
        if (!o.items.empty() &&
            std::find(o.items.begin(), o.items.end(), g.id) == o.items.end())
            continue;
        std::string reason;
        try {
            reason = g.run(o.seed);
        } catch (const std::exception& e) {
            reason = e.what();
        }
        if (reason.empty()) {
            std::cout << "PASS " << g.id << "\n";
        } else {
            std::cout << "FAIL " << g.id << ": " << reason << "\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian plane-curve deformation toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, text or singular");
        sub->add_option("--truncation", o.truncation, "series truncation order");
        sub->add_option("--seed", o.seed, "seed for randomized checks");
        return sub;
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--equation", o.equation, "polynomial in x, y");
        sub->add_option("--branches", o.branches, "JSON branch list");
        return sub;
    };

    int (*runner)(const Options&) = nullptr;
    auto wire = [&](CLI::App* sub, int (*fn)(const Options&)) {
        sub->callback([&runner, fn] { runner = fn; });
        return sub;
    };

    wire(add_input(add_common(app.add_subcommand("newton", "Newton diagram of an equation"))),
         cmd_newton);
    wire(add_input(add_common(app.add_subcommand("classify", "SQH / NND / degenerate"))),
         cmd_classify);
    wire(add_input(add_common(app.add_subcommand("generic", "genericity test"))), cmd_generic);
    {
        auto* sub = add_input(add_common(
            app.add_subcommand("conormal", "conormal lift or relative conormal ideal")));
        sub->add_option("--space-vars", o.space_vars, "comma-separated ambient variables");
        sub->add_option("--params", o.params, "comma-separated deformation parameters");
        sub->add_option("--xi-vars", o.xi_vars, "comma-separated conormal coordinates");
        wire(sub, cmd_conormal);
    }
    {
        auto* sub = add_input(add_common(
            app.add_subcommand("semigroup", "value semigroup of the branch subring")));
        sub->add_flag("--conormal", o.conormal_sub, "include p = dy/dx in the subring");
        wire(sub, cmd_semigroup);
    }
    {
        auto* sub = add_input(
            add_common(app.add_subcommand("contact-act", "apply a contact transformation")));
        sub->add_option("--transform", o.transform, "JSON transform description")->required();
        wire(sub, cmd_contact_act);
    }
    {
        auto* sub = add_input(
            add_common(app.add_subcommand("equisingular", "compare equisingularity classes")));
        sub->add_option("--equation2", o.equation2, "second curve equation");
        sub->add_option("--branches2", o.branches2, "second curve branches");
        wire(sub, cmd_equisingular);
    }
    wire(add_input(add_common(
             app.add_subcommand("deform-basis", "equisingularity-ideal quotient basis"))),
         cmd_deform_basis);
    wire(add_input(add_common(
             app.add_subcommand("semiuniversal", "semiuniversal equisingular deformation"))),
         cmd_semiuniversal);
    {
        auto* sub = add_common(app.add_subcommand("paper-examples", "golden example suite"));
        sub->add_flag("--list", o.list, "list item ids");
        sub->add_option("items", o.items, "item ids to run");
        wire(sub, cmd_paper_examples);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (o.format != "json" && o.format != "text" && o.format != "singular") {
        std::cerr << "unknown format: " << o.format << "\n";
        return 2;
    }

    try {
        return runner(o);
    } catch (const ParseFail& e) {
        std::cerr << "input parse error: " << e.what() << "\n";
        return 2;
    } catch (const njson::parse_error& e) {
        std::cerr << "input parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
