#include "legdef/json_io.hpp"

#include <algorithm>

namespace legdef {

Rat rat_from_json(const njson& j) {
    if (j.is_number_integer()) return Rat(long(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw std::invalid_argument("rational expected as integer or \"a/b\" string");
}

njson rat_to_json(const Rat& r) { return rat_to_string(r); }

Branch branch_from_json(const njson& j, int default_trunc) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw std::invalid_argument("branch expects {\"x\": ..., \"y\": ...}");
    int trunc = j.value("trunc", default_trunc);
    Branch b;
    b.x = TruncSeries::parse(j.at("x").get<std::string>(), trunc);
    b.y = TruncSeries::parse(j.at("y").get<std::string>(), trunc);
    b.normalized = false;
    b.exact = true;
    return b;
}

PlaneCurve curve_from_json(const njson& j, int default_trunc) {
    PlaneCurve c;
    if (j.is_array()) {
        for (auto& e : j) c.branches.push_back(branch_from_json(e, default_trunc));
        return c;
    }
    if (!j.is_object()) throw std::invalid_argument("curve expects an object or a branch array");
    if (j.contains("equation"))
        c.equation = MultiPoly::parse(j.at("equation").get<std::string>(), {"x", "y"});
    if (j.contains("branches"))
        for (auto& e : j.at("branches")) c.branches.push_back(branch_from_json(e, default_trunc));
    if (!c.equation && c.branches.empty())
        throw std::invalid_argument("curve needs \"equation\" or \"branches\"");
    return c;
}

ContactTransform transform_from_json(const njson& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("transform expects {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "scaling")
        return ContactTransform::scaling(rat_from_json(j.at("lambda")), rat_from_json(j.at("mu")));
    if (kind == "paraboloidal")
        return ContactTransform::paraboloidal(rat_from_json(j.at("a")), rat_from_json(j.at("b")),
                                              rat_from_json(j.at("c")), rat_from_json(j.at("d")));
    if (kind == "rho") return ContactTransform::rho(rat_from_json(j.at("lambda")));
    if (kind == "vertical") {
        std::vector<std::string> xyp{"x", "y", "p"};
        return ContactTransform::vertical(MultiPoly::parse(j.at("X").get<std::string>(), xyp),
                                          MultiPoly::parse(j.at("Y").get<std::string>(), xyp),
                                          MultiPoly::parse(j.at("P").get<std::string>(), xyp));
    }
    if (kind == "composite") {
        std::vector<ContactTransform> parts;
        for (auto& e : j.at("parts")) parts.push_back(transform_from_json(e));
        return ContactTransform::composite(std::move(parts));
    }
    throw std::invalid_argument("unknown transform kind: " + kind);
}

njson semigroup_to_json(const SemigroupData& s) {
    njson j;
    j["generators"] = s.generators;
    j["conductor"] = s.conductor;
    j["gaps"] = s.gaps;
    return j;
}

njson diagram_to_json(const NewtonDiagram& d) {
    njson j;
    j["vertices"] = njson::array();
    for (auto& [i, k] : d.vertices) j["vertices"].push_back({i, k});
    j["faces"] = njson::array();
    for (auto& f : d.faces) {
        njson jf;
        jf["u"] = f.u;
        jf["v"] = f.v;
        jf["d"] = f.d;
        jf["poly"] = f.poly.str();
        j["faces"].push_back(jf);
    }
    return j;
}

njson equising_to_json(const EquisingClass& c) {
    njson j;
    j["char_exponents"] = c.exponents;
    j["intersections"] = c.intersections;
    return j;
}

std::string singular_text(const RelConormalIdeal& ideal, const MultiPoly& F) {
    std::string vars;
    for (auto& v : ideal.ring_vars) {
        if (!vars.empty()) vars += ",";
        vars += v;
    }
    std::string out = "ring r=0,(" + vars + "),dp;\n";
    out += "poly F=" + F.str() + ";\n";
    out += "ideal J=";
    const auto& gens = *ideal.generators.reduced_groebner;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ",\n";
        out += gens[i].str();
    }
    out += ";\n";
    return out;
}

std::string ascii_diagram(const NewtonDiagram& d) {
    int imax = 0, jmax = 0;
    for (auto& [i, j] : d.support) {
        imax = std::max(imax, i);
        jmax = std::max(jmax, j);
    }
    std::string out;
    for (int j = jmax; j >= 0; --j) {
        std::string row = std::to_string(j);
        while (row.size() < 3) row += ' ';
        row += "|";
        for (int i = 0; i <= imax; ++i) {
            bool vert = std::find(d.vertices.begin(), d.vertices.end(), std::make_pair(i, j)) !=
                        d.vertices.end();
            bool supp = std::find(d.support.begin(), d.support.end(), std::make_pair(i, j)) !=
                        d.support.end();
            row += vert ? 'O' : (supp ? '*' : '.');
        }
        out += row + "\n";
    }
    out += "   +";
    for (int i = 0; i <= imax; ++i) out += '-';
    out += "\n";
    return out;
}

}  // namespace legdef
