#pragma once

#include <string>

#include "json.hpp"
#include "legdef/conormal.hpp"
#include "legdef/contact.hpp"
#include "legdef/curve.hpp"

namespace legdef {

// Insertion-ordered JSON keeps output byte-deterministic.
using njson = nlohmann::ordered_json;

// Accepts an integer, a decimal-free number, or an "a/b" string.
Rat rat_from_json(const njson& j);
njson rat_to_json(const Rat& r);

// {"x": "t^3", "y": "t^10"} with optional "trunc".
Branch branch_from_json(const njson& j, int default_trunc);

// {"equation": "..."} or {"branches": [...]} or a bare branch array.
PlaneCurve curve_from_json(const njson& j, int default_trunc);

// {"kind": "scaling"|"paraboloidal"|"rho"|"vertical"|"composite", ...}.
ContactTransform transform_from_json(const njson& j);

njson semigroup_to_json(const SemigroupData& s);
njson diagram_to_json(const NewtonDiagram& d);
njson equising_to_json(const EquisingClass& c);

// `ring r=...; poly F=...; ideal J=...;` shaped printout.
std::string singular_text(const RelConormalIdeal& ideal, const MultiPoly& F);

std::string ascii_diagram(const NewtonDiagram& d);

}  // namespace legdef
