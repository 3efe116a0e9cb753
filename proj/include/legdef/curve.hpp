#pragma once

#include <optional>
#include <string>
#include <vector>

#include "legdef/multipoly.hpp"
#include "legdef/semigroup.hpp"
#include "legdef/series.hpp"

namespace legdef {

// One parametrized branch (x(t), y(t)). `exact` marks series whose stored
// coefficients are the complete expansion (polynomial data), so the
// truncation order may be raised freely.
struct Branch {
    TruncSeries x, y;
    bool normalized = false;  // x = t^k exactly
    bool exact = true;

    int multiplicity() const { return x.order(); }
    Branch with_truncation(int trunc) const;
};

// Reparametrize so that x = t^k exactly; requires the leading coefficient
// of x to be a rational k-th power.
Branch normalize_branch(const Branch& b);

struct PlaneCurve {
    std::optional<MultiPoly> equation;  // in {x, y}
    std::vector<Branch> branches;
    bool consistency_checked = false;
};

// Throws if both representations are present and the equation does not
// vanish on some branch up to truncation.
void check_consistency(PlaneCurve& c);

struct NewtonFace {
    int u = 0, v = 0;  // primitive inner normal, pairs with (i, j)
    long d = 0;        // u*i + v*j = d on the face
    std::vector<std::pair<int, int>> points;
    MultiPoly poly;  // face part of f
};

struct NewtonDiagram {
    std::vector<std::pair<int, int>> support;
    std::vector<std::pair<int, int>> vertices;  // top-left to bottom-right
    std::vector<NewtonFace> faces;              // ordered by decreasing steepness
};

// Lower-left boundary of the support; rejects units and f = 0.
NewtonDiagram newton_diagram(const MultiPoly& f);

enum class CurveClass { SQH, NND, Degenerate };

struct Classification {
    CurveClass kind = CurveClass::Degenerate;
    NewtonDiagram diagram;
    std::string reason;
};

// SQH: single face with isolated singularity off the axes; NND: every face
// passes that test; degenerate otherwise. Throws when x or y divides f.
Classification classify(const MultiPoly& f);

struct GenericityReport {
    bool generic = false;
    std::string witness;
};

// Every branch has ord(y) >= 2*ord(x); for equation-only input, membership
// f in (x^2, y)^k. Tangent cone must be the single line {y = 0} (a shear
// is applied and recorded when it is another single line).
GenericityReport is_generic(const PlaneCurve& c);

struct UnsupportedFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Branches of f when every Newton face splits into factors y^u - c*x^v
// with distinct rational c (binomial products and rationally-split NND
// curves). Throws UnsupportedFactorization otherwise.
std::vector<Branch> branches_of(const MultiPoly& f, int trunc = 0);

struct BranchInvariants {
    SemigroupData semigroup;
    std::vector<int> char_exps;  // (beta_0; beta_1, ...)
};

BranchInvariants branch_invariants(const Branch& b);

// ord_t of the implicit equation of b2 along b1; computed by two resultant
// eliminations that must agree. Throws when the branches coincide.
int intersection_multiplicity(const Branch& b1, const Branch& b2);

struct EquisingClass {
    std::vector<std::vector<int>> exponents;      // per branch
    std::vector<std::vector<int>> intersections;  // symmetric, diagonal 0
};

EquisingClass equising_class(const PlaneCurve& c);

// True iff some branch bijection matches exponent tuples and the pairwise
// intersection matrices.
bool equisingular_equal(const EquisingClass& a, const EquisingClass& b);

// Implicit equation of a polynomial branch via Res_t(X - x(t), Y - y(t)).
MultiPoly implicitize(const Branch& b, const std::vector<std::string>& vars);

}  // namespace legdef
