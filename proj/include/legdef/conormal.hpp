#pragma once

#include <optional>

#include "legdef/curve.hpp"
#include "legdef/groebner.hpp"

namespace legdef {

// Legendrian lift of a plane curve: per-branch (x, y, p) with p = dy/dx.
struct LegendrianCurve {
    struct LBranch {
        TruncSeries x, y, p;
    };
    std::vector<LBranch> branches;
    std::optional<bool> generic_position;
};

// Throws if dy/dt - p * dx/dt fails to vanish on some branch.
void verify_legendrian(const LegendrianCurve& L);

// p = dy/dx per branch; rejects branches with constant x.
LegendrianCurve conormal_of(const PlaneCurve& c);

struct RelConormalIdeal {
    std::vector<std::string> ring_vars;  // (xi..., x..., s...)
    std::vector<std::string> xi_vars;
    IdealBasis generators;  // reduced Groebner basis populated
};

// Eliminate c from <F, xi_i - c*dF/dx_i> with a block order putting c
// first. xi_vars pairs with space_vars positionally.
RelConormalIdeal relative_conormal_ideal(const MultiPoly& F,
                                         const std::vector<std::string>& space_vars,
                                         const std::vector<std::string>& xi_vars,
                                         const std::vector<std::string>& params);

// The relative conormal ideal is unchanged when F is multiplied by a unit.
bool scale_invariance_check(const MultiPoly& F, const MultiPoly& unit,
                            const std::vector<std::string>& space_vars,
                            const std::vector<std::string>& xi_vars,
                            const std::vector<std::string>& params);

struct GenericPositionReport {
    struct PerBranch {
        bool ok = false;
        bool strict = false;  // ord(y) >= 2*ord(x) + 1, tangent cone {y = p = 0}
        std::string note;
    };
    bool generic = false;
    std::vector<PerBranch> branches;
};

// ord(y) >= 2*ord(x) and ord(p) >= ord(x) on every branch.
GenericPositionReport generic_position(const LegendrianCurve& L);

// Every generator homogeneous in the xi block.
bool xi_homogeneous(const RelConormalIdeal& ideal);

}  // namespace legdef
