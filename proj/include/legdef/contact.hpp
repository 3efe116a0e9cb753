#pragma once

#include "legdef/conormal.hpp"
#include "legdef/curve.hpp"

namespace legdef {

// Transformation of (x, y, p)-space preserving the contact structure
// dy - p dx up to a unit.
struct ContactTransform {
    enum class Kind { Scaling, Paraboloidal, RhoLambda, Vertical, Composite };
    Kind kind = Kind::Scaling;

    Rat lambda{1}, mu{1};      // Scaling, RhoLambda (lambda only)
    Rat a{1}, b{0}, c{0}, d{1};  // Paraboloidal, ad - bc = 1
    MultiPoly X, Y, P;           // Vertical: explicit components in (x, y, p)
    std::vector<ContactTransform> parts;  // Composite, applied left to right

    static ContactTransform scaling(const Rat& lambda, const Rat& mu);
    static ContactTransform paraboloidal(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
    static ContactTransform rho(const Rat& lambda);
    static ContactTransform vertical(MultiPoly X, MultiPoly Y, MultiPoly P);
    static ContactTransform composite(std::vector<ContactTransform> parts);

    // Component polynomials in the ring (x, y, p).
    MultiPoly comp_x() const;
    MultiPoly comp_y() const;
    MultiPoly comp_p() const;
};

struct ContactCheck {
    bool ok = false;
    MultiPoly cofactor;  // u with pullback = u * (dy - p dx)
    std::string reason;
};

// d(Y) - P d(X) must equal u (dy - p dx) with u a unit.
ContactCheck verify_contact(const ContactTransform& T);

// First-order contact transformation over the fat point: the map
// (x + eps*alpha, y + eps*beta, p + eps*gamma).
struct InfinitesimalContact {
    MultiPoly alpha, beta0;  // inputs; beta0 in (x, y)
    MultiPoly beta, gamma;   // derived
};

// beta integrates p d(alpha)/dp in p plus beta0; gamma from the closed
// formula. Rejects alpha or beta0 with constant term.
InfinitesimalContact make_infinitesimal(const MultiPoly& alpha, const MultiPoly& beta0);

LegendrianCurve act_on_legendrian(const ContactTransform& T, const LegendrianCurve& L);

// (x, y)-projection of the transformed conormal; an implicit equation is
// attached when every input branch is polynomial and the images are too.
PlaneCurve plane_action(const ContactTransform& T, const PlaneCurve& c);

struct PreservationReport {
    enum class Status { Passed, Failed, Skipped };
    Status status = Status::Skipped;
    std::string reason;
};

// Equisingularity class comparison of c and its image; skipped with a
// reason when source or image conormal is not in generic position.
PreservationReport equisingularity_preservation_test(const ContactTransform& T,
                                                     const PlaneCurve& c);

}  // namespace legdef
