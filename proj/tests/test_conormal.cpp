#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "legdef/conormal.hpp"

using namespace legdef;

namespace {

Branch B(const std::string& x, const std::string& y, int trunc = 30) {
    Branch b;
    b.x = TruncSeries::parse(x, trunc);
    b.y = TruncSeries::parse(y, trunc);
    return b;
}

}  // namespace

TEST_CASE("conormal lift computes p = dy/dx") {
    PlaneCurve c;
    c.branches = {B("t^2", "t^3")};
    LegendrianCurve L = conormal_of(c);
    REQUIRE(L.branches.size() == 1);
    // p = 3t^2 / 2t = (3/2) t
    CHECK(L.branches[0].p.order() == 1);
    CHECK(L.branches[0].p.coeff(1) == Rat(3) / Rat(2));
    verify_legendrian(L);
}

TEST_CASE("legendrian verification rejects a wrong p") {
    LegendrianCurve L;
    LegendrianCurve::LBranch b;
    b.x = TruncSeries::parse("t^2", 20);
    b.y = TruncSeries::parse("t^3", 20);
    b.p = TruncSeries::parse("t", 20);  // should be (3/2) t
    L.branches = {b};
    CHECK_THROWS(verify_legendrian(L));
}

TEST_CASE("generic position of the lift") {
    PlaneCurve flat, steep;
    flat.branches = {B("t^2", "t^3")};
    steep.branches = {B("t^2", "t^5")};
    CHECK(!generic_position(conormal_of(flat)).generic);
    GenericPositionReport r = generic_position(conormal_of(steep));
    CHECK(r.generic);
    REQUIRE(r.branches.size() == 1);
    CHECK(r.branches[0].strict);  // ord(y) = 5 > 2*ord(x)
    // boundary case ord(y) = 2*ord(x): generic but not strict
    PlaneCurve border;
    border.branches = {B("t^2", "t^4 + t^5")};
    GenericPositionReport rb = generic_position(conormal_of(border));
    CHECK(rb.generic);
    CHECK(!rb.branches[0].strict);
}

TEST_CASE("relative conormal ideal of a smooth family") {
    std::vector<std::string> space{"x", "y"}, xi{"u", "v"};
    MultiPoly F = MultiPoly::parse("x^2 + y^2", space);
    RelConormalIdeal I = relative_conormal_ideal(F, space, xi, {});
    CHECK(xi_homogeneous(I));
    // (u, v) is proportional to dF = (2x, 2y) along the fibres
    MultiPoly rel = MultiPoly::parse("u*y - v*x", I.ring_vars);
    CHECK(in_ideal(rel, I.generators));
    CHECK(in_ideal(MultiPoly::parse("x^2 + y^2", I.ring_vars), I.generators));
}

TEST_CASE("relative conormal ideal witness for the cusp family") {
    std::vector<std::string> space{"x", "y"}, xi{"u", "v"};
    std::vector<std::string> all{"x", "y", "s"};
    MultiPoly F = MultiPoly::parse("y^2 - s*x^3", all);
    RelConormalIdeal I = relative_conormal_ideal(F, space, xi, {"s"});
    CHECK(xi_homogeneous(I));
    // smooth fibre points with a conormal direction proportional to dF
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> pick(1, 5);
    for (int k = 0; k < 20; ++k) {
        Rat m(pick(rng)), c(pick(rng)), l(pick(rng));
        Rat s = c * c;  // forces (m^2, c m^3) onto the fibre
        // dF = (-3 s x^2, 2 y) there
        std::map<std::string, Rat> pt{
            {"x", m * m},   {"y", c * m * m * m},
            {"u", l * Rat(-3) * s * m * m * m * m}, {"v", l * Rat(2) * c * m * m * m},
            {"s", s}};
        for (auto& g : *I.generators.reduced_groebner) CHECK(g.evaluated(pt) == 0);
    }
}

TEST_CASE("scale invariance of the relative conormal ideal") {
    std::vector<std::string> space{"x", "y", "z"};
    std::vector<std::string> all{"x", "y", "z", "s"};
    MultiPoly F = MultiPoly::parse("z^2 + y^3 + s*x^4", all);
    MultiPoly unit = MultiPoly::parse("1 + x + 2*y", all);
    CHECK(scale_invariance_check(F, unit, space, {"u", "v", "w"}, {"s"}));
}
