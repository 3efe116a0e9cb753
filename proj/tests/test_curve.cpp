#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "legdef/curve.hpp"

using namespace legdef;

namespace {

const std::vector<std::string> XY{"x", "y"};

MultiPoly P(const std::string& s) { return MultiPoly::parse(s, XY); }

Branch B(const std::string& x, const std::string& y, int trunc = 30) {
    Branch b;
    b.x = TruncSeries::parse(x, trunc);
    b.y = TruncSeries::parse(y, trunc);
    return b;
}

}  // namespace

TEST_CASE("newton diagram of a cusp family") {
    NewtonDiagram d = newton_diagram(P("y^2 - x^5"));
    REQUIRE(d.faces.size() == 1);
    CHECK(d.faces[0].u == 2);
    CHECK(d.faces[0].v == 5);
    CHECK(d.faces[0].d == 10);
    CHECK(d.vertices == std::vector<std::pair<int, int>>{{0, 2}, {5, 0}});

    NewtonDiagram d2 = newton_diagram(P("(y^3+x^7)*(y^3+x^10)"));
    REQUIRE(d2.faces.size() == 2);
    CHECK(d2.faces[0].u == 3);
    CHECK(d2.faces[0].v == 7);
    CHECK(d2.faces[0].d == 42);
    CHECK(d2.faces[1].u == 3);
    CHECK(d2.faces[1].v == 10);
    CHECK(d2.faces[1].d == 51);
}

TEST_CASE("classification") {
    CHECK(classify(P("y^2 - x^5")).kind == CurveClass::SQH);
    CHECK(classify(P("(y^3+x^7)*(y^3+x^10)")).kind == CurveClass::NND);
    // squared face polynomial: singular off the axes
    CHECK(classify(P("(y + x)^2")).kind == CurveClass::Degenerate);
    CHECK_THROWS(classify(P("x*y^2 - x^3")));  // monomial factor
}

TEST_CASE("genericity from the equation and from branches") {
    PlaneCurve eq;
    eq.equation = P("y^2 - x^5");
    CHECK(is_generic(eq).generic);
    eq.equation = P("y^2 - x^3");
    CHECK(!is_generic(eq).generic);

    PlaneCurve br;
    br.branches = {B("t^2", "t^5")};
    CHECK(is_generic(br).generic);
    br.branches = {B("t^2", "t^3")};
    CHECK(!is_generic(br).generic);
}

TEST_CASE("branches of binomial products") {
    auto bs = branches_of(P("y^2 - x^5"), 20);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].x.same_up_to_trunc(TruncSeries::parse("t^2", bs[0].x.trunc)));
    CHECK(bs[0].y.same_up_to_trunc(TruncSeries::parse("t^5", bs[0].y.trunc)));

    auto two = branches_of(P("(y - x^2)*(y - 2*x^2)"), 20);
    CHECK(two.size() == 2);
    for (auto& b : two) {
        TruncSeries r = substitute(P("(y - x^2)*(y - 2*x^2)"),
                                   {{"x", b.x}, {"y", b.y}});
        CHECK(r.known_zero());
    }
}

TEST_CASE("branch invariants") {
    BranchInvariants inv = branch_invariants(B("t^2", "t^5"));
    CHECK(inv.semigroup.generators == std::vector<int>{2, 5});
    CHECK(inv.semigroup.conductor == 4);
    CHECK(inv.char_exps == std::vector<int>{2, 5});

    // (4; 6, 7) has value semigroup <4, 6, 13>
    BranchInvariants inv2 = branch_invariants(B("t^4", "t^6 + t^7", 40));
    CHECK(inv2.semigroup.generators == std::vector<int>{4, 6, 13});
    CHECK(inv2.semigroup.conductor == 16);
    CHECK(inv2.char_exps == std::vector<int>{4, 6, 7});
}

TEST_CASE("numerical semigroup from generators") {
    SemigroupData s = semigroup_from_generators({4, 6, 7});
    CHECK(s.gaps == std::vector<int>{1, 2, 3, 5, 9});
    CHECK(s.conductor == 10);
    CHECK(s.contains(13));
    CHECK(!s.contains(9));
    CHECK_THROWS(semigroup_from_generators({4, 6}));  // gcd 2
}

TEST_CASE("intersection multiplicity") {
    // cusp against the smooth curve y = 0: ord_t x(t)^3 = 6 / mult ... = 3
    CHECK(intersection_multiplicity(B("t^2", "t^3"), B("t", "0*t")) == 3);
    CHECK(intersection_multiplicity(B("t", "0*t"), B("t^2", "t^3")) == 3);
    // two smooth branches meeting transversally
    CHECK(intersection_multiplicity(B("t", "t"), B("t", "-t")) == 1);
    // tangent smooth branches
    CHECK(intersection_multiplicity(B("t", "t^2"), B("t", "2*t^2")) == 2);
    CHECK_THROWS(intersection_multiplicity(B("t^2", "t^3"), B("t^2", "t^3")));
}

TEST_CASE("equisingularity class comparison") {
    PlaneCurve cusp, cusp2, tacnode;
    cusp.branches = {B("t^2", "t^5")};
    cusp2.branches = {B("t^2", "3*t^5")};
    tacnode.branches = {B("t", "t^2"), B("t", "2*t^2")};
    EquisingClass a = equising_class(cusp);
    CHECK(equisingular_equal(a, equising_class(cusp2)));
    CHECK(!equisingular_equal(a, equising_class(tacnode)));
    // branch order must not matter
    PlaneCurve mixed1, mixed2;
    mixed1.branches = {B("t", "t^3"), B("t^2", "t^5")};
    mixed2.branches = {B("t^2", "2*t^5"), B("t", "t^3")};
    CHECK(equisingular_equal(equising_class(mixed1), equising_class(mixed2)));
}

TEST_CASE("implicitization") {
    MultiPoly f = implicitize(B("t^2", "t^3"), XY);
    REQUIRE(!f.is_zero());
    CHECK(substitute(f, {{"x", TruncSeries::parse("t^2", 30)},
                         {"y", TruncSeries::parse("t^3", 30)}})
              .known_zero());
    // degree matches y^2 - x^3 up to a scalar
    CHECK(f.degree_in(f.var_index("y")) == 2);
    CHECK(f.degree_in(f.var_index("x")) == 3);
}

TEST_CASE("consistency check rejects mismatched data") {
    PlaneCurve ok;
    ok.equation = P("y^2 - x^5");
    ok.branches = {B("t^2", "t^5")};
    check_consistency(ok);
    CHECK(ok.consistency_checked);

    PlaneCurve bad;
    bad.equation = P("y^2 - x^5");
    bad.branches = {B("t^2", "t^3")};
    CHECK_THROWS(check_consistency(bad));
}

TEST_CASE("normalize branch") {
    Branch b = B("4*t^2 + t^3", "t^4", 25);
    Branch n = normalize_branch(b);
    CHECK(n.x.same_up_to_trunc(TruncSeries::monomial(2, Rat(1), n.x.trunc)));
    // the pair still parametrizes the same germ: y as a series in the new x-root
    CHECK(n.y.order() == 4);
}
