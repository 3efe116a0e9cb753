#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "legdef/contact.hpp"

using namespace legdef;

namespace {

const std::vector<std::string> XYP{"x", "y", "p"};

MultiPoly P(const std::string& s) { return MultiPoly::parse(s, XYP); }

Branch B(const std::string& x, const std::string& y, int trunc = 40) {
    Branch b;
    b.x = TruncSeries::parse(x, trunc);
    b.y = TruncSeries::parse(y, trunc);
    return b;
}

// X = x + q'(p), Y = y + p q'(p) - q(p), P = p pulls the contact form back
// exactly, for any polynomial q in p.
ContactTransform vertical_from(const MultiPoly& q) {
    MultiPoly dq = q.derivative("p");
    return ContactTransform::vertical(P("x") + dq, P("y") + P("p") * dq - q, P("p"));
}

}  // namespace

TEST_CASE("factory transforms satisfy the contact condition") {
    for (const ContactTransform& T :
         {ContactTransform::scaling(Rat(2), Rat(3)),
          ContactTransform::paraboloidal(Rat(2), Rat(1), Rat(3), Rat(2)),
          ContactTransform::rho(Rat(5)),
          vertical_from(P("1/2*p^2")),
          ContactTransform::composite({ContactTransform::rho(Rat(1)),
                                       ContactTransform::scaling(Rat(1), Rat(2))})}) {
        ContactCheck c = verify_contact(T);
        CHECK(c.ok);
        CHECK(c.cofactor.constant_term() != 0);
    }
    CHECK_THROWS(ContactTransform::scaling(Rat(0), Rat(1)));
    CHECK_THROWS(ContactTransform::paraboloidal(Rat(1), Rat(1), Rat(1), Rat(1)));  // ad - bc = 0
}

TEST_CASE("a non-contact map is rejected") {
    ContactTransform bad = ContactTransform::vertical(P("x"), P("y + x"), P("p"));
    CHECK(!verify_contact(bad).ok);
}

TEST_CASE("action on a legendrian curve stays legendrian") {
    PlaneCurve c;
    c.branches = {B("t^2", "t^5"), B("t^3", "t^7")};
    LegendrianCurve L = conormal_of(c);
    for (const ContactTransform& T :
         {ContactTransform::scaling(Rat(3), Rat(2)), ContactTransform::rho(Rat(2)),
          vertical_from(P("p^3")),
          ContactTransform::composite({vertical_from(P("1/2*p^2")),
                                       ContactTransform::scaling(Rat(2), Rat(4))})}) {
        LegendrianCurve M = act_on_legendrian(T, L);
        verify_legendrian(M);
        CHECK(M.branches.size() == L.branches.size());
    }
}

TEST_CASE("plane action on the e-7 cusp") {
    MultiPoly f = MultiPoly::parse("y^3 - x^7", {"x", "y"});
    PlaneCurve c;
    c.equation = f;
    ContactTransform T = vertical_from(P("1/2*p^2"));  // (x + p, y + p^2/2, p)
    PlaneCurve img = plane_action(T, c);
    REQUIRE(img.branches.size() == 1);
    CHECK(img.branches[0].x.same_up_to_trunc(
        TruncSeries::parse("t^3 + 7/3*t^4", img.branches[0].x.trunc)));
    CHECK(img.branches[0].y.same_up_to_trunc(
        TruncSeries::parse("t^7 + 49/18*t^8", img.branches[0].y.trunc)));
}

TEST_CASE("preservation test outcomes") {
    PlaneCurve gen;
    gen.equation = MultiPoly::parse("y^2 - x^5", {"x", "y"});
    PreservationReport ok =
        equisingularity_preservation_test(ContactTransform::scaling(Rat(2), Rat(3)), gen);
    CHECK(ok.status == PreservationReport::Status::Passed);

    // source not in generic position: skipped with a reason, never a failure
    PlaneCurve flat;
    flat.branches = {B("t^2", "t^3")};
    PreservationReport sk =
        equisingularity_preservation_test(ContactTransform::scaling(Rat(2), Rat(3)), flat);
    CHECK(sk.status == PreservationReport::Status::Skipped);
    CHECK(!sk.reason.empty());
}

TEST_CASE("infinitesimal contact data") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
    for (int i = 0; i < 100; ++i) {
        // alpha, beta0 without constant terms, beta0 in (x, y)
        MultiPoly alpha = MultiPoly::zero(XYP), beta0 = MultiPoly::zero(XYP);
        for (int t = 0; t < 4; ++t) {
            Exps e{deg(rng), deg(rng), deg(rng)};
            if (total_degree(e) == 0) e[0] = 1;
            alpha.set(e, alpha.coeff(e) + Rat(coef(rng)));
            Exps e2{deg(rng), deg(rng), 0};
            if (total_degree(e2) == 0) e2[1] = 1;
            beta0.set(e2, beta0.coeff(e2) + Rat(coef(rng)));
        }
        if (alpha.is_zero() || beta0.is_zero()) continue;
        InfinitesimalContact T = make_infinitesimal(alpha, beta0);
        // d(beta)/dp = p d(alpha)/dp, since beta0 is free of p
        CHECK(T.beta.derivative("p") == P("p") * alpha.derivative("p"));
        // first-order legendrian identity along a legendrian branch:
        // d/dt beta(L) = gamma(L) x'(t) + p(L) d/dt alpha(L)
        PlaneCurve c;
        c.branches = {B("t^2", "t^5", 30)};
        LegendrianCurve L = conormal_of(c);
        std::map<std::string, TruncSeries> at{
            {"x", L.branches[0].x}, {"y", L.branches[0].y}, {"p", L.branches[0].p}};
        TruncSeries lhs = derivative(substitute(T.beta, at));
        TruncSeries rhs = substitute(T.gamma, at) * derivative(L.branches[0].x) +
                          at.at("p") * derivative(substitute(T.alpha, at));
        CHECK((lhs - rhs).known_zero());
    }
    CHECK_THROWS(make_infinitesimal(P("1 + x"), P("y")));
}
