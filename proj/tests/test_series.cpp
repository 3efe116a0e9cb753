#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "legdef/series.hpp"

using namespace legdef;

namespace {

TruncSeries S(const std::string& s, int trunc = 12) { return TruncSeries::parse(s, trunc); }

TruncSeries random_series(std::mt19937& rng, int min_ord, int trunc) {
    std::uniform_int_distribution<int> coef(-3, 3);
    TruncSeries f = TruncSeries::zero(trunc);
    for (int d = min_ord; d < trunc; ++d) {
        int c = coef(rng);
        if (c) f.set(d, Rat(c));
    }
    return f;
}

}  // namespace

TEST_CASE("parse and basic arithmetic") {
    CHECK(S("t^3 + 2*t^4").order() == 3);
    CHECK(S("t^7 + 49/18*t^8").coeff(8) == Rat(49) / Rat(18));
    CHECK((S("t + t^2") + S("t - t^2")).same_up_to_trunc(S("2*t")));
    CHECK((S("1 + t") * S("1 - t")).same_up_to_trunc(S("1 - t^2")));
    CHECK(S("t - t").known_zero());
}

TEST_CASE("truncation propagates through products") {
    TruncSeries a = S("t^3", 10), b = S("t^2", 4);
    TruncSeries p = a * b;
    CHECK(p.order() == 5);
    // b is unknown from degree 4 on, so a*b is unknown from 3+4 on
    CHECK(p.trunc == 7);
}

TEST_CASE("derivative and division by a unit") {
    CHECK(derivative(S("t^3 + 2*t^5")).same_up_to_trunc(S("3*t^2 + 10*t^4")));
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        TruncSeries u = random_series(rng, 1, 10);
        u.set(0, Rat(1) + Rat(0));  // force a unit
        TruncSeries v = random_series(rng, 0, 10);
        CHECK(div_unit(u * v, u).same_up_to_trunc(v));
    }
}

TEST_CASE("composition") {
    // (1 + s)^2 at s = t + t^2
    TruncSeries f = S("1 + 2*t + t^2");
    TruncSeries g = S("t + t^2");
    TruncSeries expect = (S("1") + g) * (S("1") + g);
    CHECK(compose(f, g).same_up_to_trunc(expect));
    // composition is a ring map
    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        TruncSeries a = random_series(rng, 0, 8), b = random_series(rng, 0, 8);
        TruncSeries h = random_series(rng, 1, 8);
        CHECK(compose(a * b, h).same_up_to_trunc(compose(a, h) * compose(b, h)));
        CHECK(compose(a + b, h).same_up_to_trunc(compose(a, h) + compose(b, h)));
    }
}

TEST_CASE("reparametrization inverse") {
    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        TruncSeries g = random_series(rng, 2, 10);
        g.set(1, Rat(1) + Rat(i % 3));  // ord 1 with unit linear coefficient
        TruncSeries h = invert_reparam(g);
        CHECK(compose(g, h).same_up_to_trunc(S("t", h.trunc)));
        CHECK(compose(h, g).same_up_to_trunc(S("t", h.trunc)));
    }
}

TEST_CASE("k-th root of a unit") {
    std::mt19937 rng(29);
    for (int k = 2; k <= 4; ++k) {
        for (int i = 0; i < 40; ++i) {
            TruncSeries v = random_series(rng, 1, 9);
            v.set(0, Rat(1 + i % 4));
            TruncSeries u = v;
            for (int j = 1; j < k; ++j) u = u * v;
            CHECK(kth_root_unit(u, k).same_up_to_trunc(v));
        }
    }
    CHECK_THROWS(kth_root_unit(S("2 + t"), 2));  // 2 is not a rational square
}

TEST_CASE("polynomial substitution by series") {
    MultiPoly p = MultiPoly::parse("y^2 - x^3", {"x", "y"});
    TruncSeries r = substitute(p, {{"x", S("t^2")}, {"y", S("t^3")}});
    CHECK(r.known_zero());
    TruncSeries r2 = substitute(p, {{"x", S("t^2")}, {"y", S("t^3 + t^4")}});
    CHECK(r2.order() == 7);  // 2 t^7 + t^8
    CHECK(r2.coeff(7) == Rat(2));
}
