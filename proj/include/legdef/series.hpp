#pragma once

#include <map>
#include <string>

#include "legdef/multipoly.hpp"
#include "legdef/rational.hpp"

namespace legdef {

// Truncated power series in t over the rationals. Coefficients of degree
// >= trunc are unknown; every operation propagates the largest truncation
// order at which its result is provably correct.
struct TruncSeries {
    std::map<int, Rat> coeffs;  // degree -> nonzero coefficient, degree < trunc
    int trunc = 0;

    static TruncSeries zero(int trunc);
    static TruncSeries monomial(int degree, const Rat& c, int trunc);
    // Polynomial string in t, e.g. "t^3 + 2*t^4" or "t^7 + 49/18*t^8".
    static TruncSeries parse(const std::string& text, int trunc);

    bool known_zero() const { return coeffs.empty(); }
    // Lowest nonzero degree; trunc for the known-zero series.
    int order() const { return coeffs.empty() ? trunc : coeffs.begin()->first; }
    Rat coeff(int degree) const;
    void set(int degree, const Rat& c);
    TruncSeries truncated(int new_trunc) const;
    std::string str() const;

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries operator*(const Rat& c) const;
    bool same_up_to_trunc(const TruncSeries& o) const;
};

TruncSeries derivative(const TruncSeries& f);

// f/u where u is a unit (ord 0).
TruncSeries div_unit(const TruncSeries& f, const TruncSeries& u);

// f(g(t)); requires ord(g) >= 1.
TruncSeries compose(const TruncSeries& f, const TruncSeries& g);

// h with g(h(t)) = t up to truncation; requires ord(g) = 1.
TruncSeries invert_reparam(const TruncSeries& g);

// v with v^k = u and v(0) > 0; requires ord(u) = 0 and u(0) a rational
// k-th power ("irrational root" otherwise).
TruncSeries kth_root_unit(const TruncSeries& u, int k);

// Evaluate p on the assignment; every variable of p must be assigned.
TruncSeries substitute(const MultiPoly& p, const std::map<std::string, TruncSeries>& assignment);

}  // namespace legdef
