#include "legdef/series.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace legdef {

TruncSeries TruncSeries::zero(int trunc) {
    TruncSeries s;
    s.trunc = trunc;
    return s;
}

TruncSeries TruncSeries::monomial(int degree, const Rat& c, int trunc) {
    TruncSeries s;
    s.trunc = trunc;
    if (c != 0 && degree < trunc) s.coeffs[degree] = c;
    return s;
}

TruncSeries TruncSeries::parse(const std::string& text, int trunc) {
    MultiPoly p = MultiPoly::parse(text, {"t"});
    TruncSeries s;
    s.trunc = trunc;
    for (auto& [e, c] : p.terms)
        if (e[0] < trunc) s.coeffs[e[0]] = c;
    return s;
}

Rat TruncSeries::coeff(int degree) const {
    auto it = coeffs.find(degree);
    return it == coeffs.end() ? Rat(0) : it->second;
}

void TruncSeries::set(int degree, const Rat& c) {
    if (degree >= trunc) return;
    if (c == 0)
        coeffs.erase(degree);
    else
        coeffs[degree] = c;
}

TruncSeries TruncSeries::truncated(int new_trunc) const {
    TruncSeries s;
    s.trunc = std::min(trunc, new_trunc);
    for (auto& [d, c] : coeffs)
        if (d < s.trunc) s.coeffs[d] = c;
    return s;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto& [d, c] : coeffs) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (d == 0) {
            os << rat_to_string(a);
        } else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "t";
            if (d != 1) os << "^" << d;
        }
    }
    if (first) os << "0";
    os << " + O(t^" << trunc << ")";
    return os.str();
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries s = truncated(o.trunc);
    for (auto& [d, c] : o.coeffs)
        if (d < s.trunc) s.set(d, s.coeff(d) + c);
    return s;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator-() const {
    TruncSeries s = *this;
    for (auto& [d, c] : s.coeffs) c = -c;
    return s;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    // Coefficient at degree d needs both factors known below d minus the
    // other's order.
    long nt = std::min<long>(long(trunc) + o.order(), long(o.trunc) + order());
    TruncSeries s;
    s.trunc = int(std::min<long>(nt, INT_MAX / 2));
    for (auto& [d1, c1] : coeffs)
        for (auto& [d2, c2] : o.coeffs) {
            int d = d1 + d2;
            if (d < s.trunc) s.set(d, s.coeff(d) + c1 * c2);
        }
    return s;
}

TruncSeries TruncSeries::operator*(const Rat& c) const {
    TruncSeries s = *this;
    if (c == 0) {
        s.coeffs.clear();
        return s;
    }
    for (auto& [d, a] : s.coeffs) a *= c;
    return s;
}

bool TruncSeries::same_up_to_trunc(const TruncSeries& o) const {
    int t = std::min(trunc, o.trunc);
    for (int d = 0; d < t; ++d)
        if (coeff(d) != o.coeff(d)) return false;
    return true;
}

TruncSeries derivative(const TruncSeries& f) {
    TruncSeries s;
    s.trunc = f.trunc - 1;
    for (auto& [d, c] : f.coeffs)
        if (d >= 1 && d - 1 < s.trunc) s.coeffs[d - 1] = c * d;
    return s;
}

TruncSeries div_unit(const TruncSeries& f, const TruncSeries& u) {
    if (u.order() != 0) throw std::invalid_argument("div_unit: divisor is not a unit");
    int t = std::min(f.trunc, u.trunc);
    TruncSeries q = TruncSeries::zero(t);
    Rat u0 = u.coeff(0);
    TruncSeries rem = f.truncated(t);
    for (int d = 0; d < t; ++d) {
        Rat c = rem.coeff(d) / u0;
        if (c == 0) continue;
        q.set(d, c);
        for (auto& [du, cu] : u.coeffs) {
            int dd = d + du;
            if (dd < t) rem.set(dd, rem.coeff(dd) - c * cu);
        }
    }
    return q;
}

TruncSeries compose(const TruncSeries& f, const TruncSeries& g) {
    int og = g.order();
    if (og < 1) throw std::invalid_argument("compose: inner series must have order >= 1");

    long n1 = long(f.trunc) * og;
    long n2 = LONG_MAX;
    for (auto& [d, c] : f.coeffs)
        if (d >= 1) {
            n2 = long(g.trunc) + long(d - 1) * og;
            break;
        }
    int nt = int(std::min({n1, n2, long(INT_MAX / 2)}));

    TruncSeries out = TruncSeries::zero(nt);
    TruncSeries gk = TruncSeries::monomial(0, 1, nt);  // g^k
    int prev = 0;
    for (auto& [d, c] : f.coeffs) {
        for (int k = prev; k < d; ++k) gk = (gk * g).truncated(nt);
        prev = d;
        out = out + gk * c;
    }
    return out.truncated(nt);
}

TruncSeries invert_reparam(const TruncSeries& g) {
    if (g.order() != 1) throw std::invalid_argument("invert_reparam: series must have order 1");
    int t = g.trunc;
    Rat g1 = g.coeff(1);
    TruncSeries h = TruncSeries::monomial(1, 1 / g1, t);
    for (int n = 2; n < t; ++n) {
        TruncSeries e = compose(g.truncated(n + 1), h) - TruncSeries::monomial(1, 1, t);
        h.set(n, h.coeff(n) - e.coeff(n) / g1);
    }
    return h;
}

TruncSeries kth_root_unit(const TruncSeries& u, int k) {
    if (k < 1) throw std::invalid_argument("kth_root_unit: k must be positive");
    if (u.order() != 0) throw std::invalid_argument("kth_root_unit: series must be a unit");
    Rat v0;
    if (!rat_kth_root(u.coeff(0), k, v0))
        throw std::invalid_argument("kth_root_unit: irrational root");
    if (v0 < 0) v0 = -v0;  // v(0) > 0 convention for even-degree sign freedom
    int t = u.trunc;
    TruncSeries v = TruncSeries::monomial(0, v0, t);
    Rat dcoef = Rat(k);
    for (int j = 1; j < k; ++j) dcoef *= v0;  // k * v0^(k-1)
    for (int n = 1; n < t; ++n) {
        TruncSeries p = TruncSeries::monomial(0, 1, n + 1);
        for (int j = 0; j < k; ++j) p = p * v.truncated(n + 1);
        Rat e = p.coeff(n) - u.coeff(n);
        if (e != 0) v.set(n, -e / dcoef);
    }
    return v;
}

TruncSeries substitute(const MultiPoly& p, const std::map<std::string, TruncSeries>& assignment) {
    std::vector<const TruncSeries*> series(p.vars.size(), nullptr);
    int t = INT_MAX;
    for (size_t i = 0; i < p.vars.size(); ++i) {
        auto it = assignment.find(p.vars[i]);
        if (it == assignment.end()) {
            if (p.uses_var(int(i)))
                throw std::invalid_argument("substitute: unassigned variable " + p.vars[i]);
            continue;
        }
        series[i] = &it->second;
        t = std::min(t, it->second.trunc);
    }
    if (t == INT_MAX) t = 1;

    TruncSeries out = TruncSeries::zero(t);
    for (auto& [e, c] : p.terms) {
        TruncSeries term = TruncSeries::monomial(0, c, t);
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) term = term * *series[i];
        out = out + term;
    }
    return out.truncated(out.trunc);
}

}  // namespace legdef
