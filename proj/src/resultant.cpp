#include "legdef/resultant.hpp"

#include <map>
#include <stdexcept>

namespace legdef {

Rat determinant(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        for (size_t r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = 1 / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (size_t j = col; j < n; ++j)
                if (m[col][j] != 0) m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

namespace {

// Coefficient list of p viewed as a polynomial in var, entries in the full
// ring with var unused.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, int var) {
    int d = p.degree_in(var);
    std::vector<MultiPoly> out(size_t(d + 1), MultiPoly(p.vars));
    for (auto& [e, c] : p.terms) {
        Exps r = e;
        int k = r[var];
        r[var] = 0;
        out[k].set(r, out[k].coeff(r) + c);
    }
    return out;
}

Rat eval_at(const MultiPoly& p, const std::vector<Rat>& point) {
    Rat out(0);
    for (auto& [e, c] : p.terms) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int j = 0; j < e[i]; ++j) t *= point[i];
        out += t;
    }
    return out;
}

Rat sylvester_at(const std::vector<MultiPoly>& ac, const std::vector<MultiPoly>& bc,
                 const std::vector<Rat>& point) {
    int n = int(ac.size()) - 1, m = int(bc.size()) - 1;
    size_t dim = size_t(n + m);
    std::vector<std::vector<Rat>> s(dim, std::vector<Rat>(dim, Rat(0)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) s[r][r + n - k] = eval_at(ac[k], point);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) s[m + r][r + m - k] = eval_at(bc[k], point);
    return determinant(std::move(s));
}

}  // namespace

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    if (a.vars != b.vars) throw std::invalid_argument("resultant: ring mismatch");
    int v = a.var_index(var);
    int n = a.degree_in(v), m = b.degree_in(v);
    if (n <= 0 && m <= 0) throw std::invalid_argument("resultant: neither input uses " + var);
    if (n <= 0) {
        // Res(a, b) = a^m when a is free of var
        MultiPoly r = MultiPoly::constant(a.vars, 1);
        for (int i = 0; i < m; ++i) r = r * a;
        return r;
    }
    if (m <= 0) {
        MultiPoly r = MultiPoly::constant(a.vars, 1);
        for (int i = 0; i < n; ++i) r = r * b;
        return r;
    }

    std::vector<MultiPoly> ac = coeffs_in(a, v), bc = coeffs_in(b, v);

    // Degree bound of the resultant in each remaining variable.
    size_t nvars = a.vars.size();
    std::vector<int> bound(nvars, 0);
    for (size_t i = 0; i < nvars; ++i) {
        if (int(i) == v) continue;
        bound[i] = m * a.degree_in(int(i)) + n * b.degree_in(int(i));
    }
    std::vector<int> active;
    for (size_t i = 0; i < nvars; ++i)
        if (bound[i] > 0) active.push_back(int(i));

    // Evaluate on the grid point = (i_1, ..., i_k), 0 <= i_j <= bound.
    std::vector<Rat> point(nvars, Rat(0));
    std::vector<int> idx(active.size(), 0);
    std::map<Exps, Rat> values;  // grid index (over active vars) -> value
    for (;;) {
        for (size_t j = 0; j < active.size(); ++j) point[active[j]] = Rat(idx[j]);
        Exps key(idx.begin(), idx.end());
        values[key] = sylvester_at(ac, bc, point);
        size_t j = 0;
        while (j < active.size()) {
            if (++idx[j] <= bound[active[j]]) break;
            idx[j] = 0;
            ++j;
        }
        if (j == active.size()) break;
        if (active.empty()) break;
    }

    if (active.empty()) return MultiPoly::constant(a.vars, values.begin()->second);

    // Interpolate dimension by dimension, innermost first.
    std::map<Exps, MultiPoly> layer;
    for (auto& [k, val] : values) layer[k] = MultiPoly::constant(a.vars, val);
    for (size_t j = 0; j < active.size(); ++j) {
        int d = bound[active[j]];
        MultiPoly x = MultiPoly::variable(a.vars, a.vars[active[j]]);
        std::map<Exps, MultiPoly> next;
        // group by the remaining index coordinates (j+1 .. end)
        std::map<Exps, std::vector<MultiPoly>> groups;
        for (auto& [k, val] : layer) {
            Exps rest(k.begin() + 1, k.end());
            auto& g = groups[rest];
            if (g.empty()) g.resize(size_t(d + 1), MultiPoly(a.vars));
            g[size_t(k[0])] = val;
        }
        for (auto& [rest, vals] : groups) {
            MultiPoly sum(a.vars);
            for (int i = 0; i <= d; ++i) {
                if (vals[i].is_zero()) continue;
                MultiPoly li = MultiPoly::constant(a.vars, 1);
                Rat denom(1);
                for (int t = 0; t <= d; ++t) {
                    if (t == i) continue;
                    li = li * (x - MultiPoly::constant(a.vars, Rat(t)));
                    denom *= Rat(i - t);
                }
                sum = sum + vals[i] * li * (1 / denom);
            }
            next[rest] = sum;
        }
        layer = std::move(next);
    }
    return layer.begin()->second;
}

}  // namespace legdef
