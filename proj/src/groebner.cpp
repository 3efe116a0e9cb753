#include "legdef/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace legdef {

namespace {

// Full multivariate division: every term of the remainder is reduced.
MultiPoly reduce_full(MultiPoly p, const std::vector<MultiPoly>& gens, const MonomialOrder& ord) {
    std::vector<std::pair<Exps, Rat>> lts;
    lts.reserve(gens.size());
    for (auto& g : gens) lts.push_back(g.leading_term(ord));

    MultiPoly rem(p.vars);
    while (!p.is_zero()) {
        auto [lm, lc] = p.leading_term(ord);
        bool reduced = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!monomial_divides(lts[i].first, lm)) continue;
            Exps q = monomial_div(lm, lts[i].first);
            Rat f = lc / lts[i].second;
            p = p - gens[i] * MultiPoly::monomial(p.vars, q, f);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.set(lm, lc);
            p.set(lm, Rat(0));
        }
    }
    return rem;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
    auto [lmf, lcf] = f.leading_term(ord);
    auto [lmg, lcg] = g.leading_term(ord);
    Exps l = monomial_lcm(lmf, lmg);
    MultiPoly a = f * MultiPoly::monomial(f.vars, monomial_div(l, lmf), 1 / lcf);
    MultiPoly b = g * MultiPoly::monomial(g.vars, monomial_div(l, lmg), 1 / lcg);
    return a - b;
}

struct Pair {
    int sugar;
    int lcm_deg;
    int i, j;
    bool operator<(const Pair& o) const {
        if (sugar != o.sugar) return sugar < o.sugar;
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace

IdealBasis groebner(const IdealBasis& basis) {
    const MonomialOrder& ord = basis.order;
    std::vector<MultiPoly> G;
    std::vector<int> sugar;
    for (auto& g : basis.generators) {
        if (g.is_zero()) continue;
        G.push_back(g);
        sugar.push_back(g.degree());
    }
    if (G.empty()) {
        IdealBasis r = basis;
        r.reduced_groebner = std::vector<MultiPoly>{};
        return r;
    }
    const std::vector<std::string>& vars = G.front().vars;

    std::set<Pair> queue;
    std::set<std::pair<int, int>> pending;  // pairs not yet treated
    auto push_pair = [&](int i, int j) {
        Exps l = monomial_lcm(G[i].leading_term(ord).first, G[j].leading_term(ord).first);
        int s = std::max(sugar[i] - G[i].degree(), sugar[j] - G[j].degree()) + total_degree(l);
        queue.insert({s, total_degree(l), i, j});
        pending.insert({i, j});
    };
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) push_pair(int(i), int(j));

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({pr.i, pr.j});

        Exps lmi = G[pr.i].leading_term(ord).first;
        Exps lmj = G[pr.j].leading_term(ord).first;
        Exps l = monomial_lcm(lmi, lmj);
        // Buchberger's first criterion: coprime leading monomials.
        if (l == monomial_mul(lmi, lmj)) continue;
        // Chain criterion.
        bool skip = false;
        for (size_t k = 0; k < G.size(); ++k) {
            if (int(k) == pr.i || int(k) == pr.j) continue;
            if (!monomial_divides(G[k].leading_term(ord).first, l)) continue;
            std::pair<int, int> key_ik{std::min(pr.i, int(k)), std::max(pr.i, int(k))};
            std::pair<int, int> key_jk{std::min(pr.j, int(k)), std::max(pr.j, int(k))};
            if (!pending.count(key_ik) && !pending.count(key_jk)) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        MultiPoly s = s_polynomial(G[pr.i], G[pr.j], ord);
        MultiPoly r = reduce_full(std::move(s), G, ord);
        if (r.is_zero()) continue;
        int new_sugar = std::max(sugar[pr.i] + total_degree(monomial_div(l, lmi)),
                                 sugar[pr.j] + total_degree(monomial_div(l, lmj)));
        G.push_back(r);
        sugar.push_back(new_sugar);
        int n = int(G.size()) - 1;
        for (int i = 0; i < n; ++i) push_pair(i, n);
    }

    // Minimalize: drop generators whose leading monomial is divisible by
    // the leading monomial of another element.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < G.size(); ++i) {
        Exps lmi = G[i].leading_term(ord).first;
        bool redundant = false;
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            Exps lmj = G[j].leading_term(ord).first;
            if (monomial_divides(lmj, lmi) && (lmj != lmi || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // Interreduce tails and make monic.
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : reduce_full(minimal[i], others, ord);
        auto [lm, lc] = r.leading_term(ord);
        reduced.push_back(r * (1 / lc));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
    });

    IdealBasis result(std::vector<MultiPoly>(reduced), ord);
    result.generators = basis.generators;
    result.reduced_groebner = std::move(reduced);
    return result;
}

void ensure_groebner(IdealBasis& basis) {
    if (!basis.reduced_groebner) basis = groebner(basis);
}

MultiPoly normal_form(const MultiPoly& p, const IdealBasis& basis) {
    if (basis.reduced_groebner) {
        if (basis.reduced_groebner->empty()) return p;
        return reduce_full(p, *basis.reduced_groebner, basis.order);
    }
    IdealBasis g = groebner(basis);
    if (g.reduced_groebner->empty()) return p;
    return reduce_full(p, *g.reduced_groebner, basis.order);
}

bool in_ideal(const MultiPoly& p, const IdealBasis& basis) {
    return normal_form(p, basis).is_zero();
}

IdealBasis eliminate(const IdealBasis& basis, const std::vector<std::string>& front_vars) {
    if (basis.generators.empty()) return basis;
    const std::vector<std::string>& vars = basis.generators.front().vars;
    std::vector<int> front_idx;
    std::vector<char> is_front(vars.size(), 0);
    for (auto& name : front_vars) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw std::invalid_argument("eliminate: unknown variable " + name);
        front_idx.push_back(int(it - vars.begin()));
        is_front[it - vars.begin()] = 1;
    }
    IdealBasis blocked(basis.generators, MonomialOrder::block(front_idx));
    IdealBasis gb = groebner(blocked);

    std::vector<std::string> rest_vars;
    for (size_t i = 0; i < vars.size(); ++i)
        if (!is_front[i]) rest_vars.push_back(vars[i]);

    std::vector<MultiPoly> kept;
    for (auto& g : *gb.reduced_groebner) {
        bool free_of_front = true;
        for (int i : front_idx)
            if (g.uses_var(i)) {
                free_of_front = false;
                break;
            }
        if (!free_of_front) continue;
        MultiPoly h(rest_vars);
        for (auto& [e, c] : g.terms) {
            Exps ne;
            for (size_t i = 0; i < vars.size(); ++i)
                if (!is_front[i]) ne.push_back(e[i]);
            h.terms[ne] = c;
        }
        kept.push_back(std::move(h));
    }
    return IdealBasis(std::move(kept), MonomialOrder::degrevlex());
}

bool same_ideal(const IdealBasis& a, const IdealBasis& b) {
    IdealBasis ga = groebner(a), gb = groebner(b);
    for (auto& g : *ga.reduced_groebner)
        if (!in_ideal(g, gb)) return false;
    for (auto& g : *gb.reduced_groebner)
        if (!in_ideal(g, ga)) return false;
    return true;
}

IdealBasis saturate(const IdealBasis& basis, const MultiPoly& g) {
    if (basis.generators.empty() || g.is_zero()) return basis;
    const std::vector<std::string>& vars = basis.generators.front().vars;
    std::vector<std::string> ext{"zsat@"};
    ext.insert(ext.end(), vars.begin(), vars.end());
    std::vector<MultiPoly> gens;
    for (auto& p : basis.generators) gens.push_back(p.lifted(ext));
    gens.push_back(MultiPoly::constant(ext, 1) -
                   MultiPoly::variable(ext, "zsat@") * g.lifted(ext));
    IdealBasis extended(std::move(gens), MonomialOrder::degrevlex());
    IdealBasis out = eliminate(extended, {"zsat@"});
    out.order = basis.order;
    out.reduced_groebner.reset();
    return out;
}

std::vector<Exps> monomials_of_degree(int nvars, int degree) {
    std::vector<Exps> out;
    Exps cur(nvars, 0);
    // Lexicographic enumeration of compositions of `degree` into nvars parts.
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            cur[var] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[var] = k;
            rec(var + 1, left - k);
        }
        cur[var] = 0;
    };
    if (nvars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(0, degree);
    return out;
}

std::vector<Exps> standard_monomials(const IdealBasis& basis, int bound) {
    IdealBasis gb = basis;
    ensure_groebner(gb);
    std::vector<Exps> lms;
    for (auto& g : *gb.reduced_groebner) lms.push_back(g.leading_term(gb.order).first);
    int nvars = int(basis.generators.front().vars.size());

    std::vector<Exps> out;
    bool every_degree_contributes = true;
    for (int d = 0; d < bound; ++d) {
        bool contributed = false;
        for (auto& m : monomials_of_degree(nvars, d)) {
            bool standard = true;
            for (auto& lm : lms)
                if (monomial_divides(lm, m)) {
                    standard = false;
                    break;
                }
            if (standard) {
                out.push_back(m);
                contributed = true;
            }
        }
        if (!contributed) every_degree_contributes = false;
    }
    if (every_degree_contributes && bound > 0)
        throw NonFiniteQuotient("standard_monomials: quotient not finite below bound " +
                                std::to_string(bound));
    std::sort(out.begin(), out.end(),
              [&](const Exps& a, const Exps& b) { return gb.order.greater(a, b); });
    return out;
}

}  // namespace legdef
