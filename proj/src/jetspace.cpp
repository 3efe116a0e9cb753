#include "legdef/jetspace.hpp"

#include <algorithm>
#include <set>

#include "legdef/groebner.hpp"

namespace legdef {

JetSpace JetSpace::make(const std::vector<std::string>& vars, int bound) {
    JetSpace js;
    js.vars = vars;
    js.bound = bound;
    for (int d = 0; d < bound; ++d)
        for (auto& m : monomials_of_degree(int(vars.size()), d)) js.basis.push_back(m);
    MonomialOrder drl = MonomialOrder::degrevlex();
    std::sort(js.basis.begin(), js.basis.end(),
              [&](const Exps& a, const Exps& b) { return drl.greater(a, b); });
    for (size_t i = 0; i < js.basis.size(); ++i) js.index[js.basis[i]] = int(i);
    return js;
}

QVec JetSpace::to_vec(const MultiPoly& p) const {
    QVec v(dim(), Rat(0));
    for (auto& [e, c] : p.terms) {
        auto it = index.find(e);
        if (it != index.end()) v[it->second] = c;
    }
    return v;
}

MultiPoly JetSpace::from_vec(const QVec& v) const {
    MultiPoly p(vars);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) p.terms[basis[i]] = v[i];
    return p;
}

Echelon jet_span(const std::vector<MultiPoly>& gens, const JetSpace& jets) {
    std::vector<QVec> rows;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        int og = g.order();
        for (auto& m : jets.basis) {
            if (og + total_degree(m) >= jets.bound) continue;  // product truncates to zero
            MultiPoly prod = g * MultiPoly::monomial(jets.vars, m, Rat(1));
            QVec v = jets.to_vec(prod);
            bool nz = false;
            for (auto& x : v)
                if (x != 0) {
                    nz = true;
                    break;
                }
            if (nz) rows.push_back(std::move(v));
        }
    }
    return echelon(std::move(rows), jets.dim());
}

JetQuotient jet_quotient_basis(const std::vector<MultiPoly>& sub,
                               const std::vector<MultiPoly>& super, const JetSpace& jets,
                               const std::vector<Exps>* candidates) {
    Echelon esub = jet_span(sub, jets);
    Echelon esuper = jet_span(super, jets);

    for (auto& row : esub.rows)
        if (!esuper.in_row_space(row))
            throw SubspaceViolation(
                "jet_quotient_basis: sub-span is not contained in super-span "
                "(wrong degree bound or wrong generators)");

    int dim = esuper.rank() - esub.rank();
    JetQuotient q;
    q.dimension = dim;
    if (dim == 0) return q;

    // Greedy monomial sweep: candidates ordered by the last exponent first
    // (for plane curves: ascending y-power, then ascending x-power), each
    // admitted when it lies in the super-span and is independent of the
    // sub-span plus the earlier picks.
    std::vector<Exps> sweep = candidates ? *candidates : jets.basis;
    std::sort(sweep.begin(), sweep.end(), [](const Exps& a, const Exps& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });

    Echelon grow = esub;
    auto insert_row = [&](QVec red) {
        int piv = -1;
        for (size_t j = 0; j < red.size(); ++j)
            if (red[j] != 0) {
                piv = int(j);
                break;
            }
        Rat inv = 1 / red[size_t(piv)];
        for (auto& x : red) x *= inv;
        size_t pos = 0;
        while (pos < grow.pivots.size() && grow.pivots[pos] < piv) ++pos;
        grow.rows.insert(grow.rows.begin() + pos, std::move(red));
        grow.pivots.insert(grow.pivots.begin() + pos, piv);
    };
    for (auto& m : sweep) {
        if (int(q.reps.size()) == dim) break;
        auto it = jets.index.find(m);
        if (it == jets.index.end()) continue;
        QVec unit(jets.dim(), Rat(0));
        unit[size_t(it->second)] = 1;
        if (!esuper.in_row_space(unit)) continue;
        QVec red = unit;
        if (grow.reduce(red)) continue;  // dependent
        insert_row(std::move(red));
        q.reps.push_back(MultiPoly::monomial(jets.vars, m, Rat(1)));
    }

    // Fallback when pure monomials do not span the quotient: finish with
    // rows of the super-span echelon.
    for (auto& row : esuper.rows) {
        if (int(q.reps.size()) == dim) break;
        QVec red = row;
        if (grow.reduce(red)) continue;
        insert_row(std::move(red));
        q.reps.push_back(jets.from_vec(row));
    }
    if (int(q.reps.size()) != dim)
        throw std::logic_error("jet_quotient_basis: failed to realize quotient basis");
    return q;
}

}  // namespace legdef
