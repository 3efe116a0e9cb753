#include "legdef/conormal.hpp"

#include <algorithm>

namespace legdef {

namespace {

TruncSeries shifted(const TruncSeries& s, int j) {
    TruncSeries out;
    out.trunc = s.trunc + j;
    for (auto& [d, c] : s.coeffs) {
        if (d + j < 0) throw std::invalid_argument("shifted: negative degree");
        out.coeffs[d + j] = c;
    }
    return out;
}

}  // namespace

void verify_legendrian(const LegendrianCurve& L) {
    for (auto& b : L.branches) {
        TruncSeries lhs = derivative(b.y) - b.p * derivative(b.x);
        if (!lhs.known_zero())
            throw std::logic_error("Legendrian identity dy - p dx = 0 violated on a branch");
    }
}

LegendrianCurve conormal_of(const PlaneCurve& c) {
    std::vector<Branch> branches = c.branches;
    if (branches.empty()) {
        if (!c.equation) throw std::invalid_argument("conormal_of: curve has no data");
        branches = branches_of(*c.equation);
    }
    LegendrianCurve L;
    for (auto& b : branches) {
        TruncSeries dx = derivative(b.x), dy = derivative(b.y);
        if (dx.known_zero())
            throw std::invalid_argument("conormal_of: branch with constant x (fiber case)");
        int j = dx.order();
        if (dy.order() < j)
            throw std::invalid_argument("conormal_of: dy/dx is not a power series on a branch");
        TruncSeries p = div_unit(shifted(dy, -j), shifted(dx, -j));
        L.branches.push_back({b.x, b.y, p});
    }
    verify_legendrian(L);
    return L;
}

RelConormalIdeal relative_conormal_ideal(const MultiPoly& F,
                                         const std::vector<std::string>& space_vars,
                                         const std::vector<std::string>& xi_vars,
                                         const std::vector<std::string>& params) {
    if (space_vars.size() != xi_vars.size())
        throw std::invalid_argument("relative_conormal_ideal: xi/space variable count mismatch");
    if (F.is_zero() || F.constant_term() != 0)
        throw std::invalid_argument("relative_conormal_ideal: F must vanish at the origin");

    std::vector<std::string> ring{"c"};
    for (auto& v : xi_vars) ring.push_back(v);
    for (auto& v : space_vars) ring.push_back(v);
    for (auto& v : params) ring.push_back(v);

    std::vector<MultiPoly> gens{F.lifted(ring)};
    MultiPoly cvar = MultiPoly::variable(ring, "c");
    for (size_t i = 0; i < space_vars.size(); ++i)
        gens.push_back(MultiPoly::variable(ring, xi_vars[i]) -
                       cvar * F.derivative(space_vars[i]).lifted(ring));

    IdealBasis full(std::move(gens), MonomialOrder::degrevlex());
    IdealBasis elim = eliminate(full, {"c"});

    RelConormalIdeal out;
    out.xi_vars = xi_vars;
    out.ring_vars = std::vector<std::string>(ring.begin() + 1, ring.end());
    ensure_groebner(elim);
    out.generators = std::move(elim);
    return out;
}

bool scale_invariance_check(const MultiPoly& F, const MultiPoly& unit,
                            const std::vector<std::string>& space_vars,
                            const std::vector<std::string>& xi_vars,
                            const std::vector<std::string>& params) {
    if (unit.constant_term() == 0)
        throw std::invalid_argument("scale_invariance_check: scaling factor is not a unit");
    RelConormalIdeal a = relative_conormal_ideal(F, space_vars, xi_vars, params);
    RelConormalIdeal b = relative_conormal_ideal(unit * F, space_vars, xi_vars, params);
    // The unit is only invertible locally at the origin; compare the
    // ideals after saturating away its zero set.
    std::vector<std::string> ring{"c"};
    for (auto& v : xi_vars) ring.push_back(v);
    for (auto& v : space_vars) ring.push_back(v);
    for (auto& v : params) ring.push_back(v);
    std::vector<std::string> rest(ring.begin() + 1, ring.end());
    MultiPoly u = unit.lifted(rest);
    return same_ideal(saturate(a.generators, u), saturate(b.generators, u));
}

GenericPositionReport generic_position(const LegendrianCurve& L) {
    GenericPositionReport rep;
    rep.generic = true;
    for (auto& b : L.branches) {
        GenericPositionReport::PerBranch pb;
        int ox = b.x.order(), oy = b.y.order(), op = b.p.order();
        pb.ok = (oy >= 2 * ox) && (op >= ox);
        pb.strict = pb.ok && (oy >= 2 * ox + 1);
        if (!pb.ok) {
            pb.note = "ord(x)=" + std::to_string(ox) + " ord(y)=" + std::to_string(oy) +
                      " ord(p)=" + std::to_string(op);
            rep.generic = false;
        } else if (pb.strict) {
            pb.note = "tangent cone {y = p = 0}";
        } else {
            Rat psi0 = b.p.coeff(op) / b.x.coeff(ox);
            pb.note = "tangent cone {y = p - " + rat_to_string(psi0) + "*x = 0}";
        }
        rep.branches.push_back(std::move(pb));
    }
    return rep;
}

bool xi_homogeneous(const RelConormalIdeal& ideal) {
    const std::vector<MultiPoly>& gens = *ideal.generators.reduced_groebner;
    if (gens.empty()) return true;
    const std::vector<std::string>& vars = gens.front().vars;
    std::vector<char> is_xi(vars.size(), 0);
    for (auto& name : ideal.xi_vars) {
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it != vars.end()) is_xi[size_t(it - vars.begin())] = 1;
    }
    for (auto& g : gens) {
        int deg = -1;
        for (auto& [e, c] : g.terms) {
            int d = 0;
            for (size_t i = 0; i < e.size(); ++i)
                if (is_xi[i]) d += e[i];
            if (deg < 0) deg = d;
            if (d != deg) return false;
        }
    }
    return true;
}

}  // namespace legdef
