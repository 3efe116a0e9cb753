#include "legdef/deform.hpp"

#include <algorithm>
#include <set>

#include "legdef/groebner.hpp"

namespace legdef {

namespace {

const std::vector<std::string> kXY{"x", "y"};

std::vector<MultiPoly> base_ideal(const MultiPoly& f) {
    MultiPoly x = MultiPoly::variable(kXY, "x"), y = MultiPoly::variable(kXY, "y");
    MultiPoly fx = f.derivative("x"), fy = f.derivative("y");
    return {f, x * fx, y * fx, x * x * fy, y * fy};
}

TruncSeries pow_series(const TruncSeries& s, int k) {
    TruncSeries out = TruncSeries::monomial(0, 1, s.trunc + (k > 0 ? (k - 1) * s.order() : 0));
    for (int i = 0; i < k; ++i) out = out * s;
    return out;
}

}  // namespace

int jet_bound_of(const MultiPoly& f) {
    std::vector<MultiPoly> gens = base_ideal(f);
    for (int n = 2; n <= 200; ++n) {
        JetSpace jets = JetSpace::make(kXY, n + 1);
        Echelon span = jet_span(gens, jets);
        bool ok = true;
        for (auto& m : monomials_of_degree(2, n)) {
            QVec v(jets.dim(), Rat(0));
            v[size_t(jets.index.at(m))] = 1;
            if (!span.in_row_space(v)) {
                ok = false;
                break;
            }
        }
        if (ok) return n;
    }
    throw std::runtime_error("jet_bound_of: no finite bound below 200 (non-isolated input?)");
}

DeformSetup deform_setup(const MultiPoly& f) {
    PlaneCurve pc;
    pc.equation = f.lifted(kXY);
    GenericityReport gen = is_generic(pc);
    if (!gen.generic)
        throw std::invalid_argument("deform_setup: curve is not generic (" + gen.witness + ")");

    DeformSetup s;
    s.f = f.lifted(kXY);
    s.jet_bound = jet_bound_of(s.f);
    s.jets = JetSpace::make(kXY, s.jet_bound);
    s.base = base_ideal(s.f);

    s.branches = branches_of(s.f);
    for (auto& b : s.branches) {
        BranchInvariants inv = branch_invariants(b);
        s.conductors.push_back(inv.semigroup.conductor);
    }
    for (size_t i = 0; i < s.branches.size(); ++i) {
        int bt = (s.jet_bound - 1) * s.branches[i].y.order() + s.conductors[i];
        s.match_bound.push_back(bt);
        // guard band; p = dy/dx drops ord(x) orders of truncation
        s.branches[i] = s.branches[i].with_truncation(bt + s.branches[i].x.order() + 3);
    }
    PlaneCurve raised;
    raised.branches = s.branches;
    s.conormal = conormal_of(raised);
    return s;
}

namespace {

MultiPoly solve_h(DeformSetup& s, int ell, bool reversed_columns) {
    // candidate monomials: x^i y^j with order <= the matching bound on some
    // branch (anything larger cannot contribute to the matched coefficients)
    std::set<Exps> cand_set;
    for (size_t t = 0; t < s.conormal.branches.size(); ++t) {
        auto& br = s.conormal.branches[t];
        int ox = br.x.order(), oy = br.y.order(), bt = s.match_bound[t];
        for (int i = 0; i * ox <= bt; ++i)
            for (int j = 0; i * ox + j * oy <= bt; ++j) cand_set.insert(Exps{i, j});
    }
    std::vector<Exps> cols(cand_set.begin(), cand_set.end());
    if (reversed_columns) std::reverse(cols.begin(), cols.end());
    const size_t n_mon = cols.size();

    std::vector<QVec> rows;
    QVec rhs;
    for (size_t t = 0; t < s.conormal.branches.size(); ++t) {
        auto& br = s.conormal.branches[t];
        int bt = s.match_bound[t];
        if (std::min({br.x.trunc, br.y.trunc, br.p.trunc}) <= bt)
            throw std::runtime_error("compute_h: branch truncation below the matching bound");
        TruncSeries target =
            (pow_series(br.p, ell) * Rat(ell + 1)) *
                substitute(s.f.derivative("x"), {{"x", br.x}, {"y", br.y}}) +
            (pow_series(br.p, ell + 1) * Rat(ell)) *
                substitute(s.f.derivative("y"), {{"x", br.x}, {"y", br.y}});
        // series of every candidate monomial along the branch
        int imax = 0, jmax = 0;
        for (auto& e : cols) {
            imax = std::max(imax, e[0]);
            jmax = std::max(jmax, e[1]);
        }
        std::vector<TruncSeries> xpow{TruncSeries::monomial(0, 1, bt + 2)};
        for (int k = 1; k <= imax; ++k) xpow.push_back(xpow.back() * br.x);
        std::vector<TruncSeries> ypow{TruncSeries::monomial(0, 1, bt + 2)};
        for (int k = 1; k <= jmax; ++k) ypow.push_back(ypow.back() * br.y);
        std::vector<TruncSeries> mono(cols.size());
        for (size_t j = 0; j < cols.size(); ++j)
            mono[j] = xpow[size_t(cols[j][0])] * ypow[size_t(cols[j][1])];
        for (int d = 0; d <= bt; ++d) {
            QVec row(n_mon, Rat(0));
            bool nz = false;
            for (size_t j = 0; j < cols.size(); ++j) {
                row[j] = mono[j].coeff(d);
                if (row[j] != 0) nz = true;
            }
            Rat b = target.coeff(d);
            if (!nz && b == 0) continue;
            rows.push_back(std::move(row));
            rhs.push_back(b);
        }
    }

    auto sol = solve_linear(rows, rhs);
    if (!sol)
        throw std::runtime_error(
            "compute_h: no polynomial matches the branch series (non-generic input?)");
    MultiPoly h(kXY);
    for (size_t j = 0; j < cols.size(); ++j)
        if ((*sol)[j] != 0) h.set(cols[j], (*sol)[j]);
    return h;
}

}  // namespace

HSeries compute_h(DeformSetup& s, int ell) {
    if (ell < 1) throw std::invalid_argument("compute_h: ell must be positive");
    IdealBasis fid({s.f}, MonomialOrder::degrevlex());

    MultiPoly h1 = normal_form(solve_h(s, ell, false), fid);
    MultiPoly h2 = normal_form(solve_h(s, ell, true), fid);
    if (!(h1 == h2)) {
        // representatives may differ by an element of <f> not visible to
        // polynomial division; accept only if the difference vanishes along
        // every branch past the matching bound
        MultiPoly diff = h1 - h2;
        for (size_t t = 0; t < s.conormal.branches.size(); ++t) {
            auto& br = s.conormal.branches[t];
            TruncSeries res = substitute(diff, {{"x", br.x}, {"y", br.y}});
            if (!res.known_zero() && res.order() <= s.match_bound[t])
                throw std::logic_error("compute_h: solution not unique mod <f>");
        }
    }

    HSeries out;
    out.ell = ell;
    out.representative = h1;
    out.absorbed = h1.is_zero() || h1.order() >= s.jet_bound;
    s.h_cache[ell] = h1;
    return out;
}

MuIdeal ideal_mu(DeformSetup& s) {
    MuIdeal out;
    out.jet_bound = s.jet_bound;
    out.generators = s.base;

    for (int ell = 1;; ++ell) {
        // stop once the target's order exceeds the bound on every branch
        bool beyond = true;
        for (size_t t = 0; t < s.conormal.branches.size(); ++t) {
            auto& br = s.conormal.branches[t];
            TruncSeries target =
                (pow_series(br.p, ell) * Rat(ell + 1)) *
                    substitute(s.f.derivative("x"), {{"x", br.x}, {"y", br.y}}) +
                (pow_series(br.p, ell + 1) * Rat(ell)) *
                    substitute(s.f.derivative("y"), {{"x", br.x}, {"y", br.y}});
            if (!target.known_zero() && target.order() <= s.match_bound[t]) {
                beyond = false;
                break;
            }
        }
        if (beyond) {
            out.l_max = ell - 1;
            break;
        }
        if (ell > 100) throw std::runtime_error("ideal_mu: h-series did not terminate");
        auto it = s.h_cache.find(ell);
        MultiPoly h = (it != s.h_cache.end()) ? it->second : compute_h(s, ell).representative;
        if (!h.is_zero()) out.generators.push_back(h);
    }
    return out;
}

NewtonConditions es_monomial_conditions(const MultiPoly& f) {
    Classification cl = classify(f.lifted(kXY));
    if (cl.kind == CurveClass::Degenerate)
        throw std::invalid_argument("equisingularity ideal: input is Newton degenerate");
    NewtonConditions out;
    out.faces = cl.diagram.faces;
    return out;
}

std::vector<MultiPoly> ideal_es_nnd(const DeformSetup& s) {
    NewtonConditions cond = es_monomial_conditions(s.f);
    MultiPoly x = MultiPoly::variable(kXY, "x"), y = MultiPoly::variable(kXY, "y");
    std::vector<MultiPoly> out{x * x * s.f.derivative("y"), y * s.f.derivative("x")};
    for (auto& m : s.jets.basis) {
        bool above = true;
        for (auto& face : cond.faces)
            if (long(face.u) * m[0] + long(face.v) * m[1] < face.d) {
                above = false;
                break;
            }
        if (above) out.push_back(MultiPoly::monomial(kXY, m, 1));
    }
    return out;
}

namespace {

SemiuniversalDeformation quotient_of(DeformSetup& s, const std::vector<MultiPoly>& sub,
                                     const std::vector<MultiPoly>& super) {
    // representatives are drawn from the monomials on or above every
    // Newton face line, as in the paper's displays
    NewtonConditions cond = es_monomial_conditions(s.f);
    std::vector<Exps> admitted;
    for (auto& m : s.jets.basis) {
        bool above = true;
        for (auto& face : cond.faces)
            if (long(face.u) * m[0] + long(face.v) * m[1] < face.d) {
                above = false;
                break;
            }
        if (above) admitted.push_back(m);
    }
    JetQuotient q = jet_quotient_basis(sub, super, s.jets, &admitted);
    SemiuniversalDeformation out;
    out.dimension = q.dimension;
    out.reps = q.reps;
    std::string g = s.f.str();
    for (size_t i = 0; i < q.reps.size(); ++i)
        g += " + s" + std::to_string(i + 1) + "*(" + q.reps[i].str() + ")";
    out.display = "G = " + g;
    return out;
}

}  // namespace

SemiuniversalDeformation quotient_basis(DeformSetup& s) {
    MuIdeal mu = ideal_mu(s);
    return quotient_of(s, mu.generators, ideal_es_nnd(s));
}

SemiuniversalDeformation es_arrow_basis(DeformSetup& s) {
    return quotient_of(s, s.base, ideal_es_nnd(s));
}

MultiPoly act_first_order(DeformSetup& s, const MultiPoly& g, const InfinitesimalContact& T) {
    MultiPoly out = g.lifted(kXY);
    int pi = T.alpha.var_index("p");

    // alpha = sum_k alpha_k(x, y) p^k
    std::map<int, MultiPoly> alpha_k;
    for (auto& [e, c] : T.alpha.terms) {
        int k = e[size_t(pi)];
        Exps xy{e[0], e[1]};
        auto [it, fresh] = alpha_k.try_emplace(k, MultiPoly(kXY));
        it->second.set(xy, it->second.coeff(xy) + c);
    }
    MultiPoly beta0 = MultiPoly(kXY);
    for (auto& [e, c] : T.beta0.terms) beta0.set({e[0], e[1]}, c);

    if (alpha_k.count(0)) out = out + alpha_k[0] * s.f.derivative("x");
    out = out + beta0 * s.f.derivative("y");
    for (auto& [k, ak] : alpha_k) {
        if (k == 0) continue;
        auto it = s.h_cache.find(k);
        MultiPoly hk = (it != s.h_cache.end()) ? it->second : compute_h(s, k).representative;
        out = out + ak * hk * (Rat(1) / Rat(k + 1));
    }
    return out.truncated(s.jet_bound);
}

bool is_trivial_first_order(DeformSetup& s, const MultiPoly& g) {
    MuIdeal mu = ideal_mu(s);
    Echelon span = jet_span(mu.generators, s.jets);
    return span.in_row_space(s.jets.to_vec(g.lifted(kXY)));
}

std::vector<std::vector<std::pair<TruncSeries, TruncSeries>>> ihat_generators(
    const LegendrianCurve& conormal, int k_max) {
    if (!generic_position(conormal).generic)
        throw std::invalid_argument("ihat_generators: conormal not in generic position");
    std::vector<std::vector<std::pair<TruncSeries, TruncSeries>>> out;
    for (int k = 1; k <= k_max; ++k) {
        std::vector<std::pair<TruncSeries, TruncSeries>> row;
        for (auto& b : conormal.branches)
            row.push_back({pow_series(b.p, k) * Rat(k + 1), pow_series(b.p, k + 1) * Rat(k)});
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace legdef
