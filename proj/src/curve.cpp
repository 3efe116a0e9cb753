#include "legdef/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "legdef/groebner.hpp"
#include "legdef/resultant.hpp"

namespace legdef {

namespace {

// Multiply a series by t^j (j may be negative when divisible).
TruncSeries shifted(const TruncSeries& s, int j) {
    TruncSeries out;
    out.trunc = s.trunc + j;
    for (auto& [d, c] : s.coeffs) {
        if (d + j < 0) throw std::invalid_argument("shifted: negative degree");
        out.coeffs[d + j] = c;
    }
    return out;
}

MultiPoly series_to_poly(const TruncSeries& s, const std::vector<std::string>& vars,
                         const std::string& var) {
    MultiPoly p(vars);
    int v = p.var_index(var);
    for (auto& [d, c] : s.coeffs) {
        Exps e(vars.size(), 0);
        e[size_t(v)] = d;
        p.terms[e] = c;
    }
    return p;
}

Rat rat_pow(const Rat& c, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= c;
    return r;
}

}  // namespace

Branch Branch::with_truncation(int trunc) const {
    Branch b = *this;
    if (exact) {
        b.x.trunc = std::max(x.trunc, trunc);
        b.y.trunc = std::max(y.trunc, trunc);
    } else {
        b.x = x.truncated(trunc);
        b.y = y.truncated(trunc);
    }
    return b;
}

Branch normalize_branch(const Branch& b) {
    if (b.normalized) return b;
    int k = b.x.order();
    if (b.x.known_zero() || k < 1)
        throw std::invalid_argument("normalize_branch: x must have positive order");
    TruncSeries u = shifted(b.x, -k);  // unit
    TruncSeries v = kth_root_unit(u, k);
    TruncSeries q = shifted(v, 1);  // q^k = x, ord 1
    TruncSeries r = invert_reparam(q);
    Branch out;
    out.x = TruncSeries::monomial(k, 1, compose(b.x, r).trunc);
    out.y = compose(b.y, r);
    out.normalized = true;
    out.exact = false;  // reparametrization is genuinely truncated
    return out;
}

void check_consistency(PlaneCurve& c) {
    if (c.equation && !c.branches.empty()) {
        for (auto& b : c.branches) {
            auto res = substitute(*c.equation, {{"x", b.x}, {"y", b.y}});
            if (!res.known_zero())
                throw std::invalid_argument(
                    "plane curve: equation does not vanish on a supplied branch");
        }
    }
    c.consistency_checked = true;
}

NewtonDiagram newton_diagram(const MultiPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("newton_diagram: zero polynomial");
    if (f.constant_term() != 0) throw std::invalid_argument("newton_diagram: unit input");

    NewtonDiagram nd;
    for (auto& [e, c] : f.terms) nd.support.push_back({e[0], e[1]});
    std::sort(nd.support.begin(), nd.support.end());

    // Start at the support point with minimal i (then minimal j); walk the
    // lower-left hull by repeatedly taking the steepest descending edge.
    std::pair<int, int> cur = nd.support.front();
    for (auto& p : nd.support)
        if (p.first < cur.first || (p.first == cur.first && p.second < cur.second)) cur = p;
    nd.vertices.push_back(cur);
    while (true) {
        std::pair<int, int> best{-1, -1};
        for (auto& p : nd.support) {
            if (p.first <= cur.first || p.second >= cur.second) continue;
            if (best.first < 0) {
                best = p;
                continue;
            }
            // steeper first: compare (cur.j - p.j)/(p.i - cur.i)
            long lhs = long(cur.second - p.second) * (best.first - cur.first);
            long rhs = long(cur.second - best.second) * (p.first - cur.first);
            if (lhs > rhs || (lhs == rhs && p.first > best.first)) best = p;
        }
        if (best.first < 0) break;
        nd.vertices.push_back(best);
        cur = best;
    }

    for (size_t i = 0; i + 1 < nd.vertices.size(); ++i) {
        auto [i0, j0] = nd.vertices[i];
        auto [i1, j1] = nd.vertices[i + 1];
        int di = i1 - i0, dj = j0 - j1;
        int g = std::gcd(di, dj);
        NewtonFace face;
        face.u = dj / g;
        face.v = di / g;
        face.d = long(face.u) * i0 + long(face.v) * j0;
        face.poly = MultiPoly(f.vars);
        for (auto& [e, c] : f.terms)
            if (long(face.u) * e[0] + long(face.v) * e[1] == face.d) {
                face.points.push_back({e[0], e[1]});
                face.poly.terms[e] = c;
            }
        std::sort(face.points.begin(), face.points.end());
        nd.faces.push_back(std::move(face));
    }

    // every support point on or above every face line
    for (auto& face : nd.faces)
        for (auto& [i, j] : nd.support)
            if (long(face.u) * i + long(face.v) * j < face.d)
                throw std::logic_error("newton_diagram: support below a face line");
    return nd;
}

namespace {

// Face polynomial has no singular point off {xy = 0}: the ideal
// <g, g_x, g_y, 1 - z*x*y> is the whole ring.
bool face_nondegenerate(const MultiPoly& face) {
    std::vector<std::string> vars{"x", "y", "z"};
    MultiPoly g = face.lifted(vars);
    std::vector<MultiPoly> gens{
        g, g.derivative("x"), g.derivative("y"),
        MultiPoly::constant(vars, 1) - MultiPoly::parse("z*x*y", vars)};
    IdealBasis b(gens, MonomialOrder::degrevlex());
    return in_ideal(MultiPoly::constant(vars, 1), b);
}

}  // namespace

Classification classify(const MultiPoly& f) {
    int xi = f.var_index("x"), yi = f.var_index("y");
    bool xdiv = true, ydiv = true;
    for (auto& [e, c] : f.terms) {
        if (e[xi] == 0) xdiv = false;
        if (e[yi] == 0) ydiv = false;
    }
    if (xdiv || ydiv)
        throw std::invalid_argument(std::string("classify: ") + (xdiv ? "x" : "y") +
                                    " divides the input");

    Classification out;
    out.diagram = newton_diagram(f);
    bool all_ok = true;
    for (auto& face : out.diagram.faces)
        if (!face_nondegenerate(face.poly)) {
            all_ok = false;
            out.reason = "face (" + std::to_string(face.u) + "," + std::to_string(face.v) + ";" +
                         std::to_string(face.d) + ") has a singular point off the axes";
            break;
        }
    if (!all_ok) {
        out.kind = CurveClass::Degenerate;
    } else if (out.diagram.faces.size() == 1) {
        out.kind = CurveClass::SQH;
        out.reason = "single nondegenerate face";
    } else {
        out.kind = CurveClass::NND;
        out.reason = "all faces nondegenerate";
    }
    return out;
}

namespace {

// Lowest homogeneous part; must be c*(y - a*x)^k. Returns (k, a).
std::pair<int, Rat> tangent_cone_line(const MultiPoly& f) {
    int k = f.order();
    int xi = f.var_index("x"), yi = f.var_index("y");
    MultiPoly low(f.vars);
    for (auto& [e, c] : f.terms)
        if (total_degree(e) == k) low.terms[e] = c;

    Exps yk(f.vars.size(), 0);
    yk[size_t(yi)] = k;
    Rat c = low.coeff(yk);
    if (c == 0)
        throw std::invalid_argument(
            "tangent cone contains the vertical line x = 0 or is not a single line");
    Exps xyk(f.vars.size(), 0);
    xyk[size_t(yi)] = k - 1;
    xyk[size_t(xi)] = 1;
    Rat a = (k > 0) ? -low.coeff(xyk) / (Rat(k) * c) : Rat(0);
    // verify low == c*(y - a*x)^k
    MultiPoly line = MultiPoly::variable(f.vars, "y") - MultiPoly::variable(f.vars, "x") * a;
    if (!(line.pow(k) * c == low))
        throw std::invalid_argument("tangent cone is not a single line");
    return {k, a};
}

}  // namespace

GenericityReport is_generic(const PlaneCurve& c) {
    GenericityReport rep;
    std::optional<bool> by_branches, by_ideal;
    std::string note;

    if (!c.branches.empty()) {
        // tangent cone from the branches: every branch must satisfy
        // ord(x) < ord(y) after a common shear
        Rat a(0);
        bool shear_known = false;
        for (auto& b : c.branches) {
            int ox = b.x.order(), oy = b.y.order();
            if (ox > oy || b.x.known_zero())
                throw std::invalid_argument("is_generic: branch tangent to {x = 0}");
            if (ox == oy) {
                Rat r = b.y.coeff(oy) / b.x.coeff(ox);
                if (shear_known && r != a)
                    throw std::invalid_argument("is_generic: tangent cone is not a single line");
                a = r;
                shear_known = true;
            }
        }
        bool ok = true;
        for (size_t i = 0; i < c.branches.size(); ++i) {
            const Branch& b = c.branches[i];
            TruncSeries ysh = b.y - b.x * a;
            int ox = b.x.order(), oy = ysh.order();
            if (oy < ox)
                throw std::invalid_argument("is_generic: tangent cone is not a single line");
            if (oy < 2 * ox) {
                ok = false;
                rep.witness = "branch " + std::to_string(i) + ": ord(y) = " + std::to_string(oy) +
                              " < 2*ord(x) = " + std::to_string(2 * ox);
                break;
            }
        }
        by_branches = ok;
        if (shear_known && a != 0) note = "shear y -> y + " + rat_to_string(a) + "*x applied; ";
    }

    if (c.equation) {
        auto [k, a] = tangent_cone_line(*c.equation);
        MultiPoly f = *c.equation;
        if (a != 0) {
            MultiPoly ximg = MultiPoly::variable(f.vars, "x");
            MultiPoly yimg = MultiPoly::variable(f.vars, "y") + ximg * a;
            f = f.substituted({{"x", ximg}, {"y", yimg}});
            note += "shear recorded for equation; ";
        }
        std::vector<MultiPoly> gens;
        for (int i = 0; i <= k; ++i) {
            Exps e(f.vars.size(), 0);
            e[size_t(f.var_index("x"))] = 2 * i;
            e[size_t(f.var_index("y"))] = k - i;
            gens.push_back(MultiPoly::monomial(f.vars, e, 1));
        }
        IdealBasis b(gens, MonomialOrder::degrevlex());
        bool ok = in_ideal(f, b);
        by_ideal = ok;
        if (!ok && rep.witness.empty())
            rep.witness = "f not in (x^2, y)^" + std::to_string(k);
    }

    if (by_branches && by_ideal && *by_branches != *by_ideal)
        throw std::logic_error("is_generic: branch and ideal criteria disagree");
    rep.generic = by_branches ? *by_branches : (by_ideal ? *by_ideal : false);
    if (!by_branches && !by_ideal)
        throw std::invalid_argument("is_generic: curve has neither equation nor branches");
    if (rep.generic) rep.witness = note + "all branches satisfy ord(y) >= 2*ord(x)";
    return rep;
}

namespace {

std::vector<Rat> rational_roots(std::vector<Rat> q) {
    // strip trailing/leading zeros; roots of sum q[m] w^m
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.empty() || q.size() == 1) return {};
    std::vector<Rat> roots;
    // deflate rational roots found by search over divisors
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> out;
        mpz_class a = abs(n);
        if (a == 0) return out;
        for (mpz_class d = 1; d * d <= a; ++d)
            if (a % d == 0) {
                out.push_back(d);
                out.push_back(a / d);
            }
        return out;
    };
    for (;;) {
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (q.size() <= 1) break;
        // integer-normalize
        mpz_class l(1);
        for (auto& c : q) l = lcm(l, c.get_den());
        std::vector<mpz_class> z;
        for (auto& c : q) z.push_back(mpz_class(c * l));
        size_t lo = 0;
        while (lo < z.size() && z[lo] == 0) ++lo;
        if (lo > 0) break;  // w = 0 root would mean a missing endpoint
        if (abs(z.front()) > mpz_class("1000000000000") || abs(z.back()) > mpz_class("1000000000000"))
            throw UnsupportedFactorization("face coefficients too large for rational root search");
        bool found = false;
        for (auto& p : divisors(z.front())) {
            for (auto& qq : divisors(z.back())) {
                for (int sign : {1, -1}) {
                    Rat cand = Rat(p * sign, qq);
                    cand.canonicalize();
                    Rat val(0);
                    for (size_t m = q.size(); m-- > 0;) val = val * cand + q[m];
                    if (val == 0) {
                        roots.push_back(cand);
                        // deflate by (w - cand)
                        std::vector<Rat> nq(q.size() - 1, Rat(0));
                        Rat carry = q.back();
                        for (size_t m = q.size() - 1; m-- > 0;) {
                            nq[m] = carry;
                            carry = q[m] + carry * cand;
                        }
                        q = std::move(nq);
                        found = true;
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    if (q.size() > 1)
        throw UnsupportedFactorization(
            "a Newton face does not split into rational binomial factors; supply branches "
            "explicitly");
    return roots;
}

}  // namespace

std::vector<Branch> branches_of(const MultiPoly& f, int trunc) {
    NewtonDiagram nd = newton_diagram(f);
    if (trunc <= 0) {
        long dmax = 0;
        for (auto& face : nd.faces) dmax = std::max(dmax, face.d);
        // comfortably past every branch conductor ((u-1)(v-1) < d per face)
        trunc = int(2 * dmax + 10);
    }
    int xi = f.var_index("x"), yi = f.var_index("y");

    std::vector<Branch> out;
    for (auto& face : nd.faces) {
        int u = face.u, v = face.v;
        auto [i0, j0] = face.points.front();  // minimal i on this face
        int M = (face.points.back().first - i0) / v;
        std::vector<Rat> q(size_t(M + 1), Rat(0));
        for (auto& [i, j] : face.points) {
            Exps e(f.vars.size(), 0);
            e[size_t(xi)] = i;
            e[size_t(yi)] = j;
            q[size_t((i - i0) / v)] = f.coeff(e);
        }
        std::vector<Rat> roots = rational_roots(q);
        std::set<std::pair<mpz_class, mpz_class>> seen;
        for (auto& r : roots) {
            if (r == 0) throw std::logic_error("branches_of: zero face root");
            if (!seen.insert({r.get_num(), r.get_den()}).second)
                throw UnsupportedFactorization(
                    "repeated face factor (degenerate face); supply branches explicitly");
            // factor x^v = r*y^u, i.e. y^u = c*x^v with c = 1/r
            Rat c = 1 / r;
            int rho = 1;
            while ((long(u) * rho - 1) % v != 0) ++rho;
            int sigma = (u * rho - 1) / v;
            Branch b;
            b.x = TruncSeries::monomial(u, rat_pow(c, sigma), trunc);
            b.y = TruncSeries::monomial(v, rat_pow(c, rho), trunc);
            b.normalized = (rat_pow(c, sigma) == 1);
            b.exact = true;
            out.push_back(std::move(b));
        }
    }
    return out;
}

BranchInvariants branch_invariants(const Branch& b0) {
    Branch b = b0;
    for (int attempt = 0;; ++attempt) {
        try {
            // normalization is a reparametrization, so it never changes the
            // order set; skip it when the x-root is irrational
            Branch n;
            try {
                n = normalize_branch(b);
            } catch (const std::invalid_argument&) {
                n = b;
            }
            SemigroupData s = semigroup_of_subring({n.x, n.y});
            // plane-branch symmetry: g is a gap iff conductor-1-g is not
            for (int g = 0; g < s.conductor; ++g) {
                bool gap = !s.contains(g);
                bool dual_gap = !s.contains(s.conductor - 1 - g);
                if (gap == dual_gap)
                    throw std::logic_error("branch semigroup is not symmetric");
            }
            BranchInvariants inv;
            inv.char_exps = char_exponents(s);
            inv.semigroup = std::move(s);
            return inv;
        } catch (const StabilizationFailure&) {
            if (!b0.exact || attempt >= 5) throw;
            b = b0.with_truncation(std::max(2 * b.x.trunc, 2 * b.y.trunc));
        }
    }
}

int intersection_multiplicity(const Branch& b1, const Branch& b2) {
    std::vector<std::string> vars{"t", "s"};
    MultiPoly A = series_to_poly(b1.x, vars, "t") - series_to_poly(b2.x, vars, "s");
    MultiPoly B = series_to_poly(b1.y, vars, "t") - series_to_poly(b2.y, vars, "s");
    MultiPoly da = resultant(A, B, "s");
    MultiPoly db = resultant(A, B, "t");
    if (da.is_zero() || db.is_zero())
        throw std::invalid_argument("intersection_multiplicity: branches coincide");
    int ia = da.order(), ib = db.order();
    if (ia != ib)
        throw std::logic_error("intersection_multiplicity: elimination routes disagree");
    return ia;
}

EquisingClass equising_class(const PlaneCurve& c) {
    std::vector<Branch> branches = c.branches;
    if (branches.empty()) {
        if (!c.equation) throw std::invalid_argument("equising_class: empty curve");
        branches = branches_of(*c.equation);
    }
    EquisingClass ec;
    std::vector<BranchInvariants> invs;
    for (auto& b : branches) {
        invs.push_back(branch_invariants(b));
        ec.exponents.push_back(invs.back().char_exps);
    }
    size_t n = branches.size();
    ec.intersections.assign(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            int m = intersection_multiplicity(branches[i], branches[j]);
            int ki = branches[i].x.order(), kj = branches[j].x.order();
            if (m < ki * kj)
                throw std::logic_error("intersection multiplicity below multiplicity product");
            ec.intersections[i][j] = ec.intersections[j][i] = m;
        }
    return ec;
}

bool equisingular_equal(const EquisingClass& a, const EquisingClass& b) {
    size_t n = a.exponents.size();
    if (n != b.exponents.size()) return false;
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            if (a.exponents[i] != b.exponents[perm[i]]) ok = false;
        for (size_t i = 0; i < n && ok; ++i)
            for (size_t j = 0; j < n && ok; ++j)
                if (a.intersections[i][j] != b.intersections[perm[i]][perm[j]]) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

MultiPoly implicitize(const Branch& b, const std::vector<std::string>& vars) {
    std::vector<std::string> ring{"t", vars[0], vars[1]};
    MultiPoly A = MultiPoly::variable(ring, vars[0]) - series_to_poly(b.x, ring, "t");
    MultiPoly B = MultiPoly::variable(ring, vars[1]) - series_to_poly(b.y, ring, "t");
    MultiPoly res = resultant(A, B, "t");
    // drop the unused t and normalize the content
    MultiPoly out{std::vector<std::string>{vars[0], vars[1]}};
    for (auto& [e, c] : res.terms) out.terms[{e[1], e[2]}] = c;
    if (!out.is_zero()) {
        Rat lead = out.leading_term(MonomialOrder::degrevlex()).second;
        out = out * (1 / lead);
    }
    return out;
}

}  // namespace legdef
