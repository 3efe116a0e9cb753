#include "legdef/contact.hpp"

namespace legdef {

namespace {

const std::vector<std::string> kRing{"x", "y", "p"};

MultiPoly var(const std::string& name) { return MultiPoly::variable(kRing, name); }

struct Components {
    MultiPoly x, y, p;
};

Components composite_components(const std::vector<ContactTransform>& parts) {
    Components c{var("x"), var("y"), var("p")};
    for (auto& t : parts) {
        std::map<std::string, MultiPoly> img{{"x", c.x}, {"y", c.y}, {"p", c.p}};
        Components n{t.comp_x().substituted(img), t.comp_y().substituted(img),
                     t.comp_p().substituted(img)};
        c = std::move(n);
    }
    return c;
}

}  // namespace

ContactTransform ContactTransform::scaling(const Rat& lambda, const Rat& mu) {
    ContactTransform t;
    t.kind = Kind::Scaling;
    t.lambda = lambda;
    t.mu = mu;
    if (lambda == 0 || mu == 0) throw std::invalid_argument("scaling: factors must be nonzero");
    return t;
}

ContactTransform ContactTransform::paraboloidal(const Rat& a, const Rat& b, const Rat& c,
                                                const Rat& d) {
    if (a * d - b * c != 1) throw std::invalid_argument("paraboloidal: ad - bc must be 1");
    ContactTransform t;
    t.kind = Kind::Paraboloidal;
    t.a = a;
    t.b = b;
    t.c = c;
    t.d = d;
    return t;
}

ContactTransform ContactTransform::rho(const Rat& lambda) {
    ContactTransform t;
    t.kind = Kind::RhoLambda;
    t.lambda = lambda;
    return t;
}

ContactTransform ContactTransform::vertical(MultiPoly X, MultiPoly Y, MultiPoly P) {
    ContactTransform t;
    t.kind = Kind::Vertical;
    t.X = X.lifted(kRing);
    t.Y = Y.lifted(kRing);
    t.P = P.lifted(kRing);
    return t;
}

ContactTransform ContactTransform::composite(std::vector<ContactTransform> parts) {
    ContactTransform t;
    t.kind = Kind::Composite;
    t.parts = std::move(parts);
    return t;
}

MultiPoly ContactTransform::comp_x() const {
    switch (kind) {
        case Kind::Scaling:
            return var("x") * lambda;
        case Kind::Paraboloidal:
            return var("x") * a + var("p") * b;
        case Kind::RhoLambda:
            return var("x");
        case Kind::Vertical:
            return X;
        case Kind::Composite:
            return composite_components(parts).x;
    }
    throw std::logic_error("comp_x: bad kind");
}

MultiPoly ContactTransform::comp_y() const {
    switch (kind) {
        case Kind::Scaling:
            return var("y") * (lambda * mu);
        case Kind::Paraboloidal:
            return var("y") + var("x") * var("x") * (a * c / 2) + var("p") * var("p") * (b * d / 2) +
                   var("x") * var("p") * (b * c);
        case Kind::RhoLambda:
            return var("y") - var("x") * var("x") * (lambda / 2);
        case Kind::Vertical:
            return Y;
        case Kind::Composite:
            return composite_components(parts).y;
    }
    throw std::logic_error("comp_y: bad kind");
}

MultiPoly ContactTransform::comp_p() const {
    switch (kind) {
        case Kind::Scaling:
            return var("p") * mu;
        case Kind::Paraboloidal:
            return var("x") * c + var("p") * d;
        case Kind::RhoLambda:
            return var("p") - var("x") * lambda;
        case Kind::Vertical:
            return P;
        case Kind::Composite:
            return composite_components(parts).p;
    }
    throw std::logic_error("comp_p: bad kind");
}

ContactCheck verify_contact(const ContactTransform& T) {
    MultiPoly X = T.comp_x(), Y = T.comp_y(), P = T.comp_p();
    MultiPoly A = Y.derivative("x") - P * X.derivative("x");
    MultiPoly B = Y.derivative("y") - P * X.derivative("y");
    MultiPoly C = Y.derivative("p") - P * X.derivative("p");

    ContactCheck out;
    out.cofactor = B;
    if (!C.is_zero()) {
        out.reason = "dp component of the pullback is nonzero";
        return out;
    }
    if (!(A + var("p") * B).is_zero()) {
        out.reason = "dx component is not -p times the dy component";
        return out;
    }
    if (B.constant_term() == 0) {
        out.reason = "cofactor is not a unit";
        return out;
    }
    out.ok = true;
    return out;
}

InfinitesimalContact make_infinitesimal(const MultiPoly& alpha, const MultiPoly& beta0) {
    MultiPoly a = alpha.lifted(kRing);
    MultiPoly b0 = beta0.lifted(kRing);
    if (a.constant_term() != 0 || b0.constant_term() != 0)
        throw std::invalid_argument("make_infinitesimal: inputs must vanish at the origin");
    if (b0.uses_var(b0.var_index("p")))
        throw std::invalid_argument("make_infinitesimal: beta0 must not involve p");

    // beta = beta0 + sum_k (k/(k+1)) alpha_k(x,y) p^(k+1)
    MultiPoly beta = b0;
    int pi = a.var_index("p");
    for (auto& [e, c] : a.terms) {
        int k = e[size_t(pi)];
        if (k == 0) continue;
        Exps ne = e;
        ne[size_t(pi)] = k + 1;
        beta = beta + MultiPoly::monomial(kRing, ne, c * Rat(k) / Rat(k + 1));
    }
    MultiPoly p = var("p");
    MultiPoly gamma = beta.derivative("x") - p * a.derivative("x") +
                      p * (beta.derivative("y") - p * a.derivative("y"));

    // Cauchy condition and first-order contact check:
    // dbeta - p dalpha - gamma dx = v (dy - p dx) with v = beta_y - p alpha_y.
    if (!(beta.derivative("p") - p * a.derivative("p")).is_zero())
        throw std::logic_error("make_infinitesimal: Cauchy condition violated");
    MultiPoly v = beta.derivative("y") - p * a.derivative("y");
    if (!((beta.derivative("x") - p * a.derivative("x") - gamma) + v * p).is_zero())
        throw std::logic_error("make_infinitesimal: first-order contact condition violated");

    InfinitesimalContact out;
    out.alpha = a;
    out.beta0 = b0;
    out.beta = beta;
    out.gamma = gamma;
    return out;
}

LegendrianCurve act_on_legendrian(const ContactTransform& T, const LegendrianCurve& L) {
    MultiPoly X = T.comp_x(), Y = T.comp_y(), P = T.comp_p();
    LegendrianCurve out;
    for (auto& b : L.branches) {
        std::map<std::string, TruncSeries> asg{{"x", b.x}, {"y", b.y}, {"p", b.p}};
        LegendrianCurve::LBranch nb{substitute(X, asg), substitute(Y, asg), substitute(P, asg)};
        if (derivative(nb.x).known_zero())
            throw std::invalid_argument(
                "act_on_legendrian: image branch collapses into a fiber (x constant)");
        out.branches.push_back(std::move(nb));
    }
    verify_legendrian(out);
    return out;
}

PlaneCurve plane_action(const ContactTransform& T, const PlaneCurve& c) {
    PlaneCurve src = c;
    if (src.branches.empty()) {
        if (!src.equation) throw std::invalid_argument("plane_action: curve has no data");
        src.branches = branches_of(*src.equation);
    }
    LegendrianCurve L = conormal_of(src);
    LegendrianCurve M = act_on_legendrian(T, L);

    PlaneCurve out;
    bool all_exact = true;
    for (auto& b : src.branches) all_exact &= b.exact;
    for (auto& b : M.branches) {
        Branch nb;
        nb.x = b.x;
        nb.y = b.y;
        nb.exact = all_exact;
        out.branches.push_back(std::move(nb));
    }
    if (all_exact) {
        // polynomial images: recover an implicit equation by resultants
        MultiPoly eq = MultiPoly::constant({"x", "y"}, 1);
        bool ok = true;
        for (auto& b : out.branches) {
            // a truly polynomial branch has top stored degree well below trunc
            int top = 0;
            if (!b.x.known_zero()) top = std::max(top, b.x.coeffs.rbegin()->first);
            if (!b.y.known_zero()) top = std::max(top, b.y.coeffs.rbegin()->first);
            if (top + 1 >= std::min(b.x.trunc, b.y.trunc)) {
                ok = false;
                break;
            }
            eq = eq * implicitize(b, {"x", "y"});
        }
        if (ok) out.equation = eq;
    }
    return out;
}

PreservationReport equisingularity_preservation_test(const ContactTransform& T,
                                                     const PlaneCurve& c) {
    PreservationReport rep;
    PlaneCurve src = c;
    if (src.branches.empty()) {
        if (!src.equation) throw std::invalid_argument("preservation test: curve has no data");
        src.branches = branches_of(*src.equation);
    }
    LegendrianCurve L = conormal_of(src);
    if (!generic_position(L).generic) {
        rep.reason = "source conormal not in generic position";
        return rep;
    }
    LegendrianCurve M = act_on_legendrian(T, L);
    if (!generic_position(M).generic) {
        rep.reason = "image not in generic position";
        return rep;
    }
    PlaneCurve img;
    for (auto& b : M.branches) {
        Branch nb;
        nb.x = b.x;
        nb.y = b.y;
        nb.exact = false;
        img.branches.push_back(std::move(nb));
    }
    EquisingClass before = equising_class(src);
    EquisingClass after = equising_class(img);
    if (equisingular_equal(before, after)) {
        rep.status = PreservationReport::Status::Passed;
        rep.reason = "classes equal";
    } else {
        rep.status = PreservationReport::Status::Failed;
        rep.reason = "equisingularity class changed";
    }
    return rep;
}

}  // namespace legdef
