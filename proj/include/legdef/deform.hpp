#pragma once

#include "legdef/contact.hpp"
#include "legdef/jetspace.hpp"

namespace legdef {

// f + eps*g over the fat point (eps^2 = 0).
struct EpsDeformation {
    MultiPoly base;
    MultiPoly first_order;
};

// Shared data for the deformation-theory routines of one germ f.
struct DeformSetup {
    MultiPoly f;                       // in {x, y}
    int jet_bound = 0;                 // m^N inside the base-ideal span
    JetSpace jets;                     // bound = jet_bound
    std::vector<MultiPoly> base;       // f, x f_x, y f_x, x^2 f_y, y f_y
    std::vector<Branch> branches;      // truncated past every matching bound
    LegendrianCurve conormal;
    std::vector<int> conductors;       // per branch
    std::vector<int> match_bound;      // B_tau = (N-1) ord(y) + conductor
    std::map<int, MultiPoly> h_cache;  // ell -> representative
};

DeformSetup deform_setup(const MultiPoly& f);

// Smallest N with m^N contained in the jet span of
// {f, x f_x, y f_x, x^2 f_y, y f_y}.
int jet_bound_of(const MultiPoly& f);

struct HSeries {
    int ell = 0;
    MultiPoly representative;  // normal form mod <f>
    bool absorbed = false;     // representative lies in m^N (reported zero)
};

// h with (ell+1) p^ell f_x + ell p^(ell+1) f_y = h along every conormal
// branch up to the matching bound; unique mod <f>.
HSeries compute_h(DeformSetup& setup, int ell);

struct MuIdeal {
    std::vector<MultiPoly> generators;  // f, (x,y)f_x, (x^2,y)f_y, h_1..h_Lmax
    int l_max = 0;
    int jet_bound = 0;
};

MuIdeal ideal_mu(DeformSetup& setup);

// {x^2 f_y, y f_x} plus the monomials of degree < N on or above every
// Newton face line. Requires classify(f) in {SQH, NND}.
std::vector<MultiPoly> ideal_es_nnd(const DeformSetup& setup);

struct NewtonConditions {
    std::vector<NewtonFace> faces;  // monomial x^i y^j admitted iff
                                    // u*i + v*j >= d for every face
};

NewtonConditions es_monomial_conditions(const MultiPoly& f);

struct SemiuniversalDeformation {
    int dimension = 0;
    std::vector<MultiPoly> reps;
    std::string display;  // G = f + s_1 g_1 + ...
};

// Basis of the quotient of the equisingularity ideal span by the mu-ideal
// span in the jet model.
SemiuniversalDeformation quotient_basis(DeformSetup& setup);

// Basis of the equisingularity-ideal span modulo {f,(x,y)f_x,(x^2,y)f_y}
// (no h's).
SemiuniversalDeformation es_arrow_basis(DeformSetup& setup);

// g + alpha_0 f_x + beta_0 f_y + sum_k alpha_k h_k / (k+1), reduced to the
// jet model.
MultiPoly act_first_order(DeformSetup& setup, const MultiPoly& g, const InfinitesimalContact& T);

bool is_trivial_first_order(DeformSetup& setup, const MultiPoly& g);

// Series pairs ((k+1) p^k, k p^(k+1)), indexed by level k = 1..k_max, then
// by branch.
std::vector<std::vector<std::pair<TruncSeries, TruncSeries>>> ihat_generators(
    const LegendrianCurve& conormal, int k_max);

}  // namespace legdef
