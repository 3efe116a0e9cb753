#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "legdef/linalg.hpp"
#include "legdef/multipoly.hpp"

namespace legdef {

// Finite model of the local ring below a degree bound: all monomials of
// total degree < bound, sorted descending by degrevlex so that the first
// nonzero coordinate of a vector is its leading monomial.
struct JetSpace {
    std::vector<std::string> vars;
    int bound = 0;
    std::vector<Exps> basis;
    std::map<Exps, int> index;

    static JetSpace make(const std::vector<std::string>& vars, int bound);

    size_t dim() const { return basis.size(); }
    // Terms of degree >= bound are dropped.
    QVec to_vec(const MultiPoly& p) const;
    MultiPoly from_vec(const QVec& v) const;
};

// Row space of {trunc(g * m) : g generator, m monomial, deg m < bound}.
Echelon jet_span(const std::vector<MultiPoly>& gens, const JetSpace& jets);

struct SubspaceViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JetQuotient {
    int dimension = 0;
    // Representatives whose images form a basis of super/sub; pure
    // monomials whenever the greedy monomial sweep suffices.
    std::vector<MultiPoly> reps;
};

// Basis of (span of super) / (span of sub) inside the jet space. The
// inclusion sub-span <= super-span is verified, not assumed. Candidate
// monomials are swept in ascending order of the last exponent, then the
// earlier ones; `candidates` overrides the default sweep over all jet
// monomials.
JetQuotient jet_quotient_basis(const std::vector<MultiPoly>& sub,
                               const std::vector<MultiPoly>& super, const JetSpace& jets,
                               const std::vector<Exps>* candidates = nullptr);

}  // namespace legdef
