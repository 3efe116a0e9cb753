#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "legdef/multipoly.hpp"

namespace legdef {

struct IdealBasis {
    std::vector<MultiPoly> generators;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::optional<std::vector<MultiPoly>> reduced_groebner;

    IdealBasis() = default;
    IdealBasis(std::vector<MultiPoly> gens, MonomialOrder ord)
        : generators(std::move(gens)), order(std::move(ord)) {}
};

// Buchberger with the sugar selection strategy and both criteria.
// Returns the unique reduced Groebner basis, cached on the result.
IdealBasis groebner(const IdealBasis& basis);

// Ensure basis.reduced_groebner is populated.
void ensure_groebner(IdealBasis& basis);

// Unique remainder of p modulo the ideal (zero iff p is a member).
MultiPoly normal_form(const MultiPoly& p, const IdealBasis& basis);

bool in_ideal(const MultiPoly& p, const IdealBasis& basis);

// Intersection with the subring omitting front_vars, computed with a block
// elimination order [front] >> degrevlex(rest). Result lives in the reduced
// ring.
IdealBasis eliminate(const IdealBasis& basis, const std::vector<std::string>& front_vars);

// Same ideal test via mutual normal forms.
bool same_ideal(const IdealBasis& a, const IdealBasis& b);

// Saturation (I : g^inf) via the Rabinowitsch trick.
IdealBasis saturate(const IdealBasis& basis, const MultiPoly& g);

struct NonFiniteQuotient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monomials of total degree < bound outside the leading-term ideal, sorted
// descending by the basis order. Throws NonFiniteQuotient when every degree
// below the bound contributes.
std::vector<Exps> standard_monomials(const IdealBasis& basis, int bound);

// All monomials in nvars variables with the given total degree.
std::vector<Exps> monomials_of_degree(int nvars, int degree);

}  // namespace legdef
