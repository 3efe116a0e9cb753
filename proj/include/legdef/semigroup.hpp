#pragma once

#include <stdexcept>
#include <vector>

#include "legdef/series.hpp"

namespace legdef {

struct SemigroupData {
    std::vector<int> generators;  // minimal generators, sorted
    int conductor = 0;
    std::vector<int> gaps;  // sorted

    bool contains(int n) const;
};

struct StabilizationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical semigroup generated by the given positive integers; requires
// gcd 1.
SemigroupData semigroup_from_generators(const std::vector<int>& gens);

// Value semigroup of the subring generated by the series: the set of
// orders of elements, found by order-echelon reduction of monomial
// products up to an adaptive degree bound. Stops once raising the degree
// adds no new order below the candidate conductor and the candidate set is
// closed under addition. Throws StabilizationFailure when the input
// truncation is too small to certify the result.
SemigroupData semigroup_of_subring(const std::vector<TruncSeries>& gens);

// Characteristic exponents (beta_0; beta_1, ...) of a plane branch from
// its value semigroup.
std::vector<int> char_exponents(const SemigroupData& s);

}  // namespace legdef
