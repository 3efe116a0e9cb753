#pragma once

#include "legdef/multipoly.hpp"

namespace legdef {

// Determinant by exact Gaussian elimination.
Rat determinant(std::vector<std::vector<Rat>> m);

// Res_var(a, b) in the remaining variables, computed by evaluating the
// generic Sylvester determinant on a rational grid and interpolating.
// The result keeps the full variable list of the inputs with the
// eliminated variable unused.
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, const std::string& var);

}  // namespace legdef
