#pragma once

#include <optional>
#include <vector>

#include "legdef/rational.hpp"

namespace legdef {

using QVec = std::vector<Rat>;

// Reduced row echelon form over Q. Pivot columns are scanned left to right,
// the pivot row is the first candidate row; results are deterministic and
// identical between the serial and the OpenMP kernels.
struct Echelon {
    size_t cols = 0;
    std::vector<QVec> rows;   // pivot entries normalized to 1
    std::vector<int> pivots;  // pivot column of each row, increasing

    int rank() const { return int(rows.size()); }

    // Reduce v against the row space in place; true iff v reduced to zero.
    bool reduce(QVec& v) const;
    bool in_row_space(const QVec& v) const {
        QVec w = v;
        return reduce(w);
    }
};

// Serial reference implementation.
// One solution of A x = b with free variables set to zero, or nullopt
// when the system is inconsistent.
std::optional<QVec> solve_linear(const std::vector<QVec>& a, const QVec& b);

Echelon echelon_serial(std::vector<QVec> rows, size_t cols);

// OpenMP kernel; bit-identical to the serial reference.
Echelon echelon_parallel(std::vector<QVec> rows, size_t cols);

// Dispatch: parallel unless LEGDEF_SERIAL is set in the environment.
Echelon echelon(std::vector<QVec> rows, size_t cols);

}  // namespace legdef
