#include "legdef/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace legdef {

bool Echelon::reduce(QVec& v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
        int p = pivots[r];
        if (v[p] == 0) continue;
        Rat f = v[p];
        const QVec& row = rows[r];
        for (size_t j = p; j < cols; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

namespace {

template <bool Parallel>
Echelon echelon_impl(std::vector<QVec> rows, size_t cols) {
    std::vector<int> pivot_of(rows.size(), -1);
    std::vector<char> used(rows.size(), 0);
    size_t nrows = rows.size();

    for (size_t col = 0; col < cols; ++col) {
        size_t pr = nrows;
        for (size_t r = 0; r < nrows; ++r)
            if (!used[r] && rows[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr == nrows) continue;
        used[pr] = 1;
        pivot_of[pr] = int(col);
        QVec& prow = rows[pr];
        if (prow[col] != 1) {
            Rat inv = 1 / prow[col];
            for (size_t j = col; j < cols; ++j)
                if (prow[j] != 0) prow[j] *= inv;
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (Parallel)
#endif
        for (size_t r = 0; r < nrows; ++r) {
            if (r == pr || rows[r][col] == 0) continue;
            Rat f = rows[r][col];
            for (size_t j = col; j < cols; ++j)
                if (prow[j] != 0) rows[r][j] -= f * prow[j];
        }
    }

    std::vector<size_t> order;
    for (size_t r = 0; r < nrows; ++r)
        if (pivot_of[r] >= 0) order.push_back(r);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_of[a] < pivot_of[b]; });

    Echelon e;
    e.cols = cols;
    for (size_t r : order) {
        e.rows.push_back(std::move(rows[r]));
        e.pivots.push_back(pivot_of[r]);
    }
    return e;
}

}  // namespace

std::optional<QVec> solve_linear(const std::vector<QVec>& a, const QVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: size mismatch");
    size_t cols = a.empty() ? 0 : a.front().size();
    std::vector<QVec> aug;
    aug.reserve(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        QVec row = a[i];
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    Echelon e = echelon(std::move(aug), cols + 1);
    QVec x(cols, Rat(0));
    for (size_t r = 0; r < e.rows.size(); ++r) {
        if (size_t(e.pivots[r]) == cols) return std::nullopt;  // 0 = 1 row
        x[size_t(e.pivots[r])] = e.rows[r].back();
    }
    return x;
}

Echelon echelon_serial(std::vector<QVec> rows, size_t cols) {
    return echelon_impl<false>(std::move(rows), cols);
}

Echelon echelon_parallel(std::vector<QVec> rows, size_t cols) {
    return echelon_impl<true>(std::move(rows), cols);
}

Echelon echelon(std::vector<QVec> rows, size_t cols) {
    if (std::getenv("LEGDEF_SERIAL")) return echelon_serial(std::move(rows), cols);
    return echelon_parallel(std::move(rows), cols);
}

}  // namespace legdef
