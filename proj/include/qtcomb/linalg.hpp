#pragma once

// Small exact linear-algebra helpers over the rational-function field:
// Gaussian elimination for (possibly overdetermined, consistent) systems.
// Matrix sizes here are tiny (at most a few dozen rows), so clarity wins
// over asymptotics; pivots prefer low term counts to keep gcds small.

#include <optional>
#include <vector>

#include "qtcomb/qtrat.hpp"

namespace qtcomb {

using RatMatrix = std::vector<std::vector<QtRat>>;
using RatVector = std::vector<QtRat>;

// Solve A x = b exactly.  A may have more rows than columns; the system must
// be consistent with a unique solution, otherwise nullopt.
inline std::optional<RatVector> solve_unique(RatMatrix a, RatVector b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_row(cols, SIZE_MAX);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        // pick the unused row with a nonzero entry of minimal complexity
        std::size_t best = SIZE_MAX;
        std::size_t best_size = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            bool used = false;
            for (std::size_t cc = 0; cc < c; ++cc)
                if (pivot_row[cc] == r) { used = true; break; }
            if (used || a[r][c].is_zero()) continue;
            std::size_t sz = a[r][c].num().num_terms() + a[r][c].den().num_terms();
            if (best == SIZE_MAX || sz < best_size) { best = r; best_size = sz; }
        }
        if (best == SIZE_MAX) return std::nullopt;  // rank deficient
        pivot_row[c] = best;
        ++rank;
        const QtRat piv = a[best][c];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == best || a[r][c].is_zero()) continue;
            QtRat f = a[r][c] / piv;
            for (std::size_t cc = c; cc < cols; ++cc)
                a[r][cc] -= f * a[best][cc];
            b[r] -= f * b[best];
        }
    }
    (void)rank;
    // consistency of the leftover rows
    for (std::size_t r = 0; r < rows; ++r) {
        bool is_pivot = false;
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_row[c] == r) { is_pivot = true; break; }
        if (!is_pivot && !b[r].is_zero()) return std::nullopt;
    }
    RatVector x(cols);
    for (std::size_t c = 0; c < cols; ++c)
        x[c] = b[pivot_row[c]] / a[pivot_row[c]][c];
    return x;
}

}  // namespace qtcomb
