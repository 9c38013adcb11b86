#pragma once

// Exact linear algebra over F = Q(zeta)(f, t).
//
// Rows are cleared of denominators and the resulting polynomial matrix is
// brought to reduced form by fraction-free Gauss-Jordan elimination: every
// intermediate entry is a minor of the input, so each update
//     a_ij <- (p * a_ij - a_ic * a_rj) / p_prev
// is an exact polynomial division.  After the last step every pivot equals
// the final pivot D, non-pivot entries are minors, and solutions are read
// off as (entry / D).

#include "admissible/rational_function.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace admissible {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

template <typename T>
struct ReducedForm {
    Matrix<T> rows;
    std::vector<std::size_t> pivot_columns;  // pivot_columns[k] is owned by row k
    T scale;                                 // common value of all pivots
};

/// Fraction-free Gauss-Jordan on the first `pivot_limit` columns.
/// `exact_div(a, b)` must return a / b, which is guaranteed exact;
/// `cost(a)` ranks pivot candidates (cheaper first).
template <typename T, typename ExactDiv, typename Cost>
ReducedForm<T> fraction_free_reduce(Matrix<T> m, std::size_t pivot_limit, ExactDiv exact_div, Cost cost) {
    ReducedForm<T> out{{}, {}, T(1)};
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            if (best == rows || cost(m[i][c]) < cost(m[best][c])) best = i;
        }
        if (best == rows) continue;
        std::swap(m[r], m[best]);
        const T pivot = m[r][c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const T factor = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                T updated = pivot * m[i][j];
                if (!factor.is_zero() && !m[r][j].is_zero()) updated = updated - factor * m[r][j];
                m[i][j] = exact_div(updated, prev);
            }
            m[i][c] = T();
        }
        prev = pivot;
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.scale = prev;
    out.rows = std::move(m);
    return out;
}

struct LinearSolveResult {
    bool consistent = false;
    std::vector<RationalFunction2> solution;                 // valid when consistent
    std::vector<std::vector<RationalFunction2>> kernel;      // basis of {x : A x = 0}
    std::size_t rank = 0;
};

/// Solves A x = b over F; also returns a kernel basis of A.
LinearSolveResult solve_linear_system(const Matrix<RationalFunction2>& a, const std::vector<RationalFunction2>& b);
std::size_t matrix_rank(const Matrix<RationalFunction2>& a);
std::vector<std::vector<RationalFunction2>> kernel_basis(const Matrix<RationalFunction2>& a);

}  // namespace admissible
