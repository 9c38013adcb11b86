#include "admissible/linear_algebra.hpp"

namespace admissible {

namespace {

// Multiplies each row by the product of its distinct denominators.
Matrix<BivariatePolynomial> clear_denominators(const Matrix<RationalFunction2>& a) {
    Matrix<BivariatePolynomial> out;
    out.reserve(a.size());
    for (const auto& row : a) {
        std::vector<BivariatePolynomial> dens;
        for (const auto& x : row) {
            if (x.is_zero() || x.denominator().is_constant()) continue;
            bool seen = false;
            for (const auto& d : dens) seen = seen || d == x.denominator();
            if (!seen) dens.push_back(x.denominator());
        }
        std::vector<BivariatePolynomial> cleared;
        cleared.reserve(row.size());
        for (const auto& x : row) {
            BivariatePolynomial v = x.numerator();
            if (!x.is_zero()) {
                for (const auto& d : dens)
                    if (!(d == x.denominator())) v *= d;
                if (x.denominator().is_constant()) v *= x.denominator().leading_term().second.inverse();
            }
            cleared.push_back(std::move(v));
        }
        out.push_back(std::move(cleared));
    }
    return out;
}

ReducedForm<BivariatePolynomial> reduce(Matrix<BivariatePolynomial> m, std::size_t pivot_limit) {
    return fraction_free_reduce(
        std::move(m), pivot_limit,
        [](const BivariatePolynomial& x, const BivariatePolynomial& d) {
            auto q = poly_exact_divide(x, d);
            if (!q) throw std::logic_error("fraction-free elimination: inexact division");
            return *q;
        },
        [](const BivariatePolynomial& x) { return x.size(); });
}

std::vector<std::vector<RationalFunction2>> kernel_from(const ReducedForm<BivariatePolynomial>& red, std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<RationalFunction2>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<RationalFunction2> v(n);
        v[free] = RationalFunction2(red.scale);
        for (std::size_t k = 0; k < red.pivot_columns.size(); ++k)
            v[red.pivot_columns[k]] = RationalFunction2(-red.rows[k][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

LinearSolveResult solve_linear_system(const Matrix<RationalFunction2>& a, const std::vector<RationalFunction2>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear_system: dimension mismatch");
    const std::size_t n = a.empty() ? 0 : a[0].size();
    Matrix<RationalFunction2> augmented = a;
    for (std::size_t i = 0; i < a.size(); ++i) augmented[i].push_back(b[i]);
    auto red = reduce(clear_denominators(augmented), n);

    LinearSolveResult out;
    out.rank = red.pivot_columns.size();
    out.consistent = true;
    for (std::size_t i = out.rank; i < red.rows.size(); ++i)
        if (!red.rows[i][n].is_zero()) out.consistent = false;
    if (out.consistent) {
        out.solution.assign(n, RationalFunction2());
        for (std::size_t k = 0; k < out.rank; ++k)
            out.solution[red.pivot_columns[k]] = RationalFunction2(red.rows[k][n], red.scale);
    }
    out.kernel = kernel_from(red, n);
    return out;
}

std::size_t matrix_rank(const Matrix<RationalFunction2>& a) {
    if (a.empty()) return 0;
    return reduce(clear_denominators(a), a[0].size()).pivot_columns.size();
}

std::vector<std::vector<RationalFunction2>> kernel_basis(const Matrix<RationalFunction2>& a) {
    if (a.empty()) return {};
    const std::size_t n = a[0].size();
    return kernel_from(reduce(clear_denominators(a), n), n);
}

}  // namespace admissible
