#pragma once

// Sparse polynomials in the two variables f and t over a cyclotomic field.
// Monomials f^i t^j are keyed by (i, j) and stored in lexicographic order,
// f-exponent first.  Zero coefficients are never stored.

#include "admissible/cyclotomic.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace admissible {

struct Exponent {
    int f = 0;
    int t = 0;
    auto operator<=>(const Exponent&) const = default;
};

class BivariatePolynomial {
  public:
    using Terms = std::map<Exponent, CyclotomicNumber>;

    BivariatePolynomial() = default;
    BivariatePolynomial(const CyclotomicNumber& c);
    BivariatePolynomial(long c) : BivariatePolynomial(CyclotomicNumber(c)) {}

    static BivariatePolynomial monomial(const CyclotomicNumber& c, int f_exp, int t_exp);
    static BivariatePolynomial f() { return monomial(1, 1, 0); }
    static BivariatePolynomial t() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of f^i t^j (zero when absent).
    CyclotomicNumber coefficient(int f_exp, int t_exp) const;
    /// Lexicographically largest monomial; requires !is_zero().
    const std::pair<const Exponent, CyclotomicNumber>& leading_term() const { return *terms_.rbegin(); }
    /// Lexicographically smallest exponent; requires !is_zero().
    Exponent lex_min_exponent() const { return terms_.begin()->first; }

    int degree_f() const;
    int degree_t() const;
    /// Componentwise minimum exponents: the largest monomial dividing every term.
    Exponent monomial_content() const;
    /// Least common multiple of the orders of all coefficients.
    unsigned coefficient_order() const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator*=(const BivariatePolynomial& rhs);
    BivariatePolynomial& operator*=(const CyclotomicNumber& c);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(BivariatePolynomial a, const CyclotomicNumber& c) { return a *= c; }
    BivariatePolynomial operator-() const;

    BivariatePolynomial pow(unsigned exponent) const;
    /// Divides every exponent by the monomial f^e.f t^e.t; each term must be divisible.
    BivariatePolynomial shifted_down(Exponent e) const;

    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b);

    /// Canonical rendering: f-degree descending, then t-degree ascending,
    /// e.g. "f - t - t^2".  Root of unity printed as `zeta_symbol`.
    std::string to_string(const std::string& zeta_symbol = "z") const;

  private:
    void add_term(const Exponent& e, const CyclotomicNumber& c);
    Terms terms_;
};

/// Exact quotient p / d when d divides p, std::nullopt otherwise.
/// Uses multivariate division in lex order; a single divisor is a Groebner
/// basis of the ideal it generates, so a zero remainder decides divisibility.
std::optional<BivariatePolynomial> poly_exact_divide(const BivariatePolynomial& p, const BivariatePolynomial& d);

}  // namespace admissible
