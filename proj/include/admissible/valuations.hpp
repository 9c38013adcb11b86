#pragma once

// Discrete valuations on Q(zeta)(f, t): the f-adic, t-adic and
// prime-polynomial valuations, residue maps into univariate function
// fields, the rank-two lexicographic valuation, and orders of residue
// classes modulo n-th powers.

#include "admissible/rational_function.hpp"
#include "admissible/univariate.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace admissible {

/// Value in Z x Z with the lexicographic order.
struct RankTwoValue {
    long w = 0;  // f-adic part
    long u = 0;  // t-adic part of the reduction
    auto operator<=>(const RankTwoValue&) const = default;
    friend RankTwoValue operator+(RankTwoValue a, RankTwoValue b) { return {a.w + b.w, a.u + b.u}; }
    friend RankTwoValue operator-(RankTwoValue a, RankTwoValue b) { return {a.w - b.w, a.u - b.u}; }
};

enum class PrimeTag { VarT, VarF, Poly };

/// A height-one prime of Q(zeta)[f, t]: t, f, or a polynomial monic in f.
/// Irreducibility of polynomial primes is asserted by the caller, not checked.
class PrimeSpec {
  public:
    static PrimeSpec t();
    static PrimeSpec f();
    /// Throws std::invalid_argument unless p is nonconstant and monic in f.
    static PrimeSpec polynomial(BivariatePolynomial p);
    /// "t", "f", or a polynomial in the expression grammar.
    static PrimeSpec parse(const std::string& text, unsigned zeta_order = 0);

    PrimeTag tag() const { return tag_; }
    const BivariatePolynomial& generator() const { return poly_; }
    std::string to_string() const;

    friend bool operator==(const PrimeSpec& a, const PrimeSpec& b) { return a.tag_ == b.tag_ && a.poly_ == b.poly_; }

  private:
    PrimeSpec(PrimeTag tag, BivariatePolynomial p) : tag_(tag), poly_(std::move(p)) {}
    PrimeTag tag_;
    BivariatePolynomial poly_;
};

/// The five primes used by every witness construction:
/// t, f, f - t, f - t^2, f - t - t^2.
std::vector<PrimeSpec> standard_primes();

int polynomial_valuation(const BivariatePolynomial& q, const PrimeSpec& p);
int prime_valuation(const RationalFunction2& r, const PrimeSpec& p);

/// Image of a p-unit in the residue field, as a function of x.  For t the
/// residue field is Q(zeta)(f), for f it is Q(zeta)(t), and for f + h(t) it
/// is Q(zeta)(t) via f = -h(t).  Primes of f-degree above one have
/// non-rational residue fields and are rejected.
UnivariateRational residue(const RationalFunction2& r, const PrimeSpec& p);

/// Lexicographic minimum exponent, numerator minus denominator.
RankTwoValue lex_valuation(const RationalFunction2& r);
/// Same value computed as the composite of the f-adic valuation with the
/// t-adic valuation of the reduced leading part.
RankTwoValue lex_valuation_composite(const RationalFunction2& r);

class UnsupportedConstant : public ArithmeticError {
  public:
    UnsupportedConstant() : ArithmeticError("unsupported constant for power test") {}
};

/// constant * prod factors[i].first ^ factors[i].second, over Q(zeta_m).
/// Factors need not be irreducible; they are refined to a pairwise coprime
/// squarefree basis before any power test.
struct FactoredUnivariate {
    CyclotomicNumber constant{1};
    std::vector<std::pair<UnivariatePolynomial, int>> factors;
    unsigned field_order = 1;

    static FactoredUnivariate from(const UnivariateRational& r, unsigned field_order);
    UnivariateRational value() const;
    /// Equivalent factorization with monic, squarefree, pairwise coprime,
    /// nonconstant factors and nonzero exponents.
    FactoredUnivariate refined() const;
};

/// Whether the constant c is a d-th power in Q(zeta_m).  Exact for
/// c = (rational) * (root of unity) when the rational part is a rational
/// d-th power or the field is Q; otherwise throws UnsupportedConstant.
///
/// Roots of unity: if y^d is a root of unity then so is y, so the test
/// reduces to the cyclic group of roots of unity of the field.
bool is_constant_power(const CyclotomicNumber& c, int d, unsigned field_order);

/// Order of the class of r in k^x / (k^x)^n for k = Q(zeta_m)(x).
int power_class_order(const FactoredUnivariate& r, int n);
int power_class_order(const UnivariateRational& r, int n, unsigned field_order);

std::vector<int> divisors(int n);

}  // namespace admissible
