#pragma once

#include "admissible/polynomial.hpp"

#include <string>

namespace admissible {

/// Element of Q(zeta)(f, t) kept as an unnormalized fraction.
///
/// No multivariate gcd is ever taken.  Construction performs only cheap
/// simplifications: common monomial content f^k t^l is cancelled, a constant
/// denominator is folded into the numerator, the denominator is made to have
/// leading coefficient 1, and an exact quotient is taken when one side
/// divides the other.  Equality is decided by cross-multiplication.
class RationalFunction2 {
  public:
    RationalFunction2() : num_(), den_(1) {}
    RationalFunction2(BivariatePolynomial num);
    RationalFunction2(const CyclotomicNumber& c) : RationalFunction2(BivariatePolynomial(c)) {}
    RationalFunction2(long c) : RationalFunction2(BivariatePolynomial(c)) {}
    RationalFunction2(BivariatePolynomial num, BivariatePolynomial den);

    static RationalFunction2 f() { return RationalFunction2(BivariatePolynomial::f()); }
    static RationalFunction2 t() { return RationalFunction2(BivariatePolynomial::t()); }

    const BivariatePolynomial& numerator() const { return num_; }
    const BivariatePolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction2 inverse() const;
    RationalFunction2 pow(long exponent) const;

    RationalFunction2& operator+=(const RationalFunction2& rhs);
    RationalFunction2& operator-=(const RationalFunction2& rhs);
    RationalFunction2& operator*=(const RationalFunction2& rhs);
    RationalFunction2& operator/=(const RationalFunction2& rhs) { return *this *= rhs.inverse(); }

    friend RationalFunction2 operator+(RationalFunction2 a, const RationalFunction2& b) { return a += b; }
    friend RationalFunction2 operator-(RationalFunction2 a, const RationalFunction2& b) { return a -= b; }
    friend RationalFunction2 operator*(RationalFunction2 a, const RationalFunction2& b) { return a *= b; }
    friend RationalFunction2 operator/(RationalFunction2 a, const RationalFunction2& b) { return a /= b; }
    RationalFunction2 operator-() const;

    /// p/q == r/s  iff  p*s == r*q.
    friend bool operator==(const RationalFunction2& a, const RationalFunction2& b);

    /// Canonical ASCII rendering, e.g. "(f - t^2)/(f - t - t^2)".
    std::string to_string(const std::string& zeta_symbol = "z") const;

  private:
    void normalize();
    BivariatePolynomial num_;
    BivariatePolynomial den_;
};

}  // namespace admissible
