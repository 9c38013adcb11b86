#pragma once

// Dense univariate polynomials in x over Q(zeta) and their fraction field.
// Residue fields of the prime valuations are represented this way; the
// univariate gcd keeps fractions fully reduced.

#include "admissible/cyclotomic.hpp"

#include <string>
#include <vector>

namespace admissible {

class UnivariatePolynomial {
  public:
    UnivariatePolynomial() = default;
    UnivariatePolynomial(const CyclotomicNumber& c);
    UnivariatePolynomial(long c) : UnivariatePolynomial(CyclotomicNumber(c)) {}
    /// Coefficients lowest degree first; trailing zeros are dropped.
    explicit UnivariatePolynomial(std::vector<CyclotomicNumber> coeffs);

    static UnivariatePolynomial x() { return UnivariatePolynomial(std::vector<CyclotomicNumber>{0, 1}); }

    const std::vector<CyclotomicNumber>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    CyclotomicNumber leading_coefficient() const { return coeffs_.empty() ? CyclotomicNumber() : coeffs_.back(); }
    CyclotomicNumber coefficient(int k) const;
    /// Largest k with x^k dividing a nonzero polynomial.
    int x_adic_valuation() const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& rhs);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& rhs);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
    UnivariatePolynomial operator-() const;

    UnivariatePolynomial pow(unsigned e) const;
    UnivariatePolynomial derivative() const;
    UnivariatePolynomial monic() const;
    UnivariatePolynomial scaled(const CyclotomicNumber& c) const;

    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x", const std::string& zeta_symbol = "z") const;

  private:
    void trim();
    std::vector<CyclotomicNumber> coeffs_;
};

struct UniDivision {
    UnivariatePolynomial quotient;
    UnivariatePolynomial remainder;
};

UniDivision divide(const UnivariatePolynomial& a, const UnivariatePolynomial& b);
/// Monic gcd (zero only when both inputs are zero).
UnivariatePolynomial gcd(const UnivariatePolynomial& a, const UnivariatePolynomial& b);

/// Reduced fraction num/den with monic denominator.
class UnivariateRational {
  public:
    UnivariateRational() : num_(0), den_(1) {}
    UnivariateRational(UnivariatePolynomial num) : num_(std::move(num)), den_(1) {}
    UnivariateRational(UnivariatePolynomial num, UnivariatePolynomial den);

    const UnivariatePolynomial& numerator() const { return num_; }
    const UnivariatePolynomial& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    friend UnivariateRational operator*(const UnivariateRational& a, const UnivariateRational& b);
    friend UnivariateRational operator+(const UnivariateRational& a, const UnivariateRational& b);
    UnivariateRational inverse() const;
    UnivariateRational pow(long e) const;

    friend bool operator==(const UnivariateRational& a, const UnivariateRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "x", const std::string& zeta_symbol = "z") const;

  private:
    UnivariatePolynomial num_;
    UnivariatePolynomial den_;
};

}  // namespace admissible
