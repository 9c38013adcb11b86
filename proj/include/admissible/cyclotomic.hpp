#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m).
//
// An element is stored as the coefficient vector of its reduced
// representative modulo the m-th cyclotomic polynomial, so it always has
// exactly phi(m) rational coefficients.  Elements of different orders are
// promoted to the lcm of the orders before any binary operation.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace admissible {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for every arithmetic domain failure (inverting zero, bad order).
class ArithmeticError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
/// Computed by exact division of x^m - 1 by Phi_d for every proper divisor d.
std::vector<Integer> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// Immutable description of Q(zeta_m).  Shared between all of its elements.
class CyclotomicField {
  public:
    explicit CyclotomicField(unsigned order);

    unsigned order() const { return order_; }
    unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
    /// Monic integer modulus Phi_m, lowest degree first.
    std::span<const Integer> modulus() const { return modulus_; }

  private:
    unsigned order_;
    std::vector<Integer> modulus_;
};

/// Shared field context for order m; contexts are memoized.
std::shared_ptr<const CyclotomicField> cyclotomic_field(unsigned m);

class CyclotomicNumber {
  public:
    /// Rational zero.
    CyclotomicNumber();
    CyclotomicNumber(const Rational& value, unsigned order = 1);
    CyclotomicNumber(long value) : CyclotomicNumber(Rational(value)) {}

    /// zeta_m^k for any integer k.
    static CyclotomicNumber root_of_unity(unsigned m, long k = 1);
    /// Builds an element of Q(zeta_m) from an arbitrary-length coefficient
    /// vector in powers of zeta_m; the vector is reduced mod Phi_m.
    static CyclotomicNumber from_coefficients(unsigned m, std::vector<Rational> coeffs);

    unsigned order() const { return field_->order(); }
    std::span<const Rational> coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Constant coefficient; the full value when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    /// Same element viewed inside Q(zeta_multiple); multiple must be a
    /// multiple of order().
    CyclotomicNumber promoted(unsigned multiple) const;

    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long exponent) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs += rhs; }
    friend CyclotomicNumber operator-(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs -= rhs; }
    friend CyclotomicNumber operator*(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs *= rhs; }
    friend CyclotomicNumber operator/(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs /= rhs; }
    CyclotomicNumber operator-() const;

    friend bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs);

    /// Renders in powers of the root of unity named `symbol`, highest first,
    /// e.g. "z - 1" or "3/2".
    std::string to_string(const std::string& symbol = "z") const;

  private:
    friend class ProductAccumulator;
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);
    void reduce_in_place(std::vector<Rational>& work) const;
    void unify(CyclotomicNumber& other);

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x);

/// Running sum of products in one field Q(zeta_m), reduced once on value().
/// Every operand must already have order m.
class ProductAccumulator {
  public:
    ProductAccumulator() = default;
    explicit ProductAccumulator(std::shared_ptr<const CyclotomicField> field) : field_(std::move(field)) {}

    void add_product(const CyclotomicNumber& a, const CyclotomicNumber& b);
    bool empty() const { return work_.empty(); }
    CyclotomicNumber value() const;

  private:
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> work_;
};

unsigned lcm_order(unsigned a, unsigned b);

}  // namespace admissible
