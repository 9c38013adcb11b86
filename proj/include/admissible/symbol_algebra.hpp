#pragma once

// Symbol algebras (a, b)_{zeta, n} over F = Q(zeta)(f, t): the F-algebra on
// the basis Y^i Z^j (0 <= i, j < n) with Y^n = a, Z^n = b and YZ = zeta ZY.

#include "admissible/rational_function.hpp"
#include "admissible/valuations.hpp"

#include <map>
#include <memory>
#include <utility>
#include <vector>

namespace admissible {

struct SymbolAlgebraSpec {
    int n = 1;
    CyclotomicNumber zeta{1};
    RationalFunction2 a{1};
    RationalFunction2 b{1};

    /// Spec with zeta = exp(2 pi i / n) represented as the generator of Q(zeta_n).
    static SymbolAlgebraSpec standard(int n, RationalFunction2 a, RationalFunction2 b);
    /// a = f/(f - t), b = (f - t^2)/(f - t - t^2).
    static SymbolAlgebraSpec witness(int n);

    unsigned zeta_order() const { return zeta.order(); }
    /// Throws std::invalid_argument on n < 1, non-primitive zeta, or zero a, b.
    void validate() const;
};

class SymbolAlgebra;
using SymbolAlgebraPtr = std::shared_ptr<const SymbolAlgebra>;

class SymbolAlgebra {
  public:
    static SymbolAlgebraPtr create(SymbolAlgebraSpec spec);

    const SymbolAlgebraSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    /// zeta^k for any integer k.
    const CyclotomicNumber& zeta_power(long k) const;

    explicit SymbolAlgebra(SymbolAlgebraSpec spec);

  private:
    SymbolAlgebraSpec spec_;
    std::vector<CyclotomicNumber> zeta_powers_;
};

class SymbolElement {
  public:
    using Key = std::pair<int, int>;  // exponents of Y and Z

    static SymbolElement zero(SymbolAlgebraPtr alg);
    static SymbolElement scalar(SymbolAlgebraPtr alg, const RationalFunction2& c);
    static SymbolElement basis(SymbolAlgebraPtr alg, int i, int j);
    static SymbolElement y(SymbolAlgebraPtr alg) { return basis(std::move(alg), 1, 0); }
    static SymbolElement z(SymbolAlgebraPtr alg) { return basis(std::move(alg), 0, 1); }
    /// Coordinates in basis order Y^i Z^j -> index i*n + j.
    static SymbolElement from_vector(SymbolAlgebraPtr alg, const std::vector<RationalFunction2>& coords);

    const SymbolAlgebraPtr& algebra() const { return alg_; }
    const std::map<Key, RationalFunction2>& terms() const { return terms_; }
    RationalFunction2 coefficient(int i, int j) const;
    std::vector<RationalFunction2> to_vector() const;
    bool is_zero() const { return terms_.empty(); }

    SymbolElement& operator+=(const SymbolElement& rhs);
    SymbolElement& operator-=(const SymbolElement& rhs);
    friend SymbolElement operator+(SymbolElement a, const SymbolElement& b) { return a += b; }
    friend SymbolElement operator-(SymbolElement a, const SymbolElement& b) { return a -= b; }
    SymbolElement scaled(const RationalFunction2& c) const;
    SymbolElement pow(unsigned k) const;

    friend bool operator==(const SymbolElement& a, const SymbolElement& b);

  private:
    explicit SymbolElement(SymbolAlgebraPtr alg) : alg_(std::move(alg)) {}
    void add(const Key& k, const RationalFunction2& c);
    SymbolAlgebraPtr alg_;
    std::map<Key, RationalFunction2> terms_;

    friend SymbolElement sym_mul(const SymbolElement& x, const SymbolElement& y);
};

/// Bilinear extension of (Y^i Z^j)(Y^k Z^l) = zeta^(-jk) Y^(i+k) Z^(j+l),
/// with Y^n = a and Z^n = b absorbing exponent overflow.
SymbolElement sym_mul(const SymbolElement& x, const SymbolElement& y);
inline SymbolElement operator*(const SymbolElement& x, const SymbolElement& y) { return sym_mul(x, y); }

/// Whether the images of two values in (Z/n)^2 generate the whole group,
/// decided by gcd(det, n) = 1.
bool value_vectors_generate_by_det(RankTwoValue va, RankTwoValue vb, int n);
/// Order of the subgroup of (Z/n)^2 generated by the two images, by enumeration.
std::size_t value_subgroup_order(RankTwoValue va, RankTwoValue vb, int n);

struct DivisionCriterion {
    bool division = false;
    RankTwoValue value_a;
    RankTwoValue value_b;
    long determinant = 0;
    std::size_t subgroup_order = 0;
};

/// Certifies (a, b)_{zeta, n} is a division algebra when the lexicographic
/// values of a and b generate Gamma / n Gamma (order n^2).  Both routes are
/// computed and must agree.
DivisionCriterion division_value_criterion(const SymbolAlgebraSpec& spec);

struct MaximalSubfieldReport {
    bool commute = false;       // y z = z y for y = Y^q', z = Z^q
    bool y_relation = false;    // y^q = a
    bool z_relation = false;    // z^q' = b
    std::size_t dimension = 0;  // rank of {y^i z^j} over F
    bool passed = false;
};

MaximalSubfieldReport maximal_subfield_check(const SymbolAlgebraSpec& spec, int q, int q_prime);

struct InverseResult {
    bool invertible;
    SymbolElement value;  // inverse, or a nonzero w with x * w = 0
};

/// Solves x * u = 1 by exact elimination over F; n is limited to 12.
InverseResult sym_inverse(const SymbolElement& x);

/// Matrix of left multiplication by x in the basis Y^i Z^j.
std::vector<std::vector<RationalFunction2>> left_multiplication_matrix(const SymbolElement& x);

}  // namespace admissible
