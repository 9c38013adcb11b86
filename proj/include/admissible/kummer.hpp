#pragma once

// Kummer Galois algebras L = F[y, z] / (y^q - a, z^q' - b) with the action
// of P = Z/q x Z/q' given by y -> zeta_q^s y, z -> zeta_q'^s' z, where
// zeta_q = zeta^q' and zeta_q' = zeta^q for a primitive qq'-th root zeta.

#include "admissible/rational_function.hpp"
#include "admissible/valuations.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace admissible {

struct GaloisElement {
    int s = 0;   // exponent acting on y
    int sp = 0;  // exponent acting on z
    friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
};

class KummerAlgebra;
using KummerAlgebraPtr = std::shared_ptr<const KummerAlgebra>;

class KummerAlgebra {
  public:
    static KummerAlgebraPtr create(int q, int q_prime, RationalFunction2 a, RationalFunction2 b);
    KummerAlgebra(int q, int q_prime, RationalFunction2 a, RationalFunction2 b);

    int q() const { return q_; }
    int q_prime() const { return q_prime_; }
    int dimension() const { return q_ * q_prime_; }
    const RationalFunction2& a() const { return a_; }
    const RationalFunction2& b() const { return b_; }
    /// Primitive qq'-th root of unity.
    const CyclotomicNumber& zeta() const { return zeta_; }
    /// zeta_q^k and zeta_q'^k.
    CyclotomicNumber zeta_q(long k) const;
    CyclotomicNumber zeta_q_prime(long k) const;

    /// Elements of P in lexicographic order of (s, s').
    std::vector<GaloisElement> group_elements() const;
    std::size_t group_index(GaloisElement g) const;
    GaloisElement group_add(GaloisElement g, GaloisElement h) const;

  private:
    int q_, q_prime_;
    RationalFunction2 a_, b_;
    CyclotomicNumber zeta_;
    std::vector<CyclotomicNumber> zeta_powers_;
};

class KummerElement {
  public:
    static KummerElement zero(KummerAlgebraPtr alg);
    static KummerElement scalar(KummerAlgebraPtr alg, const RationalFunction2& c);
    /// y^i z^j for 0 <= i < q, 0 <= j < q'.
    static KummerElement basis(KummerAlgebraPtr alg, int i, int j);
    /// y^i z^j for arbitrary non-negative exponents, reduced by y^q = a, z^q' = b.
    static KummerElement monomial(KummerAlgebraPtr alg, int i, int j);
    static KummerElement from_vector(KummerAlgebraPtr alg, std::vector<RationalFunction2> coords);

    const KummerAlgebraPtr& algebra() const { return alg_; }
    /// Coordinates on y^i z^j at index i*q' + j.
    const std::vector<RationalFunction2>& coordinates() const { return coords_; }
    bool is_zero() const;
    /// Nonzero coordinate count.
    std::size_t support_size() const;

    KummerElement& operator+=(const KummerElement& rhs);
    KummerElement& operator-=(const KummerElement& rhs);
    friend KummerElement operator+(KummerElement a, const KummerElement& b) { return a += b; }
    friend KummerElement operator-(KummerElement a, const KummerElement& b) { return a -= b; }
    KummerElement scaled(const RationalFunction2& c) const;

    friend bool operator==(const KummerElement& a, const KummerElement& b);
    std::string to_string() const;

  private:
    explicit KummerElement(KummerAlgebraPtr alg);
    KummerAlgebraPtr alg_;
    std::vector<RationalFunction2> coords_;
    friend KummerElement kummer_mul(const KummerElement& x, const KummerElement& y);
    friend KummerElement galois_apply(GaloisElement g, const KummerElement& x);
};

KummerElement kummer_mul(const KummerElement& x, const KummerElement& y);
inline KummerElement operator*(const KummerElement& x, const KummerElement& y) { return kummer_mul(x, y); }
KummerElement galois_apply(GaloisElement g, const KummerElement& x);

/// Inverse by solving x * u = 1; std::nullopt when x is a zero divisor.
std::optional<KummerElement> kummer_inverse(const KummerElement& x);
/// Single-term elements are units whenever a, b != 0; others are solved.
bool kummer_is_unit(const KummerElement& x);

/// Dimension over F of {x in L : g(x) = x for all g in P}.
std::size_t fixed_subspace_dimension(const KummerAlgebraPtr& alg);

struct KummerCertificate {
    std::string element;  // "a" or "b"
    int d = 0;            // prime divisor of q (for a) or q' (for b)
    bool certified = false;
    std::string prime;    // prime used for the certificate
    std::string reason;   // "valuation" or "residue"
};

struct NondegeneracyReport {
    bool certified = false;
    std::vector<KummerCertificate> certificates;
};

/// Sound partial test that a is not a d-th power for every prime d | q and
/// b is not a d-th power for every prime d | q'.  Each certificate is a
/// listed prime where the valuation is not divisible by d, or where the
/// unit part has a residue that is not a d-th power.  Inconclusive cases
/// report certified = false.
NondegeneracyReport nondegenerate_kummer_check(int q, int q_prime, const RationalFunction2& a,
                                               const RationalFunction2& b, const std::vector<PrimeSpec>& primes,
                                               unsigned field_order = 1);

std::vector<int> prime_divisors(int n);

}  // namespace admissible
