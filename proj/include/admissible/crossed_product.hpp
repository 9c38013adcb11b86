#pragma once

// Crossed products (L, P, c) = sum over sigma of L u_sigma with
//     u_sigma x = sigma(x) u_sigma,  u_sigma u_tau = c(sigma, tau) u_{sigma tau}
// for a Kummer algebra L with group P = Z/q x Z/q', and the induced Galois
// algebras Ind_H^G L described by coset data.

#include "admissible/kummer.hpp"
#include "admissible/perm_group.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace admissible {

/// A function P x P -> L, stored as a table over the ordered elements of P
/// (see KummerAlgebra::group_elements): entry (s, t) at index s*|P| + t.
class Cocycle {
  public:
    explicit Cocycle(KummerAlgebraPtr alg);  // constant 1

    const KummerAlgebraPtr& algebra() const { return alg_; }
    std::size_t group_order() const { return order_; }
    const KummerElement& operator()(std::size_t s, std::size_t t) const { return values_[s * order_ + t]; }
    void set(std::size_t s, std::size_t t, KummerElement value);

    /// {"q", "q_prime", "a", "b", "table": [[entry, ...], ...]} with entries rendered as strings.
    std::string to_json() const;

  private:
    KummerAlgebraPtr alg_;
    std::size_t order_;
    std::vector<KummerElement> values_;
};

Cocycle trivial_cocycle(const KummerAlgebraPtr& alg);

/// F-valued cocycle alpha^[s1 + s2 >= q] * beta^[s1' + s2' >= q'] (the
/// product of the two cyclic carry cocycles).
Cocycle carry_cocycle(const KummerAlgebraPtr& alg, const RationalFunction2& alpha, const RationalFunction2& beta);

/// The cocycle of the symbol algebra (a, b)_{zeta, qq'} relative to its
/// subfield F(y, z), y = Y^q', z = Z^q, using u_(s, s') = Z^-s Y^s':
///     c = zeta^(-s1' s2) * (z^-1)^[s1 + s2 >= q] * (zeta_q^r y)^[s1' + s2' >= q']
/// with r = (s1 + s2) mod q.
Cocycle symbol_cocycle(const KummerAlgebraPtr& alg);

struct CocycleCheck {
    bool passed = true;
    bool exhaustive = true;
    std::size_t triples_checked = 0;
    std::optional<std::array<std::size_t, 3>> failing;  // group indices (sigma, tau, rho)
};

/// Checks c(s,t) c(st,r) = s(c(t,r)) c(s,tr).  Exhaustive for |P| <= 24,
/// otherwise `samples` seeded random triples.  Throws ArithmeticError when a
/// value is not a unit of L.
CocycleCheck cocycle_check(const Cocycle& c, std::size_t samples = 4096, std::uint64_t seed = 20240601);

class CrossedProduct;
using CrossedProductPtr = std::shared_ptr<const CrossedProduct>;

class CrossedProduct {
  public:
    static CrossedProductPtr create(Cocycle c);
    explicit CrossedProduct(Cocycle c);

    const KummerAlgebraPtr& field() const { return cocycle_.algebra(); }
    const Cocycle& cocycle() const { return cocycle_; }
    const std::vector<GaloisElement>& group() const { return group_; }
    std::size_t group_order() const { return group_.size(); }
    /// Index of group[s] + group[t].
    std::size_t compose(std::size_t s, std::size_t t) const { return table_[s * group_.size() + t]; }
    /// |P| * dim L over F.
    std::size_t dimension() const;

  private:
    Cocycle cocycle_;
    std::vector<GaloisElement> group_;
    std::vector<std::size_t> table_;
};

class CrossedProductElement {
  public:
    static CrossedProductElement zero(CrossedProductPtr cp);
    /// x * u_sigma.
    static CrossedProductElement term(CrossedProductPtr cp, std::size_t sigma, KummerElement x);
    static CrossedProductElement u(CrossedProductPtr cp, std::size_t sigma);
    /// y^i z^j u_sigma.
    static CrossedProductElement basis(CrossedProductPtr cp, std::size_t sigma, int i, int j);

    const CrossedProductPtr& algebra() const { return cp_; }
    const KummerElement& coefficient(std::size_t sigma) const { return coeffs_[sigma]; }
    bool is_zero() const;

    CrossedProductElement& operator+=(const CrossedProductElement& rhs);
    friend CrossedProductElement operator+(CrossedProductElement a, const CrossedProductElement& b) { return a += b; }
    friend bool operator==(const CrossedProductElement& a, const CrossedProductElement& b);

  private:
    explicit CrossedProductElement(CrossedProductPtr cp);
    CrossedProductPtr cp_;
    std::vector<KummerElement> coeffs_;
    friend CrossedProductElement crossed_product_mul(const CrossedProductElement& x, const CrossedProductElement& y);
};

CrossedProductElement crossed_product_mul(const CrossedProductElement& x, const CrossedProductElement& y);
inline CrossedProductElement operator*(const CrossedProductElement& x, const CrossedProductElement& y) {
    return crossed_product_mul(x, y);
}

struct BasisLabel {
    std::size_t sigma = 0;
    int i = 0;
    int j = 0;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

enum class AssociativityScope { BasisTriples, UnitTriples };

struct AssociativityCheck {
    bool associative = true;
    AssociativityScope scope = AssociativityScope::BasisTriples;
    std::size_t triples_checked = 0;
    std::optional<std::array<BasisLabel, 3>> failing;
};

/// (xy)w = x(yw) over basis triples y^i z^j u_sigma, or over the triples
/// u_sigma, u_tau, u_rho only.  The default picks basis triples when the
/// dimension is at most 36.
AssociativityCheck check_associativity(const CrossedProductPtr& cp, std::optional<AssociativityScope> scope = std::nullopt);

/// Ind_H^G L: copies of L indexed by the left cosets r_k H.  Each g in G
/// sends component k to component pi(k) and acts there through the label
/// h = r_pi(k)^-1 g r_k in H.
struct InducedAlgebra {
    struct Action {
        Permutation element;
        std::vector<std::size_t> coset_image;
        std::vector<Permutation> labels;
    };

    std::string label;
    std::size_t components = 0;
    std::vector<Permutation> coset_representatives;
    std::vector<Action> generator_actions;

    /// Action of an arbitrary element of G.
    Action act(const Permutation& g) const;
    bool split() const { return subgroup_order == 1; }

    std::size_t subgroup_order = 1;
    PermGroup group{0};
    std::vector<std::size_t> coset_of;  // coset of each element of G, by element index
};

/// Throws std::invalid_argument("subgroup is not contained in the group")
/// unless H <= G.
InducedAlgebra induced_algebra(const PermGroup& h, const PermGroup& g, const std::string& label);

}  // namespace admissible
