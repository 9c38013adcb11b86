#pragma once

// Sylow subgroups, abelian rank, metacyclicity, and the admissibility
// verdicts for finite permutation groups.

#include "admissible/perm_group.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace admissible {

/// Prime factorization as (prime, exponent) pairs in increasing order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
bool is_prime(std::uint64_t n);

struct AbelianRank {
    bool is_abelian = false;
    std::optional<int> rank;  // set only for abelian groups
};

/// For a p-group: abelian iff the generators commute; the rank is
/// log_p #{x : x^p = 1}.
AbelianRank abelian_rank(const PermGroup& p_group, unsigned p);

struct AbelianDecomposition {
    std::size_t q = 1;        // order of the cyclic factor of maximal order
    std::size_t q_prime = 1;  // complementary cyclic factor, q >= q_prime
    Permutation g;            // generator of C_q
    Permutation h;            // generator of C_q'
};

/// P = <g> x <h>; throws std::invalid_argument("not rank <= 2 abelian").
AbelianDecomposition abelian_decompose(const PermGroup& p_group, unsigned p);

struct SylowData {
    unsigned p = 0;
    PermGroup subgroup{0};
    std::size_t order = 1;
    bool is_abelian = true;
    std::optional<int> rank;
    std::optional<std::pair<std::size_t, std::size_t>> invariants;  // (q, q') when abelian of rank <= 2
};

/// A Sylow p-subgroup, grown from the trivial group by repeatedly adjoining
/// a p-element of the normalizer that lies outside the current subgroup.
SylowData sylow(const PermGroup& g, unsigned p);

struct MetacyclicWitness {
    Permutation normal_generator;    // N = <normal_generator> is cyclic and normal
    Permutation quotient_generator;  // its coset generates G/N
    std::size_t normal_order = 1;
};

std::optional<MetacyclicWitness> is_metacyclic(const PermGroup& g);

enum class VerdictMode { Rank2, Metacyclic };

struct PrimeReport {
    unsigned p = 0;
    unsigned exponent = 0;
    bool excluded = false;
    bool passes = false;
    SylowData sylow;
    std::optional<MetacyclicWitness> metacyclic;
};

struct Verdict {
    bool admissible = false;
    VerdictMode mode = VerdictMode::Rank2;
    std::size_t order = 1;
    std::vector<PrimeReport> primes;
};

/// Rank2: every Sylow subgroup (except at the excluded prime) is abelian of
/// rank at most 2.  Metacyclic: every such Sylow subgroup is metacyclic.
Verdict admissibility_verdict(const PermGroup& g, VerdictMode mode,
                              std::optional<unsigned> excluded_prime = std::nullopt);

/// C_e semidirect C_m with tau^-1 sigma tau = sigma^i.
struct MetacyclicDescriptor {
    int e = 1;
    int m = 1;
    int i = 1;
    /// Throws std::invalid_argument unless gcd(i, e) = 1, i^m = 1 mod e and
    /// 1 <= i < max(e, 2).
    void validate() const;
};

struct DescriptorGroup {
    PermGroup group{0};
    Permutation sigma;
    Permutation tau;
    bool abelian_by_generators = false;
    bool abelian_by_exponent = false;  // i = 1 mod e
};

/// Left-regular permutation representation on e*m points.
DescriptorGroup metacyclic_descriptor_group(const MetacyclicDescriptor& d);

/// Cyclic subgroup generated by x as a list of its elements.
std::vector<Permutation> cyclic_subgroup(const Permutation& x);

}  // namespace admissible
