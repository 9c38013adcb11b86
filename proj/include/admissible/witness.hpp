#pragma once

// Witness certificates: for an admissible group, one symbol division
// algebra per prime dividing |G|, each containing a maximal subfield with
// Galois group the Sylow subgroup, together with every check needed to
// re-verify the construction from the serialized data alone.

#include "admissible/group_theory.hpp"
#include "admissible/ramification.hpp"
#include "admissible/symbol_algebra.hpp"

#include "json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace admissible {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr int kCertificateVersion = 1;
inline constexpr std::uint64_t kWitnessSeed = 20240601;

class NotAdmissible : public std::runtime_error {
  public:
    NotAdmissible()
        : std::runtime_error("group not admissible: some Sylow subgroup is not abelian of rank at most 2") {}
};

/// The certificate document.  Keys are sorted by the json object type.
struct WitnessCertificate {
    nlohmann::json data;

    /// Canonical serialization: sorted keys, two-space indent, trailing newline.
    std::string serialize() const;
    static WitnessCertificate parse(const std::string& text);
};

/// Throws NotAdmissible when the rank-two verdict is false, and
/// std::logic_error naming the check if any per-prime check fails.
WitnessCertificate build_witness(const PermGroup& g);

/// gcd over i of order / |P_i|; with no Sylow data the result is the order.
bool gcd_index_check(const std::vector<SylowData>& sylows, std::size_t order);
std::size_t gcd_of_indices(const std::vector<std::size_t>& sylow_orders, std::size_t order);

/// Checks on the witness spec for one prime.  Each function recomputes from
/// the spec only.
nlohmann::json division_check_json(const SymbolAlgebraSpec& spec);
nlohmann::json maximal_subfield_json(const SymbolAlgebraSpec& spec, int q, int q_prime);
nlohmann::json branch_split_json(const SymbolAlgebraSpec& spec);
nlohmann::json nondegenerate_kummer_json(const SymbolAlgebraSpec& spec, int q, int q_prime);
nlohmann::json ramification_json(const SymbolAlgebraSpec& spec);
/// Y^n = a, Z^n = b, YZ = zeta ZY and seeded associativity samples on basis triples.
nlohmann::json relations_json(const SymbolAlgebraSpec& spec, std::uint64_t seed);

struct CheckOutcome {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    bool passed = false;
    std::vector<CheckOutcome> checks;

    nlohmann::json to_json() const;
};

/// Recomputes every check from the certificate's stored specs, compares the
/// certificate with a canonical rebuild from the group input, and reports
/// parse errors and group mismatches as failed checks.
VerificationReport verify_certificate(const std::string& certificate_text, const std::string& group_text);

}  // namespace admissible
