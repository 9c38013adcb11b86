#pragma once

#include "admissible/permutation.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace admissible {

class GroupTooLarge : public std::runtime_error {
  public:
    GroupTooLarge() : std::runtime_error("group too large for enumeration") {}
};

/// 200000 unless ADMISSIBLE_MAX_GROUP_ORDER is set to a positive integer.
std::size_t default_enumeration_bound();

/// Permutation group given by generators.  The element list is computed on
/// first use and cached in the instance; an instance must not be shared
/// across threads until it has been enumerated.
class PermGroup {
  public:
    explicit PermGroup(std::size_t degree, std::vector<Permutation> generators = {});

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }

    /// Breadth-first closure of the generators; element 0 is the identity.
    const std::vector<Permutation>& elements(std::size_t bound = default_enumeration_bound()) const;
    std::size_t order() const { return elements().size(); }

    bool contains(const Permutation& x) const { return index_of(x).has_value(); }
    std::optional<std::size_t> index_of(const Permutation& x) const;

    Permutation identity() const { return Permutation(degree_); }
    /// Generators pairwise commute.
    bool is_abelian() const;

    std::string to_json() const;

  private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    mutable std::vector<Permutation> elements_;
    mutable std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Breadth-first enumeration; throws GroupTooLarge beyond `bound`.
const std::vector<Permutation>& enumerate(const PermGroup& g, std::size_t bound = default_enumeration_bound());

/// Reads {"degree": d, "generators": ["(0 1)", ...]} or the text form
///     degree 4
///     (0 1)
///     (0 1 2 3)
PermGroup parse_group(std::string_view text);

}  // namespace admissible
