#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace admissible {

/// Bijection of {0, ..., degree-1}.  Composition (a * b)(x) = a(b(x)).
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);
    /// Throws std::invalid_argument unless `images` is a bijection.
    explicit Permutation(std::vector<std::uint32_t> images);

    /// Cycle notation over 0-based points, e.g. "(0 1)(2 3)" or "()".
    static Permutation parse_cycles(std::string_view text, std::size_t degree);

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    std::size_t order() const;
    Permutation pow(long k) const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

    std::string to_cycles() const;

  private:
    std::vector<std::uint32_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace admissible
