#include "admissible/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace admissible {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || hit[x]) throw std::invalid_argument("permutation images are not a bijection");
        hit[x] = true;
    }
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
    Permutation p(degree);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    };
    skip();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '(' in \"" + std::string(text) + "\"");
        ++pos;
        std::vector<std::uint32_t> cycle;
        for (;;) {
            skip();
            if (pos >= text.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("cycle notation: expected point");
            const unsigned long v = std::stoul(std::string(text.substr(start, pos - start)));
            if (v >= degree) throw std::invalid_argument("cycle notation: point " + std::to_string(v) + " out of range");
            cycle.push_back(static_cast<std::uint32_t>(v));
        }
        // Product of the written cycles; the rightmost acts first.
        Permutation c(degree);
        std::vector<bool> seen(degree, false);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (seen[cycle[i]]) throw std::invalid_argument("cycle notation: repeated point in a cycle");
            seen[cycle[i]] = true;
            c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
        p = p * c;
        skip();
    }
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return out;
}

std::size_t Permutation::order() const {
    std::size_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t x = i; !seen[x]; x = images_[x]) {
            seen[x] = true;
            ++len;
        }
        result = std::lcm(result, len);
    }
    return result;
}

Permutation Permutation::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Permutation result(images_.size()), base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    Permutation out;
    out.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) out.images_[i] = a.images_[b.images_[i]];
    return out;
}

std::string Permutation::to_cycles() const {
    std::ostringstream os;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        os << '(';
        bool first = true;
        for (std::size_t x = i; !seen[x]; x = images_[x]) {
            seen[x] = true;
            if (!first) os << ' ';
            os << x;
            first = false;
        }
        os << ')';
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images()) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace admissible
