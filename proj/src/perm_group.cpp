#include "admissible/perm_group.hpp"

#include "json.hpp"

#include <cstdlib>
#include <sstream>

namespace admissible {

std::size_t default_enumeration_bound() {
    if (const char* env = std::getenv("ADMISSIBLE_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
        if (g.degree() != degree_) throw std::invalid_argument("generator degree does not match group degree");
}

const std::vector<Permutation>& PermGroup::elements(std::size_t bound) const {
    if (!elements_.empty()) {
        if (elements_.size() > bound) throw GroupTooLarge();
        return elements_;
    }
    std::vector<Permutation> found{identity()};
    std::unordered_map<Permutation, std::size_t, PermutationHash> index{{found[0], 0}};
    for (std::size_t k = 0; k < found.size(); ++k) {
        for (const auto& g : generators_) {
            Permutation y = g * found[k];
            if (index.contains(y)) continue;
            if (found.size() >= bound) throw GroupTooLarge();
            index.emplace(y, found.size());
            found.push_back(std::move(y));
        }
    }
    elements_ = std::move(found);
    index_ = std::move(index);
    return elements_;
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& x) const {
    elements();
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i])) return false;
    return true;
}

std::string PermGroup::to_json() const {
    nlohmann::json j;
    j["degree"] = degree_;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : generators_) j["generators"].push_back(g.to_cycles());
    return j.dump();
}

const std::vector<Permutation>& enumerate(const PermGroup& g, std::size_t bound) { return g.elements(bound); }

PermGroup parse_group(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("empty group input");
    if (text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("group input: ") + e.what());
        }
        if (!j.contains("degree") || !j["degree"].is_number_unsigned())
            throw std::invalid_argument("group input: missing non-negative integer \"degree\"");
        const std::size_t degree = j["degree"].get<std::size_t>();
        std::vector<Permutation> gens;
        if (j.contains("generators")) {
            if (!j["generators"].is_array()) throw std::invalid_argument("group input: \"generators\" must be an array");
            for (const auto& g : j["generators"]) {
                if (!g.is_string()) throw std::invalid_argument("group input: generators must be cycle strings");
                gens.push_back(Permutation::parse_cycles(g.get<std::string>(), degree));
            }
        }
        return PermGroup(degree, std::move(gens));
    }
    std::istringstream in{std::string(text)};
    std::string word;
    in >> word;
    if (word == "degree") in >> word;
    std::size_t degree = 0;
    try {
        degree = std::stoul(word);
    } catch (const std::exception&) {
        throw std::invalid_argument("group input: expected degree, got \"" + word + "\"");
    }
    std::vector<Permutation> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        gens.push_back(Permutation::parse_cycles(line, degree));
    }
    return PermGroup(degree, std::move(gens));
}

}  // namespace admissible
