#pragma once

// Single-field mutations of a JSON document, for tamper-detection fuzzing.

#include "json.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

struct Mutation {
    std::string pointer;
    std::string kind;
};

/// Changes exactly one leaf of `doc` (or removes it) and describes the change.
inline Mutation mutate_one_field(nlohmann::json& doc, std::mt19937_64& rng) {
    using nlohmann::json;
    std::vector<std::string> leaves;
    const json flat = doc.flatten();
    for (const auto& [path, value] : flat.items()) leaves.push_back(path);
    const json::json_pointer ptr(leaves[rng() % leaves.size()]);
    json& leaf = doc[ptr];

    if (rng() % 8 == 0) {
        json& parent = doc[ptr.parent_pointer()];
        if (parent.is_object())
            parent.erase(ptr.back());
        else
            parent.erase(static_cast<std::size_t>(std::stoul(ptr.back())));
        return {ptr.to_string(), "remove"};
    }
    if (leaf.is_boolean()) {
        leaf = !leaf.get<bool>();
        return {ptr.to_string(), "flip"};
    }
    if (leaf.is_number_integer()) {
        const long long v = leaf.get<long long>();
        leaf = rng() % 2 ? v + 1 : v - 1;
        return {ptr.to_string(), "increment"};
    }
    if (leaf.is_string()) {
        std::string s = leaf.get<std::string>();
        switch (rng() % 3) {
            case 0: s += "*t"; break;
            case 1: s = s.empty() ? "1" : s.substr(0, s.size() - 1); break;
            default: s = "(" + s + ")^2"; break;
        }
        leaf = s;
        return {ptr.to_string(), "edit string"};
    }
    leaf = 7;
    return {ptr.to_string(), "replace"};
}

}  // namespace testing_support
