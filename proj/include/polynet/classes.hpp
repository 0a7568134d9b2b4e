#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "polynet/network.hpp"

namespace polynet {

struct TargetClass {
    Poly key;                              // shared adjusted V''/(m_c m_v)
    std::vector<std::string> members;      // ascending id
    std::map<std::string, Rational> shifts; // member -> delta_{cv}
};

/// The first neighbors of one controller, split by class key. Classes are
/// ordered by smallest member id so traces and reports are deterministic.
struct TargetPartition {
    std::string controller;
    std::vector<TargetClass> classes;
};

inline TargetPartition target_classes(const Network& net, const std::string& c) {
    TargetPartition part;
    part.controller = c;
    for (const auto& v : net.neighbors(c)) {
        const ClassKey key = net.class_key(c, v);
        auto it = std::find_if(part.classes.begin(), part.classes.end(),
                               [&](const TargetClass& tc) { return tc.key == key.key; });
        if (it == part.classes.end()) {
            part.classes.push_back(TargetClass{key.key, {v}, {{v, key.shift}}});
        } else {
            it->members.push_back(v);
            it->shifts.emplace(v, key.shift);
        }
    }
    // neighbors() is ascending, so members are sorted and the first member
    // of each class is its smallest: order classes by that representative.
    std::sort(part.classes.begin(), part.classes.end(),
              [](const TargetClass& a, const TargetClass& b) {
                  return a.members.front() < b.members.front();
              });
    return part;
}

namespace detail {

/// N(C): first neighbors of C that are not themselves in C, ascending.
inline std::vector<std::string> outer_neighbors(const Network& net,
                                                const std::vector<std::string>& controllers) {
    std::vector<std::string> out;
    for (const auto& c : controllers)
        for (const auto& n : net.neighbors(c)) {
            if (std::find(controllers.begin(), controllers.end(), n) != controllers.end()) continue;
            if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Adjacency of v into C, ascending.
inline std::vector<std::string> adjacency_into(const Network& net, const std::string& v,
                                               const std::vector<std::string>& controllers) {
    std::vector<std::string> sig;
    for (const auto& c : controllers)
        if (net.has_edge(c, v)) sig.push_back(c);
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline std::vector<std::vector<std::string>> canonical_partition(
    std::vector<std::vector<std::string>> classes) {
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

} // namespace detail

/// Partition of N(C) into C-siblings: vertices connected to C in exactly the
/// same way (for every c in C, the edges {c,v} and {c,w} both present or
/// both absent).
inline std::vector<std::vector<std::string>> sibling_classes(
    const Network& net, const std::vector<std::string>& controllers) {
    std::map<std::vector<std::string>, std::vector<std::string>> by_sig;
    for (const auto& v : detail::outer_neighbors(net, controllers))
        by_sig[detail::adjacency_into(net, v, controllers)].push_back(v);
    std::vector<std::vector<std::string>> classes;
    for (auto& [sig, members] : by_sig) classes.push_back(std::move(members));
    return detail::canonical_partition(std::move(classes));
}

/// Refinement of the sibling partition: members must additionally share the
/// class key with respect to every controller they are linked to.
inline std::vector<std::vector<std::string>> c_equivalence_classes(
    const Network& net, const std::vector<std::string>& controllers) {
    std::vector<std::vector<std::string>> classes;
    for (const auto& siblings : sibling_classes(net, controllers)) {
        const auto common = detail::adjacency_into(net, siblings.front(), controllers);
        std::vector<std::vector<std::string>> split;
        std::vector<std::vector<Poly>> split_keys;
        for (const auto& v : siblings) {
            std::vector<Poly> keys;
            for (const auto& c : common) keys.push_back(net.class_key(c, v).key);
            auto found = split.end();
            for (auto it = split.begin(); it != split.end(); ++it)
                if (split_keys[static_cast<std::size_t>(it - split.begin())] == keys) {
                    found = it;
                    break;
                }
            if (found == split.end()) {
                split.push_back({v});
                split_keys.push_back(std::move(keys));
            } else {
                found->push_back(v);
            }
        }
        for (auto& cls : split) classes.push_back(std::move(cls));
    }
    return detail::canonical_partition(std::move(classes));
}

} // namespace polynet
