#pragma once

// Shared helpers for building small networks in tests.

#include <string>
#include <vector>

#include "polynet/network.hpp"
#include "polynet/prng.hpp"

namespace testutil {

using namespace polynet;

inline Vertex bath(const std::string& id, const Rational& gamma = Rational(1)) {
    Vertex v;
    v.id = id;
    v.gamma = gamma;
    v.bath = true;
    return v;
}

inline Vertex free_vertex(const std::string& id) {
    Vertex v;
    v.id = id;
    return v;
}

inline Edge edge(const std::string& u, const std::string& v, Poly p) {
    return Edge{u, v, std::move(p)};
}

/// a * t^4
inline Poly quartic(const Rational& a = Rational(1)) { return a * Poly::monomial(4); }

/// Chain c - v1 - ... - v{n-1} with the bath at c and the given potentials
/// (cycled if fewer than n-1 are supplied).
inline Network chain(int n, const std::vector<Poly>& pots) {
    std::vector<Vertex> vs{bath("c")};
    std::vector<Edge> es;
    std::string prev = "c";
    for (int i = 1; i < n; ++i) {
        const std::string id = "v" + std::to_string(i);
        vs.push_back(free_vertex(id));
        es.push_back(edge(prev, id, pots[static_cast<std::size_t>(i - 1) % pots.size()]));
        prev = id;
    }
    return Network(std::move(vs), std::move(es));
}

/// Star with bath center c and leaves v1..vn carrying the given potentials.
inline Network star(const std::vector<Poly>& leaf_pots) {
    std::vector<Vertex> vs{bath("c")};
    std::vector<Edge> es;
    for (std::size_t i = 0; i < leaf_pots.size(); ++i) {
        const std::string id = "v" + std::to_string(i + 1);
        vs.push_back(free_vertex(id));
        es.push_back(edge("c", id, leaf_pots[i]));
    }
    return Network(std::move(vs), std::move(es));
}

/// rows x cols grid with horizontal and vertical springs, all identical,
/// baths down the first column. Ids are r{i}c{j}.
inline Network grid(int rows, int cols, const Poly& pot) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    auto id = [](int r, int c) { return "r" + std::to_string(r) + "c" + std::to_string(c); };
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            vs.push_back(c == 1 ? bath(id(r, c)) : free_vertex(id(r, c)));
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            if (c < cols) es.push_back(edge(id(r, c), id(r, c + 1), pot));
            if (r < rows) es.push_back(edge(id(r, c), id(r + 1, c), pot));
        }
    return Network(std::move(vs), std::move(es));
}

/// The two-branch network of the locality counter-example: controller c,
/// branches c-v1-v2 and c-v3-v4. Mirrored = both branches identical.
inline Network two_branch(bool mirrored) {
    const Poly inner = Poly::monomial(4) + Poly::monomial(3);
    const Poly inner_other = mirrored ? inner : Poly::monomial(4) + Poly::monomial(2);
    const Poly outer = quartic();
    const Poly outer_other = mirrored ? outer : shift(quartic(), 1); // equivalent either way
    return Network({bath("c"), free_vertex("v1"), free_vertex("v2"), free_vertex("v3"),
                    free_vertex("v4")},
                   {edge("c", "v1", outer), edge("v1", "v2", inner),
                    edge("c", "v3", outer_other), edge("v3", "v4", inner_other)});
}

/// Random connected-ish anharmonic network: n vertices, random degree-3/4
/// potentials, at least one bath vertex.
inline Network random_net(SplitMix64& rng, int n, bool unit_masses = true) {
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i) {
        Vertex v = free_vertex("v" + std::to_string(i));
        if (!unit_masses) v.mass = Rational(rng.uniform(1, 4), rng.uniform(1, 2));
        if (rng.uniform(0, 1) == 0) v.pinning = Poly{0, 0, Rational(rng.uniform(0, 3))};
        vs.push_back(std::move(v));
    }
    const int nbath = static_cast<int>(rng.uniform(1, n));
    for (int i = 0; i < nbath; ++i) {
        vs[static_cast<std::size_t>(i)].bath = true;
        vs[static_cast<std::size_t>(i)].gamma = Rational(rng.uniform(1, 3));
    }
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool attach = j == i + 1 || rng.uniform(0, 2) == 0;
            if (!attach) continue;
            const int deg = static_cast<int>(rng.uniform(3, 4));
            std::vector<Rational> c(static_cast<std::size_t>(deg) + 1);
            for (auto& x : c) x = rng.rational(6, 4);
            while (c.back() == 0) c.back() = rng.rational(6, 4);
            es.push_back(edge("v" + std::to_string(i), "v" + std::to_string(j), Poly(std::move(c))));
        }
    return Network(std::move(vs), std::move(es));
}

} // namespace testutil
