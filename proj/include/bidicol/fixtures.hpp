#ifndef BIDICOL_FIXTURES_HPP
#define BIDICOL_FIXTURES_HPP

// Small named instances used by the tests and the acceptance run.

#include <vector>

#include "raw.hpp"
#include "solver.hpp"

namespace bidicol::fixtures {

// Five vertices; strictly-(2,0)-bidegenerate but not strictly-(0,2).
inline RawInstance one_sided_five() {
    RawInstance raw;
    raw.n = 5;
    raw.s = 1;
    raw.arcs = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {2, 0}, {3, 2}, {3, 4}, {4, 3}, {4, 1}};
    return raw;
}

// Eleven vertices, colours red = 1, green = 2, blue = 3: a complete block
// on 0..3, a monochromatic red block on {3,4,5,6} and a red/blue bicycle on
// 6..10, joined at 3 and 6. Hard.
inline RawInstance three_block_hard() {
    RawInstance raw;
    raw.n = 11;
    raw.s = 3;
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v) raw.arcs.emplace_back(u, v);
    raw.arcs.insert(raw.arcs.end(), {{5, 4}, {3, 4}, {3, 5}, {5, 6}, {4, 6}});
    const Vertex ring[] = {6, 7, 8, 9, 10};
    for (int k = 0; k < 5; ++k) {
        raw.arcs.emplace_back(ring[k], ring[(k + 1) % 5]);
        raw.arcs.emplace_back(ring[(k + 1) % 5], ring[k]);
    }
    for (Vertex v = 0; v < 3; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 2, 2, 2});
    raw.budgets.push_back({3, 1, 1, 3});
    raw.budgets.push_back({3, 2, 2, 2});
    raw.budgets.push_back({4, 1, 2, 1});
    raw.budgets.push_back({5, 1, 1, 2});
    raw.budgets.push_back({6, 1, 3, 1});
    raw.budgets.push_back({6, 3, 1, 1});
    for (Vertex v = 7; v < 11; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 3, 1, 1});
    return raw;
}

inline SimpleGraph petersen() {
    SimpleGraph g;
    g.n = 10;
    for (Vertex k = 0; k < 5; ++k) {
        g.edges.emplace_back(k, (k + 1) % 5);          // outer cycle
        g.edges.emplace_back(k, k + 5);                // spokes
        g.edges.emplace_back(k + 5, (k + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

inline SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g;
    g.n = n;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

inline SimpleGraph cycle_graph(std::size_t n) {
    SimpleGraph g;
    g.n = n;
    for (Vertex v = 0; v < n; ++v) g.edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

// Every vertex gets `value` on both sides in each colour 1..s.
inline RawInstance constant_budgets(std::size_t n, std::vector<std::pair<Vertex, Vertex>> arcs, Colour s,
                                    std::uint64_t value = 1) {
    RawInstance raw{n, s, std::move(arcs), {}};
    for (Vertex v = 0; v < n; ++v)
        for (Colour c = 1; c <= s; ++c) raw.budgets.push_back({v, c, value, value});
    return raw;
}

// Antidirected C_n with tight budgets that give both colours 1 on every
// nonzero side: sources (0,1)+(0,1), sinks (1,0)+(1,0).
inline RawInstance antidirected_split(std::size_t n) {
    RawInstance raw;
    raw.n = n;
    raw.s = 2;
    for (Vertex v = 0; v < n; ++v) {
        const auto w = static_cast<Vertex>((v + 1) % n);
        if (v % 2 == 0) raw.arcs.emplace_back(v, w);
        else raw.arcs.emplace_back(w, v);
    }
    for (Vertex v = 0; v < n; ++v) {
        const bool source = v % 2 == 0;
        for (Colour c = 1; c <= 2; ++c) raw.budgets.push_back({v, c, source ? 0u : 1u, source ? 1u : 0u});
    }
    return raw;
}

}  // namespace bidicol::fixtures

#endif
