#ifndef BIDICOL_GENERATORS_HPP
#define BIDICOL_GENERATORS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

#include "raw.hpp"

namespace bidicol::gen {

using Rng = std::mt19937_64;
using ArcList = std::vector<std::pair<Vertex, Vertex>>;

namespace detail {

inline std::uint64_t key(Vertex u, Vertex v) { return std::uint64_t{u} << 32 | v; }

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Links the components of an arc list with one random arc each.
inline void connect(std::size_t n, ArcList& arcs, Rng& rng) {
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : arcs) parent[find(u)] = find(v);
    std::vector<Vertex> reps;
    for (Vertex v = 0; v < n; ++v)
        if (find(v) == v) reps.push_back(v);
    std::shuffle(reps.begin(), reps.end(), rng);
    for (std::size_t k = 1; k < reps.size(); ++k) {
        const Vertex a = reps[k - 1], b = reps[k];
        if (rng() & 1) arcs.emplace_back(a, b);
        else arcs.emplace_back(b, a);
    }
}

}  // namespace detail

// Each ordered pair independently with probability p, then linked up.
inline ArcList random_digraph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    ArcList arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    detail::connect(n, arcs, rng);
    return arcs;
}

// Random spanning tree plus random extra arcs, m arcs in total (capped by
// the number of ordered pairs).
inline ArcList random_connected(std::size_t n, std::size_t m, Rng& rng) {
    ArcList arcs;
    std::unordered_set<std::uint64_t> seen;
    arcs.reserve(m);
    seen.reserve(2 * m);
    for (Vertex v = 1; v < n; ++v) {
        const auto u = static_cast<Vertex>(detail::uniform(rng, 0, v - 1));
        const auto arc = (rng() & 1) ? std::pair{u, v} : std::pair{v, u};
        arcs.push_back(arc);
        seen.insert(detail::key(arc.first, arc.second));
    }
    const std::size_t limit = std::min(m, n * (n - 1));
    while (arcs.size() < limit) {
        const auto u = static_cast<Vertex>(detail::uniform(rng, 0, n - 1));
        const auto v = static_cast<Vertex>(detail::uniform(rng, 0, n - 1));
        if (u == v || !seen.insert(detail::key(u, v)).second) continue;
        arcs.emplace_back(u, v);
    }
    return arcs;
}

inline ArcList bidirect(const ArcList& edges) {
    ArcList arcs;
    for (auto [u, v] : edges) arcs.emplace_back(u, v), arcs.emplace_back(v, u);
    return arcs;
}

// Undirected G(n, p) made connected, as unordered edges u < v.
inline ArcList random_graph(std::size_t n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    ArcList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    detail::connect(n, edges, rng);
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    return edges;
}

inline ArcList directed_cycle(std::size_t n) {
    ArcList arcs;
    for (Vertex v = 0; v < n; ++v) arcs.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return arcs;
}

inline ArcList bidirected_cycle(std::size_t n) { return n == 2 ? directed_cycle(2) : bidirect(directed_cycle(n)); }

// Even n: arcs alternate direction, so every vertex is a source or a sink.
inline ArcList antidirected_cycle(std::size_t n) {
    ArcList arcs;
    for (Vertex v = 0; v < n; ++v) {
        const auto w = static_cast<Vertex>((v + 1) % n);
        if (v % 2 == 0) arcs.emplace_back(v, w);
        else arcs.emplace_back(w, v);
    }
    return arcs;
}

inline ArcList complete_bidirected(std::size_t n) {
    ArcList arcs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return arcs;
}

// Hub 0 and rim 1..k. Every spoke and rim edge is a digon with probability
// p_digon, otherwise a single arc in a random direction.
inline ArcList wheel(std::size_t k, double p_digon, Rng& rng) {
    std::bernoulli_distribution digon(p_digon);
    ArcList arcs;
    auto add = [&](Vertex a, Vertex b) {
        if (digon(rng)) arcs.emplace_back(a, b), arcs.emplace_back(b, a);
        else if (rng() & 1) arcs.emplace_back(a, b);
        else arcs.emplace_back(b, a);
    };
    for (Vertex v = 1; v <= k; ++v) {
        add(0, v);
        add(v, static_cast<Vertex>(v % k + 1));
    }
    return arcs;
}

// Budgets with Σ_c f_c(v) = degrees plus up to `slack` per side, spread over
// at most `spread` random colours per vertex.
inline std::vector<BudgetLine> random_budgets(std::size_t n, const ArcList& arcs, Colour s, Rng& rng,
                                              std::uint64_t slack = 0, std::size_t spread = 3) {
    std::vector<std::uint64_t> din(n, 0), dout(n, 0);
    for (auto [u, v] : arcs) ++dout[u], ++din[v];
    std::vector<BudgetLine> lines;
    std::vector<Colour> palette(s);
    std::iota(palette.begin(), palette.end(), Colour{1});
    for (Vertex v = 0; v < n; ++v) {
        const std::size_t k = detail::uniform(rng, 1, std::min<std::size_t>(spread, s));
        std::shuffle(palette.begin(), palette.end(), rng);
        std::vector<Colour> used(palette.begin(), palette.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(used.begin(), used.end());
        std::vector<BudgetLine> mine;
        for (Colour c : used) mine.push_back({v, c, 0, 0});
        const std::uint64_t tin = din[v] + (slack ? detail::uniform(rng, 0, slack) : 0);
        const std::uint64_t tout = dout[v] + (slack ? detail::uniform(rng, 0, slack) : 0);
        for (std::uint64_t x = 0; x < tin; ++x) ++mine[detail::uniform(rng, 0, k - 1)].in;
        for (std::uint64_t x = 0; x < tout; ++x) ++mine[detail::uniform(rng, 0, k - 1)].out;
        for (const BudgetLine& b : mine)
            if (b.in || b.out) lines.push_back(b);
    }
    return lines;
}

inline RawInstance with_budgets(std::size_t n, ArcList arcs, Colour s, Rng& rng, std::uint64_t slack = 0) {
    RawInstance raw{n, s, std::move(arcs), {}};
    raw.budgets = random_budgets(n, raw.arcs, s, rng, slack);
    return raw;
}

// A Hamiltonian cycle plus `chords` random chords; each underlying edge is
// a digon with probability p_digon, else one arc in a random direction.
inline ArcList cycle_with_chords(std::size_t n, std::size_t chords, double p_digon, Rng& rng) {
    std::bernoulli_distribution digon(p_digon);
    std::unordered_set<std::uint64_t> seen;
    ArcList arcs;
    auto add = [&](Vertex a, Vertex b) {
        if (a == b || !seen.insert(detail::key(std::min(a, b), std::max(a, b))).second) return;
        if (digon(rng)) arcs.emplace_back(a, b), arcs.emplace_back(b, a);
        else if (rng() & 1) arcs.emplace_back(a, b);
        else arcs.emplace_back(b, a);
    };
    for (Vertex v = 0; v < n; ++v) add(v, static_cast<Vertex>((v + 1) % n));
    for (std::size_t t = 0; t < chords; ++t)
        add(static_cast<Vertex>(detail::uniform(rng, 0, n - 1)), static_cast<Vertex>(detail::uniform(rng, 0, n - 1)));
    return arcs;
}

// Tight two-colour budgets that mostly avoid the easy exits: a side of
// degree ≥ 2 gives both colours at least 1, and a vertex whose in- and
// out-neighbourhoods coincide gets symmetric budgets.
inline std::vector<BudgetLine> split_budgets(std::size_t n, const ArcList& arcs, Rng& rng) {
    std::vector<std::uint64_t> din(n, 0), dout(n, 0);
    std::vector<std::vector<Vertex>> inn(n), outn(n);
    for (auto [u, v] : arcs) ++dout[u], ++din[v], outn[u].push_back(v), inn[v].push_back(u);
    auto part = [&](std::uint64_t d) -> std::uint64_t {
        if (d <= 1) return d == 1 ? rng() & 1 : 0;
        return detail::uniform(rng, 1, d - 1);
    };
    std::vector<BudgetLine> lines;
    for (Vertex v = 0; v < n; ++v) {
        std::sort(inn[v].begin(), inn[v].end());
        std::sort(outn[v].begin(), outn[v].end());
        const std::uint64_t a_in = part(din[v]);
        const std::uint64_t a_out = inn[v] == outn[v] ? a_in : part(dout[v]);
        if (a_in || a_out) lines.push_back({v, 1, a_in, a_out});
        if (din[v] - a_in || dout[v] - a_out) lines.push_back({v, 2, din[v] - a_in, dout[v] - a_out});
    }
    return lines;
}

// Every vertex gets (1,1) in each of colours 1..k.
inline std::vector<BudgetLine> uniform_budgets(std::size_t n, Colour k, std::uint64_t value = 1) {
    std::vector<BudgetLine> lines;
    for (Vertex v = 0; v < n; ++v)
        for (Colour c = 1; c <= k; ++c) lines.push_back({v, c, value, value});
    return lines;
}

// A join of random hard blocks (monochromatic, bicycle, complete), glued
// one at a time at a random existing vertex. Hard by construction.
inline RawInstance hard_join(std::size_t blocks, Colour s, std::size_t max_block, Rng& rng) {
    RawInstance raw;
    raw.s = s;
    std::vector<std::vector<std::uint64_t>> fin, fout;  // [v][c−1]
    auto add_vertex = [&]() {
        fin.emplace_back(s, 0);
        fout.emplace_back(s, 0);
        return static_cast<Vertex>(raw.n++);
    };
    max_block = std::max<std::size_t>(max_block, 2);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t kind = detail::uniform(rng, 0, 2);
        if (kind == 1 && s < 2) kind = 0;  // bicycles need two colours
        std::size_t k;
        if (kind == 1) {
            k = detail::uniform(rng, 1, std::max<std::size_t>(1, (max_block - 1) / 2)) * 2 + 1;  // odd cycle
        } else {
            k = detail::uniform(rng, 2, max_block);
        }
        std::vector<Vertex> vs;
        if (b > 0) vs.push_back(static_cast<Vertex>(detail::uniform(rng, 0, raw.n - 1)));
        while (vs.size() < k) vs.push_back(add_vertex());
        std::shuffle(vs.begin(), vs.end(), rng);
        ArcList local;
        if (kind == 0) {
            // Directed Hamiltonian cycle plus random chords: biconnected.
            local = k == 2 ? bidirected_cycle(2) : directed_cycle(k);
            std::unordered_set<std::uint64_t> seen;
            for (auto [u, v] : local) seen.insert(detail::key(u, v));
            const std::size_t chords = detail::uniform(rng, 0, k);
            for (std::size_t t = 0; t < chords; ++t) {
                const auto u = static_cast<Vertex>(detail::uniform(rng, 0, k - 1));
                const auto v = static_cast<Vertex>(detail::uniform(rng, 0, k - 1));
                if (u != v && seen.insert(detail::key(u, v)).second) local.emplace_back(u, v);
            }
            const auto c = detail::uniform(rng, 0, s - 1);
            for (auto [u, v] : local) ++fout[vs[u]][c], ++fin[vs[v]][c];
        } else if (kind == 1) {
            local = bidirected_cycle(k);
            const auto c1 = detail::uniform(rng, 0, s - 1);
            auto c2 = detail::uniform(rng, 0, s - 2);
            if (c2 >= c1) ++c2;
            for (Vertex v : vs) ++fin[v][c1], ++fout[v][c1], ++fin[v][c2], ++fout[v][c2];
        } else {
            local = complete_bidirected(k);
            std::vector<std::uint64_t> split(s, 0);
            for (std::size_t t = 0; t + 1 < k; ++t) ++split[detail::uniform(rng, 0, s - 1)];
            for (Vertex v : vs)
                for (Colour c = 0; c < s; ++c) fin[v][c] += split[c], fout[v][c] += split[c];
        }
        for (auto [u, v] : local) raw.arcs.emplace_back(vs[u], vs[v]);
    }
    for (Vertex v = 0; v < raw.n; ++v)
        for (Colour c = 0; c < s; ++c)
            if (fin[v][c] || fout[v][c]) raw.budgets.push_back({v, c + 1, fin[v][c], fout[v][c]});
    return raw;
}

}  // namespace bidicol::gen

#endif
