#ifndef BIDICOL_SOLVER_HPP
#define BIDICOL_SOLVER_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twocolour.hpp"

namespace bidicol {

struct SolveOutcome {
    enum Kind { coloured, hard, invalid };
    Kind kind = invalid;
    Colouring colouring;                  // total when coloured
    std::string reason;                   // "disconnected" or "budget-deficit <v>"
    std::optional<Vertex> deficit_vertex;
};

// True iff col is total on the live vertices and every colour class peels
// to empty under d⁻ < f_c⁻ or d⁺ < f_c⁺.
inline bool verify_dicolouring(const Instance& inst, const Colouring& col) {
    const Digraph& g = inst.graph;
    const Colour s = inst.colour_count();
    const auto vs = g.vertices();
    if (col.size() < g.capacity()) return false;
    for (Vertex v : vs)
        if (col[v] == no_colour || col[v] > s) return false;
    std::vector<std::uint64_t> din(g.capacity(), 0), dout(g.capacity(), 0);
    std::vector<Budget> f(g.capacity());
    for (Vertex v : vs) {
        f[v] = inst.budgets.get(v, col[v]);
        for (ArcId a : g.out_arcs(v)) {
            const Vertex w = g.arc(a).head;
            if (col[w] == col[v]) ++dout[v], ++din[w];
        }
    }
    std::vector<char> state(g.capacity(), 0);
    std::vector<Vertex> stack;
    auto try_push = [&](Vertex v) {
        if (state[v] == 0 && (f[v].in > din[v] || f[v].out > dout[v])) {
            state[v] = 1;
            stack.push_back(v);
        }
    };
    for (Vertex v : vs) try_push(v);
    std::size_t peeled = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        state[u] = 2;
        ++peeled;
        for (ArcId a : g.out_arcs(u)) {
            const Vertex w = g.arc(a).head;
            if (col[w] != col[u] || state[w] == 2) continue;
            --din[w];
            try_push(w);
        }
        for (ArcId a : g.in_arcs(u)) {
            const Vertex w = g.arc(a).tail;
            if (col[w] != col[u] || state[w] == 2) continue;
            --dout[w];
            try_push(w);
        }
    }
    return peeled == vs.size();
}

// Decides a pair: an F-dicolouring, HARD, or INVALID when D is disconnected
// or (⋆) fails somewhere. `hook` sees every intermediate reduced pair.
inline SolveOutcome solve(const Instance& inst, const StepHook& hook = {}) {
    SolveOutcome out;
    const auto deficit = budget_deficit(inst);
    // On the tight path the block DFS doubles as the connectivity check.
    std::optional<BlockForest> forest;
    const bool tight = !deficit && all_tight(inst);
    const bool connected = tight ? (forest = try_blocks_with_order(inst.graph)).has_value() : is_connected(inst.graph);
    if (!connected) {
        out.reason = "disconnected";
        return out;
    }
    if (deficit) {
        out.reason = "budget-deficit " + std::to_string(*deficit);
        out.deficit_vertex = deficit;
        return out;
    }
    Instance work = inst;
    std::fill(work.colouring.begin(), work.colouring.end(), no_colour);
    if (work.graph.vertex_count() > 0) {
        if (!tight) {
            solve_loose(work);
        } else {
            reduce_to_block(work, *forest, hook);
            if (is_hard_biconnected(work)) {
                out.kind = SolveOutcome::hard;
                return out;
            }
            if (auto two = reduce_to_two(work)) {
                if (hook) hook(two->two, "reduce_to_two");
                solve_two_colour_biconnected(two->two, hook);
                lift_two_colouring(work, two->chosen, two->two.colouring);
            }
        }
    }
    out.kind = SolveOutcome::coloured;
    out.colouring = std::move(work.colouring);
    return out;
}

// ---------------------------------------------------------------------------
// Frontends. Each encodes its problem as a pair, solves, and checks the
// decoded answer against the problem's own definition.

struct SimpleGraph {
    std::size_t n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;

    std::vector<std::uint32_t> degrees() const {
        std::vector<std::uint32_t> d(n, 0);
        for (auto [a, b] : edges) ++d[a], ++d[b];
        return d;
    }
    std::uint32_t max_degree() const {
        const auto d = degrees();
        return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
    }
};

namespace detail {

inline std::vector<std::pair<Vertex, Vertex>> bidirect(const SimpleGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> arcs;
    arcs.reserve(2 * g.edges.size());
    for (auto [a, b] : g.edges) {
        arcs.emplace_back(a, b);
        arcs.emplace_back(b, a);
    }
    return arcs;
}

inline bool graph_connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n == 0) return true;
    std::vector<Vertex> parent(n);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t parts = n;
    for (auto [a, b] : edges) {
        const Vertex x = find(a), y = find(b);
        if (x != y) parent[x] = y, --parts;
    }
    return parts == 1;
}

// Solves and maps INVALID to the frontend's error.
inline std::optional<Colouring> solve_encoded(const RawInstance& raw) {
    const Instance inst = make_instance(raw);
    SolveOutcome r = solve(inst);
    if (r.kind == SolveOutcome::invalid) {
        if (r.deficit_vertex) throw Error(ErrorCode::budget_deficit, "vertex " + std::to_string(*r.deficit_vertex));
        throw Error(ErrorCode::disconnected, "frontend input");
    }
    if (r.kind == SolveOutcome::hard) return std::nullopt;
    return std::move(r.colouring);
}

// Undirected peeling: every class peels with degree < bound(v, class).
template <class Bound>
bool peels_undirected(const SimpleGraph& g, const Colouring& col, Bound&& bound) {
    std::vector<std::vector<Vertex>> adj(g.n);
    for (auto [a, b] : g.edges)
        if (col[a] == col[b]) adj[a].push_back(b), adj[b].push_back(a);
    std::vector<std::size_t> deg(g.n);
    std::vector<char> gone(g.n, 0), queued(g.n, 0);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < g.n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] < bound(v, col[v])) queued[v] = 1, stack.push_back(v);
    }
    std::size_t peeled = 0;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        gone[u] = 1;
        ++peeled;
        for (Vertex w : adj[u]) {
            if (gone[w]) continue;
            --deg[w];
            if (!queued[w] && deg[w] < bound(w, col[w])) queued[w] = 1, stack.push_back(w);
        }
    }
    return peeled == g.n;
}

}  // namespace detail

inline bool is_proper_colouring(const SimpleGraph& g, const Colouring& col, Colour k) {
    if (col.size() < g.n) return false;
    for (Vertex v = 0; v < g.n; ++v)
        if (col[v] == no_colour || col[v] > k) return false;
    for (auto [a, b] : g.edges)
        if (col[a] == col[b]) return false;
    return true;
}

// Each class i induces a (p_i − 1)-degenerate subgraph.
inline bool is_degenerate_partition(const SimpleGraph& g, const Colouring& col, const std::vector<std::uint32_t>& p) {
    for (Vertex v = 0; v < g.n; ++v)
        if (col[v] == no_colour || col[v] > p.size()) return false;
    return detail::peels_undirected(g, col, [&](Vertex, Colour c) { return std::size_t{p[c - 1]}; });
}

struct BrooksResult {
    enum Kind { colouring, complete, odd_cycle };
    Kind kind = colouring;
    Colouring colours;
};

// Δ-colouring of a connected graph, or the reason none exists.
inline BrooksResult brooks(const SimpleGraph& g) {
    if (!detail::graph_connected(g.n, g.edges)) throw Error(ErrorCode::disconnected, "brooks");
    const std::uint32_t delta = g.max_degree();
    if (delta <= 1) return {BrooksResult::complete, {}};  // K1 or K2
    RawInstance raw{g.n, delta, detail::bidirect(g), {}};
    raw.budgets.reserve(g.n * delta);
    for (Vertex v = 0; v < g.n; ++v)
        for (Colour c = 1; c <= delta; ++c) raw.budgets.push_back({v, c, 1, 1});
    auto col = detail::solve_encoded(raw);
    if (!col) {
        const bool complete = g.edges.size() == g.n * (g.n - 1) / 2;
        return {complete ? BrooksResult::complete : BrooksResult::odd_cycle, {}};
    }
    if (!is_proper_colouring(g, *col, delta)) throw std::logic_error("brooks: decoded colouring is not proper");
    return {BrooksResult::colouring, std::move(*col)};
}

// Lists L(v) ⊆ {1..s} with |L(v)| ≥ max(d⁻(v), d⁺(v)). nullopt means the
// pair is hard, i.e. no L-dicolouring exists.
inline std::optional<Colouring> list_dicolour(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs,
                                              const std::vector<std::vector<Colour>>& lists) {
    if (lists.size() != n) throw Error(ErrorCode::index_out_of_range, "list_dicolour: one list per vertex");
    std::vector<std::uint32_t> din(n, 0), dout(n, 0);
    for (auto [a, b] : arcs) ++dout[a], ++din[b];
    Colour s = 1;
    RawInstance raw{n, 0, arcs, {}};
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Colour> l = lists[v];
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.size() < std::max(din[v], dout[v])) throw Error(ErrorCode::list_too_small, "vertex " + std::to_string(v));
        for (Colour c : l) {
            if (c == no_colour) throw Error(ErrorCode::index_out_of_range, "list_dicolour: colour 0");
            s = std::max(s, c);
            raw.budgets.push_back({v, c, 1, 1});
        }
    }
    raw.s = s;
    auto col = detail::solve_encoded(raw);
    if (col) {
        for (Vertex v = 0; v < n; ++v)
            if (std::find(lists[v].begin(), lists[v].end(), (*col)[v]) == lists[v].end())
                throw std::logic_error("list_dicolour: colour outside the list");
    }
    return col;
}

// Partition into classes with class i (p_i − 1)-degenerate, when Σ p_i ≥ Δ.
inline std::optional<Colouring> degenerate_partition(const SimpleGraph& g, const std::vector<std::uint32_t>& p) {
    const std::uint64_t sum = std::accumulate(p.begin(), p.end(), std::uint64_t{0});
    if (sum < g.max_degree()) throw Error(ErrorCode::budget_deficit, "sum of p below max degree");
    RawInstance raw{g.n, static_cast<Colour>(p.size()), detail::bidirect(g), {}};
    for (Vertex v = 0; v < g.n; ++v)
        for (Colour c = 1; c <= p.size(); ++c)
            if (p[c - 1] > 0) raw.budgets.push_back({v, c, p[c - 1], p[c - 1]});
    auto col = detail::solve_encoded(raw);
    if (col && !is_degenerate_partition(g, *col, p))
        throw std::logic_error("degenerate_partition: class not degenerate");
    return col;
}

// g[v][i−1] = g_i(v) with Σ_i g_i(v) ≥ d(v). Class i peels with d(v) < g_i(v).
inline std::optional<Colouring> variable_degeneracy(const SimpleGraph& g,
                                                    const std::vector<std::vector<std::uint32_t>>& budget) {
    if (budget.size() != g.n) throw Error(ErrorCode::index_out_of_range, "variable_degeneracy: one row per vertex");
    Colour s = 1;
    RawInstance raw{g.n, 0, detail::bidirect(g), {}};
    for (Vertex v = 0; v < g.n; ++v) {
        s = std::max<Colour>(s, static_cast<Colour>(budget[v].size()));
        for (Colour c = 1; c <= budget[v].size(); ++c)
            if (budget[v][c - 1] > 0) raw.budgets.push_back({v, c, budget[v][c - 1], budget[v][c - 1]});
    }
    raw.s = s;
    auto col = detail::solve_encoded(raw);
    if (col) {
        auto bound = [&](Vertex v, Colour c) {
            return c <= budget[v].size() ? std::size_t{budget[v][c - 1]} : std::size_t{0};
        };
        if (!detail::peels_undirected(g, *col, bound)) throw std::logic_error("variable_degeneracy: class does not peel");
    }
    return col;
}

// h[v][i−1] = h_i(v) with Σ_i h_i(v) ≥ max(d⁻(v), d⁺(v)). Class i peels with
// min(d⁻, d⁺) < h_i(v).
inline std::optional<Colouring> min_degenerate_partition(std::size_t n,
                                                         const std::vector<std::pair<Vertex, Vertex>>& arcs,
                                                         const std::vector<std::vector<std::uint32_t>>& h) {
    if (h.size() != n) throw Error(ErrorCode::index_out_of_range, "min_degenerate_partition: one row per vertex");
    std::vector<std::uint32_t> din(n, 0), dout(n, 0);
    for (auto [a, b] : arcs) ++dout[a], ++din[b];
    Colour s = 1;
    RawInstance raw{n, 0, arcs, {}};
    for (Vertex v = 0; v < n; ++v) {
        const std::uint64_t sum = std::accumulate(h[v].begin(), h[v].end(), std::uint64_t{0});
        if (sum < std::max(din[v], dout[v])) throw Error(ErrorCode::budget_deficit, "vertex " + std::to_string(v));
        s = std::max<Colour>(s, static_cast<Colour>(h[v].size()));
        for (Colour c = 1; c <= h[v].size(); ++c)
            if (h[v][c - 1] > 0) raw.budgets.push_back({v, c, h[v][c - 1], h[v][c - 1]});
    }
    raw.s = s;
    auto col = detail::solve_encoded(raw);
    if (col) {
        std::vector<std::vector<Vertex>> outs(n), ins(n);
        for (auto [a, b] : arcs)
            if ((*col)[a] == (*col)[b]) outs[a].push_back(b), ins[b].push_back(a);
        std::vector<std::size_t> i(n), o(n);
        std::vector<char> state(n, 0);
        std::vector<Vertex> stack;
        auto bound = [&](Vertex v) {
            const Colour c = (*col)[v];
            return c <= h[v].size() ? std::size_t{h[v][c - 1]} : std::size_t{0};
        };
        auto try_push = [&](Vertex v) {
            if (state[v] == 0 && std::min(i[v], o[v]) < bound(v)) state[v] = 1, stack.push_back(v);
        };
        for (Vertex v = 0; v < n; ++v) i[v] = ins[v].size(), o[v] = outs[v].size();
        for (Vertex v = 0; v < n; ++v) try_push(v);
        std::size_t left = n;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            state[u] = 2;
            --left;
            for (Vertex w : outs[u])
                if (state[w] != 2) --i[w], try_push(w);
            for (Vertex w : ins[u])
                if (state[w] != 2) --o[w], try_push(w);
        }
        if (left != 0) throw std::logic_error("min_degenerate_partition: class does not peel");
    }
    return col;
}

}  // namespace bidicol

#endif
