#ifndef BIDICOL_HARDNESS_HPP
#define BIDICOL_HARDNESS_HPP

#include <functional>
#include <string>
#include <vector>

#include "reduction.hpp"
#include "traversal.hpp"

namespace bidicol {

struct EndBlockKind {
    enum Kind { not_hard, mono, bicycle, complete };
    Kind kind = not_hard;
    Colour i = no_colour;  // MONO colour, or first BICYCLE colour
    Colour j = no_colour;  // second BICYCLE colour

    friend bool operator==(const EndBlockKind&, const EndBlockKind&) = default;
};

// Called after each partial colouring step with a short step name. Tests use
// it to check that every step is safe; production code leaves it empty.
using StepHook = std::function<void(const Instance&, const char*)>;

namespace detail {

inline std::size_t chain_length(const BudgetTable& t, Vertex v, std::size_t stop) {
    std::size_t k = 0;
    for (auto it = t.chain(v).begin(); it != t.chain(v).end() && k < stop; ++it) ++k;
    return k;
}

// Same nonzero colours with the same values.
inline bool same_chain(const BudgetTable& t, Vertex a, Vertex b) {
    auto x = t.chain(a).begin(), y = t.chain(b).begin();
    const auto xe = t.chain(a).end(), ye = t.chain(b).end();
    for (; x != xe && y != ye; ++x, ++y)
        if (x->colour != y->colour || !(x->value == y->value)) return false;
    return x == xe && y == ye;
}

inline bool symmetric_chain(const BudgetTable& t, Vertex v) {
    for (const auto& e : t.chain(v))
        if (!e.value.symmetric()) return false;
    return true;
}

// Exactly two colours, both (1,1).
inline bool bicycle_chain(const BudgetTable& t, Vertex v, Colour& i, Colour& j) {
    if (chain_length(t, v, 3) != 2) return false;
    auto it = t.chain(v).begin();
    i = it->colour;
    const bool a = it->value == Budget{1, 1};
    ++it;
    j = it->colour;
    return a && it->value == Budget{1, 1};
}

}  // namespace detail

// Decides whether end-block B with cut vertex x is a monochromatic, bicycle
// or complete hard end-block. Cost O(|V(B)| + |A(B)|) on tight pairs.
inline EndBlockKind classify_end_block(const Instance& inst, const BlockView& b, Vertex x) {
    const BudgetTable& t = inst.budgets;
    const std::size_t xi = b.index_of(x);
    if (xi == b.vertices.size() || b.vertices.size() < 2)
        throw Error(ErrorCode::precondition_violated, "classify_end_block: bad cut vertex");
    for (Vertex v : b.vertices)
        if (v != x && !tight_at(inst, v))
            throw Error(ErrorCode::precondition_violated, "classify_end_block: pair not tight");
    const Budget dx{b.in_degree[xi], b.out_degree[xi]};
    const Vertex u = b.vertices[xi == 0 ? 1 : 0];

    if (detail::chain_length(t, u, 2) == 1) {
        const Colour i = t.first_nonzero(u);
        bool ok = t.get(x, i).covers(dx);
        for (std::size_t k = 0; ok && k < b.vertices.size(); ++k) {
            const Vertex v = b.vertices[k];
            if (v == x) continue;
            ok = detail::chain_length(t, v, 2) == 1 && t.first_nonzero(v) == i &&
                 t.get(v, i) == Budget{b.in_degree[k], b.out_degree[k]};
        }
        if (ok) return {EndBlockKind::mono, i, no_colour};
    }

    for (Vertex v : b.vertices) {
        if (v == x) continue;
        if (!detail::same_chain(t, u, v)) return {};
    }
    if (!detail::symmetric_chain(t, u) || !b.bidirected(inst.graph)) return {};

    const std::size_t nb = b.vertices.size();
    Colour i, j;
    if (nb % 2 == 1 && nb >= 3 && b.arcs.size() == 2 * nb && detail::bicycle_chain(t, u, i, j)) {
        if (t.get(x, i).covers({1, 1}) && t.get(x, j).covers({1, 1})) return {EndBlockKind::bicycle, i, j};
        return {};
    }
    if (b.arcs.size() == nb * (nb - 1)) {
        for (const auto& e : t.chain(u))
            if (!t.get(x, e.colour).covers(e.value)) return {};
        return {EndBlockKind::complete, no_colour, no_colour};
    }
    return {};
}

// Greedily colours V(B)∖{x} towards x. On a hard end-block this leaves
// exactly the contracted pair.
// `pos` is scratch indexed by vertex id, reused across blocks.
inline void contract_end_block(Instance& inst, const BlockView& b, Vertex x, EndBlockKind kind,
                               std::vector<std::uint32_t>& pos) {
    if (kind.kind == EndBlockKind::not_hard)
        throw Error(ErrorCode::precondition_violated, "contract_end_block: block is not hard");
    // Local adjacency of B, so a cut vertex in many blocks is not rescanned.
    const std::size_t nb = b.vertices.size();
    std::vector<std::uint32_t> start(nb + 1, 0), adj(2 * b.arcs.size());
    pos.resize(inst.graph.capacity());
    for (std::size_t k = 0; k < nb; ++k) pos[b.vertices[k]] = static_cast<std::uint32_t>(k);
    for (ArcId a : b.arcs) {
        ++start[pos[inst.graph.arc(a).tail] + 1];
        ++start[pos[inst.graph.arc(a).head] + 1];
    }
    for (std::size_t k = 0; k < nb; ++k) start[k + 1] += start[k];
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (ArcId a : b.arcs) {
        const std::uint32_t p = pos[inst.graph.arc(a).tail], q = pos[inst.graph.arc(a).head];
        adj[fill[p]++] = q;
        adj[fill[q]++] = p;
    }
    arc_touches() += 2 * b.arcs.size();
    std::vector<char> seen(nb, 0);
    std::vector<std::uint32_t> order{static_cast<std::uint32_t>(b.index_of(x))};
    seen[order[0]] = 1;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (std::uint32_t e = start[order[h]]; e < start[order[h] + 1]; ++e)
            if (!seen[adj[e]]) seen[adj[e]] = 1, order.push_back(adj[e]);
    std::vector<Vertex> seq;
    seq.reserve(nb);
    for (std::size_t k = order.size(); k-- > 1;) seq.push_back(b.vertices[order[k]]);
    greedy_colour(inst, seq);
}

inline void contract_end_block(Instance& inst, const BlockView& b, Vertex x, EndBlockKind kind) {
    std::vector<std::uint32_t> pos;
    contract_end_block(inst, b, x, kind, pos);
}

// Reduces a tight valid pair to one of its blocks by safe colourings: hard
// end-blocks are contracted; at the first end-block that is not hard, all of
// the remaining digraph outside it is coloured towards its cut vertex.
// `forest` must be the block forest of the current digraph.
inline void reduce_to_block(Instance& inst, const BlockForest& forest, const StepHook& hook = {}) {
    std::vector<std::uint32_t> pos;
    for (std::size_t l = forest.size(); l-- > 1;) {
        const BlockView b = forest.block(l);
        const Vertex x = b.cut;
        const EndBlockKind kind = classify_end_block(inst, b, x);
        if (kind.kind != EndBlockKind::not_hard) {
            contract_end_block(inst, b, x, kind, pos);
            if (hook) hook(inst, "contract_end_block");
            continue;
        }
        std::vector<char> inside(inst.graph.capacity(), 0);
        for (Vertex v : b.vertices) inside[v] = 1;
        auto order = spanning_order_within(inst.graph, x, [&](Vertex w) { return !inside[w]; });
        order.pop_back();  // x itself
        greedy_colour(inst, order);
        if (hook) hook(inst, "colour_outside_block");
        return;
    }
}

inline void reduce_to_block(Instance& inst, const StepHook& hook = {}) {
    reduce_to_block(inst, blocks_with_order(inst.graph), hook);
}

// Hardness test for a biconnected pair; false whenever the pair is loose.
inline bool is_hard_biconnected(const Instance& inst) {
    const BudgetTable& t = inst.budgets;
    const Digraph& g = inst.graph;
    const auto vs = g.vertices();
    if (vs.empty()) throw Error(ErrorCode::precondition_violated, "is_hard_biconnected: empty digraph");
    for (Vertex v : vs)
        if (!covered_at(inst, v))
            throw Error(ErrorCode::precondition_violated, "is_hard_biconnected: invalid pair");
    if (!all_tight(inst)) return false;

    const Vertex u = vs[0];
    if (detail::chain_length(t, u, 2) == 1) {
        const Colour i = t.first_nonzero(u);
        bool mono = true;
        for (Vertex v : vs)
            if (detail::chain_length(t, v, 2) != 1 || t.first_nonzero(v) != i) mono = false;
        if (mono) return true;
    }
    for (Vertex v : vs)
        if (!detail::same_chain(t, u, v)) return false;
    if (!detail::symmetric_chain(t, u)) return false;
    const StructureFlags flags = g.structure_flags();
    if (flags.is_bidirected_complete) return true;
    Colour i, j;
    return g.simple_arc_count() == 0 && flags.underlying_is_cycle && vs.size() % 2 == 1 &&
           detail::bicycle_chain(t, u, i, j);
}

inline bool is_hard(const Instance& inst) {
    if (!is_valid(inst)) throw Error(ErrorCode::precondition_violated, "is_hard: invalid pair");
    if (!all_tight(inst)) throw Error(ErrorCode::precondition_violated, "is_hard: pair is loose");
    Instance scratch = inst;
    reduce_to_block(scratch);
    return is_hard_biconnected(scratch);
}

}  // namespace bidicol

#endif
