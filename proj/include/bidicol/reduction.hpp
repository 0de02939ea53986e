#ifndef BIDICOL_REDUCTION_HPP
#define BIDICOL_REDUCTION_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "instance.hpp"

namespace bidicol {

// Colours seq in order, each vertex with the lowest colour it still has
// budget for. Throws GreedyStuck at the first vertex with an empty chain;
// everything coloured before it stays coloured.
inline void greedy_colour(Instance& inst, std::span<const Vertex> seq) {
    for (Vertex v : seq) {
        if (!inst.graph.alive(v)) throw Error(ErrorCode::vertex_dead, "vertex " + std::to_string(v));
        const Colour c = inst.budgets.first_nonzero(v);
        if (c == no_colour) throw Error(ErrorCode::greedy_stuck, "vertex " + std::to_string(v));
        colour_vertex(inst, v, c);
    }
}

struct Peeling {
    bool degenerate = false;
    std::vector<Vertex> order;    // v_1..v_k when degenerate
    std::vector<Vertex> witness;  // vertices left unpeeled otherwise
};

// Peels vertices u with f⁻(u) > d⁻(u) or f⁺(u) > d⁺(u) in the current
// subgraph. The order is the reverse of the removal sequence, so every v_i
// beats its degree towards {v_1..v_i}. `f` maps a vertex to its Budget.
template <class F>
Peeling bidegeneracy_order(const Digraph& g, F&& f) {
    const auto vs = g.vertices();
    std::vector<std::uint64_t> din(g.capacity()), dout(g.capacity());
    std::vector<Budget> bound(g.capacity());
    std::vector<char> state(g.capacity(), 0);  // 1 queued, 2 removed
    std::vector<Vertex> stack;
    auto removable = [&](Vertex v) { return bound[v].in > din[v] || bound[v].out > dout[v]; };
    for (Vertex v : vs) {
        din[v] = g.in_degree(v);
        dout[v] = g.out_degree(v);
        bound[v] = f(v);
        if (removable(v)) {
            state[v] = 1;
            stack.push_back(v);
        }
    }
    Peeling p;
    p.order.reserve(vs.size());
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        state[u] = 2;
        p.order.push_back(u);
        for (Vertex w : g.out_neighbours(u)) {
            if (state[w] == 2) continue;
            --din[w];
            if (state[w] == 0 && removable(w)) {
                state[w] = 1;
                stack.push_back(w);
            }
        }
        for (Vertex w : g.in_neighbours(u)) {
            if (state[w] == 2) continue;
            --dout[w];
            if (state[w] == 0 && removable(w)) {
                state[w] = 1;
                stack.push_back(w);
            }
        }
    }
    p.degenerate = p.order.size() == vs.size();
    if (p.degenerate) {
        std::reverse(p.order.begin(), p.order.end());
    } else {
        for (Vertex v : vs)
            if (state[v] != 2) p.witness.push_back(v);
        p.order.clear();
    }
    return p;
}

struct TotalBudgetResult {
    bool coloured = false;
    std::vector<Vertex> witness;
};

// If D is strictly-(Σ_i f_i)-bidegenerate, colours all of it greedily along
// the peeling order; otherwise returns the unpeeled set.
inline TotalBudgetResult solve_by_total_budget(Instance& inst) {
    Peeling p = bidegeneracy_order(inst.graph, [&](Vertex v) { return inst.budgets.total(v); });
    if (!p.degenerate) return {false, std::move(p.witness)};
    greedy_colour(inst, p.order);
    return {true, {}};
}

inline void solve_loose(Instance& inst) {
    if (!is_valid(inst)) throw Error(ErrorCode::precondition_violated, "solve_loose: invalid pair");
    if (all_tight(inst)) throw Error(ErrorCode::precondition_violated, "solve_loose: pair is tight");
    if (!solve_by_total_budget(inst).coloured) throw std::logic_error("loose valid pair has a witness");
}

}  // namespace bidicol

#endif
