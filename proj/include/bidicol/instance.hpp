#ifndef BIDICOL_INSTANCE_HPP
#define BIDICOL_INSTANCE_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "budget.hpp"
#include "digraph.hpp"
#include "raw.hpp"

namespace bidicol {

// The object every solver transforms. Colouring a vertex records it in
// `colouring` and deletes it from `graph`, leaving the reduced pair.
struct Instance {
    Digraph graph;
    BudgetTable budgets;
    Colouring colouring;

    Instance() = default;
    Instance(Digraph g, BudgetTable b)
        : graph(std::move(g)), budgets(std::move(b)), colouring(graph.capacity(), no_colour) {}

    Colour colour_count() const { return budgets.colour_count(); }
    Budget degrees(Vertex v) const { return {graph.in_degree(v), graph.out_degree(v)}; }
};

inline Instance make_instance(const RawInstance& raw) {
    Digraph g = Digraph::build(raw.n, raw.arcs);
    BudgetTable table(raw.n, raw.s);
    std::vector<BudgetLine> lines = raw.budgets;
    std::sort(lines.begin(), lines.end(), [](const BudgetLine& a, const BudgetLine& b) {
        return a.v != b.v ? a.v < b.v : a.c < b.c;
    });
    for (const BudgetLine& l : lines) {
        if (l.in > max_budget_entry || l.out > max_budget_entry)
            throw Error(ErrorCode::index_out_of_range, "budget entry above 2^31 at vertex " + std::to_string(l.v));
        table.set(l.v, l.c, {l.in, l.out});
    }
    return Instance(std::move(g), std::move(table));
}

inline bool is_connected(const Digraph& g) {
    const auto vs = g.vertices();
    if (vs.empty()) return true;
    std::vector<char> seen(g.capacity(), 0);
    std::vector<Vertex> stack{vs[0]};
    seen[vs[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        auto visit = [&](Vertex w) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        };
        for (Vertex w : g.out_neighbours(v)) visit(w);
        for (Vertex w : g.in_neighbours(v)) visit(w);
    }
    return reached == vs.size();
}

// Σ_i f_i(v) ≥ (d⁻(v), d⁺(v)).
inline bool covered_at(const Instance& inst, Vertex v) {
    return inst.budgets.total(v).covers(inst.degrees(v));
}
inline bool tight_at(const Instance& inst, Vertex v) {
    return inst.budgets.total(v) == inst.degrees(v);
}

// First live vertex violating (⋆), if any.
inline std::optional<Vertex> budget_deficit(const Instance& inst) {
    for (Vertex v : inst.graph.vertices())
        if (!covered_at(inst, v)) return v;
    return std::nullopt;
}

inline bool is_valid(const Instance& inst) {
    return is_connected(inst.graph) && !budget_deficit(inst);
}

// Equality in (⋆) at every live vertex; validity is checked separately.
inline bool all_tight(const Instance& inst) {
    for (Vertex v : inst.graph.vertices())
        if (!tight_at(inst, v)) return false;
    return true;
}

inline bool is_tight(const Instance& inst) { return is_valid(inst) && all_tight(inst); }

// Colours v with c: each surviving neighbour loses one unit of c on the side
// facing v, then v is deleted.
inline void colour_vertex(Instance& inst, Vertex v, Colour c) {
    if (!inst.graph.valid_id(v)) throw Error(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
    if (inst.colouring[v] != no_colour)
        throw Error(ErrorCode::already_coloured, "vertex " + std::to_string(v));
    if (!inst.graph.alive(v)) throw Error(ErrorCode::vertex_dead, "vertex " + std::to_string(v));
    const Digraph& g = inst.graph;
    for (Vertex w : g.out_neighbours(v)) inst.budgets.decrement(w, c, Side::in);
    for (Vertex w : g.in_neighbours(v)) inst.budgets.decrement(w, c, Side::out);
    inst.colouring[v] = c;
    inst.graph.delete_vertex(v);
}

inline void reduce_by_colouring(Instance& inst, std::span<const std::pair<Vertex, Colour>> assignment) {
    for (const auto& [v, c] : assignment) colour_vertex(inst, v, c);
}

}  // namespace bidicol

#endif
