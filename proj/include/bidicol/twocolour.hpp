#ifndef BIDICOL_TWOCOLOUR_HPP
#define BIDICOL_TWOCOLOUR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "csp.hpp"
#include "hardness.hpp"

namespace bidicol {

// ---------------------------------------------------------------------------
// Reduction from s colours to two.

struct TwoColourReduction {
    Instance two;            // same digraph, budgets (f_i, Σ_{j≠i} f_j)
    Colour chosen = no_colour;
    int rule = 0;            // 1 asymmetric f_i, 2 non-constant f_i, 3 smallest nonzero
};

// For a valid, biconnected, non-hard pair: colours it outright when loose
// (returns nullopt), otherwise builds the two-colour pair.
inline std::optional<TwoColourReduction> reduce_to_two(Instance& inst) {
    if (!is_valid(inst)) throw Error(ErrorCode::precondition_violated, "reduce_to_two: invalid pair");
    if (!all_tight(inst)) {
        solve_loose(inst);
        return std::nullopt;
    }
    const BudgetTable& t = inst.budgets;
    const auto vs = inst.graph.vertices();
    Colour chosen = no_colour;
    int rule = 0;
    for (Vertex v : vs) {
        for (const auto& e : t.chain(v))
            if (!e.value.symmetric()) {
                chosen = e.colour;
                break;
            }
        if (chosen != no_colour) {
            rule = 1;
            break;
        }
    }
    if (chosen == no_colour) {
        const Vertex u = vs[0];
        for (Vertex v : vs) {
            auto x = t.chain(u).begin(), y = t.chain(v).begin();
            const auto xe = t.chain(u).end(), ye = t.chain(v).end();
            while (x != xe && y != ye && x->colour == y->colour && x->value == y->value) ++x, ++y;
            if (x == xe && y == ye) continue;
            if (x == xe) chosen = y->colour;
            else if (y == ye) chosen = x->colour;
            else chosen = std::min(x->colour, y->colour);
            rule = 2;
            break;
        }
        if (chosen == no_colour) {
            chosen = t.first_nonzero(u);
            rule = 3;
        }
    }
    if (chosen == no_colour) throw Error(ErrorCode::precondition_violated, "reduce_to_two: pair is hard");

    BudgetTable two(inst.graph.capacity(), 2);
    for (Vertex v : vs) {
        const Budget fi = t.get(v, chosen);
        two.set(v, 1, fi);
        two.set(v, 2, t.total(v) - fi);
    }
    TwoColourReduction r{Instance(inst.graph, std::move(two)), chosen, rule};
    return r;
}

// Class 1 of the two-colour solution becomes colour i; the rest is coloured
// with f_i switched off, which is always possible by total budget.
inline void lift_two_colouring(Instance& original, Colour i, const Colouring& two_col) {
    std::vector<Vertex> first_class;
    for (Vertex v : original.graph.vertices())
        if (two_col[v] == 1) first_class.push_back(v);
    for (Vertex v : first_class) colour_vertex(original, v, i);
    for (Vertex v : original.graph.vertices()) original.budgets.set(v, i, {});
    if (!solve_by_total_budget(original).coloured)
        throw std::logic_error("lift_two_colouring: second class is not degenerate");
}

// ---------------------------------------------------------------------------
// Properties (E) and (DS) for two-colour pairs.

// On each side with positive degree, both colours have budget at least 1.
inline bool property_E_at(const Instance& inst, Vertex v) {
    const Digraph& g = inst.graph;
    for (Colour c = 1; c <= 2; ++c) {
        const Budget f = inst.budgets.get(v, c);
        if ((g.in_degree(v) > 0 && f.in == 0) || (g.out_degree(v) > 0 && f.out == 0)) return false;
    }
    return true;
}

// A vertex whose in- and out-neighbourhoods coincide has symmetric budgets.
inline bool property_DS_at(const Instance& inst, Vertex v) {
    if (!inst.graph.only_digons(v)) return true;
    return inst.budgets.get(v, 1).symmetric() && inst.budgets.get(v, 2).symmetric();
}

inline bool property_E(const Instance& inst) {
    for (Vertex v : inst.graph.vertices())
        if (!property_E_at(inst, v)) return false;
    return true;
}

inline bool property_DS(const Instance& inst) {
    for (Vertex v : inst.graph.vertices())
        if (!property_DS_at(inst, v)) return false;
    return true;
}

namespace detail {

inline void require_two_colours(const Instance& inst, const char* who) {
    if (inst.colour_count() != 2) throw Error(ErrorCode::precondition_violated, std::string(who) + ": needs s = 2");
}

inline Colour other(Colour c) { return c == 1 ? 2 : 1; }

inline void finish_loose(Instance& inst) {
    if (!solve_by_total_budget(inst).coloured) throw std::logic_error("reduced pair expected loose");
}

// Scratch shared by the steps of one two-colour solve.
struct TwoColourContext {
    NeighbourProbe probe;
    std::vector<std::uint32_t> mark;
    std::uint32_t stamp = 0;
    const StepHook* hook = nullptr;

    explicit TwoColourContext(std::size_t cap, const StepHook* h = nullptr)
        : probe(cap), mark(cap, 0), hook(h) {}

    void after(const Instance& inst, const char* step) const {
        if (hook && *hook) (*hook)(inst, step);
    }
};

}  // namespace detail

// Finds an arc uv and colour c with f_c⁺(u) = 0 ≠ f_c(v) (colour v) or
// f_c⁻(v) = 0 ≠ f_c(u) (colour u); the reduced pair is loose.
inline bool solve_if_not_E(Instance& inst) {
    detail::require_two_colours(inst, "solve_if_not_E");
    if (property_E(inst)) return false;
    const Digraph& g = inst.graph;
    const BudgetTable& t = inst.budgets;
    for (Vertex u : g.vertices()) {
        for (ArcId a : g.out_arcs(u)) {
            const Vertex v = g.arc(a).head;
            for (Colour c = 1; c <= 2; ++c) {
                if (t.get(u, c).out == 0 && !t.get(v, c).zero()) {
                    colour_vertex(inst, v, c);
                    detail::finish_loose(inst);
                    return true;
                }
                if (t.get(v, c).in == 0 && !t.get(u, c).zero()) {
                    colour_vertex(inst, u, c);
                    detail::finish_loose(inst);
                    return true;
                }
            }
        }
    }
    throw Error(ErrorCode::precondition_violated, "solve_if_not_E: no deficient arc (pair is hard)");
}

// A vertex x with N⁻(x) = N⁺(x) but an asymmetric budget: colour everything
// else towards x, then x still has a colour left.
inline bool solve_if_not_DS(Instance& inst) {
    detail::require_two_colours(inst, "solve_if_not_DS");
    Vertex x = no_vertex;
    for (Vertex v : inst.graph.vertices())
        if (!property_DS_at(inst, v)) {
            x = v;
            break;
        }
    if (x == no_vertex) return false;
    auto order = spanning_order(inst.graph, x);
    order.pop_back();
    greedy_colour(inst, order);
    const Colour c = inst.budgets.first_nonzero(x);
    if (c == no_colour) throw std::logic_error("solve_if_not_DS: no colour left for the root");
    colour_vertex(inst, x, c);
    return true;
}

// Bidirected complete, symmetric, not hard: colour f_1⁺(v) vertices with 1
// (v of minimum f_1⁺), avoiding v and some u with larger f_1⁺.
inline void solve_complete(Instance& inst) {
    detail::require_two_colours(inst, "solve_complete");
    if (!inst.graph.structure_flags().is_bidirected_complete)
        throw Error(ErrorCode::precondition_violated, "solve_complete: not bidirected complete");
    if (!all_tight(inst)) return solve_loose(inst);
    if (solve_if_not_DS(inst)) return;
    const auto vs = inst.graph.vertices();
    const BudgetTable& t = inst.budgets;
    Vertex v = vs[0];
    for (Vertex x : vs)
        if (t.get(x, 1).out < t.get(v, 1).out) v = x;
    Vertex u = no_vertex;
    for (Vertex x : vs)
        if (t.get(x, 1).out > t.get(v, 1).out) {
            u = x;
            break;
        }
    if (u == no_vertex) throw Error(ErrorCode::precondition_violated, "solve_complete: pair is hard");
    const std::uint64_t k = t.get(v, 1).out;
    std::vector<Vertex> xs;
    for (Vertex x : vs) {
        if (xs.size() == k) break;
        if (x != u && x != v) xs.push_back(x);
    }
    for (Vertex x : xs) colour_vertex(inst, x, 1);
    if (!all_tight(inst)) return detail::finish_loose(inst);
    if (!solve_if_not_E(inst)) throw std::logic_error("solve_complete: reduced pair satisfies (E)");
}

// UG(D) a cycle: with (E) and tightness the cycle is either bidirected (even,
// all budgets (1,1), alternate colours) or antidirected (sources get colour 1,
// sinks colour 2).
inline void solve_cycle(Instance& inst) {
    detail::require_two_colours(inst, "solve_cycle");
    const Digraph& g = inst.graph;
    if (!g.structure_flags().underlying_is_cycle)
        throw Error(ErrorCode::precondition_violated, "solve_cycle: underlying graph is not a cycle");
    if (!all_tight(inst)) return solve_loose(inst);
    if (solve_if_not_E(inst)) return;
    const auto vs = g.vertices();
    std::vector<std::pair<Vertex, Colour>> plan;
    plan.reserve(vs.size());
    if (g.simple_arc_count() == 0) {
        if (vs.size() % 2 == 1) throw Error(ErrorCode::precondition_violated, "solve_cycle: bidirected odd cycle");
        Vertex prev = no_vertex, cur = vs[0];
        for (std::size_t k = 0; k < vs.size(); ++k) {
            plan.emplace_back(cur, k % 2 == 0 ? 1 : 2);
            Vertex next = no_vertex;
            for (ArcId a : g.out_arcs(cur))
                if (g.arc(a).head != prev) {
                    next = g.arc(a).head;
                    break;
                }
            prev = cur;
            cur = next;
        }
    } else {
        for (Vertex x : vs) {
            if (g.in_degree(x) != 0 && g.out_degree(x) != 0)
                throw std::logic_error("solve_cycle: tight cycle with (E) is not antidirected");
            plan.emplace_back(x, g.in_degree(x) == 0 ? 1 : 2);
        }
    }
    reduce_by_colouring(inst, plan);
}

namespace detail {

// Rim v_1..v_{n-1} of a subwheel with hub v, or empty if D − v is not a cycle.
inline std::vector<Vertex> subwheel_rim(const Digraph& g, Vertex hub) {
    const auto vs = g.vertices();
    std::vector<Vertex> rim;
    if (vs.size() < 4) return rim;
    Vertex start = vs[0] == hub ? vs[1] : vs[0];
    Vertex prev = no_vertex, cur = start;
    const std::size_t want = vs.size() - 1;
    while (rim.size() < want) {
        rim.push_back(cur);
        Vertex nb[2];
        std::size_t k = 0;
        auto see = [&](Vertex w) {
            if (w == hub) return;
            for (std::size_t j = 0; j < k; ++j)
                if (nb[j] == w) return;
            if (k < 2) nb[k] = w;
            ++k;
        };
        for (ArcId a : g.out_arcs(cur)) see(g.arc(a).head);
        for (ArcId a : g.in_arcs(cur)) see(g.arc(a).tail);
        if (k != 2) return {};
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        if (next == start) break;
        prev = cur;
        cur = next;
    }
    if (rim.size() != want) return {};
    return rim;
}

}  // namespace detail

// Hub v with UG(D − v) a cycle.
inline void solve_subwheel(Instance& inst, Vertex v) {
    detail::require_two_colours(inst, "solve_subwheel");
    const Digraph& g = inst.graph;
    if (!g.alive(v)) throw Error(ErrorCode::vertex_dead, "solve_subwheel hub");
    const std::vector<Vertex> rim = detail::subwheel_rim(g, v);
    if (rim.empty()) throw Error(ErrorCode::precondition_violated, "solve_subwheel: D - v is not a cycle");
    if (!all_tight(inst)) return solve_loose(inst);
    if (solve_if_not_E(inst)) return;
    if (solve_if_not_DS(inst)) return;

    const BudgetTable& t = inst.budgets;
    const std::size_t n = g.vertex_count();
    NeighbourProbe probe(g.capacity());
    probe.mark(g, v);
    auto ind = [&](Vertex x) {  // (𝟙_A(v,x), 𝟙_A(x,v))
        return Budget{probe.from_centre(x) ? 1u : 0u, probe.to_centre(x) ? 1u : 0u};
    };

    if (g.underlying_degree(v) < n - 1) {
        Vertex w = no_vertex;
        for (Vertex x : rim)
            if (probe.adjacent(x)) {
                w = x;
                break;
            }
        const Budget rho = t.get(w, 1) - ind(w);
        colour_vertex(inst, v, rho == Budget{1, 1} ? 2 : 1);
        return solve_cycle(inst);
    }

    auto paint = [&](const std::vector<std::pair<Vertex, Colour>>& plan) { reduce_by_colouring(inst, plan); };

    bool rim_constant = true;
    for (Vertex x : rim)
        if (!(t.get(x, 1) == t.get(rim[0], 1))) rim_constant = false;
    if (g.simple_arc_count() == 0 && g.out_degree(v) == n - 1 && n % 2 == 0 && rim_constant) {
        if (n == 4) return solve_complete(inst);
        const Colour a = t.get(rim[0], 1) == Budget{1, 1} ? 1 : 2;
        const Colour b = detail::other(a);
        std::vector<std::pair<Vertex, Colour>> plan;
        if (t.get(v, a).out >= 2) {
            plan.emplace_back(v, a);
            plan.emplace_back(rim[0], a);
            for (std::size_t k = 1; k < rim.size(); ++k) plan.emplace_back(rim[k], b);
        } else {
            // rim[k] is v_{k+1}; odd-indexed rim vertices up to v_{n-3} get a.
            plan.emplace_back(v, b);
            for (std::size_t k = 0; k < rim.size(); ++k)
                plan.emplace_back(rim[k], (k % 2 == 0 && k + 1 <= n - 3) ? a : b);
        }
        return paint(plan);
    }

    bool directed_rim = g.only_digons(v);
    for (Vertex x : rim)
        if (g.in_degree(x) != 2 || g.out_degree(x) != 2 || g.digon_count(x) != 1) directed_rim = false;
    if (directed_rim) {
        const Colour c = t.get(v, 2).out >= 2 ? 2 : 1;
        std::vector<std::pair<Vertex, Colour>> plan{{v, c}, {rim[0], c}};
        for (std::size_t k = 1; k < rim.size(); ++k) plan.emplace_back(rim[k], detail::other(c));
        return paint(plan);
    }

    Colour A = no_colour;
    for (Vertex x : rim) {
        for (Colour c = 1; c <= 2 && A == no_colour; ++c)
            if (!(t.get(x, c) == ind(x))) A = c;
        if (A != no_colour) break;
    }
    if (A == no_colour) throw std::logic_error("solve_subwheel: no vertex above its indicator budget");
    const Colour B = detail::other(A);
    bool prop3 = false;
    for (Vertex x : rim)
        if (!(t.get(x, A) == Budget{1, 1} + ind(x)) || !(t.get(x, B) == Budget{1, 1})) {
            prop3 = true;
            break;
        }
    colour_vertex(inst, v, (n % 2 == 1 || prop3) ? A : B);
    solve_cycle(inst);
}

// ---------------------------------------------------------------------------
// Ear steps of the general solver.

enum class StepResult { coloured, finished };

namespace detail {

// D and D − v biconnected, UG(D) neither a cycle nor a subwheel at v,
// (E) and (DS) hold. Colours v safely, or finishes the whole pair.
inline StepResult colour_star_centre(Instance& inst, Vertex v, TwoColourContext& ctx) {
    const Digraph& g = inst.graph;
    const BudgetTable& t = inst.budgets;
    const std::size_t n = g.vertex_count();
    const std::size_t nv = g.underlying_degree(v);
    ctx.probe.mark(g, v);
    auto ind = [&](Vertex x) { return Budget{ctx.probe.from_centre(x) ? 1u : 0u, ctx.probe.to_centre(x) ? 1u : 0u}; };
    auto any_neighbour = [&]() {
        const auto out = g.out_arcs(v);
        return out.empty() ? g.arc(g.in_arcs(v)[0]).tail : g.arc(out[0]).head;
    };
    Colour c = no_colour;

    if (nv + 2 <= n) {
        Vertex w = no_vertex;
        for (Vertex x : g.vertices())
            if (x != v && !ctx.probe.adjacent(x)) {
                w = x;
                break;
            }
        const Vertex u = any_neighbour();
        const Budget target = t.get(w, 1) + Budget{ctx.probe.from_centre(u) ? 1u : 0u, ctx.probe.to_centre(u) ? 1u : 0u};
        c = t.get(u, 1) == target ? 2 : 1;
    } else {
        const std::size_t rest_arcs = g.arc_count() - g.in_degree(v) - g.out_degree(v);
        const std::size_t rest_simple = g.simple_arc_count() - (g.in_degree(v) + g.out_degree(v) - 2 * g.digon_count(v));
        const bool rest_complete = rest_simple == 0 && rest_arcs == (n - 1) * (n - 2);
        if (!rest_complete) {
            for (Vertex x : g.vertices()) {
                if (x == v) continue;
                for (Colour k = 1; k <= 2 && c == no_colour; ++k)
                    if (!(t.get(x, k) == ind(x))) c = k;
                if (c != no_colour) break;
            }
            if (c == no_colour) throw std::logic_error("colour_star_centre: no vertex above its indicator budget");
        } else if (g.only_digons(v)) {
            solve_complete(inst);
            return StepResult::finished;
        } else {
            Vertex u = no_vertex;
            bool into_v = false;  // simple arc u→v, else v→u
            for (ArcId a : g.in_arcs(v))
                if (g.arc(a).twin == no_arc) {
                    u = g.arc(a).tail;
                    into_v = true;
                    break;
                }
            if (u == no_vertex)
                for (ArcId a : g.out_arcs(v))
                    if (g.arc(a).twin == no_arc) {
                        u = g.arc(a).head;
                        break;
                    }
            const Side side = into_v ? Side::in : Side::out;
            const Side flip = into_v ? Side::out : Side::in;
            const auto away = into_v ? g.out_arcs(v) : g.in_arcs(v);
            if (!away.empty()) {
                const Vertex w = into_v ? g.arc(away[0]).head : g.arc(away[0]).tail;
                c = t.get(u, 1)[side] == t.get(w, 1)[side] ? 1 : 2;
            } else {
                bool shifted = true;
                for (Vertex x : g.vertices())
                    if (x != v && t.get(x, 1)[flip] != t.get(x, 1)[side] + 1) {
                        shifted = false;
                        break;
                    }
                c = shifted ? 2 : 1;
            }
        }
    }
    colour_vertex(inst, v, c);
    return StepResult::coloured;
}

// Path v_0..v_ℓ with ℓ ≥ 3 whose interior has underlying degree 2.
inline void colour_path_ear(Instance& inst, std::span<const Vertex> path, TwoColourContext& ctx) {
    const Digraph& g = inst.graph;
    const std::size_t l = path.size() - 1;
    if (l < 3) throw Error(ErrorCode::precondition_violated, "colour_path_ear: path shorter than 3");
    for (std::size_t k = 1; k < l; ++k)
        if (g.underlying_degree(path[k]) != 2)
            throw Error(ErrorCode::precondition_violated, "colour_path_ear: interior vertex of degree != 2");
    ++ctx.stamp;
    for (Vertex x : path) ctx.mark[x] = ctx.stamp;
    Vertex u = no_vertex;
    for (Vertex x : g.vertices())
        if (ctx.mark[x] != ctx.stamp) {
            u = x;
            break;
        }
    if (u == no_vertex) throw Error(ErrorCode::precondition_violated, "colour_path_ear: no vertex off the path");
    const Colour c = inst.budgets.get(path[0], 1) == inst.budgets.get(u, 1) ? 1 : 2;
    colour_vertex(inst, path[1], c);
    greedy_colour(inst, path.subspan(2, l - 2));
}

// Tight, (E), (DS) and not bidirected complete at the given vertices.
inline bool property_P_at(const Instance& inst, std::span<const Vertex> touched) {
    if (inst.graph.structure_flags().is_bidirected_complete) return false;
    for (Vertex x : touched)
        if (!tight_at(inst, x) || !property_E_at(inst, x) || !property_DS_at(inst, x)) return false;
    return true;
}

// Finishes the pair if it is loose, lacks (E) or (DS), or is bidirected complete.
inline bool solve_if_particular(Instance& inst) {
    if (!all_tight(inst)) {
        finish_loose(inst);
        return true;
    }
    if (solve_if_not_E(inst)) return true;
    if (solve_if_not_DS(inst)) return true;
    if (inst.graph.structure_flags().is_bidirected_complete) {
        solve_complete(inst);
        return true;
    }
    return false;
}

}  // namespace detail

// Public single-step wrappers; each builds its own scratch.
inline StepResult colour_star_centre(Instance& inst, Vertex v) {
    detail::require_two_colours(inst, "colour_star_centre");
    if (!property_E(inst) || !property_DS(inst))
        throw Error(ErrorCode::precondition_violated, "colour_star_centre: (E) or (DS) fails");
    const Digraph& g = inst.graph;
    if (g.structure_flags().underlying_is_cycle ||
        g.underlying_edge_count() - g.underlying_degree(v) == g.vertex_count() - 1)
        throw Error(ErrorCode::precondition_violated, "colour_star_centre: cycle or subwheel at v");
    detail::TwoColourContext ctx(g.capacity());
    return detail::colour_star_centre(inst, v, ctx);
}

inline void colour_path_ear(Instance& inst, std::span<const Vertex> path) {
    detail::require_two_colours(inst, "colour_path_ear");
    detail::TwoColourContext ctx(inst.graph.capacity());
    detail::colour_path_ear(inst, path, ctx);
}

// Colours a valid, non-hard, biconnected two-colour pair completely.
inline void solve_two_colour_biconnected(Instance& inst, const StepHook& hook = {}) {
    detail::require_two_colours(inst, "solve_two_colour_biconnected");
    if (detail::solve_if_particular(inst)) return;
    if (inst.graph.structure_flags().underlying_is_cycle) return solve_cycle(inst);

    const CSPDecomposition csp = csp_decompose(inst.graph);
    detail::TwoColourContext ctx(inst.graph.capacity(), &hook);
    const std::size_t r = csp.cells.size() - 1;
    for (std::size_t i = r; i >= 2; --i) {
        const auto vs = csp.vertices(i);
        bool still_p;
        if (csp.cells[i].kind == CellKind::path) {
            detail::colour_path_ear(inst, vs, ctx);
            ctx.after(inst, "colour_path_ear");
            const Vertex ends[2] = {vs.front(), vs.back()};  // the interior is gone
            still_p = detail::property_P_at(inst, ends);
        } else {
            if (detail::colour_star_centre(inst, vs[0], ctx) == StepResult::finished) return;
            ctx.after(inst, "colour_star_centre");
            still_p = detail::property_P_at(inst, vs.subspan(1));
        }
        if (!still_p) {
            if (!detail::solve_if_particular(inst)) throw std::logic_error("property check disagrees");
            return;
        }
    }
    const auto h1 = csp.vertices(1);
    if (csp.cells[1].kind == CellKind::star) return solve_subwheel(inst, h1[0]);
    detail::colour_path_ear(inst, h1, ctx);
    ctx.after(inst, "colour_path_ear");
    solve_cycle(inst);
}

}  // namespace bidicol

#endif
