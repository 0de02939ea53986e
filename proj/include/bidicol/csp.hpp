#ifndef BIDICOL_CSP_HPP
#define BIDICOL_CSP_HPP

#include <cstdint>
#include <list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace bidicol {

enum class CellKind { cycle, star, path };

struct Cell {
    CellKind kind = CellKind::cycle;
    std::size_t begin = 0;     // into CSPDecomposition::pool
    std::size_t size = 0;
    std::size_t position = 0;  // number of vertices in earlier cells
};

// Cells H_0..H_r partitioning the edges of a biconnected graph: H_0 is a
// cycle, every later cell is a star whose leaves (and only those) were seen
// before, or a path of length ≥ 3 whose two endpoints were seen before.
// Vertex lists: cycle in cyclic order; path v_0..v_ℓ; star centre, then leaves.
struct CSPDecomposition {
    std::vector<Cell> cells;
    std::vector<Vertex> pool;

    std::span<const Vertex> vertices(std::size_t i) const {
        return {pool.data() + cells[i].begin, cells[i].size};
    }

    std::vector<std::pair<Vertex, Vertex>> edges(std::size_t i) const {
        const auto vs = vertices(i);
        std::vector<std::pair<Vertex, Vertex>> out;
        switch (cells[i].kind) {
            case CellKind::cycle:
                for (std::size_t k = 0; k < vs.size(); ++k) out.emplace_back(vs[k], vs[(k + 1) % vs.size()]);
                break;
            case CellKind::path:
                for (std::size_t k = 0; k + 1 < vs.size(); ++k) out.emplace_back(vs[k], vs[k + 1]);
                break;
            case CellKind::star:
                for (std::size_t k = 1; k < vs.size(); ++k) out.emplace_back(vs[0], vs[k]);
                break;
        }
        return out;
    }
};

namespace detail {

// Ear surgery state. Each ear is a linked list of nodes; inner nodes are the
// first occurrence ("birth") of their vertex, endpoint nodes are copies.
class EarChain {
public:
    static constexpr std::int32_t nil = -1;

    struct Node {
        Vertex v;
        std::int32_t prev = nil, next = nil;
        std::int32_t ear = nil;  // nil for endpoint copies
        std::int64_t rank = 0;
    };
    struct Ear {
        bool cycle = false;
        std::int32_t first = nil, last = nil;
        Vertex a = no_vertex, b = no_vertex;  // endpoints when length is 1
        std::int64_t length = 0;              // edges
        std::int64_t inner = 0;
        std::int64_t pos = 0;
        std::list<std::int32_t>::iterator where;
        std::vector<Vertex> extra_leaves;
    };

    std::vector<Node> nodes;
    std::vector<Ear> ears;
    std::list<std::int32_t> chain;
    std::vector<std::int32_t> birth;  // by local vertex index
    std::int64_t next_rank = 0;

    std::int32_t add_node(Vertex v, std::int32_t ear) {
        nodes.push_back({v, nil, nil, ear, ear == nil ? 0 : next_rank++});
        return static_cast<std::int32_t>(nodes.size() - 1);
    }

    // Walks two cursors alternately; returns 0 if the first reaches its stop
    // first, 1 otherwise. Cost is twice the shorter walk.
    template <class StepA, class StepB>
    static int race(std::int32_t a, std::int32_t stop_a, StepA step_a, std::int32_t b, std::int32_t stop_b,
                    StepB step_b) {
        while (true) {
            if (a == stop_a) return 0;
            if (b == stop_b) return 1;
            a = step_a(a);
            b = step_b(b);
        }
    }

    // Moves nodes from..to (inclusive, following next) to ear id `e` with
    // fresh increasing ranks. Returns the count.
    std::int64_t relabel(std::int32_t from, std::int32_t to, std::int32_t e) {
        std::int64_t k = 0;
        for (std::int32_t x = from;; x = nodes[x].next) {
            nodes[x].ear = e;
            nodes[x].rank = next_rank++;
            ++k;
            arc_touches() += 1;
            if (x == to) break;
        }
        return k;
    }

    std::int32_t new_ear() {
        ears.emplace_back();
        return static_cast<std::int32_t>(ears.size() - 1);
    }

    // Length-1 ear (u0,u1), both endpoints inner in distinct ears, the later
    // one (`e`, holding b1) a path of length ≥ 3.
    void split_at_endpoint(std::int32_t e, Vertex u0, std::int32_t b1) {
        const std::int32_t first = ears[e].first, last = ears[e].last;
        const std::int64_t total = ears[e].inner;
        const bool t_le = nodes[b1].next != last;   // t ≤ L−2
        const bool t_ge = nodes[b1].prev != first;  // t ≥ 2
        const std::int32_t fresh = new_ear();
        const std::int32_t cu = add_node(u0, nil);
        const std::int32_t ct = add_node(nodes[b1].v, nil);
        auto fwd = [&](std::int32_t x) { return nodes[x].next; };
        auto back = [&](std::int32_t x) { return nodes[x].prev; };
        if (t_le && u0 != nodes[first].v) {
            // H' = p_0..p_t,u0 and H'' = p_t..p_L.
            const std::int32_t nb = nodes[b1].next;
            const int w = race(b1, first, back, nb, last, fwd);
            nodes[b1].next = cu;
            nodes[cu].prev = b1;
            nodes[ct].next = nb;
            nodes[nb].prev = ct;
            std::int32_t h1 = e, h2 = e;
            std::int64_t in1, in2;
            if (w == 0) {
                h1 = fresh;
                in1 = relabel(nodes[first].next, b1, fresh);
                in2 = total - in1;
            } else {
                h2 = fresh;
                in2 = relabel(nb, nodes[last].prev, fresh);
                in1 = total - in2;
            }
            place(e, h1, first, cu, in1, h2, ct, last, in2);
        } else {
            if (!t_ge || u0 == nodes[last].v) throw std::logic_error("csp: no valid ear split");
            // H' = u0,p_t..p_L and H'' = p_0..p_t.
            const std::int32_t pb = nodes[b1].prev;
            const int w = race(b1, last, fwd, pb, first, back);
            nodes[cu].next = b1;
            nodes[b1].prev = cu;
            nodes[pb].next = ct;
            nodes[ct].prev = pb;
            std::int32_t h1 = e, h2 = e;
            std::int64_t in1, in2;
            if (w == 0) {
                h1 = fresh;
                in1 = relabel(b1, nodes[last].prev, fresh);
                in2 = total - in1;
            } else {
                h2 = fresh;
                in2 = relabel(nodes[first].next, pb, fresh);
                in1 = total - in2;
            }
            place(e, h1, cu, last, in1, h2, first, ct, in2);
        }
    }

    // Chord between inner nodes b0 (earlier) and b1 of the same path ear.
    void split_path_chord(std::int32_t e, std::int32_t b0, std::int32_t b1) {
        const std::int32_t first = ears[e].first, last = ears[e].last;
        const std::int64_t total = ears[e].inner;
        const std::int32_t fresh = new_ear();
        const std::int32_t cs = add_node(nodes[b0].v, nil);
        const std::int32_t ct = add_node(nodes[b1].v, nil);
        const std::int32_t mid_first = nodes[b0].next, mid_last = nodes[b1].prev;
        if (mid_first == b1) throw std::logic_error("csp: chord parallel to ear edge");
        // Outer walk: b0 back to first, then b1 forward to last.
        std::int32_t outer = b0;
        bool second_leg = false;
        auto outer_step = [&](std::int32_t x) {
            std::int32_t y = second_leg ? nodes[x].next : nodes[x].prev;
            if (!second_leg && y == first) {
                second_leg = true;
                y = b1;
            }
            return y;
        };
        auto fwd = [&](std::int32_t x) { return nodes[x].next; };
        const int w = race(mid_first, b1, fwd, outer, last, outer_step);
        std::int32_t h1 = e, h2 = e;
        std::int64_t in1, in2;
        if (w == 0) {
            h2 = fresh;
            in2 = relabel(mid_first, mid_last, fresh);
            in1 = total - in2;
        } else {
            h1 = fresh;
            // Relabel the outer part in two legs, keeping order along H'.
            in1 = relabel(nodes[first].next, b0, fresh) + relabel(b1, nodes[last].prev, fresh);
            in2 = total - in1;
        }
        nodes[b0].next = b1;
        nodes[b1].prev = b0;
        nodes[cs].next = mid_first;
        nodes[mid_first].prev = cs;
        nodes[ct].prev = mid_last;
        nodes[mid_last].next = ct;
        place(e, h1, first, last, in1, h2, cs, ct, in2);
    }

    // Chord between two nodes of the cycle ear; the shorter side leaves as a path.
    void split_cycle_chord(std::int32_t e, std::int32_t b0, std::int32_t b1) {
        auto fwd = [&](std::int32_t x) { return nodes[x].next; };
        const int w = race(nodes[b0].next, b1, fwd, nodes[b1].next, b0, fwd);
        const std::int32_t a = w == 0 ? b0 : b1, b = w == 0 ? b1 : b0;
        const std::int32_t mid_first = nodes[a].next, mid_last = nodes[b].prev;
        if (mid_first == b) throw std::logic_error("csp: chord parallel to cycle edge");
        const std::int32_t fresh = new_ear();
        // The cycle's anchor must survive.
        for (std::int32_t x = mid_first;; x = nodes[x].next) {
            if (x == ears[e].first) ears[e].first = a;
            if (x == mid_last) break;
        }
        const std::int64_t k = relabel(mid_first, mid_last, fresh);
        const std::int32_t ca = add_node(nodes[a].v, nil);
        const std::int32_t cb = add_node(nodes[b].v, nil);
        nodes[a].next = b;
        nodes[b].prev = a;
        nodes[ca].next = mid_first;
        nodes[mid_first].prev = ca;
        nodes[cb].prev = mid_last;
        nodes[mid_last].next = cb;
        Ear& C = ears[e];
        C.inner -= k;
        C.length -= k;
        Ear& H = ears[fresh];
        H.first = ca;
        H.last = cb;
        H.inner = k;
        H.length = k + 1;
        H.pos = C.inner;
        H.where = chain.insert(std::next(C.where), fresh);
    }

private:
    // Installs H' (ear h1) then H'' (ear h2) where ear e stood; one of
    // h1, h2 is e itself.
    void place(std::int32_t e, std::int32_t h1, std::int32_t f1, std::int32_t l1, std::int64_t in1,
               std::int32_t h2, std::int32_t f2, std::int32_t l2, std::int64_t in2) {
        const std::int64_t pos = ears[e].pos;
        const auto at = ears[e].where;
        Ear& A = ears[h1];
        A.cycle = false;
        A.first = f1;
        A.last = l1;
        A.inner = in1;
        A.length = in1 + 1;
        A.pos = pos;
        Ear& B = ears[h2];
        B.cycle = false;
        B.first = f2;
        B.last = l2;
        B.inner = in2;
        B.length = in2 + 1;
        B.pos = pos + in1;
        if (h1 == e) B.where = chain.insert(std::next(at), h2);
        else A.where = chain.insert(at, h1);
    }
};

}  // namespace detail

// CSP-decomposition of UG(g) for a biconnected g with at least 3 vertices.
// Starts from a chain decomposition (DFS + back edges), then removes the
// length-1 ears: first by splitting longer ears, then by merging the rest
// into length-2 ears as stars.
inline CSPDecomposition csp_decompose(const Digraph& g) {
    using detail::EarChain;
    const auto vs = g.vertices();
    const std::size_t n = vs.size();
    if (n < 3) throw Error(ErrorCode::not_biconnected, "csp_decompose needs at least 3 vertices");

    // Simple underlying graph in CSR form over local indices.
    std::vector<std::uint32_t> loc(g.capacity(), 0);
    for (std::size_t k = 0; k < n; ++k) loc[vs[k]] = static_cast<std::uint32_t>(k);
    std::vector<std::uint32_t> start(n + 1, 0);
    std::vector<std::uint32_t> adj;
    adj.reserve(2 * g.underlying_edge_count());
    for (std::size_t k = 0; k < n; ++k) {
        for (ArcId a : g.out_arcs(vs[k])) adj.push_back(loc[g.arc(a).head]);
        for (ArcId a : g.in_arcs(vs[k]))
            if (g.arc(a).twin == no_arc) adj.push_back(loc[g.arc(a).tail]);
        start[k + 1] = static_cast<std::uint32_t>(adj.size());
    }

    // Iterative DFS: preorder, parent, discovery index.
    constexpr std::uint32_t none = 0xffffffffu;
    std::vector<std::uint32_t> disc(n, none), parent(n, none), preorder;
    preorder.reserve(n);
    {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> st{{0, start[0]}};
        disc[0] = 0;
        preorder.push_back(0);
        while (!st.empty()) {
            auto& [v, e] = st.back();
            if (e == start[v + 1]) {
                st.pop_back();
                continue;
            }
            const std::uint32_t w = adj[e++];
            if (disc[w] == none) {
                disc[w] = static_cast<std::uint32_t>(preorder.size());
                parent[w] = v;
                preorder.push_back(w);
                st.emplace_back(w, start[w]);
            }
        }
    }
    if (preorder.size() != n) throw Error(ErrorCode::not_biconnected, "underlying graph is disconnected");

    EarChain ec;
    ec.birth.assign(n, EarChain::nil);
    std::vector<char> visited(n, 0);
    std::int64_t seen_vertices = 0;
    std::vector<std::uint32_t> seq;
    for (std::uint32_t v : preorder) {
        for (std::uint32_t e = start[v]; e < start[v + 1]; ++e) {
            const std::uint32_t w = adj[e];
            if (disc[w] <= disc[v] || parent[w] == v) continue;
            // Back edge from ancestor v down to w; climb until a visited vertex.
            seq.assign({v});
            visited[v] = 1;
            std::uint32_t x = w;
            while (!visited[x]) {
                visited[x] = 1;
                seq.push_back(x);
                x = parent[x];
            }
            seq.push_back(x);
            const bool is_cycle = x == v;
            if (is_cycle != ec.ears.empty()) throw Error(ErrorCode::not_biconnected, "underlying graph has a cut vertex");
            const std::int32_t id = ec.new_ear();
            EarChain::Ear& ear = ec.ears[id];
            ear.cycle = is_cycle;
            ear.length = static_cast<std::int64_t>(seq.size()) - 1;
            ear.pos = seen_vertices;
            ear.where = ec.chain.insert(ec.chain.end(), id);
            if (is_cycle) {
                std::int32_t prev = EarChain::nil, head = EarChain::nil;
                for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
                    const std::int32_t nd = ec.add_node(vs[seq[k]], id);
                    ec.birth[seq[k]] = nd;
                    if (prev == EarChain::nil) head = nd; else ec.nodes[prev].next = nd, ec.nodes[nd].prev = prev;
                    prev = nd;
                }
                ec.nodes[prev].next = head;
                ec.nodes[head].prev = prev;
                ec.ears[id].first = head;
                ec.ears[id].inner = ear.length;
            } else if (seq.size() == 2) {
                ec.ears[id].a = vs[seq[0]];
                ec.ears[id].b = vs[seq[1]];
            } else {
                std::int32_t prev = ec.add_node(vs[seq[0]], EarChain::nil);
                ec.ears[id].first = prev;
                for (std::size_t k = 1; k < seq.size(); ++k) {
                    const bool inner = k + 1 < seq.size();
                    const std::int32_t nd = ec.add_node(vs[seq[k]], inner ? id : EarChain::nil);
                    if (inner) ec.birth[seq[k]] = nd;
                    ec.nodes[prev].next = nd;
                    ec.nodes[nd].prev = prev;
                    prev = nd;
                }
                ec.ears[id].last = prev;
                ec.ears[id].inner = ec.ears[id].length - 1;
            }
            seen_vertices += ec.ears[id].inner;
        }
    }
    if (seen_vertices != static_cast<std::int64_t>(n))
        throw Error(ErrorCode::not_biconnected, "underlying graph has a bridge");

    auto ear_of = [&](Vertex gv) { return ec.nodes[ec.birth[loc[gv]]].ear; };

    // Pass 1, latest ear first.
    for (auto it = ec.chain.end(); it != ec.chain.begin();) {
        --it;
        const std::int32_t k = *it;
        if (ec.ears[k].cycle || ec.ears[k].length != 1) continue;
        Vertex u0 = ec.ears[k].a, u1 = ec.ears[k].b;
        std::int32_t e0 = ear_of(u0), e1 = ear_of(u1);
        if (ec.ears[e0].pos > ec.ears[e1].pos) {
            std::swap(u0, u1);
            std::swap(e0, e1);
        }
        const std::int32_t b0 = ec.birth[loc[u0]], b1 = ec.birth[loc[u1]];
        if (e0 != e1) {
            if (ec.ears[e1].length < 3) continue;  // left for pass 2
            ec.split_at_endpoint(e1, u0, b1);
        } else if (ec.ears[e0].cycle) {
            ec.split_cycle_chord(e0, b0, b1);
        } else {
            if (ec.nodes[b0].rank < ec.nodes[b1].rank) ec.split_path_chord(e0, b0, b1);
            else ec.split_path_chord(e0, b1, b0);
        }
        it = ec.chain.erase(it);
    }

    // Pass 2: remaining single edges become extra star leaves.
    for (auto it = ec.chain.begin(); it != ec.chain.end();) {
        const std::int32_t k = *it;
        if (ec.ears[k].cycle || ec.ears[k].length != 1) {
            ++it;
            continue;
        }
        Vertex u0 = ec.ears[k].a, u1 = ec.ears[k].b;
        std::int32_t e0 = ear_of(u0), e1 = ear_of(u1);
        if (ec.ears[e0].pos > ec.ears[e1].pos) {
            std::swap(u0, u1);
            std::swap(e0, e1);
        }
        if (e0 == e1 || ec.ears[e1].length != 2) throw std::logic_error("csp: unmatched single-edge ear");
        ec.ears[e1].extra_leaves.push_back(u0);
        it = ec.chain.erase(it);
    }

    CSPDecomposition out;
    out.pool.reserve(n + 2 * ec.chain.size());
    std::size_t position = 0;
    for (std::int32_t k : ec.chain) {
        const EarChain::Ear& ear = ec.ears[k];
        Cell cell;
        cell.begin = out.pool.size();
        cell.position = position;
        if (ear.cycle) {
            cell.kind = CellKind::cycle;
            std::int32_t x = ear.first;
            do {
                out.pool.push_back(ec.nodes[x].v);
                x = ec.nodes[x].next;
            } while (x != ear.first);
        } else if (ear.length == 2) {
            cell.kind = CellKind::star;
            out.pool.push_back(ec.nodes[ec.nodes[ear.first].next].v);
            out.pool.push_back(ec.nodes[ear.first].v);
            out.pool.push_back(ec.nodes[ear.last].v);
            for (Vertex x : ear.extra_leaves) out.pool.push_back(x);
        } else {
            cell.kind = CellKind::path;
            for (std::int32_t x = ear.first;; x = ec.nodes[x].next) {
                out.pool.push_back(ec.nodes[x].v);
                if (x == ear.last) break;
            }
        }
        cell.size = out.pool.size() - cell.begin;
        position += static_cast<std::size_t>(ear.inner);
        out.cells.push_back(cell);
    }
    return out;
}

}  // namespace bidicol

#endif
