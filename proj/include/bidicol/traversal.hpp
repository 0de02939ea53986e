#ifndef BIDICOL_TRAVERSAL_HPP
#define BIDICOL_TRAVERSAL_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "digraph.hpp"

namespace bidicol {

// BFS from root over live vertices accepted by `allowed`, ignoring arc
// directions. Returns the visit order reversed: every vertex but the root has
// its tree parent somewhere after it.
template <class Allowed>
std::vector<Vertex> spanning_order_within(const Digraph& g, Vertex root, Allowed&& allowed) {
    std::vector<char> seen(g.capacity(), 0);
    std::vector<Vertex> order{root};
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex v = order[head];
        for (Vertex w : g.out_neighbours(v)) {
            if (!seen[w] && allowed(w)) {
                seen[w] = 1;
                order.push_back(w);
            }
        }
        for (Vertex w : g.in_neighbours(v)) {
            if (!seen[w] && allowed(w)) {
                seen[w] = 1;
                order.push_back(w);
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

inline std::vector<Vertex> spanning_order(const Digraph& g, Vertex root) {
    if (!g.alive(root)) throw Error(ErrorCode::vertex_dead, "root " + std::to_string(root));
    auto order = spanning_order_within(g, root, [](Vertex) { return true; });
    if (order.size() != g.vertex_count()) throw Error(ErrorCode::disconnected, "spanning_order");
    return order;
}

// Connected components of the live graph, each as a vertex list.
inline std::vector<std::vector<Vertex>> components(const Digraph& g) {
    std::vector<char> seen(g.capacity(), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex r : g.vertices()) {
        if (seen[r]) continue;
        std::vector<Vertex> comp{r};
        seen[r] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const Vertex v = comp[head];
            for (Vertex w : g.out_neighbours(v))
                if (!seen[w]) seen[w] = 1, comp.push_back(w);
            for (Vertex w : g.in_neighbours(v))
                if (!seen[w]) seen[w] = 1, comp.push_back(w);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

struct BlockView {
    std::span<const Vertex> vertices;
    std::span<const ArcId> arcs;
    std::span<const std::uint32_t> in_degree;   // parallel to vertices
    std::span<const std::uint32_t> out_degree;  // parallel to vertices
    Vertex cut = no_vertex;                     // shared with earlier blocks; none for the first

    std::size_t index_of(Vertex v) const {
        return static_cast<std::size_t>(std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
    }
    // O(|A(B)|); the twin of an arc of B is in B.
    bool bidirected(const Digraph& g) const {
        return std::all_of(arcs.begin(), arcs.end(), [&](ArcId a) { return g.arc(a).twin != no_arc; });
    }
};

// Blocks B¹..Bʳ of UG(D) such that each Bℓ (ℓ ≥ 2) meets the earlier blocks
// exactly in its cut vertex. Stored flat; block(ℓ) is 0-based.
class BlockForest {
public:
    std::size_t size() const { return cut_.size(); }

    BlockView block(std::size_t l) const {
        const std::size_t k = size() - 1 - l;  // blocks are stored in emission order
        BlockView b;
        b.vertices = {vertices_.data() + vstart_[k], vstart_[k + 1] - vstart_[k]};
        b.in_degree = {din_.data() + vstart_[k], b.vertices.size()};
        b.out_degree = {dout_.data() + vstart_[k], b.vertices.size()};
        b.arcs = {arcs_.data() + astart_[k], astart_[k + 1] - astart_[k]};
        b.cut = l == 0 ? no_vertex : cut_[k];
        return b;
    }

    // Indices of the blocks containing v (linear scan, for tests and tools).
    std::vector<std::size_t> blocks_of(Vertex v) const {
        std::vector<std::size_t> out;
        for (std::size_t l = 0; l < size(); ++l) {
            const auto vs = block(l).vertices;
            if (std::find(vs.begin(), vs.end(), v) != vs.end()) out.push_back(l);
        }
        return out;
    }

private:
    friend std::optional<BlockForest> try_blocks_with_order(const Digraph& g);

    std::vector<Vertex> vertices_;
    std::vector<std::uint32_t> din_, dout_;
    std::vector<std::size_t> vstart_{0};
    std::vector<ArcId> arcs_;
    std::vector<std::size_t> astart_{0};
    std::vector<Vertex> cut_;
};

// Iterative Tarjan on UG(D) as a multigraph whose edges are the arcs: a digon
// is a pair of parallel edges, which never separates anything on its own.
// nullopt when the live graph is disconnected.
inline std::optional<BlockForest> try_blocks_with_order(const Digraph& g) {
    BlockForest f;
    const auto vs = g.vertices();
    if (vs.empty()) return f;
    const std::size_t cap = g.capacity();
    // One record per vertex so each visit costs a single cache line.
    struct Times {
        std::uint32_t disc = 0, low = 0, stamp = 0, local = 0;
    };
    std::vector<Times> t(cap);
    std::uint32_t block_no = 0;

    struct Frame {
        Vertex v;
        ArcId parent_arc;
        Digraph::Slots out, in;
        std::uint32_t next;
    };
    struct Edge {
        ArcId arc;
        Vertex tail, head;
    };
    std::vector<Frame> stack;
    std::vector<Edge> edges;
    std::uint32_t time = 0;

    auto emit = [&](Vertex cut, ArcId tree_arc) {
        ++block_no;
        const std::size_t v0 = f.vertices_.size();
        auto add = [&](Vertex x) {
            if (t[x].stamp != block_no) {
                t[x].stamp = block_no;
                t[x].local = static_cast<std::uint32_t>(f.vertices_.size() - v0);
                f.vertices_.push_back(x);
                f.din_.push_back(0);
                f.dout_.push_back(0);
            }
        };
        add(cut);
        while (true) {
            const Edge e = edges.back();
            edges.pop_back();
            add(e.tail);
            add(e.head);
            ++f.dout_[v0 + t[e.tail].local];
            ++f.din_[v0 + t[e.head].local];
            f.arcs_.push_back(e.arc);
            if (e.arc == tree_arc) break;
        }
        f.vstart_.push_back(f.vertices_.size());
        f.astart_.push_back(f.arcs_.size());
        f.cut_.push_back(cut);
    };

    const Vertex root = vs[0];
    t[root].disc = t[root].low = ++time;
    stack.push_back({root, no_arc, g.out_slots(root), g.in_slots(root), 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        const std::size_t n_out = fr.out.arcs.size();
        if (fr.next < n_out + fr.in.arcs.size()) {
            const std::size_t k = fr.next++;
            const bool outgoing = k < n_out;
            const ArcId a = outgoing ? fr.out.arcs[k] : fr.in.arcs[k - n_out];
            if (a == fr.parent_arc) continue;
            const Vertex v = fr.v;
            const Vertex w = outgoing ? fr.out.ends[k] : fr.in.ends[k - n_out];
            const Edge e = outgoing ? Edge{a, v, w} : Edge{a, w, v};
            if (t[w].disc == 0) {
                edges.push_back(e);
                t[w].disc = t[w].low = ++time;
                stack.push_back({w, a, g.out_slots(w), g.in_slots(w), 0});
            } else if (t[w].disc < t[v].disc) {
                edges.push_back(e);
                t[v].low = std::min(t[v].low, t[w].disc);
            }
            continue;
        }
        const Vertex w = fr.v;
        const ArcId up = fr.parent_arc;
        stack.pop_back();
        if (stack.empty()) break;
        const Vertex v = stack.back().v;
        t[v].low = std::min(t[v].low, t[w].low);
        if (t[w].low >= t[v].disc) emit(v, up);
    }
    if (time != vs.size()) return std::nullopt;
    if (f.size() == 0) {
        // Single vertex: one block without arcs.
        f.vertices_.push_back(root);
        f.din_.push_back(0);
        f.dout_.push_back(0);
        f.vstart_.push_back(1);
        f.astart_.push_back(0);
        f.cut_.push_back(no_vertex);
    }
    return f;
}

inline BlockForest blocks_with_order(const Digraph& g) {
    auto f = try_blocks_with_order(g);
    if (!f) throw Error(ErrorCode::disconnected, "blocks_with_order");
    return std::move(*f);
}

}  // namespace bidicol

#endif
