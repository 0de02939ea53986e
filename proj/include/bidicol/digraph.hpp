#ifndef BIDICOL_DIGRAPH_HPP
#define BIDICOL_DIGRAPH_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace bidicol {

struct Arc {
    Vertex tail = no_vertex;
    Vertex head = no_vertex;
    ArcId twin = no_arc;       // reverse arc when the pair is a digon
    std::uint32_t out_pos = 0;  // slot in the tail's out-list
    std::uint32_t in_pos = 0;   // slot in the head's in-list
};

struct StructureFlags {
    bool is_bidirected_complete = false;
    bool underlying_is_cycle = false;
};

// Digraph with vertex deletion only. Adjacency lists live in two flat arrays,
// one segment per vertex, so a deletion just swap-removes inside segments.
class Digraph {
public:
    Digraph() = default;

    static Digraph build(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
        Digraph g;
        g.init(n, arcs);
        return g;
    }

    std::size_t capacity() const { return vx_.size(); }
    std::size_t vertex_count() const { return alive_list_.size(); }
    std::size_t arc_count() const { return m_alive_; }

    bool valid_id(Vertex v) const { return v < capacity(); }
    bool alive(Vertex v) const { return v < capacity() && alive_pos_[v] != no_vertex; }

    // Live vertices in no particular order.
    std::span<const Vertex> vertices() const { return alive_list_; }

    std::span<const ArcId> out_arcs(Vertex v) const {
        arc_touches() += vx_[v].out_len;
        return {slot_arc_.data() + vx_[v].out_start, vx_[v].out_len};
    }
    std::span<const ArcId> in_arcs(Vertex v) const {
        arc_touches() += vx_[v].in_len;
        return {slot_arc_.data() + vx_[v].in_start, vx_[v].in_len};
    }

    // Arc ids with the vertex at the other end, slot for slot.
    struct Slots {
        std::span<const ArcId> arcs;
        std::span<const Vertex> ends;
    };
    Slots out_slots(Vertex v) const {
        arc_touches() += vx_[v].out_len;
        return {{slot_arc_.data() + vx_[v].out_start, vx_[v].out_len}, {slot_end_.data() + vx_[v].out_start, vx_[v].out_len}};
    }
    Slots in_slots(Vertex v) const {
        arc_touches() += vx_[v].in_len;
        return {{slot_arc_.data() + vx_[v].in_start, vx_[v].in_len}, {slot_end_.data() + vx_[v].in_start, vx_[v].in_len}};
    }

    // Heads of out_arcs(v) and tails of in_arcs(v), slot for slot.
    std::span<const Vertex> out_neighbours(Vertex v) const {
        arc_touches() += vx_[v].out_len;
        return {slot_end_.data() + vx_[v].out_start, vx_[v].out_len};
    }
    std::span<const Vertex> in_neighbours(Vertex v) const {
        arc_touches() += vx_[v].in_len;
        return {slot_end_.data() + vx_[v].in_start, vx_[v].in_len};
    }

    const Arc& arc(ArcId a) const { return arcs_[a]; }

    std::uint32_t out_degree(Vertex v) const { return vx_[v].out_len; }
    std::uint32_t in_degree(Vertex v) const { return vx_[v].in_len; }
    std::uint32_t digon_count(Vertex v) const { return vx_[v].digon; }
    std::uint32_t underlying_degree(Vertex v) const { return vx_[v].in_len + vx_[v].out_len - vx_[v].digon; }
    // N⁻(v) = N⁺(v).
    bool only_digons(Vertex v) const { return vx_[v].digon == vx_[v].in_len && vx_[v].digon == vx_[v].out_len; }

    // Number of arcs lying in a digon (twice the number of digons).
    std::size_t digon_arc_count() const { return digon_arcs_; }
    std::size_t simple_arc_count() const { return m_alive_ - digon_arcs_; }
    std::size_t underlying_edge_count() const { return m_alive_ - digon_arcs_ / 2; }
    std::size_t deg2_vertex_count() const { return deg2_; }

    // Connectivity is assumed by the caller.
    StructureFlags structure_flags() const {
        const std::size_t n = vertex_count();
        StructureFlags f;
        f.is_bidirected_complete = simple_arc_count() == 0 && m_alive_ == n * (n - (n > 0 ? 1 : 0));
        f.underlying_is_cycle = n >= 3 && deg2_ == n && underlying_edge_count() == n;
        return f;
    }

    // O(d⁺(u)) scan.
    bool has_arc(Vertex u, Vertex v) const {
        for (std::uint32_t k = 0; k < vx_[u].out_len; ++k)
            if (slot_end_[vx_[u].out_start + k] == v) return true;
        return false;
    }

    void delete_vertex(Vertex v) {
        if (!valid_id(v)) throw Error(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
        if (!alive(v)) throw Error(ErrorCode::vertex_dead, "vertex " + std::to_string(v));
        for (std::uint32_t k = 0; k < vx_[v].out_len; ++k) {
            const ArcId a = slot_arc_[vx_[v].out_start + k];
            const Vertex w = slot_end_[vx_[v].out_start + k];
            const std::uint32_t before = underlying_degree(w);
            unlink_in(w, a);
            if (arcs_[a].twin != no_arc) {
                --vx_[w].digon;
                digon_arcs_ -= 2;
                arcs_[arcs_[a].twin].twin = no_arc;
            }
            track_deg2(before, underlying_degree(w));
        }
        for (std::uint32_t k = 0; k < vx_[v].in_len; ++k) {
            const ArcId a = slot_arc_[vx_[v].in_start + k];
            const Vertex w = slot_end_[vx_[v].in_start + k];
            const std::uint32_t before = underlying_degree(w);
            unlink_out(w, a);
            track_deg2(before, underlying_degree(w));
        }
        arc_touches() += vx_[v].out_len + vx_[v].in_len;
        m_alive_ -= vx_[v].out_len + vx_[v].in_len;
        if (underlying_degree(v) == 2) --deg2_;
        vx_[v].out_len = vx_[v].in_len = vx_[v].digon = 0;

        const std::uint32_t p = alive_pos_[v];
        const Vertex last = alive_list_.back();
        alive_list_[p] = last;
        alive_pos_[last] = p;
        alive_list_.pop_back();
        alive_pos_[v] = no_vertex;
    }

private:
    void init(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs) {
        if (n >= no_vertex) throw Error(ErrorCode::index_out_of_range, "too many vertices");
        vx_.assign(n, {});
        for (const auto& [u, v] : arcs) {
            if (u >= n || v >= n)
                throw Error(ErrorCode::index_out_of_range,
                            "arc " + std::to_string(u) + " " + std::to_string(v));
            if (u == v) throw Error(ErrorCode::self_loop, "vertex " + std::to_string(u));
            ++vx_[u].out_len;
            ++vx_[v].in_len;
        }
        // Each vertex owns one stretch of the slot arrays, out-list then in-list.
        std::uint32_t at = 0;
        for (std::size_t v = 0; v < n; ++v) {
            vx_[v].out_start = at;
            vx_[v].in_start = at + vx_[v].out_len;
            at += vx_[v].out_len + vx_[v].in_len;
            vx_[v].out_len = vx_[v].in_len = 0;
        }
        arcs_.resize(arcs.size());
        slot_arc_.resize(2 * arcs.size());
        slot_end_.resize(2 * arcs.size());
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            const auto [u, v] = arcs[i];
            Arc& a = arcs_[i];
            a.tail = u;
            a.head = v;
            a.out_pos = vx_[u].out_len++;
            a.in_pos = vx_[v].in_len++;
            slot_arc_[vx_[u].out_start + a.out_pos] = static_cast<ArcId>(i);
            slot_arc_[vx_[v].in_start + a.in_pos] = static_cast<ArcId>(i);
            slot_end_[vx_[u].out_start + a.out_pos] = v;
            slot_end_[vx_[v].in_start + a.in_pos] = u;
        }
        m_alive_ = arcs.size();

        // Digon pairing: mark v's out-neighbours with the arc id, then look at
        // its in-neighbours. The same pass catches duplicate arcs.
        std::vector<ArcId> mark(n, no_arc);
        std::vector<Vertex> stamp(n, no_vertex);
        for (Vertex v = 0; v < n; ++v) {
            for (std::uint32_t k = 0; k < vx_[v].out_len; ++k) {
                const ArcId a = slot_arc_[vx_[v].out_start + k];
                const Vertex w = slot_end_[vx_[v].out_start + k];
                if (stamp[w] == v)
                    throw Error(ErrorCode::duplicate_arc,
                                "arc " + std::to_string(v) + " " + std::to_string(w));
                stamp[w] = v;
                mark[w] = a;
            }
            for (std::uint32_t k = 0; k < vx_[v].in_len; ++k) {
                const ArcId b = slot_arc_[vx_[v].in_start + k];
                const Vertex u = slot_end_[vx_[v].in_start + k];
                if (stamp[u] == v) {
                    arcs_[b].twin = mark[u];
                    arcs_[mark[u]].twin = b;
                    ++vx_[v].digon;
                }
            }
            digon_arcs_ += vx_[v].digon;
        }

        alive_list_.resize(n);
        alive_pos_.resize(n);
        deg2_ = 0;
        for (Vertex v = 0; v < n; ++v) {
            alive_list_[v] = v;
            alive_pos_[v] = v;
            if (underlying_degree(v) == 2) ++deg2_;
        }
    }

    void unlink_out(Vertex w, ArcId a) {
        const std::uint32_t p = arcs_[a].out_pos;
        const std::uint32_t last = --vx_[w].out_len;
        const ArcId moved = slot_arc_[vx_[w].out_start + last];
        slot_arc_[vx_[w].out_start + p] = moved;
        slot_end_[vx_[w].out_start + p] = slot_end_[vx_[w].out_start + last];
        arcs_[moved].out_pos = p;
    }
    void unlink_in(Vertex w, ArcId a) {
        const std::uint32_t p = arcs_[a].in_pos;
        const std::uint32_t last = --vx_[w].in_len;
        const ArcId moved = slot_arc_[vx_[w].in_start + last];
        slot_arc_[vx_[w].in_start + p] = moved;
        slot_end_[vx_[w].in_start + p] = slot_end_[vx_[w].in_start + last];
        arcs_[moved].in_pos = p;
    }
    void track_deg2(std::uint32_t before, std::uint32_t after) {
        if (before == after) return;
        if (before == 2) --deg2_;
        if (after == 2) ++deg2_;
    }

    std::vector<ArcId> slot_arc_;
    std::vector<Vertex> slot_end_;
    struct VertexRecord {
        std::uint32_t out_start = 0, in_start = 0, out_len = 0, in_len = 0, digon = 0;
    };

    std::vector<Arc> arcs_;
    std::vector<VertexRecord> vx_;
    std::vector<Vertex> alive_list_;
    std::vector<std::uint32_t> alive_pos_;
    std::size_t m_alive_ = 0;
    std::size_t digon_arcs_ = 0;
    std::size_t deg2_ = 0;
};

// Answers "is there an arc u→x / x→u" for a fixed centre u after an O(d(u))
// marking pass. Version stamps avoid clearing between centres.
class NeighbourProbe {
public:
    explicit NeighbourProbe(std::size_t capacity) : out_(capacity, 0), in_(capacity, 0) {}

    void mark(const Digraph& g, Vertex u) {
        ++stamp_;
        for (Vertex x : g.out_neighbours(u)) out_[x] = stamp_;
        for (Vertex x : g.in_neighbours(u)) in_[x] = stamp_;
    }
    bool from_centre(Vertex x) const { return out_[x] == stamp_; }
    bool to_centre(Vertex x) const { return in_[x] == stamp_; }
    bool adjacent(Vertex x) const { return from_centre(x) || to_centre(x); }

private:
    std::vector<std::uint32_t> out_, in_;
    std::uint32_t stamp_ = 0;
};

}  // namespace bidicol

#endif
