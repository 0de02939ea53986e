#ifndef BIDICOL_BUDGET_HPP
#define BIDICOL_BUDGET_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>
#include <unordered_map>

#include "common.hpp"

namespace bidicol {

struct Budget {
    std::uint64_t in = 0;
    std::uint64_t out = 0;

    bool zero() const { return in == 0 && out == 0; }
    bool symmetric() const { return in == out; }
    std::uint64_t& operator[](Side s) { return s == Side::in ? in : out; }
    std::uint64_t operator[](Side s) const { return s == Side::in ? in : out; }
    Budget& operator+=(const Budget& o) {
        in += o.in;
        out += o.out;
        return *this;
    }
    Budget& operator-=(const Budget& o) {
        in -= o.in;
        out -= o.out;
        return *this;
    }
    friend Budget operator+(Budget a, const Budget& b) { return a += b; }
    friend Budget operator-(Budget a, const Budget& b) { return a -= b; }
    friend bool operator==(const Budget&, const Budget&) = default;
    // Componentwise a ≥ b.
    bool covers(const Budget& b) const { return in >= b.in && out >= b.out; }
};

// Sparse table of f_1..f_s. Nonzero entries are kept in a per-vertex doubly
// linked chain sorted by colour. Lookup of (v, c) scans short chains and goes
// through a hash index for long ones, O(1) either way. Cells never written
// read as (0,0), so cost does not depend on s.
class BudgetTable {
public:
    struct Entry {
        Colour colour = no_colour;
        Budget value;
        std::uint32_t prev = nil;
        std::uint32_t next = nil;
    };

    class ChainIterator {
    public:
        ChainIterator(const std::vector<Entry>* e, std::uint32_t at) : entries_(e), at_(at) {}
        const Entry& operator*() const { return (*entries_)[at_]; }
        const Entry* operator->() const { return &(*entries_)[at_]; }
        ChainIterator& operator++() {
            at_ = (*entries_)[at_].next;
            return *this;
        }
        bool operator==(const ChainIterator& o) const { return at_ == o.at_; }

    private:
        const std::vector<Entry>* entries_;
        std::uint32_t at_;
    };

    struct Chain {
        ChainIterator b, e;
        ChainIterator begin() const { return b; }
        ChainIterator end() const { return e; }
    };

    static constexpr std::uint32_t nil = 0xffffffffu;

    BudgetTable() = default;
    BudgetTable(std::size_t n, Colour s) : s_(s), vx_(n) {}

    std::size_t vertex_capacity() const { return vx_.size(); }
    Colour colour_count() const { return s_; }
    std::size_t nonzero_entries() const { return nonzero_; }

    Budget get(Vertex v, Colour c) const {
        check(v, c);
        const std::uint32_t slot = find(v, c);
        return slot == nil ? Budget{} : entries_[slot].value;
    }

    void set(Vertex v, Colour c, Budget b) {
        check(v, c);
        const std::uint32_t slot = find(v, c);
        if (slot != nil) {
            vx_[v].total -= entries_[slot].value;
            if (b.zero()) {
                remove(v, slot);
                return;
            }
            entries_[slot].value = b;
            vx_[v].total += b;
            return;
        }
        if (b.zero()) return;
        const std::uint32_t fresh = allocate();
        entries_[fresh].colour = c;
        entries_[fresh].value = b;
        splice_sorted(v, fresh);
        ++nonzero_;
        if (vx_[v].indexed) {
            index_.emplace(key(v, c), fresh);
        } else if (++vx_[v].length > short_chain) {
            vx_[v].indexed = true;
            for (std::uint32_t at = vx_[v].head; at != nil; at = entries_[at].next)
                index_.emplace(key(v, entries_[at].colour), at);
        }
        vx_[v].total += b;
    }

    // f_c^side(v) ← max(0, f_c^side(v) − 1).
    void decrement(Vertex v, Colour c, Side side) {
        const std::uint32_t slot = find(v, c);
        if (slot == nil) return;
        std::uint64_t& x = entries_[slot].value[side];
        if (x == 0) return;
        --x;
        --vx_[v].total[side];
        if (entries_[slot].value.zero()) remove(v, slot);
    }

    // Lowest colour with a nonzero entry at v, or no_colour.
    Colour first_nonzero(Vertex v) const {
        return vx_[v].head == nil ? no_colour : entries_[vx_[v].head].colour;
    }

    Chain chain(Vertex v) const {
        return {ChainIterator(&entries_, vx_[v].head), ChainIterator(&entries_, nil)};
    }

    // Σ_c f_c(v), kept up to date by every write.
    const Budget& total(Vertex v) const { return vx_[v].total; }

    // Drops every entry of v.
    void clear_vertex(Vertex v) {
        for (std::uint32_t at = vx_[v].head; at != nil;) {
            const std::uint32_t nx = entries_[at].next;
            if (vx_[v].indexed) index_.erase(key(v, entries_[at].colour));
            free_.push_back(at);
            --nonzero_;
            at = nx;
        }
        vx_[v] = {};
    }

private:
    // Chains up to this length are scanned instead of hashed; a vertex whose
    // chain ever grows past it stays in the hash index.
    static constexpr std::uint32_t short_chain = 4;

    static std::uint64_t key(Vertex v, Colour c) { return (std::uint64_t{v} << 32) | c; }

    std::uint32_t find(Vertex v, Colour c) const {
        if (vx_[v].indexed) {
            auto it = index_.find(key(v, c));
            return it == index_.end() ? nil : it->second;
        }
        for (std::uint32_t at = vx_[v].head; at != nil; at = entries_[at].next)
            if (entries_[at].colour >= c) return entries_[at].colour == c ? at : nil;
        return nil;
    }

    void remove(Vertex v, std::uint32_t slot) {
        if (vx_[v].indexed) index_.erase(key(v, entries_[slot].colour));
        else --vx_[v].length;
        unsplice(v, slot);
        --nonzero_;
    }

    void check(Vertex v, Colour c) const {
        if (v >= vx_.size() || c == 0 || c > s_)
            throw Error(ErrorCode::index_out_of_range,
                        "budget cell (" + std::to_string(v) + ", " + std::to_string(c) + ")");
    }

    std::uint32_t allocate() {
        if (!free_.empty()) {
            const std::uint32_t slot = free_.back();
            free_.pop_back();
            entries_[slot] = Entry{};
            return slot;
        }
        entries_.emplace_back();
        return static_cast<std::uint32_t>(entries_.size() - 1);
    }

    // Walks back from the tail, so colours written in increasing order cost O(1).
    void splice_sorted(Vertex v, std::uint32_t slot) {
        const Colour c = entries_[slot].colour;
        std::uint32_t after = vx_[v].tail;
        while (after != nil && entries_[after].colour > c) after = entries_[after].prev;
        const std::uint32_t before = after == nil ? vx_[v].head : entries_[after].next;
        entries_[slot].prev = after;
        entries_[slot].next = before;
        if (after == nil) vx_[v].head = slot; else entries_[after].next = slot;
        if (before == nil) vx_[v].tail = slot; else entries_[before].prev = slot;
    }

    void unsplice(Vertex v, std::uint32_t slot) {
        const Entry& e = entries_[slot];
        if (e.prev == nil) vx_[v].head = e.next; else entries_[e.prev].next = e.next;
        if (e.next == nil) vx_[v].tail = e.prev; else entries_[e.next].prev = e.prev;
        free_.push_back(slot);
    }

    Colour s_ = 0;
    struct VertexChain {
        std::uint32_t head = nil, tail = nil;
        std::uint32_t length = 0;  // while not indexed
        bool indexed = false;
        Budget total;
    };

    std::vector<VertexChain> vx_;
    std::vector<Entry> entries_;
    std::vector<std::uint32_t> free_;
    std::size_t nonzero_ = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

}  // namespace bidicol

#endif
