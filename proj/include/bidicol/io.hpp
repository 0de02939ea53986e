#ifndef BIDICOL_IO_HPP
#define BIDICOL_IO_HPP

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "solver.hpp"

namespace bidicol {

// Text format, one record per line:
//   dicol 1
//   n <int> s <int>
//   arc <u> <v>                  (0-based vertices)
//   budget <v> <c> <fin> <fout>  (1-based colours)
// Blank lines and lines starting with '#' are ignored.

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline bool content_line(const std::string& l) {
    const auto p = l.find_first_not_of(" \t\r");
    return p != std::string::npos && l[p] != '#';
}

template <class T>
T read_number(std::istringstream& is, std::size_t line, const char* what) {
    long long x;
    if (!(is >> x) || x < 0) throw ParseError(line, std::string("expected non-negative ") + what);
    return static_cast<T>(x);
}

inline void expect_end(std::istringstream& is, std::size_t line) {
    std::string junk;
    if (is >> junk) throw ParseError(line, "trailing token '" + junk + "'");
}

}  // namespace detail

inline RawInstance parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    int stage = 0;  // 0 header, 1 sizes, 2 body
    RawInstance raw;
    std::set<std::pair<Vertex, Vertex>> arcs;
    std::set<std::pair<Vertex, Colour>> budgets;
    while (std::getline(in, line)) {
        ++no;
        if (!detail::content_line(line)) continue;
        std::istringstream is(line);
        std::string key;
        is >> key;
        if (stage == 0) {
            int version;
            if (key != "dicol" || !(is >> version) || version != 1) throw ParseError(no, "expected 'dicol 1'");
            detail::expect_end(is, no);
            stage = 1;
        } else if (stage == 1) {
            std::string skey;
            if (key != "n") throw ParseError(no, "expected 'n <int> s <int>'");
            raw.n = detail::read_number<std::size_t>(is, no, "n");
            if (!(is >> skey) || skey != "s") throw ParseError(no, "expected 's <int>'");
            raw.s = detail::read_number<Colour>(is, no, "s");
            detail::expect_end(is, no);
            stage = 2;
        } else if (key == "arc") {
            const auto u = detail::read_number<Vertex>(is, no, "vertex");
            const auto v = detail::read_number<Vertex>(is, no, "vertex");
            detail::expect_end(is, no);
            if (u >= raw.n || v >= raw.n) throw ParseError(no, "vertex out of range");
            if (u == v) throw Error(ErrorCode::self_loop, "line " + std::to_string(no));
            if (!arcs.emplace(u, v).second) throw Error(ErrorCode::duplicate_arc, "line " + std::to_string(no));
            raw.arcs.emplace_back(u, v);
        } else if (key == "budget") {
            BudgetLine b;
            b.v = detail::read_number<Vertex>(is, no, "vertex");
            b.c = detail::read_number<Colour>(is, no, "colour");
            b.in = detail::read_number<std::uint64_t>(is, no, "budget");
            b.out = detail::read_number<std::uint64_t>(is, no, "budget");
            detail::expect_end(is, no);
            if (b.v >= raw.n) throw ParseError(no, "vertex out of range");
            if (b.c == 0 || b.c > raw.s) throw ParseError(no, "colour out of range");
            if (b.in > max_budget_entry || b.out > max_budget_entry) throw ParseError(no, "budget entry too large");
            if (!budgets.emplace(b.v, b.c).second) throw ParseError(no, "repeated budget line");
            raw.budgets.push_back(b);
        } else {
            throw ParseError(no, "unknown record '" + key + "'");
        }
    }
    if (stage < 2) throw ParseError(no + 1, "missing header");
    return raw;
}

inline std::string serialise(const RawInstance& raw) {
    std::ostringstream os;
    os << "dicol 1\nn " << raw.n << " s " << raw.s << "\n";
    for (auto [u, v] : raw.arcs) os << "arc " << u << " " << v << "\n";
    for (const BudgetLine& b : raw.budgets)
        if (b.in || b.out) os << "budget " << b.v << " " << b.c << " " << b.in << " " << b.out << "\n";
    return os.str();
}

inline std::string serialise_colouring(const Colouring& col) {
    std::ostringstream os;
    for (Vertex v = 0; v < col.size(); ++v) os << "colour " << v << " " << col[v] << "\n";
    return os.str();
}

// Lines `colour <v> <c>`; missing vertices stay uncoloured.
inline Colouring parse_colouring(const std::string& text, std::size_t n) {
    Colouring col(n, no_colour);
    std::istringstream in(text);
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!detail::content_line(line)) continue;
        std::istringstream is(line);
        std::string key;
        is >> key;
        if (key != "colour") throw ParseError(no, "expected 'colour <v> <c>'");
        const auto v = detail::read_number<Vertex>(is, no, "vertex");
        const auto c = detail::read_number<Colour>(is, no, "colour");
        detail::expect_end(is, no);
        if (v >= n) throw ParseError(no, "vertex out of range");
        if (col[v] != no_colour) throw ParseError(no, "vertex coloured twice");
        col[v] = c;
    }
    return col;
}

// The live part of an instance, renumbered 0..k−1 in live-list order.
// `global` receives the original id of each local vertex.
inline RawInstance to_raw(const Instance& inst, std::vector<Vertex>* global = nullptr) {
    const Digraph& g = inst.graph;
    const auto vs = g.vertices();
    std::vector<Vertex> local(g.capacity(), no_vertex);
    for (std::size_t k = 0; k < vs.size(); ++k) local[vs[k]] = static_cast<Vertex>(k);
    RawInstance raw;
    raw.n = vs.size();
    raw.s = inst.colour_count();
    for (Vertex v : vs)
        for (ArcId a : g.out_arcs(v)) raw.arcs.emplace_back(local[v], local[g.arc(a).head]);
    for (Vertex v : vs)
        for (const auto& e : inst.budgets.chain(v)) raw.budgets.push_back({local[v], e.colour, e.value.in, e.value.out});
    if (global) global->assign(vs.begin(), vs.end());
    return raw;
}

struct Component {
    RawInstance raw;            // local ids 0..k−1
    std::vector<Vertex> global; // local → global
};

// One entry per connected component of the underlying graph.
inline std::vector<Component> split_components(const RawInstance& raw) {
    std::vector<std::vector<Vertex>> adj(raw.n);
    for (auto [u, v] : raw.arcs) adj[u].push_back(v), adj[v].push_back(u);
    std::vector<std::uint32_t> comp(raw.n, UINT32_MAX), local(raw.n, 0);
    std::vector<Component> out;
    for (Vertex r = 0; r < raw.n; ++r) {
        if (comp[r] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(out.size());
        Component c;
        c.global.push_back(r);
        comp[r] = id;
        for (std::size_t h = 0; h < c.global.size(); ++h)
            for (Vertex w : adj[c.global[h]])
                if (comp[w] == UINT32_MAX) comp[w] = id, c.global.push_back(w);
        for (std::size_t k = 0; k < c.global.size(); ++k) local[c.global[k]] = static_cast<Vertex>(k);
        c.raw.n = c.global.size();
        c.raw.s = raw.s;
        out.push_back(std::move(c));
    }
    for (auto [u, v] : raw.arcs) out[comp[u]].raw.arcs.emplace_back(local[u], local[v]);
    for (const BudgetLine& b : raw.budgets) out[comp[b.v]].raw.budgets.push_back({local[b.v], b.c, b.in, b.out});
    return out;
}

struct FileOutcome {
    SolveOutcome::Kind kind = SolveOutcome::coloured;
    Colouring colouring;                 // global ids, when coloured
    std::vector<SolveOutcome::Kind> per_component;
    std::string reason;
};

// Components are independent: the whole digraph is F-dicolourable iff each
// component is. Any invalid component makes the file invalid.
inline FileOutcome solve_file(const RawInstance& raw) {
    FileOutcome r;
    r.colouring.assign(raw.n, no_colour);
    for (const Component& c : split_components(raw)) {
        const SolveOutcome o = solve(make_instance(c.raw));
        r.per_component.push_back(o.kind);
        if (o.kind == SolveOutcome::invalid) {
            r.kind = SolveOutcome::invalid;
            if (r.reason.empty()) {
                r.reason = o.deficit_vertex ? "budget-deficit " + std::to_string(c.global[*o.deficit_vertex]) : o.reason;
            }
        } else if (o.kind == SolveOutcome::hard) {
            if (r.kind != SolveOutcome::invalid) r.kind = SolveOutcome::hard;
        } else {
            for (Vertex v = 0; v < c.global.size(); ++v) r.colouring[c.global[v]] = o.colouring[v];
        }
    }
    if (r.kind != SolveOutcome::coloured) r.colouring.clear();
    return r;
}

// Checks a global colouring component by component.
inline bool verify_file(const RawInstance& raw, const Colouring& col) {
    if (col.size() != raw.n) return false;
    for (const Component& c : split_components(raw)) {
        Colouring local(c.global.size());
        for (Vertex v = 0; v < c.global.size(); ++v) local[v] = col[c.global[v]];
        if (!verify_dicolouring(make_instance(c.raw), local)) return false;
    }
    return true;
}

}  // namespace bidicol

#endif
