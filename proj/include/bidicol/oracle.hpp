#ifndef BIDICOL_ORACLE_HPP
#define BIDICOL_ORACLE_HPP

// Slow reference implementations for differential testing. Nothing here
// uses the digraph, budget or solver headers: digraphs are adjacency
// bitmasks and budgets a dense array.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "raw.hpp"

namespace bidicol::oracle {

using Mask = std::uint32_t;
inline constexpr std::size_t default_cap = 8;
inline constexpr std::size_t max_vertices = 16;

struct Pair {
    std::uint64_t in = 0, out = 0;
    bool zero() const { return in == 0 && out == 0; }
    friend bool operator==(const Pair&, const Pair&) = default;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

struct Small {
    std::size_t n = 0;
    std::size_t s = 0;
    std::vector<Mask> out, in;  // out[v] has bit w iff v→w
    std::vector<Pair> f;        // f[v * s + (c − 1)]

    Pair at(std::size_t v, std::size_t c) const { return f[v * s + (c - 1)]; }
    Pair& at(std::size_t v, std::size_t c) { return f[v * s + (c - 1)]; }
    Mask all() const { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
};

inline Small from_raw(const RawInstance& raw, std::size_t cap = max_vertices) {
    if (raw.n > cap || raw.n > max_vertices) throw Error(ErrorCode::cap_exceeded, "oracle: n = " + std::to_string(raw.n));
    Small d;
    d.n = raw.n;
    d.s = raw.s;
    d.out.assign(raw.n, 0);
    d.in.assign(raw.n, 0);
    d.f.assign(raw.n * raw.s, {});
    for (auto [a, b] : raw.arcs) {
        d.out[a] |= Mask{1} << b;
        d.in[b] |= Mask{1} << a;
    }
    for (const BudgetLine& l : raw.budgets) d.at(l.v, l.c) = {l.in, l.out};
    return d;
}

// ---------------------------------------------------------------------------
// Naive peeling.

struct PeelResult {
    bool ok = false;
    std::vector<std::size_t> order;  // removal order reversed
    Mask witness = 0;                // unpeeled vertices otherwise
};

// Restricts to `within` and removes, one at a time, the lowest vertex with
// d⁻ < f⁻ or d⁺ < f⁺, rescanning from scratch after each removal.
inline PeelResult peel_check(const Small& d, Mask within, const std::vector<Pair>& f) {
    PeelResult r;
    Mask left = within;
    while (left) {
        bool found = false;
        for (std::size_t v = 0; v < d.n; ++v) {
            if (!(left >> v & 1)) continue;
            const auto din = static_cast<std::uint64_t>(std::popcount(d.in[v] & left));
            const auto dout = static_cast<std::uint64_t>(std::popcount(d.out[v] & left));
            if (din < f[v].in || dout < f[v].out) {
                left &= ~(Mask{1} << v);
                r.order.push_back(v);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    r.ok = left == 0;
    if (r.ok) {
        std::reverse(r.order.begin(), r.order.end());
    } else {
        r.order.clear();
        r.witness = left;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Brute force.

// Backtracking over the colours nonzero at each vertex. Strict
// bidegeneracy is hereditary, so each partial class must already peel.
inline std::optional<std::vector<std::size_t>> brute_force_dicolourable(const RawInstance& raw,
                                                                       std::size_t cap = default_cap) {
    const Small d = from_raw(raw, cap);
    std::vector<std::vector<std::size_t>> options(d.n);
    for (std::size_t v = 0; v < d.n; ++v) {
        for (std::size_t c = 1; c <= d.s; ++c)
            if (!d.at(v, c).zero()) options[v].push_back(c);
        if (options[v].empty()) return std::nullopt;
    }
    std::vector<std::size_t> col(d.n, 0);
    std::vector<Mask> cls(d.s + 1, 0);
    auto class_peels = [&](std::size_t c) {
        Mask left = cls[c];
        for (bool progress = true; progress && left;) {
            progress = false;
            for (std::size_t v = 0; v < d.n; ++v) {
                if (!(left >> v & 1)) continue;
                const Pair p = d.at(v, c);
                if (static_cast<std::uint64_t>(std::popcount(d.in[v] & left)) < p.in ||
                    static_cast<std::uint64_t>(std::popcount(d.out[v] & left)) < p.out) {
                    left &= ~(Mask{1} << v);
                    progress = true;
                }
            }
        }
        return left == 0;
    };
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (v == d.n) return true;
        for (std::size_t c : options[v]) {
            col[v] = c;
            cls[c] |= Mask{1} << v;
            if (class_peels(c) && go(v + 1)) return true;
            cls[c] &= ~(Mask{1} << v);
        }
        col[v] = 0;
        return false;
    };
    if (!go(0)) return std::nullopt;
    return col;
}

// ---------------------------------------------------------------------------
// The recursive definition of hard pairs.

struct HardnessTree {
    enum Kind { mono, bicycle, complete, join };
    Kind kind = mono;
    Mask vertices = 0;
    std::size_t colour_a = 0, colour_b = 0;  // MONO colour; BICYCLE colours
    std::size_t shared = 0;                   // JOIN vertex
    std::vector<Pair> split;                  // JOIN: first part's budget at the shared vertex, per colour
    std::vector<HardnessTree> parts;          // JOIN: two subtrees
};

namespace detail {

struct Sub {
    Mask vs;
    std::vector<Pair> f;  // indexed as Small::f
};

inline std::size_t popc(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

inline Mask neighbours(const Small& d, std::size_t v, Mask within) { return (d.in[v] | d.out[v]) & within; }

inline bool connected(const Small& d, Mask vs) {
    if (!vs) return true;
    Mask seen = vs & (~vs + 1), frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (std::size_t v = 0; v < d.n; ++v)
            if (frontier >> v & 1) next |= neighbours(d, v, vs);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == vs;
}

// Components of vs, as masks.
inline std::vector<Mask> split_components(const Small& d, Mask vs) {
    std::vector<Mask> out;
    while (vs) {
        Mask comp = vs & (~vs + 1), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (std::size_t v = 0; v < d.n; ++v)
                if (frontier >> v & 1) next |= neighbours(d, v, vs);
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        vs &= ~comp;
    }
    return out;
}

inline Pair degree(const Small& d, std::size_t v, Mask vs) {
    return {popc(d.in[v] & vs), popc(d.out[v] & vs)};
}

inline std::optional<HardnessTree> leaf(const Small& d, const Sub& p) {
    const std::size_t nb = popc(p.vs);
    std::vector<std::size_t> vs;
    for (std::size_t v = 0; v < d.n; ++v)
        if (p.vs >> v & 1) vs.push_back(v);
    auto at = [&](std::size_t v, std::size_t c) { return p.f[v * d.s + (c - 1)]; };

    for (std::size_t i = 1; i <= d.s; ++i) {
        bool ok = true;
        for (std::size_t v : vs)
            for (std::size_t c = 1; c <= d.s && ok; ++c)
                ok = at(v, c) == (c == i ? degree(d, v, p.vs) : Pair{});
        if (ok) return HardnessTree{HardnessTree::mono, p.vs, i, 0, 0, {}, {}};
    }

    bool bidirected = true, complete = true;
    std::size_t edges = 0;
    for (std::size_t v : vs) {
        if ((d.in[v] & p.vs) != (d.out[v] & p.vs)) bidirected = false;
        if ((d.out[v] & p.vs) != (p.vs & ~(Mask{1} << v))) complete = false;
        edges += popc(d.out[v] & p.vs);
    }
    if (!bidirected) return std::nullopt;

    bool constant = true;
    for (std::size_t v : vs)
        for (std::size_t c = 1; c <= d.s; ++c)
            if (!(at(v, c) == at(vs[0], c))) constant = false;
    if (!constant) return std::nullopt;

    if (complete) {
        std::uint64_t sum = 0;
        bool symmetric = true;
        for (std::size_t c = 1; c <= d.s; ++c) {
            sum += at(vs[0], c).out;
            if (at(vs[0], c).in != at(vs[0], c).out) symmetric = false;
        }
        if (symmetric && sum == nb - 1) return HardnessTree{HardnessTree::complete, p.vs, 0, 0, 0, {}, {}};
    }

    bool cycle = nb >= 3 && nb % 2 == 1 && edges == 2 * nb;
    for (std::size_t v : vs)
        if (popc(d.out[v] & p.vs) != 2) cycle = false;
    if (cycle) {
        std::vector<std::size_t> ones;
        bool ok = true;
        for (std::size_t c = 1; c <= d.s && ok; ++c) {
            const Pair x = at(vs[0], c);
            if (x == Pair{1, 1}) ones.push_back(c);
            else if (!x.zero()) ok = false;
        }
        if (ok && ones.size() == 2) return HardnessTree{HardnessTree::bicycle, p.vs, ones[0], ones[1], 0, {}, {}};
    }
    return std::nullopt;
}

inline std::string memo_key(const Small& d, const Sub& p) {
    std::string k(reinterpret_cast<const char*>(&p.vs), sizeof(Mask));
    for (std::size_t v = 0; v < d.n; ++v)
        if (p.vs >> v & 1)
            for (std::size_t c = 1; c <= d.s; ++c) {
                const Pair x = p.f[v * d.s + (c - 1)];
                k += std::to_string(x.in) + "," + std::to_string(x.out) + ";";
            }
    return k;
}

class HardSearch {
public:
    explicit HardSearch(const Small& d) : d_(d) {}

    std::optional<HardnessTree> run(const Sub& p) {
        if (!connected(d_, p.vs)) return std::nullopt;
        for (std::size_t v = 0; v < d_.n; ++v) {
            if (!(p.vs >> v & 1)) continue;
            Pair total;
            for (std::size_t c = 1; c <= d_.s; ++c) {
                total.in += p.f[v * d_.s + (c - 1)].in;
                total.out += p.f[v * d_.s + (c - 1)].out;
            }
            if (!(total == degree(d_, v, p.vs))) return std::nullopt;  // hard pairs are tight
        }
        const std::string key = memo_key(d_, p);
        if (not_hard_.count(key)) return std::nullopt;
        auto r = search(p);
        if (!r) not_hard_.insert(key);
        return r;
    }

private:
    std::optional<HardnessTree> search(const Sub& p) {
        bool has_cut = false;
        for (std::size_t x = 0; x < d_.n; ++x) {
            if (!(p.vs >> x & 1)) continue;
            const Mask rest = p.vs & ~(Mask{1} << x);
            const auto comps = split_components(d_, rest);
            if (comps.size() < 2) continue;
            has_cut = true;
            // Unordered bipartitions of the components; component 0 stays left.
            const std::size_t k = comps.size();
            for (Mask sel = 0; sel < (Mask{1} << (k - 1)); ++sel) {
                Mask left = comps[0] | (Mask{1} << x), right = Mask{1} << x;
                for (std::size_t j = 1; j < k; ++j) (sel >> (j - 1) & 1 ? left : right) |= comps[j];
                if (right == (Mask{1} << x)) continue;
                if (auto t = try_splits(p, x, left, right)) return t;
            }
        }
        if (has_cut) return std::nullopt;
        return leaf(d_, p);
    }

    // Every f(x) = a + b with a tight for the left part.
    std::optional<HardnessTree> try_splits(const Sub& p, std::size_t x, Mask left, Mask right) {
        const Pair dl = degree(d_, x, left);
        std::vector<Pair> a(d_.s);
        std::optional<HardnessTree> found;
        // Distribute dl.in over colours within f(x).in, then dl.out likewise.
        std::function<bool(std::size_t, std::uint64_t, std::uint64_t)> go = [&](std::size_t c, std::uint64_t rin,
                                                                              std::uint64_t rout) -> bool {
            if (c == d_.s) {
                if (rin || rout) return false;
                Sub l{left, p.f}, r{right, p.f};
                for (std::size_t k = 1; k <= d_.s; ++k) {
                    const Pair fx = p.f[x * d_.s + (k - 1)];
                    l.f[x * d_.s + (k - 1)] = a[k - 1];
                    r.f[x * d_.s + (k - 1)] = {fx.in - a[k - 1].in, fx.out - a[k - 1].out};
                }
                auto tl = run(l);
                if (!tl) return false;
                auto tr = run(r);
                if (!tr) return false;
                HardnessTree t{HardnessTree::join, p.vs, 0, 0, x, a, {}};
                t.parts.push_back(std::move(*tl));
                t.parts.push_back(std::move(*tr));
                found = std::move(t);
                return true;
            }
            const Pair fx = p.f[x * d_.s + c];
            for (std::uint64_t i = 0; i <= std::min(fx.in, rin); ++i)
                for (std::uint64_t o = 0; o <= std::min(fx.out, rout); ++o) {
                    a[c] = {i, o};
                    if (go(c + 1, rin - i, rout - o)) return true;
                }
            return false;
        };
        go(0, dl.in, dl.out);
        return found;
    }

    const Small& d_;
    std::set<std::string> not_hard_;
};

}  // namespace detail

// A tree witnessing the recursive definition, or nullopt when the pair is
// not hard. Exponential; n is capped.
inline std::optional<HardnessTree> definitional_hard(const RawInstance& raw, std::size_t cap = default_cap) {
    const Small d = from_raw(raw, cap);
    if (d.n == 0) return std::nullopt;
    detail::HardSearch search(d);
    return search.run({d.all(), d.f});
}

inline std::string to_text(const HardnessTree& t, int depth = 0) {
    std::ostringstream os;
    const std::string pad(2 * depth, ' ');
    os << pad;
    switch (t.kind) {
        case HardnessTree::mono: os << "MONO(" << t.colour_a << ")"; break;
        case HardnessTree::bicycle: os << "BICYCLE(" << t.colour_a << "," << t.colour_b << ")"; break;
        case HardnessTree::complete: os << "COMPLETE"; break;
        case HardnessTree::join: os << "JOIN at " << t.shared << " split"; break;
    }
    if (t.kind == HardnessTree::join)
        for (std::size_t c = 0; c < t.split.size(); ++c)
            if (!t.split[c].zero()) os << " f" << c + 1 << "=(" << t.split[c].in << "," << t.split[c].out << ")";
    os << " {";
    bool first = true;
    for (std::size_t v = 0; v < 32; ++v)
        if (t.vertices >> v & 1) os << (first ? "" : " ") << v, first = false;
    os << "}\n";
    for (const auto& c : t.parts) os << to_text(c, depth + 1);
    return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration of small valid pairs.

// All connected digraphs on exactly n vertices, as arc lists over the
// n(n−1) ordered pairs. No isomorphism reduction.
inline void enumerate_digraphs(std::size_t n, const std::function<void(const std::vector<std::pair<Vertex, Vertex>>&)>& cb) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b)
            if (a != b) pairs.emplace_back(a, b);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (std::uint64_t sub = 0; sub < total; ++sub) {
        Small d;
        d.n = n;
        d.out.assign(n, 0);
        d.in.assign(n, 0);
        arcs.clear();
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (sub >> k & 1) {
                arcs.push_back(pairs[k]);
                d.out[pairs[k].first] |= Mask{1} << pairs[k].second;
                d.in[pairs[k].second] |= Mask{1} << pairs[k].first;
            }
        if (detail::connected(d, d.all())) cb(arcs);
    }
}

struct EnumOptions {
    Colour s = 2;
    std::uint64_t max_slack = 1;         // Σ_c f_c − d per side, 0..max_slack
    std::uint64_t entry_slack = 1;       // every entry ≤ degree + entry_slack
    std::size_t max_loose_sides = 1000;  // sides with positive slack, over all vertices
};

// All budget tables for a fixed digraph meeting (⋆) within the options.
inline void enumerate_budgets(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& arcs, const EnumOptions& opt,
                              const std::function<void(const std::vector<BudgetLine>&)>& cb) {
    std::vector<std::uint64_t> deg(2 * n, 0);  // [2v] in, [2v+1] out
    for (auto [a, b] : arcs) ++deg[2 * b], ++deg[2 * a + 1];
    const std::size_t s = opt.s;
    // Per side: every composition of d + t into s parts, each ≤ d + entry_slack.
    std::vector<std::vector<std::vector<std::uint64_t>>> choices(2 * n);
    std::vector<std::vector<char>> loose(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        const std::uint64_t cap = deg[k] + opt.entry_slack;
        for (std::uint64_t t = 0; t <= opt.max_slack; ++t) {
            std::vector<std::uint64_t> part(s, 0);
            std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t c, std::uint64_t left) {
                if (c + 1 == s) {
                    if (left <= cap) {
                        part[c] = left;
                        choices[k].push_back(part);
                        loose[k].push_back(t > 0);
                    }
                    return;
                }
                for (std::uint64_t x = 0; x <= std::min(left, cap); ++x) {
                    part[c] = x;
                    rec(c + 1, left - x);
                }
            };
            rec(0, deg[k] + t);
        }
    }
    std::vector<std::size_t> idx(2 * n, 0);
    std::vector<BudgetLine> lines;
    std::function<void(std::size_t, std::size_t)> go = [&](std::size_t k, std::size_t loose_used) {
        if (k == 2 * n) {
            lines.clear();
            for (Vertex v = 0; v < n; ++v)
                for (Colour c = 1; c <= s; ++c) {
                    const std::uint64_t in = choices[2 * v][idx[2 * v]][c - 1];
                    const std::uint64_t out = choices[2 * v + 1][idx[2 * v + 1]][c - 1];
                    if (in || out) lines.push_back({v, c, in, out});
                }
            cb(lines);
            return;
        }
        for (std::size_t j = 0; j < choices[k].size(); ++j) {
            const std::size_t used = loose_used + (loose[k][j] ? 1 : 0);
            if (used > opt.max_loose_sides) continue;
            idx[k] = j;
            go(k + 1, used);
        }
    };
    go(0, 0);
}

// Every connected digraph on 1..n_max vertices with every budget table.
inline void enumerate_instances(std::size_t n_max, const EnumOptions& opt, const std::function<void(const RawInstance&)>& cb) {
    RawInstance raw;
    raw.s = opt.s;
    for (std::size_t n = 1; n <= n_max; ++n) {
        raw.n = n;
        enumerate_digraphs(n, [&](const std::vector<std::pair<Vertex, Vertex>>& arcs) {
            raw.arcs = arcs;
            enumerate_budgets(n, arcs, opt, [&](const std::vector<BudgetLine>& lines) {
                raw.budgets = lines;
                cb(raw);
            });
        });
    }
}

}  // namespace bidicol::oracle

#endif
