#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "bidicol.hpp"

using namespace bidicol;

namespace {

// Two vertices a, b joined by three internally disjoint paths of length 3.
// Vertices: a = 0, b = 1, path k has interior 2 + 2k, 3 + 2k.
gen::ArcList theta_edges() {
    gen::ArcList e;
    for (Vertex k = 0; k < 3; ++k) {
        const Vertex p = 2 + 2 * k, q = 3 + 2 * k;
        e.insert(e.end(), {{0, p}, {p, q}, {q, 1}});
    }
    return e;
}

using Edge = std::pair<Vertex, Vertex>;
Edge undirected(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

// Checks every structural promise of a decomposition of g.
void expect_valid_csp(const Digraph& g, const CSPDecomposition& csp) {
    ASSERT_FALSE(csp.cells.empty());
    EXPECT_EQ(csp.cells[0].kind, CellKind::cycle);
    std::set<Edge> all, covered;
    for (Vertex v : g.vertices())
        for (ArcId a : g.out_arcs(v)) all.insert(undirected(v, g.arc(a).head));
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < csp.cells.size(); ++i) {
        const auto vs = csp.vertices(i);
        const Cell& c = csp.cells[i];
        EXPECT_EQ(c.position, seen.size()) << "cell " << i;
        if (i > 0) EXPECT_GE(c.position, csp.cells[i - 1].position);
        for (auto [a, b] : csp.edges(i)) {
            EXPECT_TRUE(all.count(undirected(a, b))) << "cell " << i << " edge not in graph";
            EXPECT_TRUE(covered.insert(undirected(a, b)).second) << "edge in two cells";
        }
        switch (c.kind) {
            case CellKind::cycle:
                EXPECT_EQ(i, 0u);
                EXPECT_GE(vs.size(), 3u);
                break;
            case CellKind::star:
                EXPECT_FALSE(seen.count(vs[0])) << "star centre seen before";
                EXPECT_GE(vs.size(), 3u) << "star centre of degree < 2";
                for (std::size_t k = 1; k < vs.size(); ++k) EXPECT_TRUE(seen.count(vs[k])) << "new star leaf";
                break;
            case CellKind::path:
                EXPECT_GE(vs.size(), 4u) << "path shorter than 3";
                EXPECT_TRUE(seen.count(vs.front()) && seen.count(vs.back()));
                for (std::size_t k = 1; k + 1 < vs.size(); ++k) EXPECT_FALSE(seen.count(vs[k]));
                break;
        }
        seen.insert(vs.begin(), vs.end());
    }
    EXPECT_EQ(covered, all);
    EXPECT_EQ(seen.size(), g.vertex_count());
}

// A pair with a brute-force colouring on every component of what is left.
bool live_part_colourable(const Instance& cur) {
    if (cur.graph.vertex_count() == 0) return true;
    for (const Component& c : split_components(to_raw(cur)))
        if (!oracle::brute_force_dicolourable(c.raw)) return false;
    return true;
}

// Two-colour pair for the given digraph; non-hard and biconnected pairs only.
std::optional<Instance> two_colour_candidate(std::size_t n, const gen::ArcList& arcs, gen::Rng& rng) {
    RawInstance raw{n, 2, arcs, gen::split_budgets(n, arcs, rng)};
    Instance inst = make_instance(raw);
    if (!is_valid(inst) || blocks_with_order(inst.graph).size() != 1 || is_hard(inst)) return std::nullopt;
    return inst;
}

}  // namespace

TEST(ReduceToTwo, TwoColoursPassThrough) {
    Instance inst = make_instance(fixtures::constant_budgets(4, gen::bidirected_cycle(4), 2));
    const auto r = reduce_to_two(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->chosen, 1u);
    for (Vertex v = 0; v < 4; ++v)
        for (Colour c = 1; c <= 2; ++c) EXPECT_EQ(r->two.budgets.get(v, c), inst.budgets.get(v, c));
}

TEST(ReduceToTwo, AsymmetricEntryPicksRuleOne) {
    RawInstance raw{4, 3, gen::directed_cycle(4), {{0, 1, 1, 0}, {0, 2, 0, 1}}};
    for (Vertex v = 1; v < 4; ++v) raw.budgets.push_back({v, 1, 0, 1}), raw.budgets.push_back({v, 3, 1, 0});
    Instance inst = make_instance(raw);
    const auto r = reduce_to_two(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->rule, 1);
    EXPECT_EQ(r->chosen, 1u);
    EXPECT_EQ(r->two.budgets.get(0, 2), (Budget{0, 1}));
}

TEST(ReduceToTwo, NonConstantPicksRuleTwo) {
    // Bidirected C4, symmetric but vertex 0 differs.
    RawInstance raw{4, 3, gen::bidirected_cycle(4), {{0, 2, 2, 2}}};
    for (Vertex v = 1; v < 4; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 3, 1, 1});
    Instance inst = make_instance(raw);
    const auto r = reduce_to_two(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->rule, 2);
    EXPECT_EQ(r->chosen, 1u);
}

TEST(ReduceToTwo, ConstantSymmetricPicksSmallestColour) {
    RawInstance raw{4, 5, gen::bidirected_cycle(4), {}};
    for (Vertex v = 0; v < 4; ++v) raw.budgets.push_back({v, 2, 1, 1}), raw.budgets.push_back({v, 5, 1, 1});
    Instance inst = make_instance(raw);
    const auto r = reduce_to_two(inst);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->rule, 3);
    EXPECT_EQ(r->chosen, 2u);
}

TEST(ReduceToTwo, LoosePairIsSolvedDirectly) {
    RawInstance raw = fixtures::constant_budgets(4, gen::bidirected_cycle(4), 3);
    Instance inst = make_instance(raw);
    EXPECT_FALSE(reduce_to_two(inst));
    EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring));
}

TEST(LiftTwoColouring, RandomThreeColourPairsVerify) {
    gen::Rng rng(31);
    int lifted = 0;
    for (int round = 0; round < 3000 && lifted < 500; ++round) {
        const std::size_t n = 3 + rng() % 4;
        const auto arcs = gen::cycle_with_chords(n, rng() % 4, 0.5, rng);
        const RawInstance raw = gen::with_budgets(n, arcs, 3, rng);
        const Instance original = make_instance(raw);
        if (is_hard(original)) continue;
        Instance work = original;
        auto two = reduce_to_two(work);
        if (!two) continue;
        solve_two_colour_biconnected(two->two);
        lift_two_colouring(work, two->chosen, two->two.colouring);
        EXPECT_TRUE(verify_dicolouring(original, work.colouring)) << serialise(raw);
        ++lifted;
    }
    EXPECT_GE(lifted, 500);
}

TEST(PropertyE, Examples) {
    const Instance c4 = make_instance(fixtures::constant_budgets(4, gen::bidirected_cycle(4), 2));
    EXPECT_TRUE(property_E(c4));
    Instance anti = make_instance(fixtures::antidirected_split(4));
    EXPECT_TRUE(property_E(anti));
    EXPECT_FALSE(solve_if_not_E(anti));
}

TEST(PropertyE, DeficientSideIsSolved) {
    // Bidirected C4; vertex 0 has f_1⁻ = 0 against in-degree 2.
    RawInstance raw{4, 2, gen::bidirected_cycle(4), {{0, 1, 0, 1}, {0, 2, 2, 1}}};
    for (Vertex v = 1; v < 4; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 2, 1, 1});
    ASSERT_TRUE(oracle::brute_force_dicolourable(raw));
    Instance inst = make_instance(raw);
    EXPECT_FALSE(property_E(inst));
    EXPECT_TRUE(solve_if_not_E(inst));
    EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring));
}

TEST(PropertyDS, Examples) {
    Instance digon_free = make_instance(fixtures::antidirected_split(6));
    EXPECT_FALSE(solve_if_not_DS(digon_free));
    Instance c4 = make_instance(fixtures::constant_budgets(4, gen::bidirected_cycle(4), 2));
    EXPECT_FALSE(solve_if_not_DS(c4));

    RawInstance raw{4, 2, gen::complete_bidirected(4), {}};
    for (Vertex v = 0; v < 4; ++v) raw.budgets.push_back({v, 1, 1, 2}), raw.budgets.push_back({v, 2, 2, 1});
    Instance k4 = make_instance(raw);
    EXPECT_TRUE(property_E(k4));
    EXPECT_FALSE(property_DS(k4));
    EXPECT_TRUE(solve_if_not_DS(k4));
    EXPECT_TRUE(verify_dicolouring(make_instance(raw), k4.colouring));
}

// Every tight symmetric two-colour table on bidirected K3 and K4.
TEST(SolveComplete, AllSymmetricTables) {
    int solved = 0, hard = 0;
    for (std::size_t n = 3; n <= 4; ++n) {
        const std::uint64_t d = n - 1;
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k) total *= d + 1;
        for (std::size_t code = 0; code < total; ++code) {
            RawInstance raw{n, 2, gen::complete_bidirected(n), {}};
            std::size_t c = code;
            for (Vertex v = 0; v < n; ++v, c /= d + 1) {
                const std::uint64_t a = c % (d + 1);
                raw.budgets.push_back({v, 1, a, a});
                raw.budgets.push_back({v, 2, d - a, d - a});
            }
            Instance inst = make_instance(raw);
            if (is_hard(inst)) {
                ++hard;
                EXPECT_THROW(solve_complete(inst), Error);
                continue;
            }
            ASSERT_TRUE(oracle::brute_force_dicolourable(raw));
            solve_complete(inst);
            EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring)) << serialise(raw);
            ++solved;
        }
    }
    EXPECT_GT(solved, 0);
    EXPECT_GT(hard, 0);
}

TEST(SolveCycle, BidirectedEvenCycleAlternates) {
    const RawInstance raw = fixtures::constant_budgets(6, gen::bidirected_cycle(6), 2);
    Instance inst = make_instance(raw);
    solve_cycle(inst);
    for (Vertex v = 0; v < 6; ++v) EXPECT_NE(inst.colouring[v], inst.colouring[(v + 1) % 6]);
    EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring));
}

TEST(SolveCycle, BidirectedOddCycleRefused) {
    Instance inst = make_instance(fixtures::constant_budgets(5, gen::bidirected_cycle(5), 2));
    EXPECT_THROW(solve_cycle(inst), Error);
}

TEST(SolveCycle, AntidirectedSourcesAndSinks) {
    const RawInstance raw = fixtures::antidirected_split(4);
    Instance inst = make_instance(raw);
    solve_cycle(inst);
    EXPECT_EQ(inst.colouring, (Colouring{1, 2, 1, 2}));
    EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring));
    EXPECT_FALSE(verify_dicolouring(make_instance(raw), Colouring(4, 1)));
}

TEST(SolveCycle, RandomCyclesVerify) {
    gen::Rng rng(41);
    int solved = 0;
    for (int round = 0; round < 4000; ++round) {
        const std::size_t n = 3 + rng() % 8;
        const auto arcs = gen::cycle_with_chords(n, 0, (rng() % 3) * 0.5, rng);
        auto inst = two_colour_candidate(n, arcs, rng);
        if (!inst) continue;
        const Instance original = *inst;
        solve_cycle(*inst);
        EXPECT_TRUE(verify_dicolouring(original, inst->colouring)) << serialise(to_raw(original));
        ++solved;
    }
    EXPECT_GT(solved, 1000);
}

TEST(SolveSubwheel, BidirectedEvenRim) {
    // Rim C6 (1..6) plus hub 0, all digons; rim f_1 = (1,1), f_2 = (2,2).
    for (std::uint64_t hub1 = 1; hub1 <= 5; ++hub1) {
        gen::ArcList arcs;
        for (Vertex v = 1; v <= 6; ++v) {
            const Vertex w = v % 6 + 1;
            arcs.insert(arcs.end(), {{0, v}, {v, 0}, {v, w}, {w, v}});
        }
        RawInstance raw{7, 2, arcs, {{0, 1, hub1, hub1}, {0, 2, 6 - hub1, 6 - hub1}}};
        for (Vertex v = 1; v <= 6; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 2, 2, 2});
        Instance inst = make_instance(raw);
        ASSERT_FALSE(is_hard(inst));
        solve_subwheel(inst, 0);
        EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring)) << "hub f_1 = " << hub1;
    }
}

TEST(SolveSubwheel, DirectedRim) {
    // Rim directed C5 (1..5), hub 0 joined by digons; rim f_1 = f_2 = (1,1).
    for (std::uint64_t hub2 = 1; hub2 <= 4; ++hub2) {
        gen::ArcList arcs;
        for (Vertex v = 1; v <= 5; ++v) arcs.insert(arcs.end(), {{0, v}, {v, 0}, {v, static_cast<Vertex>(v % 5 + 1)}});
        RawInstance raw{6, 2, arcs, {{0, 1, 5 - hub2, 5 - hub2}, {0, 2, hub2, hub2}}};
        for (Vertex v = 1; v <= 5; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 2, 1, 1});
        Instance inst = make_instance(raw);
        ASSERT_FALSE(is_hard(inst));
        solve_subwheel(inst, 0);
        EXPECT_TRUE(verify_dicolouring(make_instance(raw), inst.colouring)) << "hub f_2 = " << hub2;
    }
}

// Random wheels, some with a missing spoke, with (E)-friendly budgets.
TEST(SolveSubwheel, RandomWheelsVerify) {
    gen::Rng rng(43);
    int solved = 0;
    for (int round = 0; round < 6000; ++round) {
        const std::size_t k = 3 + rng() % 6;
        gen::ArcList arcs = gen::wheel(k, (rng() % 3) * 0.5, rng);
        if (rng() % 3 == 0) {
            const Vertex drop = static_cast<Vertex>(1 + rng() % k);
            std::erase_if(arcs, [&](const std::pair<Vertex, Vertex>& a) {
                return (a.first == 0 && a.second == drop) || (a.first == drop && a.second == 0);
            });
        }
        auto inst = two_colour_candidate(k + 1, arcs, rng);
        if (!inst) continue;
        const Instance original = *inst;
        ASSERT_NO_THROW(solve_subwheel(*inst, 0)) << serialise(to_raw(original));
        EXPECT_TRUE(verify_dicolouring(original, inst->colouring)) << serialise(to_raw(original));
        ++solved;
    }
    EXPECT_GT(solved, 1000);
}

TEST(ColourPathEar, RuleBranches) {
    // Bidirected theta graph. Interior vertices f_1 = f_2 = (1,1).
    for (std::uint64_t end1 : {1u, 2u}) {
        RawInstance raw{8, 2, gen::bidirect(theta_edges()), {}};
        for (Vertex v : {0u, 1u}) raw.budgets.push_back({v, 1, end1, end1}), raw.budgets.push_back({v, 2, 3 - end1, 3 - end1});
        for (Vertex v = 2; v < 8; ++v) raw.budgets.push_back({v, 1, 1, 1}), raw.budgets.push_back({v, 2, 1, 1});
        Instance inst = make_instance(raw);
        const Vertex path[] = {0, 6, 7, 1};
        colour_path_ear(inst, path);
        EXPECT_EQ(inst.colouring[6], end1 == 1 ? 1u : 2u);
        EXPECT_NE(inst.colouring[7], no_colour);
        EXPECT_TRUE(live_part_colourable(inst)) << "end f_1 = " << end1;
    }
}

TEST(ColourStarCentre, RefusesSubwheelCentre) {
    gen::Rng rng(1);
    RawInstance raw{7, 2, {}, {}};
    for (Vertex v = 1; v <= 6; ++v) {
        const Vertex w = v % 6 + 1;
        raw.arcs.insert(raw.arcs.end(), {{0, v}, {v, 0}, {v, w}, {w, v}});
    }
    raw.budgets = gen::split_budgets(7, raw.arcs, rng);
    Instance inst = make_instance(raw);
    EXPECT_THROW(colour_star_centre(inst, 0), Error);
}

TEST(CSP, Cycle) {
    const Digraph g = Digraph::build(6, gen::directed_cycle(6));
    const auto csp = csp_decompose(g);
    ASSERT_EQ(csp.cells.size(), 1u);
    EXPECT_EQ(csp.cells[0].kind, CellKind::cycle);
    expect_valid_csp(g, csp);
}

TEST(CSP, CompleteFour) {
    const Digraph g = Digraph::build(4, gen::complete_bidirected(4));
    const auto csp = csp_decompose(g);
    ASSERT_EQ(csp.cells.size(), 2u);
    EXPECT_EQ(csp.cells[0].kind, CellKind::cycle);
    EXPECT_EQ(csp.vertices(0).size(), 3u);
    EXPECT_EQ(csp.cells[1].kind, CellKind::star);
    EXPECT_EQ(csp.vertices(1).size(), 4u);
    expect_valid_csp(g, csp);
}

TEST(CSP, Theta) {
    const Digraph g = Digraph::build(8, theta_edges());
    const auto csp = csp_decompose(g);
    ASSERT_EQ(csp.cells.size(), 2u);
    EXPECT_EQ(csp.cells[1].kind, CellKind::path);
    EXPECT_EQ(csp.vertices(1).size(), 4u);
    expect_valid_csp(g, csp);
}

TEST(CSP, NotBiconnected) {
    const Digraph g = Digraph::build(3, {{0, 1}, {1, 2}});
    try {
        csp_decompose(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::not_biconnected);
    }
}

TEST(CSP, RandomBiconnectedGraphs) {
    gen::Rng rng(47);
    std::map<CellKind, int> kinds;
    for (int round = 0; round < 2000; ++round) {
        const std::size_t n = 3 + rng() % 40;
        const Digraph g = Digraph::build(n, gen::cycle_with_chords(n, rng() % (2 * n), 0.3, rng));
        const auto csp = csp_decompose(g);
        expect_valid_csp(g, csp);
        for (const Cell& c : csp.cells) ++kinds[c.kind];
        if (HasFailure()) break;
    }
    EXPECT_GT(kinds[CellKind::star], 0);
    EXPECT_GT(kinds[CellKind::path], 0);
}

// The general two-colour solver on random biconnected pairs: verdict and
// colouring checked against brute force, and every intermediate reduced pair
// is still colourable.
TEST(SolveTwoColourBiconnected, DifferentialWithStepSafety) {
    gen::Rng rng(53);
    std::map<std::string, int> steps;
    int solved = 0;
    for (int round = 0; round < 6000; ++round) {
        const std::size_t n = 4 + rng() % 4;
        const auto arcs = gen::cycle_with_chords(n, rng() % 5, (rng() % 3) * 0.5, rng);
        auto inst = two_colour_candidate(n, arcs, rng);
        if (!inst) continue;
        const Instance original = *inst;
        ASSERT_TRUE(oracle::brute_force_dicolourable(to_raw(original)));
        solve_two_colour_biconnected(*inst, [&](const Instance& cur, const char* step) {
            ++steps[step];
            EXPECT_TRUE(live_part_colourable(cur)) << step << "\n" << serialise(to_raw(original));
        });
        EXPECT_TRUE(verify_dicolouring(original, inst->colouring)) << serialise(to_raw(original));
        ++solved;
    }
    EXPECT_GT(solved, 2000);
    EXPECT_GT(steps["colour_star_centre"], 0);
    EXPECT_GT(steps["colour_path_ear"], 0);
}
