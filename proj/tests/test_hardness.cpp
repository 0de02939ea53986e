#include <gtest/gtest.h>

#include <algorithm>

#include "bidicol.hpp"

using namespace bidicol;

namespace {

// Directed triangles {0,1,2} and {0,3,4} glued at 0, one colour each.
RawInstance two_triangles() {
    return {5, 2, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}},
            {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}, {3, 2, 1, 1}, {4, 2, 1, 1}}};
}

std::size_t block_containing(const BlockForest& f, Vertex v, Vertex cut) {
    for (std::size_t l = 0; l < f.size(); ++l) {
        const BlockView b = f.block(l);
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end() &&
            std::find(b.vertices.begin(), b.vertices.end(), cut) != b.vertices.end())
            return l;
    }
    return f.size();
}

// The block as its own pair, with the cut vertex's budget replaced.
RawInstance block_pair(const Instance& inst, const BlockView& b, Vertex x, const std::vector<BudgetLine>& at_x) {
    RawInstance raw;
    raw.n = b.vertices.size();
    raw.s = inst.colour_count();
    for (ArcId a : b.arcs)
        raw.arcs.emplace_back(static_cast<Vertex>(b.index_of(inst.graph.arc(a).tail)),
                              static_cast<Vertex>(b.index_of(inst.graph.arc(a).head)));
    for (std::size_t k = 0; k < b.vertices.size(); ++k) {
        if (b.vertices[k] == x) continue;
        for (const auto& e : inst.budgets.chain(b.vertices[k]))
            raw.budgets.push_back({static_cast<Vertex>(k), e.colour, e.value.in, e.value.out});
    }
    const auto xi = static_cast<Vertex>(b.index_of(x));
    for (BudgetLine l : at_x) raw.budgets.push_back({xi, l.c, l.in, l.out});
    return raw;
}

// Reading of the end-block patterns straight from the definition: some
// budget at x below f(x) makes B a hard base pair.
bool naive_hard_end_block(const Instance& inst, const BlockView& b, Vertex x) {
    const std::size_t xi = b.index_of(x);
    const Vertex u = b.vertices[xi == 0 ? 1 : 0];
    const BudgetTable& t = inst.budgets;
    // monochromatic: x gets its in-block degrees in u's only colour
    std::vector<Colour> u_colours;
    for (const auto& e : t.chain(u)) u_colours.push_back(e.colour);
    if (u_colours.size() == 1) {
        const Colour i = u_colours[0];
        const Budget dx{b.in_degree[xi], b.out_degree[xi]};
        if (t.get(x, i).covers(dx) &&
            oracle::definitional_hard(block_pair(inst, b, x, {{0, i, dx.in, dx.out}})))
            return true;
    }
    // bicycle or complete: x gets exactly u's budget
    std::vector<BudgetLine> fu;
    for (const auto& e : t.chain(u)) {
        if (!t.get(x, e.colour).covers(e.value)) return false;
        fu.push_back({0, e.colour, e.value.in, e.value.out});
    }
    return oracle::definitional_hard(block_pair(inst, b, x, fu)).has_value();
}

}  // namespace

TEST(ClassifyEndBlock, MonochromaticTriangle) {
    const Instance inst = make_instance(two_triangles());
    const BlockForest f = blocks_with_order(inst.graph);
    const BlockView b = f.block(block_containing(f, 1, 0));
    EXPECT_EQ(classify_end_block(inst, b, 0), (EndBlockKind{EndBlockKind::mono, 1, no_colour}));
    const BlockView c = f.block(block_containing(f, 3, 0));
    EXPECT_EQ(classify_end_block(inst, c, 0), (EndBlockKind{EndBlockKind::mono, 2, no_colour}));
}

TEST(ClassifyEndBlock, ThreeBlockHardBlocks) {
    const Instance inst = make_instance(fixtures::three_block_hard());
    const BlockForest f = blocks_with_order(inst.graph);
    ASSERT_EQ(f.size(), 3u);
    const BlockView ring = f.block(block_containing(f, 8, 6));
    EXPECT_EQ(classify_end_block(inst, ring, 6), (EndBlockKind{EndBlockKind::bicycle, 1, 3}));
    const BlockView k4 = f.block(block_containing(f, 0, 3));
    EXPECT_EQ(classify_end_block(inst, k4, 3).kind, EndBlockKind::complete);
}

TEST(ContractEndBlock, TwoTriangles) {
    Instance inst = make_instance(two_triangles());
    const BlockForest f = blocks_with_order(inst.graph);
    const BlockView b = f.block(block_containing(f, 3, 0));
    contract_end_block(inst, b, 0, classify_end_block(inst, b, 0));
    EXPECT_EQ(inst.budgets.get(0, 2), (Budget{0, 0}));
    EXPECT_EQ(inst.budgets.get(0, 1), (Budget{1, 1}));
    EXPECT_TRUE(is_tight(inst));
    EXPECT_TRUE(is_hard_biconnected(inst));
    EXPECT_FALSE(oracle::brute_force_dicolourable(two_triangles()));
}

TEST(ContractEndBlock, ThreeBlockHardBicycle) {
    Instance inst = make_instance(fixtures::three_block_hard());
    const BlockForest f = blocks_with_order(inst.graph);
    const BlockView ring = f.block(block_containing(f, 8, 6));
    contract_end_block(inst, ring, 6, classify_end_block(inst, ring, 6));
    EXPECT_EQ(inst.budgets.get(6, 1), (Budget{2, 0}));  // 6 has no out-arcs off the ring
    EXPECT_EQ(inst.budgets.get(6, 3), (Budget{0, 0}));
    EXPECT_TRUE(is_tight(inst));
}

TEST(ContractEndBlock, DigonBlock) {
    // Digon {0,1} hanging off directed triangle {0,2,3}.
    Instance inst = make_instance(
        {4, 2, {{0, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 0}}, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 2, 1, 1}, {2, 1, 1, 1}, {3, 1, 1, 1}}});
    const BlockForest f = blocks_with_order(inst.graph);
    const BlockView b = f.block(block_containing(f, 1, 0));
    const EndBlockKind kind = classify_end_block(inst, b, 0);
    EXPECT_EQ(kind.kind, EndBlockKind::mono);
    contract_end_block(inst, b, 0, kind);
    EXPECT_EQ(inst.budgets.get(0, 2), (Budget{0, 0}));
}

TEST(ContractEndBlock, RefusesNotHard) {
    Instance inst = make_instance(two_triangles());
    const BlockForest f = blocks_with_order(inst.graph);
    EXPECT_THROW(contract_end_block(inst, f.block(1), f.block(1).cut, EndBlockKind{}), Error);
}

TEST(ReduceToBlock, BiconnectedIsIdentity) {
    Instance inst = make_instance(fixtures::constant_budgets(3, gen::directed_cycle(3), 1));
    reduce_to_block(inst);
    EXPECT_EQ(inst.graph.vertex_count(), 3u);
    EXPECT_TRUE(std::all_of(inst.colouring.begin(), inst.colouring.end(), [](Colour c) { return c == no_colour; }));
}

TEST(ReduceToBlock, TwoTrianglesLeaveMonochromaticTriangle) {
    Instance inst = make_instance(two_triangles());
    reduce_to_block(inst);
    EXPECT_EQ(inst.graph.vertex_count(), 3u);
    EXPECT_TRUE(inst.graph.alive(0));
    EXPECT_EQ(detail::chain_length(inst.budgets, 0, 3), 1u);
    EXPECT_TRUE(is_hard_biconnected(inst));
}

TEST(ReduceToBlock, ThreeBlockHardIsHard) {
    Instance inst = make_instance(fixtures::three_block_hard());
    reduce_to_block(inst);
    EXPECT_EQ(blocks_with_order(inst.graph).size(), 1u);
    EXPECT_TRUE(is_hard_biconnected(inst));
}

TEST(IsHardBiconnected, BaseCases) {
    EXPECT_TRUE(is_hard_biconnected(make_instance(fixtures::constant_budgets(3, gen::directed_cycle(3), 1))));
    EXPECT_TRUE(is_hard_biconnected(make_instance(fixtures::constant_budgets(5, gen::bidirected_cycle(5), 2))));
    EXPECT_FALSE(is_hard_biconnected(make_instance(fixtures::constant_budgets(4, gen::bidirected_cycle(4), 2))));
    EXPECT_TRUE(is_hard(make_instance(fixtures::constant_budgets(4, gen::complete_bidirected(4), 3))));
}

TEST(IsHard, LoosePairIsRejected) {
    const Instance path = make_instance(fixtures::constant_budgets(3, {{0, 1}, {1, 2}}, 1));
    EXPECT_THROW(is_hard(path), Error);
}

// Tight pairs with s = 2, all of them up to three vertices and every 53rd on
// four: is_hard, the recursive definition and brute force agree;
// contractions keep the pair tight; end-block classification matches the
// definition.
TEST(IsHard, SmallTightPairsMatchDefinition) {
    oracle::EnumOptions opt;
    opt.s = 2;
    opt.max_slack = 0;
    opt.entry_slack = 0;
    std::size_t seen = 0, pairs = 0, hard = 0, end_blocks = 0;
    oracle::enumerate_instances(4, opt, [&](const RawInstance& raw) {
        if (raw.n == 4 && ++seen % 53 != 0) return;
        ++pairs;
        const Instance inst = make_instance(raw);
        const bool h = is_hard(inst);
        hard += h;
        ASSERT_EQ(h, !oracle::brute_force_dicolourable(raw).has_value()) << serialise(raw);
        ASSERT_EQ(h, oracle::definitional_hard(raw).has_value()) << serialise(raw);

        const BlockForest f = blocks_with_order(inst.graph);
        if (f.size() > 1) {
            ++end_blocks;
            const BlockView b = f.block(f.size() - 1);
            ASSERT_EQ(classify_end_block(inst, b, b.cut).kind != EndBlockKind::not_hard,
                      naive_hard_end_block(inst, b, b.cut))
                << serialise(raw);
        }
        Instance scratch = inst;
        reduce_to_block(scratch, [&](const Instance& cur, const char* step) {
            if (std::string(step) == "contract_end_block") EXPECT_TRUE(is_tight(cur)) << serialise(raw);
        });
    });
    EXPECT_GT(hard, 0u);
    EXPECT_GT(end_blocks, 0u);
    RecordProperty("pairs", static_cast<int>(pairs));
}

TEST(IsHard, RandomJoinsAreHard) {
    gen::Rng rng(9);
    for (int round = 0; round < 500; ++round) {
        const RawInstance raw = gen::hard_join(1 + rng() % 4, 1 + rng() % 3, 5, rng);
        const Instance inst = make_instance(raw);
        ASSERT_TRUE(is_tight(inst));
        EXPECT_TRUE(is_hard(inst)) << serialise(raw);
        if (raw.n <= 7) EXPECT_FALSE(oracle::brute_force_dicolourable(raw)) << serialise(raw);
    }
}
