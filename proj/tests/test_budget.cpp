#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "bidicol/budget.hpp"

using namespace bidicol;

namespace {

std::vector<Colour> chain_colours(const BudgetTable& t, Vertex v) {
    std::vector<Colour> out;
    for (const auto& e : t.chain(v)) out.push_back(e.colour);
    return out;
}

}  // namespace

TEST(Budget, SetThenGet) {
    BudgetTable t(2, 5);
    t.set(0, 3, {1, 1});
    EXPECT_EQ(t.get(0, 3), (Budget{1, 1}));
    EXPECT_EQ(t.get(0, 2), (Budget{0, 0}));
    EXPECT_EQ(t.get(1, 3), (Budget{0, 0}));
}

TEST(Budget, ZeroLeavesChain) {
    BudgetTable t(1, 5);
    t.set(0, 3, {1, 1});
    t.set(0, 3, {0, 0});
    EXPECT_TRUE(chain_colours(t, 0).empty());
    EXPECT_EQ(t.nonzero_entries(), 0u);
}

TEST(Budget, ChainIsSorted) {
    BudgetTable t(1, 9);
    t.set(0, 5, {0, 1});
    t.set(0, 2, {1, 0});
    EXPECT_EQ(chain_colours(t, 0), (std::vector<Colour>{2, 5}));
}

TEST(Budget, DecrementClampsAndUnlinks) {
    BudgetTable t(3, 4);
    t.set(0, 1, {1, 0});
    t.decrement(0, 1, Side::in);
    EXPECT_EQ(t.get(0, 1), (Budget{0, 0}));
    EXPECT_TRUE(chain_colours(t, 0).empty());

    t.set(1, 1, {0, 2});
    t.decrement(1, 1, Side::in);
    EXPECT_EQ(t.get(1, 1), (Budget{0, 2}));

    t.set(2, 1, {2, 1});
    t.decrement(2, 1, Side::out);
    t.decrement(2, 1, Side::out);
    EXPECT_EQ(t.get(2, 1), (Budget{2, 0}));
}

TEST(Budget, FirstNonzero) {
    BudgetTable t(2, 7);
    EXPECT_EQ(t.first_nonzero(0), no_colour);
    t.set(0, 1, {0, 1});
    t.set(0, 4, {1, 1});
    EXPECT_EQ(t.first_nonzero(0), 1u);
    t.decrement(0, 1, Side::out);
    EXPECT_EQ(t.first_nonzero(0), 4u);
    t.set(1, 7, {1, 0});
    EXPECT_EQ(t.first_nonzero(1), 7u);
}

TEST(Budget, IndexOutOfRange) {
    BudgetTable t(2, 3);
    try {
        t.set(0, 4, {1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::index_out_of_range);
    }
    EXPECT_THROW(t.set(2, 1, {1, 1}), Error);
    EXPECT_THROW(t.set(0, 0, {1, 1}), Error);
}

TEST(Budget, HugeColourCountCostsNothing) {
    BudgetTable t(3, Colour{1} << 30);
    t.set(1, (Colour{1} << 30) - 1, {1, 2});
    EXPECT_EQ(t.first_nonzero(1), (Colour{1} << 30) - 1);
    EXPECT_EQ(t.nonzero_entries(), 1u);
}

// Random set/decrement sequences against a dense shadow table.
TEST(Budget, FuzzAgainstDenseShadow) {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 20;
        const Colour s = static_cast<Colour>(1 + rng() % 20);
        BudgetTable t(n, s);
        std::vector<std::vector<Budget>> shadow(n, std::vector<Budget>(s + 1));
        for (int step = 0; step < 400; ++step) {
            const auto v = static_cast<Vertex>(rng() % n);
            const auto c = static_cast<Colour>(1 + rng() % s);
            if (rng() % 3 == 0) {
                const Budget b{rng() % 3, rng() % 3};
                t.set(v, c, b);
                shadow[v][c] = b;
            } else {
                const Side side = rng() & 1 ? Side::in : Side::out;
                t.decrement(v, c, side);
                if (shadow[v][c][side] > 0) --shadow[v][c][side];
            }
        }
        std::size_t nonzero = 0;
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Colour> want;
            Budget total;
            for (Colour c = 1; c <= s; ++c) {
                EXPECT_EQ(t.get(v, c), shadow[v][c]);
                if (!shadow[v][c].zero()) want.push_back(c);
                total += shadow[v][c];
            }
            EXPECT_EQ(chain_colours(t, v), want);
            EXPECT_EQ(t.total(v), total);
            nonzero += want.size();
        }
        EXPECT_EQ(t.nonzero_entries(), nonzero);
    }
}
