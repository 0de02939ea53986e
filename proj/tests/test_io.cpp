#include <gtest/gtest.h>

#include <algorithm>

#include "bidicol.hpp"

using namespace bidicol;

namespace {

std::size_t parse_error_line(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "parsed:\n" << text;
    return 0;
}

ErrorCode error_code(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed:\n" << text;
    return ErrorCode::parse_error;
}

}  // namespace

TEST(Parse, Minimal) {
    const RawInstance raw = parse_instance("# a digon\ndicol 1\nn 2 s 1\n\narc 0 1\narc 1 0\nbudget 0 1 1 1\nbudget 1 1 1 1\n");
    EXPECT_EQ(raw.n, 2u);
    EXPECT_EQ(raw.s, 1u);
    EXPECT_EQ(raw.arcs.size(), 2u);
    EXPECT_EQ(raw.budgets.size(), 2u);
}

TEST(Parse, RoundTrip) {
    gen::Rng rng(83);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = 1 + rng() % 10;
        const RawInstance raw = gen::with_budgets(n, gen::random_digraph(n, 0.3, rng), 1 + rng() % 4, rng, rng() % 2);
        const std::string text = serialise(raw);
        EXPECT_EQ(serialise(parse_instance(text)), text);
    }
    RawInstance f1 = fixtures::one_sided_five();
    f1.budgets.push_back({0, 1, 2, 0});
    EXPECT_EQ(serialise(parse_instance(serialise(f1))), serialise(f1));
}

TEST(Parse, ErrorLines) {
    EXPECT_EQ(parse_error_line("dicol 2\n"), 1u);
    EXPECT_EQ(parse_error_line("\n# c\ndicol 1\nn 2\n"), 4u);
    EXPECT_EQ(parse_error_line("dicol 1\nn 2 s 1\narc 0 5\n"), 3u);
    EXPECT_EQ(parse_error_line("dicol 1\nn 2 s 1\nbudget 0 2 1 1\n"), 3u);
    EXPECT_EQ(parse_error_line("dicol 1\nn 2 s 1\nbudget 0 1 1 1\nbudget 0 1 0 1\n"), 4u);
    EXPECT_EQ(parse_error_line("dicol 1\nn 2 s 1\narc 0 1 7\n"), 3u);
    EXPECT_EQ(parse_error_line("dicol 1\nn 2 s 1\nedge 0 1\n"), 3u);
    EXPECT_EQ(parse_error_line("dicol 1\nn -2 s 1\n"), 2u);
    EXPECT_EQ(parse_error_line(""), 1u);
}

TEST(Parse, ArcErrors) {
    EXPECT_EQ(error_code("dicol 1\nn 2 s 1\narc 0 1\narc 0 1\n"), ErrorCode::duplicate_arc);
    EXPECT_EQ(error_code("dicol 1\nn 2 s 1\narc 1 1\n"), ErrorCode::self_loop);
}

TEST(Colouring, ParseAndSerialise) {
    const Colouring col{1, 3, 2};
    EXPECT_EQ(parse_colouring(serialise_colouring(col), 3), col);
    EXPECT_EQ(parse_colouring("colour 1 2\n", 3), (Colouring{no_colour, 2, no_colour}));
    EXPECT_THROW(parse_colouring("colour 3 1\n", 3), ParseError);
    EXPECT_THROW(parse_colouring("colour 0 1\ncolour 0 2\n", 3), ParseError);
}

TEST(ToRaw, LivePartRenumbered) {
    Instance inst = make_instance(fixtures::constant_budgets(4, gen::bidirected_cycle(4), 2));
    colour_vertex(inst, 1, 1);
    std::vector<Vertex> global;
    const RawInstance rest = to_raw(inst, &global);
    EXPECT_EQ(rest.n, 3u);
    std::sort(global.begin(), global.end());
    EXPECT_EQ(global, (std::vector<Vertex>{0, 2, 3}));
    EXPECT_EQ(rest.arcs.size(), 4u);
}

TEST(SolveFile, ComponentsAreIndependent) {
    RawInstance two_c3 = fixtures::constant_budgets(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}, 1);
    const FileOutcome h = solve_file(two_c3);
    EXPECT_EQ(h.kind, SolveOutcome::hard);
    EXPECT_EQ(h.per_component, (std::vector<SolveOutcome::Kind>{SolveOutcome::hard, SolveOutcome::hard}));

    two_c3.s = 2;
    for (Vertex v = 3; v < 6; ++v) two_c3.budgets.push_back({v, 2, 1, 1});
    const FileOutcome mixed = solve_file(two_c3);
    EXPECT_EQ(mixed.kind, SolveOutcome::hard);
    EXPECT_EQ(mixed.per_component[1], SolveOutcome::coloured);

    for (Vertex v = 0; v < 3; ++v) two_c3.budgets.push_back({v, 2, 1, 1});
    const FileOutcome ok = solve_file(two_c3);
    ASSERT_EQ(ok.kind, SolveOutcome::coloured);
    EXPECT_TRUE(verify_file(two_c3, ok.colouring));
    EXPECT_FALSE(verify_file(two_c3, Colouring(6, 1)));
}

TEST(SolveFile, DeficitReportsGlobalVertex) {
    const RawInstance raw{4, 1, {{0, 1}, {2, 3}}, {{0, 1, 0, 1}, {1, 1, 1, 0}, {2, 1, 0, 1}}};
    const FileOutcome r = solve_file(raw);
    EXPECT_EQ(r.kind, SolveOutcome::invalid);
    EXPECT_EQ(r.reason, "budget-deficit 3");
}
