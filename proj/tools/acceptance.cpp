// Acceptance run: one PASS/FAIL line per criterion, details on the lines
// below it. Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "bidicol.hpp"

using namespace bidicol;

namespace {

struct Report {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 12) notes.push_back("fail: " + why);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

// Solve and brute force must agree; a colouring must verify.
bool agrees(const RawInstance& raw, Report& r, SolveOutcome* out_copy = nullptr, std::size_t cap = oracle::default_cap) {
    const Instance inst = make_instance(raw);
    const SolveOutcome out = solve(inst);
    if (out_copy) *out_copy = out;
    if (out.kind == SolveOutcome::invalid) {
        r.fail("unexpected INVALID (" + out.reason + ")\n" + serialise(raw));
        return false;
    }
    const bool colourable = oracle::brute_force_dicolourable(raw, cap).has_value();
    if ((out.kind == SolveOutcome::coloured) != colourable) {
        r.fail(std::string("verdict ") + (colourable ? "HARD, oracle colours it" : "COLOURED, oracle finds none") +
               "\n" + serialise(raw));
        return false;
    }
    if (out.kind == SolveOutcome::coloured && !verify_dicolouring(inst, out.colouring)) {
        r.fail("colouring rejected by verify_dicolouring\n" + serialise(raw));
        return false;
    }
    return true;
}

// n ≤ 3: every table with per-side sum in {d, d+1} and entries ≤ d+1.
// n = 4: the same entry bound with at most one side above tight.
Report criterion_1() {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t count = 0, hard = 0;
    auto check = [&](const RawInstance& raw) {
        ++count;
        SolveOutcome o;
        if (agrees(raw, r, &o) && o.kind == SolveOutcome::hard) ++hard;
    };
    oracle::EnumOptions full;
    full.s = 2;
    full.max_slack = 1;
    full.entry_slack = 1;
    oracle::enumerate_instances(3, full, check);
    const std::uint64_t small = count;
    oracle::EnumOptions four = full;
    four.max_loose_sides = 1;
    oracle::enumerate_digraphs(4, [&](const std::vector<std::pair<Vertex, Vertex>>& arcs) {
        oracle::enumerate_budgets(4, arcs, four, [&](const std::vector<BudgetLine>& lines) {
            check(RawInstance{4, 2, arcs, lines});
        });
    });
    r.note("n<=3 full tables: " + std::to_string(small) + " pairs; n=4 with <=1 loose side: " +
           std::to_string(count - small) + " pairs; hard " + std::to_string(hard) + "; " +
           fmt(seconds_since(t0), 1) + " s");
    return r;
}

Report criterion_2() {
    Report r;
    gen::Rng rng(2024);
    std::size_t count = 0, hard = 0, hard_checked = 0;
    std::size_t by_kind[6] = {};
    while (count < 12000) {
        const std::size_t kind = count % 6;
        const std::size_t n = gen::detail::uniform(rng, 2, 8);
        const auto s = static_cast<Colour>(gen::detail::uniform(rng, 1, 4));
        RawInstance raw;
        switch (kind) {
            case 0: raw = gen::with_budgets(n, gen::random_digraph(n, 0.35, rng), s, rng, rng() % 2); break;
            case 1: raw = gen::with_budgets(n, gen::bidirect(gen::random_graph(n, 0.5, rng)), s, rng, rng() % 2); break;
            case 2: {
                auto arcs = gen::cycle_with_chords(n, gen::detail::uniform(rng, 0, 4), 0.5, rng);
                raw = RawInstance{n, 2, arcs, gen::split_budgets(n, arcs, rng)};
                break;
            }
            case 3: {
                auto arcs = gen::wheel(std::max<std::size_t>(n - 1, 3), 0.5, rng);
                const std::size_t k = std::max<std::size_t>(n - 1, 3) + 1;
                raw = RawInstance{k, 2, arcs, gen::split_budgets(k, arcs, rng)};
                break;
            }
            case 4:
                raw = gen::hard_join(gen::detail::uniform(rng, 1, 3), s, 4, rng);
                if (raw.n > 8) continue;
                break;
            default: {
                // Brooks-style: s = Δ and (1,1) everywhere.
                const SimpleGraph g{n, gen::random_graph(n, 0.5, rng)};
                const Colour delta = std::max<Colour>(g.max_degree(), 1);
                raw = fixtures::constant_budgets(n, gen::bidirect(g.edges), delta);
            }
        }
        ++count;
        ++by_kind[kind];
        SolveOutcome o;
        if (!agrees(raw, r, &o)) continue;
        if (o.kind != SolveOutcome::hard) continue;
        ++hard;
        if (raw.n <= 6) {
            ++hard_checked;
            if (!oracle::definitional_hard(raw)) r.fail("HARD but no hardness tree\n" + serialise(raw));
        }
    }
    r.note(std::to_string(count) + " random valid pairs (" + std::to_string(by_kind[0]) + " per generator), " +
           std::to_string(hard) + " hard, " + std::to_string(hard_checked) + " hardness trees checked");
    return r;
}

Report criterion_3() {
    Report r;
    const RawInstance one = fixtures::one_sided_five();
    const Instance inst = make_instance(one);
    const Peeling p20 = bidegeneracy_order(inst.graph, [](Vertex) { return Budget{2, 0}; });
    const Peeling p02 = bidegeneracy_order(inst.graph, [](Vertex) { return Budget{0, 2}; });
    if (!p20.degenerate || p20.order.size() != 5) r.fail("five-vertex digraph is not strictly-(2,0)-bidegenerate");
    if (p02.degenerate || p02.witness.size() != 5) r.fail("five-vertex digraph (0,2) witness is not all five vertices");
    const RawInstance two = fixtures::three_block_hard();
    const SolveOutcome o = solve(make_instance(two));
    if (o.kind != SolveOutcome::hard) r.fail("three-block pair is not HARD");
    if (oracle::brute_force_dicolourable(two, two.n)) r.fail("three-block pair has a brute-force colouring");
    r.note("five-vertex digraph (2,0) ordering of " + std::to_string(p20.order.size()) + ", (0,2) witness of " +
           std::to_string(p02.witness.size()) + "; three-block pair " + (o.kind == SolveOutcome::hard ? "HARD" : "not HARD"));
    return r;
}

Report criterion_4() {
    Report r;
    int cases = 0;
    auto expect = [&](const RawInstance& raw, SolveOutcome::Kind want, const std::string& name) {
        ++cases;
        const Instance inst = make_instance(raw);
        const SolveOutcome o = solve(inst);
        if (o.kind != want) r.fail(name);
        else if (o.kind == SolveOutcome::coloured && !verify_dicolouring(inst, o.colouring)) r.fail(name + " colouring");
    };
    for (std::size_t n = 3; n <= 6; ++n)
        expect(fixtures::constant_budgets(n, gen::complete_bidirected(n), static_cast<Colour>(n - 1)),
               SolveOutcome::hard, "bidirected K" + std::to_string(n));
    for (std::size_t k = 1; k <= 4; ++k) {
        expect(fixtures::constant_budgets(2 * k + 1, gen::bidirected_cycle(2 * k + 1), 2), SolveOutcome::hard,
               "bidirected C" + std::to_string(2 * k + 1));
        expect(fixtures::constant_budgets(2 * k + 2, gen::bidirected_cycle(2 * k + 2), 2), SolveOutcome::coloured,
               "bidirected C" + std::to_string(2 * k + 2));
    }
    for (std::size_t n = 3; n <= 8; ++n)
        expect(fixtures::constant_budgets(n, gen::directed_cycle(n), 1), SolveOutcome::hard,
               "directed C" + std::to_string(n));
    r.note(std::to_string(cases) + " family members");
    return r;
}

Report criterion_5() {
    Report r;
    const BrooksResult pet = brooks(fixtures::petersen());
    if (pet.kind != BrooksResult::colouring || !is_proper_colouring(fixtures::petersen(), pet.colours, 3))
        r.fail("Petersen graph");
    if (brooks(fixtures::complete_graph(4)).kind != BrooksResult::complete) r.fail("K4");
    if (brooks(fixtures::cycle_graph(5)).kind != BrooksResult::odd_cycle) r.fail("C5");
    gen::Rng rng(5);
    std::size_t done = 0;
    std::uint32_t max_delta = 0;
    while (done < 1000) {
        const std::size_t n = gen::detail::uniform(rng, 5, 200);
        const double p = std::uniform_real_distribution<double>(1.5, 6.0)(rng) / static_cast<double>(n);
        const SimpleGraph g{n, gen::random_graph(n, std::min(p, 0.9), rng)};
        const std::uint32_t delta = g.max_degree();
        if (delta < 3 || g.edges.size() == n * (n - 1) / 2) continue;
        ++done;
        max_delta = std::max(max_delta, delta);
        const BrooksResult b = brooks(g);
        if (b.kind != BrooksResult::colouring || !is_proper_colouring(g, b.colours, delta))
            r.fail("random graph with n=" + std::to_string(n));
    }
    r.note("Petersen, K4, C5 and " + std::to_string(done) + " random graphs (max degree up to " +
           std::to_string(max_delta) + ")");
    return r;
}

Report criterion_6() {
    Report r;
    double touch0 = 0, time0 = 0, worst_touch = 1, worst_time = 1;
    for (int e = 14; e <= 20; ++e) {
        const std::size_t n = std::size_t{1} << e;
        gen::Rng rng(600 + static_cast<std::uint64_t>(e));
        const RawInstance raw = gen::with_budgets(n, gen::random_connected(n, 3 * n, rng), 2, rng);
        const BenchRow row = measure_solve(make_instance(raw), e <= 17 ? 7 : 3);
        const double units = static_cast<double>(row.n + row.m);
        const double touch = static_cast<double>(row.arc_touches) / units, time = row.nanoseconds / units;
        if (e == 14) touch0 = touch, time0 = time;
        worst_touch = std::max(worst_touch, touch / touch0);
        worst_time = std::max(worst_time, time / time0);
        r.note("n=2^" + std::to_string(e) + " m=" + std::to_string(row.m) + " touches/(n+m)=" + fmt(touch, 3) +
               " ns/(n+m)=" + fmt(time, 1));
    }
    if (worst_touch > 2) r.fail("arc touches per (n+m) grew by " + fmt(worst_touch));
    if (worst_time > 3) r.fail("wall time per (n+m) grew by " + fmt(worst_time));
    r.note("max growth vs n=2^14: touches x" + fmt(worst_touch, 3) + " (bound 2), time x" + fmt(worst_time) +
           " (bound 3)");
    return r;
}

Report criterion_7() {
    Report r;
    const std::size_t n = std::size_t{1} << 16;
    gen::Rng rng(77);
    const RawInstance narrow = gen::with_budgets(n, gen::random_connected(n, 3 * n, rng), 16, rng);
    RawInstance wide = narrow;
    const Colour stride = (Colour{1} << 20) / 16;
    wide.s = Colour{1} << 20;
    for (BudgetLine& b : wide.budgets) b.c = 1 + (b.c - 1) * stride;  // order preserving
    const Instance a = make_instance(narrow), b = make_instance(wide);
    BenchRow ra = measure_solve(a, 3), rb = measure_solve(b, 3);
    for (int round = 0; round < 3; ++round) {
        ra.nanoseconds = std::min(ra.nanoseconds, measure_solve(a, 3).nanoseconds);
        rb.nanoseconds = std::min(rb.nanoseconds, measure_solve(b, 3).nanoseconds);
    }
    if (ra.arc_touches != rb.arc_touches) r.fail("arc touches differ");
    const double ratio = std::max(ra.nanoseconds, rb.nanoseconds) / std::min(ra.nanoseconds, rb.nanoseconds);
    if (ratio > 1.5) r.fail("wall time ratio " + fmt(ratio));
    r.note("s=16: " + std::to_string(ra.arc_touches) + " touches, " + fmt(ra.nanoseconds / 1e6) + " ms; s=2^20: " +
           std::to_string(rb.arc_touches) + " touches, " + fmt(rb.nanoseconds / 1e6) + " ms; ratio " + fmt(ratio, 3));
    return r;
}

Report criterion_8() {
    Report r;
    for (std::size_t k = 2; k <= 6; ++k) {
        const RawInstance raw = fixtures::antidirected_split(2 * k);
        const Instance inst = make_instance(raw);
        if (!is_tight(inst)) r.fail("C" + std::to_string(2 * k) + " budgets are not tight");
        const SolveOutcome o = solve(inst);
        if (o.kind != SolveOutcome::coloured || !verify_dicolouring(inst, o.colouring))
            r.fail("C" + std::to_string(2 * k) + " not coloured");
        if (verify_dicolouring(inst, Colouring(2 * k, 1)))
            r.fail("C" + std::to_string(2 * k) + " all-colour-1 assignment verifies");
    }
    r.note("antidirected C4..C12: solve colours and verifies; the all-colour-1 assignment is rejected");
    return r;
}

}  // namespace

// Optional arguments: criterion numbers to run; default all.
int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Report()>>> criteria = {
        {"exhaustive oracle agreement (n <= 4, s = 2)", criterion_1},
        {"randomised oracle agreement (n <= 8, s <= 4)", criterion_2},
        {"named fixtures", criterion_3},
        {"canonical hard families", criterion_4},
        {"Brooks frontend", criterion_5},
        {"linearity", criterion_6},
        {"independence from s", criterion_7},
        {"antidirected cycle case", criterion_8},
    };
    std::vector<bool> wanted(criteria.size(), argc == 1);
    for (int a = 1; a < argc; ++a) {
        const int k = std::atoi(argv[a]);
        if (k >= 1 && static_cast<std::size_t>(k) <= criteria.size()) wanted[k - 1] = true;
    }
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (!wanted[k]) continue;
        Report r;
        try {
            r = criteria[k].second();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << k + 1 << " " << criteria[k].first << "\n";
        for (const auto& line : r.notes) std::cout << "    " << line << "\n";
        std::cout.flush();
        failed += r.pass ? 0 : 1;
    }
    return failed;
}
