#ifndef BIDICOL_BENCH_HPP
#define BIDICOL_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "solver.hpp"

namespace bidicol {

struct BenchRow {
    std::size_t n = 0, m = 0;
    double nanoseconds = 0;      // best of the repetitions
    std::uint64_t arc_touches = 0;
    SolveOutcome::Kind kind = SolveOutcome::invalid;
};

// Times solve() alone; building the instance is excluded. One untimed
// warm-up run, then the minimum over `reps` runs. The arc-touch count is
// deterministic, so it is taken from the warm-up.
inline BenchRow measure_solve(const Instance& inst, int reps) {
    BenchRow row;
    row.n = inst.graph.vertex_count();
    row.m = inst.graph.arc_count();
    arc_touches() = 0;
    const SolveOutcome warm = solve(inst);
    row.arc_touches = arc_touches();
    row.kind = warm.kind;
    double best = 0;
    for (int r = 0; r < std::max(reps, 1); ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const SolveOutcome o = solve(inst);
        const auto t1 = std::chrono::steady_clock::now();
        if (o.kind != warm.kind) throw std::logic_error("measure_solve: verdict changed between runs");
        const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
        best = r == 0 ? ns : std::min(best, ns);
    }
    row.nanoseconds = best;
    return row;
}

}  // namespace bidicol

#endif
