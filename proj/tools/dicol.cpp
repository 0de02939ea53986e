// dicol: solve, verify, cross-check, generate and benchmark F-dicolouring
// instances. Exit codes: 0 coloured, 1 hard, 2 invalid input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bidicol.hpp"

using namespace bidicol;

namespace {

constexpr int exit_coloured = 0;
constexpr int exit_hard = 1;
constexpr int exit_invalid = 2;

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* verdict(SolveOutcome::Kind k) {
    switch (k) {
        case SolveOutcome::coloured: return "COLOURED";
        case SolveOutcome::hard: return "HARD";
        default: return "INVALID";
    }
}

int cmd_solve(const std::string& path, bool check, bool explain, std::size_t cap) {
    const RawInstance raw = parse_instance(slurp(path));
    const FileOutcome r = solve_file(raw);
    if (r.kind == SolveOutcome::invalid) {
        std::cout << "INVALID " << r.reason << "\n";
        return exit_invalid;
    }
    if (r.kind == SolveOutcome::hard) {
        std::cout << "HARD\n";
        if (explain) {
            const auto comps = split_components(raw);
            for (std::size_t k = 0; k < comps.size(); ++k) {
                if (r.per_component[k] != SolveOutcome::hard) continue;
                if (comps[k].raw.n > cap) {
                    std::cerr << "component " << k << ": " << comps[k].raw.n << " vertices, above --cap\n";
                    continue;
                }
                const auto tree = oracle::definitional_hard(comps[k].raw, cap);
                std::cerr << "component " << k << " (local ids; global";
                for (Vertex g : comps[k].global) std::cerr << " " << g;
                std::cerr << ")\n" << (tree ? oracle::to_text(*tree) : std::string("no hardness tree found\n"));
            }
        }
        return exit_hard;
    }
    if (check && !verify_file(raw, r.colouring)) {
        std::cerr << "self-check failed\n";
        return 3;
    }
    std::cout << serialise_colouring(r.colouring);
    return exit_coloured;
}

int cmd_verify(const std::string& inst_path, const std::string& col_path) {
    const RawInstance raw = parse_instance(slurp(inst_path));
    const Colouring col = parse_colouring(slurp(col_path), raw.n);
    const bool ok = verify_file(raw, col);
    std::cout << (ok ? "OK" : "REJECTED") << "\n";
    return ok ? 0 : 1;
}

// Per component: solve, brute force and the recursive definition. Exit 0
// when they all agree.
int cmd_oracle(const std::string& path, std::size_t cap) {
    const RawInstance raw = parse_instance(slurp(path));
    bool agree = true;
    const auto comps = split_components(raw);
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const RawInstance& c = comps[k].raw;
        const SolveOutcome o = solve(make_instance(c));
        std::cout << "component " << k << " n=" << c.n << " solve=" << verdict(o.kind);
        if (o.kind == SolveOutcome::invalid) {
            std::cout << " (" << o.reason << ")\n";
            return exit_invalid;
        }
        if (c.n > cap) {
            std::cout << " oracle=skipped\n";
            continue;
        }
        const bool colourable = oracle::brute_force_dicolourable(c, cap).has_value();
        const bool hard_def = oracle::definitional_hard(c, cap).has_value();
        const bool ok = (o.kind == SolveOutcome::hard) == !colourable && hard_def == !colourable;
        std::cout << " brute=" << (colourable ? "colourable" : "none") << " definitional="
                  << (hard_def ? "hard" : "not-hard") << (ok ? " agree" : " MISMATCH") << "\n";
        agree = agree && ok;
    }
    return agree ? 0 : 1;
}

struct GenParams {
    std::string model;
    std::size_t n = 10, m = 0, k = 6, blocks = 4, max_block = 5;
    double p = 0.3, digon = 0.5;
    Colour s = 2;
    std::uint64_t slack = 0, seed = 1;
    bool bidirected = false;
};

int cmd_gen(const GenParams& g) {
    gen::Rng rng(g.seed);
    RawInstance raw;
    if (g.model == "hard-join") {
        raw = gen::hard_join(g.blocks, g.s, g.max_block, rng);
    } else {
        gen::ArcList arcs;
        std::size_t n = g.n;
        if (g.model == "random-digraph") {
            arcs = g.m ? gen::random_connected(n, g.m, rng) : gen::random_digraph(n, g.p, rng);
        } else if (g.model == "bidirected") {
            arcs = gen::bidirect(gen::random_graph(n, g.p, rng));
        } else if (g.model == "cycle") {
            arcs = g.bidirected ? gen::bidirected_cycle(n) : gen::directed_cycle(n);
        } else if (g.model == "antidirected-cycle") {
            if (n % 2) throw std::runtime_error("antidirected cycles need even n");
            arcs = gen::antidirected_cycle(n);
        } else if (g.model == "wheel") {
            arcs = gen::wheel(g.k, g.digon, rng);
            n = g.k + 1;
        } else {
            throw std::runtime_error("unknown model " + g.model);
        }
        raw = gen::with_budgets(n, std::move(arcs), g.s, rng, g.slack);
    }
    std::cout << "# model " << g.model << " seed " << g.seed << "\n" << serialise(raw);
    return 0;
}

int cmd_bench(int from, int to, std::size_t arcs_per_vertex, Colour s, int reps, std::uint64_t seed) {
    std::cout << "n,m,nanoseconds,arc_touches\n";
    for (int e = from; e <= to; ++e) {
        const std::size_t n = std::size_t{1} << e;
        gen::Rng rng(seed + static_cast<std::uint64_t>(e));
        const RawInstance raw = gen::with_budgets(n, gen::random_connected(n, arcs_per_vertex * n, rng), s, rng);
        const BenchRow row = measure_solve(make_instance(raw), reps);
        std::cout << row.n << "," << row.m << "," << static_cast<std::uint64_t>(row.nanoseconds) << ","
                  << row.arc_touches << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-dicolouring of digraphs"};
    app.require_subcommand(1);

    std::string file, col_file;
    bool check = false, explain = false;
    std::size_t cap = oracle::default_cap;

    auto* solve_cmd = app.add_subcommand("solve", "solve an instance file ('-' for stdin)");
    solve_cmd->add_option("file", file)->required();
    solve_cmd->add_flag("--check", check, "verify the colouring before printing it");
    solve_cmd->add_flag("--explain", explain, "print a hardness tree for HARD components (stderr)");
    solve_cmd->add_option("--cap", cap, "largest component given to the oracle");

    auto* verify_cmd = app.add_subcommand("verify", "check a colouring against an instance");
    verify_cmd->add_option("instance", file)->required();
    verify_cmd->add_option("colouring", col_file)->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "compare solve with the brute-force oracles");
    oracle_cmd->add_option("file", file)->required();
    oracle_cmd->add_option("--cap", cap, "largest component checked");

    GenParams gp;
    auto* gen_cmd = app.add_subcommand("gen", "write a random instance to stdout");
    gen_cmd->add_option("model", gp.model)
        ->required()
        ->check(CLI::IsMember({"random-digraph", "bidirected", "cycle", "antidirected-cycle", "wheel", "hard-join"}));
    gen_cmd->add_option("-n", gp.n, "vertices");
    gen_cmd->add_option("-m", gp.m, "arcs (random-digraph; overrides -p)");
    gen_cmd->add_option("-p", gp.p, "arc or edge probability");
    gen_cmd->add_option("-k", gp.k, "wheel rim length");
    gen_cmd->add_option("--digon", gp.digon, "wheel digon probability");
    gen_cmd->add_option("--blocks", gp.blocks, "hard-join block count");
    gen_cmd->add_option("--max-block", gp.max_block, "hard-join block size bound");
    gen_cmd->add_option("-s", gp.s, "colours")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--slack", gp.slack, "extra budget per side, at most");
    gen_cmd->add_flag("--bidirected", gp.bidirected, "cycle: bidirected instead of directed");
    gen_cmd->add_option("--seed", gp.seed);

    int from = 14, to = 20, reps = 3;
    std::size_t per_vertex = 3;
    Colour bench_s = 2;
    std::uint64_t bench_seed = 1;
    auto* bench_cmd = app.add_subcommand("bench", "time solve on random digraphs with n = 2^from .. 2^to");
    bench_cmd->add_option("--from", from);
    bench_cmd->add_option("--to", to);
    bench_cmd->add_option("--arcs-per-vertex", per_vertex);
    bench_cmd->add_option("-s", bench_s)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--reps", reps);
    bench_cmd->add_option("--seed", bench_seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return cmd_solve(file, check, explain, cap);
        if (*verify_cmd) return cmd_verify(file, col_file);
        if (*oracle_cmd) return cmd_oracle(file, cap);
        if (*gen_cmd) return cmd_gen(gp);
        if (*bench_cmd) return cmd_bench(from, to, per_vertex, bench_s, reps, bench_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_invalid;
}
