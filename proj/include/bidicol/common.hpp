#ifndef BIDICOL_COMMON_HPP
#define BIDICOL_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bidicol {

using Vertex = std::uint32_t;
using ArcId = std::uint32_t;
using Colour = std::uint32_t;  // 1-based, 0 means "no colour"

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();
inline constexpr ArcId no_arc = std::numeric_limits<ArcId>::max();
inline constexpr Colour no_colour = 0;

// Largest budget entry accepted from outside.
inline constexpr std::uint64_t max_budget_entry = std::uint64_t{1} << 31;

enum class Side { in, out };

enum class ErrorCode {
    duplicate_arc,
    self_loop,
    index_out_of_range,
    vertex_dead,
    disconnected,
    already_coloured,
    precondition_violated,
    not_biconnected,
    cap_exceeded,
    parse_error,
    list_too_small,
    budget_deficit,
    greedy_stuck,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::duplicate_arc: return "DuplicateArc";
        case ErrorCode::self_loop: return "SelfLoop";
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::vertex_dead: return "VertexDead";
        case ErrorCode::disconnected: return "Disconnected";
        case ErrorCode::already_coloured: return "AlreadyColoured";
        case ErrorCode::precondition_violated: return "PreconditionViolated";
        case ErrorCode::not_biconnected: return "NotBiconnected";
        case ErrorCode::cap_exceeded: return "CapExceeded";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::list_too_small: return "ListTooSmall";
        case ErrorCode::budget_deficit: return "BudgetDeficit";
        case ErrorCode::greedy_stuck: return "GreedyStuck";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Work counter for the linearity benchmarks. Every arc record handed out by
// an adjacency accessor or removed by a deletion adds one.
inline std::uint64_t& arc_touches() {
    thread_local std::uint64_t counter = 0;
    return counter;
}

// Per-vertex colour table; index = vertex id.
using Colouring = std::vector<Colour>;

}  // namespace bidicol

#endif
