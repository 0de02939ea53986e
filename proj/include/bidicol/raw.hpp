#ifndef BIDICOL_RAW_HPP
#define BIDICOL_RAW_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "common.hpp"

namespace bidicol {

struct BudgetLine {
    Vertex v = 0;
    Colour c = 0;
    std::uint64_t in = 0;
    std::uint64_t out = 0;
    friend bool operator==(const BudgetLine&, const BudgetLine&) = default;
};

// Plain description of a pair (D, F), as read from or written to a file.
struct RawInstance {
    std::size_t n = 0;
    Colour s = 0;
    std::vector<std::pair<Vertex, Vertex>> arcs;
    std::vector<BudgetLine> budgets;
    friend bool operator==(const RawInstance&, const RawInstance&) = default;
};

}  // namespace bidicol

#endif
