#pragma once

// Unpruned reference decision procedure, kept independent of the search
// engine: it enumerates set partitions as explicit block lists and checks
// rainbow triples by scanning all cell pairs, without a solution index.

#include "rainbow/search.hpp"

namespace rainbow {

inline constexpr int naive_oracle_cell_cap = 10;

struct OracleResult {
    Certificate certificate;
    std::uint64_t partitions = 0;     // partitions into exactly r blocks
    std::uint64_t rainbow_free = 0;   // of those, how many are rainbow-free
};

/// Throws std::invalid_argument when m*n exceeds naive_oracle_cell_cap.
OracleResult naive_oracle(Ground ground, GridDims dims, int r);

}  // namespace rainbow
