#pragma once

// Exact search for rainbow-free exact r-colorings.
//
// Colorings are enumerated as restricted-growth strings along a fixed cell
// order, so each color-permutation class is visited once. A branch is cut
// when the cell just colored completes a rainbow triple, or when too few
// cells remain to use every color. Nothing else is pruned: an exhaustion
// result depends only on concrete rainbow triples.

#include "rainbow/coloring.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace rainbow {

inline constexpr const char* engine_version = "rainbow-search/1.0";

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::chrono::milliseconds> max_time;
    int threads = 1;
};

enum class CellOrder {
    row_major,
    diagonal_major,  // main diagonal first, then off-diagonals m+1, m-1, m+2, ...
};

struct SearchOptions {
    SearchBudget budget;
    CellOrder order = CellOrder::row_major;
};

enum class CertificateKind { witness, exhaustion };

std::string_view to_string(CertificateKind k);

/// A persisted claim: a rainbow-free exact r-coloring (witness), or that
/// none exists (exhaustion).
struct Certificate {
    CertificateKind kind = CertificateKind::exhaustion;
    Ground ground = Ground::grid;
    GridDims dims;
    int r = 1;
    std::optional<Coloring> coloring;  // witness only, canonical row-major form
    std::uint64_t nodes = 0;
    std::string engine = engine_version;
    bool verified = false;  // in-memory only
};

enum class SearchStatus { witness, exhaustion, indeterminate };

struct SearchOutcome {
    SearchStatus status = SearchStatus::indeterminate;
    std::optional<Certificate> certificate;  // empty when indeterminate
    std::uint64_t nodes = 0;
};

/// Cell visiting order as flat indices.
std::vector<int> cell_order(const SolutionIndex& index, CellOrder order);

/// Decides whether a rainbow-free exact r-coloring exists. r may be
/// m*n + 1, in which case no exact coloring exists and the exhaustion is
/// vacuous. With one thread and row-major order the witness is the
/// lexicographically least canonical one.
SearchOutcome exists_rainbow_free(const SolutionIndex& index, int r, const SearchOptions& options = {});

struct EnumerationSummary {
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    bool exhaustive = true;  // false when the budget or the visitor cut it short
};

/// Visits every canonical rainbow-free exact r-coloring exactly once. The
/// visitor returns false to stop early.
EnumerationSummary enumerate_rainbow_free(const SolutionIndex& index, int r,
                                          const std::function<bool(const Coloring&)>& visit,
                                          const SearchOptions& options = {});

struct RbResult {
    Ground ground = Ground::grid;
    GridDims dims;
    std::optional<int> rb;  // empty when a budget cut left the value open
    int lower = 1;          // rb in [lower, upper]
    int upper = 1;
    std::optional<Certificate> witness;     // at rb - 1
    std::optional<Certificate> exhaustion;  // at rb
    std::uint64_t nodes = 0;
};

enum class RbStrategy { scan, bisect };

/// Decision procedure used by rb_search; the default runs
/// exists_rainbow_free, callers may interpose a cache.
using Decider = std::function<SearchOutcome(int r)>;

/// Computes rb exactly. Scans r from `guess` (clamped to [1, m*n+1]) toward
/// the threshold, or bisects [1, m*n+1]. Verifies both certificates and
/// checks the threshold structure by merging the witness down to one color.
RbResult rb_search(const SolutionIndex& index, int guess, const SearchOptions& options = {},
                   RbStrategy strategy = RbStrategy::scan, Decider decide = {});

/// rb_search on a grid, starting from the closed form.
RbResult rb_search(GridDims dims, const SearchOptions& options = {});

/// rb_search on [n], starting from the closed form.
RbResult rb_search_interval(int n, const SearchOptions& options = {});

/// Re-checks a certificate: a witness by is_exact and is_rainbow_free, an
/// exhaustion by an independent re-run with the diagonal-major cell order.
/// Sets `verified` and returns it.
bool verify_certificate(Certificate& cert, const SearchBudget& budget = {});

}  // namespace rainbow
