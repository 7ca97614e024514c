#pragma once

#include "rainbow/grid.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

/// What is being colored: the grid [m]x[n] with component-wise addition, or
/// the interval [n] with integer addition (stored as a 1 x n row).
enum class Ground { grid, interval };

std::string_view to_string(Ground g);

using ColorId = int;

/// An r-coloring of a grid or interval. Cells are row-major, colors 1-based.
/// Exactness (every color in [1, r] used) is checked, not assumed.
class Coloring {
public:
    Coloring(GridDims dims, int r, std::vector<ColorId> cells, Ground ground = Ground::grid);

    static Coloring interval(int r, std::vector<ColorId> cells);

    Ground ground() const { return ground_; }
    GridDims dims() const { return dims_; }
    int colors() const { return r_; }
    std::span<const ColorId> cells() const { return cells_; }

    ColorId at(GridPoint p) const { return cells_[dims_.flat(p)]; }
    ColorId at_flat(int idx) const { return cells_[idx]; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Ground ground_;
    GridDims dims_;
    int r_;
    std::vector<ColorId> cells_;
};

/// Solution triple on flat cell indices.
struct CellTriple {
    int alpha;
    int beta;
    int gamma;
    bool degenerate;
};

/// Precomputed solutions of x1+x2=x3 for one ground set, shared read-only by
/// the checkers and the search engine.
class SolutionIndex {
public:
    static SolutionIndex grid(GridDims dims);
    static SolutionIndex interval(int n);
    static SolutionIndex of(Ground ground, GridDims dims);

    Ground ground() const { return ground_; }
    GridDims dims() const { return dims_; }
    int cells() const { return dims_.cells(); }
    std::span<const CellTriple> triples() const { return triples_; }
    std::size_t nondegenerate_count() const;

private:
    SolutionIndex(Ground ground, GridDims dims, const std::vector<SolutionTriple>& triples);

    Ground ground_;
    GridDims dims_;
    std::vector<CellTriple> triples_;
};

bool is_exact(const Coloring& c);

/// Restricted-growth relabeling along row-major order: each new color takes
/// the smallest unused id. The declared color count is kept.
Coloring canonicalize(const Coloring& c);

/// Canonical form along an arbitrary cell order (a permutation of flat indices).
std::vector<ColorId> canonical_labels(std::span<const ColorId> cells, std::span<const int> order);

bool is_rainbow(const SolutionTriple& t, const Coloring& c);
bool is_rainbow(const CellTriple& t, const Coloring& c);

bool is_rainbow_free(const Coloring& c, const SolutionIndex& index);

/// First rainbow triple, if any.
std::optional<CellTriple> find_rainbow(const Coloring& c, const SolutionIndex& index);

/// Colors along the main diagonal (1,1),(2,2),...,(m,m); for an interval
/// coloring this is the whole row, since [n] plays that role.
std::vector<ColorId> main_diagonal_colors(const Coloring& c);

struct SSequence {
    std::vector<int> values;  // s_1 < s_2 < ... (1-based positions)
    int ell = 0;              // palette size of the main diagonal

    int s(int k) const { return values.at(k - 1); }  // 1-based
};

SSequence s_sequence(const Coloring& c);
SSequence s_sequence_of(std::span<const ColorId> diagonal);

/// Recolors `from` as `to` and re-canonicalizes with r' = r - 1.
Coloring merge_colors(const Coloring& c, ColorId from, ColorId to);

/// Relabels so that the main-diagonal palette is {1..ell} in s-sequence
/// order; remaining colors follow in row-major first-occurrence order.
Coloring relabel_diagonal_first(const Coloring& c);

/// Text form: the color count r, then m rows of n space-separated ids.
std::string format_text(const Coloring& c);
Coloring parse_text(std::string_view text, Ground ground = Ground::grid);

/// ASCII rendering with (1,1) at the upper left.
std::string render(const Coloring& c);

}  // namespace rainbow
