#pragma once

// Arithmetic of the grid [m]x[n]: points, diagonals, solutions of x1+x2=x3
// under component-wise addition, and jump geometry. Nothing here knows about
// colorings.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

struct GridPoint {
    int i = 1;  // row, 1-based, (1,1) is the upper-left cell
    int j = 1;  // column, 1-based

    friend constexpr GridPoint operator+(GridPoint a, GridPoint b) { return {a.i + b.i, a.j + b.j}; }
    friend constexpr GridPoint operator-(GridPoint a, GridPoint b) { return {a.i - b.i, a.j - b.j}; }
    friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

std::string to_string(GridPoint p);

/// The ambient set [m]x[n] with m <= n. Construct through make(), which
/// transposes inputs with rows > cols.
struct GridDims {
    int m = 1;
    int n = 1;

    static GridDims make(int rows, int cols);

    int cells() const { return m * n; }
    int diagonal_count() const { return m + n - 1; }
    int main_diagonal() const { return m; }

    bool contains(GridPoint p) const { return p.i >= 1 && p.i <= m && p.j >= 1 && p.j <= n; }

    // row-major flat index in [0, m*n)
    int flat(GridPoint p) const { return (p.i - 1) * n + (p.j - 1); }
    GridPoint point(int flat_index) const { return {flat_index / n + 1, flat_index % n + 1}; }

    friend constexpr bool operator==(const GridDims&, const GridDims&) = default;
};

/// Index k of a diagonal D_k = {(i,j) : m-k = i-j}; k ranges over [1, m+n-1]
/// and k = m is the main diagonal.
using DiagonalIndex = int;

DiagonalIndex diagonal_index(GridPoint p, GridDims dims);
std::vector<GridPoint> diagonal_cells(DiagonalIndex k, GridDims dims);
bool is_valid_diagonal(DiagonalIndex k, GridDims dims);

/// One unordered solution {alpha, beta, gamma} of alpha + beta = gamma, with
/// alpha <= beta lexicographically.
struct SolutionTriple {
    GridPoint alpha;
    GridPoint beta;
    GridPoint gamma;
    bool degenerate = false;

    friend constexpr auto operator<=>(const SolutionTriple&, const SolutionTriple&) = default;
};

/// Every solution of the grid, sorted by (alpha, beta). Empty when m = 1.
std::vector<SolutionTriple> enumerate_solutions(GridDims dims);

/// Integer Schur triples a + b = c of [n] with a <= b, as points on row 1.
std::vector<SolutionTriple> enumerate_interval_solutions(int n);

/// Where a sum or difference of two diagonals lands. The index is always defined;
/// `inside` reports whether it names a diagonal of the grid.
struct Landing {
    DiagonalIndex index = 0;
    bool inside = false;
};

Landing landing_sum(DiagonalIndex a, DiagonalIndex b, GridDims dims);
Landing landing_diff(DiagonalIndex a, DiagonalIndex b, GridDims dims);

struct Jump {
    GridPoint from;
    GridPoint to;
    GridPoint delta;
    int distance = 0;
};

/// A jump exists iff both coordinates strictly increase.
std::optional<Jump> detect_jump(GridPoint from, GridPoint to);

/// Diagonals x with m+a2-b1 < x < m+b2-a1, x not in {a, b, m}, clipped to
/// the grid. Throws std::invalid_argument when there is no jump from -> to.
std::vector<DiagonalIndex> jump_window(GridPoint from, GridPoint to, GridDims dims);

/// Diagonals strictly between a and b, plus the flanking ranges of width
/// min(d1, d2) on either side; together with the window these are the
/// diagonals every cell of which jumps with alpha or beta.
std::vector<DiagonalIndex> jump_cover_diagonals(GridPoint from, GridPoint to, GridDims dims);

struct CoverVerdict {
    bool covered = false;       // gamma lies in a covered diagonal
    bool from_alpha = false;    // alpha jumps to gamma
    bool to_beta = false;       // gamma jumps to beta

    bool neither() const { return covered && !from_alpha && !to_beta; }
};

CoverVerdict jump_cover(GridPoint alpha, GridPoint beta, GridPoint gamma, GridDims dims);

/// floor(log2(x)) for x >= 1, by bit length.
int floor_log2(std::uint64_t x);

}  // namespace rainbow
