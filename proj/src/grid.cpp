#include "rainbow/grid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rainbow {

std::string to_string(GridPoint p)
{
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

GridDims GridDims::make(int rows, int cols)
{
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid dimensions must be positive");
    if (rows > cols)
        std::swap(rows, cols);
    return GridDims{rows, cols};
}

DiagonalIndex diagonal_index(GridPoint p, GridDims dims)
{
    if (!dims.contains(p))
        throw std::out_of_range("point " + to_string(p) + " is outside the grid");
    return dims.m - p.i + p.j;
}

bool is_valid_diagonal(DiagonalIndex k, GridDims dims)
{
    return k >= 1 && k <= dims.diagonal_count();
}

std::vector<GridPoint> diagonal_cells(DiagonalIndex k, GridDims dims)
{
    if (!is_valid_diagonal(k, dims))
        throw std::out_of_range("diagonal index " + std::to_string(k) + " out of range");
    std::vector<GridPoint> out;
    // j = i - m + k
    for (int i = 1; i <= dims.m; ++i) {
        const int j = i - dims.m + k;
        if (j >= 1 && j <= dims.n)
            out.push_back({i, j});
    }
    return out;
}

std::vector<SolutionTriple> enumerate_solutions(GridDims dims)
{
    std::vector<SolutionTriple> out;
    const int cells = dims.cells();
    for (int a = 0; a < cells; ++a) {
        const GridPoint alpha = dims.point(a);
        if (alpha.i + 1 > dims.m || alpha.j + 1 > dims.n)
            continue;
        for (int b = a; b < cells; ++b) {
            const GridPoint beta = dims.point(b);
            const GridPoint gamma = alpha + beta;
            if (dims.contains(gamma))
                out.push_back({alpha, beta, gamma, a == b});
        }
    }
    return out;
}

std::vector<SolutionTriple> enumerate_interval_solutions(int n)
{
    if (n < 1)
        throw std::invalid_argument("interval length must be positive");
    std::vector<SolutionTriple> out;
    for (int a = 1; 2 * a <= n; ++a)
        for (int b = a; a + b <= n; ++b)
            out.push_back({{1, a}, {1, b}, {1, a + b}, a == b});
    return out;
}

Landing landing_sum(DiagonalIndex a, DiagonalIndex b, GridDims dims)
{
    const DiagonalIndex k = a + b - dims.m;
    return {k, is_valid_diagonal(k, dims)};
}

Landing landing_diff(DiagonalIndex a, DiagonalIndex b, GridDims dims)
{
    const DiagonalIndex k = a - b + dims.m;
    return {k, is_valid_diagonal(k, dims)};
}

std::optional<Jump> detect_jump(GridPoint from, GridPoint to)
{
    if (from.i >= to.i || from.j >= to.j)
        return std::nullopt;
    const GridPoint delta = to - from;
    return Jump{from, to, delta, delta.i + delta.j};
}

namespace {

void require_jump(GridPoint from, GridPoint to, GridDims dims)
{
    if (!dims.contains(from) || !dims.contains(to))
        throw std::out_of_range("jump endpoints must lie in the grid");
    if (!detect_jump(from, to))
        throw std::invalid_argument("no jump from " + to_string(from) + " to " + to_string(to));
}

}  // namespace

std::vector<DiagonalIndex> jump_window(GridPoint from, GridPoint to, GridDims dims)
{
    require_jump(from, to, dims);
    const DiagonalIndex a = diagonal_index(from, dims);
    const DiagonalIndex b = diagonal_index(to, dims);
    const int lower = dims.m + from.j - to.i;
    const int upper = dims.m + to.j - from.i;
    std::vector<DiagonalIndex> out;
    for (int x = std::max(lower + 1, 1); x < upper && x <= dims.diagonal_count(); ++x)
        if (x != a && x != b && x != dims.m)
            out.push_back(x);
    return out;
}

std::vector<DiagonalIndex> jump_cover_diagonals(GridPoint from, GridPoint to, GridDims dims)
{
    require_jump(from, to, dims);
    const DiagonalIndex a = diagonal_index(from, dims);
    const DiagonalIndex b = diagonal_index(to, dims);
    const int width = std::min(to.i - from.i, to.j - from.j);
    const DiagonalIndex lo = std::min(a, b);
    const DiagonalIndex hi = std::max(a, b);

    std::vector<DiagonalIndex> out;
    auto add_open = [&](int x0, int x1) {
        for (int x = std::max(x0 + 1, 1); x < x1 && x <= dims.diagonal_count(); ++x)
            out.push_back(x);
    };
    add_open(lo, hi);
    add_open(lo - width, lo);
    add_open(hi, hi + width);
    for (DiagonalIndex x : jump_window(from, to, dims))
        out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CoverVerdict jump_cover(GridPoint alpha, GridPoint beta, GridPoint gamma, GridDims dims)
{
    const auto covered = jump_cover_diagonals(alpha, beta, dims);
    if (!dims.contains(gamma))
        throw std::out_of_range("point " + to_string(gamma) + " is outside the grid");
    CoverVerdict v;
    v.covered = std::binary_search(covered.begin(), covered.end(), diagonal_index(gamma, dims));
    if (!v.covered)
        return v;
    v.from_alpha = detect_jump(alpha, gamma).has_value();
    v.to_beta = detect_jump(gamma, beta).has_value();
    return v;
}

int floor_log2(std::uint64_t x)
{
    if (x == 0)
        throw std::invalid_argument("floor_log2 of zero");
    return std::bit_width(x) - 1;
}

}  // namespace rainbow
