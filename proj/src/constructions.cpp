#include "rainbow/constructions.hpp"

#include <bit>
#include <stdexcept>

namespace rainbow {

Coloring lower_bound_coloring(GridDims dims)
{
    if (dims.m < 2)
        throw std::invalid_argument("lower_bound_coloring needs 2 <= m <= n");
    const int m = dims.m;
    const int n = dims.n;
    std::vector<ColorId> cells(dims.cells());
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            ColorId x = 1;
            if (i == m)
                x = j + m;
            else if (j == n)
                x = i + 1;
            cells[dims.flat({i, j})] = x;
        }
    Coloring c(dims, m + n, std::move(cells));
    if (!is_exact(c) || !is_rainbow_free(c, SolutionIndex::grid(dims)))
        throw std::logic_error("lower_bound_coloring failed self-verification");
    return c;
}

Coloring valuation_coloring(int n)
{
    if (n < 1)
        throw std::invalid_argument("valuation_coloring needs n >= 1");
    std::vector<ColorId> cells(n);
    for (int x = 1; x <= n; ++x)
        cells[x - 1] = std::countr_zero(static_cast<unsigned>(x)) + 1;
    return Coloring::interval(floor_log2(static_cast<unsigned>(n)) + 1, std::move(cells));
}

int closed_form_rb_interval(int n)
{
    if (n < 1)
        throw std::invalid_argument("interval length must be positive");
    if (n <= 2)
        return n + 1;
    return floor_log2(static_cast<unsigned>(n)) + 2;
}

int closed_form_rb_grid(GridDims dims)
{
    if (dims.m == 1)
        return dims.n + 1;
    return dims.m + dims.n + 1;
}

}  // namespace rainbow
