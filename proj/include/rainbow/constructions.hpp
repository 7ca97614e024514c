#pragma once

#include "rainbow/coloring.hpp"

namespace rainbow {

/// Rainbow-free exact (m+n)-coloring of [m]x[n], 2 <= m <= n: color 1 on the
/// block i<m, j<n; i+1 on the last column above the last row; j+m on the
/// last row. Verified against the solution index before returning.
Coloring lower_bound_coloring(GridDims dims);

/// Coloring of [n] by 2-adic valuation, c(x) = v2(x) + 1. Uses
/// floor(log2 n) + 1 colors and is rainbow-free: in a + b = c either
/// v2(a) = v2(b) or v2(c) = min(v2(a), v2(b)).
Coloring valuation_coloring(int n);

/// rb([n], x1+x2=x3): floor(log2 n) + 2 for n >= 3, n + 1 for n in {1, 2}.
int closed_form_rb_interval(int n);

/// rb([m]x[n], x1+x2=x3): n + 1 when m = 1, otherwise m + n + 1.
int closed_form_rb_grid(GridDims dims);

}  // namespace rainbow
