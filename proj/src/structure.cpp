#include "rainbow/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rainbow {

bool ContributingMap::contributing(DiagonalIndex k) const
{
    return k >= 1 && k <= static_cast<int>(diagonals.size()) && at(k).contributing();
}

int ContributingMap::contributing_count() const
{
    return static_cast<int>(std::count_if(diagonals.begin(), diagonals.end(),
                                          [](const DiagonalStatus& d) { return !d.main && d.contributing(); }));
}

int ContributingMap::noncontributing_count() const
{
    return static_cast<int>(std::count_if(diagonals.begin(), diagonals.end(),
                                          [](const DiagonalStatus& d) { return !d.main && !d.contributing(); }));
}

bool ContributingMap::in_main_palette(ColorId x) const
{
    return std::binary_search(main_palette.begin(), main_palette.end(), x);
}

namespace {

void require_grid(const Coloring& c, const char* what)
{
    if (c.ground() != Ground::grid)
        throw std::invalid_argument(std::string(what) + " is defined on grid colorings only");
}

std::vector<ColorId> palette_of(const Coloring& c, const std::vector<GridPoint>& cells)
{
    std::set<ColorId> s;
    for (GridPoint p : cells)
        s.insert(c.at(p));
    return {s.begin(), s.end()};
}

}  // namespace

ContributingMap contributing_map(const Coloring& c)
{
    require_grid(c, "contributing_map");
    const GridDims dims = c.dims();
    ContributingMap map;
    map.main_palette = palette_of(c, diagonal_cells(dims.m, dims));
    std::set<ColorId> seen_off;  // colors of D_i for i < k
    for (DiagonalIndex k = 1; k <= dims.diagonal_count(); ++k) {
        DiagonalStatus d;
        d.k = k;
        d.main = k == dims.m;
        d.palette = palette_of(c, diagonal_cells(k, dims));
        if (!d.main) {
            for (ColorId x : d.palette)
                if (!map.in_main_palette(x)) {
                    d.extra.push_back(x);
                    if (!seen_off.contains(x))
                        d.contributed.push_back(x);
                }
        }
        seen_off.insert(d.palette.begin(), d.palette.end());
        map.diagonals.push_back(std::move(d));
    }
    return map;
}

RegionMask region_mask(const Coloring& c, YRegionMode mode)
{
    require_grid(c, "region_mask");
    RegionMask mask;
    mask.dims = c.dims();
    const int cells = mask.dims.cells();
    mask.w1.assign(cells, false);
    mask.w2.assign(cells, false);
    mask.y1.assign(cells, false);
    mask.y2.assign(cells, false);
    const SSequence s = s_sequence(c);
    if (s.ell < 2)
        return mask;
    mask.defined = true;
    mask.s2 = s.s(2);
    const int s2 = mask.s2;
    const int m = mask.dims.m;
    const int n = mask.dims.n;
    const GridPoint shift{s2, s2};
    for (int idx = 0; idx < cells; ++idx) {
        const GridPoint p = mask.dims.point(idx);
        mask.w1[idx] = mask.dims.contains(p + shift);
        mask.w2[idx] = mask.dims.contains(p - shift);
        if (mode == YRegionMode::figure) {
            mask.y1[idx] = m < p.i + s2 && p.j <= s2;
            mask.y2[idx] = p.i <= s2 && n < p.j + s2;
        } else {
            mask.y1[idx] = m < p.i + s2 && p.j - s2 < 0;
            mask.y2[idx] = p.i - s2 < 0 && m < p.j + s2;
        }
    }
    return mask;
}

std::string_view to_string(PairKind k)
{
    switch (k) {
    case PairKind::horizontal: return "horizontal";
    case PairKind::vertical: return "vertical";
    default: return "other";
    }
}

std::vector<PairRecord> find_pairs(const Coloring& c, const ContributingMap& map)
{
    require_grid(c, "find_pairs");
    const GridDims dims = c.dims();
    std::vector<PairRecord> out;
    for (DiagonalIndex a = 1; a + 1 <= dims.diagonal_count(); ++a) {
        if (!map.contributing(a) || !map.contributing(a + 1))
            continue;
        const auto lower = diagonal_cells(a, dims);
        const auto upper = diagonal_cells(a + 1, dims);
        for (GridPoint alpha : lower) {
            if (map.in_main_palette(c.at(alpha)))
                continue;
            for (GridPoint beta : upper) {
                if (map.in_main_palette(c.at(beta)))
                    continue;
                PairRecord p;
                p.a = a;
                p.alpha = alpha;
                p.beta = beta;
                p.alpha_color = c.at(alpha);
                p.beta_color = c.at(beta);
                if (beta == alpha + GridPoint{0, 1})
                    p.kind = PairKind::horizontal;
                else if (beta == alpha - GridPoint{1, 0})
                    p.kind = PairKind::vertical;
                out.push_back(p);
            }
        }
    }
    return out;
}

std::vector<CornerRecord> find_disjoint_corners(const std::vector<PairRecord>& pairs, const RegionMask& regions)
{
    std::vector<CornerRecord> out;
    if (!regions.defined)
        return out;
    auto meets_w = [&](const PairRecord& p) { return regions.in_w(p.alpha) || regions.in_w(p.beta); };
    for (const auto& v : pairs) {
        if (v.kind != PairKind::vertical || !meets_w(v))
            continue;
        for (const auto& h : pairs) {
            if (h.kind != PairKind::horizontal || !meets_w(h))
                continue;
            if (v.alpha == h.alpha || v.alpha == h.beta || v.beta == h.alpha || v.beta == h.beta)
                continue;
            std::set<ColorId> colors{v.alpha_color, v.beta_color, h.alpha_color, h.beta_color};
            out.push_back({v, h, colors.size() == 4});
        }
    }
    return out;
}

std::vector<CornerRecord> find_disjoint_corners(const Coloring& c)
{
    const auto map = contributing_map(c);
    return find_disjoint_corners(find_pairs(c, map), region_mask(c));
}

DeltaDiagonalSets delta_sets(GridPoint delta, GridDims dims)
{
    if (!dims.contains(delta))
        throw std::out_of_range("delta " + to_string(delta) + " is outside the grid");
    DeltaDiagonalSets out;
    out.delta = delta;
    out.count_bound = dims.m + dims.n - 2 * delta.i - 2 * delta.j;
    for (int idx = 0; idx < dims.cells(); ++idx) {
        const GridPoint g = dims.point(idx);
        if (!dims.contains(g + delta) && !dims.contains(g - delta))
            out.sd_cells.push_back(g);
    }
    for (DiagonalIndex k = 1; k <= dims.diagonal_count(); ++k) {
        if (k == dims.m)
            continue;
        const auto cells = diagonal_cells(k, dims);
        const bool all = std::all_of(cells.begin(), cells.end(), [&](GridPoint g) {
            return dims.contains(g + delta) || dims.contains(g - delta);
        });
        if (all)
            out.dd.push_back(k);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Lemma predicates

namespace {

struct Context {
    const Coloring& c;
    GridDims dims;
    bool grid;
    bool exact;
    bool rainbow_free;
    SSequence s;
    int seq_length;  // m for a grid, n for an interval
    // grid only
    std::optional<ContributingMap> map;
    std::optional<RegionMask> regions;
    std::vector<PairRecord> pairs;

    explicit Context(const Coloring& col)
        : c(col), dims(col.dims()), grid(col.ground() == Ground::grid), exact(is_exact(col)),
          rainbow_free(is_rainbow_free(col, SolutionIndex::of(col.ground(), col.dims()))), s(s_sequence(col)),
          seq_length(grid ? col.dims().m : col.dims().n)
    {
        if (grid) {
            map = contributing_map(col);
            regions = region_mask(col);
            pairs = find_pairs(col, *map);
        }
    }

    bool extremal() const { return exact && c.colors() == dims.m + dims.n + 1; }
    bool off_palette(GridPoint p) const { return !map->in_main_palette(c.at(p)); }
};

struct Outcome {
    bool holds = true;
    std::string detail;

    void fail(std::string why)
    {
        if (holds)
            detail = std::move(why);
        holds = false;
    }
};

using Hypothesis = std::function<std::string(const Context&)>;  // empty string when satisfied
using Check = std::function<Outcome(const Context&)>;

struct Lemma {
    LemmaInfo info;
    Hypothesis hypothesis;
    Check check;
};

std::string need_grid(const Context& x)
{
    return x.grid ? "" : "grid colorings only";
}

std::string need_rainbow_free(const Context& x)
{
    return x.rainbow_free ? "" : "coloring has a rainbow solution";
}

std::string need_rf_grid(const Context& x)
{
    if (auto r = need_grid(x); !r.empty())
        return r;
    return need_rainbow_free(x);
}

// exact, rainbow-free (m+n+1)-coloring with m >= min_m
Hypothesis extremal_rf(int min_m, int exact_ell = 0)
{
    return [=](const Context& x) -> std::string {
        if (auto r = need_grid(x); !r.empty())
            return r;
        if (x.dims.m < min_m)
            return "needs m >= " + std::to_string(min_m);
        if (!x.extremal())
            return "not an exact (m+n+1)-coloring";
        if (!x.rainbow_free)
            return "coloring has a rainbow solution";
        if (exact_ell != 0 && x.s.ell != exact_ell)
            return "main diagonal does not carry exactly " + std::to_string(exact_ell) + " colors";
        return "";
    };
}

// exact (m+n+1)-coloring, m >= min_m, at most max_ell colors on D_m
Hypothesis extremal_any(int min_m, int max_ell)
{
    return [=](const Context& x) -> std::string {
        if (auto r = need_grid(x); !r.empty())
            return r;
        if (x.dims.m < min_m)
            return "needs m >= " + std::to_string(min_m);
        if (!x.extremal())
            return "not an exact (m+n+1)-coloring";
        if (x.s.ell > max_ell)
            return "main diagonal carries more than " + std::to_string(max_ell) + " colors";
        return "";
    };
}

struct DistinctJump {
    GridPoint alpha;
    GridPoint beta;
    GridPoint delta;
};

// jumps alpha -> beta with both colors off the main palette and different
std::vector<DistinctJump> distinct_off_palette_jumps(const Context& x)
{
    std::vector<DistinctJump> out;
    const GridDims d = x.dims;
    for (int a = 0; a < d.cells(); ++a) {
        const GridPoint alpha = d.point(a);
        if (!x.off_palette(alpha))
            continue;
        for (int b = 0; b < d.cells(); ++b) {
            const GridPoint beta = d.point(b);
            if (!x.off_palette(beta) || x.c.at(alpha) == x.c.at(beta))
                continue;
            if (auto j = detect_jump(alpha, beta))
                out.push_back({alpha, beta, j->delta});
        }
    }
    return out;
}

std::string jump_text(const DistinctJump& j)
{
    return "jump " + to_string(j.alpha) + " -> " + to_string(j.beta) + " with delta " + to_string(j.delta);
}

int count_kind(const std::vector<PairRecord>& pairs, PairKind k)
{
    return static_cast<int>(std::count_if(pairs.begin(), pairs.end(), [k](const PairRecord& p) { return p.kind == k; }));
}

bool meets_w(const Context& x, const PairRecord& p)
{
    return x.regions->in_w(p.alpha) || x.regions->in_w(p.beta);
}

const std::vector<Lemma>& lemmas()
{
    static const std::vector<Lemma> table = {
        {{"s-doubling",
          "rainbow-free: on the main diagonal (or [n]), 2*s_i <= s_{i+1} and s_i >= 2^(i-1)"},
         need_rainbow_free,
         [](const Context& x) {
             Outcome o;
             for (int i = 1; i <= x.s.ell; ++i) {
                 if (x.s.s(i) < (1 << std::min(i - 1, 30)))
                     o.fail("s_" + std::to_string(i) + " = " + std::to_string(x.s.s(i)) + " < 2^" + std::to_string(i - 1));
                 if (i < x.s.ell && 2 * x.s.s(i) > x.s.s(i + 1))
                     o.fail("2*s_" + std::to_string(i) + " > s_" + std::to_string(i + 1));
             }
             return o;
         }},
        {{"s2-power-bound", "rainbow-free: 2^(i-2)*s_2 <= s_i for 2 <= i <= ell, and 2^(ell-2)*s_2 <= m"},
         need_rainbow_free,
         [](const Context& x) {
             Outcome o;
             if (x.s.ell < 2)
                 return o;
             const int s2 = x.s.s(2);
             for (int i = 2; i <= x.s.ell; ++i)
                 if ((static_cast<long long>(s2) << (i - 2)) > x.s.s(i))
                     o.fail("2^" + std::to_string(i - 2) + "*s_2 > s_" + std::to_string(i));
             if ((static_cast<long long>(s2) << (x.s.ell - 2)) > x.seq_length)
                 o.fail("2^(ell-2)*s_2 = " + std::to_string(static_cast<long long>(s2) << (x.s.ell - 2)) + " > " +
                        std::to_string(x.seq_length));
             return o;
         }},
        {{"diagonal-palette", "rainbow-free: |c(D_m)| <= floor(log2 m) + 1 and |c(D_m)| <= log2(m/s_2) + 2"},
         need_rainbow_free,
         [](const Context& x) {
             Outcome o;
             if (x.s.ell > floor_log2(x.seq_length) + 1)
                 o.fail("ell = " + std::to_string(x.s.ell) + " exceeds floor(log2 m) + 1");
             if (x.s.ell >= 2 && (static_cast<long long>(x.s.s(2)) << (x.s.ell - 2)) > x.seq_length)
                 o.fail("ell exceeds log2(m/s_2) + 2");
             return o;
         }},
        {{"one-extra-color", "rainbow-free: every off-diagonal D_x has |c(D_x) \\ c(D_m)| <= 1"},
         need_rf_grid,
         [](const Context& x) {
             Outcome o;
             for (const auto& d : x.map->diagonals)
                 if (!d.main && d.extra.size() > 1)
                     o.fail("D_" + std::to_string(d.k) + " carries " + std::to_string(d.extra.size()) +
                            " colors outside c(D_m)");
             return o;
         }},
        {{"no-disjoint-corners", "rainbow-free: no contributing disjoint corners"},
         need_rf_grid,
         [](const Context& x) {
             Outcome o;
             const auto corners = find_disjoint_corners(x.pairs, *x.regions);
             if (!corners.empty())
                 o.fail("corner: vertical " + to_string(corners[0].vertical.alpha) + "," +
                        to_string(corners[0].vertical.beta) + " horizontal " + to_string(corners[0].horizontal.alpha) +
                        "," + to_string(corners[0].horizontal.beta));
             return o;
         }},
        {{"no-strict-disjoint-corners",
          "rainbow-free: no contributing disjoint corner whose four cells carry four distinct colors"},
         need_rf_grid,
         [](const Context& x) {
             Outcome o;
             for (const auto& k : find_disjoint_corners(x.pairs, *x.regions))
                 if (k.strict_colors)
                     o.fail("corner: vertical " + to_string(k.vertical.alpha) + "," + to_string(k.vertical.beta) +
                            " horizontal " + to_string(k.horizontal.alpha) + "," + to_string(k.horizontal.beta));
             return o;
         }},
        {{"main-palette-at-least-three", "exact rainbow-free (m+n+1)-coloring, m >= 3: |c(D_m)| >= 3"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             if (x.s.ell < 3)
                 o.fail("ell = " + std::to_string(x.s.ell));
             return o;
         }},
        {{"noncontributing-count",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: at most |c(D_m)| - 3 non-contributing off-diagonals"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             if (x.map->noncontributing_count() > x.s.ell - 3)
                 o.fail(std::to_string(x.map->noncontributing_count()) + " non-contributing off-diagonals, ell = " +
                        std::to_string(x.s.ell));
             return o;
         }},
        {{"contributing-count",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: at least m+n-1-log2(m/s_2) contributing off-diagonals"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             if (x.s.ell < 2) {
                 o.fail("s_2 undefined");
                 return o;
             }
             // count >= m+n-1-log2(m/s2)  <=>  s2 * 2^k <= m with k = m+n-1-count
             const int k = x.dims.m + x.dims.n - 1 - x.map->contributing_count();
             if (k > 0 && (k >= 62 || (static_cast<long long>(x.s.s(2)) << k) > x.dims.m))
                 o.fail(std::to_string(x.map->contributing_count()) + " contributing off-diagonals");
             return o;
         }},
        {{"each-diagonal-contributes",
          "exact rainbow-free (m+n+1)-coloring, m >= 3, |c(D_m)| = 3: each off-diagonal contributes exactly one "
          "color, found nowhere else"},
         extremal_rf(3, 3),
         [](const Context& x) {
             Outcome o;
             for (const auto& d : x.map->diagonals) {
                 if (d.main)
                     continue;
                 if (d.contributed.size() != 1) {
                     o.fail("D_" + std::to_string(d.k) + " contributes " + std::to_string(d.contributed.size()) +
                            " colors");
                     continue;
                 }
                 const ColorId ck = d.contributed.front();
                 for (const auto& other : x.map->diagonals)
                     if (other.k != d.k && std::binary_search(other.palette.begin(), other.palette.end(), ck))
                         o.fail("color " + std::to_string(ck) + " of D_" + std::to_string(d.k) + " also on D_" +
                                std::to_string(other.k));
             }
             return o;
         }},
        {{"three-color-no-jumps",
          "exact rainbow-free (m+n+1)-coloring, m >= 3, |c(D_m)| = 3: no jump between distinct colors outside "
          "c(D_m)"},
         extremal_rf(3, 3),
         [](const Context& x) {
             Outcome o;
             const auto jumps = distinct_off_palette_jumps(x);
             if (!jumps.empty())
                 o.fail(jump_text(jumps.front()));
             return o;
         }},
        {{"s3-block",
          "exact rainbow-free (m+n+1)-coloring, m >= 3, |c(D_m)| = 3: cells (i,j) with i,j < s_3 use main-diagonal "
          "colors"},
         extremal_rf(3, 3),
         [](const Context& x) {
             Outcome o;
             const int s3 = x.s.s(3);
             for (int i = 1; i < s3 && i <= x.dims.m; ++i)
                 for (int j = 1; j < s3 && j <= x.dims.n; ++j)
                     if (x.off_palette({i, j}))
                         o.fail("cell " + to_string({i, j}) + " is off the main palette");
             return o;
         }},
        {{"three-color-rainbow",
          "exact (m+n+1)-coloring, m >= 3, |c(D_m)| <= 3: a rainbow solution exists"},
         extremal_any(3, 3),
         [](const Context& x) {
             Outcome o;
             if (x.rainbow_free)
                 o.fail("coloring is rainbow-free");
             return o;
         }},
        {{"alternating-bound",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: for each delta colored off the main palette, "
          "|c(grid) \\ c(D_m)| <= m+n-1/2-|DD_delta|/3"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             std::set<ColorId> off;
             for (ColorId v : x.c.cells())
                 if (!x.map->in_main_palette(v))
                     off.insert(v);
             const long long extra = static_cast<long long>(off.size());
             for (int idx = 0; idx < x.dims.cells(); ++idx) {
                 const GridPoint delta = x.dims.point(idx);
                 if (!x.off_palette(delta))
                     continue;
                 const auto dd = delta_sets(delta, x.dims);
                 // 6*extra <= 6(m+n) - 3 - 2|DD|
                 if (6 * extra > 6LL * (x.dims.m + x.dims.n) - 3 - 2 * static_cast<long long>(dd.dd.size()))
                     o.fail("delta " + to_string(delta) + ": |DD| = " + std::to_string(dd.dd.size()));
             }
             return o;
         }},
        {{"jump-distance-lower",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: every delta colored off the main palette has "
          "(4m+9-6(floor(log2 m)+1))/4 <= d1+d2"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             const int lhs = 4 * x.dims.m + 9 - 6 * (floor_log2(x.dims.m) + 1);
             for (int idx = 0; idx < x.dims.cells(); ++idx) {
                 const GridPoint delta = x.dims.point(idx);
                 if (x.off_palette(delta) && lhs > 4 * (delta.i + delta.j))
                     o.fail("delta " + to_string(delta) + " is too short");
             }
             return o;
         }},
        {{"jump-distance-upper",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: a jump between distinct colors outside c(D_m) has "
          "d1+d2 <= 2 log2(m) + 1"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             const long long m2 = static_cast<long long>(x.dims.m) * x.dims.m;
             for (const auto& j : distinct_off_palette_jumps(x)) {
                 const int e = j.delta.i + j.delta.j - 1;  // need 2^e <= m^2
                 if (e >= 62 || (1LL << e) > m2)
                     o.fail(jump_text(j));
             }
             return o;
         }},
        {{"jump-free-range",
          "exact rainbow-free (m+n+1)-coloring: no jump between distinct colors outside c(D_m) when m >= 11 or "
          "n >= 14; when 8 <= m <= 10 such jumps have 5 <= d1+d2 <= 7"},
         extremal_rf(1),
         [](const Context& x) {
             Outcome o;
             for (const auto& j : distinct_off_palette_jumps(x)) {
                 const int dist = j.delta.i + j.delta.j;
                 if (x.dims.m >= 11 || x.dims.n >= 14)
                     o.fail(jump_text(j));
                 else if (x.dims.m >= 8 && (dist < 5 || dist > 7))
                     o.fail(jump_text(j));
             }
             return o;
         }},
        {{"jump-diagonal-relation",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: a jump alpha -> beta between distinct colors outside "
          "c(D_m), with delta in D_t, has 2m - t = b"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             for (const auto& j : distinct_off_palette_jumps(x)) {
                 const DiagonalIndex t = diagonal_index(j.delta, x.dims);
                 const DiagonalIndex b = diagonal_index(j.beta, x.dims);
                 if (2 * x.dims.m - t != b)
                     o.fail(jump_text(j));
             }
             return o;
         }},
        {{"no-distinct-jumps",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: for every jump alpha -> beta, c(alpha) in c(D_m) or "
          "c(beta) in c(D_m) or c(alpha) = c(beta)"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             const auto jumps = distinct_off_palette_jumps(x);
             if (!jumps.empty())
                 o.fail(jump_text(jumps.front()));
             return o;
         }},
        {{"consecutive-contributing-pairs",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: at least m+n-2 log2(m/s_2)-2 pairs of consecutive "
          "contributing off-diagonals"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             if (x.s.ell < 2) {
                 o.fail("s_2 undefined");
                 return o;
             }
             int count = 0;
             for (DiagonalIndex a = 1; a + 1 <= x.dims.diagonal_count(); ++a)
                 if (x.map->contributing(a) && x.map->contributing(a + 1))
                     ++count;
             // count >= m+n-2-2 log2(m/s2)  <=>  s2^2 * 2^k <= m^2 with k = m+n-2-count
             const int k = x.dims.m + x.dims.n - 2 - count;
             const long long s2 = x.s.s(2);
             if (k > 0 && (k >= 62 || (s2 * s2 << k) > static_cast<long long>(x.dims.m) * x.dims.m))
                 o.fail(std::to_string(count) + " consecutive contributing pairs");
             return o;
         }},
        {{"pairs-confined",
          "exact rainbow-free (m+n+1)-coloring, m >= 4: a horizontal pair meeting W allows at most 2 s_2 - 2 "
          "vertical pairs, and symmetrically"},
         extremal_rf(4),
         [](const Context& x) {
             Outcome o;
             if (!x.regions->defined) {
                 o.fail("W undefined");
                 return o;
             }
             const int cap = 2 * x.regions->s2 - 2;
             const bool h_in_w = std::any_of(x.pairs.begin(), x.pairs.end(), [&](const PairRecord& p) {
                 return p.kind == PairKind::horizontal && meets_w(x, p);
             });
             const bool v_in_w = std::any_of(x.pairs.begin(), x.pairs.end(), [&](const PairRecord& p) {
                 return p.kind == PairKind::vertical && meets_w(x, p);
             });
             if (h_in_w && count_kind(x.pairs, PairKind::vertical) > cap)
                 o.fail("too many vertical pairs");
             if (v_in_w && count_kind(x.pairs, PairKind::horizontal) > cap)
                 o.fail("too many horizontal pairs");
             return o;
         }},
        {{"pair-count-bounds",
          "exact rainbow-free (m+n+1)-coloring, m >= 3: at most n-1 horizontal and m-1 vertical pairs"},
         extremal_rf(3),
         [](const Context& x) {
             Outcome o;
             if (count_kind(x.pairs, PairKind::horizontal) > x.dims.n - 1)
                 o.fail("too many horizontal pairs");
             if (count_kind(x.pairs, PairKind::vertical) > x.dims.m - 1)
                 o.fail("too many vertical pairs");
             return o;
         }},
        {{"grid-rainbow-number", "exact (m+n+1)-coloring, m >= 2: a rainbow solution exists"},
         extremal_any(2, 1 << 30),
         [](const Context& x) {
             Outcome o;
             if (x.rainbow_free)
                 o.fail("coloring is rainbow-free");
             return o;
         }},
    };
    return table;
}

LemmaVerdict run_lemma(const Lemma& lemma, const Context& x)
{
    LemmaVerdict v;
    v.id = std::string(lemma.info.id);
    v.reason = lemma.hypothesis(x);
    v.applicable = v.reason.empty();
    if (v.applicable) {
        Outcome o = lemma.check(x);
        v.holds = o.holds;
        v.detail = std::move(o.detail);
    }
    return v;
}

}  // namespace

const std::vector<LemmaInfo>& lemma_registry()
{
    static const std::vector<LemmaInfo> infos = [] {
        std::vector<LemmaInfo> out;
        for (const auto& l : lemmas())
            out.push_back(l.info);
        return out;
    }();
    return infos;
}

bool is_known_lemma(std::string_view id)
{
    const auto& reg = lemma_registry();
    return std::any_of(reg.begin(), reg.end(), [&](const LemmaInfo& l) { return l.id == id; });
}

LemmaVerdict evaluate_lemma(std::string_view id, const Coloring& c)
{
    for (const auto& l : lemmas())
        if (l.info.id == id)
            return run_lemma(l, Context(c));
    throw std::invalid_argument("unknown lemma id '" + std::string(id) + "'");
}

std::vector<LemmaVerdict> lemma_suite(const Coloring& c)
{
    const Context x(c);
    std::vector<LemmaVerdict> out;
    for (const auto& l : lemmas())
        out.push_back(run_lemma(l, x));
    return out;
}

StructureReport analyze(const Coloring& c, YRegionMode mode)
{
    const Coloring relabeled = relabel_diagonal_first(c);
    StructureReport report{relabeled, is_exact(c), false, s_sequence(relabeled), {}, {}, {}, {}, {}};
    report.rainbow_free = is_rainbow_free(c, SolutionIndex::of(c.ground(), c.dims()));
    if (c.ground() == Ground::grid) {
        report.map = contributing_map(relabeled);
        report.regions = region_mask(relabeled, mode);
        report.pairs = find_pairs(relabeled, report.map);
        report.corners = find_disjoint_corners(report.pairs, report.regions);
    }
    report.verdicts = lemma_suite(relabeled);
    return report;
}

}  // namespace rainbow
