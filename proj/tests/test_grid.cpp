#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow/grid.hpp"

#include <algorithm>
#include <set>

using namespace rainbow;

namespace {

// Independent brute force: every unordered {a, b} with a + b inside.
std::set<std::tuple<int, int, int, int, int, int>> brute_solutions(GridDims d)
{
    std::set<std::tuple<int, int, int, int, int, int>> out;
    for (int i1 = 1; i1 <= d.m; ++i1)
        for (int j1 = 1; j1 <= d.n; ++j1)
            for (int i2 = 1; i2 <= d.m; ++i2)
                for (int j2 = 1; j2 <= d.n; ++j2) {
                    if (i1 + i2 > d.m || j1 + j2 > d.n)
                        continue;
                    auto a = std::make_pair(i1, j1), b = std::make_pair(i2, j2);
                    if (b < a)
                        std::swap(a, b);
                    out.insert({a.first, a.second, b.first, b.second, i1 + i2, j1 + j2});
                }
    return out;
}

}  // namespace

TEST_CASE("dims normalize by transposing")
{
    const GridDims d = GridDims::make(5, 3);
    CHECK(d.m == 3);
    CHECK(d.n == 5);
    CHECK(d.cells() == 15);
    CHECK_THROWS_AS(GridDims::make(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(GridDims::make(2, -1), std::invalid_argument);
}

TEST_CASE("diagonal_index examples")
{
    CHECK(diagonal_index({3, 1}, GridDims::make(3, 3)) == 1);
    CHECK(diagonal_index({1, 1}, GridDims::make(3, 3)) == 3);
    CHECK(diagonal_index({1, 3}, GridDims::make(2, 3)) == 4);
    CHECK_THROWS_AS(diagonal_index({4, 1}, GridDims::make(3, 3)), std::out_of_range);
    CHECK_THROWS_AS(diagonal_index({0, 1}, GridDims::make(3, 3)), std::out_of_range);
}

TEST_CASE("diagonal_cells examples")
{
    CHECK(diagonal_cells(3, GridDims::make(3, 3)) == std::vector<GridPoint>{{1, 1}, {2, 2}, {3, 3}});
    CHECK(diagonal_cells(1, GridDims::make(3, 4)) == std::vector<GridPoint>{{3, 1}});
    CHECK(diagonal_cells(4, GridDims::make(2, 3)) == std::vector<GridPoint>{{1, 3}});
    CHECK_THROWS_AS(diagonal_cells(0, GridDims::make(2, 3)), std::out_of_range);
    CHECK_THROWS_AS(diagonal_cells(5, GridDims::make(2, 3)), std::out_of_range);
}

TEST_CASE("diagonals partition the grid")
{
    for (int m = 1; m <= 32; ++m)
        for (int n = m; n <= 32; ++n) {
            const GridDims d = GridDims::make(m, n);
            std::vector<int> hits(d.cells(), 0);
            int total = 0;
            for (int k = 1; k <= d.diagonal_count(); ++k) {
                const auto cells = diagonal_cells(k, d);
                REQUIRE_FALSE(cells.empty());
                REQUIRE(std::is_sorted(cells.begin(), cells.end()));
                total += static_cast<int>(cells.size());
                for (GridPoint p : cells) {
                    REQUIRE(diagonal_index(p, d) == k);
                    ++hits[d.flat(p)];
                }
            }
            REQUIRE(total == d.cells());
            REQUIRE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
            REQUIRE(diagonal_cells(1, d).size() == 1);
            REQUIRE(diagonal_cells(d.diagonal_count(), d).size() == 1);
        }
}

TEST_CASE("enumerate_solutions examples")
{
    const auto s22 = enumerate_solutions(GridDims::make(2, 2));
    REQUIRE(s22.size() == 1);
    CHECK(s22[0].alpha == GridPoint{1, 1});
    CHECK(s22[0].beta == GridPoint{1, 1});
    CHECK(s22[0].gamma == GridPoint{2, 2});
    CHECK(s22[0].degenerate);

    const auto s23 = enumerate_solutions(GridDims::make(2, 3));
    REQUIRE(s23.size() == 2);
    CHECK(s23[0].degenerate);
    CHECK_FALSE(s23[1].degenerate);
    CHECK(s23[1].alpha == GridPoint{1, 1});
    CHECK(s23[1].beta == GridPoint{1, 2});
    CHECK(s23[1].gamma == GridPoint{2, 3});

    CHECK(enumerate_solutions(GridDims::make(1, 5)).empty());
}

TEST_CASE("enumerate_solutions matches brute force")
{
    for (int m = 1; m <= 7; ++m)
        for (int n = m; n <= 8; ++n) {
            const GridDims d = GridDims::make(m, n);
            const auto sols = enumerate_solutions(d);
            REQUIRE(std::is_sorted(sols.begin(), sols.end()));
            std::set<std::tuple<int, int, int, int, int, int>> got;
            for (const auto& s : sols) {
                REQUIRE(s.alpha + s.beta == s.gamma);
                REQUIRE(d.contains(s.gamma));
                REQUIRE(s.degenerate == (s.alpha == s.beta));
                REQUIRE_FALSE(s.beta < s.alpha);
                std::set<GridPoint> distinct{s.alpha, s.beta, s.gamma};
                REQUIRE(distinct.size() == (s.degenerate ? 2u : 3u));
                got.insert({s.alpha.i, s.alpha.j, s.beta.i, s.beta.j, s.gamma.i, s.gamma.j});
            }
            REQUIRE(got.size() == sols.size());
            REQUIRE(got == brute_solutions(d));
        }
}

TEST_CASE("interval solutions")
{
    const auto s = enumerate_interval_solutions(4);
    // 1+1=2, 1+2=3, 1+3=4, 2+2=4
    REQUIRE(s.size() == 4);
    CHECK(std::count_if(s.begin(), s.end(), [](const SolutionTriple& t) { return t.degenerate; }) == 2);
    for (const auto& t : s) {
        CHECK(t.alpha.i == 1);
        CHECK(t.alpha.j + t.beta.j == t.gamma.j);
    }
    CHECK(enumerate_interval_solutions(1).empty());
}

TEST_CASE("landing arithmetic examples")
{
    const GridDims d3 = GridDims::make(3, 3);
    CHECK(landing_sum(4, 2, d3).index == 3);
    CHECK(landing_sum(4, 2, d3).inside);
    CHECK(landing_sum(5, 5, GridDims::make(5, 5)).index == 5);
    CHECK(landing_diff(3, 2, d3).index == 4);
    const Landing out = landing_sum(1, 1, d3);
    CHECK(out.index == -1);
    CHECK_FALSE(out.inside);
}

TEST_CASE("landing holds for realized sums and differences")
{
    for (int m = 1; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) {
            const GridDims d = GridDims::make(m, n);
            for (int x = 0; x < d.cells(); ++x)
                for (int y = 0; y < d.cells(); ++y) {
                    const GridPoint a = d.point(x), b = d.point(y);
                    const int ka = diagonal_index(a, d), kb = diagonal_index(b, d);
                    if (d.contains(a + b))
                        REQUIRE(diagonal_index(a + b, d) == landing_sum(ka, kb, d).index);
                    if (d.contains(a - b))
                        REQUIRE(diagonal_index(a - b, d) == landing_diff(ka, kb, d).index);
                }
        }
}

TEST_CASE("detect_jump examples")
{
    const auto j = detect_jump({2, 7}, {4, 11});
    REQUIRE(j);
    CHECK(j->delta == GridPoint{2, 4});
    CHECK(j->distance == 6);
    const auto k = detect_jump({5, 2}, {7, 3});
    REQUIRE(k);
    CHECK(k->delta == GridPoint{2, 1});
    CHECK(k->distance == 3);
    CHECK_FALSE(detect_jump({2, 7}, {2, 9}));
    CHECK_FALSE(detect_jump({4, 11}, {2, 7}));
}

TEST_CASE("jump_window examples")
{
    const GridDims d = GridDims::make(8, 12);
    CHECK(jump_window({2, 7}, {4, 11}, d) == std::vector<DiagonalIndex>{12, 14, 16});
    // minimal jump: nothing strictly between apart from a, b, m
    CHECK(jump_window({2, 2}, {3, 3}, d).empty());
    CHECK_THROWS_AS(jump_window({2, 7}, {2, 9}, d), std::invalid_argument);
}

TEST_CASE("jump_window never contains a, b or m and stays in range")
{
    for (int m = 2; m <= 7; ++m)
        for (int n = m; n <= 7; ++n) {
            const GridDims d = GridDims::make(m, n);
            for (int x = 0; x < d.cells(); ++x)
                for (int y = 0; y < d.cells(); ++y) {
                    const GridPoint a = d.point(x), b = d.point(y);
                    if (!detect_jump(a, b))
                        continue;
                    const int ka = diagonal_index(a, d), kb = diagonal_index(b, d);
                    for (int k : jump_window(a, b, d)) {
                        REQUIRE(is_valid_diagonal(k, d));
                        REQUIRE(k != ka);
                        REQUIRE(k != kb);
                        REQUIRE(k != m);
                        REQUIRE(k > m + a.j - b.i);
                        REQUIRE(k < m + b.j - a.i);
                    }
                }
        }
}

TEST_CASE("jump_cover examples")
{
    const GridDims d = GridDims::make(8, 12);
    const CoverVerdict v = jump_cover({2, 7}, {4, 11}, {3, 9}, d);
    CHECK(v.covered);
    CHECK(v.from_alpha);
    CHECK(v.to_beta);
    CHECK_FALSE(v.neither());
    CHECK_FALSE(jump_cover({2, 7}, {4, 11}, {2, 7}, d).covered);
}

TEST_CASE("jump cover is total on small grids")
{
    for (int m = 2; m <= 7; ++m)
        for (int n = m; n <= 7; ++n) {
            const GridDims d = GridDims::make(m, n);
            for (int x = 0; x < d.cells(); ++x)
                for (int y = 0; y < d.cells(); ++y) {
                    const GridPoint a = d.point(x), b = d.point(y);
                    if (!detect_jump(a, b))
                        continue;
                    for (int z = 0; z < d.cells(); ++z)
                        REQUIRE_FALSE(jump_cover(a, b, d.point(z), d).neither());
                }
        }
}

TEST_CASE("floor_log2")
{
    CHECK(floor_log2(1) == 0);
    CHECK(floor_log2(2) == 1);
    CHECK(floor_log2(3) == 1);
    CHECK(floor_log2(8) == 3);
    CHECK(floor_log2(10000) == 13);
}
