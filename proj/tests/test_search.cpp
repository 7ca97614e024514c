#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rainbow/constructions.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/search.hpp"

#include <set>

using namespace rainbow;

namespace {

SearchOutcome decide(GridDims d, int r, SearchOptions o = {})
{
    return exists_rainbow_free(SolutionIndex::grid(d), r, o);
}

SearchStatus kind_of(const Certificate& c)
{
    return c.kind == CertificateKind::witness ? SearchStatus::witness : SearchStatus::exhaustion;
}

std::vector<std::pair<Ground, GridDims>> oracle_sizes()
{
    std::vector<std::pair<Ground, GridDims>> out;
    for (int m = 1; m <= 10; ++m)
        for (int n = m; m * n <= 10; ++n)
            out.push_back({Ground::grid, GridDims::make(m, n)});
    for (int n = 1; n <= 10; ++n)
        out.push_back({Ground::interval, GridDims{1, n}});
    return out;
}

}  // namespace

TEST_CASE("exists_rainbow_free examples")
{
    const auto w = decide(GridDims::make(3, 3), 6);
    REQUIRE(w.status == SearchStatus::witness);
    REQUIRE(w.certificate);
    const Coloring& c = *w.certificate->coloring;
    CHECK(is_exact(c));
    CHECK(c.colors() == 6);
    CHECK(is_rainbow_free(c, SolutionIndex::grid(c.dims())));
    CHECK(c == canonicalize(c));

    const auto e = decide(GridDims::make(3, 3), 7);
    CHECK(e.status == SearchStatus::exhaustion);
    CHECK_FALSE(e.certificate->coloring);
    CHECK(e.certificate->engine == engine_version);

    const auto all = decide(GridDims::make(2, 2), 4);
    REQUIRE(all.status == SearchStatus::witness);
    CHECK(render(*all.certificate->coloring) == "1 2\n3 4\n");
}

TEST_CASE("color count range")
{
    const auto idx = SolutionIndex::grid(GridDims::make(2, 2));
    CHECK_THROWS_AS(exists_rainbow_free(idx, 0), std::out_of_range);
    CHECK_THROWS_AS(exists_rainbow_free(idx, 6), std::out_of_range);
    const auto vacuous = exists_rainbow_free(idx, 5);
    CHECK(vacuous.status == SearchStatus::exhaustion);
    CHECK(vacuous.nodes == 0);
}

TEST_CASE("naive oracle examples")
{
    for (int r = 1; r <= 4; ++r)
        CHECK(naive_oracle(Ground::grid, GridDims::make(2, 2), r).certificate.kind == CertificateKind::witness);
    const OracleResult e = naive_oracle(Ground::grid, GridDims::make(3, 3), 7);
    CHECK(e.certificate.kind == CertificateKind::exhaustion);
    CHECK(e.partitions == 462);  // S(9,7)
    CHECK(e.rainbow_free == 0);
    CHECK(naive_oracle(Ground::grid, GridDims::make(2, 4), 7).certificate.kind == CertificateKind::exhaustion);
    CHECK(naive_oracle(Ground::grid, GridDims::make(2, 5), 3).partitions == 9330);  // S(10,3)
    CHECK_THROWS_AS(naive_oracle(Ground::grid, GridDims::make(3, 4), 2), std::invalid_argument);
}

TEST_CASE("engine agrees with the naive oracle")
{
    for (auto [ground, d] : oracle_sizes()) {
        const auto idx = SolutionIndex::of(ground, d);
        for (int r = 1; r <= d.cells() + 1; ++r) {
            CAPTURE(d.m);
            CAPTURE(d.n);
            CAPTURE(r);
            const OracleResult ref = naive_oracle(ground, d, r);
            for (CellOrder order : {CellOrder::row_major, CellOrder::diagonal_major}) {
                SearchOptions o;
                o.order = order;
                const SearchOutcome got = exists_rainbow_free(idx, r, o);
                REQUIRE(got.status == kind_of(ref.certificate));
            }
            // single thread, row-major: the lexicographically least canonical witness
            const SearchOutcome lex = exists_rainbow_free(idx, r);
            if (lex.status == SearchStatus::witness)
                REQUIRE(*lex.certificate->coloring == *ref.certificate.coloring);
            if (r <= d.cells()) {
                const auto sum = enumerate_rainbow_free(idx, r, [](const Coloring&) { return true; });
                REQUIRE(sum.exhaustive);
                REQUIRE(sum.count == ref.rainbow_free);
            }
        }
    }
}

TEST_CASE("enumerate_rainbow_free examples")
{
    const auto idx = SolutionIndex::grid(GridDims::make(2, 2));
    std::vector<Coloring> seen;
    enumerate_rainbow_free(idx, 4, [&](const Coloring& c) {
        seen.push_back(c);
        return true;
    });
    REQUIRE(seen.size() == 1);

    std::set<std::vector<ColorId>> got;
    enumerate_rainbow_free(SolutionIndex::interval(3), 2, [&](const Coloring& c) {
        got.insert({c.cells().begin(), c.cells().end()});
        return true;
    });
    CHECK(got == std::set<std::vector<ColorId>>{{1, 1, 2}, {1, 2, 1}, {1, 2, 2}});

    // each coloring is canonical, exact, rainbow-free and distinct
    const auto idx33 = SolutionIndex::grid(GridDims::make(3, 3));
    std::set<std::vector<ColorId>> distinct;
    enumerate_rainbow_free(idx33, 5, [&](const Coloring& c) {
        REQUIRE(c == canonicalize(c));
        REQUIRE(is_exact(c));
        REQUIRE(is_rainbow_free(c, idx33));
        distinct.insert({c.cells().begin(), c.cells().end()});
        return true;
    });
    CHECK_FALSE(distinct.empty());

    int taken = 0;
    const auto cut = enumerate_rainbow_free(idx33, 3, [&](const Coloring&) { return ++taken < 5; });
    CHECK(taken == 5);
    CHECK_FALSE(cut.exhaustive);
}

TEST_CASE("threads do not change kinds or counts")
{
    SearchOptions par;
    par.budget.threads = 4;
    for (auto [m, n] : {std::pair{3, 4}, {2, 6}, {4, 4}}) {
        const GridDims d = GridDims::make(m, n);
        const auto idx = SolutionIndex::grid(d);
        for (int r = m + n - 1; r <= m + n + 1; ++r) {
            const auto one = exists_rainbow_free(idx, r);
            const auto many = exists_rainbow_free(idx, r, par);
            REQUIRE(one.status == many.status);
            if (many.status == SearchStatus::witness)
                REQUIRE(is_rainbow_free(*many.certificate->coloring, idx));
        }
    }
    const auto idx = SolutionIndex::grid(GridDims::make(3, 4));
    for (int r = 2; r <= 7; ++r) {
        const auto a = enumerate_rainbow_free(idx, r, [](const Coloring&) { return true; });
        const auto b = enumerate_rainbow_free(idx, r, [](const Coloring&) { return true; }, par);
        REQUIRE(a.count == b.count);
    }
}

TEST_CASE("budgets produce indeterminate results, never exhaustion")
{
    SearchOptions tight;
    tight.budget.max_nodes = 10;
    const auto out = decide(GridDims::make(3, 4), 8, tight);
    CHECK(out.status == SearchStatus::indeterminate);
    CHECK_FALSE(out.certificate);

    tight.budget.threads = 3;
    CHECK(decide(GridDims::make(3, 4), 8, tight).status == SearchStatus::indeterminate);

    const RbResult partial = rb_search(GridDims::make(3, 4), tight);
    CHECK_FALSE(partial.rb);
    CHECK(partial.lower <= 8);
    CHECK(partial.upper >= 8);
    CHECK(partial.lower <= partial.upper);
}

TEST_CASE("rb_search examples")
{
    const RbResult r23 = rb_search(GridDims::make(2, 3));
    REQUIRE(r23.rb);
    CHECK(*r23.rb == 6);
    REQUIRE(r23.witness);
    CHECK(r23.witness->r == 5);
    CHECK(r23.witness->kind == CertificateKind::witness);
    REQUIRE(r23.exhaustion);
    CHECK(r23.exhaustion->r == 6);
    CHECK(r23.exhaustion->kind == CertificateKind::exhaustion);

    CHECK(rb_search(GridDims::make(1, 5)).rb == 6);
    CHECK(rb_search(GridDims::make(3, 4)).rb == 8);
}

TEST_CASE("scan and bisect agree, on grids and intervals")
{
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 4; ++n) {
            const GridDims d = GridDims::make(m, n);
            const auto idx = SolutionIndex::grid(d);
            const RbResult scan = rb_search(idx, 1);
            const RbResult bis = rb_search(idx, 1, {}, RbStrategy::bisect);
            REQUIRE(scan.rb);
            REQUIRE(scan.rb == bis.rb);
            REQUIRE(*scan.rb == closed_form_rb_grid(d));
        }
    for (int n = 1; n <= 14; ++n) {
        const RbResult res = rb_search_interval(n);
        REQUIRE(res.rb == closed_form_rb_interval(n));
        const RbResult bis = rb_search(SolutionIndex::interval(n), 1, {}, RbStrategy::bisect);
        REQUIRE(bis.rb == res.rb);
    }
}

TEST_CASE("witness colors are downward closed")
{
    for (auto [m, n] : {std::pair{2, 3}, {3, 3}, {2, 5}}) {
        const GridDims d = GridDims::make(m, n);
        const int rb = m + n + 1;
        for (int r = 1; r <= d.cells(); ++r)
            REQUIRE((decide(d, r).status == SearchStatus::witness) == (r < rb));
    }
}

TEST_CASE("verify_certificate")
{
    auto w = decide(GridDims::make(3, 3), 6).certificate.value();
    CHECK(verify_certificate(w));
    CHECK(w.verified);

    auto e = decide(GridDims::make(3, 3), 7).certificate.value();
    CHECK(verify_certificate(e));

    Certificate lie = e;
    lie.r = 6;  // a rainbow-free 6-coloring exists
    CHECK_FALSE(verify_certificate(lie));
    CHECK_FALSE(lie.verified);

    Certificate bad = w;
    std::vector<ColorId> cells(9);
    for (int i = 0; i < 9; ++i)
        cells[i] = 1 + i % 6;
    bad.coloring = Coloring(GridDims::make(3, 3), 6, cells);
    CHECK_FALSE(verify_certificate(bad));
}

TEST_CASE("cell orders are permutations")
{
    const auto idx = SolutionIndex::grid(GridDims::make(3, 5));
    for (CellOrder order : {CellOrder::row_major, CellOrder::diagonal_major}) {
        auto o = cell_order(idx, order);
        REQUIRE(o.size() == 15);
        std::set<int> s(o.begin(), o.end());
        CHECK(s.size() == 15);
    }
    const auto dm = cell_order(idx, CellOrder::diagonal_major);
    const GridDims d = GridDims::make(3, 5);
    // the main diagonal comes first
    CHECK(dm[0] == d.flat({1, 1}));
    CHECK(dm[1] == d.flat({2, 2}));
    CHECK(dm[2] == d.flat({3, 3}));
}
