#include "rainbow/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rainbow {

std::string_view to_string(Ground g)
{
    return g == Ground::grid ? "grid" : "interval";
}

Coloring::Coloring(GridDims dims, int r, std::vector<ColorId> cells, Ground ground)
    : ground_(ground), dims_(dims), r_(r), cells_(std::move(cells))
{
    if (ground_ == Ground::interval && dims_.m != 1)
        throw std::invalid_argument("interval colorings are a single row");
    if (r_ < 1)
        throw std::invalid_argument("color count must be positive");
    if (static_cast<int>(cells_.size()) != dims_.cells())
        throw std::invalid_argument("expected " + std::to_string(dims_.cells()) + " cells, got " +
                                    std::to_string(cells_.size()));
    for (ColorId x : cells_)
        if (x < 1 || x > r_)
            throw std::invalid_argument("color " + std::to_string(x) + " outside [1, " + std::to_string(r_) + "]");
}

Coloring Coloring::interval(int r, std::vector<ColorId> cells)
{
    const int n = static_cast<int>(cells.size());
    return Coloring(GridDims{1, n}, r, std::move(cells), Ground::interval);
}

SolutionIndex::SolutionIndex(Ground ground, GridDims dims, const std::vector<SolutionTriple>& triples)
    : ground_(ground), dims_(dims)
{
    triples_.reserve(triples.size());
    for (const auto& t : triples)
        triples_.push_back({dims.flat(t.alpha), dims.flat(t.beta), dims.flat(t.gamma), t.degenerate});
}

SolutionIndex SolutionIndex::grid(GridDims dims)
{
    return SolutionIndex(Ground::grid, dims, enumerate_solutions(dims));
}

SolutionIndex SolutionIndex::interval(int n)
{
    return SolutionIndex(Ground::interval, GridDims{1, n}, enumerate_interval_solutions(n));
}

SolutionIndex SolutionIndex::of(Ground ground, GridDims dims)
{
    return ground == Ground::grid ? grid(dims) : interval(dims.n);
}

std::size_t SolutionIndex::nondegenerate_count() const
{
    return static_cast<std::size_t>(
        std::count_if(triples_.begin(), triples_.end(), [](const CellTriple& t) { return !t.degenerate; }));
}

bool is_exact(const Coloring& c)
{
    std::vector<bool> seen(c.colors() + 1, false);
    int distinct = 0;
    for (ColorId x : c.cells())
        if (!seen[x]) {
            seen[x] = true;
            ++distinct;
        }
    return distinct == c.colors();
}

std::vector<ColorId> canonical_labels(std::span<const ColorId> cells, std::span<const int> order)
{
    std::vector<ColorId> relabel;
    std::vector<ColorId> out(cells.size());
    int next = 0;
    for (int idx : order) {
        const ColorId x = cells[idx];
        if (static_cast<std::size_t>(x) >= relabel.size())
            relabel.resize(x + 1, 0);
        if (relabel[x] == 0)
            relabel[x] = ++next;
        out[idx] = relabel[x];
    }
    return out;
}

Coloring canonicalize(const Coloring& c)
{
    std::vector<int> order(c.cells().size());
    std::iota(order.begin(), order.end(), 0);
    return Coloring(c.dims(), c.colors(), canonical_labels(c.cells(), order), c.ground());
}

namespace {

bool three_distinct(ColorId x, ColorId y, ColorId z)
{
    return x != y && x != z && y != z;
}

}  // namespace

bool is_rainbow(const SolutionTriple& t, const Coloring& c)
{
    if (t.degenerate || t.alpha == t.beta)
        return false;
    return three_distinct(c.at(t.alpha), c.at(t.beta), c.at(t.gamma));
}

bool is_rainbow(const CellTriple& t, const Coloring& c)
{
    if (t.degenerate)
        return false;
    return three_distinct(c.at_flat(t.alpha), c.at_flat(t.beta), c.at_flat(t.gamma));
}

std::optional<CellTriple> find_rainbow(const Coloring& c, const SolutionIndex& index)
{
    if (c.dims() != index.dims() || c.ground() != index.ground())
        throw std::invalid_argument("solution index does not match the coloring's ground set");
    for (const auto& t : index.triples())
        if (is_rainbow(t, c))
            return t;
    return std::nullopt;
}

bool is_rainbow_free(const Coloring& c, const SolutionIndex& index)
{
    return !find_rainbow(c, index).has_value();
}

std::vector<ColorId> main_diagonal_colors(const Coloring& c)
{
    if (c.ground() == Ground::interval)
        return {c.cells().begin(), c.cells().end()};
    std::vector<ColorId> out;
    out.reserve(c.dims().m);
    for (int x = 1; x <= c.dims().m; ++x)
        out.push_back(c.at({x, x}));
    return out;
}

SSequence s_sequence_of(std::span<const ColorId> diagonal)
{
    SSequence s;
    std::vector<ColorId> seen;
    for (std::size_t x = 0; x < diagonal.size(); ++x) {
        if (std::find(seen.begin(), seen.end(), diagonal[x]) == seen.end()) {
            seen.push_back(diagonal[x]);
            s.values.push_back(static_cast<int>(x) + 1);
        }
    }
    s.ell = static_cast<int>(seen.size());
    return s;
}

SSequence s_sequence(const Coloring& c)
{
    const auto diag = main_diagonal_colors(c);
    return s_sequence_of(diag);
}

Coloring merge_colors(const Coloring& c, ColorId from, ColorId to)
{
    if (from == to)
        throw std::invalid_argument("merge_colors requires two different colors");
    if (from < 1 || from > c.colors() || to < 1 || to > c.colors())
        throw std::out_of_range("merge_colors: color outside [1, r]");
    if (c.colors() < 2)
        throw std::invalid_argument("merge_colors needs at least two colors");
    std::vector<ColorId> cells(c.cells().begin(), c.cells().end());
    for (auto& x : cells)
        if (x == from)
            x = to;
    std::vector<int> order(cells.size());
    std::iota(order.begin(), order.end(), 0);
    return Coloring(c.dims(), c.colors() - 1, canonical_labels(cells, order), c.ground());
}

Coloring relabel_diagonal_first(const Coloring& c)
{
    std::vector<ColorId> relabel(c.colors() + 1, 0);
    int next = 0;
    for (ColorId x : main_diagonal_colors(c))
        if (relabel[x] == 0)
            relabel[x] = ++next;
    for (ColorId x : c.cells())
        if (relabel[x] == 0)
            relabel[x] = ++next;
    std::vector<ColorId> cells;
    cells.reserve(c.cells().size());
    for (ColorId x : c.cells())
        cells.push_back(relabel[x]);
    return Coloring(c.dims(), c.colors(), std::move(cells), c.ground());
}

std::string format_text(const Coloring& c)
{
    std::ostringstream os;
    os << c.colors() << '\n';
    const auto d = c.dims();
    for (int i = 1; i <= d.m; ++i) {
        for (int j = 1; j <= d.n; ++j)
            os << (j > 1 ? " " : "") << c.at({i, j});
        os << '\n';
    }
    return os.str();
}

Coloring parse_text(std::string_view text, Ground ground)
{
    std::istringstream is{std::string(text)};
    std::string line;
    int r = 0;
    std::vector<std::vector<ColorId>> rows;
    bool have_r = false;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        if (!have_r) {
            if (!(ls >> r))
                throw std::invalid_argument("coloring text: expected color count on first line");
            have_r = true;
            continue;
        }
        std::vector<ColorId> row;
        ColorId x = 0;
        while (ls >> x)
            row.push_back(x);
        if (!ls.eof())
            throw std::invalid_argument("coloring text: non-integer entry in row " + std::to_string(rows.size() + 1));
        rows.push_back(std::move(row));
    }
    if (!have_r || rows.empty())
        throw std::invalid_argument("coloring text: missing rows");
    const std::size_t width = rows.front().size();
    for (const auto& row : rows)
        if (row.size() != width || width == 0)
            throw std::invalid_argument("coloring text: ragged rows");
    const int m = static_cast<int>(rows.size());
    const int n = static_cast<int>(width);
    if (m > n)
        throw std::invalid_argument("coloring text: expected rows <= columns");
    std::vector<ColorId> cells;
    for (const auto& row : rows)
        cells.insert(cells.end(), row.begin(), row.end());
    return Coloring(GridDims{m, n}, r, std::move(cells), ground);
}

std::string render(const Coloring& c)
{
    int width = static_cast<int>(std::to_string(c.colors()).size());
    std::ostringstream os;
    const auto d = c.dims();
    for (int i = 1; i <= d.m; ++i) {
        for (int j = 1; j <= d.n; ++j) {
            std::string s = std::to_string(c.at({i, j}));
            os << (j > 1 ? " " : "") << std::string(width - s.size(), ' ') << s;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace rainbow
