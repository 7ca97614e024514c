#include "rainbow/oracle.hpp"

#include <stdexcept>

namespace rainbow {

namespace {

using Blocks = std::vector<std::vector<int>>;

struct Enumerator {
    Ground ground;
    GridDims dims;
    int r;
    int cells;
    OracleResult& out;
    std::optional<Coloring> first;

    bool sums_inside(int a, int b, int& sum) const
    {
        if (ground == Ground::interval) {
            const int s = (a + 1) + (b + 1);
            if (s > dims.n)
                return false;
            sum = s - 1;
            return true;
        }
        const GridPoint p = dims.point(a) + dims.point(b);
        if (!dims.contains(p))
            return false;
        sum = dims.flat(p);
        return true;
    }

    bool rainbow_free(const std::vector<ColorId>& color) const
    {
        for (int a = 0; a < cells; ++a)
            for (int b = 0; b < cells; ++b) {
                int s = 0;
                if (a == b || !sums_inside(a, b, s))
                    continue;
                if (color[a] != color[b] && color[a] != color[s] && color[b] != color[s])
                    return false;
            }
        return true;
    }

    void visit(const Blocks& blocks)
    {
        ++out.partitions;
        std::vector<ColorId> color(cells);
        for (std::size_t k = 0; k < blocks.size(); ++k)
            for (int cell : blocks[k])
                color[cell] = static_cast<ColorId>(k) + 1;
        if (!rainbow_free(color))
            return;
        ++out.rainbow_free;
        if (!first)
            first = Coloring(dims, r, std::move(color), ground);
    }

    // Places cell `next` into an existing block or a new one.
    void place(Blocks& blocks, int next)
    {
        const int missing = r - static_cast<int>(blocks.size());
        if (missing > cells - next)
            return;
        if (next == cells) {
            visit(blocks);
            return;
        }
        // index, not reference: the recursion may reallocate `blocks`
        const std::size_t existing = blocks.size();
        for (std::size_t k = 0; k < existing; ++k) {
            blocks[k].push_back(next);
            place(blocks, next + 1);
            blocks[k].pop_back();
        }
        if (static_cast<int>(blocks.size()) < r) {
            blocks.push_back({next});
            place(blocks, next + 1);
            blocks.pop_back();
        }
    }
};

}  // namespace

OracleResult naive_oracle(Ground ground, GridDims dims, int r)
{
    if (dims.cells() > naive_oracle_cell_cap)
        throw std::invalid_argument("naive_oracle is capped at " + std::to_string(naive_oracle_cell_cap) + " cells");
    if (ground == Ground::interval && dims.m != 1)
        throw std::invalid_argument("interval ground needs a single row");
    if (r < 1 || r > dims.cells() + 1)
        throw std::out_of_range("color count outside [1, m*n+1]");

    OracleResult out;
    Enumerator e{ground, dims, r, dims.cells(), out, std::nullopt};
    Blocks blocks;
    e.place(blocks, 0);

    Certificate& cert = out.certificate;
    cert.ground = ground;
    cert.dims = dims;
    cert.r = r;
    cert.nodes = out.partitions;
    cert.engine = "naive-oracle";
    if (e.first) {
        cert.kind = CertificateKind::witness;
        cert.coloring = canonicalize(*e.first);
    } else {
        cert.kind = CertificateKind::exhaustion;
    }
    return out;
}

}  // namespace rainbow
