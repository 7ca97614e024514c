#include "rainbow/search.hpp"

#include "rainbow/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rainbow {

std::string_view to_string(CertificateKind k)
{
    return k == CertificateKind::witness ? "witness" : "exhaustion";
}

std::vector<int> cell_order(const SolutionIndex& index, CellOrder order)
{
    const GridDims dims = index.dims();
    std::vector<int> out(dims.cells());
    std::iota(out.begin(), out.end(), 0);
    if (order == CellOrder::row_major || index.ground() == Ground::interval)
        return out;

    out.clear();
    const int m = dims.m;
    auto take = [&](DiagonalIndex k) {
        if (is_valid_diagonal(k, dims))
            for (GridPoint p : diagonal_cells(k, dims))
                out.push_back(dims.flat(p));
    };
    take(m);
    for (int d = 1; d < dims.diagonal_count(); ++d) {
        take(m + d);
        take(m - d);
    }
    return out;
}

namespace {

// Triples keyed by the rank at which their last cell gets colored.
struct Plan {
    int cells = 0;
    int r = 0;
    std::vector<int> order;                  // rank -> flat cell
    std::vector<int> offset;                 // rank -> first entry in `others`
    std::vector<std::array<int, 2>> others;  // ranks of the two earlier cells

    Plan(const SolutionIndex& index, int colors, CellOrder cell_order_kind)
        : cells(index.cells()), r(colors), order(cell_order(index, cell_order_kind))
    {
        std::vector<int> rank(cells);
        for (int k = 0; k < cells; ++k)
            rank[order[k]] = k;
        std::vector<std::vector<std::array<int, 2>>> per_rank(cells);
        for (const auto& t : index.triples()) {
            if (t.degenerate)
                continue;
            std::array<int, 3> rs{rank[t.alpha], rank[t.beta], rank[t.gamma]};
            std::sort(rs.begin(), rs.end());
            per_rank[rs[2]].push_back({rs[0], rs[1]});
        }
        offset.assign(cells + 1, 0);
        for (int k = 0; k < cells; ++k) {
            offset[k + 1] = offset[k] + static_cast<int>(per_rank[k].size());
            others.insert(others.end(), per_rank[k].begin(), per_rank[k].end());
        }
    }

    Coloring to_coloring(std::span<const ColorId> by_rank, const SolutionIndex& index) const
    {
        std::vector<ColorId> cells_flat(cells);
        for (int k = 0; k < cells; ++k)
            cells_flat[order[k]] = by_rank[k];
        std::vector<int> row_major(cells);
        std::iota(row_major.begin(), row_major.end(), 0);
        return Coloring(index.dims(), r, canonical_labels(cells_flat, row_major), index.ground());
    }
};

// Shared between workers; only atomics are written concurrently.
struct Control {
    SearchBudget budget;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::atomic<bool> stop{false};
    std::atomic<bool> cut{false};
    std::atomic<std::uint64_t> nodes{0};

    void halt_on_budget()
    {
        if (budget.max_nodes && nodes.load(std::memory_order_relaxed) > *budget.max_nodes) {
            cut = true;
            stop = true;
        }
        if (budget.max_time && std::chrono::steady_clock::now() - start > *budget.max_time) {
            cut = true;
            stop = true;
        }
    }
};

using LeafFn = std::function<bool(std::span<const ColorId>)>;

class Explorer {
public:
    Explorer(const Plan& plan, Control& control, LeafFn on_leaf, int split_depth = -1)
        : plan_(plan), control_(control), on_leaf_(std::move(on_leaf)), split_depth_(split_depth),
          colors_(plan.cells, 0)
    {
    }

    ~Explorer() { flush(); }

    void run_from(std::span<const ColorId> prefix, int used)
    {
        std::copy(prefix.begin(), prefix.end(), colors_.begin());
        descend(static_cast<int>(prefix.size()), used);
        flush();
        control_.halt_on_budget();
    }

private:
    void flush()
    {
        control_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
        local_nodes_ = 0;
    }

    // false once the whole search should unwind
    bool descend(int rank, int used)
    {
        if (control_.stop.load(std::memory_order_relaxed))
            return false;
        ++local_nodes_;
        if (++since_check_ == 1024) {
            since_check_ = 0;
            flush();
            control_.halt_on_budget();
            if (control_.stop.load(std::memory_order_relaxed))
                return false;
        }
        if (rank == plan_.cells || rank == split_depth_) {
            if (!on_leaf_(std::span<const ColorId>(colors_.data(), rank))) {
                control_.stop = true;
                return false;
            }
            return true;
        }

        const int remaining = plan_.cells - rank - 1;
        const int top = std::min(used + 1, plan_.r);
        const auto* first = plan_.others.data() + plan_.offset[rank];
        const auto* last = plan_.others.data() + plan_.offset[rank + 1];
        for (ColorId c = 1; c <= top; ++c) {
            const int now_used = c > used ? used + 1 : used;
            if (remaining < plan_.r - now_used)
                continue;
            bool rainbow = false;
            for (const auto* p = first; p != last; ++p) {
                const ColorId x = colors_[(*p)[0]];
                const ColorId y = colors_[(*p)[1]];
                if (x != y && x != c && y != c) {
                    rainbow = true;
                    break;
                }
            }
            if (rainbow)
                continue;
            colors_[rank] = c;
            if (!descend(rank + 1, now_used))
                return false;
        }
        return true;
    }

    const Plan& plan_;
    Control& control_;
    LeafFn on_leaf_;
    int split_depth_;
    std::vector<ColorId> colors_;
    std::uint64_t local_nodes_ = 0;
    int since_check_ = 0;
};

struct Task {
    std::vector<ColorId> prefix;
    int used;
};

std::vector<Task> split_tasks(const Plan& plan, int depth)
{
    Control control;
    std::vector<Task> tasks;
    Explorer ex(plan, control,
                [&](std::span<const ColorId> prefix) {
                    const int used = prefix.empty() ? 0 : *std::max_element(prefix.begin(), prefix.end());
                    tasks.push_back({{prefix.begin(), prefix.end()}, used});
                    return true;
                },
                depth);
    ex.run_from({}, 0);
    return tasks;
}

// Runs the search, calling on_leaf (serialized) for each complete coloring.
// Returns whether the budget cut the search.
bool run_search(const Plan& plan, const SearchBudget& budget, const LeafFn& on_leaf, std::uint64_t& nodes)
{
    Control control;
    control.budget = budget;

    const int threads = std::max(1, budget.threads);
    if (threads == 1 || plan.cells < 4) {
        Explorer ex(plan, control, on_leaf);
        ex.run_from({}, 0);
        nodes = control.nodes.load();
        return control.cut.load();
    }

    const std::size_t target = static_cast<std::size_t>(threads) * 32;
    int depth = 1;
    auto tasks = split_tasks(plan, depth);
    while (tasks.size() < target && depth < plan.cells / 2) {
        ++depth;
        tasks = split_tasks(plan, depth);
    }

    std::mutex leaf_mutex;
    LeafFn serialized = [&](std::span<const ColorId> colors) {
        std::lock_guard lock(leaf_mutex);
        if (control.stop.load())
            return false;
        return on_leaf(colors);
    };
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        Explorer ex(plan, control, serialized);
        for (std::size_t t = next++; t < tasks.size() && !control.stop.load(); t = next++)
            ex.run_from(tasks[t].prefix, tasks[t].used);
    };
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();
    nodes = control.nodes.load();
    return control.cut.load();
}

void check_r(const SolutionIndex& index, int r)
{
    if (r < 1 || r > index.cells() + 1)
        throw std::out_of_range("color count " + std::to_string(r) + " outside [1, m*n+1]");
}

}  // namespace

SearchOutcome exists_rainbow_free(const SolutionIndex& index, int r, const SearchOptions& options)
{
    check_r(index, r);
    SearchOutcome out;
    Certificate cert;
    cert.ground = index.ground();
    cert.dims = index.dims();
    cert.r = r;
    if (r > index.cells()) {
        cert.kind = CertificateKind::exhaustion;
        out.status = SearchStatus::exhaustion;
        out.certificate = std::move(cert);
        return out;
    }

    const Plan plan(index, r, options.order);
    std::optional<Coloring> found;
    const bool cut = run_search(plan, options.budget,
                                [&](std::span<const ColorId> colors) {
                                    found = plan.to_coloring(colors, index);
                                    return false;
                                },
                                out.nodes);
    cert.nodes = out.nodes;
    if (found) {
        cert.kind = CertificateKind::witness;
        cert.coloring = std::move(found);
        out.status = SearchStatus::witness;
    } else if (cut) {
        out.status = SearchStatus::indeterminate;
        return out;
    } else {
        cert.kind = CertificateKind::exhaustion;
        out.status = SearchStatus::exhaustion;
    }
    out.certificate = std::move(cert);
    return out;
}

EnumerationSummary enumerate_rainbow_free(const SolutionIndex& index, int r,
                                          const std::function<bool(const Coloring&)>& visit,
                                          const SearchOptions& options)
{
    check_r(index, r);
    EnumerationSummary summary;
    if (r > index.cells())
        return summary;
    const Plan plan(index, r, options.order);
    bool stopped_by_visitor = false;
    const bool cut = run_search(plan, options.budget,
                                [&](std::span<const ColorId> colors) {
                                    ++summary.count;
                                    if (!visit(plan.to_coloring(colors, index))) {
                                        stopped_by_visitor = true;
                                        return false;
                                    }
                                    return true;
                                },
                                summary.nodes);
    summary.exhaustive = !cut && !stopped_by_visitor;
    return summary;
}

namespace {

void check_threshold(const Certificate& witness, const SolutionIndex& index)
{
    Coloring c = *witness.coloring;
    while (c.colors() > 1) {
        c = merge_colors(c, c.colors(), 1);
        if (!is_exact(c) || !is_rainbow_free(c, index))
            throw std::logic_error("threshold violation: merged witness at r=" + std::to_string(c.colors()) +
                                   " is not a rainbow-free exact coloring");
    }
}

}  // namespace

RbResult rb_search(const SolutionIndex& index, int guess, const SearchOptions& options, RbStrategy strategy,
                   Decider decide)
{
    if (!decide)
        decide = [&](int r) { return exists_rainbow_free(index, r, options); };

    const int top = index.cells() + 1;
    RbResult result;
    result.ground = index.ground();
    result.dims = index.dims();
    result.lower = 1;
    result.upper = top;

    std::map<int, SearchOutcome> known;
    auto run = [&](int r) -> SearchStatus {
        auto it = known.find(r);
        if (it == known.end()) {
            it = known.emplace(r, decide(r)).first;
            result.nodes += it->second.nodes;
        }
        const SearchStatus s = it->second.status;
        if (s == SearchStatus::witness)
            result.lower = std::max(result.lower, r + 1);
        else if (s == SearchStatus::exhaustion)
            result.upper = std::min(result.upper, r);
        if (result.lower > result.upper)
            throw std::logic_error("threshold violation: witness found above an exhaustion");
        return s;
    };

    bool open = false;
    if (strategy == RbStrategy::scan) {
        int r = std::clamp(guess, 1, top);
        SearchStatus s = run(r);
        if (s == SearchStatus::witness) {
            while (s == SearchStatus::witness && r < top)
                s = run(++r);
        } else if (s == SearchStatus::exhaustion) {
            while (s == SearchStatus::exhaustion && r > 1)
                s = run(--r);
        }
        open = s == SearchStatus::indeterminate;
    } else {
        while (result.upper - result.lower > 0 && !open) {
            const int mid = result.lower + (result.upper - result.lower) / 2;
            open = run(mid) == SearchStatus::indeterminate;
        }
    }
    if (!open && result.lower == result.upper) {
        const int rb = result.upper;
        if (rb >= 2 && run(rb - 1) != SearchStatus::witness)
            open = true;
        if (!open && run(rb) != SearchStatus::exhaustion)
            open = true;
        if (!open) {
            result.rb = rb;
            result.exhaustion = known.at(rb).certificate;
            if (rb >= 2) {
                result.witness = known.at(rb - 1).certificate;
                Certificate& w = *result.witness;
                if (!verify_certificate(w))
                    throw std::logic_error("search produced a witness that fails verification");
                check_threshold(w, index);
            }
        }
    }
    return result;
}

RbResult rb_search(GridDims dims, const SearchOptions& options)
{
    return rb_search(SolutionIndex::grid(dims), closed_form_rb_grid(dims) - 1, options);
}

RbResult rb_search_interval(int n, const SearchOptions& options)
{
    return rb_search(SolutionIndex::interval(n), closed_form_rb_interval(n) - 1, options);
}

bool verify_certificate(Certificate& cert, const SearchBudget& budget)
{
    cert.verified = false;
    const SolutionIndex index = SolutionIndex::of(cert.ground, cert.dims);
    if (cert.r < 1 || cert.r > index.cells() + 1)
        return false;
    if (cert.kind == CertificateKind::witness) {
        if (!cert.coloring)
            return false;
        const Coloring& c = *cert.coloring;
        cert.verified = c.dims() == cert.dims && c.ground() == cert.ground && c.colors() == cert.r &&
                        is_exact(c) && is_rainbow_free(c, index);
        return cert.verified;
    }
    if (cert.coloring)
        return false;
    SearchOptions opts;
    opts.budget = budget;
    opts.order = CellOrder::diagonal_major;
    cert.verified = exists_rainbow_free(index, cert.r, opts).status == SearchStatus::exhaustion;
    return cert.verified;
}

}  // namespace rainbow
