// rbtool: rainbow numbers of x1+x2=x3 on grids and intervals.
//
// Exit codes: 0 ok / value matches the closed form, 2 mismatch, failed
// lemma or bad certificate, 3 budget ran out, 64 usage.

#include "rainbow/constructions.hpp"
#include "rainbow/search.hpp"
#include "rainbow/store.hpp"
#include "rainbow/structure.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace rainbow;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 2;
constexpr int exit_indeterminate = 3;
constexpr int exit_usage = 64;

struct BudgetFlags {
    int threads = 1;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_option("--max-nodes", max_nodes, "node budget");
        cmd->add_option("--max-seconds", max_seconds, "time budget")->check(CLI::PositiveNumber);
    }

    SearchOptions options() const
    {
        SearchOptions o;
        o.budget.threads = threads;
        o.budget.max_nodes = max_nodes;
        if (max_seconds)
            o.budget.max_time = std::chrono::milliseconds(static_cast<long long>(*max_seconds * 1000.0));
        return o;
    }
};

std::string dims_text(GridDims d)
{
    return std::to_string(d.m) + "x" + std::to_string(d.n);
}

std::string cert_name(const Certificate& c)
{
    return std::string(c.ground == Ground::interval ? "interval-" + std::to_string(c.dims.n)
                                                    : "grid-" + dims_text(c.dims)) +
           "-r" + std::to_string(c.r) + "-" + std::string(to_string(c.kind)) + ".json";
}

// --out may name a file or an existing directory
fs::path certificate_path(const std::string& out, const Certificate& c)
{
    return fs::is_directory(out) ? fs::path(out) / cert_name(c) : fs::path(out);
}

void write_certificates(const RbResult& res, const fs::path& dir)
{
    fs::create_directories(dir);
    for (const auto* c : {&res.witness, &res.exhaustion}) {
        if (!*c)
            continue;
        const fs::path p = dir / cert_name(**c);
        write_file(p, serialize_certificate(**c) + "\n");
        std::cerr << "wrote " << p.string() << "\n";
    }
}

struct RbFlags {
    int m = 0;
    int n = 0;
    BudgetFlags budget;
    std::string cache;
    bool trust_cache = false;
    bool json = false;
    bool bisect = false;
    std::string out = ".";
};

// Shared driver for rb-grid and rb-interval.
int run_rb(const RbFlags& f, Ground ground)
{
    const GridDims dims = ground == Ground::grid ? GridDims::make(f.m, f.n) : GridDims{1, f.n};
    const SolutionIndex index = SolutionIndex::of(ground, dims);
    const int expected = ground == Ground::grid ? closed_form_rb_grid(dims) : closed_form_rb_interval(f.n);
    const SearchOptions opts = f.budget.options();

    std::optional<CertificateCache> cache;
    CacheStats stats;
    Decider decide;
    if (!f.cache.empty()) {
        cache.emplace(f.cache);
        decide = cached_decider(*cache, index, opts, f.trust_cache, stats);
    }
    RbResult res;
    if (f.bisect)
        res = rb_search(index, expected, opts, RbStrategy::bisect, decide);
    else
        res = rb_search(index, expected, opts, RbStrategy::scan, decide);
    if (cache) {
        for (const auto& w : cache->warnings())
            std::cerr << "warning: " << w << "\n";
        if (cache->stale_entries() > 0)
            std::cerr << "note: ignored " << cache->stale_entries() << " cache entries from another engine version\n";
    }

    const bool matches = res.rb && *res.rb == expected;
    std::string form;
    if (ground == Ground::grid)
        form = dims.m == 1 ? "convention" : "matches m+n+1";
    else
        form = f.n <= 2 ? "convention" : "matches floor(log2 n)+2";

    if (res.rb)
        write_certificates(res, f.out);

    if (f.json) {
        Json j = rb_result_to_json(res);
        j["closed_form"] = expected;
        j["matches"] = matches;
        if (cache)
            j["cached"] = stats.hits > 0;
        std::cout << j.dump() << "\n";
    } else if (!res.rb) {
        std::cout << "indeterminate: rb in [" << res.lower << ", " << res.upper << "] (budget exhausted)\n";
    } else if (matches) {
        std::cout << "rb=" << *res.rb << " (" << form << ")";
        if (stats.hits > 0)
            std::cout << " cached";
        std::cout << "\n";
    } else {
        std::cout << "MISMATCH: rb=" << *res.rb << " but the closed form gives " << expected << "\n";
    }
    if (stats.hits > 0 && !f.json)
        std::cerr << "cached: " << stats.hits << " of " << stats.hits + stats.misses << " decisions answered from "
                  << f.cache << (stats.reverified ? ", re-verified" : "") << "\n";
    if (!res.rb)
        return exit_indeterminate;
    if (!matches) {
        std::cerr << "FALSIFICATION: search result disagrees with the closed form for " << dims_text(dims) << "\n";
        return exit_mismatch;
    }
    return exit_ok;
}

int run_witness(int m, int n, int colors, bool interval, const BudgetFlags& budget, const std::string& out)
{
    const GridDims dims = interval ? GridDims{1, n} : GridDims::make(m, n);
    if (colors < 1 || colors > dims.cells()) {
        std::cerr << "--colors must be in [1, " << dims.cells() << "]\n";
        return exit_usage;
    }
    const Ground ground = interval ? Ground::interval : Ground::grid;
    const SearchOutcome res = exists_rainbow_free(SolutionIndex::of(ground, dims), colors, budget.options());
    if (res.status == SearchStatus::indeterminate) {
        std::cout << "indeterminate (budget exhausted after " << res.nodes << " nodes)\n";
        return exit_indeterminate;
    }
    if (res.status == SearchStatus::witness)
        std::cout << render(*res.certificate->coloring);
    else
        std::cout << "none (exhaustion)\n";
    if (!out.empty())
        write_file(certificate_path(out, *res.certificate), serialize_certificate(*res.certificate) + "\n");
    return exit_ok;
}

int run_construct(int m, int n, const std::string& which, const std::string& out)
{
    Certificate cert;
    cert.kind = CertificateKind::witness;
    cert.nodes = 0;
    if (which == "lower") {
        if (m < 2) {
            std::cerr << "the lower-bound construction needs 2 <= m <= n\n";
            return exit_usage;
        }
        cert.coloring = lower_bound_coloring(GridDims::make(m, n));
        cert.engine = "construction/lower";
    } else {
        cert.coloring = valuation_coloring(n);
        cert.engine = "construction/valuation";
    }
    const Coloring& c = *cert.coloring;
    cert.ground = c.ground();
    cert.dims = c.dims();
    cert.r = c.colors();
    const bool exact = is_exact(c);
    const bool free = is_rainbow_free(c, SolutionIndex::of(c.ground(), c.dims()));
    std::cout << render(c);
    std::cout << "colors=" << c.colors() << " exact=" << (exact ? "yes" : "no")
              << " rainbow-free=" << (free ? "yes" : "no") << "\n";
    if (!out.empty())
        write_file(certificate_path(out, cert), serialize_certificate(cert) + "\n");
    return exact && free ? exit_ok : exit_mismatch;
}

int run_verify(const std::string& file, const BudgetFlags& budget)
{
    const std::string text = read_file(file);
    Certificate cert;
    try {
        cert = parse_certificate(text);
    } catch (const std::exception& e) {
        std::cout << "invalid certificate: " << e.what() << "\n";
        return exit_mismatch;
    }
    const ByteCheck bytes = byte_check(text, cert);
    if (!bytes.identical) {
        std::cout << "certificate is not in canonical form\n" << bytes.diff << "\n";
        return exit_mismatch;
    }
    if (cert.kind == CertificateKind::witness && *cert.coloring != canonicalize(*cert.coloring)) {
        std::cout << "witness coloring is not in canonical form\n";
        return exit_mismatch;
    }
    const std::string what = std::string(to_string(cert.kind)) + " " +
                             (cert.ground == Ground::interval ? "[" + std::to_string(cert.dims.n) + "]"
                                                              : dims_text(cert.dims)) +
                             " r=" + std::to_string(cert.r);
    if (!verify_certificate(cert, budget.options().budget)) {
        if (cert.kind == CertificateKind::witness) {
            const auto rb = find_rainbow(*cert.coloring, SolutionIndex::of(cert.ground, cert.dims));
            std::cout << "REJECTED " << what << ": ";
            if (!is_exact(*cert.coloring))
                std::cout << "coloring is not exact\n";
            else if (rb)
                std::cout << "rainbow solution " << to_string(cert.dims.point(rb->alpha)) << " + "
                          << to_string(cert.dims.point(rb->beta)) << " = " << to_string(cert.dims.point(rb->gamma))
                          << "\n";
            else
                std::cout << "dimension mismatch\n";
        } else {
            std::cout << "REJECTED " << what << ": re-run found a rainbow-free coloring or ran out of budget\n";
        }
        return exit_mismatch;
    }
    std::cout << "verified " << what << "\n";
    return exit_ok;
}

void print_report(const StructureReport& rep)
{
    const Coloring& c = rep.coloring;
    std::cout << render(c);
    std::cout << "colors=" << c.colors() << " exact=" << (rep.exact ? "yes" : "no")
              << " rainbow-free=" << (rep.rainbow_free ? "yes" : "no") << "\n";
    std::cout << "s-sequence:";
    for (int v : rep.s.values)
        std::cout << " " << v;
    std::cout << " (ell=" << rep.s.ell << ")\n";
    if (c.ground() == Ground::grid) {
        for (const auto& d : rep.map.diagonals) {
            std::cout << "  D" << d.k << (d.main ? " main" : d.contributing() ? " contributing" : " non-contributing")
                      << " palette={";
            for (std::size_t i = 0; i < d.palette.size(); ++i)
                std::cout << (i ? "," : "") << d.palette[i];
            std::cout << "}\n";
        }
        if (rep.regions.defined)
            std::cout << "s2=" << rep.regions.s2 << "\n";
        else
            std::cout << "W undefined (monochromatic main diagonal)\n";
        int h = 0, v = 0;
        for (const auto& p : rep.pairs) {
            h += p.kind == PairKind::horizontal;
            v += p.kind == PairKind::vertical;
        }
        std::cout << "pairs: " << rep.pairs.size() << " (" << h << " horizontal, " << v << " vertical)\n";
        std::cout << "disjoint corners: " << rep.corners.size() << "\n";
    }
    for (const auto& v : rep.verdicts) {
        if (!v.applicable)
            std::cout << "  [n/a]   " << v.id << ": " << v.reason << "\n";
        else
            std::cout << (v.holds ? "  [holds] " : "  [FAILS] ") << v.id << (v.detail.empty() ? "" : ": " + v.detail)
                      << "\n";
    }
}

int run_analyze(const std::string& file, bool interval, bool json, bool literal_y)
{
    const std::string text = read_file(file);
    std::optional<Coloring> c;
    const auto first = text.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && text[first] == '{') {
            Certificate cert = parse_certificate(text);
            if (!cert.coloring) {
                std::cout << "exhaustion certificate: no coloring to analyze\n";
                return exit_mismatch;
            }
            c = *cert.coloring;
        } else {
            c = parse_text(text, interval ? Ground::interval : Ground::grid);
        }
    } catch (const std::exception& e) {
        std::cout << "cannot read coloring: " << e.what() << "\n";
        return exit_mismatch;
    }
    const StructureReport rep = analyze(*c, literal_y ? YRegionMode::literal : YRegionMode::figure);
    if (json)
        std::cout << structure_report_to_json(rep).dump() << "\n";
    else
        print_report(rep);
    return exit_ok;
}

int run_lemma(const std::string& name, int m, int n, std::optional<int> r, bool interval, const BudgetFlags& budget)
{
    if (!is_known_lemma(name)) {
        std::cerr << "unknown lemma '" << name << "'; try --list\n";
        return exit_usage;
    }
    const GridDims dims = interval ? GridDims{1, n} : GridDims::make(m, n);
    const Ground ground = interval ? Ground::interval : Ground::grid;
    const SolutionIndex index = SolutionIndex::of(ground, dims);
    if (r && (*r < 1 || *r > dims.cells())) {
        std::cerr << "--r must be in [1, " << dims.cells() << "]\n";
        return exit_usage;
    }
    const int lo = r ? *r : 1;
    const int hi = r ? *r : dims.cells();
    std::uint64_t checked = 0, applicable = 0, counter = 0;
    bool exhaustive = true;
    for (int k = lo; k <= hi; ++k) {
        const auto summary = enumerate_rainbow_free(
            index, k,
            [&](const Coloring& c) {
                ++checked;
                const LemmaVerdict v = evaluate_lemma(name, c);
                if (!v.applicable)
                    return true;
                ++applicable;
                if (!v.holds) {
                    if (++counter <= 3)
                        std::cout << "counterexample (r=" << k << "): " << v.detail << "\n" << render(c);
                }
                return true;
            },
            budget.options());
        exhaustive = exhaustive && summary.exhaustive;
    }
    std::cout << counter << " counterexamples / " << checked << " colorings checked (" << applicable
              << " satisfy the hypothesis)\n";
    if (!exhaustive) {
        std::cout << "enumeration cut short by the budget\n";
        return exit_indeterminate;
    }
    return counter == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"rbtool: rainbow numbers of x1+x2=x3 on [m]x[n] and [n]"};
    app.require_subcommand(1);

    RbFlags grid_flags;
    auto* rb_grid = app.add_subcommand("rb-grid", "compute rb([m]x[n]) by exhaustive search");
    rb_grid->add_option("--m", grid_flags.m, "rows")->required()->check(CLI::PositiveNumber);
    rb_grid->add_option("--n", grid_flags.n, "columns")->required()->check(CLI::PositiveNumber);
    grid_flags.budget.attach(rb_grid);
    rb_grid->add_option("--cache", grid_flags.cache, "JSON-lines certificate cache");
    rb_grid->add_flag("--trust-cache", grid_flags.trust_cache, "use cached exhaustion certificates without a re-run");
    rb_grid->add_flag("--json", grid_flags.json, "machine-readable result");
    rb_grid->add_flag("--bisect", grid_flags.bisect, "binary search instead of scanning from the closed form");
    rb_grid->add_option("--out", grid_flags.out, "directory for certificate files")->capture_default_str();

    RbFlags int_flags;
    auto* rb_int = app.add_subcommand("rb-interval", "compute rb([n]) by exhaustive search");
    rb_int->add_option("--n", int_flags.n, "interval length")->required()->check(CLI::PositiveNumber);
    int_flags.budget.attach(rb_int);
    rb_int->add_option("--cache", int_flags.cache, "JSON-lines certificate cache");
    rb_int->add_flag("--trust-cache", int_flags.trust_cache, "use cached exhaustion certificates without a re-run");
    rb_int->add_flag("--json", int_flags.json, "machine-readable result");
    rb_int->add_flag("--bisect", int_flags.bisect, "binary search instead of scanning from the closed form");
    rb_int->add_option("--out", int_flags.out, "directory for certificate files")->capture_default_str();

    int w_m = 1, w_n = 0, w_colors = 0;
    bool w_interval = false;
    std::string w_out;
    BudgetFlags w_budget;
    auto* witness = app.add_subcommand("witness", "find a rainbow-free exact coloring with the given color count");
    witness->add_option("--m", w_m, "rows")->check(CLI::PositiveNumber);
    witness->add_option("--n", w_n, "columns")->required()->check(CLI::PositiveNumber);
    witness->add_option("--colors", w_colors, "color count")->required();
    witness->add_flag("--interval", w_interval, "color [n] instead of a grid");
    witness->add_option("--out", w_out, "certificate file, or a directory to put it in");
    w_budget.attach(witness);

    int c_m = 1, c_n = 0;
    std::string c_which = "lower", c_out;
    auto* construct = app.add_subcommand("construct", "emit and self-check a known rainbow-free coloring");
    construct->add_option("--m", c_m, "rows")->check(CLI::PositiveNumber);
    construct->add_option("--n", c_n, "columns")->required()->check(CLI::PositiveNumber);
    construct->add_option("--which", c_which, "lower (grid, m+n colors) or valuation ([n])")
        ->check(CLI::IsMember({"lower", "valuation"}))
        ->capture_default_str();
    construct->add_option("--out", c_out, "certificate file, or a directory to put it in");

    std::string v_file;
    BudgetFlags v_budget;
    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("--file", v_file, "certificate")->required()->check(CLI::ExistingFile);
    v_budget.attach(verify);

    std::string a_file;
    bool a_interval = false, a_json = false, a_literal = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "structural report for a coloring or witness certificate");
    analyze_cmd->add_option("--file", a_file, "certificate JSON or coloring text")->required()->check(CLI::ExistingFile);
    analyze_cmd->add_flag("--interval", a_interval, "text input colors [n]");
    analyze_cmd->add_flag("--json", a_json, "machine-readable report");
    analyze_cmd->add_flag("--literal-y", a_literal, "Y regions by the literal strict inequalities");

    std::string l_name;
    int l_m = 1, l_n = 0;
    std::optional<int> l_r;
    bool l_interval = false, l_list = false;
    BudgetFlags l_budget;
    auto* lemma = app.add_subcommand("lemma", "check one lemma over every rainbow-free exact coloring");
    lemma->add_option("--name", l_name, "lemma id");
    lemma->add_option("--m", l_m, "rows")->check(CLI::PositiveNumber);
    lemma->add_option("--n", l_n, "columns")->check(CLI::PositiveNumber);
    lemma->add_option("--r", l_r, "color count (default: every r)");
    lemma->add_flag("--interval", l_interval, "enumerate colorings of [n]");
    lemma->add_flag("--list", l_list, "list lemma ids");
    l_budget.attach(lemma);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*rb_grid)
            return run_rb(grid_flags, Ground::grid);
        if (*rb_int)
            return run_rb(int_flags, Ground::interval);
        if (*witness)
            return run_witness(w_m, w_n, w_colors, w_interval, w_budget, w_out);
        if (*construct)
            return run_construct(c_m, c_n, c_which, c_out);
        if (*verify)
            return run_verify(v_file, v_budget);
        if (*analyze_cmd)
            return run_analyze(a_file, a_interval, a_json, a_literal);
        if (*lemma) {
            if (l_list) {
                for (const auto& l : lemma_registry())
                    std::cout << l.id << "\n    " << l.statement << "\n";
                return exit_ok;
            }
            if (l_name.empty() || l_n == 0) {
                std::cerr << "lemma needs --name and --n (or --list)\n";
                return exit_usage;
            }
            return run_lemma(l_name, l_m, l_n, l_r, l_interval, l_budget);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_usage;
}
