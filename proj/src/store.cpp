#include "rainbow/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace rainbow {

namespace {

Json point_json(GridPoint p)
{
    return Json::array({p.i, p.j});
}

Json rows_json(const Coloring& c)
{
    Json rows = Json::array();
    const GridDims d = c.dims();
    for (int i = 1; i <= d.m; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= d.n; ++j)
            row.push_back(c.at({i, j}));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json pair_json(const PairRecord& p)
{
    return Json{{"kind", to_string(p.kind)},
                {"a", p.a},
                {"alpha", point_json(p.alpha)},
                {"beta", point_json(p.beta)},
                {"colors", Json::array({p.alpha_color, p.beta_color})}};
}

Json mask_rows(const RegionMask& mask, const std::vector<bool>& bits)
{
    // one string per row, '#' marks membership
    Json rows = Json::array();
    for (int i = 1; i <= mask.dims.m; ++i) {
        std::string row;
        for (int j = 1; j <= mask.dims.n; ++j)
            row.push_back(bits.empty() ? '.' : (bits[mask.dims.flat({i, j})] ? '#' : '.'));
        rows.push_back(row);
    }
    return rows;
}

int require_int(const Json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw std::invalid_argument(std::string("certificate field '") + key + "' missing or not an integer");
    return j[key].get<int>();
}

}  // namespace

Json certificate_to_json(const Certificate& cert)
{
    Json j;
    j["kind"] = to_string(cert.kind);
    j["m"] = cert.dims.m;
    j["n"] = cert.dims.n;
    j["r"] = cert.r;
    if (cert.kind == CertificateKind::witness) {
        if (!cert.coloring)
            throw std::logic_error("witness certificate without a coloring");
        j["cells"] = rows_json(*cert.coloring);
    }
    j["nodes"] = cert.nodes;
    j["engine"] = cert.engine;
    if (cert.ground == Ground::interval)
        j["domain"] = "interval";
    return j;
}

std::string serialize_certificate(const Certificate& cert)
{
    return certificate_to_json(cert).dump();
}

Certificate certificate_from_json(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("certificate is not a JSON object");
    Certificate cert;
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("certificate field 'kind' missing");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "witness")
        cert.kind = CertificateKind::witness;
    else if (kind == "exhaustion")
        cert.kind = CertificateKind::exhaustion;
    else
        throw std::invalid_argument("unknown certificate kind '" + kind + "'");

    if (j.contains("domain")) {
        if (j["domain"] != "interval")
            throw std::invalid_argument("unknown domain");
        cert.ground = Ground::interval;
    }
    const int m = require_int(j, "m");
    const int n = require_int(j, "n");
    if (m < 1 || n < 1)
        throw std::invalid_argument("certificate dimensions must be positive");
    if (cert.ground == Ground::interval && m != 1)
        throw std::invalid_argument("interval certificate needs m = 1");
    cert.dims = GridDims{m, n};  // kept as written; byte_check catches a transposed file
    cert.r = require_int(j, "r");
    if (cert.r < 1 || cert.r > m * n + 1)
        throw std::invalid_argument("color count outside [1, m*n+1]");
    if (!j.contains("nodes") || !j["nodes"].is_number_unsigned())
        throw std::invalid_argument("certificate field 'nodes' missing or not a count");
    cert.nodes = j["nodes"].get<std::uint64_t>();
    if (!j.contains("engine") || !j["engine"].is_string())
        throw std::invalid_argument("certificate field 'engine' missing");
    cert.engine = j["engine"].get<std::string>();

    if (cert.kind == CertificateKind::witness) {
        if (!j.contains("cells") || !j["cells"].is_array() || static_cast<int>(j["cells"].size()) != m)
            throw std::invalid_argument("witness needs " + std::to_string(m) + " rows of cells");
        std::vector<ColorId> cells;
        for (const auto& row : j["cells"]) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw std::invalid_argument("witness row has the wrong length");
            for (const auto& v : row) {
                if (!v.is_number_integer())
                    throw std::invalid_argument("cell color is not an integer");
                cells.push_back(v.get<int>());
            }
        }
        cert.coloring = Coloring(cert.dims, cert.r, std::move(cells), cert.ground);
    } else if (j.contains("cells")) {
        throw std::invalid_argument("exhaustion certificate carries cells");
    }
    return cert;
}

Certificate parse_certificate(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

Json rb_result_to_json(const RbResult& result)
{
    Json j;
    j["ground"] = to_string(result.ground);
    j["m"] = result.dims.m;
    j["n"] = result.dims.n;
    j["rb"] = result.rb ? Json(*result.rb) : Json(nullptr);
    j["lower"] = result.lower;
    j["upper"] = result.upper;
    j["nodes"] = result.nodes;
    j["witness"] = result.witness ? certificate_to_json(*result.witness) : Json(nullptr);
    j["exhaustion"] = result.exhaustion ? certificate_to_json(*result.exhaustion) : Json(nullptr);
    return j;
}

Json structure_report_to_json(const StructureReport& report)
{
    const Coloring& c = report.coloring;
    Json j;
    j["ground"] = to_string(c.ground());
    j["m"] = c.dims().m;
    j["n"] = c.dims().n;
    j["r"] = c.colors();
    j["exact"] = report.exact;
    j["rainbow_free"] = report.rainbow_free;
    j["coloring"] = rows_json(c);
    j["s_sequence"] = report.s.values;
    j["ell"] = report.s.ell;

    Json diagonals = Json::array();
    for (const auto& d : report.map.diagonals) {
        diagonals.push_back(Json{{"k", d.k},
                                 {"status", d.main ? "main" : (d.contributing() ? "contributing" : "non-contributing")},
                                 {"palette", d.palette},
                                 {"extra", d.extra},
                                 {"contributed", d.contributed}});
    }
    j["diagonals"] = std::move(diagonals);

    Json regions;
    regions["defined"] = report.regions.defined;
    if (report.regions.defined) {
        regions["s2"] = report.regions.s2;
        regions["w1"] = mask_rows(report.regions, report.regions.w1);
        regions["w2"] = mask_rows(report.regions, report.regions.w2);
        regions["y1"] = mask_rows(report.regions, report.regions.y1);
        regions["y2"] = mask_rows(report.regions, report.regions.y2);
    }
    j["regions"] = std::move(regions);

    Json pairs = Json::array();
    for (const auto& p : report.pairs)
        pairs.push_back(pair_json(p));
    j["pairs"] = std::move(pairs);

    Json corners = Json::array();
    for (const auto& c2 : report.corners)
        corners.push_back(Json{{"vertical", pair_json(c2.vertical)},
                               {"horizontal", pair_json(c2.horizontal)},
                               {"strict_colors", c2.strict_colors}});
    j["corners"] = std::move(corners);

    Json verdicts = Json::array();
    for (const auto& v : report.verdicts) {
        Json e{{"id", v.id}, {"applicable", v.applicable}};
        if (v.applicable) {
            e["holds"] = v.holds;
            if (!v.detail.empty())
                e["detail"] = v.detail;
        } else {
            e["reason"] = v.reason;
        }
        verdicts.push_back(std::move(e));
    }
    j["verdicts"] = std::move(verdicts);
    return j;
}

ByteCheck byte_check(std::string_view file_text, const Certificate& parsed)
{
    std::string_view body = file_text;
    if (!body.empty() && body.back() == '\n')
        body.remove_suffix(1);
    const std::string expected = serialize_certificate(parsed);
    ByteCheck out;
    if (body == expected) {
        out.identical = true;
        return out;
    }
    std::size_t pos = 0;
    while (pos < body.size() && pos < expected.size() && body[pos] == expected[pos])
        ++pos;
    const std::size_t from = pos > 20 ? pos - 20 : 0;
    std::ostringstream os;
    os << "byte " << pos << " differs\n"
       << "- file:      " << body.substr(from, 60) << "\n"
       << "+ canonical: " << std::string_view(expected).substr(from, 60);
    out.diff = os.str();
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

CertificateCache::CertificateCache(std::filesystem::path path) : path_(std::move(path)) {}

void CertificateCache::load()
{
    loaded_ = true;
    std::ifstream in(path_);
    if (!in)
        return;  // a missing cache is an empty cache
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        try {
            entries_.push_back(parse_certificate(line));
        } catch (const std::exception& e) {
            warnings_.push_back(path_.string() + ":" + std::to_string(lineno) + ": skipped corrupt line (" +
                                e.what() + ")");
        }
    }
}

std::optional<Certificate> CertificateCache::lookup(Ground ground, GridDims dims, int r)
{
    if (!loaded_)
        load();
    std::optional<Certificate> hit;
    for (const auto& e : entries_) {
        if (e.ground != ground || e.dims != dims || e.r != r)
            continue;
        if (e.engine != engine_version) {
            ++stale_;
            continue;
        }
        hit = e;
    }
    return hit;
}

void CertificateCache::append(const Certificate& cert)
{
    if (!loaded_)
        load();
    const std::string line = serialize_certificate(cert) + "\n";
    const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
    if (fd < 0)
        throw std::system_error(errno, std::generic_category(), "cannot open cache " + path_.string());
    if (::flock(fd, LOCK_EX) != 0) {
        const int err = errno;
        ::close(fd);
        throw std::system_error(err, std::generic_category(), "cannot lock cache");
    }
    std::size_t done = 0;
    while (done < line.size()) {
        const ssize_t w = ::write(fd, line.data() + done, line.size() - done);
        if (w < 0) {
            if (errno == EINTR)
                continue;
            const int err = errno;
            ::flock(fd, LOCK_UN);
            ::close(fd);
            throw std::system_error(err, std::generic_category(), "cannot append to cache");
        }
        done += static_cast<std::size_t>(w);
    }
    ::fsync(fd);
    ::flock(fd, LOCK_UN);
    ::close(fd);
    entries_.push_back(cert);
}

Decider cached_decider(CertificateCache& cache, const SolutionIndex& index, const SearchOptions& options,
                       bool trust, CacheStats& stats)
{
    return [&cache, &index, options, trust, &stats](int r) -> SearchOutcome {
        if (auto hit = cache.lookup(index.ground(), index.dims(), r)) {
            ++stats.hits;
            bool ok = false;
            if (hit->kind == CertificateKind::exhaustion && trust) {
                ok = true;
            } else {
                ++stats.reverified;
                ok = verify_certificate(*hit, options.budget);
            }
            if (ok) {
                SearchOutcome out;
                out.status = hit->kind == CertificateKind::witness ? SearchStatus::witness : SearchStatus::exhaustion;
                out.nodes = 0;
                out.certificate = std::move(*hit);
                return out;
            }
            ++stats.rejected;
        } else {
            ++stats.misses;
        }
        SearchOutcome fresh = exists_rainbow_free(index, r, options);
        if (fresh.certificate)
            cache.append(*fresh.certificate);
        return fresh;
    };
}

}  // namespace rainbow
