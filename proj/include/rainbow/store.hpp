#pragma once

// Certificate files, JSON reports and the append-only certificate cache.

#include "rainbow/search.hpp"
#include "rainbow/structure.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

using Json = nlohmann::ordered_json;

/// Field order: kind, m, n, r, cells (witness only), nodes, engine; interval
/// certificates append "domain":"interval".
Json certificate_to_json(const Certificate& cert);
std::string serialize_certificate(const Certificate& cert);  // compact, no trailing newline

/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const Json& j);
Certificate parse_certificate(std::string_view text);

Json rb_result_to_json(const RbResult& result);
Json structure_report_to_json(const StructureReport& report);

struct ByteCheck {
    bool identical = false;
    std::string diff;  // first differing position with context, empty when identical
};

/// Compares a file's bytes against the canonical serialization of what it
/// parses to. One trailing newline in the file is tolerated.
ByteCheck byte_check(std::string_view file_text, const Certificate& parsed);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// JSON-lines log of certificates keyed by (ground, m, n, r, engine).
/// Appends take an advisory lock on the file.
class CertificateCache {
public:
    explicit CertificateCache(std::filesystem::path path);

    /// Latest entry for the key under the current engine version. Lines that
    /// fail to parse are skipped and recorded in warnings().
    std::optional<Certificate> lookup(Ground ground, GridDims dims, int r);
    void append(const Certificate& cert);

    const std::vector<std::string>& warnings() const { return warnings_; }
    int stale_entries() const { return stale_; }

private:
    void load();

    std::filesystem::path path_;
    bool loaded_ = false;
    std::vector<Certificate> entries_;
    std::vector<std::string> warnings_;
    int stale_ = 0;
};

struct CacheStats {
    int hits = 0;
    int reverified = 0;  // hits re-checked before use
    int rejected = 0;    // hits that failed re-verification and were recomputed
    int misses = 0;
};

/// Decider for rb_search that consults the cache first. Witness hits are
/// always re-verified; exhaustion hits are taken as-is when `trust` is set
/// and otherwise re-verified by an independent search. Fresh results are
/// appended.
Decider cached_decider(CertificateCache& cache, const SolutionIndex& index, const SearchOptions& options,
                       bool trust, CacheStats& stats);

}  // namespace rainbow
