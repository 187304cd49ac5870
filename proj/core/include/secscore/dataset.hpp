#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "secscore/dates.hpp"

namespace secscore {

enum class ExploitType { DoS, Local, Remote, Webapps, Other };

std::string_view exploit_type_name(ExploitType t);
ExploitType exploit_type_from(std::string_view raw);  // case-insensitive; unknown -> Other

struct VulnRecord {
    std::string cve_id;
    Date cve_date{};
    std::optional<Date> exploit_date;
    ExploitType exploit_type = ExploitType::Other;
    std::string platform_raw;
    std::string platform;  // normalized bucket name
    double base_score = 0.0;
    std::optional<double> delay_weeks;
};

enum class CategoryKind { General, Type, Platform };

struct CategoryKey {
    CategoryKind kind = CategoryKind::General;
    std::string label = "all";
    auto operator<=>(const CategoryKey&) const = default;
};

std::string to_string(const CategoryKey& key);

// Maps a bare label to a category: "all" -> General, the four exploit type
// names -> Type, anything else -> Platform (lowercased).
CategoryKey category_from_label(std::string_view label);

struct DelaySampleSet {
    CategoryKey category;
    std::vector<double> samples;
};

// raw platform token -> merged bucket, both lowercase
using PlatformMergeMap = std::map<std::string, std::string>;
const PlatformMergeMap& default_platform_merge();
std::string normalize_platform(std::string_view raw, const PlatformMergeMap& merge);

struct CveColumns {
    std::string id = "cve_id";
    std::string date = "cve_date";
};

struct ExploitDbColumns {
    std::string refs = "codes";
    std::string date = "date_published";
    std::string type = "type";
    std::string platform = "platform";
    std::string verified = "verified";
};

struct ScoreColumns {
    std::string id = "cve_id";
    std::string score = "base_score";
};

struct IngestStats {
    std::size_t rows_scanned = 0;
    std::size_t rows_dropped = 0;
};

std::map<std::string, Date> ingest_cve(const std::filesystem::path& path, const CveColumns& cols,
                                       IngestStats* stats = nullptr);

struct ExploitRef {
    std::string cve_id;
    Date exploit_date{};
    ExploitType type = ExploitType::Other;
    std::string platform_raw;
    bool verified = false;
};

// One entry per (exploit row, referenced CVE); rows without CVE refs dropped.
std::vector<ExploitRef> ingest_exploitdb(const std::filesystem::path& path,
                                         const ExploitDbColumns& cols,
                                         IngestStats* stats = nullptr);

std::map<std::string, double> ingest_cvedetails(const std::filesystem::path& path,
                                                const ScoreColumns& cols,
                                                IngestStats* stats = nullptr);

enum class MultiExploitRule { Earliest, Latest };

struct JoinOptions {
    bool verified_only = false;
    MultiExploitRule multi_exploit = MultiExploitRule::Earliest;
    PlatformMergeMap platform_merge = default_platform_merge();
};

// Inner join on CVE id across the three sources; output sorted by cve_id.
std::vector<VulnRecord> join(const std::map<std::string, Date>& cves,
                             const std::vector<ExploitRef>& exploits,
                             const std::map<std::string, double>& scores,
                             const JoinOptions& options = {});

// General bucket holds every record; Type buckets the four named types;
// Platform buckets by normalized platform, dropping those under min_platform_size.
std::map<CategoryKey, DelaySampleSet> categorize(const std::vector<VulnRecord>& records,
                                                 std::size_t min_platform_size = 10);

// Left-closed bins aligned to multiples of bin_width.
std::vector<std::pair<double, std::size_t>> histogram(const std::vector<double>& samples,
                                                      double bin_width);

void write_processed(const std::vector<VulnRecord>& records, const std::filesystem::path& path);
std::vector<VulnRecord> read_processed(const std::filesystem::path& path);

}  // namespace secscore
