#include "secscore/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "secscore/csv.hpp"
#include "secscore/errors.hpp"

namespace secscore {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

bool parse_double(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

bool valid_cve_id(std::string_view id) {
    if (id.size() < 13 || id.substr(0, 4) != "CVE-" || id[8] != '-') return false;
    for (std::size_t i = 4; i < 8; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    }
    for (std::size_t i = 9; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    }
    return true;
}

// Scans free text for CVE-YYYY-NNNN+ tokens, case-insensitive, deduplicated.
std::vector<std::string> extract_cve_ids(std::string_view text) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i + 13 <= text.size(); ++i) {
        if ((text[i] != 'C' && text[i] != 'c')) continue;
        const std::string_view head = text.substr(i, 4);
        if (lower(head) != "cve-") continue;
        std::size_t j = i + 4;
        std::size_t year_digits = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            ++j;
            ++year_digits;
        }
        if (year_digits != 4 || j >= text.size() || text[j] != '-') continue;
        ++j;
        std::size_t seq_start = j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j - seq_start < 4) continue;
        std::string id = "CVE-" + std::string(text.substr(i + 4, 4)) + "-" +
                         std::string(text.substr(seq_start, j - seq_start));
        if (seen.insert(id).second) out.push_back(std::move(id));
        i = j - 1;
    }
    return out;
}

bool truthy(std::string_view s) {
    const std::string v = lower(s);
    return v == "1" || v == "true" || v == "yes" || v == "y";
}

}  // namespace

std::string_view exploit_type_name(ExploitType t) {
    switch (t) {
        case ExploitType::DoS: return "DoS";
        case ExploitType::Local: return "Local";
        case ExploitType::Remote: return "Remote";
        case ExploitType::Webapps: return "Webapps";
        case ExploitType::Other: return "Other";
    }
    return "Other";
}

ExploitType exploit_type_from(std::string_view raw) {
    const std::string v = lower(raw);
    if (v == "dos") return ExploitType::DoS;
    if (v == "local") return ExploitType::Local;
    if (v == "remote") return ExploitType::Remote;
    if (v == "webapps") return ExploitType::Webapps;
    return ExploitType::Other;
}

std::string to_string(const CategoryKey& key) {
    switch (key.kind) {
        case CategoryKind::General: return "general:" + key.label;
        case CategoryKind::Type: return "type:" + key.label;
        case CategoryKind::Platform: return "platform:" + key.label;
    }
    return key.label;
}

CategoryKey category_from_label(std::string_view label) {
    const std::string v = lower(label);
    if (v == "all" || v == "general") return {CategoryKind::General, "all"};
    if (v == "dos") return {CategoryKind::Type, "DoS"};
    if (v == "local") return {CategoryKind::Type, "Local"};
    if (v == "remote") return {CategoryKind::Type, "Remote"};
    if (v == "webapps") return {CategoryKind::Type, "Webapps"};
    return {CategoryKind::Platform, v};
}

const PlatformMergeMap& default_platform_merge() {
    static const PlatformMergeMap merge = {
        {"ashx", "asp"},
        {"asp", "asp"},
        {"aspx", "asp"},
        {"bsd", "bsd"},
        {"bsd_x86", "bsd"},
        {"freebsd", "bsd"},
        {"freebsd_x86", "bsd"},
        {"freebsd_x86-64", "bsd"},
        {"netbsd_x86", "bsd"},
        {"openbsd", "bsd"},
        {"linux", "linux"},
        {"linux_mips", "linux"},
        {"linux_x86", "linux"},
        {"linux_x86-64", "linux"},
        {"solaris", "solaris"},
        {"solaris_sparc", "solaris"},
        {"solaris_x86", "solaris"},
        {"windows", "windows"},
        {"windows_x86", "windows"},
        {"windows_x86-64", "windows"},
    };
    return merge;
}

std::string normalize_platform(std::string_view raw, const PlatformMergeMap& merge) {
    const std::string v = lower(raw);
    const auto it = merge.find(v);
    return it == merge.end() ? v : it->second;
}

std::map<std::string, Date> ingest_cve(const std::filesystem::path& path, const CveColumns& cols,
                                       IngestStats* stats) {
    const CsvTable table = read_csv_file(path);
    const std::size_t id_col = column_index(table, cols.id);
    const std::size_t date_col = column_index(table, cols.date);

    std::map<std::string, Date> out;
    IngestStats local;
    for (const auto& row : table.rows) {
        ++local.rows_scanned;
        std::string id(cell(row, id_col));
        std::transform(id.begin(), id.end(), id.begin(),
                       [](unsigned char c) { return char(std::toupper(c)); });
        Date d;
        if (!valid_cve_id(id) || !try_parse_date(cell(row, date_col), d)) {
            ++local.rows_dropped;
            continue;
        }
        out.emplace(std::move(id), d);
    }
    if (stats) *stats = local;
    return out;
}

std::vector<ExploitRef> ingest_exploitdb(const std::filesystem::path& path,
                                         const ExploitDbColumns& cols, IngestStats* stats) {
    const CsvTable table = read_csv_file(path);
    const std::size_t refs_col = column_index(table, cols.refs);
    const std::size_t date_col = column_index(table, cols.date);
    const std::size_t type_col = column_index(table, cols.type);
    const std::size_t platform_col = column_index(table, cols.platform);
    std::size_t verified_col = std::size_t(-1);
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == cols.verified) verified_col = i;
    }

    std::vector<ExploitRef> out;
    IngestStats local;
    for (const auto& row : table.rows) {
        ++local.rows_scanned;
        Date d;
        if (!try_parse_date(cell(row, date_col), d)) {
            ++local.rows_dropped;
            continue;
        }
        const std::vector<std::string> ids = extract_cve_ids(cell(row, refs_col));
        if (ids.empty()) {
            ++local.rows_dropped;
            continue;
        }
        const ExploitType type = exploit_type_from(cell(row, type_col));
        const std::string platform(cell(row, platform_col));
        const bool verified =
            verified_col != std::size_t(-1) && truthy(cell(row, verified_col));
        for (const std::string& id : ids) {
            out.push_back({id, d, type, platform, verified});
        }
    }
    if (stats) *stats = local;
    return out;
}

std::map<std::string, double> ingest_cvedetails(const std::filesystem::path& path,
                                                const ScoreColumns& cols, IngestStats* stats) {
    const CsvTable table = read_csv_file(path);
    const std::size_t id_col = column_index(table, cols.id);
    const std::size_t score_col = column_index(table, cols.score);

    std::map<std::string, double> out;
    IngestStats local;
    for (const auto& row : table.rows) {
        ++local.rows_scanned;
        std::string id(cell(row, id_col));
        std::transform(id.begin(), id.end(), id.begin(),
                       [](unsigned char c) { return char(std::toupper(c)); });
        double score = 0.0;
        if (!valid_cve_id(id) || !parse_double(cell(row, score_col), score) || score < 0.0 ||
            score > 10.0) {
            ++local.rows_dropped;
            continue;
        }
        out.emplace(std::move(id), score);
    }
    if (stats) *stats = local;
    return out;
}

std::vector<VulnRecord> join(const std::map<std::string, Date>& cves,
                             const std::vector<ExploitRef>& exploits,
                             const std::map<std::string, double>& scores,
                             const JoinOptions& options) {
    // Sort copies so the selected exploit per CVE is input-order independent.
    std::vector<const ExploitRef*> refs;
    refs.reserve(exploits.size());
    for (const ExploitRef& r : exploits) {
        if (options.verified_only && !r.verified) continue;
        refs.push_back(&r);
    }
    std::sort(refs.begin(), refs.end(), [](const ExploitRef* a, const ExploitRef* b) {
        if (a->cve_id != b->cve_id) return a->cve_id < b->cve_id;
        if (a->exploit_date != b->exploit_date) return a->exploit_date < b->exploit_date;
        if (a->type != b->type) return a->type < b->type;
        return a->platform_raw < b->platform_raw;
    });

    std::vector<VulnRecord> out;
    std::size_t i = 0;
    while (i < refs.size()) {
        std::size_t j = i;
        while (j < refs.size() && refs[j]->cve_id == refs[i]->cve_id) ++j;
        const ExploitRef& chosen =
            options.multi_exploit == MultiExploitRule::Earliest ? *refs[i] : *refs[j - 1];

        const auto cve_it = cves.find(chosen.cve_id);
        const auto score_it = scores.find(chosen.cve_id);
        if (cve_it != cves.end() && score_it != scores.end()) {
            VulnRecord rec;
            rec.cve_id = chosen.cve_id;
            rec.cve_date = cve_it->second;
            rec.exploit_date = chosen.exploit_date;
            rec.exploit_type = chosen.type;
            rec.platform_raw = chosen.platform_raw;
            rec.platform = normalize_platform(chosen.platform_raw, options.platform_merge);
            rec.base_score = score_it->second;
            rec.delay_weeks = weeks_between(rec.cve_date, chosen.exploit_date);
            out.push_back(std::move(rec));
        }
        i = j;
    }
    return out;
}

std::map<CategoryKey, DelaySampleSet> categorize(const std::vector<VulnRecord>& records,
                                                 std::size_t min_platform_size) {
    std::map<CategoryKey, DelaySampleSet> out;
    auto add = [&out](const CategoryKey& key, double sample) {
        auto [it, inserted] = out.try_emplace(key);
        if (inserted) it->second.category = key;
        it->second.samples.push_back(sample);
    };

    for (const VulnRecord& rec : records) {
        if (!rec.delay_weeks) continue;
        const double t = *rec.delay_weeks;
        add({CategoryKind::General, "all"}, t);
        if (rec.exploit_type != ExploitType::Other) {
            add({CategoryKind::Type, std::string(exploit_type_name(rec.exploit_type))}, t);
        }
        if (!rec.platform.empty()) {
            add({CategoryKind::Platform, rec.platform}, t);
        }
    }

    for (auto it = out.begin(); it != out.end();) {
        if (it->first.kind == CategoryKind::Platform &&
            it->second.samples.size() < min_platform_size) {
            it = out.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

std::vector<std::pair<double, std::size_t>> histogram(const std::vector<double>& samples,
                                                      double bin_width) {
    if (bin_width <= 0.0) throw Error("histogram: bin_width must be positive");
    std::map<long long, std::size_t> bins;
    for (double s : samples) {
        ++bins[(long long)std::floor(s / bin_width)];
    }
    std::vector<std::pair<double, std::size_t>> out;
    out.reserve(bins.size());
    for (const auto& [idx, count] : bins) {
        out.emplace_back(double(idx) * bin_width, count);
    }
    return out;
}

namespace {

std::string format_delay(double weeks) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", weeks);
    return buf;
}

}  // namespace

void write_processed(const std::vector<VulnRecord>& records, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write: " + path.string());
    out << "cve_id,cve_date,exploit_date,type,platform_raw,platform,base_score,delay_weeks\n";
    char score_buf[16];
    for (const VulnRecord& rec : records) {
        std::snprintf(score_buf, sizeof(score_buf), "%.1f", rec.base_score);
        write_csv_row(out, {rec.cve_id, format_date(rec.cve_date),
                            rec.exploit_date ? format_date(*rec.exploit_date) : "",
                            std::string(exploit_type_name(rec.exploit_type)), rec.platform_raw,
                            rec.platform, score_buf,
                            rec.delay_weeks ? format_delay(*rec.delay_weeks) : ""});
    }
}

std::vector<VulnRecord> read_processed(const std::filesystem::path& path) {
    const CsvTable table = read_csv_file(path);
    const std::size_t id_col = column_index(table, "cve_id");
    const std::size_t cve_date_col = column_index(table, "cve_date");
    const std::size_t exploit_date_col = column_index(table, "exploit_date");
    const std::size_t type_col = column_index(table, "type");
    const std::size_t platform_raw_col = column_index(table, "platform_raw");
    const std::size_t platform_col = column_index(table, "platform");
    const std::size_t score_col = column_index(table, "base_score");
    const std::size_t delay_col = column_index(table, "delay_weeks");

    std::vector<VulnRecord> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        VulnRecord rec;
        rec.cve_id = std::string(cell(row, id_col));
        rec.cve_date = parse_date(cell(row, cve_date_col));
        const std::string_view ed = cell(row, exploit_date_col);
        if (!ed.empty()) rec.exploit_date = parse_date(ed);
        rec.exploit_type = exploit_type_from(cell(row, type_col));
        rec.platform_raw = std::string(cell(row, platform_raw_col));
        rec.platform = std::string(cell(row, platform_col));
        if (!parse_double(cell(row, score_col), rec.base_score)) {
            throw SchemaError("bad base_score in " + path.string());
        }
        const std::string_view delay = cell(row, delay_col);
        if (!delay.empty()) {
            double w = 0.0;
            if (!parse_double(delay, w)) throw SchemaError("bad delay_weeks in " + path.string());
            rec.delay_weeks = w;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace secscore
