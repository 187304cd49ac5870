#include "secscore/config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "secscore/errors.hpp"

namespace secscore {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!known.count(key)) {
            throw SchemaError("config: unknown key '" + key + "' in " + where);
        }
    }
}

}  // namespace

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw SchemaError("config: " + std::string(e.what()));
    }

    RunConfig cfg;
    try {
        reject_unknown(doc, {"sources", "platform_merge", "min_category_size", "verified_only",
                             "multi_exploit", "maturity_bounds", "optimizer", "snapshot_id",
                             "out_dir", "format"},
                       "document root");

        if (doc.contains("sources")) {
            const json& sources = doc.at("sources");
            reject_unknown(sources, {"cve", "exploitdb", "scores"}, "sources");
            if (sources.contains("cve")) {
                const json& s = sources.at("cve");
                reject_unknown(s, {"path", "id_column", "date_column"}, "sources.cve");
                cfg.cve_path = s.value("path", "");
                cfg.cve_columns.id = s.value("id_column", cfg.cve_columns.id);
                cfg.cve_columns.date = s.value("date_column", cfg.cve_columns.date);
            }
            if (sources.contains("exploitdb")) {
                const json& s = sources.at("exploitdb");
                reject_unknown(s,
                               {"path", "refs_column", "date_column", "type_column",
                                "platform_column", "verified_column"},
                               "sources.exploitdb");
                cfg.exploitdb_path = s.value("path", "");
                cfg.exploitdb_columns.refs = s.value("refs_column", cfg.exploitdb_columns.refs);
                cfg.exploitdb_columns.date = s.value("date_column", cfg.exploitdb_columns.date);
                cfg.exploitdb_columns.type = s.value("type_column", cfg.exploitdb_columns.type);
                cfg.exploitdb_columns.platform =
                    s.value("platform_column", cfg.exploitdb_columns.platform);
                cfg.exploitdb_columns.verified =
                    s.value("verified_column", cfg.exploitdb_columns.verified);
            }
            if (sources.contains("scores")) {
                const json& s = sources.at("scores");
                reject_unknown(s, {"path", "id_column", "score_column"}, "sources.scores");
                cfg.scores_path = s.value("path", "");
                cfg.score_columns.id = s.value("id_column", cfg.score_columns.id);
                cfg.score_columns.score = s.value("score_column", cfg.score_columns.score);
            }
        }

        if (doc.contains("platform_merge")) {
            for (const auto& [raw, bucket] : doc.at("platform_merge").items()) {
                cfg.platform_merge[raw] = bucket.get<std::string>();
            }
        }
        cfg.min_category_size = doc.value("min_category_size", cfg.min_category_size);
        cfg.verified_only = doc.value("verified_only", cfg.verified_only);
        if (doc.contains("multi_exploit")) {
            const std::string rule = doc.at("multi_exploit").get<std::string>();
            if (rule == "earliest") cfg.multi_exploit = MultiExploitRule::Earliest;
            else if (rule == "latest") cfg.multi_exploit = MultiExploitRule::Latest;
            else throw SchemaError("config: multi_exploit must be 'earliest' or 'latest'");
        }

        if (doc.contains("maturity_bounds")) {
            const json& b = doc.at("maturity_bounds");
            reject_unknown(b, {"e_min", "e_max"}, "maturity_bounds");
            cfg.bounds.e_min = b.value("e_min", cfg.bounds.e_min);
            cfg.bounds.e_max = b.value("e_max", cfg.bounds.e_max);
            if (!valid(cfg.bounds)) {
                throw SchemaError("config: need 0 < e_min <= e_max <= 1");
            }
        }
        if (doc.contains("optimizer")) {
            const json& o = doc.at("optimizer");
            reject_unknown(o, {"tolerance", "max_evaluations"}, "optimizer");
            cfg.fit.tolerance = o.value("tolerance", cfg.fit.tolerance);
            cfg.fit.max_evaluations = o.value("max_evaluations", cfg.fit.max_evaluations);
        }
        cfg.snapshot_id = doc.value("snapshot_id", cfg.snapshot_id);
        cfg.out_dir = doc.value("out_dir", cfg.out_dir);
        if (doc.contains("format")) {
            const std::string fmt = doc.at("format").get<std::string>();
            if (fmt == "csv") cfg.format = OutputFormat::Csv;
            else if (fmt == "records") cfg.format = OutputFormat::Records;
            else throw SchemaError("config: format must be 'csv' or 'records'");
        }
    } catch (const json::exception& e) {
        throw SchemaError("config: " + std::string(e.what()));
    }
    return cfg;
}

}  // namespace secscore
