#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secscore/config.hpp"
#include "secscore/csv.hpp"
#include "secscore/cvss.hpp"
#include "secscore/dataset.hpp"
#include "secscore/dates.hpp"
#include "secscore/distributions.hpp"
#include "secscore/errors.hpp"
#include "secscore/exploit_model.hpp"
#include "secscore/fitting.hpp"
#include "secscore/prioritizer.hpp"

namespace {

using nlohmann::ordered_json;
using namespace secscore;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoResults = 3;

std::string sig4(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string sci3(double v) {
    if (std::isnan(v)) return "-";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

// Emits rows either as CSV (header first) or as one JSON object per line.
class TableWriter {
  public:
    TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> columns)
        : out_(out), format_(format), columns_(std::move(columns)) {
        if (format_ == OutputFormat::Csv) write_csv_row(out_, columns_);
    }

    void row(const ordered_json& values) {
        if (format_ == OutputFormat::Records) {
            out_ << values.dump() << '\n';
            return;
        }
        std::vector<std::string> fields;
        fields.reserve(columns_.size());
        for (const std::string& col : columns_) {
            const auto it = values.find(col);
            if (it == values.end() || it->is_null()) {
                fields.emplace_back();
            } else if (it->is_string()) {
                fields.push_back(it->get<std::string>());
            } else {
                fields.push_back(it->dump());
            }
        }
        write_csv_row(out_, fields);
    }

  private:
    std::ostream& out_;
    OutputFormat format_;
    std::vector<std::string> columns_;
};

// Output sink: stdout by default, a file when requested.
class Sink {
  public:
    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file_.open(path, std::ios::binary);
        if (!file_) throw IoError("cannot write: " + path);
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

double parse_double(std::string_view text, const std::string& what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw Error(what + ": bad number '" + std::string(text) + "'");
    return value;
}

// [label=]mu,lambda,kappa
AlParams parse_param_spec(std::string_view spec, CategoryKey& key) {
    key = {CategoryKind::General, "all"};
    std::string_view body = spec;
    if (const auto eq = spec.find('='); eq != std::string_view::npos) {
        key = category_from_label(spec.substr(0, eq));
        body = spec.substr(eq + 1);
    }
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = body.find(',', start);
        if (comma == std::string_view::npos) {
            parts.push_back(body.substr(start));
            break;
        }
        parts.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
    if (parts.size() != 3) throw Error("--params needs [label=]mu,lambda,kappa: '" + std::string(spec) + "'");
    const AlParams p{parse_double(parts[0], "--params"), parse_double(parts[1], "--params"),
                     parse_double(parts[2], "--params")};
    if (!valid(p)) throw Error("--params: lambda and kappa must be positive finite");
    return p;
}

ModelRegistry params_registry(const std::vector<std::string>& specs) {
    ModelRegistry reg;
    reg.snapshot_id = "cli-params";
    for (const std::string& spec : specs) {
        CategoryKey key;
        const AlParams p = parse_param_spec(spec, key);
        FitResult fit;
        fit.family = Family::Al;
        fit.params = p;
        fit.log_likelihood = std::numeric_limits<double>::quiet_NaN();
        fit.mse = std::numeric_limits<double>::quiet_NaN();
        fit.converged = true;
        CategoryFits& slot = reg.entries[key];
        slot.n = 0;
        slot.fits = {fit};
        slot.best_family = Family::Al;
    }
    return reg;
}

ModelRegistry acquire_registry(const std::vector<std::string>& specs,
                               const std::string& registry_path) {
    if (!specs.empty()) return params_registry(specs);
    if (registry_path.empty()) {
        throw Error("no model source: pass --registry FILE or --params [label=]mu,lambda,kappa");
    }
    return load_registry(registry_path);
}

std::filesystem::path resolve_out(const RunConfig& cfg, const std::string& explicit_path,
                                  const char* default_name) {
    if (!explicit_path.empty()) return explicit_path;
    return std::filesystem::path(cfg.out_dir) / default_name;
}

int cmd_ingest(const RunConfig& cfg, const std::string& out_file) {
    if (cfg.cve_path.empty() || cfg.exploitdb_path.empty() || cfg.scores_path.empty()) {
        throw Error("ingest needs --cve, --exploitdb and --scores (flags or config sources)");
    }
    IngestStats cve_stats, exploit_stats, score_stats;
    const auto cves = ingest_cve(cfg.cve_path, cfg.cve_columns, &cve_stats);
    const auto exploits = ingest_exploitdb(cfg.exploitdb_path, cfg.exploitdb_columns, &exploit_stats);
    const auto scores = ingest_cvedetails(cfg.scores_path, cfg.score_columns, &score_stats);

    JoinOptions options;
    options.verified_only = cfg.verified_only;
    options.multi_exploit = cfg.multi_exploit;
    options.platform_merge = cfg.platform_merge;
    const auto records = join(cves, exploits, scores, options);

    const auto path = resolve_out(cfg, out_file, "processed.csv");
    write_processed(records, path);

    std::printf("cve rows: %zu (dropped %zu)\n", cve_stats.rows_scanned, cve_stats.rows_dropped);
    std::printf("exploit refs: %zu (dropped rows %zu)\n", exploit_stats.rows_scanned,
                exploit_stats.rows_dropped);
    std::printf("score rows: %zu (dropped %zu)\n", score_stats.rows_scanned,
                score_stats.rows_dropped);
    std::printf("joined records: %zu\n", records.size());
    if (records.empty()) {
        std::fprintf(stderr, "warning: join produced no records\n");
    } else {
        std::printf("category counts:\n");
        for (const auto& [key, set] : categorize(records, cfg.min_category_size)) {
            std::printf("  %-22s %zu\n", to_string(key).c_str(), set.samples.size());
        }
    }
    std::printf("wrote %s\n", path.string().c_str());
    return kExitOk;
}

void print_fit_report(const ModelRegistry& reg) {
    std::printf("%-22s %8s  %10s %10s %10s  %10s %10s %10s  %s\n", "category", "n", "mse_sn",
                "mse_l", "mse_al", "mu", "lambda", "kappa", "best");
    for (const auto& [key, cat] : reg.entries) {
        const FitResult* al = find_fit(reg, key, Family::Al);
        const FitResult* laplace = find_fit(reg, key, Family::Laplace);
        const FitResult* sn = find_fit(reg, key, Family::SkewNormal);
        std::string mu = "-", lambda = "-", kappa = "-";
        if (al) {
            const auto& p = std::get<AlParams>(al->params);
            mu = sig4(p.mu);
            lambda = sig4(p.lambda);
            kappa = sig4(p.kappa);
        }
        std::printf("%-22s %8zu  %10s %10s %10s  %10s %10s %10s  %s\n", to_string(key).c_str(),
                    cat.n, (sn ? sci3(sn->mse) : "-").c_str(),
                    (laplace ? sci3(laplace->mse) : "-").c_str(),
                    (al ? sci3(al->mse) : "-").c_str(), mu.c_str(), lambda.c_str(), kappa.c_str(),
                    std::string(family_name(cat.best_family)).c_str());
    }
}

int cmd_fit(const RunConfig& cfg, const std::string& dataset_path, const std::string& registry_out,
            unsigned threads) {
    const auto records = read_processed(dataset_path);
    const auto categorized = categorize(records, cfg.min_category_size);
    if (categorized.empty()) {
        std::fprintf(stderr, "no category reached the size threshold\n");
        return kExitNoResults;
    }

    ModelRegistry reg = fit_all(categorized, cfg.fit, threads);
    for (const auto& [key, reason] : reg.failures) {
        std::fprintf(stderr, "fit failed for %s: %s\n", to_string(key).c_str(), reason.c_str());
    }
    if (reg.entries.empty()) {
        std::fprintf(stderr, "no category could be fitted\n");
        return kExitNoResults;
    }

    if (!cfg.snapshot_id.empty()) {
        reg.snapshot_id = cfg.snapshot_id;
    } else {
        reg.snapshot_id = std::filesystem::path(dataset_path).stem().string() + "-" +
                          std::to_string(records.size());
    }
    reg.created = registry_timestamp();

    const auto path = resolve_out(cfg, registry_out, "registry.json");
    save_registry(reg, path);
    print_fit_report(reg);
    std::printf("wrote %s\n", path.string().c_str());
    return kExitOk;
}

struct ScoreArgs {
    std::string vector_text;
    std::string category = "all";
    std::string cve_date;
    std::string query_date;
    double t_weeks = 0.0;
    bool t_weeks_set = false;
    std::string exploit_date;
    bool exploited = false;
    std::string sweep;
    std::string out_file;
};

int cmd_score(const RunConfig& cfg, const ModelRegistry& reg, const ScoreArgs& args) {
    const CvssV31Vector vec = parse_vector(args.vector_text);
    const BaseBreakdown bb = base_score(vec);
    const double temporal_base =
        roundup(bb.base * CvssConstants::rc(vec.rc) * CvssConstants::rl(vec.rl));

    CategoryKey key = category_from_label(args.category);
    const AlParams* params = al_params_for(reg, key);
    if (!params) {
        const CategoryKey general{CategoryKind::General, "all"};
        params = al_params_for(reg, general);
        if (!params) throw UnknownCategory("no fitted parameters for '" + args.category + "'");
        key = general;
    }

    Sink sink(args.out_file);

    if (!args.sweep.empty()) {
        // START:END:N evenly spaced t values; only the E:H / --exploited pins
        // apply here, dates do not.
        const auto first = args.sweep.find(':');
        const auto second = args.sweep.find(':', first + 1);
        if (first == std::string::npos || second == std::string::npos) {
            throw Error("--sweep needs START:END:N");
        }
        const double start = parse_double(args.sweep.substr(0, first), "--sweep");
        const double end = parse_double(args.sweep.substr(first + 1, second - first - 1), "--sweep");
        long n = 0;
        {
            const std::string tail = args.sweep.substr(second + 1);
            const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
            if (ec != std::errc() || ptr != tail.data() + tail.size() || n < 1) {
                throw Error("--sweep: N must be a positive integer");
            }
        }
        const bool pinned = args.exploited || vec.e == ExploitCodeMaturity::High;
        TableWriter table(sink.stream(), cfg.format, {"t_weeks", "e_s", "secscore"});
        for (long i = 0; i < n; ++i) {
            const double t = n == 1 ? start : start + (end - start) * double(i) / double(n - 1);
            const double e_s = pinned ? cfg.bounds.e_max : exploit_maturity(t, *params, cfg.bounds);
            table.row({{"t_weeks", t}, {"e_s", e_s}, {"secscore", temporal_base * e_s}});
        }
        return kExitOk;
    }

    double t = args.t_weeks;
    bool pinned = args.exploited || vec.e == ExploitCodeMaturity::High;
    if (!args.t_weeks_set) {
        if (args.cve_date.empty() || args.query_date.empty()) {
            throw Error("score needs either --t-weeks or both --cve-date and --date");
        }
        const Date published = parse_date(args.cve_date);
        const Date query = parse_date(args.query_date);
        t = weeks_between(published, query);
        if (!args.exploit_date.empty() && parse_date(args.exploit_date) <= query) pinned = true;
    } else if (!args.exploit_date.empty()) {
        throw Error("--exploit-date needs date-based scoring, not --t-weeks");
    }

    const double e_s = pinned ? cfg.bounds.e_max : exploit_maturity(t, *params, cfg.bounds);
    const double score = temporal_base * e_s;
    const double display = std::round(score * 100.0) / 100.0;
    const double env = secscore_environmental(vec, t, *params, cfg.bounds, pinned);

    TableWriter table(sink.stream(), cfg.format,
                      {"vector", "category", "t_weeks", "base", "base_severity", "temporal_base",
                       "e_s", "pinned", "secscore", "secscore_display", "secscore_env"});
    table.row({{"vector", to_vector_string(vec)},
               {"category", to_string(key)},
               {"t_weeks", t},
               {"base", bb.base},
               {"base_severity", std::string(severity_name(severity(bb.base)))},
               {"temporal_base", temporal_base},
               {"e_s", e_s},
               {"pinned", pinned},
               {"secscore", score},
               {"secscore_display", display},
               {"secscore_env", env}});
    return kExitOk;
}

int cmd_rank(const RunConfig& cfg, const ModelRegistry& reg, const std::string& inventory,
             const std::string& date, const std::string& out_file) {
    const auto items = read_inventory(inventory, cfg.platform_merge);
    const RankOutcome outcome = rank(items, parse_date(date), reg, cfg.bounds);
    for (const auto& [id, reason] : outcome.failures) {
        std::fprintf(stderr, "skipped %s: %s\n", id.c_str(), reason.c_str());
    }

    Sink sink(out_file);
    TableWriter table(sink.stream(), cfg.format,
                      {"rank", "cve_id", "category", "cve_date", "base", "temporal_base",
                       "t_weeks", "e_s", "score", "pinned"});
    std::size_t position = 1;
    for (const ScoredItem& item : outcome.ranked) {
        table.row({{"rank", position++},
                   {"cve_id", item.cve_id},
                   {"category", to_string(item.category)},
                   {"cve_date", format_date(item.cve_date)},
                   {"base", item.base},
                   {"temporal_base", item.temporal_base},
                   {"t_weeks", item.t_weeks},
                   {"e_s", item.e_s},
                   {"score", item.score},
                   {"pinned", item.pinned}});
    }
    return outcome.ranked.empty() ? kExitNoResults : kExitOk;
}

int cmd_replay(const RunConfig& cfg, const ModelRegistry& reg, const std::string& inventory,
               const std::string& start, const std::string& end, int step_days,
               const std::string& out_file) {
    const auto items = read_inventory(inventory, cfg.platform_merge);
    const Date from = parse_date(start);
    const Date to = parse_date(end);

    Sink sink(out_file);
    TableWriter table(sink.stream(), cfg.format,
                      {"cve_id", "date", "t_weeks", "e_s", "score", "projected", "cve_date",
                       "exploit_date"});
    std::size_t emitted = 0;
    for (const InventoryItem& item : items) {
        try {
            const ScoreTrajectory traj = trajectory(item, from, to, step_days, reg, cfg.bounds);
            for (const TrajectoryPoint& p : traj.points) {
                table.row({{"cve_id", traj.cve_id},
                           {"date", format_date(p.date)},
                           {"t_weeks", p.t_weeks},
                           {"e_s", p.e_s},
                           {"score", p.score},
                           {"projected", p.projected},
                           {"cve_date", format_date(traj.cve_date)},
                           {"exploit_date", traj.exploit_date
                                                ? ordered_json(format_date(*traj.exploit_date))
                                                : ordered_json()}});
                ++emitted;
            }
        } catch (const UnknownCategory& e) {
            std::fprintf(stderr, "skipped %s: %s\n", item.cve_id.c_str(), e.what());
        }
    }
    return emitted == 0 ? kExitNoResults : kExitOk;
}

int cmd_stats(const RunConfig& cfg, const std::optional<ModelRegistry>& reg,
              const std::string& dataset_path, const std::string& category, bool as_histogram,
              double bin_width, const std::string& out_file) {
    const auto records = read_processed(dataset_path);
    const auto categorized = categorize(records, cfg.min_category_size);
    const CategoryKey key = category_from_label(category);
    const auto it = categorized.find(key);
    if (it == categorized.end()) {
        throw UnknownCategory("category '" + category + "' absent or under the size threshold");
    }
    const std::vector<double>& samples = it->second.samples;

    Sink sink(out_file);
    if (as_histogram) {
        if (bin_width <= 0.0) throw Error("--bin-width must be positive");
        TableWriter table(sink.stream(), cfg.format, {"bin_start", "count"});
        for (const auto& [bin_start, count] : histogram(samples, bin_width)) {
            table.row({{"bin_start", bin_start}, {"count", count}});
        }
        return kExitOk;
    }

    const EmpiricalCdf ecdf = empirical_cdf(samples);
    const FitResult* al = nullptr;
    const FitResult* laplace = nullptr;
    const FitResult* sn = nullptr;
    if (reg) {
        al = find_fit(*reg, key, Family::Al);
        laplace = find_fit(*reg, key, Family::Laplace);
        sn = find_fit(*reg, key, Family::SkewNormal);
    }

    std::vector<std::string> columns{"t", "ecdf"};
    if (al) columns.push_back("cdf_al");
    if (laplace) columns.push_back("cdf_laplace");
    if (sn) columns.push_back("cdf_skew_normal");
    TableWriter table(sink.stream(), cfg.format, columns);
    for (std::size_t i = 0; i < ecdf.t.size(); ++i) {
        ordered_json row{{"t", ecdf.t[i]}, {"ecdf", ecdf.f[i]}};
        if (al) row["cdf_al"] = model_cdf(*al, ecdf.t[i]);
        if (laplace) row["cdf_laplace"] = model_cdf(*laplace, ecdf.t[i]);
        if (sn) row["cdf_skew_normal"] = model_cdf(*sn, ecdf.t[i]);
        table.row(row);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CVSS v3.1 scoring with a time-dependent exploit-maturity model"};
    app.require_subcommand(1);

    std::string config_path, registry_path, format_name, out_dir;
    std::vector<std::string> param_specs;
    double e_min = 0.0, e_max = 0.0;
    app.add_option("--config", config_path, "JSON run configuration");
    auto* registry_opt = app.add_option("--registry", registry_path, "model registry file");
    auto* format_opt = app.add_option("--format", format_name, "output format")
                           ->check(CLI::IsMember({"csv", "records"}));
    auto* out_opt = app.add_option("--out", out_dir, "output directory for default file names");
    app.add_option("--params", param_specs,
                   "[label=]mu,lambda,kappa; repeatable, bypasses the registry");
    auto* e_min_opt = app.add_option("--e-min", e_min, "lower maturity bound");
    auto* e_max_opt = app.add_option("--e-max", e_max, "upper maturity bound");

    auto* ingest = app.add_subcommand("ingest", "join the three source snapshots");
    ingest->fallthrough();
    std::string cve_path, exploitdb_path, scores_path, ingest_out;
    auto* cve_opt = ingest->add_option("--cve", cve_path, "CVE id/date CSV");
    auto* exploitdb_opt = ingest->add_option("--exploitdb", exploitdb_path, "exploit CSV");
    auto* scores_opt = ingest->add_option("--scores", scores_path, "base score CSV");
    ingest->add_option("--out-file", ingest_out, "processed CSV path");
    bool verified_only = false;
    auto* verified_opt = ingest->add_flag("--verified-only", verified_only,
                                          "keep verified exploit rows only");
    std::string multi_exploit;
    auto* multi_opt = ingest->add_option("--multi-exploit", multi_exploit,
                                         "several exploits per CVE: keep which date")
                          ->check(CLI::IsMember({"earliest", "latest"}));

    auto* fit = app.add_subcommand("fit", "fit delay distributions per category");
    fit->fallthrough();
    std::string fit_dataset, fit_registry_out;
    unsigned fit_threads = 0;
    std::string fit_snapshot;
    fit->add_option("--dataset", fit_dataset, "processed CSV from ingest")->required();
    fit->add_option("--registry-out", fit_registry_out, "registry path");
    fit->add_option("--threads", fit_threads, "fitting threads, 0 = hardware");
    auto* snapshot_opt = fit->add_option("--snapshot-id", fit_snapshot, "registry snapshot label");

    auto* score = app.add_subcommand("score", "score one vector");
    score->fallthrough();
    ScoreArgs score_args;
    score->add_option("--vector", score_args.vector_text, "CVSS v3.1 vector string")->required();
    score->add_option("--category", score_args.category, "category label, default all");
    score->add_option("--cve-date", score_args.cve_date, "publication date YYYY-MM-DD");
    score->add_option("--date", score_args.query_date, "query date YYYY-MM-DD");
    auto* t_weeks_opt = score->add_option("--t-weeks", score_args.t_weeks,
                                          "weeks since publication, bypasses dates");
    score->add_option("--exploit-date", score_args.exploit_date,
                      "known exploit publication date");
    score->add_flag("--exploited", score_args.exploited, "pin maturity to its upper bound");
    score->add_option("--sweep", score_args.sweep, "START:END:N maturity sweep over t");
    score->add_option("--out-file", score_args.out_file, "write the table here, not stdout");

    auto* rank_cmd = app.add_subcommand("rank", "rank an inventory at a query date");
    rank_cmd->fallthrough();
    std::string rank_inventory, rank_date, rank_out;
    rank_cmd->add_option("--inventory", rank_inventory, "inventory CSV")->required();
    rank_cmd->add_option("--date", rank_date, "query date YYYY-MM-DD")->required();
    rank_cmd->add_option("--out-file", rank_out, "write the table here, not stdout");

    auto* replay = app.add_subcommand("replay", "score trajectories over a date grid");
    replay->fallthrough();
    std::string replay_inventory, replay_start, replay_end, replay_out;
    int replay_step = 7;
    replay->add_option("--inventory", replay_inventory, "inventory CSV")->required();
    replay->add_option("--start", replay_start, "grid start YYYY-MM-DD")->required();
    replay->add_option("--end", replay_end, "grid end YYYY-MM-DD")->required();
    replay->add_option("--step", replay_step, "grid step in days");
    replay->add_option("--out-file", replay_out, "write the table here, not stdout");

    auto* stats = app.add_subcommand("stats", "delay histogram and CDF tables");
    stats->fallthrough();
    std::string stats_dataset, stats_category = "all", stats_out;
    bool stats_histogram = false;
    double stats_bin_width = 4.0;
    stats->add_option("--dataset", stats_dataset, "processed CSV from ingest")->required();
    stats->add_option("--category", stats_category, "category label, default all");
    stats->add_flag("--histogram", stats_histogram, "emit binned counts instead of CDFs");
    stats->add_option("--bin-width", stats_bin_width, "histogram bin width in weeks");
    stats->add_option("--out-file", stats_out, "write the table here, not stdout");

    std::string min_category_text;
    auto* min_category_opt =
        app.add_option("--min-category", min_category_text, "platform size threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (format_opt->count()) {
            cfg.format = format_name == "records" ? OutputFormat::Records : OutputFormat::Csv;
        }
        if (out_opt->count()) cfg.out_dir = out_dir;
        if (e_min_opt->count()) cfg.bounds.e_min = e_min;
        if (e_max_opt->count()) cfg.bounds.e_max = e_max;
        if (!valid(cfg.bounds)) throw Error("need 0 < e_min <= e_max <= 1");
        if (min_category_opt->count()) {
            const long n = static_cast<long>(parse_double(min_category_text, "--min-category"));
            if (n < 0) throw Error("--min-category must be non-negative");
            cfg.min_category_size = static_cast<std::size_t>(n);
        }
        if (cve_opt->count()) cfg.cve_path = cve_path;
        if (exploitdb_opt->count()) cfg.exploitdb_path = exploitdb_path;
        if (scores_opt->count()) cfg.scores_path = scores_path;
        if (verified_opt->count()) cfg.verified_only = verified_only;
        if (multi_opt->count()) {
            cfg.multi_exploit = multi_exploit == "latest" ? MultiExploitRule::Latest
                                                          : MultiExploitRule::Earliest;
        }
        if (snapshot_opt->count()) cfg.snapshot_id = fit_snapshot;
        score_args.t_weeks_set = t_weeks_opt->count() > 0;

        if (*ingest) return cmd_ingest(cfg, ingest_out);
        if (*fit) return cmd_fit(cfg, fit_dataset, fit_registry_out, fit_threads);
        if (*score) {
            return cmd_score(cfg, acquire_registry(param_specs, registry_path), score_args);
        }
        if (*rank_cmd) {
            return cmd_rank(cfg, acquire_registry(param_specs, registry_path), rank_inventory,
                            rank_date, rank_out);
        }
        if (*replay) {
            return cmd_replay(cfg, acquire_registry(param_specs, registry_path), replay_inventory,
                              replay_start, replay_end, replay_step, replay_out);
        }
        if (*stats) {
            std::optional<ModelRegistry> reg;
            if (!param_specs.empty() || registry_opt->count()) {
                reg = acquire_registry(param_specs, registry_path);
            }
            return cmd_stats(cfg, reg, stats_dataset, stats_category, stats_histogram,
                             stats_bin_width, stats_out);
        }
        return kExitInput;
    } catch (const UnknownCategory& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoResults;
    } catch (const EmptySample& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoResults;
    } catch (const DegenerateSample& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoResults;
    } catch (const InsufficientData& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNoResults;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    }
}
