#include "secscore/prioritizer.hpp"

#include <algorithm>

#include "secscore/csv.hpp"
#include "secscore/errors.hpp"

namespace secscore {

std::vector<InventoryItem> read_inventory(const std::filesystem::path& path,
                                          const PlatformMergeMap& merge) {
    const CsvTable table = read_csv_file(path);
    const std::size_t id_col = column_index(table, "cve_id");
    const std::size_t vector_col = column_index(table, "vector");
    const std::size_t date_col = column_index(table, "cve_date");
    const std::size_t type_col = column_index(table, "type");
    const std::size_t platform_col = column_index(table, "platform");
    const std::size_t exploit_col = column_index(table, "exploit_date");

    std::vector<InventoryItem> out;
    out.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        InventoryItem item;
        item.cve_id = std::string(cell(row, id_col));
        item.vector = parse_vector(cell(row, vector_col));
        item.cve_date = parse_date(cell(row, date_col));
        item.type = exploit_type_from(cell(row, type_col));
        item.platform = normalize_platform(cell(row, platform_col), merge);
        const std::string_view ed = cell(row, exploit_col);
        if (!ed.empty()) item.exploit_date = parse_date(ed);
        out.push_back(std::move(item));
    }
    return out;
}

CategoryKey resolve_category(const InventoryItem& item, const ModelRegistry& reg) {
    if (!item.platform.empty()) {
        const CategoryKey key{CategoryKind::Platform, item.platform};
        if (al_params_for(reg, key)) return key;
    }
    if (item.type != ExploitType::Other) {
        const CategoryKey key{CategoryKind::Type, std::string(exploit_type_name(item.type))};
        if (al_params_for(reg, key)) return key;
    }
    const CategoryKey general{CategoryKind::General, "all"};
    if (al_params_for(reg, general)) return general;
    throw UnknownCategory("no fitted category for " + item.cve_id);
}

ScoredItem score_at(const InventoryItem& item, Date query, const ModelRegistry& reg,
                    const MaturityBounds& bounds) {
    const CategoryKey key = resolve_category(item, reg);
    const AlParams* params = al_params_for(reg, key);

    ScoredItem s;
    s.cve_id = item.cve_id;
    s.cve_date = item.cve_date;
    s.category = key;
    s.params = *params;
    s.t_weeks = weeks_between(item.cve_date, query);
    s.base = base_score(item.vector).base;
    s.temporal_base = roundup(s.base * CvssConstants::rc(item.vector.rc) *
                              CvssConstants::rl(item.vector.rl));
    s.pinned = item.exploit_known || item.vector.e == ExploitCodeMaturity::High ||
               (item.exploit_date && *item.exploit_date <= query);
    s.e_s = s.pinned ? bounds.e_max : exploit_maturity(s.t_weeks, *params, bounds);
    s.score = s.temporal_base * s.e_s;
    return s;
}

bool scored_before(const ScoredItem& a, const ScoredItem& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.cve_date != b.cve_date) return a.cve_date < b.cve_date;
    return a.cve_id < b.cve_id;
}

RankOutcome rank(const std::vector<InventoryItem>& items, Date query, const ModelRegistry& reg,
                 const MaturityBounds& bounds) {
    RankOutcome outcome;
    outcome.ranked.reserve(items.size());
    for (const InventoryItem& item : items) {
        try {
            outcome.ranked.push_back(score_at(item, query, reg, bounds));
        } catch (const Error& e) {
            outcome.failures.emplace_back(item.cve_id, e.what());
        }
    }
    std::sort(outcome.ranked.begin(), outcome.ranked.end(), scored_before);
    return outcome;
}

ScoreTrajectory trajectory(const InventoryItem& item, Date start, Date end, int step_days,
                           const ModelRegistry& reg, const MaturityBounds& bounds) {
    if (end < start) throw Error("trajectory: end before start");
    if (step_days < 1) throw Error("trajectory: step must be at least one day");

    ScoreTrajectory traj;
    traj.cve_id = item.cve_id;
    traj.cve_date = item.cve_date;
    traj.exploit_date = item.exploit_date;
    for (Date d = start; d <= end; d += std::chrono::days(step_days)) {
        const ScoredItem s = score_at(item, d, reg, bounds);
        traj.points.push_back({d, s.t_weeks, s.e_s, s.score, d < item.cve_date});
    }
    return traj;
}

PrecedenceReport precedence_eval(const std::vector<InventoryItem>& items,
                                 const std::vector<Date>& query_dates, const ModelRegistry& reg,
                                 const MaturityBounds& bounds) {
    std::vector<std::uint32_t> with_exploit;
    for (std::uint32_t i = 0; i < items.size(); ++i) {
        if (items[i].exploit_date) with_exploit.push_back(i);
    }
    if (with_exploit.size() < 2) {
        throw InsufficientData("precedence_eval: need at least two items with exploit dates");
    }

    PrecedenceReport report;
    for (const Date& query : query_dates) {
        // Counterfactual view: the exploit date only gates eligibility.
        std::vector<std::uint32_t> eligible;
        std::vector<ScoredItem> scored;
        for (std::uint32_t idx : with_exploit) {
            const InventoryItem& item = items[idx];
            if (item.cve_date > query || *item.exploit_date <= query) continue;
            InventoryItem counterfactual = item;
            counterfactual.exploit_known = false;
            counterfactual.exploit_date.reset();
            eligible.push_back(idx);
            scored.push_back(score_at(counterfactual, query, reg, bounds));
        }

        std::size_t date_pairs = 0;
        std::size_t date_concordant = 0;
        for (std::size_t x = 0; x < eligible.size(); ++x) {
            for (std::size_t y = x + 1; y < eligible.size(); ++y) {
                const Date ex = *items[eligible[x]].exploit_date;
                const Date ey = *items[eligible[y]].exploit_date;
                if (ex == ey) continue;

                const ScoredItem& sx = scored[x];
                const ScoredItem& sy = scored[y];
                int score_order = 0;  // +1: x strictly ahead of y
                if (sx.score != sy.score) {
                    score_order = sx.score > sy.score ? 1 : -1;
                } else if (sx.temporal_base == sy.temporal_base) {
                    score_order = compare_maturity_exact(sx.t_weeks, sx.params, sx.pinned,
                                                         sy.t_weeks, sy.params, sy.pinned);
                }
                const int exploit_order = ex < ey ? 1 : -1;
                const bool concordant = score_order == exploit_order;
                report.pairs.push_back({eligible[x], eligible[y], query, concordant});
                ++date_pairs;
                if (concordant) ++date_concordant;
            }
        }
        report.per_date.emplace_back(query, std::make_pair(date_pairs, date_concordant));
        report.n_pairs += date_pairs;
        report.n_concordant += date_concordant;
    }

    report.concordance =
        report.n_pairs ? double(report.n_concordant) / double(report.n_pairs) : 0.0;
    return report;
}

}  // namespace secscore
