#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "secscore/cvss.hpp"
#include "secscore/dataset.hpp"
#include "secscore/dates.hpp"
#include "secscore/exploit_model.hpp"
#include "secscore/fitting.hpp"

namespace secscore {

struct InventoryItem {
    std::string cve_id;
    CvssV31Vector vector;
    Date cve_date{};
    ExploitType type = ExploitType::Other;
    std::string platform;  // normalized
    bool exploit_known = false;
    std::optional<Date> exploit_date;
};

struct ScoredItem {
    std::string cve_id;
    Date cve_date{};
    double score = 0.0;          // unrounded SecScore
    double base = 0.0;           // CVSS base
    double temporal_base = 0.0;  // roundup(base * RC * RL)
    double e_s = 0.0;
    double t_weeks = 0.0;
    bool pinned = false;
    CategoryKey category;
    AlParams params{};
};

// Inventory CSV: cve_id,vector,cve_date,type,platform,exploit_date
// (empty exploit_date = none known). Throws on unreadable file or bad rows.
std::vector<InventoryItem> read_inventory(const std::filesystem::path& path,
                                          const PlatformMergeMap& merge = default_platform_merge());

// Category resolution: Platform, then Type, then General, first one fitted in
// the registry. Throws UnknownCategory when the chain is exhausted.
CategoryKey resolve_category(const InventoryItem& item, const ModelRegistry& reg);

// E_S is pinned to e_max when an exploit is known by the query date, the
// analyst flag is set, or the vector carries E:H.
ScoredItem score_at(const InventoryItem& item, Date query, const ModelRegistry& reg,
                    const MaturityBounds& bounds = {});

// Ranking order: unrounded score descending, then earlier CVE date, then
// cve_id.
bool scored_before(const ScoredItem& a, const ScoredItem& b);

struct RankOutcome {
    std::vector<ScoredItem> ranked;
    std::vector<std::pair<std::string, std::string>> failures;  // cve_id, reason
};

RankOutcome rank(const std::vector<InventoryItem>& items, Date query, const ModelRegistry& reg,
                 const MaturityBounds& bounds = {});

struct TrajectoryPoint {
    Date date{};
    double t_weeks = 0.0;
    double e_s = 0.0;
    double score = 0.0;
    bool projected = false;  // before the CVE date
};

struct ScoreTrajectory {
    std::string cve_id;
    Date cve_date{};
    std::optional<Date> exploit_date;
    std::vector<TrajectoryPoint> points;
};

ScoreTrajectory trajectory(const InventoryItem& item, Date start, Date end, int step_days,
                           const ModelRegistry& reg, const MaturityBounds& bounds = {});

struct PairOutcome {
    std::uint32_t first_index = 0;
    std::uint32_t second_index = 0;
    Date query{};
    bool concordant = false;
};

struct PrecedenceReport {
    std::size_t n_pairs = 0;
    std::size_t n_concordant = 0;
    double concordance = 0.0;
    std::vector<PairOutcome> pairs;
    std::vector<std::pair<Date, std::pair<std::size_t, std::size_t>>> per_date;
};

// Counterfactual scoring (exploit pinning off) at each query date; a pair
// enters when both items are published and neither exploit has appeared yet,
// and is concordant when the score order matches the exploit date order.
PrecedenceReport precedence_eval(const std::vector<InventoryItem>& items,
                                 const std::vector<Date>& query_dates, const ModelRegistry& reg,
                                 const MaturityBounds& bounds = {});

}  // namespace secscore
