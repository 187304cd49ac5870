#pragma once

#include <filesystem>
#include <string>

#include "secscore/dataset.hpp"
#include "secscore/exploit_model.hpp"
#include "secscore/fitting.hpp"

namespace secscore {

enum class OutputFormat { Csv, Records };

struct RunConfig {
    std::string cve_path;
    std::string exploitdb_path;
    std::string scores_path;
    CveColumns cve_columns;
    ExploitDbColumns exploitdb_columns;
    ScoreColumns score_columns;

    PlatformMergeMap platform_merge = default_platform_merge();
    std::size_t min_category_size = 10;
    bool verified_only = false;
    MultiExploitRule multi_exploit = MultiExploitRule::Earliest;

    MaturityBounds bounds;
    FitOptions fit;
    std::string snapshot_id;

    std::string out_dir = ".";
    OutputFormat format = OutputFormat::Csv;
};

// JSON document, every field optional; unknown keys rejected. Throws
// IoError / SchemaError.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace secscore
