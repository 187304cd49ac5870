#include <doctest.h>

#include <secscore/config.hpp>
#include <secscore/errors.hpp>

#include "helpers.hpp"

using namespace secscore;

TEST_SUITE("config") {

TEST_CASE("defaults survive an empty document") {
    TempDir tmp;
    const RunConfig cfg = load_config(tmp.file("empty.json", "{}"));
    CHECK(cfg.cve_columns.id == "cve_id");
    CHECK(cfg.exploitdb_columns.refs == "codes");
    CHECK(cfg.score_columns.score == "base_score");
    CHECK(cfg.min_category_size == 10);
    CHECK_FALSE(cfg.verified_only);
    CHECK(cfg.multi_exploit == MultiExploitRule::Earliest);
    CHECK(cfg.bounds == MaturityBounds{});
    CHECK(cfg.fit.tolerance == 1e-8);
    CHECK(cfg.fit.max_evaluations == 10000);
    CHECK(cfg.out_dir == ".");
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK(cfg.platform_merge == default_platform_merge());
}

TEST_CASE("full document") {
    TempDir tmp;
    const char* doc = R"({
        "sources": {
            "cve": {"path": "cve.csv", "id_column": "id", "date_column": "published"},
            "exploitdb": {"path": "edb.csv", "refs_column": "cve_refs",
                          "date_column": "posted", "type_column": "kind",
                          "platform_column": "plat", "verified_column": "ok"},
            "scores": {"path": "scores.csv", "id_column": "cve", "score_column": "cvss"}
        },
        "platform_merge": {"winnt": "windows"},
        "min_category_size": 25,
        "verified_only": true,
        "multi_exploit": "latest",
        "maturity_bounds": {"e_min": 0.85, "e_max": 0.99},
        "optimizer": {"tolerance": 1e-6, "max_evaluations": 2500},
        "snapshot_id": "snap-7",
        "out_dir": "out",
        "format": "records"
    })";
    const RunConfig cfg = load_config(tmp.file("full.json", doc));
    CHECK(cfg.cve_path == "cve.csv");
    CHECK(cfg.cve_columns.id == "id");
    CHECK(cfg.cve_columns.date == "published");
    CHECK(cfg.exploitdb_path == "edb.csv");
    CHECK(cfg.exploitdb_columns.refs == "cve_refs");
    CHECK(cfg.exploitdb_columns.verified == "ok");
    CHECK(cfg.scores_path == "scores.csv");
    CHECK(cfg.score_columns.score == "cvss");
    CHECK(cfg.min_category_size == 25);
    CHECK(cfg.verified_only);
    CHECK(cfg.multi_exploit == MultiExploitRule::Latest);
    CHECK(cfg.bounds == MaturityBounds{0.85, 0.99});
    CHECK(cfg.fit.tolerance == 1e-6);
    CHECK(cfg.fit.max_evaluations == 2500);
    CHECK(cfg.snapshot_id == "snap-7");
    CHECK(cfg.out_dir == "out");
    CHECK(cfg.format == OutputFormat::Records);
    // custom merges extend the defaults instead of replacing them
    CHECK(cfg.platform_merge.at("winnt") == "windows");
    CHECK(cfg.platform_merge.at("openbsd") == "bsd");
}

TEST_CASE("rejects unknown keys at any level") {
    TempDir tmp;
    CHECK_THROWS_AS(load_config(tmp.file("a.json", R"({"min_size": 3})")), SchemaError);
    CHECK_THROWS_AS(load_config(tmp.file("b.json", R"({"sources": {"nvd": {}}})")), SchemaError);
    CHECK_THROWS_AS(
        load_config(tmp.file("c.json", R"({"sources": {"cve": {"file": "x.csv"}}})")),
        SchemaError);
    CHECK_THROWS_AS(load_config(tmp.file("d.json", R"({"optimizer": {"seed": 1}})")),
                    SchemaError);
}

TEST_CASE("rejects bad values") {
    TempDir tmp;
    CHECK_THROWS_AS(load_config(tmp.file("a.json", R"({"multi_exploit": "newest"})")),
                    SchemaError);
    CHECK_THROWS_AS(load_config(tmp.file("b.json", R"({"format": "xml"})")), SchemaError);
    CHECK_THROWS_AS(
        load_config(tmp.file("c.json", R"({"maturity_bounds": {"e_min": 0.99, "e_max": 0.5}})")),
        SchemaError);
    CHECK_THROWS_AS(
        load_config(tmp.file("d.json", R"({"maturity_bounds": {"e_max": 1.5}})")), SchemaError);
    CHECK_THROWS_AS(load_config(tmp.file("e.json", R"({"min_category_size": "ten"})")),
                    SchemaError);
    CHECK_THROWS_AS(load_config(tmp.file("f.json", "{ not json")), SchemaError);
}

TEST_CASE("missing file raises an io error") {
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), IoError);
}

}
