#include <doctest.h>

#include <algorithm>
#include <secscore/dataset.hpp>
#include <secscore/dates.hpp>
#include <secscore/errors.hpp>

#include "helpers.hpp"

using namespace secscore;

namespace {

struct Fixture {
    std::map<std::string, Date> cves;
    std::vector<ExploitRef> exploits;
    std::map<std::string, double> scores;
    IngestStats cve_stats, exploit_stats, score_stats;

    Fixture() {
        cves = ingest_cve(test_data_dir() / "ingest_cve.csv", {}, &cve_stats);
        exploits = ingest_exploitdb(test_data_dir() / "ingest_exploitdb.csv", {}, &exploit_stats);
        scores = ingest_cvedetails(test_data_dir() / "ingest_scores.csv", {}, &score_stats);
    }
};

}  // namespace

TEST_SUITE("dataset") {

TEST_CASE("exploit type parsing is case insensitive") {
    CHECK(exploit_type_from("WEBAPPS") == ExploitType::Webapps);
    CHECK(exploit_type_from("DoS") == ExploitType::DoS);
    CHECK(exploit_type_from("local") == ExploitType::Local);
    CHECK(exploit_type_from("Remote") == ExploitType::Remote);
    CHECK(exploit_type_from("shellcode") == ExploitType::Other);
    CHECK(exploit_type_from("") == ExploitType::Other);
    CHECK(exploit_type_name(ExploitType::Webapps) == "Webapps");
}

TEST_CASE("category labels") {
    CHECK(category_from_label("ALL") == CategoryKey{CategoryKind::General, "all"});
    CHECK(category_from_label("general") == CategoryKey{CategoryKind::General, "all"});
    CHECK(category_from_label("remote") == CategoryKey{CategoryKind::Type, "Remote"});
    CHECK(category_from_label("dos") == CategoryKey{CategoryKind::Type, "DoS"});
    CHECK(category_from_label("PHP") == CategoryKey{CategoryKind::Platform, "php"});
    CHECK(to_string({CategoryKind::Type, "DoS"}) == "type:DoS");
    CHECK(to_string({CategoryKind::Platform, "php"}) == "platform:php");
}

TEST_CASE("platform normalization merges families") {
    const auto& merge = default_platform_merge();
    CHECK(normalize_platform("Windows_x86-64", merge) == "windows");
    CHECK(normalize_platform("openbsd", merge) == "bsd");
    CHECK(normalize_platform("ASHX", merge) == "asp");
    CHECK(normalize_platform("linux_mips", merge) == "linux");
    CHECK(normalize_platform("PHP", merge) == "php");
    CHECK(normalize_platform("multiple", merge) == "multiple");
}

TEST_CASE("cve ingest uppercases ids and drops malformed rows") {
    Fixture fx;
    CHECK(fx.cve_stats.rows_scanned == 8);
    CHECK(fx.cve_stats.rows_dropped == 2);  // bad date, bad id
    CHECK(fx.cves.size() == 6);
    REQUIRE(fx.cves.count("CVE-2020-2222") == 1);
    CHECK(format_date(fx.cves.at("CVE-2020-2222")) == "2020-03-02");
    CHECK(fx.cves.count("CVE-2021-5555") == 0);
    CHECK(fx.cves.count("CVE-77") == 0);
}

TEST_CASE("exploitdb ingest expands multi-cve references") {
    Fixture fx;
    CHECK(fx.exploit_stats.rows_scanned == 8);
    CHECK(fx.exploit_stats.rows_dropped == 2);  // no refs, malformed ref
    REQUIRE(fx.exploits.size() == 7);

    auto count = [&fx](std::string_view id) {
        return std::count_if(fx.exploits.begin(), fx.exploits.end(),
                             [&](const ExploitRef& r) { return r.cve_id == id; });
    };
    CHECK(count("CVE-2019-1010") == 2);
    CHECK(count("CVE-2020-2222") == 1);  // lowercase reference uppercased
    CHECK(count("CVE-2021-6666") == 1);  // from free text with two tokens
    CHECK(count("CVE-2020-3333") == 1);  // token with trailing junk still matches
    CHECK(count("CVE-2022-7777") == 1);

    const auto shared = std::find_if(fx.exploits.begin(), fx.exploits.end(),
                                     [](const ExploitRef& r) { return r.cve_id == "CVE-2021-6666"; });
    REQUIRE(shared != fx.exploits.end());
    CHECK(format_date(shared->exploit_date) == "2021-04-05");
    CHECK(shared->type == ExploitType::DoS);
    CHECK(shared->platform_raw == "multiple");
    CHECK(shared->verified);  // "yes"

    const auto second = std::find_if(fx.exploits.begin(), fx.exploits.end(), [](const ExploitRef& r) {
        return r.cve_id == "CVE-2019-1010" && format_date(r.exploit_date) == "2019-09-09";
    });
    REQUIRE(second != fx.exploits.end());
    CHECK_FALSE(second->verified);
}

TEST_CASE("score ingest enforces the cvss range") {
    Fixture fx;
    CHECK(fx.score_stats.rows_scanned == 7);
    CHECK(fx.score_stats.rows_dropped == 2);  // out of range, bad id
    CHECK(fx.scores.size() == 5);
    CHECK(fx.scores.at("CVE-2019-1010") == 9.8);
    CHECK(fx.scores.count("CVE-2022-7777") == 0);
}

TEST_CASE("join keeps only fully matched records") {
    Fixture fx;
    const std::vector<VulnRecord> records = join(fx.cves, fx.exploits, fx.scores);
    REQUIRE(records.size() == 4);

    CHECK(records[0].cve_id == "CVE-2019-1010");
    CHECK(format_date(records[0].cve_date) == "2019-05-06");
    REQUIRE(records[0].exploit_date.has_value());
    CHECK(format_date(*records[0].exploit_date) == "2019-06-03");  // earliest of two
    CHECK(records[0].exploit_type == ExploitType::Webapps);
    CHECK(records[0].platform_raw == "PHP");
    CHECK(records[0].platform == "php");
    CHECK(records[0].base_score == 9.8);
    CHECK(records[0].delay_weeks == 4.0);

    CHECK(records[1].cve_id == "CVE-2020-2222");
    CHECK(records[1].platform == "windows");
    CHECK(records[1].exploit_type == ExploitType::Remote);
    CHECK(records[1].delay_weeks == 4.0);

    CHECK(records[2].cve_id == "CVE-2021-4444");
    CHECK(records[2].platform == "linux");
    CHECK(records[2].delay_weeks == -2.0);  // exploit predates publication

    CHECK(records[3].cve_id == "CVE-2021-6666");
    CHECK(records[3].platform == "multiple");
    CHECK(records[3].delay_weeks == 4.0);
}

TEST_CASE("join latest rule picks the newest exploit") {
    Fixture fx;
    JoinOptions options;
    options.multi_exploit = MultiExploitRule::Latest;
    const std::vector<VulnRecord> records = join(fx.cves, fx.exploits, fx.scores, options);
    REQUIRE(records.size() == 4);
    CHECK(format_date(*records[0].exploit_date) == "2019-09-09");
    CHECK(records[0].platform == "asp");
    CHECK(records[0].delay_weeks == 18.0);
}

TEST_CASE("join verified_only filters unverified exploits") {
    Fixture fx;
    JoinOptions options;
    options.verified_only = true;
    const std::vector<VulnRecord> records = join(fx.cves, fx.exploits, fx.scores, options);
    REQUIRE(records.size() == 3);  // the only exploit for CVE-2021-4444 is unverified
    CHECK(records[0].cve_id == "CVE-2019-1010");
    CHECK(format_date(*records[0].exploit_date) == "2019-06-03");
    CHECK(records[1].cve_id == "CVE-2020-2222");
    CHECK(records[2].cve_id == "CVE-2021-6666");
}

TEST_CASE("join does not depend on exploit input order") {
    Fixture fx;
    std::vector<ExploitRef> reversed(fx.exploits.rbegin(), fx.exploits.rend());
    const auto a = join(fx.cves, fx.exploits, fx.scores);
    const auto b = join(fx.cves, reversed, fx.scores);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].cve_id == b[i].cve_id);
        CHECK(a[i].exploit_date == b[i].exploit_date);
        CHECK(a[i].platform == b[i].platform);
        CHECK(a[i].delay_weeks == b[i].delay_weeks);
    }
}

TEST_CASE("categorize buckets by level") {
    Fixture fx;
    const auto records = join(fx.cves, fx.exploits, fx.scores);
    const auto buckets = categorize(records, 1);
    REQUIRE(buckets.count({CategoryKind::General, "all"}) == 1);
    CHECK(buckets.at({CategoryKind::General, "all"}).samples ==
          std::vector<double>{4.0, 4.0, -2.0, 4.0});
    CHECK(buckets.at({CategoryKind::Type, "Webapps"}).samples == std::vector<double>{4.0});
    CHECK(buckets.at({CategoryKind::Type, "Local"}).samples == std::vector<double>{-2.0});
    CHECK(buckets.at({CategoryKind::Platform, "php"}).samples == std::vector<double>{4.0});
    CHECK(buckets.size() == 9);

    // the platform floor drops small platform buckets but never type or general
    const auto pruned = categorize(records, 2);
    CHECK(pruned.size() == 5);
    for (const auto& [key, set] : pruned) CHECK(key.kind != CategoryKind::Platform);
}

TEST_CASE("categorize skips records without a delay") {
    VulnRecord rec;
    rec.cve_id = "CVE-2020-0001";
    rec.exploit_type = ExploitType::Remote;
    rec.platform = "linux";
    CHECK(categorize({rec}, 1).empty());
}

TEST_CASE("histogram bins align to multiples of the width") {
    const auto bins = histogram({-37.3, -0.1, 0.0, 0.5, 7.9, 8.0, 16.1}, 8.0);
    REQUIRE(bins.size() == 5);
    CHECK(bins[0] == std::pair<double, std::size_t>{-40.0, 1});
    CHECK(bins[1] == std::pair<double, std::size_t>{-8.0, 1});
    CHECK(bins[2] == std::pair<double, std::size_t>{0.0, 3});
    CHECK(bins[3] == std::pair<double, std::size_t>{8.0, 1});
    CHECK(bins[4] == std::pair<double, std::size_t>{16.0, 1});
    CHECK_THROWS_AS(histogram({1.0}, 0.0), Error);
}

TEST_CASE("processed records round trip through csv") {
    Fixture fx;
    const auto records = join(fx.cves, fx.exploits, fx.scores);
    TempDir tmp;
    const auto path = tmp.path / "processed.csv";
    write_processed(records, path);
    const auto back = read_processed(path);
    REQUIRE(back.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(back[i].cve_id == records[i].cve_id);
        CHECK(back[i].cve_date == records[i].cve_date);
        CHECK(back[i].exploit_date == records[i].exploit_date);
        CHECK(back[i].exploit_type == records[i].exploit_type);
        CHECK(back[i].platform_raw == records[i].platform_raw);
        CHECK(back[i].platform == records[i].platform);
        CHECK(back[i].base_score == records[i].base_score);
        REQUIRE(back[i].delay_weeks.has_value());
        // the writer keeps six decimals of week precision
        CHECK(std::abs(*back[i].delay_weeks - *records[i].delay_weeks) <= 5e-7);
    }
}

TEST_CASE("read_processed rejects corrupt rows") {
    TempDir tmp;
    const auto path = tmp.file(
        "bad.csv",
        "cve_id,cve_date,exploit_date,type,platform_raw,platform,base_score,delay_weeks\n"
        "CVE-2020-0001,2020-01-01,2020-02-01,remote,linux,linux,seven,4.428571\n");
    CHECK_THROWS_AS(read_processed(path), SchemaError);
}

}
