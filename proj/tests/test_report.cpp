#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "twofa/errors.hpp"
#include "twofa/report.hpp"

using namespace twofa;

namespace {

std::filesystem::path fresh_dir(const char* leaf) {
    auto dir = std::filesystem::temp_directory_path() / "twofa-tests" / leaf;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

DomainScore make_score(const std::string& domain, double max_score, bool definite = false,
                       std::size_t pages_scored = 3, std::size_t pages_ignored = 0) {
    DomainScore s;
    s.domain = domain;
    s.definite = definite;
    s.max_score = max_score;
    if (max_score > 0.0) {
        s.min_nonzero_score = max_score / 2.0;
    }
    s.best_page = "https://" + domain + "/security";
    s.pages_scored = pages_scored;
    s.pages_ignored = pages_ignored;
    if (definite) {
        s.definite_sentence = "our online platform supports two-step verification";
        s.evidence.push_back(*s.definite_sentence);
    } else if (max_score > 0.0) {
        s.evidence.push_back("a one-time passcode protects your account");
    }
    return s;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("classify puts each outcome in its bucket") {
    CHECK(classify(make_score("a.test", 0.75, true)).bucket == Bucket::Definite);
    CHECK(classify(make_score("b.test", 2.10)).bucket == Bucket::Likely);
    CHECK(classify(make_score("c.test", 1.50)).bucket == Bucket::Likely);
    CHECK(classify(make_score("d.test", 1.49)).bucket == Bucket::PotentialWeak);
    CHECK(classify(make_score("e.test", 0.15)).bucket == Bucket::PotentialWeak);
    CHECK(classify(make_score("f.test", 0.0)).bucket == Bucket::NoMatch);
    CHECK(classify(make_score("g.test", 0.0, false, 0, 0)).bucket == Bucket::NoPages);
}

TEST_CASE("a domain whose pages were all ignored counts as no-match") {
    CHECK(classify(make_score("h.test", 0.0, false, 0, 4)).bucket == Bucket::NoMatch);
}

TEST_CASE("the likely threshold is adjustable and inclusive") {
    CHECK(classify(make_score("a.test", 1.00), 1.00).bucket == Bucket::Likely);
    CHECK(classify(make_score("a.test", 0.99), 1.00).bucket == Bucket::PotentialWeak);
    CHECK(classify(make_score("a.test", 1.50), 2.00).bucket == Bucket::PotentialWeak);
}

TEST_CASE("raising the max score never demotes a domain") {
    Bucket previous = Bucket::NoMatch;
    for (double value : {0.0, 0.15, 0.45, 1.00, 1.49, 1.50, 1.75, 2.50}) {
        Bucket bucket = classify(make_score("x.test", value)).bucket;
        // Order of improvement: NoMatch -> PotentialWeak -> Likely.
        auto rank = [](Bucket b) {
            switch (b) {
                case Bucket::NoMatch: return 0;
                case Bucket::PotentialWeak: return 1;
                case Bucket::Likely: return 2;
                default: return 3;
            }
        };
        CHECK(rank(bucket) >= rank(previous));
        previous = bucket;
    }
}

TEST_CASE("bucket names are stable") {
    CHECK(to_string(Bucket::Definite) == "definite");
    CHECK(to_string(Bucket::Likely) == "likely");
    CHECK(to_string(Bucket::PotentialWeak) == "potential-weak");
    CHECK(to_string(Bucket::NoMatch) == "no-match");
    CHECK(to_string(Bucket::NoPages) == "no-pages");
}

TEST_CASE("make_domain_report folds in the seed entry when present") {
    BankEntry seed{"Alpha Bank", "https://alpha-bank.test/", {"Austria", "Germany"}, "src"};
    DomainScore score = make_score("alpha-bank.test", 1.75);

    DomainReport with_seed = make_domain_report(score, &seed, ReportOptions::defaults());
    CHECK(with_seed.domain == "alpha-bank.test");
    CHECK(with_seed.name == "Alpha Bank");
    CHECK(with_seed.site_url == "https://alpha-bank.test/");
    CHECK(with_seed.countries.size() == 2);
    CHECK(with_seed.classification.bucket == Bucket::Likely);
    CHECK(with_seed.max_score == 1.75);

    DomainReport bare = make_domain_report(score, nullptr, ReportOptions::defaults());
    CHECK(bare.name.empty());
    CHECK(bare.countries.empty());
}

TEST_CASE("summarize counts buckets and the score distribution") {
    ReportOptions options;
    std::vector<DomainReport> reports;
    auto add = [&](DomainScore score, const char* country) {
        BankEntry seed{"", "https://" + score.domain + "/", {country}, ""};
        reports.push_back(make_domain_report(score, &seed, options));
    };

    add(make_score("a.test", 0.0, true), "Austria");
    add(make_score("b.test", 0.0, true), "Austria");
    add(make_score("c.test", 1.50), "Belgium");
    add(make_score("d.test", 1.75), "Belgium");
    add(make_score("e.test", 2.30), "Belgium");
    add(make_score("f.test", 0.45), "Cyprus");
    add(make_score("g.test", 0.15), "Cyprus");
    add(make_score("h.test", 0.0), "Cyprus");
    add(make_score("i.test", 0.0, false, 0, 0), "Cyprus");

    SummaryTable table = summarize(reports, options);
    CHECK(table.total == 9);
    CHECK(table.definite == 2);
    CHECK(table.likely == 3);
    CHECK(table.potential_weak == 2);
    CHECK(table.potential() == 5);
    CHECK(table.no_match == 1);
    CHECK(table.no_pages == 1);
    CHECK(table.definite + table.likely + table.potential_weak + table.no_match +
              table.no_pages == table.total);

    // Distribution over the five likely/weak scores {1.50, 1.75, 2.30, 0.45, 0.15}.
    CHECK(table.distribution_below == 2);
    CHECK(table.distribution_within == 2);
    CHECK(table.distribution_above == 1);

    CHECK(table.per_country.at("Austria") == 2);
    CHECK(table.per_country.at("Belgium") == 3);
    CHECK(table.per_country.at("Cyprus") == 4);
}

TEST_CASE("domain scores survive a json round trip") {
    DomainScore score = make_score("alpha-bank.test", 1.00);
    DomainScore parsed;
    REQUIRE(domain_score_from_json(domain_score_to_json(score), parsed));
    CHECK(parsed.domain == score.domain);
    CHECK(parsed.definite == score.definite);
    CHECK(parsed.max_score == score.max_score);
    CHECK(parsed.min_nonzero_score == score.min_nonzero_score);
    CHECK(parsed.best_page == score.best_page);
    CHECK(parsed.pages_scored == score.pages_scored);
    CHECK(parsed.pages_ignored == score.pages_ignored);
    CHECK(parsed.evidence == score.evidence);

    DomainScore no_min = make_score("beta-bank.test", 0.0);
    REQUIRE(domain_score_from_json(domain_score_to_json(no_min), parsed));
    CHECK_FALSE(parsed.min_nonzero_score.has_value());
}

TEST_CASE("scores files are sorted by domain and reloadable") {
    auto dir = fresh_dir("report-scores");
    auto path = dir / "scores.jsonl";
    std::vector<DomainScore> scores = {
        make_score("zeta-bank.test", 0.75),
        make_score("alpha-bank.test", 1.50),
    };
    write_scores_file(path, scores);

    auto loaded = load_scores_file(path);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].domain == "alpha-bank.test");
    CHECK(loaded[1].domain == "zeta-bank.test");

    CHECK_THROWS_AS(load_scores_file(dir / "missing.jsonl"), ConfigError);
}

TEST_CASE("write_report_files emits machine and human outputs") {
    auto dir = fresh_dir("report-files");
    ReportOptions options;
    std::vector<DomainReport> reports;
    BankEntry seed{"Alpha Bank", "https://alpha-bank.test/", {"Austria"}, ""};
    reports.push_back(make_domain_report(make_score("alpha-bank.test", 1.75), &seed, options));
    reports.push_back(make_domain_report(make_score("beta-bank.test", 0.0, true), nullptr, options));

    write_report_files(dir, reports, options);

    std::string json_text = slurp(dir / "report.json");
    REQUIRE_FALSE(json_text.empty());
    CHECK(json_text.find("\"alpha-bank.test\"") != std::string::npos);
    CHECK(json_text.find("\"definite\"") != std::string::npos);
    CHECK(json_text.find("\"likely_threshold\"") != std::string::npos);

    std::string text = slurp(dir / "report.txt");
    REQUIRE_FALSE(text.empty());
    CHECK(text.find("alpha-bank.test") != std::string::npos);
    CHECK(text.find("beta-bank.test") != std::string::npos);
    // The definite caveat paragraph must ship with every report.
    CHECK(text.find("upper bound") != std::string::npos);
}

}  // TEST_SUITE
