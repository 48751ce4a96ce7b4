#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "twofa/corpus.hpp"
#include "twofa/errors.hpp"

using namespace twofa;

namespace {

std::filesystem::path fresh_dir(const char* leaf) {
    auto dir = std::filesystem::temp_directory_path() / "twofa-tests" / leaf;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

PageRecord sample_record(const std::string& url) {
    PageRecord r;
    r.url = url;
    r.domain = "bank.example";
    r.depth = 2;
    r.fetched_at = "2026-01-01T00:00:00Z";
    r.html = "<p>we use codes & \"quotes\"</p>";
    r.matched_keyword = "security";
    return r;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("page records survive a json round trip") {
    PageRecord record = sample_record("https://bank.example/security");
    PageRecord parsed;
    REQUIRE(page_record_from_json(page_record_to_json(record), parsed));
    CHECK(parsed.url == record.url);
    CHECK(parsed.domain == record.domain);
    CHECK(parsed.depth == record.depth);
    CHECK(parsed.fetched_at == record.fetched_at);
    CHECK(parsed.html == record.html);
    CHECK(parsed.matched_keyword == record.matched_keyword);
}

TEST_CASE("page_record_from_json rejects lines missing url or html") {
    PageRecord out;
    CHECK_FALSE(page_record_from_json("garbage", out));
    CHECK_FALSE(page_record_from_json("42", out));
    CHECK_FALSE(page_record_from_json("{\"url\":\"https://x.test/\"}", out));
    CHECK_FALSE(page_record_from_json("{\"html\":\"<p>x</p>\"}", out));
}

TEST_CASE("corpus writer truncates the previous capture") {
    auto dir = fresh_dir("corpus-truncate");
    {
        CorpusWriter writer(dir, "bank.example");
        writer.append(sample_record("https://bank.example/a"));
        writer.append(sample_record("https://bank.example/b"));
    }
    {
        CorpusWriter writer(dir, "bank.example");
        writer.append(sample_record("https://bank.example/c"));
    }

    auto corpus = load_corpus(dir);
    REQUIRE(corpus.count("bank.example") == 1);
    REQUIRE(corpus["bank.example"].size() == 1);
    CHECK(corpus["bank.example"][0].url == "https://bank.example/c");
}

TEST_CASE("load_corpus keys by file stem in sorted order") {
    auto dir = fresh_dir("corpus-load");
    CorpusWriter(dir, "zeta-bank.test").append(sample_record("https://zeta-bank.test/"));
    CorpusWriter(dir, "alpha-bank.test").append(sample_record("https://alpha-bank.test/"));

    auto corpus = load_corpus(dir);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus.begin()->first == "alpha-bank.test");
    CHECK(std::next(corpus.begin())->first == "zeta-bank.test");
}

TEST_CASE("load_corpus skips bookkeeping files and counts bad lines") {
    auto dir = fresh_dir("corpus-mixed");
    CorpusWriter(dir, "bank.example").append(sample_record("https://bank.example/"));
    {
        std::ofstream log(dir / "_crawl_log.jsonl");
        log << "{\"domain\":\"bank.example\"}\n";
    }
    {
        std::ofstream broken(dir / "bad-bank.test.jsonl");
        broken << "{not json}\n\n" << page_record_to_json(sample_record("https://bad-bank.test/x"))
               << "\n";
    }
    {
        std::ofstream other(dir / "notes.txt");
        other << "not a corpus file\n";
    }

    std::size_t skipped = 0;
    auto corpus = load_corpus(dir, &skipped);
    CHECK(skipped == 1);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus.count("bank.example") == 1);
    REQUIRE(corpus.count("bad-bank.test") == 1);
    CHECK(corpus["bad-bank.test"].size() == 1);
    CHECK(corpus.count("_crawl_log") == 0);
}

TEST_CASE("load_corpus demands an existing directory") {
    CHECK_THROWS_AS(load_corpus(fresh_dir("corpus-gone") / "missing"), ConfigError);
}

}  // TEST_SUITE
