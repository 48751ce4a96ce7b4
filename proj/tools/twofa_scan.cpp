#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "twofa/config.hpp"
#include "twofa/corpus.hpp"
#include "twofa/crawler.hpp"
#include "twofa/errors.hpp"
#include "twofa/html.hpp"
#include "twofa/log.hpp"
#include "twofa/report.hpp"
#include "twofa/scorer.hpp"
#include "twofa/seed_ingest.hpp"
#include "twofa/sentences.hpp"
#include "twofa/strings.hpp"
#include "twofa/url.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitEmpty = 3;

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return std::nullopt;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Flags a subcommand may use to override values from --config.
struct Overrides {
    std::optional<int> max_depth;
    std::optional<int> concurrency;
    std::optional<std::string> base_url;
    std::optional<int> timeout_ms;
    std::optional<bool> no_robots;
    std::optional<std::string> dictionary;
    std::optional<std::string> patterns;
    std::optional<double> threshold;

    void apply(twofa::AppConfig& config) const {
        if (max_depth) {
            config.crawl.max_depth = *max_depth;
        }
        if (concurrency) {
            config.crawl.per_domain_concurrency = *concurrency;
        }
        if (base_url) {
            config.crawl.base_url_override = *base_url;
        }
        if (timeout_ms) {
            config.crawl.request_timeout = std::chrono::milliseconds(*timeout_ms);
        }
        if (no_robots && *no_robots) {
            config.crawl.respect_robots = false;
        }
        if (dictionary) {
            config.crawl.dictionary_path = *dictionary;
        }
        if (patterns) {
            config.patterns_path = *patterns;
        }
        if (threshold) {
            config.report.likely_threshold = *threshold;
        }
        config.crawl.validate();
        if (config.report.likely_threshold <= 0.0) {
            throw twofa::ConfigError("likely threshold must be positive");
        }
    }
};

void add_crawl_flags(CLI::App* cmd, Overrides& overrides) {
    cmd->add_option("--max-depth", overrides.max_depth, "Crawl depth limit from the landing page");
    cmd->add_option("--concurrency", overrides.concurrency, "Max in-flight requests per domain");
    cmd->add_option("--base-url", overrides.base_url,
                    "Send every request to this origin, carrying the logical host in the Host header");
    cmd->add_option("--timeout-ms", overrides.timeout_ms, "Per-request timeout in milliseconds");
    cmd->add_flag("--no-robots", overrides.no_robots, "Ignore robots.txt");
    cmd->add_option("--dictionary", overrides.dictionary, "English word list, one word per line");
}

int run_ingest(const twofa::AppConfig& config, const std::string& index, const fs::path& out,
               bool offline) {
    std::string index_html;
    std::string base_url;

    twofa::Url parsed = twofa::parse_url(index);
    bool is_http = parsed.valid && (parsed.scheme == "http" || parsed.scheme == "https");
    if (is_http && !offline) {
        twofa::HttpFetcher fetcher(config.crawl.request_timeout, config.crawl.base_url_override);
        twofa::FetchResult result = fetcher.fetch(index);
        if (!result.ok) {
            throw twofa::ConfigError("cannot fetch index " + index + ": " + result.error);
        }
        index_html = result.body;
        base_url = index;
    } else {
        if (is_http) {
            throw twofa::ConfigError("--offline requires a local index file, got " + index);
        }
        fs::path path = index;
        auto content = read_file(path);
        if (!content) {
            throw twofa::ConfigError("cannot read index file: " + index);
        }
        index_html = std::move(*content);
        base_url = "file://" + fs::absolute(path).generic_string();
    }

    std::vector<twofa::BankEntry> entries;
    auto items = twofa::parse_region_index(index_html, base_url);
    std::size_t pages_missing = 0;
    for (const auto& item : items) {
        twofa::Url page = twofa::parse_url(item.bank_page_url);
        std::string page_html;
        if (page.scheme == "file") {
            auto content = read_file(fs::path(page.path));
            if (!content) {
                twofa::log::warn("cannot read bank page " + item.bank_page_url + "; skipping");
                ++pages_missing;
                continue;
            }
            page_html = std::move(*content);
        } else if (offline) {
            twofa::log::warn("offline mode: skipping remote bank page " + item.bank_page_url);
            ++pages_missing;
            continue;
        } else {
            twofa::HttpFetcher fetcher(config.crawl.request_timeout, config.crawl.base_url_override);
            twofa::FetchResult result = fetcher.fetch(item.bank_page_url);
            if (!result.ok) {
                twofa::log::warn("cannot fetch bank page " + item.bank_page_url + ": " + result.error);
                ++pages_missing;
                continue;
            }
            page_html = std::move(result.body);
        }
        auto entry = twofa::extract_bank_entry(page_html, item.bank_page_url, item.country);
        if (entry) {
            entries.push_back(std::move(*entry));
        } else {
            twofa::log::info("no external site link on " + item.bank_page_url + "; skipping");
        }
    }

    auto merged = twofa::dedupe_entries(entries);
    twofa::write_seeds(out, merged);
    std::cout << "ingested " << merged.size() << " domains from " << items.size() << " bank links ("
              << pages_missing << " pages unavailable) -> " << out.string() << "\n";
    return merged.empty() ? kExitEmpty : kExitOk;
}

int run_crawl(const twofa::AppConfig& config, const fs::path& seeds_path, const fs::path& corpus_dir,
              const std::string& only_domain) {
    auto seeds = twofa::load_seeds(seeds_path);
    twofa::Dictionary dictionary = config.load_dictionary();
    twofa::Crawler crawler(config.crawl, dictionary);
    twofa::HttpFetcher fetcher(config.crawl.request_timeout, config.crawl.base_url_override);

    fs::create_directories(corpus_dir);
    std::ofstream crawl_log(corpus_dir / "_crawl_log.jsonl", std::ios::binary | std::ios::app);

    std::size_t crawled = 0;
    for (const auto& seed : seeds) {
        std::string domain = twofa::seed_domain(seed);
        if (!only_domain.empty() && domain != only_domain) {
            continue;
        }
        twofa::CorpusWriter writer(corpus_dir, domain);
        twofa::CrawlSummary summary = crawler.crawl_domain(seed.site_url, domain, fetcher, &writer);
        crawl_log << twofa::crawl_summary_to_json(summary) << '\n';
        crawl_log.flush();
        std::cout << domain << ": visited " << summary.links_visited << ", saved " << summary.pages_saved
                  << ", verdict " << twofa::to_string(summary.site_verdict)
                  << (summary.error.empty() ? "" : " (" + summary.error + ")") << "\n";
        ++crawled;
    }
    if (crawled == 0) {
        twofa::log::warn(only_domain.empty() ? "seed list is empty" : "no seed matches domain " + only_domain);
        return kExitEmpty;
    }
    return kExitOk;
}

void print_explanation(const std::string& domain, const std::vector<twofa::PageRecord>& pages,
                       const twofa::PatternSets& patterns, twofa::CountMode mode) {
    std::cout << "domain " << domain << ": " << pages.size() << " stored pages\n";
    for (const auto& page : pages) {
        if (twofa::url_ignored(page.url, patterns)) {
            std::cout << "\n  [ignored-url] " << page.url << "\n";
            continue;
        }
        std::string text = twofa::html_to_text(twofa::utf8_lossy(page.html));
        auto sentences = twofa::split_sentences(text, page.url);
        twofa::PageScore score = twofa::score_page(page.url, sentences, patterns, mode);
        std::cout << "\n  " << page.url << "\n";
        if (score.definite) {
            std::cout << "    definite match (pattern "
                      << (score.definite_pattern ? std::to_string(*score.definite_pattern) : "?") << "): \""
                      << score.definite_sentence.value_or("") << "\"\n";
            continue;
        }
        std::cout << "    score " << score.value << (score.url_bonus_applied ? " (includes URL bonus)" : "")
                  << "\n";
        for (const auto& hit : score.potential_hits) {
            const twofa::Sentence* sentence = nullptr;
            for (const auto& s : sentences) {
                if (s.ordinal == hit.sentence_ordinal) {
                    sentence = &s;
                    break;
                }
            }
            std::cout << "    + pattern " << hit.pattern_index << " ["
                      << patterns.potential_sources[hit.pattern_index] << "] in: \""
                      << (sentence ? sentence->text : std::string("?")) << "\"\n";
        }
    }
}

int run_score(const twofa::AppConfig& config, const fs::path& corpus_dir, const fs::path& out_file,
              const std::string& explain_domain) {
    twofa::PatternSets patterns = config.load_patterns();
    std::size_t skipped = 0;
    auto corpus = twofa::load_corpus(corpus_dir, &skipped);
    if (skipped > 0) {
        twofa::log::warn("corpus contained " + std::to_string(skipped) + " malformed lines; scoring the rest");
    }

    std::vector<twofa::DomainScore> scores;
    scores.reserve(corpus.size());
    for (const auto& [domain, pages] : corpus) {
        scores.push_back(twofa::score_domain(domain, pages, patterns, config.count_mode));
    }
    twofa::write_scores_file(out_file, scores);
    std::cout << "scored " << scores.size() << " domains -> " << out_file.string() << "\n";

    if (!explain_domain.empty()) {
        auto it = corpus.find(explain_domain);
        if (it == corpus.end()) {
            twofa::log::warn("domain " + explain_domain + " not present in the corpus");
        } else {
            print_explanation(it->first, it->second, patterns, config.count_mode);
        }
    }
    return scores.empty() ? kExitEmpty : kExitOk;
}

int run_report(const twofa::AppConfig& config, const fs::path& scores_path, const fs::path& seeds_path,
               const fs::path& out_dir) {
    auto scores = twofa::load_scores_file(scores_path);

    std::map<std::string, twofa::BankEntry> by_domain;
    if (!seeds_path.empty()) {
        for (auto& seed : twofa::load_seeds(seeds_path)) {
            by_domain.emplace(twofa::seed_domain(seed), std::move(seed));
        }
    }

    std::vector<twofa::DomainReport> reports;
    reports.reserve(scores.size());
    for (const auto& score : scores) {
        auto it = by_domain.find(score.domain);
        reports.push_back(twofa::make_domain_report(score, it == by_domain.end() ? nullptr : &it->second,
                                                    config.report));
    }
    twofa::write_report_files(out_dir, reports, config.report);

    twofa::SummaryTable table = twofa::summarize(reports, config.report);
    std::cout << "reported " << table.total << " domains: " << table.definite << " definite, "
              << table.potential() << " potential (" << table.likely << " likely, " << table.potential_weak
              << " weak), " << table.no_match << " no-match, " << table.no_pages << " no-pages -> "
              << (out_dir / "report.txt").string() << "\n";
    return reports.empty() ? kExitEmpty : kExitOk;
}

int run_extract(const fs::path& file, const std::string& url, bool sentences, bool link_texts) {
    auto content = read_file(file);
    if (!content) {
        throw twofa::ConfigError("cannot read html file: " + file.string());
    }
    std::string html = twofa::utf8_lossy(*content);
    if (link_texts) {
        for (const auto& text : twofa::extract_link_texts(html)) {
            std::cout << text << "\n";
        }
        return kExitOk;
    }
    std::string text = twofa::html_to_text(html);
    if (sentences) {
        for (const auto& sentence : twofa::split_sentences(text, url)) {
            std::cout << sentence.ordinal << "\t" << sentence.text << "\n";
        }
    } else {
        std::cout << text << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Scan banking websites for mentions of two-factor authentication"};
    app.require_subcommand(1);

    std::string config_path;
    std::string log_level = "info";
    app.add_option("--config", config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--log-level", log_level, "debug, info, warn, error or off")
        ->check(CLI::IsMember({"debug", "info", "warn", "error", "off"}));

    auto* ingest = app.add_subcommand("ingest", "Build a seed list from a region index page");
    std::string ingest_index;
    std::string ingest_out;
    bool ingest_offline = false;
    ingest->add_option("--index", ingest_index, "Region index: local file or http(s) URL")->required();
    ingest->add_option("--out", ingest_out, "Seed JSONL output path")->required();
    ingest->add_flag("--offline", ingest_offline, "Only read local files; skip remote links");

    auto* crawl = app.add_subcommand("crawl", "Crawl seed domains and store URL-matched pages");
    std::string crawl_seeds;
    std::string crawl_out;
    std::string crawl_domain;
    Overrides crawl_overrides;
    crawl->add_option("--seeds", crawl_seeds, "Seed JSONL file")->required();
    crawl->add_option("--out", crawl_out, "Corpus directory")->required();
    crawl->add_option("--domain", crawl_domain, "Crawl only this registrable domain");
    add_crawl_flags(crawl, crawl_overrides);

    auto* score = app.add_subcommand("score", "Score a stored corpus for 2FA mentions");
    std::string score_corpus;
    std::string score_out;
    std::string score_explain;
    Overrides score_overrides;
    score->add_option("--corpus", score_corpus, "Corpus directory")->required();
    score->add_option("--out", score_out, "scores.jsonl output path")->required();
    score->add_option("--patterns", score_overrides.patterns, "Pattern file (defaults to the built-in sets)");
    score->add_option("--explain", score_explain, "Print per-sentence evidence for this domain");

    auto* report = app.add_subcommand("report", "Classify scored domains and write report files");
    std::string report_scores;
    std::string report_seeds;
    std::string report_out;
    Overrides report_overrides;
    report->add_option("--scores", report_scores, "scores.jsonl input")->required();
    report->add_option("--seeds", report_seeds, "Seed JSONL file for names and countries");
    report->add_option("--out", report_out, "Report output directory")->required();
    report->add_option("--threshold", report_overrides.threshold, "Likely threshold on max score");

    auto* scan = app.add_subcommand("scan", "crawl + score + report in one run");
    std::string scan_seeds;
    std::string scan_out;
    Overrides scan_overrides;
    scan->add_option("--seeds", scan_seeds, "Seed JSONL file")->required();
    scan->add_option("--out", scan_out, "Run directory (corpus/, scores.jsonl, report.*)")->required();
    scan->add_option("--patterns", scan_overrides.patterns, "Pattern file (defaults to the built-in sets)");
    scan->add_option("--threshold", scan_overrides.threshold, "Likely threshold on max score");
    add_crawl_flags(scan, scan_overrides);

    auto* extract = app.add_subcommand("extract", "Extract text from a local HTML file");
    std::string extract_file;
    std::string extract_url;
    bool extract_sentences = false;
    bool extract_links_flag = false;
    extract->add_option("--file", extract_file, "HTML file")->required();
    extract->add_option("--url", extract_url, "URL to attribute sentences to");
    extract->add_flag("--sentences", extract_sentences, "Print normalized sentences, one per line");
    extract->add_flag("--link-texts", extract_links_flag, "Print link and button texts, one per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    twofa::log::set_level(log_level);

    try {
        twofa::AppConfig config =
            config_path.empty() ? twofa::AppConfig::defaults() : twofa::AppConfig::load(config_path);

        if (app.got_subcommand(ingest)) {
            return run_ingest(config, ingest_index, ingest_out, ingest_offline);
        }
        if (app.got_subcommand(crawl)) {
            crawl_overrides.apply(config);
            return run_crawl(config, crawl_seeds, crawl_out, crawl_domain);
        }
        if (app.got_subcommand(score)) {
            score_overrides.apply(config);
            return run_score(config, score_corpus, score_out, score_explain);
        }
        if (app.got_subcommand(report)) {
            report_overrides.apply(config);
            return run_report(config, report_scores, report_seeds, report_out);
        }
        if (app.got_subcommand(scan)) {
            scan_overrides.apply(config);
            fs::path out_dir = scan_out;
            int rc = run_crawl(config, scan_seeds, out_dir / "corpus", "");
            if (rc != kExitOk) {
                return rc;
            }
            rc = run_score(config, out_dir / "corpus", out_dir / "scores.jsonl", "");
            if (rc != kExitOk) {
                return rc;
            }
            return run_report(config, out_dir / "scores.jsonl", scan_seeds, out_dir);
        }
        if (app.got_subcommand(extract)) {
            return run_extract(extract_file, extract_url, extract_sentences, extract_links_flag);
        }
    } catch (const twofa::ConfigError& e) {
        twofa::log::error(e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        twofa::log::error(std::string("unexpected failure: ") + e.what());
        return 1;
    }
    return kExitOk;
}
