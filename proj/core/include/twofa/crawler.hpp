#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "twofa/corpus.hpp"
#include "twofa/english.hpp"

namespace twofa {

// Knobs for one crawl.  Defaults follow the scheme the scanner was built
// around: depth 10, seven requests in flight per domain, and a >50% English
// link-text gate needing at least 10 countable words.
struct CrawlConfig {
    int max_depth = 10;
    int per_domain_concurrency = 7;
    std::vector<std::string> url_ignore_keywords;
    std::vector<std::string> url_match_keywords;
    double english_word_ratio = 0.5;
    int min_words_for_verdict = 10;
    std::string dictionary_path;
    std::chrono::milliseconds request_timeout{10000};
    bool respect_robots = true;
    // When set, every request is sent to this origin with a Host header
    // carrying the logical host.  Lets tests route multi-domain crawls into
    // one local server.
    std::string base_url_override;

    static CrawlConfig defaults();

    // Throws ConfigError on non-positive concurrency, negative depth, a
    // ratio outside [0,1] or a non-positive word minimum.
    void validate() const;
};

// Decides whether a URL is worth saving: first the plain keywords, then the
// regex families.  Returns the keyword or the matched substring.
class UrlMatcher {
public:
    UrlMatcher(std::vector<std::string> keywords, const std::vector<std::string>& regex_sources);

    static UrlMatcher defaults();

    std::optional<std::string> match(const std::string& url) const;

private:
    std::vector<std::string> keywords_;
    std::vector<std::regex> regexes_;
};

// True when the lowercased URL contains any branch-terminating keyword.
bool should_skip_url(const std::string& url, const std::vector<std::string>& ignore_keywords);

// True for http(s) URLs whose host is the seed domain or a subdomain of it.
bool same_site(const std::string& url, const std::string& seed_domain);

struct FetchResult {
    bool ok = false;
    int status = 0;
    std::string body;
    std::string error;
};

class Fetcher {
public:
    virtual ~Fetcher() = default;
    virtual FetchResult fetch(const std::string& url) = 0;
};

// Blocking fetcher over HTTP(S).  A fresh connection per request keeps it
// safe to call from several workers at once.
class HttpFetcher : public Fetcher {
public:
    explicit HttpFetcher(std::chrono::milliseconds timeout, std::string base_url_override = {});

    FetchResult fetch(const std::string& url) override;

private:
    std::chrono::milliseconds timeout_;
    std::string base_url_override_;
};

// Minimal robots.txt: Disallow/Allow prefixes from groups addressed to
// User-agent: *.  Longest matching prefix wins; Allow wins ties.
struct RobotsRules {
    struct Rule {
        bool allow = false;
        std::string prefix;
    };
    std::vector<Rule> rules;

    static RobotsRules parse(const std::string& body);

    bool allowed(const std::string& path) const;
};

struct CrawlSummary {
    std::string domain;
    std::string start_url;
    std::size_t links_visited = 0;
    std::size_t pages_saved = 0;
    std::size_t pages_discarded = 0;
    EnglishVerdict site_verdict = EnglishVerdict::Undetermined;
    std::string error;
};

std::string crawl_summary_to_json(const CrawlSummary& summary);

// Breadth-ordered recursive crawl of one domain.  The landing page is
// fetched first; each discovered link then passes, in order: visited-dedup,
// same_site, should_skip_url, the depth limit and (when enabled) robots
// rules.  Fetched pages face the English gate before anything else; pages
// whose URL matches are persisted through the writer.
class Crawler {
public:
    Crawler(CrawlConfig config, Dictionary dictionary);

    CrawlSummary crawl_domain(const std::string& start_url, const std::string& domain,
                              Fetcher& fetcher, CorpusWriter* writer);

    const CrawlConfig& config() const { return config_; }

private:
    CrawlConfig config_;
    Dictionary dictionary_;
    UrlMatcher matcher_;
};

}
