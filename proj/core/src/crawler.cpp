#include "twofa/crawler.hpp"

#include <atomic>
#include <condition_variable>
#include <ctime>
#include <deque>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "twofa/errors.hpp"
#include "twofa/html.hpp"
#include "twofa/log.hpp"
#include "twofa/patterns.hpp"
#include "twofa/strings.hpp"
#include "twofa/url.hpp"

namespace twofa {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string timestamp_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

CrawlConfig CrawlConfig::defaults() {
    CrawlConfig config;
    config.url_ignore_keywords = {"news", "media", "people", "team", "leaders",
                                  "career", "forum", ".pdf", "tel:+"};
    config.url_match_keywords = {"security", "privacy", "two-factor", "faq",
                                 "authentication", "two-step", "2fa"};
    return config;
}

void CrawlConfig::validate() const {
    if (max_depth < 0) {
        throw ConfigError("max_depth must be non-negative");
    }
    if (per_domain_concurrency < 1) {
        throw ConfigError("per_domain_concurrency must be positive");
    }
    if (english_word_ratio < 0.0 || english_word_ratio > 1.0) {
        throw ConfigError("english_word_ratio must lie in [0,1]");
    }
    if (min_words_for_verdict < 1) {
        throw ConfigError("min_words_for_verdict must be positive");
    }
}

UrlMatcher::UrlMatcher(std::vector<std::string> keywords, const std::vector<std::string>& regex_sources) {
    keywords_.reserve(keywords.size());
    for (auto& keyword : keywords) {
        keywords_.push_back(to_lower(keyword));
    }
    regexes_.reserve(regex_sources.size());
    for (const auto& source : regex_sources) {
        try {
            regexes_.emplace_back(source, std::regex::ECMAScript);
        } catch (const std::regex_error& e) {
            throw ConfigError("invalid url match pattern '" + source + "': " + e.what());
        }
    }
}

UrlMatcher UrlMatcher::defaults() {
    static const PatternSets patterns = PatternSets::defaults();
    return UrlMatcher(CrawlConfig::defaults().url_match_keywords, patterns.url_match_sources);
}

std::optional<std::string> UrlMatcher::match(const std::string& url) const {
    std::string lowered = to_lower(url);
    for (const auto& keyword : keywords_) {
        if (!keyword.empty() && lowered.find(keyword) != std::string::npos) {
            return keyword;
        }
    }
    for (const auto& re : regexes_) {
        std::smatch m;
        if (std::regex_search(lowered, m, re)) {
            return m.str(0);
        }
    }
    return std::nullopt;
}

bool should_skip_url(const std::string& url, const std::vector<std::string>& ignore_keywords) {
    std::string lowered = to_lower(url);
    for (const auto& keyword : ignore_keywords) {
        if (!keyword.empty() && lowered.find(to_lower(keyword)) != std::string::npos) {
            return true;
        }
    }
    return false;
}

bool same_site(const std::string& url, const std::string& seed_domain) {
    Url u = parse_url(url);
    if (!u.valid || (u.scheme != "http" && u.scheme != "https")) {
        return false;
    }
    return host_within(u.host, seed_domain);
}

RobotsRules RobotsRules::parse(const std::string& body) {
    RobotsRules out;
    bool group_applies = false;
    bool reading_agents = false;
    std::istringstream in(body);
    std::string raw_line;
    while (std::getline(in, raw_line)) {
        if (auto hash = raw_line.find('#'); hash != std::string::npos) {
            raw_line.erase(hash);
        }
        std::string_view line = trim(raw_line);
        if (line.empty()) {
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            continue;
        }
        std::string key = to_lower(trim(line.substr(0, colon)));
        std::string value{trim(line.substr(colon + 1))};
        if (key == "user-agent") {
            if (!reading_agents) {
                reading_agents = true;
                group_applies = false;
            }
            if (value == "*") {
                group_applies = true;
            }
            continue;
        }
        reading_agents = false;
        if (!group_applies) {
            continue;
        }
        if (key == "disallow" && !value.empty()) {
            out.rules.push_back({false, std::move(value)});
        } else if (key == "allow" && !value.empty()) {
            out.rules.push_back({true, std::move(value)});
        }
    }
    return out;
}

bool RobotsRules::allowed(const std::string& path) const {
    std::size_t best_len = 0;
    bool best_allow = true;
    bool matched = false;
    for (const auto& rule : rules) {
        if (path.rfind(rule.prefix, 0) != 0) {
            continue;
        }
        if (!matched || rule.prefix.size() > best_len ||
            (rule.prefix.size() == best_len && rule.allow && !best_allow)) {
            matched = true;
            best_len = rule.prefix.size();
            best_allow = rule.allow;
        }
    }
    return best_allow;
}

std::string crawl_summary_to_json(const CrawlSummary& summary) {
    ordered_json j;
    j["domain"] = summary.domain;
    j["start_url"] = summary.start_url;
    j["links_visited"] = summary.links_visited;
    j["pages_saved"] = summary.pages_saved;
    j["pages_discarded"] = summary.pages_discarded;
    j["verdict"] = std::string(to_string(summary.site_verdict));
    if (!summary.error.empty()) {
        j["error"] = summary.error;
    }
    return j.dump();
}

Crawler::Crawler(CrawlConfig config, Dictionary dictionary)
    : config_(std::move(config)),
      dictionary_(std::move(dictionary)),
      matcher_(config_.url_match_keywords, PatternSets::defaults().url_match_sources) {
    config_.validate();
}

CrawlSummary Crawler::crawl_domain(const std::string& start_url, const std::string& domain,
                                   Fetcher& fetcher, CorpusWriter* writer) {
    CrawlSummary summary;
    summary.domain = domain;
    summary.start_url = start_url;

    Url start = parse_url(start_url);
    if (!start.valid || (start.scheme != "http" && start.scheme != "https")) {
        summary.error = "invalid start url: " + start_url;
        return summary;
    }

    RobotsRules robots;
    bool have_robots = false;
    if (config_.respect_robots) {
        FetchResult robots_result = fetcher.fetch(start.origin() + "/robots.txt");
        if (robots_result.ok) {
            robots = RobotsRules::parse(robots_result.body);
            have_robots = true;
        }
    }
    auto robots_allows = [&](const Url& u) {
        return !have_robots || robots.allowed(u.path.empty() ? "/" : u.path);
    };

    struct Item {
        std::string url;
        int depth = 0;
    };

    std::mutex mutex;
    std::condition_variable cv;
    std::deque<Item> queue;
    std::unordered_set<std::string> visited;
    std::size_t active = 0;

    std::atomic<std::size_t> links_visited{0};
    std::atomic<std::size_t> pages_saved{0};
    std::atomic<std::size_t> pages_discarded{0};
    std::atomic<bool> any_english{false};

    // English gate first; matching pages are persisted; only English pages
    // expand.  Returns the children to enqueue.
    auto process_page = [&](const std::string& url, int depth, const std::string& body) {
        std::vector<Item> children;
        EnglishVerdict verdict = is_english_page(extract_link_texts(body), dictionary_,
                                                 config_.english_word_ratio,
                                                 static_cast<std::size_t>(config_.min_words_for_verdict));
        if (verdict != EnglishVerdict::English) {
            pages_discarded.fetch_add(1, std::memory_order_relaxed);
            return children;
        }
        any_english.store(true, std::memory_order_relaxed);
        if (auto keyword = matcher_.match(url)) {
            if (writer != nullptr) {
                PageRecord record;
                record.url = url;
                record.domain = domain;
                record.depth = depth;
                record.fetched_at = timestamp_now();
                record.html = utf8_lossy(body);
                record.matched_keyword = *keyword;
                writer->append(record);
            }
            pages_saved.fetch_add(1, std::memory_order_relaxed);
        }
        if (depth >= config_.max_depth) {
            return children;
        }
        for (const auto& link : extract_links(body)) {
            auto resolved = resolve_url(url, link.href);
            if (!resolved) {
                continue;
            }
            std::string norm = normalize_url(*resolved);
            Url u = parse_url(norm);
            if (!u.valid || (u.scheme != "http" && u.scheme != "https")) {
                continue;
            }
            if (!same_site(norm, domain)) {
                continue;
            }
            if (should_skip_url(norm, config_.url_ignore_keywords)) {
                continue;
            }
            if (!robots_allows(u)) {
                continue;
            }
            children.push_back({std::move(norm), depth + 1});
        }
        return children;
    };

    std::string landing = normalize_url(start_url);
    if (!robots_allows(parse_url(landing))) {
        summary.error = "landing page disallowed by robots.txt";
        return summary;
    }
    visited.insert(landing);
    FetchResult landing_result = fetcher.fetch(landing);
    links_visited.fetch_add(1, std::memory_order_relaxed);
    if (!landing_result.ok) {
        summary.links_visited = links_visited.load();
        summary.error = landing_result.error.empty()
                            ? "landing fetch failed with status " + std::to_string(landing_result.status)
                            : landing_result.error;
        return summary;
    }
    for (auto& child : process_page(landing, 0, landing_result.body)) {
        if (visited.insert(child.url).second) {
            queue.push_back(std::move(child));
        }
    }

    auto worker = [&]() {
        std::unique_lock<std::mutex> lock(mutex);
        for (;;) {
            cv.wait(lock, [&] { return !queue.empty() || active == 0; });
            if (queue.empty()) {
                break;
            }
            Item item = std::move(queue.front());
            queue.pop_front();
            ++active;
            lock.unlock();

            FetchResult result = fetcher.fetch(item.url);
            links_visited.fetch_add(1, std::memory_order_relaxed);
            std::vector<Item> children;
            if (result.ok) {
                children = process_page(item.url, item.depth, result.body);
            } else {
                log::debug("fetch failed: " + item.url + " (" +
                           (result.error.empty() ? "status " + std::to_string(result.status) : result.error) +
                           ")");
            }

            lock.lock();
            for (auto& child : children) {
                if (visited.insert(child.url).second) {
                    queue.push_back(std::move(child));
                }
            }
            --active;
            cv.notify_all();
        }
        cv.notify_all();
    };

    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(config_.per_domain_concurrency));
    for (int i = 0; i < config_.per_domain_concurrency; ++i) {
        workers.emplace_back(worker);
    }
    for (auto& thread : workers) {
        thread.join();
    }

    summary.links_visited = links_visited.load();
    summary.pages_saved = pages_saved.load();
    summary.pages_discarded = pages_discarded.load();
    if (any_english.load()) {
        summary.site_verdict = EnglishVerdict::English;
    } else {
        summary.site_verdict = EnglishVerdict::NonEnglish;
    }
    return summary;
}

}
