#include "twofa/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twofa/errors.hpp"

namespace twofa {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError("config " + path + ": " + message);
}

void require_keys(const ordered_json& object, std::initializer_list<const char*> known,
                  const std::string& path, const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        bool found = false;
        for (const char* candidate : known) {
            if (key == candidate) {
                found = true;
                break;
            }
        }
        if (!found) {
            fail(path, "unknown key '" + key + "' in " + where);
        }
    }
}

std::vector<std::string> string_list(const ordered_json& value, const std::string& path,
                                     const std::string& key) {
    if (!value.is_array()) {
        fail(path, "'" + key + "' must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& item : value) {
        if (!item.is_string()) {
            fail(path, "'" + key + "' must be an array of strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

AppConfig AppConfig::defaults() {
    return {};
}

AppConfig AppConfig::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    ordered_json j = ordered_json::parse(buf.str(), nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        fail(path, "not a JSON object");
    }
    require_keys(j,
                 {"crawl", "patterns_path", "likely_threshold", "distribution_low",
                  "distribution_high", "count_mode"},
                 path, "the top level");

    AppConfig config;
    if (j.contains("crawl")) {
        const ordered_json& c = j["crawl"];
        if (!c.is_object()) {
            fail(path, "'crawl' must be an object");
        }
        require_keys(c,
                     {"max_depth", "per_domain_concurrency", "url_ignore_keywords",
                      "url_match_keywords", "english_word_ratio", "min_words_for_verdict",
                      "dictionary_path", "request_timeout_ms", "respect_robots", "base_url"},
                     path, "'crawl'");
        if (c.contains("max_depth")) {
            config.crawl.max_depth = c["max_depth"].get<int>();
        }
        if (c.contains("per_domain_concurrency")) {
            config.crawl.per_domain_concurrency = c["per_domain_concurrency"].get<int>();
        }
        if (c.contains("url_ignore_keywords")) {
            config.crawl.url_ignore_keywords = string_list(c["url_ignore_keywords"], path, "url_ignore_keywords");
        }
        if (c.contains("url_match_keywords")) {
            config.crawl.url_match_keywords = string_list(c["url_match_keywords"], path, "url_match_keywords");
        }
        if (c.contains("english_word_ratio")) {
            config.crawl.english_word_ratio = c["english_word_ratio"].get<double>();
        }
        if (c.contains("min_words_for_verdict")) {
            config.crawl.min_words_for_verdict = c["min_words_for_verdict"].get<int>();
        }
        if (c.contains("dictionary_path")) {
            config.crawl.dictionary_path = c["dictionary_path"].get<std::string>();
        }
        if (c.contains("request_timeout_ms")) {
            config.crawl.request_timeout = std::chrono::milliseconds(c["request_timeout_ms"].get<int>());
        }
        if (c.contains("respect_robots")) {
            config.crawl.respect_robots = c["respect_robots"].get<bool>();
        }
        if (c.contains("base_url")) {
            config.crawl.base_url_override = c["base_url"].get<std::string>();
        }
    }
    if (j.contains("patterns_path")) {
        config.patterns_path = j["patterns_path"].get<std::string>();
    }
    if (j.contains("likely_threshold")) {
        config.report.likely_threshold = j["likely_threshold"].get<double>();
        if (config.report.likely_threshold <= 0.0) {
            fail(path, "likely_threshold must be positive");
        }
    }
    if (j.contains("distribution_low")) {
        config.report.distribution_low = j["distribution_low"].get<double>();
    }
    if (j.contains("distribution_high")) {
        config.report.distribution_high = j["distribution_high"].get<double>();
    }
    if (config.report.distribution_high < config.report.distribution_low) {
        fail(path, "distribution_high must not be below distribution_low");
    }
    if (j.contains("count_mode")) {
        std::string mode = j["count_mode"].get<std::string>();
        if (mode == "distinct") {
            config.count_mode = CountMode::DistinctPatterns;
        } else if (mode == "occurrences") {
            config.count_mode = CountMode::Occurrences;
        } else {
            fail(path, "count_mode must be 'distinct' or 'occurrences'");
        }
    }

    try {
        config.crawl.validate();
    } catch (const ConfigError& e) {
        fail(path, e.what());
    }
    return config;
}

PatternSets AppConfig::load_patterns() const {
    if (patterns_path.empty()) {
        return PatternSets::defaults();
    }
    return PatternSets::load(patterns_path);
}

Dictionary AppConfig::load_dictionary() const {
    if (crawl.dictionary_path.empty()) {
        return Dictionary::builtin();
    }
    return Dictionary::load(crawl.dictionary_path);
}

}
