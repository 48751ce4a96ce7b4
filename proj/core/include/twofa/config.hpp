#pragma once

#include <string>

#include "twofa/crawler.hpp"
#include "twofa/patterns.hpp"
#include "twofa/report.hpp"

namespace twofa {

// Everything the CLI can tune, loadable from one JSON file.  Values from the
// file override the built-in defaults; command-line flags override both.
struct AppConfig {
    CrawlConfig crawl = CrawlConfig::defaults();
    std::string patterns_path;
    ReportOptions report;
    CountMode count_mode = CountMode::DistinctPatterns;

    static AppConfig defaults();

    // Throws ConfigError on unreadable files, malformed JSON, unknown keys
    // or out-of-range values.
    static AppConfig load(const std::string& path);

    // Pattern sets from patterns_path, or the built-in defaults when empty.
    PatternSets load_patterns() const;

    // Dictionary from crawl.dictionary_path, or the built-in word list.
    Dictionary load_dictionary() const;
};

}
