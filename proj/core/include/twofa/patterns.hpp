#pragma once

#include <regex>
#include <string>
#include <vector>

namespace twofa {

// How potential-pattern hits are counted per sentence.  DistinctPatterns
// counts each matching pattern once; Occurrences counts every non-overlapping
// match (anchored patterns still count at most once).
enum class CountMode {
    DistinctPatterns,
    Occurrences,
};

// The six keyword/pattern collections plus the scoring constants, loaded from
// a sectioned data file.  Regex entries are kept both as source text (for
// diagnostics) and in compiled form.
struct PatternSets {
    std::vector<std::string> url_ignore;

    std::vector<std::string> url_match_sources;
    std::vector<std::regex> url_match;

    std::vector<std::string> negation;

    std::vector<std::string> ignore_sentence_sources;
    std::vector<std::regex> ignore_sentence;

    std::vector<std::string> definite_sources;
    std::vector<std::regex> definite;

    std::vector<std::string> potential_sources;
    std::vector<std::regex> potential;

    double url_bonus = 0.25;
    double constant_c = 0.15;

    // Built-in copy of the checked-in default pattern file.
    static PatternSets defaults();

    // Loads and validates a pattern file.  Throws ConfigError on unreadable
    // files, malformed lines, unknown sections, or invalid regexes.
    static PatternSets load(const std::string& path);

    // Parses pattern-file text; origin names the source in error messages.
    static PatternSets parse(const std::string& text, const std::string& origin);

    // Throws ConfigError unless every list is non-empty and the constants are
    // sane (url_bonus >= 0, constant_c > 0).
    void validate(const std::string& origin = "patterns") const;
};

}
