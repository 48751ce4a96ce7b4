#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twofa/corpus.hpp"
#include "twofa/patterns.hpp"
#include "twofa/sentences.hpp"

namespace twofa {

// Evidence pair: which sentence matched which potential pattern.
struct PotentialHit {
    std::size_t sentence_ordinal = 0;
    std::size_t pattern_index = 0;
};

// Outcome of scoring one page.  A definite hit makes value meaningless (the
// conceptual score is infinite); it is kept at 0 so serialized output never
// carries a floating-point infinity.
struct PageScore {
    std::string url;
    bool ignored = false;
    bool url_bonus_applied = false;
    bool definite = false;
    double value = 0.0;
    std::optional<std::string> definite_sentence;
    std::optional<std::size_t> definite_pattern;
    std::vector<PotentialHit> potential_hits;
};

// Aggregate over a domain's pages.  For definite domains best_page is the
// lexicographically lowest definite URL and max_score/min_nonzero_score
// summarize the remaining non-definite pages.
struct DomainScore {
    std::string domain;
    bool definite = false;
    double max_score = 0.0;
    std::optional<double> min_nonzero_score;
    std::string best_page;
    std::optional<std::string> definite_sentence;
    std::size_t pages_scored = 0;
    std::size_t pages_ignored = 0;
    std::vector<std::string> evidence;
};

// True when the lowercased URL contains any url_ignore word.
bool url_ignored(const std::string& url, const PatternSets& patterns);

// True when any url_match pattern matches the lowercased URL.
bool url_scores_bonus(const std::string& url, const PatternSets& patterns);

// "negation" on a whole-word negation hit, else "ignore-pattern" on an
// ignore_sentence match, else nullopt.  Negation is checked first.
std::optional<std::string> sentence_skip_reason(const std::string& sentence, const PatternSets& patterns);

// Index of the first matching definite pattern, if any.
std::optional<std::size_t> definite_match(const std::string& sentence, const PatternSets& patterns);

// Potential-pattern evidence for one sentence: the distinct matching pattern
// indices plus the count used for weighting (equal to the number of indices
// in DistinctPatterns mode; per-occurrence totals in Occurrences mode, where
// anchored patterns still count at most once).
struct SentencePotential {
    std::vector<std::size_t> pattern_indices;
    std::size_t count = 0;
};

SentencePotential potential_hits_for(const std::string& sentence, const PatternSets& patterns,
                                     CountMode mode = CountMode::DistinctPatterns);

std::size_t potential_count(const std::string& sentence, const PatternSets& patterns,
                            CountMode mode = CountMode::DistinctPatterns);

// Scores one page given its already-extracted sentences: optional URL bonus,
// then per sentence skip / definite short-circuit / weighted potential count.
PageScore score_page(const std::string& url, const std::vector<Sentence>& sentences,
                     const PatternSets& patterns, CountMode mode = CountMode::DistinctPatterns);

// Convenience wrapper: sanitizes the HTML, extracts text and sentences, then
// calls score_page.
PageScore score_page_html(const std::string& url, const std::string& html, const PatternSets& patterns,
                          CountMode mode = CountMode::DistinctPatterns);

// Scores every page and aggregates.  Ties on max score resolve to the
// lexicographically lowest URL; evidence holds the best page's matching
// sentences (the definite sentence, or each sentence with a potential hit).
DomainScore score_domain(const std::string& domain, const std::vector<PageRecord>& pages,
                         const PatternSets& patterns, CountMode mode = CountMode::DistinctPatterns);

}
