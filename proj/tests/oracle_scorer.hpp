#pragma once

// Straight-line re-scoring of pages, written independently of the production
// scorer and used only to cross-check it. Shares the HTML -> sentence
// preprocessing (that is the input definition, not the thing under test) but
// compiles its own regexes and does its own negation lookup.

#include <optional>
#include <string>
#include <vector>

#include "twofa/corpus.hpp"
#include "twofa/patterns.hpp"

namespace oracle {

struct PageResult {
    bool ignored = false;
    bool definite = false;
    double value = 0.0;
};

struct DomainResult {
    bool definite = false;
    double max_score = 0.0;
    std::optional<double> min_nonzero_score;
};

PageResult score_page(const std::string& url, const std::string& html,
                      const twofa::PatternSets& patterns);

DomainResult score_domain(const std::vector<twofa::PageRecord>& pages,
                          const twofa::PatternSets& patterns);

}  // namespace oracle
