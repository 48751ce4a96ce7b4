#include "twofa/scorer.hpp"

#include <algorithm>
#include <set>

#include "twofa/html.hpp"
#include "twofa/strings.hpp"

namespace twofa {
namespace {

bool is_word_char(char c) {
    return is_ascii_alnum(c) || c == '\'';
}

// Whole-word (or whole-phrase) containment; needle is already lowercase.
bool contains_whole_word(const std::string& text, const std::string& needle) {
    if (needle.empty()) {
        return false;
    }
    std::size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
        std::size_t end = pos + needle.size();
        bool right_ok = end == text.size() || !is_word_char(text[end]);
        if (left_ok && right_ok) {
            return true;
        }
        ++pos;
    }
    return false;
}

std::size_t occurrence_count(const std::string& sentence, const std::regex& re) {
    auto begin = std::sregex_iterator(sentence.begin(), sentence.end(), re);
    return static_cast<std::size_t>(std::distance(begin, std::sregex_iterator()));
}

}  // namespace

bool url_ignored(const std::string& url, const PatternSets& patterns) {
    std::string lowered = to_lower(url);
    for (const auto& word : patterns.url_ignore) {
        if (lowered.find(word) != std::string::npos) {
            return true;
        }
    }
    return false;
}

bool url_scores_bonus(const std::string& url, const PatternSets& patterns) {
    std::string lowered = to_lower(url);
    for (const auto& re : patterns.url_match) {
        if (std::regex_search(lowered, re)) {
            return true;
        }
    }
    return false;
}

std::optional<std::string> sentence_skip_reason(const std::string& sentence, const PatternSets& patterns) {
    for (const auto& word : patterns.negation) {
        if (contains_whole_word(sentence, word)) {
            return "negation";
        }
    }
    for (const auto& re : patterns.ignore_sentence) {
        if (std::regex_search(sentence, re)) {
            return "ignore-pattern";
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> definite_match(const std::string& sentence, const PatternSets& patterns) {
    for (std::size_t i = 0; i < patterns.definite.size(); ++i) {
        if (std::regex_search(sentence, patterns.definite[i])) {
            return i;
        }
    }
    return std::nullopt;
}

SentencePotential potential_hits_for(const std::string& sentence, const PatternSets& patterns, CountMode mode) {
    SentencePotential out;
    for (std::size_t i = 0; i < patterns.potential.size(); ++i) {
        if (mode == CountMode::Occurrences) {
            const std::string& source = patterns.potential_sources[i];
            bool anchored = !source.empty() && source.front() == '^';
            std::size_t n = anchored ? (std::regex_search(sentence, patterns.potential[i]) ? 1 : 0)
                                     : occurrence_count(sentence, patterns.potential[i]);
            if (n > 0) {
                out.pattern_indices.push_back(i);
                out.count += n;
            }
        } else if (std::regex_search(sentence, patterns.potential[i])) {
            out.pattern_indices.push_back(i);
            out.count += 1;
        }
    }
    return out;
}

std::size_t potential_count(const std::string& sentence, const PatternSets& patterns, CountMode mode) {
    return potential_hits_for(sentence, patterns, mode).count;
}

PageScore score_page(const std::string& url, const std::vector<Sentence>& sentences,
                     const PatternSets& patterns, CountMode mode) {
    PageScore result;
    result.url = url;
    if (url_ignored(url, patterns)) {
        result.ignored = true;
        return result;
    }
    double score = 0.0;
    if (url_scores_bonus(url, patterns)) {
        score += patterns.url_bonus;
        result.url_bonus_applied = true;
    }
    for (const auto& sentence : sentences) {
        if (sentence_skip_reason(sentence.text, patterns).has_value()) {
            continue;
        }
        if (auto definite = definite_match(sentence.text, patterns)) {
            result.definite = true;
            result.definite_sentence = sentence.text;
            result.definite_pattern = *definite;
            result.value = 0.0;
            result.potential_hits.clear();
            return result;
        }
        SentencePotential hits = potential_hits_for(sentence.text, patterns, mode);
        for (std::size_t index : hits.pattern_indices) {
            result.potential_hits.push_back({sentence.ordinal, index});
        }
        score += static_cast<double>(hits.count) * patterns.constant_c;
    }
    result.value = score;
    return result;
}

PageScore score_page_html(const std::string& url, const std::string& html, const PatternSets& patterns,
                          CountMode mode) {
    std::string text = html_to_text(utf8_lossy(html));
    return score_page(url, split_sentences(text, url), patterns, mode);
}

DomainScore score_domain(const std::string& domain, const std::vector<PageRecord>& pages,
                         const PatternSets& patterns, CountMode mode) {
    DomainScore result;
    result.domain = domain;

    std::vector<PageScore> scored;
    scored.reserve(pages.size());
    for (const auto& page : pages) {
        PageScore score = score_page_html(page.url, page.html, patterns, mode);
        if (score.ignored) {
            ++result.pages_ignored;
            continue;
        }
        ++result.pages_scored;
        scored.push_back(std::move(score));
    }

    for (const auto& score : scored) {
        if (score.definite) {
            result.definite = true;
        } else {
            result.max_score = std::max(result.max_score, score.value);
            if (score.value > 0.0 &&
                (!result.min_nonzero_score.has_value() || score.value < *result.min_nonzero_score)) {
                result.min_nonzero_score = score.value;
            }
        }
    }

    const PageScore* best = nullptr;
    for (const auto& score : scored) {
        if (result.definite) {
            if (score.definite && (best == nullptr || score.url < best->url)) {
                best = &score;
            }
        } else if (best == nullptr || score.value > best->value ||
                   (score.value == best->value && score.url < best->url)) {
            best = &score;
        }
    }

    if (best != nullptr) {
        result.best_page = best->url;
        if (best->definite) {
            result.definite_sentence = best->definite_sentence;
            result.evidence.push_back(best->definite_sentence.value_or(""));
        } else {
            // Second pass over the winning page to turn hit ordinals back
            // into sentence texts.
            const PageRecord* record = nullptr;
            for (const auto& page : pages) {
                if (page.url == best->url) {
                    record = &page;
                    break;
                }
            }
            if (record != nullptr) {
                std::string text = html_to_text(utf8_lossy(record->html));
                std::vector<Sentence> sentences = split_sentences(text, record->url);
                std::set<std::size_t> ordinals;
                for (const auto& hit : best->potential_hits) {
                    ordinals.insert(hit.sentence_ordinal);
                }
                for (const auto& sentence : sentences) {
                    if (ordinals.count(sentence.ordinal) > 0) {
                        result.evidence.push_back(sentence.text);
                    }
                }
            }
        }
    }

    return result;
}

}
