#include "twofa/sentences.hpp"

#include <unordered_set>

#include "twofa/strings.hpp"

namespace twofa {

namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }

// Token of letters and dots ending at the '.' at `dot`, lowercased, dot
// included: for "(e.g." this yields "e.g.".
std::string token_before_dot(std::string_view text, size_t dot) {
    size_t start = dot;
    while (start > 0) {
        char c = text[start - 1];
        if (is_ascii_alpha(c) || c == '.') --start;
        else break;
    }
    return to_lower(text.substr(start, dot - start + 1));
}

}  // namespace

SplitterOptions SplitterOptions::defaults() {
    return SplitterOptions{{
        "e.g.", "i.e.", "etc.", "vs.", "no.", "mr.", "mrs.", "ms.", "dr.",
        "prof.", "st.", "inc.", "ltd.", "co.", "corp.", "dept.", "approx.",
    }};
}

std::string normalize_sentence(std::string_view raw) {
    return collapse_whitespace(to_lower(raw));
}

std::vector<Sentence> split_sentences(std::string_view text, const std::string& source_url,
                                      const SplitterOptions& options) {
    std::unordered_set<std::string> abbrev(options.abbreviations.begin(),
                                           options.abbreviations.end());
    std::vector<Sentence> out;
    size_t ordinal = 0;

    auto emit = [&](std::string_view piece) {
        std::string normalized = normalize_sentence(piece);
        if (normalized.empty()) return;
        out.push_back(Sentence{std::move(normalized), source_url, ordinal++});
    };

    size_t start = 0;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];

        // paragraph break: whitespace run containing a newline
        if (is_space(c)) {
            size_t j = i;
            bool has_newline = false;
            while (j < text.size() && is_space(text[j])) {
                if (text[j] == '\n' || text[j] == '\r') has_newline = true;
                ++j;
            }
            if (has_newline) {
                emit(text.substr(start, i - start));
                start = j;
            }
            i = j;
            continue;
        }

        if (c == '.' || c == '!' || c == '?') {
            // decimal numbers: digit on both sides of a '.'
            if (c == '.' && i > 0 && i + 1 < text.size() &&
                is_ascii_digit(text[i - 1]) && is_ascii_digit(text[i + 1])) {
                ++i;
                continue;
            }
            if (i + 1 >= text.size()) {
                ++i;
                emit(text.substr(start, i - start));
                start = i;
                continue;
            }
            if (!is_space(text[i + 1])) {
                ++i;
                continue;
            }
            size_t j = i + 1;
            while (j < text.size() && is_space(text[j])) ++j;
            bool sentence_end = (j >= text.size()) || is_upper(text[j]);
            if (sentence_end && c == '.') {
                std::string token = token_before_dot(text, i);
                bool single_initial = token.size() == 2 && is_ascii_alpha(token[0]);
                if (abbrev.count(token) || single_initial) sentence_end = false;
            }
            if (sentence_end) {
                emit(text.substr(start, i + 1 - start));
                start = i + 1;
            }
            ++i;
            continue;
        }
        ++i;
    }
    emit(text.substr(start));
    return out;
}

}  // namespace twofa
