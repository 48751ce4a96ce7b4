#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace twofa {

/// One normalized sentence of a page: lowercased, whitespace-collapsed, with a
/// strictly increasing ordinal within its page.
struct Sentence {
    std::string text;
    std::string source_url;
    size_t ordinal = 0;

    bool operator==(const Sentence&) const = default;
};

struct SplitterOptions {
    /// Tokens (with their trailing dot, lowercase) that never end a sentence.
    std::vector<std::string> abbreviations;

    static SplitterOptions defaults();
};

/// Rule-based splitter: a sentence ends at '.', '!' or '?' followed by
/// whitespace and an uppercase letter, or at end of text. A '.' does not split
/// after a known abbreviation or a single-letter initial, and never inside a
/// decimal number. Paragraph breaks (any whitespace run containing a newline)
/// always end a sentence.
std::vector<Sentence> split_sentences(std::string_view text,
                                      const std::string& source_url = {},
                                      const SplitterOptions& options = SplitterOptions::defaults());

/// Lowercase and whitespace-collapse, the normal form all pattern matching
/// runs on.
std::string normalize_sentence(std::string_view raw);

}  // namespace twofa
