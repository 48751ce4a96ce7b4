#include "twofa/english.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "twofa/embedded_data.hpp"
#include "twofa/errors.hpp"
#include "twofa/strings.hpp"

namespace twofa {

std::string_view to_string(EnglishVerdict v) {
    switch (v) {
        case EnglishVerdict::English: return "english";
        case EnglishVerdict::NonEnglish: return "non-english";
        case EnglishVerdict::Undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

Dictionary parse_word_stream(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view v = trim(line);
        if (v.empty() || v[0] == '#') continue;
        words.emplace_back(to_lower(v));
    }
    return Dictionary::from_words(words);
}

}  // namespace

const Dictionary& Dictionary::builtin() {
    static const Dictionary dict = [] {
        std::istringstream in(embedded::kDefaultWords);
        return parse_word_stream(in);
    }();
    return dict;
}

Dictionary Dictionary::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open dictionary file: " + path);
    Dictionary d = parse_word_stream(in);
    if (d.size() == 0) throw ConfigError("dictionary file holds no words: " + path);
    return d;
}

Dictionary Dictionary::from_words(const std::vector<std::string>& words) {
    Dictionary d;
    for (const auto& w : words) d.words_.insert(to_lower(w));
    return d;
}

bool Dictionary::contains(std::string_view word) const {
    return words_.count(to_lower(word)) > 0;
}

std::vector<std::string> english_tokens(const std::vector<std::string>& texts) {
    std::vector<std::string> tokens;
    for (const auto& text : texts) {
        for (auto& raw : split_on_any(text, "-: \t\n\r\f\v")) {
            if (raw.empty()) continue;
            bool alphabetic = std::all_of(raw.begin(), raw.end(), is_ascii_alpha);
            if (alphabetic) tokens.push_back(std::move(raw));
        }
    }
    return tokens;
}

EnglishVerdict is_english_page(const std::vector<std::string>& link_and_button_texts,
                               const Dictionary& dictionary, double ratio,
                               size_t min_words) {
    std::vector<std::string> tokens = english_tokens(link_and_button_texts);
    if (tokens.size() < min_words) return EnglishVerdict::Undetermined;
    size_t hits = 0;
    for (const auto& t : tokens) {
        if (dictionary.contains(t)) ++hits;
    }
    double fraction = static_cast<double>(hits) / static_cast<double>(tokens.size());
    return fraction > ratio ? EnglishVerdict::English : EnglishVerdict::NonEnglish;
}

}  // namespace twofa
