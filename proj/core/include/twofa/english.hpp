#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace twofa {

enum class EnglishVerdict { English, NonEnglish, Undetermined };

std::string_view to_string(EnglishVerdict v);

/// Case-insensitive English word list.
class Dictionary {
  public:
    /// Word list compiled into the library (mirrors core/data/english_words.txt).
    static const Dictionary& builtin();
    /// Load one word per line; '#' starts a comment. Throws ConfigError when
    /// the file cannot be read or holds no words.
    static Dictionary load(const std::string& path);
    static Dictionary from_words(const std::vector<std::string>& words);

    bool contains(std::string_view word) const;
    size_t size() const { return words_.size(); }

  private:
    std::unordered_set<std::string> words_;
};

/// Split texts on hyphen, colon and whitespace; keep only purely alphabetic
/// tokens (a digit or any other character drops the token).
std::vector<std::string> english_tokens(const std::vector<std::string>& texts);

/// Verdict over the visible texts of a page's buttons and hyperlinks: fewer
/// than `min_words` countable tokens is Undetermined, otherwise English iff
/// the fraction of tokens found in the dictionary exceeds `ratio`.
EnglishVerdict is_english_page(const std::vector<std::string>& link_and_button_texts,
                               const Dictionary& dictionary, double ratio,
                               size_t min_words);

}  // namespace twofa
