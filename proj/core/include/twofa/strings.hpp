#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace twofa {

inline bool is_ascii_alpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_alnum(char c) { return is_ascii_alpha(c) || is_ascii_digit(c); }

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

std::string to_lower(std::string_view s);

/// Trim ASCII whitespace from both ends.
std::string_view trim(std::string_view s);

/// Collapse every run of whitespace to a single space, trimming the ends.
std::string collapse_whitespace(std::string_view s);

bool contains_ci(std::string_view haystack, std::string_view lowercase_needle);

std::vector<std::string> split_on_any(std::string_view s, std::string_view separators);

/// Replace invalid UTF-8 sequences with U+FFFD so downstream JSON stays valid.
std::string utf8_lossy(std::string_view bytes);

}  // namespace twofa
