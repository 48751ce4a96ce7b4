#include "twofa/patterns.hpp"

#include <fstream>
#include <sstream>

#include "twofa/embedded_data.hpp"
#include "twofa/errors.hpp"
#include "twofa/strings.hpp"

namespace twofa {
namespace {

// Extracts the quoted entry from a pattern-file line.  Accepts an optional
// trailing comma and an optional trailing comment after the closing quote.
std::string parse_quoted_entry(std::string_view line, const std::string& origin, std::size_t lineno) {
    if (line.empty() || line.front() != '"') {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected a quoted entry");
    }
    std::string out;
    std::size_t i = 1;
    bool closed = false;
    for (; i < line.size(); ++i) {
        char c = line[i];
        if (c == '\\' && i + 1 < line.size() && (line[i + 1] == '"' || line[i + 1] == '\\')) {
            out.push_back(line[i + 1]);
            ++i;
        } else if (c == '"') {
            closed = true;
            ++i;
            break;
        } else {
            out.push_back(c);
        }
    }
    if (!closed) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated quoted entry");
    }
    std::string_view rest = trim(line.substr(i));
    if (!rest.empty() && rest.front() == ',') {
        rest = trim(rest.substr(1));
    }
    if (!rest.empty() && rest.front() != '#') {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": unexpected text after entry: '" + std::string(rest) + "'");
    }
    return out;
}

std::regex compile_pattern(const std::string& source, const std::string& origin, std::size_t lineno) {
    try {
        return std::regex(source, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": invalid pattern '" + source + "': " + e.what());
    }
}

double parse_scoring_value(std::string_view value, const std::string& origin, std::size_t lineno) {
    try {
        std::size_t used = 0;
        std::string text{value};
        double parsed = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing text");
        }
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected a number, got '" + std::string(value) + "'");
    }
}

}  // namespace

PatternSets PatternSets::defaults() {
    return parse(embedded::kDefaultPatterns, "<built-in patterns>");
}

PatternSets PatternSets::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read pattern file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path);
}

PatternSets PatternSets::parse(const std::string& text, const std::string& origin) {
    PatternSets out;
    out.url_bonus = -1.0;
    out.constant_c = -1.0;

    enum class Section {
        None,
        UrlIgnore,
        UrlMatch,
        Negation,
        IgnoreSentence,
        Definite,
        Potential,
        Scoring,
    };
    Section section = Section::None;

    std::istringstream in(text);
    std::string raw_line;
    std::size_t lineno = 0;
    while (std::getline(in, raw_line)) {
        ++lineno;
        std::string_view line = trim(raw_line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            }
            std::string_view name = line.substr(1, line.size() - 2);
            if (name == "url_ignore") {
                section = Section::UrlIgnore;
            } else if (name == "url_match") {
                section = Section::UrlMatch;
            } else if (name == "negation") {
                section = Section::Negation;
            } else if (name == "ignore_sentence") {
                section = Section::IgnoreSentence;
            } else if (name == "definite") {
                section = Section::Definite;
            } else if (name == "potential") {
                section = Section::Potential;
            } else if (name == "scoring") {
                section = Section::Scoring;
            } else {
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown section [" + std::string(name) + "]");
            }
            continue;
        }
        switch (section) {
            case Section::None:
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": entry before any [section] header");
            case Section::UrlIgnore:
                out.url_ignore.push_back(parse_quoted_entry(line, origin, lineno));
                break;
            case Section::UrlMatch: {
                std::string source = parse_quoted_entry(line, origin, lineno);
                out.url_match.push_back(compile_pattern(source, origin, lineno));
                out.url_match_sources.push_back(std::move(source));
                break;
            }
            case Section::Negation:
                out.negation.push_back(parse_quoted_entry(line, origin, lineno));
                break;
            case Section::IgnoreSentence: {
                std::string source = parse_quoted_entry(line, origin, lineno);
                out.ignore_sentence.push_back(compile_pattern(source, origin, lineno));
                out.ignore_sentence_sources.push_back(std::move(source));
                break;
            }
            case Section::Definite: {
                std::string source = parse_quoted_entry(line, origin, lineno);
                out.definite.push_back(compile_pattern(source, origin, lineno));
                out.definite_sources.push_back(std::move(source));
                break;
            }
            case Section::Potential: {
                std::string source = parse_quoted_entry(line, origin, lineno);
                out.potential.push_back(compile_pattern(source, origin, lineno));
                out.potential_sources.push_back(std::move(source));
                break;
            }
            case Section::Scoring: {
                auto eq = line.find('=');
                if (eq == std::string_view::npos) {
                    throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
                }
                std::string_view key = trim(line.substr(0, eq));
                std::string_view value = trim(line.substr(eq + 1));
                if (key == "url_bonus") {
                    out.url_bonus = parse_scoring_value(value, origin, lineno);
                } else if (key == "constant_c") {
                    out.constant_c = parse_scoring_value(value, origin, lineno);
                } else {
                    throw ConfigError(origin + ":" + std::to_string(lineno) + ": unknown scoring key '" + std::string(key) + "'");
                }
                break;
            }
        }
    }

    if (out.url_bonus < 0.0) {
        throw ConfigError(origin + ": missing [scoring] url_bonus");
    }
    if (out.constant_c < 0.0) {
        throw ConfigError(origin + ": missing [scoring] constant_c");
    }
    out.validate(origin);
    return out;
}

void PatternSets::validate(const std::string& origin) const {
    auto require_nonempty = [&](bool ok, const char* what) {
        if (!ok) {
            throw ConfigError(origin + ": section [" + what + "] is empty");
        }
    };
    require_nonempty(!url_ignore.empty(), "url_ignore");
    require_nonempty(!url_match.empty(), "url_match");
    require_nonempty(!negation.empty(), "negation");
    require_nonempty(!ignore_sentence.empty(), "ignore_sentence");
    require_nonempty(!definite.empty(), "definite");
    require_nonempty(!potential.empty(), "potential");
    if (url_bonus < 0.0) {
        throw ConfigError(origin + ": url_bonus must be non-negative");
    }
    if (constant_c <= 0.0) {
        throw ConfigError(origin + ": constant_c must be positive");
    }
}

}
