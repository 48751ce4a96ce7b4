#include <doctest.h>

#include <string>
#include <vector>

#include "twofa/strings.hpp"

using namespace twofa;

TEST_SUITE("strings") {

TEST_CASE("to_lower handles ascii only") {
    CHECK(to_lower("MiXeD Case 123!") == "mixed case 123!");
    CHECK(to_lower("") == "");
    // Non-ASCII bytes pass through untouched.
    CHECK(to_lower("caf\xc3\xa9 BAR") == "caf\xc3\xa9 bar");
}

TEST_CASE("trim strips both ends") {
    CHECK(trim("  hello  ") == "hello");
    CHECK(trim("\t\r\n x \n") == "x");
    CHECK(trim("nospace") == "nospace");
    CHECK(trim("") == "");
    CHECK(trim(" \t\n ") == "");
}

TEST_CASE("collapse_whitespace joins runs and trims") {
    CHECK(collapse_whitespace("a  b\t\tc") == "a b c");
    CHECK(collapse_whitespace("  leading and trailing  ") == "leading and trailing");
    CHECK(collapse_whitespace("line\nbreaks\r\nhere") == "line breaks here");
    CHECK(collapse_whitespace("") == "");
    CHECK(collapse_whitespace("   ") == "");
}

TEST_CASE("contains_ci is case-insensitive on the haystack") {
    CHECK(contains_ci("Two-Factor Auth", "two-factor"));
    CHECK(contains_ci("SECURITY", "security"));
    CHECK_FALSE(contains_ci("factor", "two"));
    CHECK(contains_ci("anything", ""));
}

TEST_CASE("split_on_any splits on every separator and keeps empty segments") {
    auto parts = split_on_any("one-time: code now", "-: ");
    REQUIRE(parts.size() == 5);
    CHECK(parts[0] == "one");
    CHECK(parts[1] == "time");
    CHECK(parts[2] == "");
    CHECK(parts[3] == "code");
    CHECK(parts[4] == "now");

    // Callers filter empties themselves.
    CHECK(split_on_any("", "-") == std::vector<std::string>{""});
    CHECK(split_on_any("--", "-") == std::vector<std::string>{"", "", ""});
    CHECK(split_on_any("solo", ", ") == std::vector<std::string>{"solo"});
}

TEST_CASE("utf8_lossy keeps valid sequences") {
    const std::string valid = "ascii caf\xc3\xa9 \xe2\x82\xac \xf0\x9f\x94\x92";
    CHECK(utf8_lossy(valid) == valid);
}

TEST_CASE("utf8_lossy replaces invalid bytes") {
    // Lone continuation byte.
    CHECK(utf8_lossy("a\x80z") == "a\xef\xbf\xbdz");
    // Truncated two-byte sequence at end of input.
    CHECK(utf8_lossy("ab\xc3") == "ab\xef\xbf\xbd");
    // Overlong encoding of '/'.
    CHECK(utf8_lossy("\xc0\xaf") == "\xef\xbf\xbd\xef\xbf\xbd");
    // 0xFF is never valid in UTF-8.
    CHECK(utf8_lossy("\xff") == "\xef\xbf\xbd");
}

}  // TEST_SUITE
