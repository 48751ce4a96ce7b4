#include <doctest.h>

#include <string>
#include <vector>

#include "twofa/english.hpp"

using namespace twofa;

TEST_SUITE("english") {

TEST_CASE("english_tokens splits on hyphen colon and whitespace") {
    auto tokens = english_tokens({"Two-Factor Auth", "help: center"});
    REQUIRE(tokens.size() == 5);
    CHECK(tokens[0] == "Two");
    CHECK(tokens[1] == "Factor");
    CHECK(tokens[2] == "Auth");
    CHECK(tokens[3] == "help");
    CHECK(tokens[4] == "center");
}

TEST_CASE("english_tokens drops tokens containing digits or symbols") {
    auto tokens = english_tokens({"2fa setup", "login!", "a1b c"});
    REQUIRE(tokens.size() == 2);
    CHECK(tokens[0] == "setup");
    CHECK(tokens[1] == "c");
}

TEST_CASE("builtin dictionary knows common banking words") {
    const Dictionary& dict = Dictionary::builtin();
    CHECK(dict.size() > 500);
    CHECK(dict.contains("security"));
    CHECK(dict.contains("account"));
    CHECK(dict.contains("the"));
    CHECK(dict.contains("SECURITY"));
    CHECK_FALSE(dict.contains("impressum"));
}

TEST_CASE("dictionary lookups ignore case") {
    Dictionary dict = Dictionary::from_words({"Login", "help"});
    CHECK(dict.contains("login"));
    CHECK(dict.contains("LOGIN"));
    CHECK(dict.contains("Help"));
    CHECK_FALSE(dict.contains("other"));
}

TEST_CASE("pages below the token floor are undetermined") {
    Dictionary dict = Dictionary::from_words({"home", "login"});
    std::vector<std::string> texts = {"home", "login", "home", "login", "home"};
    CHECK(is_english_page(texts, dict, 0.5, 10) == EnglishVerdict::Undetermined);
    CHECK(is_english_page({}, dict, 0.5, 10) == EnglishVerdict::Undetermined);
}

TEST_CASE("verdict needs a strict majority of dictionary words") {
    Dictionary dict = Dictionary::from_words(
        {"home", "login", "accounts", "savings", "security", "help"});

    // 6 of 10 known words: 0.6 > 0.5
    std::vector<std::string> mostly_english = {
        "home",  "login", "accounts", "savings",  "security",
        "hilfe", "konto", "kredite",  "zugang", "help"};
    CHECK(is_english_page(mostly_english, dict, 0.5, 10) == EnglishVerdict::English);

    // 4 of 10 known words: 0.4
    std::vector<std::string> mostly_foreign = {
        "home",  "login", "accounts", "hilfe",     "konto",
        "kredite", "zugang", "uebersicht", "filiale", "help"};
    CHECK(is_english_page(mostly_foreign, dict, 0.5, 10) == EnglishVerdict::NonEnglish);

    // exactly half is not a strict majority
    std::vector<std::string> half = {"home",  "login", "accounts", "savings", "security",
                                     "hilfe", "konto", "kredite",  "zugang",  "filiale"};
    CHECK(is_english_page(half, dict, 0.5, 10) == EnglishVerdict::NonEnglish);
}

TEST_CASE("only countable tokens feed the ratio") {
    Dictionary dict = Dictionary::from_words({"one", "two", "three", "four", "five", "six"});
    // 12 raw tokens but the numeric ones drop out, leaving 6 of 9 known
    std::vector<std::string> texts = {"one two three four five six",
                                      "x1 y2 z3", "foo bar baz"};
    auto tokens = english_tokens(texts);
    CHECK(tokens.size() == 9);
    CHECK(is_english_page(texts, dict, 0.5, 9) == EnglishVerdict::English);
    CHECK(is_english_page(texts, dict, 0.5, 10) == EnglishVerdict::Undetermined);
}

TEST_CASE("to_string names each verdict") {
    CHECK(to_string(EnglishVerdict::English) == "english");
    CHECK(to_string(EnglishVerdict::NonEnglish) == "non-english");
    CHECK(to_string(EnglishVerdict::Undetermined) == "undetermined");
}

}  // TEST_SUITE
