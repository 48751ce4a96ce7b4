#include <benchmark/benchmark.h>

#include <string>

#include "twofa/html.hpp"
#include "twofa/patterns.hpp"
#include "twofa/scorer.hpp"
#include "twofa/sentences.hpp"

namespace {

// Synthetic security-page HTML with a mix of matching and inert sentences.
std::string make_page(int paragraphs) {
    std::string html = "<html><head><title>Security centre</title></head><body><h1>Account security</h1>";
    for (int i = 0; i < paragraphs; ++i) {
        switch (i % 4) {
            case 0:
                html += "<p>We protect your account with a one-time passcode sent to your phone. "
                        "Two-step verification adds an extra security check at sign in.</p>";
                break;
            case 1:
                html += "<p>Visit a branch to learn about savings accounts, mortgages and loans. "
                        "Our advisers are available on weekdays from nine to five.</p>";
                break;
            case 2:
                html += "<p>Never share the code from your card reader with anyone who calls you. "
                        "Fraudsters may try to steal your credentials by phone.</p>";
                break;
            default:
                html += "<p>Download our mobile app to manage payments, view statements and "
                        "update your personal details from any device.</p>";
                break;
        }
    }
    html += "</body></html>";
    return html;
}

void BM_HtmlToText(benchmark::State& state) {
    std::string html = make_page(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(twofa::html_to_text(html));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(html.size()));
}

void BM_SplitSentences(benchmark::State& state) {
    std::string text = twofa::html_to_text(make_page(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(twofa::split_sentences(text));
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) * static_cast<int64_t>(text.size()));
}

void BM_ScorePage(benchmark::State& state) {
    twofa::PatternSets patterns = twofa::PatternSets::defaults();
    std::string html = make_page(static_cast<int>(state.range(0)));
    std::string url = "https://bank.example/security/two-factor";
    for (auto _ : state) {
        benchmark::DoNotOptimize(twofa::score_page_html(url, html, patterns));
    }
}

void BM_SentenceSkip(benchmark::State& state) {
    twofa::PatternSets patterns = twofa::PatternSets::defaults();
    std::string sentence = "never share the one-time code for card payments with anyone who calls";
    for (auto _ : state) {
        benchmark::DoNotOptimize(twofa::sentence_skip_reason(sentence, patterns));
    }
}

BENCHMARK(BM_HtmlToText)->Arg(8)->Arg(64);
BENCHMARK(BM_SplitSentences)->Arg(8)->Arg(64);
BENCHMARK(BM_ScorePage)->Arg(8)->Arg(64);
BENCHMARK(BM_SentenceSkip);

}  // namespace

BENCHMARK_MAIN();
