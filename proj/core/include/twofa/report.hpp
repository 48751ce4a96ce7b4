#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twofa/scorer.hpp"
#include "twofa/seed_ingest.hpp"

namespace twofa {

// Per-domain outcome bucket.  Ordering for non-definite domains is
// NoMatch < PotentialWeak < Likely as max_score rises.
enum class Bucket {
    Definite,
    Likely,
    PotentialWeak,
    NoMatch,
    NoPages,
};

std::string_view to_string(Bucket bucket);

struct ReportOptions {
    double likely_threshold = 1.50;
    // Edges of the reported score-distribution buckets: below low,
    // [low, high], above high.
    double distribution_low = 1.0;
    double distribution_high = 2.0;

    static ReportOptions defaults() { return {}; }
};

struct Classification {
    Bucket bucket = Bucket::NoPages;
    double max_score = 0.0;
    double likely_threshold = 1.50;
};

// Definite wins outright; likely needs max_score >= threshold (inclusive);
// any positive score below that is weak; zero splits on whether any
// URL-match pages existed at all.
Classification classify(const DomainScore& score, double likely_threshold = 1.50);

struct DomainReport {
    std::string domain;
    std::string name;
    std::string site_url;
    std::vector<std::string> countries;
    Classification classification;
    bool definite = false;
    double max_score = 0.0;
    std::optional<double> min_nonzero_score;
    std::string best_page;
    std::vector<std::string> evidence;
    std::size_t pages_scored = 0;
    std::size_t pages_ignored = 0;
};

// seed may be null when the domain has no entry in the seed list.
DomainReport make_domain_report(const DomainScore& score, const BankEntry* seed,
                                const ReportOptions& options);

struct SummaryTable {
    std::size_t total = 0;
    std::size_t definite = 0;
    std::size_t likely = 0;
    std::size_t potential_weak = 0;
    std::size_t no_match = 0;
    std::size_t no_pages = 0;
    // Score distribution over likely + weak domains.
    std::size_t distribution_below = 0;
    std::size_t distribution_within = 0;
    std::size_t distribution_above = 0;
    std::map<std::string, std::size_t> per_country;

    std::size_t potential() const { return likely + potential_weak; }
};

SummaryTable summarize(const std::vector<DomainReport>& reports,
                       const ReportOptions& options = ReportOptions::defaults());

std::string domain_score_to_json(const DomainScore& score);
bool domain_score_from_json(const std::string& line, DomainScore& score);

// scores.jsonl, one DomainScore per line sorted by domain.
void write_scores_file(const std::filesystem::path& path, const std::vector<DomainScore>& scores);

// Throws ConfigError when unreadable; malformed lines are dropped with a
// warning.
std::vector<DomainScore> load_scores_file(const std::filesystem::path& path);

// report.json (summary + full per-domain reports) and report.txt (the
// human-readable tables) under dir.  Reports are emitted sorted by domain.
void write_report_files(const std::filesystem::path& dir, const std::vector<DomainReport>& reports,
                        const ReportOptions& options);

}
