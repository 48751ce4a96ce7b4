#include "twofa/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "twofa/errors.hpp"
#include "twofa/log.hpp"
#include "twofa/strings.hpp"

namespace twofa {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(Bucket bucket) {
    switch (bucket) {
        case Bucket::Definite:
            return "definite";
        case Bucket::Likely:
            return "likely";
        case Bucket::PotentialWeak:
            return "potential-weak";
        case Bucket::NoMatch:
            return "no-match";
        case Bucket::NoPages:
            return "no-pages";
    }
    return "unknown";
}

Classification classify(const DomainScore& score, double likely_threshold) {
    Classification out;
    out.max_score = score.max_score;
    out.likely_threshold = likely_threshold;
    if (score.definite) {
        out.bucket = Bucket::Definite;
    } else if (score.pages_scored == 0 && score.pages_ignored == 0) {
        out.bucket = Bucket::NoPages;
    } else if (score.max_score <= 0.0) {
        out.bucket = Bucket::NoMatch;
    } else if (score.max_score >= likely_threshold) {
        out.bucket = Bucket::Likely;
    } else {
        out.bucket = Bucket::PotentialWeak;
    }
    return out;
}

DomainReport make_domain_report(const DomainScore& score, const BankEntry* seed,
                                const ReportOptions& options) {
    DomainReport report;
    report.domain = score.domain;
    if (seed != nullptr) {
        report.name = seed->name;
        report.site_url = seed->site_url;
        report.countries = seed->countries;
    }
    report.classification = classify(score, options.likely_threshold);
    report.definite = score.definite;
    report.max_score = score.max_score;
    report.min_nonzero_score = score.min_nonzero_score;
    report.best_page = score.best_page;
    report.evidence = score.evidence;
    report.pages_scored = score.pages_scored;
    report.pages_ignored = score.pages_ignored;
    return report;
}

SummaryTable summarize(const std::vector<DomainReport>& reports, const ReportOptions& options) {
    SummaryTable table;
    table.total = reports.size();
    for (const auto& report : reports) {
        switch (report.classification.bucket) {
            case Bucket::Definite:
                ++table.definite;
                break;
            case Bucket::Likely:
                ++table.likely;
                break;
            case Bucket::PotentialWeak:
                ++table.potential_weak;
                break;
            case Bucket::NoMatch:
                ++table.no_match;
                break;
            case Bucket::NoPages:
                ++table.no_pages;
                break;
        }
        if (report.classification.bucket == Bucket::Likely ||
            report.classification.bucket == Bucket::PotentialWeak) {
            if (report.max_score < options.distribution_low) {
                ++table.distribution_below;
            } else if (report.max_score <= options.distribution_high) {
                ++table.distribution_within;
            } else {
                ++table.distribution_above;
            }
        }
        for (const auto& country : report.countries) {
            ++table.per_country[country];
        }
    }
    return table;
}

std::string domain_score_to_json(const DomainScore& score) {
    ordered_json j;
    j["domain"] = score.domain;
    j["definite"] = score.definite;
    j["max_score"] = score.max_score;
    if (score.min_nonzero_score.has_value()) {
        j["min_nonzero_score"] = *score.min_nonzero_score;
    } else {
        j["min_nonzero_score"] = nullptr;
    }
    j["best_page"] = score.best_page;
    j["pages_scored"] = score.pages_scored;
    j["pages_ignored"] = score.pages_ignored;
    j["evidence"] = score.evidence;
    return j.dump();
}

bool domain_score_from_json(const std::string& line, DomainScore& score) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("domain") || !j["domain"].is_string()) {
        return false;
    }
    DomainScore out;
    out.domain = j["domain"].get<std::string>();
    out.definite = j.value("definite", false);
    out.max_score = j.value("max_score", 0.0);
    if (j.contains("min_nonzero_score") && j["min_nonzero_score"].is_number()) {
        out.min_nonzero_score = j["min_nonzero_score"].get<double>();
    }
    out.best_page = j.value("best_page", "");
    out.pages_scored = j.value("pages_scored", std::size_t{0});
    out.pages_ignored = j.value("pages_ignored", std::size_t{0});
    if (j.contains("evidence") && j["evidence"].is_array()) {
        for (const auto& item : j["evidence"]) {
            if (item.is_string()) {
                out.evidence.push_back(item.get<std::string>());
            }
        }
    }
    score = std::move(out);
    return true;
}

void write_scores_file(const std::filesystem::path& path, const std::vector<DomainScore>& scores) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot open scores file for writing: " + path.string());
    }
    std::vector<const DomainScore*> sorted;
    sorted.reserve(scores.size());
    for (const auto& score : scores) {
        sorted.push_back(&score);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const DomainScore* a, const DomainScore* b) { return a->domain < b->domain; });
    for (const DomainScore* score : sorted) {
        out << domain_score_to_json(*score) << '\n';
    }
}

std::vector<DomainScore> load_scores_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read scores file: " + path.string());
    }
    std::vector<DomainScore> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        DomainScore score;
        if (domain_score_from_json(line, score)) {
            out.push_back(std::move(score));
        } else {
            log::warn("skipping malformed score line " + path.filename().string() + ":" + std::to_string(lineno));
        }
    }
    return out;
}

namespace {

ordered_json report_to_json(const DomainReport& report) {
    ordered_json j;
    j["domain"] = report.domain;
    j["name"] = report.name;
    j["site_url"] = report.site_url;
    j["countries"] = report.countries;
    j["bucket"] = std::string(to_string(report.classification.bucket));
    j["definite"] = report.definite;
    j["max_score"] = report.max_score;
    if (report.min_nonzero_score.has_value()) {
        j["min_nonzero_score"] = *report.min_nonzero_score;
    } else {
        j["min_nonzero_score"] = nullptr;
    }
    j["best_page"] = report.best_page;
    j["pages_scored"] = report.pages_scored;
    j["pages_ignored"] = report.pages_ignored;
    j["evidence"] = report.evidence;
    return j;
}

std::string format_score(double value) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(2) << value;
    return out.str();
}

void write_text_report(std::ostream& out, const std::vector<const DomainReport*>& reports,
                       const SummaryTable& table, const ReportOptions& options) {
    out << "2FA support scan report\n";
    out << "=======================\n\n";
    out << "Domains scanned:  " << table.total << "\n";
    out << "  definite:       " << table.definite << "\n";
    out << "  potential:      " << table.potential() << "  (likely: " << table.likely
        << ", weak: " << table.potential_weak << ")\n";
    out << "  no match:       " << table.no_match << "\n";
    out << "  no pages:       " << table.no_pages << "\n\n";

    out << "Max-score distribution over potential domains:\n";
    out << "  below " << format_score(options.distribution_low) << ":     " << table.distribution_below << "\n";
    out << "  " << format_score(options.distribution_low) << " to " << format_score(options.distribution_high)
        << ":   " << table.distribution_within << "\n";
    out << "  above " << format_score(options.distribution_high) << ":     " << table.distribution_above
        << "\n\n";

    if (!table.per_country.empty()) {
        out << "Domains by country:\n";
        for (const auto& [country, count] : table.per_country) {
            out << "  " << std::left << std::setw(24) << country << ' ' << count << "\n";
        }
        out << "\n";
    }

    std::size_t domain_width = 6;
    for (const auto* report : reports) {
        domain_width = std::max(domain_width, report->domain.size());
    }
    out << std::left << std::setw(static_cast<int>(domain_width)) << "domain" << "  "
        << std::setw(14) << "bucket" << std::setw(8) << "max" << std::setw(8) << "min>0"
        << "best page\n";
    out << std::string(domain_width + 2 + 14 + 8 + 8 + 9, '-') << "\n";
    for (const auto* report : reports) {
        const bool definite = report->classification.bucket == Bucket::Definite;
        out << std::left << std::setw(static_cast<int>(domain_width)) << report->domain << "  "
            << std::setw(14) << to_string(report->classification.bucket)
            << std::setw(8) << (definite ? std::string("-") : format_score(report->max_score))
            << std::setw(8)
            << (report->min_nonzero_score.has_value() ? format_score(*report->min_nonzero_score)
                                                      : std::string("-"))
            << report->best_page << "\n";
    }

    out << "\nNote: definite counts are raw pattern matches. In a manual spot check of\n"
           "this scheme, roughly one in five definite matches (about 20%) turned out\n"
           "to be a false positive, so read definite counts as an upper bound rather\n"
           "than confirmed 2FA support.\n";
}

}  // namespace

void write_report_files(const std::filesystem::path& dir, const std::vector<DomainReport>& reports,
                        const ReportOptions& options) {
    std::filesystem::create_directories(dir);

    std::vector<const DomainReport*> sorted;
    sorted.reserve(reports.size());
    for (const auto& report : reports) {
        sorted.push_back(&report);
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const DomainReport* a, const DomainReport* b) { return a->domain < b->domain; });

    SummaryTable table = summarize(reports, options);

    ordered_json summary;
    summary["total"] = table.total;
    summary["definite"] = table.definite;
    summary["potential"] = table.potential();
    summary["likely"] = table.likely;
    summary["potential_weak"] = table.potential_weak;
    summary["no_match"] = table.no_match;
    summary["no_pages"] = table.no_pages;
    summary["likely_threshold"] = options.likely_threshold;
    ordered_json distribution;
    distribution["low"] = options.distribution_low;
    distribution["high"] = options.distribution_high;
    distribution["below"] = table.distribution_below;
    distribution["within"] = table.distribution_within;
    distribution["above"] = table.distribution_above;
    summary["distribution"] = distribution;
    ordered_json countries = ordered_json::object();
    for (const auto& [country, count] : table.per_country) {
        countries[country] = count;
    }
    summary["countries"] = countries;

    ordered_json root;
    root["summary"] = summary;
    ordered_json domains = ordered_json::array();
    for (const auto* report : sorted) {
        domains.push_back(report_to_json(*report));
    }
    root["domains"] = domains;

    {
        std::ofstream out(dir / "report.json", std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write report.json under " + dir.string());
        }
        out << root.dump(2) << '\n';
    }
    {
        std::ofstream out(dir / "report.txt", std::ios::binary | std::ios::trunc);
        if (!out) {
            throw ConfigError("cannot write report.txt under " + dir.string());
        }
        write_text_report(out, sorted, table, options);
    }
}

}
