#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace twofa {

// One bank in the seed list.  countries keeps first-seen order and holds no
// duplicates; site_url is absolute http(s).
struct BankEntry {
    std::string name;
    std::string site_url;
    std::vector<std::string> countries;
    std::string source_page;

    bool operator==(const BankEntry&) const = default;
};

struct RegionIndexItem {
    std::string country;
    std::string bank_page_url;
};

// Walks a region index document: h2/h3/h4 headings become country labels and
// every subsequent link is paired with the current label, in document order.
// Fragment-only, javascript: and mailto: links are skipped; links that do not
// resolve against base_url are dropped with a warning.  A document with no
// headings yields an empty list and a diagnostic.
std::vector<RegionIndexItem> parse_region_index(const std::string& html, const std::string& base_url);

// Pulls the bank's name and official-site link out of one bank page.  The
// site link is the first external link in an infobox-style row whose label
// contains "website", falling back to the first external link anywhere in
// the page.  Returns nullopt when no external link exists.
std::optional<BankEntry> extract_bank_entry(const std::string& html, const std::string& page_url,
                                            const std::string& country);

// Merges entries sharing a registrable domain: countries become the union in
// first-seen order, everything else comes from the first entry.  Idempotent.
std::vector<BankEntry> dedupe_entries(const std::vector<BankEntry>& entries);

// Registrable-domain key used for merging and corpus file names: lowercased
// host with a leading "www." stripped.
std::string seed_domain(const BankEntry& entry);

std::string bank_entry_to_json(const BankEntry& entry);
bool bank_entry_from_json(const std::string& line, BankEntry& entry);

void write_seeds(const std::filesystem::path& path, const std::vector<BankEntry>& entries);

// Throws ConfigError when the file cannot be read; malformed lines are
// dropped with a warning.
std::vector<BankEntry> load_seeds(const std::filesystem::path& path);

}
