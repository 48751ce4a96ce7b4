#include "twofa/seed_ingest.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "twofa/errors.hpp"
#include "twofa/html.hpp"
#include "twofa/log.hpp"
#include "twofa/strings.hpp"
#include "twofa/url.hpp"

namespace twofa {

using html_detail::HtmlEvent;
using html_detail::HtmlScanner;
using ordered_json = nlohmann::ordered_json;

namespace {

bool is_heading_tag(const std::string& tag) {
    return tag == "h2" || tag == "h3" || tag == "h4";
}

bool skippable_href(const std::string& href) {
    if (href.empty() || href.front() == '#') {
        return true;
    }
    std::string lowered = to_lower(href);
    return lowered.rfind("javascript:", 0) == 0 || lowered.rfind("mailto:", 0) == 0;
}

std::string clean_heading(std::string text) {
    text = collapse_whitespace(text);
    // Wikipedia-style headings may carry a trailing edit affordance.
    const std::string edit_suffix = "[edit]";
    if (text.size() > edit_suffix.size() && text.compare(text.size() - edit_suffix.size(), edit_suffix.size(), edit_suffix) == 0) {
        text = collapse_whitespace(text.substr(0, text.size() - edit_suffix.size()));
    }
    return text;
}

// True when href points at a different site than the page it appears on.
// For file:// fixture pages every absolute http(s) link counts as external.
bool is_external_link(const Url& target, const Url& page) {
    if (!target.valid || (target.scheme != "http" && target.scheme != "https") || target.host.empty()) {
        return false;
    }
    if (page.scheme == "file" || page.host.empty()) {
        return true;
    }
    return registrable_domain(target.host) != registrable_domain(page.host);
}

}  // namespace

std::vector<RegionIndexItem> parse_region_index(const std::string& html, const std::string& base_url) {
    std::vector<RegionIndexItem> out;
    std::size_t headings = 0;

    std::string country;
    bool in_heading = false;
    std::string heading_text;
    std::string anchor_href;
    bool in_anchor = false;

    HtmlScanner scanner(html);
    HtmlEvent ev;
    while (scanner.next(ev)) {
        switch (ev.kind) {
            case HtmlEvent::Kind::StartTag:
                if (is_heading_tag(ev.tag)) {
                    in_heading = true;
                    heading_text.clear();
                } else if (ev.tag == "a" && !in_heading && !country.empty()) {
                    anchor_href = ev.attr("href");
                    in_anchor = !ev.self_closing;
                    if (!in_anchor) {
                        anchor_href.clear();
                    }
                }
                break;
            case HtmlEvent::Kind::EndTag:
                if (is_heading_tag(ev.tag) && in_heading) {
                    in_heading = false;
                    ++headings;
                    std::string label = clean_heading(heading_text);
                    if (!label.empty()) {
                        country = label;
                    }
                } else if (ev.tag == "a" && in_anchor) {
                    in_anchor = false;
                    if (!skippable_href(anchor_href)) {
                        if (auto resolved = resolve_url(base_url, anchor_href)) {
                            out.push_back({country, normalize_url(*resolved)});
                        } else {
                            log::warn("dropping unresolvable link '" + anchor_href + "' under '" + country + "'");
                        }
                    }
                    anchor_href.clear();
                }
                break;
            case HtmlEvent::Kind::Text:
                if (in_heading) {
                    heading_text += ev.text;
                }
                break;
        }
    }

    if (headings == 0) {
        log::warn("region index contains no country headings; nothing ingested");
    }
    return out;
}

std::optional<BankEntry> extract_bank_entry(const std::string& html, const std::string& page_url,
                                            const std::string& country) {
    Url page = parse_url(page_url);

    struct RowLink {
        std::string label;
        std::string url;
    };
    std::vector<RowLink> row_links;
    std::vector<std::string> body_links;

    bool in_row = false;
    bool in_cell = false;
    bool first_cell = false;
    std::string row_label;
    std::string cell_text;

    bool in_anchor = false;
    std::string anchor_href;

    bool in_h1 = false;
    std::string h1_text;
    bool h1_done = false;

    auto flush_anchor = [&]() {
        if (!in_anchor) {
            return;
        }
        in_anchor = false;
        if (skippable_href(anchor_href)) {
            return;
        }
        auto resolved = resolve_url(page_url, anchor_href);
        if (!resolved || !is_external_link(parse_url(*resolved), page)) {
            return;
        }
        std::string normalized = normalize_url(*resolved);
        body_links.push_back(normalized);
        if (in_row) {
            row_links.push_back({to_lower(collapse_whitespace(row_label)), normalized});
        }
    };

    HtmlScanner scanner(html);
    HtmlEvent ev;
    while (scanner.next(ev)) {
        switch (ev.kind) {
            case HtmlEvent::Kind::StartTag:
                if (ev.tag == "tr") {
                    in_row = true;
                    first_cell = true;
                    row_label.clear();
                } else if ((ev.tag == "th" || ev.tag == "td") && in_row) {
                    in_cell = first_cell;
                    cell_text.clear();
                } else if (ev.tag == "a") {
                    anchor_href = ev.attr("href");
                    in_anchor = !ev.self_closing;
                } else if (ev.tag == "h1" && !h1_done) {
                    in_h1 = true;
                    h1_text.clear();
                }
                break;
            case HtmlEvent::Kind::EndTag:
                if (ev.tag == "tr") {
                    in_row = false;
                } else if (ev.tag == "th" || ev.tag == "td") {
                    if (in_cell) {
                        row_label = cell_text;
                        first_cell = false;
                        in_cell = false;
                    }
                } else if (ev.tag == "a") {
                    flush_anchor();
                } else if (ev.tag == "h1" && in_h1) {
                    in_h1 = false;
                    h1_done = true;
                }
                break;
            case HtmlEvent::Kind::Text:
                if (in_cell) {
                    cell_text += ev.text;
                }
                if (in_h1) {
                    h1_text += ev.text;
                }
                break;
        }
    }

    std::string site_url;
    for (const auto& link : row_links) {
        if (link.label.find("website") != std::string::npos) {
            site_url = link.url;
            break;
        }
    }
    if (site_url.empty() && !body_links.empty()) {
        site_url = body_links.front();
    }
    if (site_url.empty()) {
        return std::nullopt;
    }

    std::string name = collapse_whitespace(h1_text);
    if (name.empty()) {
        name = extract_title(html);
        const std::string wiki_suffix = " - Wikipedia";
        if (name.size() > wiki_suffix.size() &&
            name.compare(name.size() - wiki_suffix.size(), wiki_suffix.size(), wiki_suffix) == 0) {
            name = name.substr(0, name.size() - wiki_suffix.size());
        }
    }
    if (name.empty()) {
        name = parse_url(site_url).host;
    }

    BankEntry entry;
    entry.name = name;
    entry.site_url = site_url;
    entry.countries = {country};
    entry.source_page = page_url;
    return entry;
}

std::string seed_domain(const BankEntry& entry) {
    return registrable_domain(parse_url(entry.site_url).host);
}

std::vector<BankEntry> dedupe_entries(const std::vector<BankEntry>& entries) {
    std::vector<BankEntry> out;
    std::vector<std::string> keys;
    for (const auto& entry : entries) {
        std::string key = seed_domain(entry);
        std::size_t found = keys.size();
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (keys[i] == key) {
                found = i;
                break;
            }
        }
        if (found == keys.size()) {
            keys.push_back(key);
            out.push_back(entry);
            continue;
        }
        auto& merged = out[found].countries;
        for (const auto& country : entry.countries) {
            if (std::find(merged.begin(), merged.end(), country) == merged.end()) {
                merged.push_back(country);
            }
        }
    }
    return out;
}

std::string bank_entry_to_json(const BankEntry& entry) {
    ordered_json j;
    j["name"] = entry.name;
    j["site_url"] = entry.site_url;
    j["countries"] = entry.countries;
    j["source_page"] = entry.source_page;
    return j.dump();
}

bool bank_entry_from_json(const std::string& line, BankEntry& entry) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        return false;
    }
    if (!j.contains("site_url") || !j["site_url"].is_string()) {
        return false;
    }
    BankEntry out;
    out.site_url = j["site_url"].get<std::string>();
    out.name = j.value("name", "");
    out.source_page = j.value("source_page", "");
    if (j.contains("countries") && j["countries"].is_array()) {
        for (const auto& c : j["countries"]) {
            if (c.is_string()) {
                out.countries.push_back(c.get<std::string>());
            }
        }
    }
    if (out.countries.empty()) {
        return false;
    }
    entry = std::move(out);
    return true;
}

void write_seeds(const std::filesystem::path& path, const std::vector<BankEntry>& entries) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot open seed file for writing: " + path.string());
    }
    for (const auto& entry : entries) {
        out << bank_entry_to_json(entry) << '\n';
    }
}

std::vector<BankEntry> load_seeds(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read seed file: " + path.string());
    }
    std::vector<BankEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        BankEntry entry;
        if (bank_entry_from_json(line, entry)) {
            out.push_back(std::move(entry));
        } else {
            log::warn("skipping malformed seed line " + path.filename().string() + ":" + std::to_string(lineno));
        }
    }
    return out;
}

}
