#include "twofa/corpus.hpp"

#include <json.hpp>

#include "twofa/errors.hpp"
#include "twofa/log.hpp"
#include "twofa/strings.hpp"

namespace twofa {

using ordered_json = nlohmann::ordered_json;

std::string page_record_to_json(const PageRecord& record) {
    ordered_json j;
    j["url"] = record.url;
    j["domain"] = record.domain;
    j["depth"] = record.depth;
    j["fetched_at"] = record.fetched_at;
    j["matched_keyword"] = record.matched_keyword;
    j["html"] = record.html;
    return j.dump();
}

bool page_record_from_json(const std::string& line, PageRecord& record) {
    ordered_json j = ordered_json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        return false;
    }
    if (!j.contains("url") || !j["url"].is_string() || !j.contains("html") || !j["html"].is_string()) {
        return false;
    }
    PageRecord out;
    out.url = j["url"].get<std::string>();
    out.html = j["html"].get<std::string>();
    out.domain = j.value("domain", "");
    out.depth = j.value("depth", 0);
    out.fetched_at = j.value("fetched_at", "");
    out.matched_keyword = j.value("matched_keyword", "");
    record = std::move(out);
    return true;
}

CorpusWriter::CorpusWriter(const std::filesystem::path& dir, const std::string& domain) {
    std::filesystem::create_directories(dir);
    path_ = dir / (domain + ".jsonl");
    out_.open(path_, std::ios::binary | std::ios::trunc);
    if (!out_) {
        throw ConfigError("cannot open corpus file for writing: " + path_.string());
    }
}

void CorpusWriter::append(const PageRecord& record) {
    std::lock_guard<std::mutex> lock(mutex_);
    out_ << page_record_to_json(record) << '\n';
    out_.flush();
}

std::map<std::string, std::vector<PageRecord>> load_corpus(const std::filesystem::path& dir,
                                                           std::size_t* skipped_lines) {
    if (!std::filesystem::is_directory(dir)) {
        throw ConfigError("corpus directory does not exist: " + dir.string());
    }
    std::map<std::string, std::vector<PageRecord>> out;
    std::size_t skipped = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".jsonl") {
            continue;
        }
        std::string stem = entry.path().stem().string();
        if (stem.empty() || stem.front() == '_') {
            continue;
        }
        auto& pages = out[stem];
        std::ifstream in(entry.path(), std::ios::binary);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (trim(line).empty()) {
                continue;
            }
            PageRecord record;
            if (page_record_from_json(line, record)) {
                pages.push_back(std::move(record));
            } else {
                ++skipped;
                log::warn("skipping malformed corpus line " + entry.path().filename().string() + ":" +
                          std::to_string(lineno));
            }
        }
    }
    if (skipped_lines != nullptr) {
        *skipped_lines = skipped;
    }
    return out;
}

}
