#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace twofa {

// One saved page.  html holds sanitized UTF-8; matched_keyword records why
// the URL was kept.
struct PageRecord {
    std::string url;
    std::string domain;
    int depth = 0;
    std::string fetched_at;
    std::string html;
    std::string matched_keyword;
};

std::string page_record_to_json(const PageRecord& record);

// Parses one corpus line.  Returns false (leaving record untouched) on
// malformed JSON or missing fields.
bool page_record_from_json(const std::string& line, PageRecord& record);

// Writes one domain's pages to <dir>/<domain>.jsonl, one JSON object per
// line.  The file is truncated on construction, so a re-crawl replaces the
// previous capture even when nothing is saved.  append() is thread-safe.
class CorpusWriter {
public:
    CorpusWriter(const std::filesystem::path& dir, const std::string& domain);

    void append(const PageRecord& record);

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mutex_;
};

// Loads every <domain>.jsonl under dir (files starting with '_' are skipped)
// into a map keyed by domain, sorted.  Malformed lines are dropped and
// counted in skipped_lines when provided.
std::map<std::string, std::vector<PageRecord>> load_corpus(const std::filesystem::path& dir,
                                                           std::size_t* skipped_lines = nullptr);

}
