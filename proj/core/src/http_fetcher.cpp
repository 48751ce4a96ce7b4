#include <httplib.h>

#include "twofa/crawler.hpp"
#include "twofa/url.hpp"

namespace twofa {

HttpFetcher::HttpFetcher(std::chrono::milliseconds timeout, std::string base_url_override)
    : timeout_(timeout), base_url_override_(std::move(base_url_override)) {}

FetchResult HttpFetcher::fetch(const std::string& url) {
    FetchResult result;
    Url u = parse_url(url);
    if (!u.valid || (u.scheme != "http" && u.scheme != "https")) {
        result.error = "unsupported url: " + url;
        return result;
    }

    std::string origin = base_url_override_.empty() ? u.origin() : base_url_override_;
    httplib::Client client(origin);
    client.set_connection_timeout(timeout_);
    client.set_read_timeout(timeout_);
    client.set_write_timeout(timeout_);
    // Redirect targets would bypass the override, so only follow them when
    // talking to the real origin.
    client.set_follow_location(base_url_override_.empty());

    httplib::Headers headers{
        {"User-Agent", "twofa-scan/0.1"},
        {"Accept", "text/html,application/xhtml+xml;q=0.9,*/*;q=0.5"},
    };
    if (!base_url_override_.empty()) {
        std::string host = u.host;
        if (!u.port.empty()) {
            host += ":" + u.port;
        }
        headers.emplace("Host", host);
    }

    std::string target = u.path.empty() ? "/" : u.path;
    if (!u.query.empty()) {
        target += "?" + u.query;
    }

    httplib::Result response = client.Get(target, headers);
    if (!response) {
        result.error = "fetch error: " + httplib::to_string(response.error());
        return result;
    }
    result.status = response->status;
    result.ok = response->status >= 200 && response->status < 300;
    result.body = response->body;
    if (!result.ok) {
        result.error = "http status " + std::to_string(response->status);
    }
    return result;
}

}
