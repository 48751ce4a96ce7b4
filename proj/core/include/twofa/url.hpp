#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace twofa {

/// Parsed absolute URL. Scheme and host are stored lowercased; path, query and
/// fragment keep their original case.
struct Url {
    std::string scheme;
    std::string host;
    std::string port;
    std::string path;
    std::string query;
    std::string fragment;
    bool valid = false;

    std::string origin() const;  // scheme://host[:port]
    std::string str() const;
};

Url parse_url(std::string_view raw);

/// Resolve `ref` against absolute `base` (RFC 3986 style, covering the cases a
/// crawler meets: absolute refs, protocol-relative, absolute paths, relative
/// paths with ./ and ../ segments, query-only and fragment-only refs).
std::optional<std::string> resolve_url(const std::string& base, std::string_view ref);

/// Canonical form used for the visited set: lowercase scheme and host, drop the
/// fragment, keep the query, empty path becomes "/".
std::string normalize_url(const std::string& absolute);

/// Host lowercased with a leading "www." stripped.
std::string registrable_domain(std::string_view host);

/// True when host equals the seed domain or is a subdomain of it.
bool host_within(std::string_view host, std::string_view seed_domain);

}  // namespace twofa
