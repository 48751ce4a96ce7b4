#include "twofa/url.hpp"

#include <algorithm>
#include <vector>

#include "twofa/strings.hpp"

namespace twofa {

namespace {

bool valid_scheme(std::string_view s) {
    if (s.empty() || !is_ascii_alpha(s[0])) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return is_ascii_alnum(c) || c == '+' || c == '-' || c == '.';
    });
}

// Remove ./ and ../ segments (RFC 3986 5.2.4).
std::string remove_dot_segments(std::string_view path) {
    std::vector<std::string> segs;
    bool trailing_slash = false;
    size_t i = 0;
    while (i < path.size()) {
        size_t j = path.find('/', i);
        std::string seg;
        if (j == std::string_view::npos) {
            seg = std::string(path.substr(i));
            i = path.size();
        } else {
            seg = std::string(path.substr(i, j - i));
            i = j + 1;
        }
        if (seg == ".") {
            trailing_slash = true;
        } else if (seg == "..") {
            if (!segs.empty()) segs.pop_back();
            trailing_slash = true;
        } else if (seg.empty()) {
            trailing_slash = true;
        } else {
            segs.push_back(seg);
            trailing_slash = (j != std::string_view::npos && i == path.size());
        }
    }
    std::string out;
    for (const auto& s : segs) {
        out.push_back('/');
        out.append(s);
    }
    if (out.empty() || (trailing_slash && path.size() > 1)) {
        if (path.ends_with('/') || out.empty()) out.push_back('/');
    }
    return out;
}

}  // namespace

std::string Url::origin() const {
    std::string out = scheme + "://" + host;
    if (!port.empty()) out += ":" + port;
    return out;
}

std::string Url::str() const {
    std::string out = origin() + path;
    if (!query.empty()) out += "?" + query;
    if (!fragment.empty()) out += "#" + fragment;
    return out;
}

Url parse_url(std::string_view raw) {
    Url u;
    std::string_view s = trim(raw);
    size_t colon = s.find(':');
    if (colon == std::string_view::npos || !valid_scheme(s.substr(0, colon))) return u;
    u.scheme = to_lower(s.substr(0, colon));
    s.remove_prefix(colon + 1);

    if (s.substr(0, 2) == "//") {
        s.remove_prefix(2);
        size_t end = s.find_first_of("/?#");
        std::string_view authority = s.substr(0, end);
        s = (end == std::string_view::npos) ? std::string_view{} : s.substr(end);
        size_t at = authority.rfind('@');
        if (at != std::string_view::npos) authority = authority.substr(at + 1);
        size_t pcolon = authority.rfind(':');
        if (pcolon != std::string_view::npos &&
            authority.find(']') == std::string_view::npos) {
            std::string_view port = authority.substr(pcolon + 1);
            if (std::all_of(port.begin(), port.end(), is_ascii_digit)) {
                u.port = std::string(port);
                authority = authority.substr(0, pcolon);
            }
        }
        u.host = to_lower(authority);
    }

    size_t qpos = s.find('?');
    size_t fpos = s.find('#');
    size_t path_end = std::min(qpos, fpos);
    u.path = std::string(s.substr(0, path_end));
    if (qpos != std::string_view::npos && (fpos == std::string_view::npos || qpos < fpos)) {
        u.query = std::string(s.substr(qpos + 1, fpos == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : fpos - qpos - 1));
    }
    if (fpos != std::string_view::npos) u.fragment = std::string(s.substr(fpos + 1));

    if (u.scheme == "http" || u.scheme == "https") {
        u.valid = !u.host.empty();
    } else {
        u.valid = true;  // file:, mailto:, tel: and friends; callers filter by scheme
    }
    if (u.valid && !u.host.empty() && u.path.empty()) u.path = "/";
    return u;
}

std::optional<std::string> resolve_url(const std::string& base, std::string_view ref) {
    std::string_view r = trim(ref);
    if (r.empty()) return base;

    Url refu = parse_url(r);
    if (refu.valid && !refu.scheme.empty()) return refu.str();

    Url b = parse_url(base);
    if (!b.valid || b.scheme.empty()) return std::nullopt;

    if (r.substr(0, 2) == "//") {
        Url net = parse_url(std::string(b.scheme) + ":" + std::string(r));
        if (!net.valid) return std::nullopt;
        return net.str();
    }

    Url out = b;
    out.fragment.clear();
    if (r[0] == '#') {
        out.fragment = std::string(r.substr(1));
        return out.str();
    }
    if (r[0] == '?') {
        size_t f = r.find('#');
        out.query = std::string(r.substr(1, f == std::string_view::npos
                                                ? std::string_view::npos
                                                : f - 1));
        if (f != std::string_view::npos) out.fragment = std::string(r.substr(f + 1));
        return out.str();
    }

    size_t frag = r.find('#');
    if (frag != std::string_view::npos) {
        out.fragment = std::string(r.substr(frag + 1));
        r = r.substr(0, frag);
    }
    size_t q = r.find('?');
    out.query.clear();
    if (q != std::string_view::npos) {
        out.query = std::string(r.substr(q + 1));
        r = r.substr(0, q);
    }

    if (!r.empty() && r[0] == '/') {
        out.path = remove_dot_segments(r);
    } else {
        std::string_view dir = b.path;
        size_t slash = dir.rfind('/');
        dir = (slash == std::string_view::npos) ? std::string_view{} : dir.substr(0, slash + 1);
        std::string merged = std::string(dir);
        if (merged.empty()) merged = "/";
        merged.append(r);
        out.path = remove_dot_segments(merged);
    }
    if (out.path.empty()) out.path = "/";
    return out.str();
}

std::string normalize_url(const std::string& absolute) {
    Url u = parse_url(absolute);
    if (!u.valid) return absolute;
    u.fragment.clear();
    if (!u.host.empty() && u.path.empty()) u.path = "/";
    return u.str();
}

std::string registrable_domain(std::string_view host) {
    std::string h = to_lower(trim(host));
    if (h.rfind("www.", 0) == 0 && h.size() > 4) h = h.substr(4);
    return h;
}

bool host_within(std::string_view host, std::string_view seed_domain) {
    if (host.empty() || seed_domain.empty()) return false;
    std::string h = to_lower(host);
    std::string d = to_lower(seed_domain);
    if (h == d) return true;
    if (h.size() > d.size() && h.ends_with(d) && h[h.size() - d.size() - 1] == '.') {
        return true;
    }
    return false;
}

}  // namespace twofa
