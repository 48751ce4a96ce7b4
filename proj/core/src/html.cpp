#include "twofa/html.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "twofa/strings.hpp"

namespace twofa {

namespace {

void append_codepoint(std::string& out, uint32_t cp) {
    if (cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        out.append("\xEF\xBF\xBD");
        return;
    }
    if (cp == 0xA0) {  // non-breaking space folds into plain space for matching
        out.push_back(' ');
        return;
    }
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

const std::unordered_map<std::string, uint32_t>& named_entities() {
    static const std::unordered_map<std::string, uint32_t> table = {
        {"amp", '&'},      {"lt", '<'},       {"gt", '>'},      {"quot", '"'},
        {"apos", '\''},    {"nbsp", 0xA0},    {"copy", 0xA9},   {"reg", 0xAE},
        {"trade", 0x2122}, {"mdash", 0x2014}, {"ndash", 0x2013}, {"hellip", 0x2026},
        {"lsquo", 0x2018}, {"rsquo", 0x2019}, {"ldquo", 0x201C}, {"rdquo", 0x201D},
        {"bull", 0x2022},  {"middot", 0xB7},  {"deg", 0xB0},    {"plusmn", 0xB1},
        {"times", 0xD7},   {"divide", 0xF7},  {"pound", 0xA3},  {"euro", 0x20AC},
        {"cent", 0xA2},    {"yen", 0xA5},     {"sect", 0xA7},   {"para", 0xB6},
        {"shy", 0xAD},     {"laquo", 0xAB},   {"raquo", 0xBB},
    };
    return table;
}

const std::unordered_set<std::string>& void_tags() {
    static const std::unordered_set<std::string> tags = {
        "area", "base", "br", "col", "embed", "hr", "img", "input",
        "link", "meta", "param", "source", "track", "wbr",
    };
    return tags;
}

}  // namespace

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '&') {
            out.push_back(c);
            ++i;
            continue;
        }
        size_t semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(c);
            ++i;
            continue;
        }
        std::string_view body = text.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (size_t j = 2; j < body.size() && ok; ++j) {
                    char h = ascii_lower(body[j]);
                    if (is_ascii_digit(h)) cp = cp * 16 + (h - '0');
                    else if (h >= 'a' && h <= 'f') cp = cp * 16 + (h - 'a' + 10);
                    else ok = false;
                    if (cp > 0x110000) ok = false;
                }
                ok = ok && body.size() > 2;
            } else {
                for (size_t j = 1; j < body.size() && ok; ++j) {
                    if (is_ascii_digit(body[j])) cp = cp * 10 + (body[j] - '0');
                    else ok = false;
                    if (cp > 0x110000) ok = false;
                }
            }
            if (ok) {
                append_codepoint(out, cp);
                i = semi + 1;
                continue;
            }
        } else {
            auto it = named_entities().find(std::string(body));
            if (it != named_entities().end()) {
                append_codepoint(out, it->second);
                i = semi + 1;
                continue;
            }
        }
        out.push_back(c);
        ++i;
    }
    return out;
}

namespace html_detail {

std::string HtmlEvent::attr(std::string_view name) const {
    for (const auto& [k, v] : attrs) {
        if (k == name) return v;
    }
    return {};
}

bool is_block_tag(std::string_view tag) {
    static const std::unordered_set<std::string> blocks = {
        "address", "article", "aside", "blockquote", "body", "br", "caption",
        "center", "dd", "details", "dialog", "div", "dl", "dt", "fieldset",
        "figcaption", "figure", "footer", "form", "h1", "h2", "h3", "h4", "h5",
        "h6", "head", "header", "hr", "html", "legend", "li", "main", "menu",
        "nav", "ol", "option", "p", "pre", "section", "select", "summary",
        "table", "tbody", "td", "tfoot", "th", "thead", "tr", "ul",
    };
    return blocks.count(std::string(tag)) > 0;
}

bool HtmlScanner::next(HtmlEvent& ev) {
    while (pos_ < html_.size()) {
        if (html_[pos_] != '<') {
            size_t lt = html_.find('<', pos_);
            if (lt == std::string_view::npos) lt = html_.size();
            ev = HtmlEvent{};
            ev.kind = HtmlEvent::Kind::Text;
            ev.text = decode_entities(html_.substr(pos_, lt - pos_));
            pos_ = lt;
            return true;
        }

        // comment
        if (html_.compare(pos_, 4, "<!--") == 0) {
            size_t end = html_.find("-->", pos_ + 4);
            pos_ = (end == std::string_view::npos) ? html_.size() : end + 3;
            continue;
        }
        // doctype, CDATA and other <! / <? constructs
        if (pos_ + 1 < html_.size() && (html_[pos_ + 1] == '!' || html_[pos_ + 1] == '?')) {
            size_t end = html_.find('>', pos_);
            pos_ = (end == std::string_view::npos) ? html_.size() : end + 1;
            continue;
        }

        bool closing = pos_ + 1 < html_.size() && html_[pos_ + 1] == '/';
        size_t name_start = pos_ + (closing ? 2 : 1);
        if (name_start >= html_.size() || !is_ascii_alpha(html_[name_start])) {
            // stray '<' is literal text
            ev = HtmlEvent{};
            ev.kind = HtmlEvent::Kind::Text;
            ev.text = "<";
            ++pos_;
            return true;
        }

        size_t i = name_start;
        while (i < html_.size() && (is_ascii_alnum(html_[i]) || html_[i] == '-' ||
                                    html_[i] == ':')) {
            ++i;
        }
        ev = HtmlEvent{};
        ev.kind = closing ? HtmlEvent::Kind::EndTag : HtmlEvent::Kind::StartTag;
        ev.tag = to_lower(html_.substr(name_start, i - name_start));

        // attributes
        while (i < html_.size() && html_[i] != '>') {
            char c = html_[i];
            if (c == '/' && i + 1 < html_.size() && html_[i + 1] == '>') {
                ev.self_closing = true;
                ++i;
                continue;
            }
            if (!is_ascii_alpha(c) && c != '_') {
                ++i;
                continue;
            }
            size_t an = i;
            while (i < html_.size() && html_[i] != '=' && html_[i] != '>' &&
                   html_[i] != '/' && !(html_[i] == ' ' || html_[i] == '\t' ||
                                        html_[i] == '\n' || html_[i] == '\r')) {
                ++i;
            }
            std::string aname = to_lower(html_.substr(an, i - an));
            while (i < html_.size() && (html_[i] == ' ' || html_[i] == '\t' ||
                                        html_[i] == '\n' || html_[i] == '\r')) {
                ++i;
            }
            std::string avalue;
            if (i < html_.size() && html_[i] == '=') {
                ++i;
                while (i < html_.size() && (html_[i] == ' ' || html_[i] == '\t' ||
                                            html_[i] == '\n' || html_[i] == '\r')) {
                    ++i;
                }
                if (i < html_.size() && (html_[i] == '"' || html_[i] == '\'')) {
                    char quote = html_[i++];
                    size_t vstart = i;
                    while (i < html_.size() && html_[i] != quote) ++i;
                    avalue = decode_entities(html_.substr(vstart, i - vstart));
                    if (i < html_.size()) ++i;
                } else {
                    size_t vstart = i;
                    while (i < html_.size() && html_[i] != '>' && html_[i] != ' ' &&
                           html_[i] != '\t' && html_[i] != '\n' && html_[i] != '\r') {
                        ++i;
                    }
                    avalue = decode_entities(html_.substr(vstart, i - vstart));
                }
            }
            if (!aname.empty()) ev.attrs.emplace_back(std::move(aname), std::move(avalue));
        }
        pos_ = (i < html_.size()) ? i + 1 : html_.size();

        // script/style/template content is never visible: consume up to the
        // matching close tag without emitting events
        if (ev.kind == HtmlEvent::Kind::StartTag && !ev.self_closing &&
            (ev.tag == "script" || ev.tag == "style" || ev.tag == "template")) {
            std::string close = "</" + ev.tag;
            size_t at = pos_;
            while (at < html_.size()) {
                size_t cand = html_.find('<', at);
                if (cand == std::string_view::npos) {
                    at = html_.size();
                    break;
                }
                if (cand + close.size() <= html_.size() &&
                    to_lower(html_.substr(cand, close.size())) == close) {
                    at = cand;
                    break;
                }
                at = cand + 1;
            }
            if (at < html_.size()) {
                size_t gt = html_.find('>', at);
                pos_ = (gt == std::string_view::npos) ? html_.size() : gt + 1;
            } else {
                pos_ = html_.size();
            }
            // report the element as an empty start+end pair
            ev.self_closing = true;
        }
        return true;
    }
    return false;
}

}  // namespace html_detail

using html_detail::HtmlEvent;
using html_detail::HtmlScanner;
using html_detail::is_block_tag;

std::string html_to_text(std::string_view html) {
    HtmlScanner scanner(html);
    HtmlEvent ev;
    std::vector<std::string> paragraphs;
    std::string current;
    int invisible_depth = 0;  // inside <title>

    auto flush = [&] {
        std::string para = collapse_whitespace(current);
        current.clear();
        if (!para.empty()) paragraphs.push_back(std::move(para));
    };

    while (scanner.next(ev)) {
        switch (ev.kind) {
            case HtmlEvent::Kind::Text:
                if (invisible_depth == 0) current.append(ev.text);
                break;
            case HtmlEvent::Kind::StartTag:
                if (ev.tag == "title" && !ev.self_closing) ++invisible_depth;
                if (is_block_tag(ev.tag)) flush();
                break;
            case HtmlEvent::Kind::EndTag:
                if (ev.tag == "title" && invisible_depth > 0) --invisible_depth;
                if (is_block_tag(ev.tag)) flush();
                break;
        }
    }
    flush();

    std::string out;
    for (size_t i = 0; i < paragraphs.size(); ++i) {
        if (i) out.append("\n\n");
        out.append(paragraphs[i]);
    }
    return out;
}

std::vector<std::string> extract_link_texts(std::string_view html) {
    HtmlScanner scanner(html);
    HtmlEvent ev;
    std::vector<std::string> out;
    // stack of open <a>/<button> captures; text accrues to every open capture
    std::vector<std::pair<std::string, std::string>> open;  // (tag, text)

    auto close_innermost = [&](const std::string& tag) {
        for (size_t i = open.size(); i-- > 0;) {
            if (open[i].first == tag) {
                out.push_back(collapse_whitespace(open[i].second));
                open.erase(open.begin() + static_cast<long>(i));
                return;
            }
        }
    };

    while (scanner.next(ev)) {
        switch (ev.kind) {
            case HtmlEvent::Kind::Text:
                for (auto& [tag, text] : open) text.append(ev.text);
                break;
            case HtmlEvent::Kind::StartTag:
                if (ev.tag == "a" || ev.tag == "button") {
                    if (!ev.self_closing) open.emplace_back(ev.tag, "");
                } else if (ev.tag == "input") {
                    std::string type = to_lower(ev.attr("type"));
                    if (type == "button" || type == "submit" || type == "reset") {
                        out.push_back(collapse_whitespace(ev.attr("value")));
                    }
                }
                break;
            case HtmlEvent::Kind::EndTag:
                if (ev.tag == "a" || ev.tag == "button") close_innermost(ev.tag);
                break;
        }
    }
    while (!open.empty()) {
        out.push_back(collapse_whitespace(open.back().second));
        open.pop_back();
    }
    return out;
}

std::vector<HtmlLink> extract_links(std::string_view html) {
    HtmlScanner scanner(html);
    HtmlEvent ev;
    std::vector<HtmlLink> out;
    bool capturing = false;
    HtmlLink current;

    auto finish = [&] {
        if (capturing) {
            current.text = collapse_whitespace(current.text);
            out.push_back(std::move(current));
            current = HtmlLink{};
            capturing = false;
        }
    };

    while (scanner.next(ev)) {
        switch (ev.kind) {
            case HtmlEvent::Kind::Text:
                if (capturing) current.text.append(ev.text);
                break;
            case HtmlEvent::Kind::StartTag:
                if (ev.tag == "a") {
                    finish();  // browsers implicitly close a dangling <a>
                    std::string href = ev.attr("href");
                    if (!href.empty()) {
                        capturing = true;
                        current.href = std::move(href);
                        if (ev.self_closing) finish();
                    }
                }
                break;
            case HtmlEvent::Kind::EndTag:
                if (ev.tag == "a") finish();
                break;
        }
    }
    finish();
    return out;
}

std::string extract_title(std::string_view html) {
    HtmlScanner scanner(html);
    HtmlEvent ev;
    bool in_title = false;
    std::string text;
    while (scanner.next(ev)) {
        if (ev.kind == HtmlEvent::Kind::StartTag && ev.tag == "title") {
            in_title = true;
        } else if (ev.kind == HtmlEvent::Kind::EndTag && ev.tag == "title") {
            break;
        } else if (ev.kind == HtmlEvent::Kind::Text && in_title) {
            text.append(ev.text);
        }
    }
    return collapse_whitespace(text);
}

}  // namespace twofa
