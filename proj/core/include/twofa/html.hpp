#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twofa {

struct HtmlLink {
    std::string href;  // raw attribute value, entities decoded
    std::string text;  // visible text inside the anchor
};

/// Visible text of a document. Script/style/template contents and comments are
/// removed, block-level elements separate paragraphs (joined with "\n\n"),
/// inline elements concatenate, entities are decoded and whitespace runs are
/// collapsed within a paragraph.
std::string html_to_text(std::string_view html);

/// Visible texts of anchor and button elements (plus the value of
/// input[type=button|submit|reset]) in document order. Duplicates are kept.
std::vector<std::string> extract_link_texts(std::string_view html);

/// All <a href=...> elements in document order with their visible text.
std::vector<HtmlLink> extract_links(std::string_view html);

/// Content of the first <title> element, whitespace-collapsed.
std::string extract_title(std::string_view html);

std::string decode_entities(std::string_view text);

namespace html_detail {

/// One event of the forward scanner. Tag and attribute names are lowercased;
/// attribute values and text are entity-decoded. Contents of script, style and
/// template elements are consumed without producing events.
struct HtmlEvent {
    enum class Kind { StartTag, EndTag, Text };
    Kind kind;
    std::string tag;
    std::vector<std::pair<std::string, std::string>> attrs;
    std::string text;
    bool self_closing = false;

    std::string attr(std::string_view name) const;
};

class HtmlScanner {
  public:
    explicit HtmlScanner(std::string_view html) : html_(html) {}
    bool next(HtmlEvent& ev);

  private:
    std::string_view html_;
    size_t pos_ = 0;
};

bool is_block_tag(std::string_view tag);

}  // namespace html_detail

}  // namespace twofa
