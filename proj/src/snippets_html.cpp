#include <algorithm>
#include <array>

#include "scenariodoc/snippets.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

struct Tag {
  std::string name;  // lower-cased, without '/'
  bool closing = false;
  std::size_t begin = 0;
  std::size_t end = 0;  // one past '>'
};

std::optional<Tag> read_tag(std::string_view html, std::size_t pos) {
  if (pos >= html.size() || html[pos] != '<') return std::nullopt;
  std::size_t i = pos + 1;
  Tag tag;
  tag.begin = pos;
  if (i < html.size() && html[i] == '/') {
    tag.closing = true;
    ++i;
  }
  const std::size_t name_start = i;
  while (i < html.size() && (text::is_ident_char(html[i]) || html[i] == '-')) ++i;
  if (i == name_start) return std::nullopt;  // "<" used as text, e.g. "a < b"
  tag.name = text::to_lower(html.substr(name_start, i - name_start));
  const auto close = html.find('>', i);
  if (close == std::string_view::npos) return std::nullopt;
  tag.end = close + 1;
  return tag;
}

bool is_block_tag(std::string_view name) {
  static constexpr std::array<std::string_view, 20> kBlock{
      "p", "br", "div", "li", "ul", "ol", "h1", "h2", "h3", "h4", "h5", "h6",
      "blockquote", "pre", "tr", "table", "hr", "dd", "dt", "section"};
  return std::find(kBlock.begin(), kBlock.end(), name) != kBlock.end();
}

std::size_t find_ci(std::string_view hay, std::string_view needle, std::size_t from) {
  for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
    if (text::istarts_with(hay.substr(i), needle)) return i;
  }
  return std::string_view::npos;
}

// Removes tags inside a code block (e.g. <b> highlighting) and decodes entities.
std::string code_text(std::string_view inner) {
  std::string out;
  std::size_t i = 0;
  while (i < inner.size()) {
    if (inner[i] == '<') {
      if (auto tag = read_tag(inner, i)) {
        i = tag->end;
        continue;
      }
    }
    out.push_back(inner[i++]);
  }
  return text::decode_html_entities(out);
}

// A name such as "TypeToken", "org.json", "List<Data>" or "readValue()"; anything
// with arguments, operators or statements is code.
bool single_token(std::string_view s) {
  s = text::trim(s);
  if (s.size() > 2 && s.substr(s.size() - 2) == "()") s.remove_suffix(2);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return text::is_ident_char(c) || c == '.' || c == '<' || c == '>' || c == '@' || c == '#' || c == '-' ||
           c == ':' || c == '[' || c == ']' || c == ',';
  });
}

class BodySplitter {
 public:
  BodySplitter(std::string_view html, Diagnostics* diag) : html_(html), diag_(diag) {}

  std::vector<BodyBlock> run() {
    std::size_t i = 0;
    int pre_depth = 0;
    while (i < html_.size()) {
      if (html_[i] != '<') {
        const auto next = html_.find('<', i + 1);
        const std::size_t stop = next == std::string_view::npos ? html_.size() : next;
        append_text(html_.substr(i, stop - i), i);
        i = stop;
        continue;
      }
      const auto tag = read_tag(html_, i);
      if (!tag) {
        append_text(html_.substr(i, 1), i);
        ++i;
        continue;
      }
      if (tag->name == "pre") {
        pre_depth += tag->closing ? -1 : 1;
        pre_depth = std::max(pre_depth, 0);
        paragraph_break(tag->begin);
        i = tag->end;
        if (!tag->closing) {
          // <pre> without a nested <code>: the whole block is code.
          std::size_t j = i;
          while (j < html_.size() && text::is_space(html_[j])) ++j;
          const auto inner = read_tag(html_, j);
          if (!inner || inner->name != "code" || inner->closing) {
            auto close = find_ci(html_, "</pre", i);
            if (close == std::string_view::npos) {
              warn_into(diag_, "unterminated <pre> block; took text to end of body");
              close = html_.size();
            }
            emit_code(code_text(html_.substr(i, close - i)), i, close, false);
            i = close;
          }
        }
        continue;
      }
      if (tag->name == "code" && !tag->closing) {
        auto close = find_ci(html_, "</code", tag->end);
        std::size_t resume = 0;
        if (close == std::string_view::npos) {
          warn_into(diag_, "unterminated <code> span at offset " + std::to_string(tag->begin) +
                               "; took text to end of body");
          close = html_.size();
          resume = close;
        } else {
          const auto gt = html_.find('>', close);
          resume = gt == std::string_view::npos ? html_.size() : gt + 1;
        }
        auto content = code_text(html_.substr(tag->end, close - tag->end));
        const bool is_inline = pre_depth == 0;
        if (is_inline && single_token(content)) {
          append_decoded(std::string(text::trim(content)), tag->begin);
        } else {
          emit_code(std::move(content), tag->end, close, is_inline);
        }
        i = resume;
        continue;
      }
      if (is_block_tag(tag->name)) paragraph_break(tag->begin);
      i = tag->end;
    }
    flush_text(html_.size());
    return std::move(blocks_);
  }

 private:
  void append_text(std::string_view raw, std::size_t at) { append_decoded(text::decode_html_entities(raw), at); }

  void append_decoded(const std::string& s, std::size_t at) {
    if (text_.empty()) {
      if (text::trim(s).empty()) return;
      text_begin_ = at;
    }
    text_ += s;
  }

  void paragraph_break(std::size_t at) {
    if (!text_.empty()) append_decoded("\n\n", at);
  }

  void flush_text(std::size_t at) {
    if (!text::trim(text_).empty()) {
      blocks_.push_back(BodyBlock{BodyBlock::Kind::kText, std::move(text_), text_begin_, at, false});
    }
    text_.clear();
  }

  void emit_code(std::string content, std::size_t begin, std::size_t end, bool is_inline) {
    flush_text(begin);
    if (text::trim(content).empty()) return;
    blocks_.push_back(BodyBlock{BodyBlock::Kind::kCode, std::move(content), begin, end, is_inline});
  }

  std::string_view html_;
  Diagnostics* diag_;
  std::vector<BodyBlock> blocks_;
  std::string text_;
  std::size_t text_begin_ = 0;
};

}  // namespace

std::vector<BodyBlock> split_body(std::string_view html, Diagnostics* diag) {
  return BodySplitter(html, diag).run();
}

std::string body_text(std::string_view html) {
  std::string out;
  for (const auto& b : split_body(html)) {
    if (b.kind != BodyBlock::Kind::kText) continue;
    if (!out.empty()) out += "\n\n";
    out += b.text;
  }
  return out;
}

std::vector<RawSnippet> extract_snippets(std::string_view post_id, std::string_view body_html,
                                         Diagnostics* diag) {
  std::vector<RawSnippet> out;
  for (auto& b : split_body(body_html, diag)) {
    if (b.kind != BodyBlock::Kind::kCode) continue;
    out.push_back(RawSnippet{std::string(post_id), std::move(b.text), b.begin, b.end,
                             static_cast<int>(out.size())});
  }
  return out;
}

std::vector<RawSnippet> extract_snippets(const Post& post, Diagnostics* diag) {
  return extract_snippets(post.id, post.body_html, diag);
}

}  // namespace scenariodoc
