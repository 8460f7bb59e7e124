#include "scenariodoc/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read corpus file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string id_of(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw json::type_error::create(302, std::string(key) + " must be a string or integer", nullptr);
}

std::string string_of(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return {};
  return it->get<std::string>();
}

// Returns false (after warning) when the record must be skipped.
bool read_comment(const json& j, const std::string& where, Comment& out, Diagnostics* diag) {
  out.id = id_of(j, "id");
  out.text = string_of(j, "text");
  out.author = string_of(j, "author");
  const auto ts = parse_timestamp(string_of(j, "created_at"));
  if (!ts) {
    warn_into(diag, where + ": comment " + out.id + " has a missing or invalid created_at; skipped");
    return false;
  }
  out.created_at = *ts;
  if (out.id.empty()) {
    warn_into(diag, where + ": comment without id; skipped");
    return false;
  }
  return true;
}

bool read_post(const json& j, const std::string& where, Post& out, Diagnostics* diag) {
  out.id = id_of(j, "id");
  out.parent_id = id_of(j, "parent_id");
  out.body_html = string_of(j, "body_html");
  out.author = string_of(j, "author");
  if (const auto it = j.find("score"); it != j.end() && !it->is_null()) out.score = it->get<int>();
  if (out.id.empty()) {
    warn_into(diag, where + ": post without id; skipped");
    return false;
  }
  if (text::trim(out.body_html).empty()) {
    warn_into(diag, where + ": post " + out.id + " has an empty body; skipped");
    return false;
  }
  const auto ts = parse_timestamp(string_of(j, "created_at"));
  if (!ts) {
    warn_into(diag, where + ": post " + out.id + " has a missing or invalid created_at; skipped");
    return false;
  }
  out.created_at = *ts;
  if (const auto it = j.find("comments"); it != j.end() && !it->is_null()) {
    for (const auto& c : *it) {
      Comment comment;
      try {
        if (read_comment(c, where, comment, diag)) out.comments.push_back(std::move(comment));
      } catch (const json::exception& e) {
        warn_into(diag, where + ": malformed comment in post " + out.id + " (" + e.what() + "); skipped");
      }
    }
  }
  return true;
}

}  // namespace

std::size_t Corpus::post_count() const {
  std::size_t n = 0;
  for (const auto& t : threads) n += 1 + t.answers.size();
  return n;
}

std::size_t Corpus::comment_count() const {
  std::size_t n = 0;
  for (const auto& t : threads) {
    n += t.question.comments.size();
    for (const auto& a : t.answers) n += a.comments.size();
  }
  return n;
}

Timestamp Corpus::latest_activity() const {
  Timestamp latest{};
  auto visit = [&latest](const Post& p) {
    latest = std::max(latest, p.created_at);
    for (const auto& c : p.comments) latest = std::max(latest, c.created_at);
  };
  for (const auto& t : threads) {
    visit(t.question);
    for (const auto& a : t.answers) visit(a);
  }
  return latest;
}

CorpusFormat corpus_format_from_string(std::string_view name) {
  if (name == "json-lines" || name == "jsonl") return CorpusFormat::kJsonLines;
  if (name == "xml-dump" || name == "xml") return CorpusFormat::kXmlDump;
  throw CorpusError("unknown corpus format '" + std::string(name) + "'");
}

Corpus parse_json_lines(std::string_view content, Diagnostics* diag) {
  Corpus corpus;
  std::unordered_set<std::string> seen;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    auto nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    const auto line = text::trim(content.substr(start, nl - start));
    start = nl + 1;
    ++lineno;
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno);
    try {
      const json j = json::parse(line);
      Thread t;
      t.id = id_of(j, "id");
      t.title = string_of(j, "title");
      if (t.id.empty()) {
        warn_into(diag, where + ": thread without id; skipped");
        continue;
      }
      if (!seen.insert(t.id).second) {
        warn_into(diag, where + ": duplicate thread id " + t.id + "; skipped");
        continue;
      }
      if (const auto it = j.find("tags"); it != j.end() && !it->is_null()) {
        t.tags = it->get<std::vector<std::string>>();
      }
      if (!j.contains("question") || !read_post(j.at("question"), where, t.question, diag)) {
        warn_into(diag, where + ": thread " + t.id + " has no usable question; skipped");
        continue;
      }
      t.question.parent_id.clear();
      if (const auto it = j.find("answers"); it != j.end() && !it->is_null()) {
        for (const auto& a : *it) {
          Post answer;
          try {
            if (!read_post(a, where, answer, diag)) continue;
          } catch (const json::exception& e) {
            warn_into(diag, where + ": malformed answer (" + std::string(e.what()) + "); skipped");
            continue;
          }
          if (answer.parent_id.empty()) answer.parent_id = t.id;
          if (answer.parent_id != t.id) {
            warn_into(diag, where + ": answer " + answer.id + " has parent " + answer.parent_id +
                                " but sits in thread " + t.id + "; skipped");
            continue;
          }
          t.answers.push_back(std::move(answer));
        }
      }
      corpus.threads.push_back(std::move(t));
    } catch (const json::exception& e) {
      warn_into(diag, where + ": malformed record (" + std::string(e.what()) + "); skipped");
    }
  }
  return corpus;
}

namespace {

using Attributes = std::map<std::string, std::string, std::less<>>;

// Yields the attributes of every <row .../> element in document order.
std::vector<Attributes> scan_rows(std::string_view xml, std::string_view label, Diagnostics* diag) {
  std::vector<Attributes> rows;
  std::size_t pos = 0;
  std::size_t index = 0;
  while ((pos = xml.find("<row", pos)) != std::string_view::npos) {
    const std::size_t start = pos;
    pos += 4;
    if (pos < xml.size() && !text::is_space(xml[pos]) && xml[pos] != '/' && xml[pos] != '>') continue;
    ++index;
    Attributes attrs;
    bool ok = false;
    while (pos < xml.size()) {
      while (pos < xml.size() && text::is_space(xml[pos])) ++pos;
      if (pos >= xml.size()) break;
      if (xml.compare(pos, 2, "/>") == 0 || xml[pos] == '>') {
        pos += xml[pos] == '>' ? 1 : 2;
        ok = true;
        break;
      }
      const std::size_t name_start = pos;
      while (pos < xml.size() && xml[pos] != '=' && !text::is_space(xml[pos]) && xml[pos] != '>') ++pos;
      const std::string name(xml.substr(name_start, pos - name_start));
      while (pos < xml.size() && text::is_space(xml[pos])) ++pos;
      if (pos >= xml.size() || xml[pos] != '=') break;
      ++pos;
      while (pos < xml.size() && text::is_space(xml[pos])) ++pos;
      if (pos >= xml.size() || (xml[pos] != '"' && xml[pos] != '\'')) break;
      const char quote = xml[pos++];
      const auto close = xml.find(quote, pos);
      if (close == std::string_view::npos) break;
      attrs[name] = text::decode_html_entities(xml.substr(pos, close - pos));
      pos = close + 1;
    }
    if (ok) {
      rows.push_back(std::move(attrs));
    } else {
      warn_into(diag, std::string(label) + " row " + std::to_string(index) + " at offset " +
                          std::to_string(start) + " is malformed; skipped");
      pos = start + 4;
    }
  }
  return rows;
}

std::string attr(const Attributes& a, std::string_view key) {
  const auto it = a.find(key);
  return it == a.end() ? std::string{} : it->second;
}

std::string author_of(const Attributes& a) {
  auto name = attr(a, "OwnerDisplayName");
  if (name.empty()) name = attr(a, "UserDisplayName");
  if (name.empty()) {
    auto id = attr(a, "OwnerUserId");
    if (id.empty()) id = attr(a, "UserId");
    if (!id.empty()) name = "user" + id;
  }
  return name;
}

std::vector<std::string> parse_tags(std::string_view tags) {
  // "<java><json>" or "java json" or "|java|json|"
  std::vector<std::string> out;
  std::string cur;
  for (char c : tags) {
    if (c == '<' || c == '>' || c == '|' || text::is_space(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

Corpus parse_xml_dump(std::string_view posts_xml, std::string_view comments_xml, Diagnostics* diag) {
  auto rows = scan_rows(posts_xml, "posts", diag);
  // Comment rows may live in the same document as posts.
  auto comment_rows = scan_rows(comments_xml, "comments", diag);

  std::vector<Attributes> all_comments;
  std::vector<Attributes> post_rows;
  for (auto& r : rows) {
    if (r.contains("PostTypeId")) post_rows.push_back(std::move(r));
    else if (r.contains("PostId")) all_comments.push_back(std::move(r));
  }
  for (auto& r : comment_rows) all_comments.push_back(std::move(r));

  std::map<std::string, std::vector<Comment>> comments_by_post;
  for (const auto& r : all_comments) {
    Comment c;
    c.id = attr(r, "Id");
    c.text = attr(r, "Text");
    c.author = author_of(r);
    const auto post_id = attr(r, "PostId");
    const auto ts = parse_timestamp(attr(r, "CreationDate"));
    if (c.id.empty() || post_id.empty() || !ts) {
      warn_into(diag, "comment row " + c.id + " lacks Id, PostId or CreationDate; skipped");
      continue;
    }
    c.created_at = *ts;
    comments_by_post[post_id].push_back(std::move(c));
  }

  auto make_post = [&](const Attributes& r, Post& p) {
    p.id = attr(r, "Id");
    p.body_html = attr(r, "Body");
    p.author = author_of(r);
    const auto score = attr(r, "Score");
    if (!score.empty()) {
      try {
        p.score = std::stoi(score);
      } catch (const std::exception&) {
        warn_into(diag, "post " + p.id + " has a non-numeric Score; using 0");
      }
    }
    const auto ts = parse_timestamp(attr(r, "CreationDate"));
    if (p.id.empty() || !ts || text::trim(p.body_html).empty()) {
      warn_into(diag, "post row " + p.id + " lacks Id, Body or CreationDate; skipped");
      return false;
    }
    p.created_at = *ts;
    if (auto it = comments_by_post.find(p.id); it != comments_by_post.end()) {
      p.comments = std::move(it->second);
      comments_by_post.erase(it);
    }
    return true;
  };

  Corpus corpus;
  std::map<std::string, std::size_t> thread_index;
  std::vector<const Attributes*> answers;
  for (const auto& r : post_rows) {
    const auto type = attr(r, "PostTypeId");
    if (type == "2") {
      answers.push_back(&r);
      continue;
    }
    if (type != "1") continue;
    Thread t;
    if (!make_post(r, t.question)) continue;
    t.id = t.question.id;
    if (thread_index.contains(t.id)) {
      warn_into(diag, "duplicate question id " + t.id + "; skipped");
      continue;
    }
    t.title = attr(r, "Title");
    t.tags = parse_tags(attr(r, "Tags"));
    thread_index[t.id] = corpus.threads.size();
    corpus.threads.push_back(std::move(t));
  }
  for (const auto* r : answers) {
    Post p;
    if (!make_post(*r, p)) continue;
    p.parent_id = attr(*r, "ParentId");
    const auto it = thread_index.find(p.parent_id);
    if (it == thread_index.end()) {
      warn_into(diag, "answer " + p.id + " references unknown question " + p.parent_id + "; skipped");
      continue;
    }
    corpus.threads[it->second].answers.push_back(std::move(p));
  }
  for (const auto& [post_id, list] : comments_by_post) {
    warn_into(diag, std::to_string(list.size()) + " comment(s) reference unknown post " + post_id +
                        "; skipped");
  }
  return corpus;
}

Corpus load_corpus(const std::filesystem::path& path, CorpusFormat format, Diagnostics* diag) {
  std::error_code ec;
  if (format == CorpusFormat::kJsonLines) {
    if (!std::filesystem::is_regular_file(path, ec)) {
      throw CorpusError("corpus file not found: " + path.string());
    }
    return parse_json_lines(read_file(path), diag);
  }
  if (std::filesystem::is_directory(path, ec)) {
    const auto posts = path / "Posts.xml";
    const auto comments = path / "Comments.xml";
    if (!std::filesystem::is_regular_file(posts, ec)) {
      throw CorpusError("xml dump directory lacks Posts.xml: " + path.string());
    }
    const std::string comments_xml =
        std::filesystem::is_regular_file(comments, ec) ? read_file(comments) : std::string{};
    return parse_xml_dump(read_file(posts), comments_xml, diag);
  }
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw CorpusError("corpus file not found: " + path.string());
  }
  return parse_xml_dump(read_file(path), {}, diag);
}

}  // namespace scenariodoc
