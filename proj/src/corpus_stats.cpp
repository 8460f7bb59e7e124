#include <set>

#include "scenariodoc/corpus.hpp"
#include "scenariodoc/opinions.hpp"
#include "scenariodoc/snippets.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

void count_prose(std::string_view prose, CorpusStats& st) {
  for (const auto& s : split_sentences(prose)) {
    ++st.sentences;
    st.words += text::words(s).size();
  }
}

void count_post(const Post& post, CorpusStats& st, std::set<std::string>& users,
                std::set<std::string>& thread_users) {
  ++st.posts;
  count_prose(body_text(post.body_html), st);
  for (const auto& snip : extract_snippets(post)) {
    ++st.snippets;
    for (const auto& line : text::split_lines(snip.text)) {
      if (!text::trim(line).empty()) ++st.snippet_lines;
    }
  }
  if (!post.author.empty()) {
    users.insert(post.author);
    thread_users.insert(post.author);
  }
  for (const auto& c : post.comments) {
    ++st.posts;
    ++st.comments;
    count_prose(c.text, st);
    if (!c.author.empty()) {
      users.insert(c.author);
      thread_users.insert(c.author);
    }
  }
}

}  // namespace

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats st;
  std::set<std::string> users;
  for (const auto& t : corpus.threads) {
    ++st.threads;
    std::set<std::string> thread_users;
    count_post(t.question, st, users, thread_users);
    for (const auto& a : t.answers) count_post(a, st, users, thread_users);
    st.user_participations += thread_users.size();
  }
  st.users = users.size();
  return st;
}

}  // namespace scenariodoc
