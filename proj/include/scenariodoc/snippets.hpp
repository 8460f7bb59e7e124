#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scenariodoc/config.hpp"
#include "scenariodoc/corpus.hpp"
#include "scenariodoc/diagnostics.hpp"

namespace scenariodoc {

// A post body split into prose and code, in document order.
struct BodyBlock {
  enum class Kind { kText, kCode };
  Kind kind = Kind::kText;
  std::string text;        // entity-decoded, tags stripped
  std::size_t begin = 0;   // offsets into the html body
  std::size_t end = 0;
  bool inline_code = false;  // <code> outside <pre>
};

std::vector<BodyBlock> split_body(std::string_view html, Diagnostics* diag = nullptr);

// Prose of the body with code blocks removed; single-token inline code is
// kept as text.
std::string body_text(std::string_view html);

struct RawSnippet {
  std::string post_id;
  std::string text;
  std::size_t begin = 0;  // char span in the body
  std::size_t end = 0;
  int index = 0;          // position among the post's snippets

  friend bool operator==(const RawSnippet&, const RawSnippet&) = default;
};

std::vector<RawSnippet> extract_snippets(const Post& post, Diagnostics* diag = nullptr);
std::vector<RawSnippet> extract_snippets(std::string_view post_id, std::string_view body_html,
                                         Diagnostics* diag = nullptr);

enum class SnippetKind { kValidJava, kXml, kJson, kJavascript, kStacktrace, kProse, kTooShort };

std::string_view to_string(SnippetKind k);
std::optional<SnippetKind> snippet_kind_from_string(std::string_view s);

struct Validity {
  SnippetKind kind = SnippetKind::kProse;
  double java_score = 0.0;

  bool valid() const noexcept { return kind == SnippetKind::kValidJava; }
  friend bool operator==(const Validity&, const Validity&) = default;
};

Validity classify_snippet(std::string_view code, const ClassifierOptions& options = {});
inline Validity classify_snippet(const RawSnippet& raw, const ClassifierOptions& options = {}) {
  return classify_snippet(raw.text, options);
}

struct MethodCall {
  std::string receiver_type;  // empty when not statically evident
  std::string method;
  int line = 0;

  friend auto operator<=>(const MethodCall&, const MethodCall&) = default;
};

struct CodeSnippet {
  RawSnippet raw;
  Validity validity;
  std::set<std::string> types_used;   // never contains a member of local_decls
  std::set<std::string> local_decls;  // class/interface/enum/record declared in the snippet
  std::vector<MethodCall> methods_called;
  std::vector<std::string> imports;
  std::map<std::string, std::string> qualified_types;  // simple -> FQN written inline
  std::map<std::string, std::string> variables;        // variable -> declared simple type
  int line_count = 1;
  bool heuristic = false;  // token-level fallback was used

  friend bool operator==(const CodeSnippet&, const CodeSnippet&) = default;
};

CodeSnippet parse_java_elements(const RawSnippet& raw, const ClassifierOptions& options = {});

// A value returned by a call site. Call sites are numbered in source order;
// constructors use the method name "<init>".
struct CallSite {
  int id = 0;
  std::string receiver_type;
  std::string method;
  int line = 0;

  std::string key() const { return receiver_type + "." + method; }
  friend auto operator<=>(const CallSite&, const CallSite&) = default;
};

struct FlowInput {
  std::string type;                   // declared type of the argument, "" if unknown
  std::optional<CallSite> producer;   // set when the value comes from a call in the snippet
  CallSite consumer;
  friend auto operator<=>(const FlowInput&, const FlowInput&) = default;
};

struct FlowOutput {
  std::string type;
  CallSite producer;
  friend auto operator<=>(const FlowOutput&, const FlowOutput&) = default;
};

struct FlowEdge {
  std::string type;
  CallSite producer;
  CallSite consumer;
  friend auto operator<=>(const FlowEdge&, const FlowEdge&) = default;
};

struct DataflowFacts {
  std::vector<FlowInput> inputs;    // call arguments
  std::vector<FlowOutput> outputs;  // results never fed into another call
  std::vector<FlowEdge> internal;   // result of one call consumed by another

  bool empty() const noexcept { return inputs.empty() && outputs.empty() && internal.empty(); }
  friend bool operator==(const DataflowFacts&, const DataflowFacts&) = default;
};

DataflowFacts compute_dataflow(const CodeSnippet& snippet);

// Lines of code after stripping comments, collapsing whitespace and
// replacing literals with <LIT>.
std::vector<std::string> normalized_lines(std::string_view code);

}  // namespace scenariodoc
