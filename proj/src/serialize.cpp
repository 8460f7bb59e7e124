#include "scenariodoc/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json_codec.hpp"

namespace scenariodoc {
namespace codec {
namespace {

Timestamp ts_from(const json& j) {
  const auto ts = parse_timestamp(j.get<std::string>());
  if (!ts) throw FormatError("bad timestamp: " + j.get<std::string>());
  return *ts;
}

SentenceSource source_from(const std::string& s) {
  if (s == "question-body") return SentenceSource::kQuestionBody;
  if (s == "answer-body") return SentenceSource::kAnswerBody;
  if (s == "comment") return SentenceSource::kComment;
  throw FormatError("bad sentence source: " + s);
}

json sentence_json(const Sentence& s) {
  return json{{"text", s.text},
              {"source", to_string(s.source)},
              {"post_id", s.post_id},
              {"comment_id", s.comment_id ? json(*s.comment_id) : json(nullptr)},
              {"created_at", format_timestamp(s.created_at)},
              {"position", s.position},
              {"block", s.block}};
}

Sentence sentence_from(const json& j) {
  Sentence s;
  s.text = j.at("text").get<std::string>();
  s.source = source_from(j.at("source").get<std::string>());
  s.post_id = j.at("post_id").get<std::string>();
  if (!j.at("comment_id").is_null()) s.comment_id = j.at("comment_id").get<std::string>();
  s.created_at = ts_from(j.at("created_at"));
  s.position = j.at("position").get<int>();
  s.block = j.at("block").get<int>();
  return s;
}

json opinion_json(const Opinion& o) {
  json j = sentence_json(o.sentence);
  j["polarity"] = to_string(o.polarity);
  j["score"] = o.score;
  return j;
}

Opinion opinion_from(const json& j) {
  Opinion o;
  o.sentence = sentence_from(j);
  const auto p = polarity_from_string(j.at("polarity").get<std::string>());
  if (!p) throw FormatError("bad polarity");
  o.polarity = *p;
  o.score = j.at("score").get<double>();
  return o;
}

json call_json(const CallSite& c) {
  return json{{"id", c.id}, {"receiver_type", c.receiver_type}, {"method", c.method}, {"line", c.line}};
}

CallSite call_from(const json& j) {
  return CallSite{j.at("id").get<int>(), j.at("receiver_type").get<std::string>(), j.at("method").get<std::string>(),
                  j.at("line").get<int>()};
}

json dataflow_json(const DataflowFacts& d) {
  json inputs = json::array();
  for (const auto& in : d.inputs) {
    inputs.push_back({{"type", in.type},
                      {"producer", in.producer ? call_json(*in.producer) : json(nullptr)},
                      {"consumer", call_json(in.consumer)}});
  }
  json outputs = json::array();
  for (const auto& o : d.outputs) outputs.push_back({{"type", o.type}, {"producer", call_json(o.producer)}});
  json internal = json::array();
  for (const auto& e : d.internal) {
    internal.push_back({{"type", e.type}, {"producer", call_json(e.producer)}, {"consumer", call_json(e.consumer)}});
  }
  return json{{"inputs", inputs}, {"outputs", outputs}, {"internal", internal}};
}

DataflowFacts dataflow_from(const json& j) {
  DataflowFacts d;
  for (const auto& in : j.at("inputs")) {
    FlowInput f;
    f.type = in.at("type").get<std::string>();
    if (!in.at("producer").is_null()) f.producer = call_from(in.at("producer"));
    f.consumer = call_from(in.at("consumer"));
    d.inputs.push_back(std::move(f));
  }
  for (const auto& o : j.at("outputs")) d.outputs.push_back(FlowOutput{o.at("type").get<std::string>(), call_from(o.at("producer"))});
  for (const auto& e : j.at("internal")) {
    d.internal.push_back(FlowEdge{e.at("type").get<std::string>(), call_from(e.at("producer")), call_from(e.at("consumer"))});
  }
  return d;
}

json snippet_json(const CodeSnippet& c) {
  json calls = json::array();
  for (const auto& m : c.methods_called) {
    calls.push_back({{"receiver_type", m.receiver_type}, {"method", m.method}, {"line", m.line}});
  }
  return json{{"post_id", c.raw.post_id},
              {"index", c.raw.index},
              {"begin", c.raw.begin},
              {"end", c.raw.end},
              {"code", c.raw.text},
              {"kind", to_string(c.validity.kind)},
              {"java_score", c.validity.java_score},
              {"types_used", c.types_used},
              {"local_decls", c.local_decls},
              {"methods_called", calls},
              {"imports", c.imports},
              {"qualified_types", c.qualified_types},
              {"variables", c.variables},
              {"line_count", c.line_count},
              {"heuristic", c.heuristic}};
}

CodeSnippet snippet_from(const json& j) {
  CodeSnippet c;
  c.raw.post_id = j.at("post_id").get<std::string>();
  c.raw.index = j.at("index").get<int>();
  c.raw.begin = j.at("begin").get<std::size_t>();
  c.raw.end = j.at("end").get<std::size_t>();
  c.raw.text = j.at("code").get<std::string>();
  const auto kind = snippet_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw FormatError("bad snippet kind");
  c.validity = Validity{*kind, j.at("java_score").get<double>()};
  c.types_used = j.at("types_used").get<std::set<std::string>>();
  c.local_decls = j.at("local_decls").get<std::set<std::string>>();
  for (const auto& m : j.at("methods_called")) {
    c.methods_called.push_back(MethodCall{m.at("receiver_type").get<std::string>(), m.at("method").get<std::string>(),
                                          m.at("line").get<int>()});
  }
  c.imports = j.at("imports").get<std::vector<std::string>>();
  c.qualified_types = j.at("qualified_types").get<std::map<std::string, std::string>>();
  c.variables = j.at("variables").get<std::map<std::string, std::string>>();
  c.line_count = j.at("line_count").get<int>();
  c.heuristic = j.at("heuristic").get<bool>();
  return c;
}

}  // namespace

json full_scenario(const UsageScenario& s) {
  json desc = json::array();
  for (const auto& d : s.description) desc.push_back(sentence_json(d));
  json reviews = json::array();
  for (const auto& r : s.reviews) reviews.push_back(opinion_json(r));
  return json{{"id", s.id},
              {"api", s.api},
              {"thread_id", s.thread_id},
              {"post_id", s.post_id},
              {"title", s.title},
              {"url", s.url},
              {"created_at", format_timestamp(s.created_at)},
              {"link_score", s.link_score},
              {"api_types", s.api_types},
              {"type_fqns", s.type_fqns},
              {"other_apis", s.other_apis},
              {"description", desc},
              {"description_fallback", s.description_fallback},
              {"reviews", reviews},
              {"snippet", snippet_json(s.snippet)},
              {"dataflow", dataflow_json(s.dataflow)}};
}

UsageScenario scenario_from(const json& j) {
  UsageScenario s;
  s.id = j.at("id").get<std::string>();
  s.api = j.at("api").get<std::string>();
  s.thread_id = j.at("thread_id").get<std::string>();
  s.post_id = j.at("post_id").get<std::string>();
  s.title = j.at("title").get<std::string>();
  s.url = j.at("url").get<std::string>();
  s.created_at = ts_from(j.at("created_at"));
  s.link_score = j.at("link_score").get<double>();
  s.api_types = j.at("api_types").get<std::vector<std::string>>();
  s.type_fqns = j.at("type_fqns").get<std::map<std::string, std::string>>();
  s.other_apis = j.at("other_apis").get<std::vector<std::string>>();
  for (const auto& d : j.at("description")) s.description.push_back(sentence_from(d));
  s.description_fallback = j.at("description_fallback").get<bool>();
  for (const auto& r : j.at("reviews")) s.reviews.push_back(opinion_from(r));
  s.snippet = snippet_from(j.at("snippet"));
  s.dataflow = dataflow_from(j.at("dataflow"));
  return s;
}

json scenario_view(const UsageScenario& s) {
  json desc = json::array();
  for (const auto& d : s.description) desc.push_back(d.text);
  json positive = json::array();
  json negative = json::array();
  for (const auto& r : s.reviews) {
    json o{{"text", r.sentence.text},
           {"comment_id", r.sentence.comment_id ? json(*r.sentence.comment_id) : json(nullptr)},
           {"created_at", format_timestamp(r.sentence.created_at)},
           {"score", r.score}};
    (r.polarity == Polarity::kPositive ? positive : negative).push_back(std::move(o));
  }
  json types = json::array();
  for (const auto& t : s.api_types) types.push_back({{"name", t}, {"fqn", type_key(s, t)}});
  return json{{"id", s.id},
              {"title", s.title},
              {"url", s.url},
              {"thread_id", s.thread_id},
              {"post_id", s.post_id},
              {"created_at", format_timestamp(s.created_at)},
              {"code", s.snippet.raw.text},
              {"description", desc},
              {"description_fallback", s.description_fallback},
              {"reviews", {{"positive", positive}, {"negative", negative}}},
              {"rating", rating_json(star_rating(s.positives(), s.negatives()))},
              {"api_types", types},
              {"other_apis", s.other_apis}};
}

}  // namespace codec

std::string scenarios_to_json(const std::vector<UsageScenario>& scenarios) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : scenarios) arr.push_back(codec::full_scenario(s));
  return arr.dump(2) + "\n";
}

std::vector<UsageScenario> scenarios_from_json(std::string_view json_text) {
  std::vector<UsageScenario> out;
  try {
    const auto arr = nlohmann::json::parse(json_text);
    if (!arr.is_array()) throw FormatError("scenarios file must hold a JSON array");
    for (const auto& j : arr) out.push_back(codec::scenario_from(j));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed scenarios json: ") + e.what());
  }
  return out;
}

void save_scenarios(const std::filesystem::path& path, const std::vector<UsageScenario>& scenarios) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out << scenarios_to_json(scenarios);
  if (!out) throw FormatError("cannot write " + path.string());
}

std::vector<UsageScenario> load_scenarios(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return scenarios_from_json(ss.str());
}

}  // namespace scenariodoc
