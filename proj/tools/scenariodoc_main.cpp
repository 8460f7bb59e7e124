#include <csignal>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scenariodoc/apidb.hpp"
#include "scenariodoc/config.hpp"
#include "scenariodoc/corpus.hpp"
#include "scenariodoc/miner.hpp"
#include "scenariodoc/serialize.hpp"
#include "scenariodoc/server.hpp"
#include "scenariodoc/snippets.hpp"

namespace sd = scenariodoc;

namespace {

struct Options {
  std::string corpus;
  std::string format = "json-lines";
  std::string apidb;
  std::string out;
  std::string scenarios;
  std::string config_file;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<int> min_support;
  std::optional<double> clone_threshold;
  std::optional<int> threads;
  std::vector<std::string> overrides;
  bool no_serve = false;
  bool quiet = false;
  bool json = false;
};

sd::DocServer* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

sd::Config make_config(const Options& o) {
  sd::Config cfg;
  if (const char* path = std::getenv("SCENARIODOC_CONFIG"); path != nullptr && *path != '\0') cfg.merge_file(path);
  if (!o.config_file.empty()) cfg.merge_file(o.config_file);
  cfg.merge_env([](const char* name) { return std::getenv(name); });
  for (const auto& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw sd::ConfigError("--set expects key=value, got " + kv);
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.min_support) cfg.concepts.min_support = *o.min_support;
  if (o.clone_threshold) cfg.concepts.clone_threshold = *o.clone_threshold;
  if (o.threads) cfg.threads = *o.threads;
  cfg.validate();
  return cfg;
}

std::optional<sd::Timestamp> source_date() {
  const char* v = std::getenv("SOURCE_DATE_EPOCH");
  if (v == nullptr || *v == '\0') return std::nullopt;
  return sd::Timestamp{std::chrono::seconds{std::stoll(v)}};
}

void print_warnings(const sd::Diagnostics& diag, bool quiet) {
  if (quiet) return;
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
}

std::vector<sd::UsageScenario> run_mine(const Options& o, const sd::Config& cfg, const sd::ApiDb& db) {
  sd::Diagnostics diag;
  const auto corpus = sd::load_corpus(o.corpus, sd::corpus_format_from_string(o.format), &diag);
  sd::MiningReport report;
  auto scenarios = sd::mine_scenarios(corpus, db, cfg, &report, &diag);
  print_warnings(diag, o.quiet);
  std::cerr << "threads " << report.threads << ", posts " << report.posts << ", snippets " << report.snippets
            << ", scenarios " << scenarios.size() << ", neutral opinions " << report.neutral_opinions << "\n";
  for (const auto& [reason, n] : report.dropped) std::cerr << "  dropped " << reason << ": " << n << "\n";
  return scenarios;
}

sd::GenerateResult run_document(const Options& o, const sd::Config& cfg, const sd::ApiDb& db,
                                const std::vector<sd::UsageScenario>& scenarios) {
  sd::Diagnostics diag;
  auto result = sd::document(scenarios, db, cfg, o.out, &diag, source_date());
  print_warnings(diag, o.quiet);
  std::cerr << "wrote " << result.manifest.apis.size() << " bundles to " << result.generation_dir.string() << "\n";
  return result;
}

int run_serve(const Options& o) {
  sd::BundleStore store(o.out);
  sd::DocServer server(store);
  const int port = server.bind(o.host, o.port);
  if (port < 0) {
    std::cerr << "error: cannot bind " << o.host << ":" << o.port << "\n";
    return 1;
  }
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cerr << "serving " << o.out << " on http://" << o.host << ":" << port << "\n";
  server.listen();
  g_server = nullptr;
  return 0;
}

int run_inspect(const Options& o, const sd::Config& cfg) {
  sd::Diagnostics diag;
  const auto corpus = sd::load_corpus(o.corpus, sd::corpus_format_from_string(o.format), &diag);
  print_warnings(diag, o.quiet);
  auto dump = [&](const sd::Post& post) {
    for (const auto& raw : sd::extract_snippets(post)) {
      const auto snip = sd::parse_java_elements(raw, cfg.classifier);
      if (o.json) {
        nlohmann::json calls = nlohmann::json::array();
        for (const auto& m : snip.methods_called) {
          calls.push_back({{"receiver", m.receiver_type}, {"method", m.method}, {"line", m.line}});
        }
        nlohmann::json j{{"post_id", post.id},
                         {"index", raw.index},
                         {"kind", sd::to_string(snip.validity.kind)},
                         {"java_score", snip.validity.java_score},
                         {"lines", snip.line_count},
                         {"heuristic", snip.heuristic},
                         {"types", snip.types_used},
                         {"locals", snip.local_decls},
                         {"imports", snip.imports},
                         {"qualified_types", snip.qualified_types},
                         {"variables", snip.variables},
                         {"calls", calls}};
        std::cout << j.dump() << "\n";
        continue;
      }
      std::cout << "post " << post.id << " snippet " << raw.index << ": " << sd::to_string(snip.validity.kind)
                << " (score " << snip.validity.java_score << ", " << snip.line_count << " lines)\n";
      std::cout << "  types:";
      for (const auto& t : snip.types_used) std::cout << ' ' << t;
      std::cout << "\n  locals:";
      for (const auto& t : snip.local_decls) std::cout << ' ' << t;
      std::cout << "\n  calls:";
      for (const auto& m : snip.methods_called) std::cout << ' ' << (m.receiver_type.empty() ? "?" : m.receiver_type) << '.' << m.method;
      std::cout << "\n";
    }
  };
  for (const auto& t : corpus.threads) {
    dump(t.question);
    for (const auto& a : t.answers) dump(a);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine API usage scenarios from Q&A dumps and generate API documentation"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config_file, "TOML config file");
    cmd->add_option("--set", o.overrides, "Override a config key (section.key=value)");
    cmd->add_flag("--quiet", o.quiet, "Suppress per-record warnings");
  };
  auto add_mining = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", o.corpus, "Corpus file or dump directory")->required();
    cmd->add_option("--format", o.format, "json-lines or xml-dump")->check(CLI::IsMember({"json-lines", "xml-dump"}));
    cmd->add_option("--apidb", o.apidb, "API database JSON");
    cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  };
  auto add_docgen = [&](CLI::App* cmd) {
    cmd->add_option("--min-support", o.min_support, "Minimum itemset support");
    cmd->add_option("--clone-threshold", o.clone_threshold, "Clone similarity threshold");
  };

  auto* mine = app.add_subcommand("mine", "Mine usage scenarios into scenarios.json");
  add_common(mine);
  add_mining(mine);
  mine->add_option("--out", o.out, "Output scenarios file")->required();

  auto* docs = app.add_subcommand("document", "Generate documentation bundles from scenarios.json");
  add_common(docs);
  add_docgen(docs);
  docs->add_option("--scenarios", o.scenarios, "Scenarios file")->required();
  docs->add_option("--apidb", o.apidb, "API database JSON");
  docs->add_option("--out", o.out, "Bundle directory")->required();

  auto* serve = app.add_subcommand("serve", "Serve bundles over HTTP");
  serve->add_option("--out", o.out, "Bundle directory")->required();
  serve->add_option("--port", o.port, "Port (0: any free port)");
  serve->add_option("--host", o.host, "Listen address");

  auto* all = app.add_subcommand("all", "Mine, document and serve");
  add_common(all);
  add_mining(all);
  add_docgen(all);
  all->add_option("--out", o.out, "Bundle directory")->required();
  all->add_option("--port", o.port, "Port (0: any free port)");
  all->add_option("--host", o.host, "Listen address");
  all->add_flag("--no-serve", o.no_serve, "Stop after writing bundles");

  auto* inspect = app.add_subcommand("inspect", "Print snippet classification and parse results");
  add_common(inspect);
  add_mining(inspect);
  inspect->add_flag("--json", o.json, "One JSON object per snippet");

  CLI11_PARSE(app, argc, argv);

  try {
    if (serve->parsed()) return run_serve(o);
    const auto cfg = make_config(o);
    if (inspect->parsed()) return run_inspect(o, cfg);
    const auto db = sd::load_api_db(o.apidb, cfg);
    if (mine->parsed()) {
      sd::save_scenarios(o.out, run_mine(o, cfg, db));
      return 0;
    }
    if (docs->parsed()) {
      run_document(o, cfg, db, sd::load_scenarios(o.scenarios));
      return 0;
    }
    if (all->parsed()) {
      run_document(o, cfg, db, run_mine(o, cfg, db));
      return o.no_serve ? 0 : run_serve(o);
    }
  } catch (const sd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
