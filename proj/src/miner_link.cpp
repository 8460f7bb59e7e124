#include <algorithm>
#include <cmath>
#include <set>

#include "scenariodoc/miner.hpp"
#include "scenariodoc/text.hpp"

namespace scenariodoc {
namespace {

bool mentioned_in(std::string_view text, const ApiRecord& api) {
  for (const auto& s : api.spellings()) {
    if (text::mentions(text, s)) return true;
  }
  return false;
}

bool method_evidence(const CodeSnippet& snippet, const ApiRecord& api) {
  for (const auto& call : snippet.methods_called) {
    if (!call.receiver_type.empty() && api.has_type(call.receiver_type)) {
      if (api.has_method(call.receiver_type, call.method)) return true;
      continue;
    }
    for (const auto& [type, methods] : api.methods) {
      if (std::find(methods.begin(), methods.end(), call.method) != methods.end()) return true;
    }
  }
  return false;
}

}  // namespace

ResolveContext resolve_context_for(const CodeSnippet& snippet) {
  ResolveContext ctx;
  ctx.imports = snippet.imports;
  for (const auto& [simple, fqn] : snippet.qualified_types) {
    if (std::find(ctx.imports.begin(), ctx.imports.end(), fqn) == ctx.imports.end()) ctx.imports.push_back(fqn);
  }
  return ctx;
}

std::vector<TypeResolution> resolve_types(const CodeSnippet& snippet, const ApiDb& db,
                                          const ResolveWeights& weights) {
  const auto ctx = resolve_context_for(snippet);
  std::vector<TypeResolution> out;
  for (const auto& type : snippet.types_used) {
    TypeResolution r{type, {}};
    auto candidates = db.resolve_fqn(type, ctx, weights);
    if (!candidates.empty()) {
      const double top = candidates.front().score;
      for (auto& c : candidates) {
        if (c.score == top) r.top.push_back(std::move(c));
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<LinkResult> link_snippet_to_api(const CodeSnippet& snippet, const PostContext& context,
                                              const ApiDb& db, const Config& config) {
  const auto resolutions = resolve_types(snippet, db, config.resolve);
  std::map<const ApiRecord*, std::size_t> matched;
  for (const auto& r : resolutions) {
    std::set<const ApiRecord*> apis;
    for (const auto& c : r.top) apis.insert(c.api);
    for (const auto* a : apis) ++matched[a];
  }

  std::optional<LinkResult> best;
  std::size_t best_matched = 0;
  for (const auto& api : db.records()) {
    const auto it = matched.find(&api);
    const std::size_t m = it == matched.end() ? 0 : it->second;
    if (m == 0 && !method_evidence(snippet, api)) continue;
    LinkResult r;
    r.api = &api;
    r.type_fraction = snippet.types_used.empty()
                          ? 0.0
                          : static_cast<double>(m) / static_cast<double>(snippet.types_used.size());
    if (mentioned_in(context.answer_text, api)) {
      r.mention = 1.0;
    } else if (mentioned_in(context.title, api) || mentioned_in(context.question_text, api)) {
      r.mention = 0.5;
    }
    r.score = config.link.type_weight * r.type_fraction + config.link.mention_weight * r.mention;
    if (r.score <= config.link.floor) continue;
    const bool better = !best || r.score > best->score + 1e-12 ||
                        (std::abs(r.score - best->score) <= 1e-12 &&
                         (m > best_matched || (m == best_matched && api.name < best->api->name)));
    if (better) {
      best = r;
      best_matched = m;
    }
  }
  return best;
}

}  // namespace scenariodoc
