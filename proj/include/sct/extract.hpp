#pragma once

// Size-change graphs from call sites.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sct/ast.hpp"
#include "sct/call_sites.hpp"
#include "sct/graph.hpp"

namespace sct {

/// GUARDED emits x↓ for x-1 only when the guard proves x > 0 (sound under
/// monus). SYNTACTIC always emits x↓ for x-1.
enum class ExtractMode { guarded, syntactic };

inline const char* to_string(ExtractMode m) {
  return m == ExtractMode::guarded ? "guarded" : "syntactic";
}

inline std::optional<ExtractMode> extract_mode_from_name(std::string_view s) {
  if (s == "guarded") return ExtractMode::guarded;
  if (s == "syntactic") return ExtractMode::syntactic;
  return std::nullopt;
}

inline std::string site_name(CallSiteId id) { return "tau" + std::to_string(id); }

/// One size-change graph per call site: graph i of `graphs` describes call
/// site i and is named tau<i>. Signatures are the program's, in order.
struct Description {
  ExtractMode mode = ExtractMode::guarded;
  GraphSet graphs;

  const SizeChangeGraph& graph_for(CallSiteId site) const { return graphs[site]; }
  std::size_t size() const noexcept { return graphs.size(); }
};

/// The arc contributed by one argument expression into target parameter `tgt`.
/// Successors, constants, primitive operations and calls give no arc.
inline std::optional<Arc> arc_for_argument(const Expr& e, ParamIndex tgt, const GuardContext& ctx,
                                           ExtractMode mode) {
  if (const auto* v = std::get_if<Var>(&e.node))
    return Arc{static_cast<ParamIndex>(v->param.index), ArcKind::nonstrict, tgt};
  if (const auto* p = std::get_if<Pred>(&e.node)) {
    const auto x = static_cast<ParamIndex>(p->param.index);
    const bool strict = mode == ExtractMode::syntactic || implies_positive(ctx, x);
    return Arc{x, strict ? ArcKind::strict : ArcKind::nonstrict, tgt};
  }
  return std::nullopt;
}

namespace detail {

inline SizeChangeGraph extract_graph(const CallSite& site, ExtractMode mode, const SigRef& caller,
                                     const SigRef& callee) {
  std::vector<Arc> arcs;
  for (std::size_t j = 0; j < site.args.size(); ++j)
    if (auto a = arc_for_argument(site.args[j], static_cast<ParamIndex>(j), site.guard, mode))
      arcs.push_back(*a);
  return SizeChangeGraph(caller, callee, std::move(arcs));
}

}  // namespace detail

inline SizeChangeGraph extract_graph(const CallSite& site, ExtractMode mode) {
  auto caller = make_sig(site.caller_sig.name, site.caller_sig.params);
  auto callee = site.caller_sig == site.callee_sig
                    ? caller
                    : make_sig(site.callee_sig.name, site.callee_sig.params);
  return detail::extract_graph(site, mode, caller, callee);
}

inline GraphSet program_signatures(const Program& p) {
  GraphSet gs;
  for (const FunDef& d : p.defs) gs.add_sig(d.sig.name, d.sig.params);
  return gs;
}

inline Description extract_description(const Program& p, ExtractMode mode) {
  Description d{mode, program_signatures(p)};
  for (const CallSite& site : enumerate_call_sites(p)) {
    const auto& caller = d.graphs.sig(site.caller_sig.name);
    const auto& callee = d.graphs.sig(site.callee_sig.name);
    d.graphs.add(detail::extract_graph(site, mode, caller, callee), site_name(site.id));
  }
  return d;
}

/// A description read from a graph set: call site i takes the graph named
/// tau<i>, whose endpoints must match the call.
inline Description description_from_graph_set(const Program& p, const GraphSet& gs,
                                              ExtractMode mode = ExtractMode::guarded) {
  Description d{mode, program_signatures(p)};
  for (const CallSite& site : enumerate_call_sites(p)) {
    const std::string name = site_name(site.id);
    auto idx = gs.find_name(name);
    if (!idx) throw UnsupportedInputError("no graph named '" + name + "' for call site " + name);
    const SizeChangeGraph& g = gs[*idx];
    if (!(*g.source() == site.caller_sig) || !(*g.target() == site.callee_sig))
      throw UnsupportedInputError("graph '" + name + "' does not match the endpoints of its call");
    d.graphs.add(SizeChangeGraph(d.graphs.sig(site.caller_sig.name),
                                 d.graphs.sig(site.callee_sig.name), g.arcs()),
                 name);
  }
  return d;
}

}  // namespace sct
