#pragma once

// Randomized empirical safety check of a description against the interpreter.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "sct/extract.hpp"
#include "sct/graph_json.hpp"
#include "sct/interpreter.hpp"

namespace sct {

struct SafetyViolation {
  CallSiteId site = 0;
  Arc arc;
  std::vector<Nat> from;
  std::vector<Nat> to;
};

struct SafetyReport {
  std::vector<SafetyViolation> violations;
  /// All violations, including those past SafetyOptions::max_recorded.
  std::size_t violation_count = 0;
  std::size_t trials = 0;
  std::size_t converged = 0;
  std::size_t out_of_fuel = 0;
  std::size_t transitions = 0;
  /// Transitions never materialized because argument evaluation ran out of fuel.
  std::size_t skipped = 0;
};

struct SafetyOptions {
  std::size_t trials = 1000;
  Nat value_bound = 3;
  std::uint64_t fuel = 1'000'000;
  std::uint64_t seed = 0;
  /// Violations beyond this many are counted but not recorded.
  std::size_t max_recorded = 100;
};

/// An arc (x, r, y) is violated by (f,u) →τ (g,v) when r = ↓ and u_x <= v_y,
/// or r = ⇓ and u_x < v_y.
inline bool arc_holds(const Arc& a, const std::vector<Nat>& u, const std::vector<Nat>& v) {
  return a.kind == ArcKind::strict ? u[a.src] > v[a.tgt] : u[a.src] >= v[a.tgt];
}

/// Evaluates `opts.trials` random states (function uniform over the program,
/// each argument uniform in [0, value_bound]) and checks every observed
/// transition against every arc of the graph describing its call site.
inline SafetyReport sample_safety(const Program& p, const Description& d,
                                  const SafetyOptions& opts = {}) {
  if (d.size() != p.call_site_count)
    throw UnsupportedInputError("description does not cover every call site");
  SafetyReport report;
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::size_t> pick_fun(0, p.defs.size() - 1);
  std::uniform_int_distribution<Nat> pick_value(0, opts.value_bound);

  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    const std::size_t fun = pick_fun(rng);
    std::vector<Nat> args(p.defs[fun].sig.arity());
    for (Nat& a : args) a = pick_value(rng);

    RunResult r = run(p, fun, std::move(args), Fuel{opts.fuel}, [&](const Transition& t) {
      ++report.transitions;
      for (const Arc& a : d.graph_for(t.site).arcs()) {
        if (arc_holds(a, t.from.values, t.to.values)) continue;
        if (report.violation_count++ < opts.max_recorded)
          report.violations.push_back({t.site, a, t.from.values, t.to.values});
      }
      return true;
    });
    ++report.trials;
    if (r.value) ++report.converged;
    if (r.out_of_fuel) ++report.out_of_fuel;
    report.skipped += r.pending_calls;
  }
  return report;
}

inline Json to_json(const SafetyReport& r, const Description& d) {
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    const SizeChangeGraph& g = d.graph_for(v.site);
    Json j;
    j["site"] = site_name(v.site);
    j["arc"] = arc_to_json(v.arc, *g.source(), *g.target());
    j["from"] = v.from;
    j["to"] = v.to;
    vs.push_back(std::move(j));
  }
  Json j;
  j["violations"] = std::move(vs);
  j["violation_count"] = r.violation_count;
  j["trials"] = r.trials;
  j["converged"] = r.converged;
  j["out_of_fuel"] = r.out_of_fuel;
  j["transitions"] = r.transitions;
  j["skipped"] = r.skipped;
  return j;
}

}  // namespace sct
