#pragma once

// Bounded brute-force termination check by enumeration of cyclic words.
// Independent of the closure computation; used to cross-check the criterion.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sct/criterion.hpp"
#include "sct/graph.hpp"

namespace sct {

/// Calls `visit` on every composable word w with 1 <= |w| <= max_len and
/// source(w) = target(w), in shortlex order, until `visit` returns false.
inline void for_each_cyclic_word(const GraphSet& gs, std::size_t max_len,
                                 const std::function<bool(const Word&)>& visit) {
  if (max_len == 0) throw DomainError("max word length must be at least 1");
  Word w;
  // Depth-first over composable extensions, one pass per length so words
  // come out in shortlex order.
  std::function<bool(std::size_t)> extend = [&](std::size_t len) -> bool {
    if (w.size() == len) {
      if (same_sig(gs[w.back()].target(), gs[w.front()].source())) return visit(w);
      return true;
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!w.empty() && !same_sig(gs[w.back()].target(), gs[i].source())) continue;
      w.push_back(i);
      const bool go_on = extend(len);
      w.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  for (std::size_t len = 1; len <= max_len; ++len)
    if (!extend(len)) return;
}

inline std::vector<Word> enumerate_cyclic_words(const GraphSet& gs, std::size_t max_len) {
  std::vector<Word> out;
  for_each_cyclic_word(gs, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

struct OracleReport {
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  /// First cyclic word whose idempotent power lacks a strict self-arc.
  std::optional<LassoMultipath> counterexample;
  std::optional<SizeChangeGraph> idempotent;

  bool found_counterexample() const noexcept { return counterexample.has_value(); }
};

/// NOT_SCT with lasso period w for the first cyclic word w (shortlex) whose
/// composition has an idempotent power without p↓p; otherwise no
/// counterexample up to `max_len`.
inline OracleReport bounded_lasso_oracle(const GraphSet& gs, std::size_t max_len) {
  OracleReport report;
  report.max_len = max_len;
  for_each_cyclic_word(gs, max_len, [&](const Word& w) {
    ++report.words_checked;
    IdempotentPower e = idempotent_power(compose_word(gs, w));
    if (e.graph.has_strict_self_arc()) return true;
    report.counterexample = LassoMultipath{{}, w};
    report.idempotent = std::move(e.graph);
    return false;
  });
  return report;
}

}  // namespace sct
