#pragma once

// The closure/idempotent termination criterion and exact descent decision
// for ultimately periodic multipaths.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sct/closure.hpp"
#include "sct/graph.hpp"

namespace sct {

/// The infinite multipath prefix · period · period · ...
struct LassoMultipath {
  Word prefix;
  Word period;

  /// Base-graph index at position `pos` of the unrolled multipath.
  std::size_t at(std::size_t pos) const {
    if (pos < prefix.size()) return prefix[pos];
    return period[(pos - prefix.size()) % period.size()];
  }

  friend bool operator==(const LassoMultipath&, const LassoMultipath&) = default;
};

inline void validate_lasso(const LassoMultipath& lasso, const GraphSet& gs) {
  if (lasso.period.empty()) throw ComposabilityError("lasso period is empty");
  Word w = lasso.prefix;
  w.insert(w.end(), lasso.period.begin(), lasso.period.end());
  w.insert(w.end(), lasso.period.begin(), lasso.period.end());
  for (std::size_t i : w)
    if (i >= gs.size())
      throw ComposabilityError("lasso refers to graph index " + std::to_string(i) +
                               " outside the graph set");
  if (!is_composable(gs, w))
    throw ComposabilityError("lasso prefix·period·period is not composable");
}

/// An infinite descent: from position `start` on, every block of
/// `block_len` periods carries param↓param.
struct DescentWitness {
  ParamIndex param = 0;
  std::size_t start = 0;
  std::uint64_t block_len = 1;

  friend bool operator==(const DescentWitness&, const DescentWitness&) = default;
};

/// All parameters with an infinite descent in prefix·period^ω. Let E be the
/// idempotent power of the period's composition: a thread with infinitely
/// many strict arcs visits some parameter p at infinitely many block
/// boundaries, and idempotence folds those segments into p↓p ∈ E. The
/// converse is immediate, so the answer is exactly E's strict self-arcs.
inline std::vector<ParamIndex> descent_parameters(const LassoMultipath& lasso,
                                                  const GraphSet& gs) {
  validate_lasso(lasso, gs);
  return idempotent_power(compose_word(gs, lasso.period)).graph.strict_self_arcs();
}

inline std::optional<DescentWitness> decide_periodic_descent(const LassoMultipath& lasso,
                                                             const GraphSet& gs) {
  validate_lasso(lasso, gs);
  const IdempotentPower e = idempotent_power(compose_word(gs, lasso.period));
  const auto params = e.graph.strict_self_arcs();
  if (params.empty()) return std::nullopt;
  return DescentWitness{params.front(), lasso.prefix.size(), e.exponent};
}

/// c(i, j) = G_i; ...; G_{j-1} over the unrolled multipath.
inline SizeChangeGraph induced_pair_coloring(const LassoMultipath& lasso, const GraphSet& gs,
                                             std::size_t i, std::size_t j) {
  if (i >= j) throw DomainError("induced_pair_coloring needs i < j");
  validate_lasso(lasso, gs);
  SizeChangeGraph acc = gs[lasso.at(i)];
  for (std::size_t p = i + 1; p < j; ++p) acc = compose(acc, gs[lasso.at(p)]);
  return acc;
}

struct Counterexample {
  DerivedGraph failing_idempotent;
  LassoMultipath lasso;
};

struct Verdict {
  std::optional<Counterexample> counterexample;

  bool is_sct() const noexcept { return !counterexample.has_value(); }
};

inline Verdict check_sct_criterion(const Closure& cl, const GraphSet& gs) {
  for (const DerivedGraph& d : cl) {
    if (!is_idempotent(d.graph) || d.graph.has_strict_self_arc()) continue;
    Counterexample cx{d, LassoMultipath{{}, d.witness}};
    if (decide_periodic_descent(cx.lasso, gs))
      throw std::logic_error("criterion counterexample lasso has a descent");
    return Verdict{std::move(cx)};
  }
  return Verdict{};
}

/// SCT iff every idempotent graph of the closure has some p↓p. On failure
/// reports the first failing idempotent in witness order.
inline Verdict check_sct_criterion(const GraphSet& gs) {
  return check_sct_criterion(closure(gs), gs);
}

}  // namespace sct
