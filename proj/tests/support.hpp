#pragma once

// Shared helpers for the test binaries: random graph sets and reference
// implementations that do not reuse the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sct/sct.hpp"

namespace sct::test {

/// Composition straight from the edge-set definition: collect every linking
/// path x→y→z, then keep one arc per (x, z), strict if any path is strict.
inline SizeChangeGraph ref_compose(const SizeChangeGraph& g0, const SizeChangeGraph& g1) {
  std::set<std::tuple<ParamIndex, ParamIndex, bool>> paths;
  for (const Arc& a : g0.arcs())
    for (const Arc& b : g1.arcs())
      if (a.tgt == b.src)
        paths.emplace(a.src, b.tgt, a.kind == ArcKind::strict || b.kind == ArcKind::strict);
  std::map<std::pair<ParamIndex, ParamIndex>, bool> merged;
  for (auto [x, z, strict] : paths) merged[{x, z}] = merged[{x, z}] || strict;
  std::vector<Arc> arcs;
  for (auto [xz, strict] : merged)
    arcs.push_back({xz.first, strict ? ArcKind::strict : ArcKind::nonstrict, xz.second});
  return SizeChangeGraph(g0.source(), g1.target(), arcs);
}

inline SizeChangeGraph ref_compose_word(const GraphSet& gs, const Word& w) {
  SizeChangeGraph acc = gs[w.front()];
  for (std::size_t i = 1; i < w.size(); ++i) acc = ref_compose(acc, gs[w[i]]);
  return acc;
}

/// Every composable word of length 1..max_len, shortlex order, by plain
/// enumeration of all index tuples.
inline std::vector<Word> all_composable_words(const GraphSet& gs, std::size_t max_len) {
  std::vector<Word> out;
  const std::size_t n = gs.size();
  for (std::size_t len = 1; len <= max_len && n > 0; ++len) {
    Word w(len, 0);
    while (true) {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < len && ok; ++i)
        ok = same_sig(gs[w[i]].target(), gs[w[i + 1]].source());
      if (ok) out.push_back(w);
      std::size_t pos = len;
      while (pos > 0 && ++w[pos - 1] == n) w[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return out;
}

/// g^n by repeated reference composition.
inline SizeChangeGraph ref_power(const SizeChangeGraph& g, std::uint64_t n) {
  SizeChangeGraph acc = g;
  for (std::uint64_t i = 1; i < n; ++i) acc = ref_compose(acc, g);
  return acc;
}

struct RandomSetShape {
  std::size_t max_functions = 2;
  std::size_t max_arity = 2;
  std::size_t max_graphs = 3;
  /// Keep at most one arc into each target parameter.
  bool single_arc_per_target = false;
};

inline SigRef random_sig(std::mt19937_64& rng, const std::string& name, std::size_t max_arity) {
  std::uniform_int_distribution<std::size_t> ar(1, max_arity);
  const std::size_t n = ar(rng);
  std::vector<std::string> params;
  static const char* names[] = {"x", "y", "z", "u", "v", "w"};
  for (std::size_t i = 0; i < n; ++i) params.push_back(names[i]);
  return make_sig(name, params);
}

inline SizeChangeGraph random_graph(std::mt19937_64& rng, const SigRef& src, const SigRef& tgt,
                                    bool single_arc_per_target = false) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::vector<Arc> arcs;
  if (single_arc_per_target) {
    for (ParamIndex y = 0; y < tgt->arity(); ++y) {
      std::uniform_int_distribution<std::size_t> pick(0, src->arity());
      const std::size_t x = pick(rng);
      if (x == src->arity()) continue;
      arcs.push_back({static_cast<ParamIndex>(x), kind(rng) == 0 ? ArcKind::strict : ArcKind::nonstrict, y});
    }
  } else {
    for (ParamIndex x = 0; x < src->arity(); ++x)
      for (ParamIndex y = 0; y < tgt->arity(); ++y)
        if (int k = kind(rng)) arcs.push_back({x, static_cast<ArcKind>(k), y});
  }
  return SizeChangeGraph(src, tgt, std::move(arcs));
}

inline GraphSet random_graph_set(std::mt19937_64& rng, const RandomSetShape& shape) {
  std::uniform_int_distribution<std::size_t> nf(1, shape.max_functions), ng(1, shape.max_graphs);
  GraphSet gs;
  const std::size_t fns = nf(rng);
  std::vector<SigRef> sigs;
  static const char* fnames[] = {"f", "g", "h", "k"};
  for (std::size_t i = 0; i < fns; ++i) sigs.push_back(gs.add_sig(random_sig(rng, fnames[i], shape.max_arity)));
  std::uniform_int_distribution<std::size_t> pick(0, fns - 1);
  const std::size_t count = ng(rng);
  for (std::size_t i = 0; i < count; ++i)
    gs.add(random_graph(rng, sigs[pick(rng)], sigs[pick(rng)], shape.single_arc_per_target));
  return gs;
}

inline std::multiset<SizeChangeGraph> graph_multiset(const GraphSet& gs) {
  return {gs.graphs().begin(), gs.graphs().end()};
}

/// Hand recurrences for the Ackermann function on small first arguments.
inline Nat ackermann_by_recurrence(Nat x, Nat y) {
  switch (x) {
    case 0: return y + 1;
    case 1: return y + 2;
    case 2: return 2 * y + 3;
    case 3: return (Nat{1} << (y + 3)) - 3;
    default: throw std::out_of_range("no closed form for x > 3");
  }
}

inline Program ackermann_program() { return parse_program(fixtures::ackermann_source); }

}  // namespace sct::test
