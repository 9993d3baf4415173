#pragma once

// Desk-scale versions of the pigeonhole and triangle-Ramsey principles, and
// the graph family that reduces the strong pigeonhole principle to the
// termination criterion.
//
// Infinite colorings are eventually periodic here, so "infinitely often"
// becomes "occurs in the period" (or in the cycle of a finite-state run).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sct/closure.hpp"
#include "sct/criterion.hpp"
#include "sct/graph.hpp"

namespace sct {

using Color = std::uint32_t;

/// c(x) = prefix[x] for x < |prefix|, then the period repeated forever.
struct EPColoring {
  Color k = 1;
  std::vector<Color> prefix;
  std::vector<Color> period;

  Color at(std::size_t x) const {
    if (x < prefix.size()) return prefix[x];
    return period[(x - prefix.size()) % period.size()];
  }

  void validate() const {
    if (k == 0) throw DomainError("a coloring needs at least one color");
    if (period.empty()) throw DomainError("coloring period is empty");
    for (const auto* part : {&prefix, &period})
      for (Color c : *part)
        if (c >= k) throw DomainError("color " + std::to_string(c) + " is not below k = " + std::to_string(k));
  }
};

/// The colors occurring infinitely often: exactly those in the period, ascending.
inline std::vector<Color> spp_witness(const EPColoring& c) {
  c.validate();
  std::vector<Color> out(c.period.begin(), c.period.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// c(i, j) for 0 <= i < j < n.
class PairColoring {
 public:
  PairColoring(Color k, std::size_t n) : k_(k), n_(n), values_(n * (n > 0 ? n - 1 : 0) / 2, 0) {
    if (k == 0) throw DomainError("a coloring needs at least one color");
  }

  template <class F>
  static PairColoring from(Color k, std::size_t n, F&& f) {
    PairColoring c(k, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) c.set(i, j, static_cast<Color>(f(i, j)));
    return c;
  }

  Color k() const noexcept { return k_; }
  std::size_t size() const noexcept { return n_; }

  Color at(std::size_t i, std::size_t j) const { return values_[offset(i, j)]; }

  void set(std::size_t i, std::size_t j, Color c) {
    if (c >= k_) throw DomainError("color " + std::to_string(c) + " is not below k = " + std::to_string(k_));
    values_[offset(i, j)] = c;
  }

 private:
  std::size_t offset(std::size_t i, std::size_t j) const {
    if (!(i < j && j < n_)) throw DomainError("pair coloring needs i < j < N");
    // Row i holds j = i+1 .. n-1 and starts after i*n - i*(i+1)/2 entries.
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  Color k_;
  std::size_t n_;
  std::vector<Color> values_;
};

struct StarWitness {
  std::size_t t = 0;
  Color color = 0;
  /// Every pair t < m < l < N with c(t,m) = c(t,l) = c(m,l) = color, ascending.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Smallest t, then smallest color, anchoring at least `min_triangles`
/// monochromatic triangles {t, m, l}.
inline std::optional<StarWitness> star_search(const PairColoring& c, std::size_t min_triangles) {
  const std::size_t n = c.size();
  for (std::size_t t = 0; t < n; ++t) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_color(c.k());
    for (std::size_t m = t + 1; m < n; ++m)
      for (std::size_t l = m + 1; l < n; ++l) {
        const Color col = c.at(t, m);
        if (c.at(t, l) == col && c.at(m, l) == col) by_color[col].emplace_back(m, l);
      }
    for (Color col = 0; col < c.k(); ++col)
      if (by_color[col].size() >= min_triangles)
        return StarWitness{t, col, std::move(by_color[col])};
  }
  return std::nullopt;
}

/// The coloring c(i, j) = G_i; ...; G_{j-1} of the first n positions of a
/// multipath. Colors index `palette`, which lists the distinct graphs in
/// order of first appearance.
inline PairColoring induced_coloring(const LassoMultipath& lasso, const GraphSet& gs, std::size_t n,
                                     std::vector<SizeChangeGraph>& palette) {
  validate_lasso(lasso, gs);
  palette.clear();
  std::map<SizeChangeGraph, Color> index;
  std::vector<std::vector<Color>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<SizeChangeGraph> acc;
    for (std::size_t j = i + 1; j < n; ++j) {
      const SizeChangeGraph& step = gs[lasso.at(j - 1)];
      acc = acc ? compose(*acc, step) : step;
      auto [it, fresh] = index.emplace(*acc, static_cast<Color>(palette.size()));
      if (fresh) palette.push_back(*acc);
      rows[i].push_back(it->second);
    }
  }
  PairColoring c(static_cast<Color>(std::max<std::size_t>(palette.size(), 1)), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.set(i, j, rows[i][j - i - 1]);
  return c;
}

// ---------------------------------------------------------------------------
// The reduction family.

/// A nonempty I ⊆ {0, ..., k-1} with its fixed enumeration σ_I (ascending).
struct IndexSet {
  std::uint32_t mask = 0;
  std::vector<Color> sigma;

  std::size_t size() const noexcept { return sigma.size(); }
  Color first() const { return sigma.front(); }
  Color last() const { return sigma.back(); }
  bool contains(Color c) const { return (mask >> c) & 1U; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.mask == b.mask; }
};

inline IndexSet index_set(std::vector<Color> members) {
  if (members.empty()) throw DomainError("index sets are nonempty");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  IndexSet s;
  for (Color c : members) {
    if (c >= 31) throw DomainError("color out of range for an index set");
    s.mask |= 1U << c;
  }
  s.sigma = std::move(members);
  return s;
}

inline constexpr Color max_family_colors = 10;

/// All nonempty subsets of k, ordered by size and then lexicographically.
inline std::vector<IndexSet> index_sets(Color k) {
  if (k == 0 || k > max_family_colors)
    throw DomainError("index sets need 1 <= k <= " + std::to_string(max_family_colors));
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
    std::vector<Color> members;
    for (Color c = 0; c < k; ++c)
      if ((mask >> c) & 1U) members.push_back(c);
    out.push_back(IndexSet{mask, std::move(members)});
  }
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.sigma < b.sigma;
  });
  return out;
}

/// Position of I in index_sets(k).
inline std::size_t index_set_ordinal(const IndexSet& s, Color k) {
  const auto all = index_sets(k);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].mask == s.mask) return i;
  throw DomainError("index set is not a subset of k");
}

/// z_I, e.g. z_0, z_01.
inline std::string index_set_param(const IndexSet& s) {
  std::string name = "z_";
  for (Color c : s.sigma) name += std::to_string(c);
  return name;
}

/// The single signature Z(z_I for every I) shared by the family.
inline SigRef family_sig(Color k) {
  std::vector<std::string> params;
  for (const IndexSet& s : index_sets(k)) params.push_back(index_set_param(s));
  return make_sig("Z", std::move(params));
}

/// A choice function χ: one χ_I ∈ I per index set, in index_sets(k) order.
struct ChoiceState {
  Color k = 1;
  std::vector<Color> chi;

  friend bool operator==(const ChoiceState&, const ChoiceState&) = default;
  friend auto operator<=>(const ChoiceState&, const ChoiceState&) = default;
};

/// χ_I = σ_I(0) for every I.
inline ChoiceState initial_choice(Color k) {
  ChoiceState s{k, {}};
  for (const IndexSet& I : index_sets(k)) s.chi.push_back(I.first());
  return s;
}

inline void validate_choice(const ChoiceState& s, const std::vector<IndexSet>& sets) {
  if (s.chi.size() != sets.size()) throw DomainError("choice state has the wrong number of entries");
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (s.chi[i] >= 32 || !sets[i].contains(s.chi[i]))
      throw DomainError("choice χ_I = " + std::to_string(s.chi[i]) + " is not in " + index_set_param(sets[i]));
}

/// 𝒜_{χ,i} = { I : χ_I = last(σ_I) and σ_I(0) = i }, as ordinals.
inline std::vector<std::size_t> active_family(const ChoiceState& s, Color color) {
  const auto sets = index_sets(s.k);
  validate_choice(s, sets);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (s.chi[i] == sets[i].last() && sets[i].first() == color) out.push_back(i);
  return out;
}

/// G_{χ,i}: z_I↓z_I for the largest members I of 𝒜, z_I⇓z_I for every
/// I ∉ 𝒜 at least that large, nothing else.
inline SizeChangeGraph graph_for(const ChoiceState& s, Color color, const SigRef& sig) {
  if (color >= s.k) throw DomainError("color is not below k");
  const auto sets = index_sets(s.k);
  const auto active = active_family(s, color);
  std::size_t m = 0;
  for (std::size_t a : active) m = std::max(m, sets[a].size());
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const bool in_a = std::find(active.begin(), active.end(), i) != active.end();
    const auto p = static_cast<ParamIndex>(i);
    if (in_a && sets[i].size() == m) arcs.push_back({p, ArcKind::strict, p});
    else if (!in_a && sets[i].size() >= m) arcs.push_back({p, ArcKind::nonstrict, p});
  }
  return SizeChangeGraph(sig, sig, std::move(arcs));
}

inline SizeChangeGraph graph_for(const ChoiceState& s, Color color) {
  return graph_for(s, color, family_sig(s.k));
}

inline std::string family_graph_name(const ChoiceState& s, Color color) {
  std::string name = "G_";
  for (Color c : s.chi) name += std::to_string(c);
  return name + "_" + std::to_string(color);
}

/// Every G_{χ,i}, deduplicated. Enumeration is by color, then by χ in
/// lexicographic order of its entries; a graph is named after its first (χ, i).
inline GraphSet spp_reduction_family(Color k) {
  if (k < 1 || k > 3) throw DomainError("spp_reduction_family materializes only 1 <= k <= 3");
  const auto sets = index_sets(k);
  GraphSet gs;
  const SigRef& sig = gs.add_sig(family_sig(k));
  std::map<SizeChangeGraph, std::size_t> seen;
  for (Color color = 0; color < k; ++color) {
    std::vector<std::size_t> pos(sets.size(), 0);  // odometer over σ_I positions
    for (;;) {
      ChoiceState s{k, {}};
      for (std::size_t i = 0; i < sets.size(); ++i) s.chi.push_back(sets[i].sigma[pos[i]]);
      SizeChangeGraph g = graph_for(s, color, sig);
      if (!seen.count(g)) seen.emplace(g, gs.add(g, family_graph_name(s, color)));
      std::size_t d = sets.size();
      while (d > 0 && ++pos[d - 1] == sets[d - 1].size()) pos[--d] = 0;
      if (d == 0) break;
    }
  }
  return gs;
}

/// χ_I(x+1) = σ_I(0) if |I| = 1; c(x) if χ_I(x) = σ_I(j) and σ_I(j+1 mod |I|) = c(x);
/// χ_I(x) otherwise.
inline ChoiceState chi_step(const ChoiceState& s, Color observed) {
  if (observed >= s.k) throw DomainError("observed color is not below k");
  const auto sets = index_sets(s.k);
  validate_choice(s, sets);
  ChoiceState next = s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const IndexSet& I = sets[i];
    if (I.size() == 1) {
      next.chi[i] = I.first();
      continue;
    }
    const auto j = static_cast<std::size_t>(std::find(I.sigma.begin(), I.sigma.end(), s.chi[i]) - I.sigma.begin());
    if (I.sigma[(j + 1) % I.size()] == observed) next.chi[i] = observed;
  }
  return next;
}

/// The multipath G_x = G_{χ(x), c(x)} as a lasso. The pair (χ(x), position
/// of x in the period) determines the rest of the run, so the simulation
/// stops at the first repeat once x is past the prefix.
struct ReversalRun {
  GraphSet graphs;
  LassoMultipath lasso;
  std::vector<ChoiceState> chi_trace;  // χ(x) for x < cycle_end
  std::vector<std::vector<std::size_t>> active_trace;  // 𝒜_x as ordinals
  std::size_t cycle_start = 0;
  std::size_t cycle_end = 0;
};

inline ReversalRun build_reversal_multipath(const EPColoring& c) {
  c.validate();
  ReversalRun run;
  const SigRef& sig = run.graphs.add_sig(family_sig(c.k));
  std::map<SizeChangeGraph, std::size_t> registered;
  std::map<std::pair<std::vector<Color>, std::size_t>, std::size_t> seen;
  ChoiceState chi = initial_choice(c.k);
  Word word;
  for (std::size_t x = 0;; ++x) {
    if (x >= c.prefix.size()) {
      auto key = std::make_pair(chi.chi, (x - c.prefix.size()) % c.period.size());
      auto [it, fresh] = seen.emplace(std::move(key), x);
      if (!fresh) {
        run.cycle_start = it->second;
        run.cycle_end = x;
        break;
      }
    }
    const Color color = c.at(x);
    SizeChangeGraph g = graph_for(chi, color, sig);
    auto found = registered.find(g);
    if (found == registered.end())
      found = registered.emplace(g, run.graphs.add(g, family_graph_name(chi, color))).first;
    word.push_back(found->second);
    run.chi_trace.push_back(chi);
    run.active_trace.push_back(active_family(chi, color));
    chi = chi_step(chi, color);
  }
  run.lasso.prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(run.cycle_start));
  run.lasso.period.assign(word.begin() + static_cast<std::ptrdiff_t>(run.cycle_start), word.end());
  return run;
}

struct ClaimSides {
  bool every_color_recurs = false;  // I ⊆ spp_witness(c)
  bool active_in_cycle = false;     // I ∈ 𝒜_x for some x in the cycle
};

/// Both sides of "every color of I recurs ⟺ I ∈ 𝒜_x infinitely often".
inline ClaimSides check_claim_Ax(const EPColoring& c, const IndexSet& I) {
  const auto witness = spp_witness(c);
  ClaimSides sides;
  sides.every_color_recurs = std::all_of(I.sigma.begin(), I.sigma.end(), [&](Color col) {
    return std::binary_search(witness.begin(), witness.end(), col);
  });
  const ReversalRun run = build_reversal_multipath(c);
  const std::size_t ord = index_set_ordinal(I, c.k);
  for (std::size_t x = run.cycle_start; x < run.cycle_end; ++x) {
    const auto& a = run.active_trace[x];
    if (std::find(a.begin(), a.end(), ord) != a.end()) sides.active_in_cycle = true;
  }
  return sides;
}

/// The three-graph family for two colors: G_i has z_i↓z_i and z_j⇓z_j for j > i.
inline GraphSet spp_warmup_family() {
  GraphSet gs;
  const SigRef& sig = gs.add_sig("Z", {"z_0", "z_1", "z_2"});
  for (ParamIndex i = 0; i < 3; ++i) {
    std::vector<Arc> arcs{{i, ArcKind::strict, i}};
    for (ParamIndex j = i + 1; j < 3; ++j) arcs.push_back({j, ArcKind::nonstrict, j});
    gs.add(SizeChangeGraph(sig, sig, std::move(arcs)), "G" + std::to_string(i));
  }
  return gs;
}

/// The warm-up multipath G_{g(0)}, G_{g(1)}, ... for a two-color coloring:
/// g(x) = i when c(x) = c(x+1) = i, and 2 otherwise.
inline LassoMultipath warmup_multipath(const EPColoring& c) {
  c.validate();
  if (c.k != 2) throw DomainError("the warm-up family handles exactly two colors");
  auto g = [&](std::size_t x) -> std::size_t {
    const Color a = c.at(x), b = c.at(x + 1);
    return a == b ? a : 2;
  };
  LassoMultipath l;
  for (std::size_t x = 0; x < c.prefix.size(); ++x) l.prefix.push_back(g(x));
  for (std::size_t x = 0; x < c.period.size(); ++x) l.period.push_back(g(c.prefix.size() + x));
  return l;
}

}  // namespace sct
