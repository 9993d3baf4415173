#pragma once

// Size-change graphs and their composition.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sct/errors.hpp"

namespace sct {

using ParamIndex = std::uint32_t;

/// A function signature: a name and its ordered, pairwise distinct parameters.
struct FunSig {
  std::string name;
  std::vector<std::string> params;

  std::size_t arity() const noexcept { return params.size(); }

  std::optional<ParamIndex> index_of(std::string_view param) const {
    for (std::size_t i = 0; i < params.size(); ++i)
      if (params[i] == param) return static_cast<ParamIndex>(i);
    return std::nullopt;
  }

  friend bool operator==(const FunSig&, const FunSig&) = default;
  friend auto operator<=>(const FunSig&, const FunSig&) = default;
};

using SigRef = std::shared_ptr<const FunSig>;

inline SigRef make_sig(std::string name, std::vector<std::string> params) {
  if (params.empty())
    throw InvalidGraphError("function '" + name + "' must have at least one parameter");
  for (std::size_t i = 0; i < params.size(); ++i)
    for (std::size_t j = i + 1; j < params.size(); ++j)
      if (params[i] == params[j])
        throw InvalidGraphError("function '" + name + "' repeats parameter '" +
                                params[i] + "'");
  return std::make_shared<const FunSig>(FunSig{std::move(name), std::move(params)});
}

inline bool same_sig(const SigRef& a, const SigRef& b) {
  return a == b || (a && b && *a == *b);
}

enum class ArcKind : std::uint8_t { nonstrict = 1, strict = 2 };

inline const char* to_string(ArcKind k) {
  return k == ArcKind::strict ? "strict" : "nonstrict";
}

struct Arc {
  ParamIndex src = 0;
  ArcKind kind = ArcKind::nonstrict;
  ParamIndex tgt = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc& a, const Arc& b) {
    if (auto c = a.src <=> b.src; c != 0) return c;
    if (auto c = a.tgt <=> b.tgt; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

/// A bipartite graph of strict and non-strict arcs from the parameters of
/// `source` to the parameters of `target`. Arcs are kept sorted by
/// (src, tgt), with at most one arc per pair, so equality is structural.
class SizeChangeGraph {
 public:
  SizeChangeGraph(SigRef source, SigRef target, std::vector<Arc> arcs = {})
      : source_(std::move(source)), target_(std::move(target)), arcs_(std::move(arcs)) {
    if (!source_ || !target_) throw InvalidGraphError("graph endpoint is null");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      if (a.src >= source_->arity() || a.tgt >= target_->arity())
        throw InvalidGraphError("arc parameter index out of range in graph " +
                                source_->name + " -> " + target_->name);
      if (a.kind != ArcKind::strict && a.kind != ArcKind::nonstrict)
        throw InvalidGraphError("invalid arc kind");
      if (i > 0 && arcs_[i - 1].src == a.src && arcs_[i - 1].tgt == a.tgt)
        throw InvalidGraphError("two arcs between " + source_->params[a.src] +
                                " and " + target_->params[a.tgt]);
    }
  }

  const SigRef& source() const noexcept { return source_; }
  const SigRef& target() const noexcept { return target_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::optional<ArcKind> arc(ParamIndex src, ParamIndex tgt) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{src, ArcKind::nonstrict, tgt});
    if (it != arcs_.end() && it->src == src && it->tgt == tgt) return it->kind;
    return std::nullopt;
  }

  bool is_cyclic() const { return same_sig(source_, target_); }

  /// Parameters p with p↓p, ascending. Empty unless the graph is cyclic.
  std::vector<ParamIndex> strict_self_arcs() const {
    std::vector<ParamIndex> out;
    if (!is_cyclic()) return out;
    for (const Arc& a : arcs_)
      if (a.src == a.tgt && a.kind == ArcKind::strict) out.push_back(a.src);
    return out;
  }

  bool has_strict_self_arc() const { return !strict_self_arcs().empty(); }

  friend bool operator==(const SizeChangeGraph& a, const SizeChangeGraph& b) {
    return same_sig(a.source_, b.source_) && same_sig(a.target_, b.target_) &&
           a.arcs_ == b.arcs_;
  }

  friend std::strong_ordering operator<=>(const SizeChangeGraph& a,
                                          const SizeChangeGraph& b) {
    if (auto c = *a.source_ <=> *b.source_; c != 0) return c;
    if (auto c = *a.target_ <=> *b.target_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.arcs_.begin(), a.arcs_.end(),
                                                  b.arcs_.begin(), b.arcs_.end());
  }

 private:
  SigRef source_;
  SigRef target_;
  std::vector<Arc> arcs_;
};

/// The all-nonstrict identity graph on `sig`.
inline SizeChangeGraph identity_graph(const SigRef& sig) {
  std::vector<Arc> arcs;
  for (ParamIndex p = 0; p < sig->arity(); ++p) arcs.push_back({p, ArcKind::nonstrict, p});
  return SizeChangeGraph(sig, sig, std::move(arcs));
}

/// G0;G1. Strict x→z if some linking path x→y→z has a strict arc; non-strict
/// if every linking path is non-strict on both sides.
inline SizeChangeGraph compose(const SizeChangeGraph& g0, const SizeChangeGraph& g1) {
  if (!same_sig(g0.target(), g1.source()))
    throw ComposabilityError("cannot compose " + g0.source()->name + "->" +
                             g0.target()->name + " with " + g1.source()->name +
                             "->" + g1.target()->name);
  const std::size_t mid = g0.target()->arity();
  const std::size_t out = g1.target()->arity();

  // Dense view of g1 indexed by (y, z): 0 = no arc, otherwise the ArcKind value.
  std::vector<std::uint8_t> right(mid * out, 0);
  for (const Arc& a : g1.arcs()) right[a.tgt + a.src * out] = static_cast<std::uint8_t>(a.kind);

  std::vector<std::uint8_t> result(g0.source()->arity() * out, 0);
  for (const Arc& a : g0.arcs()) {
    const auto k0 = static_cast<std::uint8_t>(a.kind);
    for (std::size_t z = 0; z < out; ++z) {
      const std::uint8_t k1 = right[a.tgt * out + z];
      if (k1 == 0) continue;
      std::uint8_t& cell = result[a.src * out + z];
      cell = std::max({cell, k0, k1});
    }
  }

  std::vector<Arc> arcs;
  for (std::size_t x = 0; x < g0.source()->arity(); ++x)
    for (std::size_t z = 0; z < out; ++z)
      if (std::uint8_t k = result[x * out + z])
        arcs.push_back({static_cast<ParamIndex>(x), static_cast<ArcKind>(k),
                        static_cast<ParamIndex>(z)});
  return SizeChangeGraph(g0.source(), g1.target(), std::move(arcs));
}

inline bool is_idempotent(const SizeChangeGraph& g) {
  return g.is_cyclic() && compose(g, g) == g;
}

/// Number of distinct graphs between two signatures: 3^(m*n), saturating.
inline std::uint64_t graph_count_bound(std::size_t m, std::size_t n) {
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < m * n; ++i) {
    if (bound > UINT64_MAX / 3) return UINT64_MAX;
    bound *= 3;
  }
  return bound;
}

struct IdempotentPower {
  SizeChangeGraph graph;
  std::uint64_t exponent;
};

/// The unique idempotent among g, g², g³, ... and the least exponent reaching it.
inline IdempotentPower idempotent_power(const SizeChangeGraph& g) {
  if (!g.is_cyclic())
    throw ComposabilityError("idempotent_power needs a graph with source = target, got " +
                             g.source()->name + "->" + g.target()->name);
  const std::uint64_t bound = graph_count_bound(g.source()->arity(), g.source()->arity());
  SizeChangeGraph power = g;
  for (std::uint64_t n = 1;; ++n) {
    if (is_idempotent(power)) return {power, n};
    if (n >= bound) throw std::logic_error("idempotent_power exceeded 3^(arity^2) steps");
    power = compose(power, g);
  }
}

/// A finite word of base-graph indices.
using Word = std::vector<std::size_t>;

/// A finite, indexed list of size-change graphs over a fixed set of signatures.
class GraphSet {
 public:
  GraphSet() = default;

  SigRef add_sig(SigRef sig) {
    if (!sig) throw InvalidGraphError("null signature");
    if (find_sig(sig->name)) throw InvalidGraphError("duplicate function '" + sig->name + "'");
    sigs_.push_back(sig);
    return sig;
  }

  SigRef add_sig(std::string name, std::vector<std::string> params) {
    return add_sig(make_sig(std::move(name), std::move(params)));
  }

  /// Appends a graph; endpoints must be signatures of this set.
  std::size_t add(SizeChangeGraph g, std::string name = {}) {
    check_endpoints(g);
    if (name.empty()) name = "G" + std::to_string(graphs_.size());
    for (const auto& n : names_)
      if (n == name) throw InvalidGraphError("duplicate graph name '" + name + "'");
    graphs_.push_back(std::move(g));
    names_.push_back(std::move(name));
    return graphs_.size() - 1;
  }

  /// Replaces graph i, keeping its name.
  void replace(std::size_t i, SizeChangeGraph g) {
    check_endpoints(g);
    graphs_.at(i) = std::move(g);
  }

  SigRef find_sig(std::string_view name) const {
    for (const auto& s : sigs_)
      if (s->name == name) return s;
    return nullptr;
  }

  const SigRef& sig(std::string_view name) const {
    for (const auto& s : sigs_)
      if (s->name == name) return s;
    throw InvalidGraphError("unknown function '" + std::string(name) + "'");
  }

  std::optional<std::size_t> find_name(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  const std::vector<SigRef>& sigs() const noexcept { return sigs_; }
  const std::vector<SizeChangeGraph>& graphs() const noexcept { return graphs_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const SizeChangeGraph& operator[](std::size_t i) const { return graphs_.at(i); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t size() const noexcept { return graphs_.size(); }
  bool empty() const noexcept { return graphs_.empty(); }

 private:
  void check_endpoints(const SizeChangeGraph& g) const {
    for (const SigRef* end : {&g.source(), &g.target()}) {
      const SigRef found = find_sig((*end)->name);
      if (!found || !same_sig(found, *end))
        throw InvalidGraphError("graph endpoint '" + (*end)->name + "' is not in the set");
    }
  }

  std::vector<SigRef> sigs_;
  std::vector<SizeChangeGraph> graphs_;
  std::vector<std::string> names_;
};

inline bool is_composable(const GraphSet& gs, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!same_sig(gs[w[i]].target(), gs[w[i + 1]].source())) return false;
  return true;
}

/// Left-to-right composition of a nonempty composable word.
inline SizeChangeGraph compose_word(const GraphSet& gs, const Word& w) {
  if (w.empty()) throw ComposabilityError("cannot compose an empty word");
  for (std::size_t i : w)
    if (i >= gs.size()) throw ComposabilityError("graph index " + std::to_string(i) + " out of range");
  SizeChangeGraph acc = gs[w.front()];
  for (std::size_t i = 1; i < w.size(); ++i) acc = compose(acc, gs[w[i]]);
  return acc;
}

}  // namespace sct
