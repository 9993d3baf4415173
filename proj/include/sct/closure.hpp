#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sct/graph.hpp"

namespace sct {

/// A closure element together with a word of base graphs composing to it.
struct DerivedGraph {
  SizeChangeGraph graph;
  Word witness;
};

/// cl(G): every graph obtainable by composing a nonempty composable word of
/// base graphs, one entry per distinct graph. Elements are stored in
/// shortlex order of their witness words, and each witness is the
/// shortlex-least word producing its graph.
class Closure {
 public:
  const std::vector<DerivedGraph>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }
  const DerivedGraph& operator[](std::size_t i) const { return elements_.at(i); }

  const DerivedGraph* find(const SizeChangeGraph& g) const {
    auto it = index_.find(g);
    return it == index_.end() ? nullptr : &elements_[it->second];
  }

  bool contains(const SizeChangeGraph& g) const { return index_.count(g) != 0; }

  /// Length of the longest witness word.
  std::size_t max_witness_length() const {
    std::size_t n = 0;
    for (const auto& e : elements_) n = std::max(n, e.witness.size());
    return n;
  }

 private:
  friend Closure closure(const GraphSet& gs);

  bool insert(SizeChangeGraph g, Word w) {
    auto [it, fresh] = index_.emplace(g, elements_.size());
    if (fresh) elements_.push_back({std::move(g), std::move(w)});
    return fresh;
  }

  std::vector<DerivedGraph> elements_;
  std::map<SizeChangeGraph, std::size_t> index_;
};

/// Breadth-first fixpoint: level L holds the graphs whose least witness has
/// length L. Every graph of the closure is a base graph or a closure element
/// extended on the right by one base graph, and prefixes of shortlex-least
/// words are themselves shortlex-least, so extending each level in witness
/// order by base graphs in index order yields least witnesses.
inline Closure closure(const GraphSet& gs) {
  Closure cl;
  std::vector<std::size_t> frontier;
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (cl.insert(gs[i], Word{i})) frontier.push_back(cl.size() - 1);

  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t e : frontier) {
      for (std::size_t i = 0; i < gs.size(); ++i) {
        const DerivedGraph& d = cl.elements_[e];
        if (!same_sig(d.graph.target(), gs[i].source())) continue;
        SizeChangeGraph h = compose(d.graph, gs[i]);
        if (cl.contains(h)) continue;
        Word w = d.witness;
        w.push_back(i);
        cl.insert(std::move(h), std::move(w));
        next.push_back(cl.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return cl;
}

}  // namespace sct
