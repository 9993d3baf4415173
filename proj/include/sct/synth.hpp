#pragma once

// Compiles a graph set into a program that it describes.
//
// Every function is padded to the largest arity n. A function with k
// outgoing graphs dispatches on x_0 = 0, ..., x_0 = k-2 (the last graph takes
// the final else); branch h calls the target of its graph with argument j
// equal to x_s - 1 for an arc x_s↓y_j, x_s for x_s⇓y_j, and x_j + 1 when no
// arc enters y_j. A function without outgoing graphs returns x_0.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "sct/ast.hpp"
#include "sct/graph.hpp"
#include "sct/parser.hpp"

namespace sct {

namespace detail {

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return !is_keyword(s) && !prim_op_from_name(s);
}

inline std::vector<std::string> padded_params(const FunSig& sig, std::size_t n) {
  std::vector<std::string> params = sig.params;
  for (std::size_t j = sig.arity(); j < n; ++j) {
    std::string name = "p" + std::to_string(j);
    while (sig.index_of(name)) name += "_";
    params.push_back(std::move(name));
  }
  return params;
}

}  // namespace detail

inline Program synthesize(const GraphSet& gs) {
  if (gs.empty()) throw DomainError("cannot synthesize a program from an empty graph set");
  std::size_t n = 0;
  for (const auto& s : gs.sigs()) {
    if (!detail::is_identifier(s->name))
      throw UnsupportedInputError("function name '" + s->name + "' is not a valid identifier");
    for (const auto& param : s->params)
      if (!detail::is_identifier(param))
        throw UnsupportedInputError("parameter name '" + param + "' is not a valid identifier");
    n = std::max(n, s->arity());
  }

  Program p;
  for (const auto& s : gs.sigs()) p.defs.push_back(FunDef{FunSig{s->name, detail::padded_params(*s, n)}, {}, {}});

  for (FunDef& def : p.defs) {
    const auto& x = def.sig.params;
    std::vector<Expr> calls;
    for (std::size_t g = 0; g < gs.size(); ++g) {
      const SizeChangeGraph& graph = gs[g];
      if (graph.source()->name != def.sig.name) continue;
      std::vector<Expr> args;
      for (std::size_t j = 0; j < n; ++j) {
        const Arc* into = nullptr;
        for (const Arc& a : graph.arcs()) {
          if (a.tgt != j) continue;
          if (into)
            throw UnsupportedInputError("graph '" + gs.name(g) + "' has two arcs into parameter '" +
                                        graph.target()->params[j] + "'");
          into = &a;
        }
        if (!into) args.push_back(succ(x[j]));
        else if (into->kind == ArcKind::strict) args.push_back(pred(x[into->src]));
        else args.push_back(var(x[into->src]));
      }
      calls.push_back(call(graph.target()->name, std::move(args)));
    }

    if (calls.empty()) {
      def.body = leaf(var(x[0]));
      continue;
    }
    CondExpr body = leaf(std::move(calls.back()));
    for (std::size_t h = calls.size() - 1; h-- > 0;)
      body = if_then_else(eq(x[0], h), leaf(std::move(calls[h])), std::move(body));
    def.body = std::move(body);
  }
  validate(p);
  return p;
}

}  // namespace sct
