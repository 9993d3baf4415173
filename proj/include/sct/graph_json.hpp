#pragma once

// Graph-set and verdict JSON.
//
//   {"functions":[{"name":"A","params":["x","y"]}],
//    "graphs":[{"name":"G01","source":"A","target":"A",
//               "arcs":[{"from":"x","kind":"strict","to":"x"}]}]}

#include <string>
#include <vector>

#include "json.hpp"
#include "sct/criterion.hpp"
#include "sct/graph.hpp"

namespace sct {

using Json = nlohmann::ordered_json;

inline Json arc_to_json(const Arc& a, const FunSig& src, const FunSig& tgt) {
  return Json{{"from", src.params[a.src]}, {"kind", to_string(a.kind)}, {"to", tgt.params[a.tgt]}};
}

inline Json graph_to_json(const SizeChangeGraph& g, const std::string& name) {
  Json arcs = Json::array();
  for (const Arc& a : g.arcs()) arcs.push_back(arc_to_json(a, *g.source(), *g.target()));
  Json j;
  j["name"] = name;
  j["source"] = g.source()->name;
  j["target"] = g.target()->name;
  j["arcs"] = std::move(arcs);
  return j;
}

inline Json sig_to_json(const FunSig& s) {
  return Json{{"name", s.name}, {"params", s.params}};
}

inline Json to_json(const GraphSet& gs) {
  Json fns = Json::array();
  for (const auto& s : gs.sigs()) fns.push_back(sig_to_json(*s));
  Json graphs = Json::array();
  for (std::size_t i = 0; i < gs.size(); ++i) graphs.push_back(graph_to_json(gs[i], gs.name(i)));
  Json j;
  j["functions"] = std::move(fns);
  j["graphs"] = std::move(graphs);
  return j;
}

inline Json word_to_json(const Word& w, const GraphSet& gs) {
  Json out = Json::array();
  for (std::size_t i : w) out.push_back(gs.name(i));
  return out;
}

inline Json lasso_to_json(const LassoMultipath& l, const GraphSet& gs) {
  return Json{{"prefix", word_to_json(l.prefix, gs)}, {"period", word_to_json(l.period, gs)}};
}

inline Json verdict_to_json(const Verdict& v, const GraphSet& gs) {
  Json j;
  j["sct"] = v.is_sct();
  if (v.counterexample) {
    const auto& cx = *v.counterexample;
    Json idem = graph_to_json(cx.failing_idempotent.graph, "idempotent");
    idem["witness"] = word_to_json(cx.failing_idempotent.witness, gs);
    j["failing_idempotent"] = std::move(idem);
    j["lasso"] = lasso_to_json(cx.lasso, gs);
  } else {
    j["failing_idempotent"] = nullptr;
    j["lasso"] = nullptr;
  }
  return j;
}

namespace detail {

inline std::string pointer_join(const std::string& base, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') escaped += "~0";
    else if (c == '/') escaped += "~1";
    else escaped += c;
  }
  return base + "/" + escaped;
}

inline std::string pointer_join(const std::string& base, std::size_t i) {
  return base + "/" + std::to_string(i);
}

inline const Json& member(const Json& obj, const std::string& at, const std::string& key) {
  if (!obj.is_object()) throw SchemaError(at.empty() ? "/" : at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(pointer_join(at, key), "missing member");
  return *it;
}

inline std::string string_at(const Json& v, const std::string& at) {
  if (!v.is_string()) throw SchemaError(at, "expected a string");
  auto s = v.get<std::string>();
  if (s.empty()) throw SchemaError(at, "empty string");
  return s;
}

inline const Json& array_at(const Json& v, const std::string& at) {
  if (!v.is_array()) throw SchemaError(at, "expected an array");
  return v;
}

}  // namespace detail

/// Parses and validates a graph set; failures name the offending value by JSON pointer.
inline GraphSet graph_set_from_json(const Json& j) {
  using namespace detail;
  GraphSet gs;
  const Json& fns = array_at(member(j, "", "functions"), "/functions");
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const std::string at = pointer_join("/functions", i);
    std::string name = string_at(member(fns[i], at, "name"), pointer_join(at, "name"));
    if (gs.find_sig(name)) throw SchemaError(pointer_join(at, "name"), "duplicate function '" + name + "'");
    const Json& ps = array_at(member(fns[i], at, "params"), pointer_join(at, "params"));
    if (ps.empty()) throw SchemaError(pointer_join(at, "params"), "a function needs at least one parameter");
    std::vector<std::string> params;
    for (std::size_t p = 0; p < ps.size(); ++p) {
      std::string pname = string_at(ps[p], pointer_join(pointer_join(at, "params"), p));
      for (const auto& q : params)
        if (q == pname)
          throw SchemaError(pointer_join(pointer_join(at, "params"), p), "duplicate parameter '" + pname + "'");
      params.push_back(std::move(pname));
    }
    gs.add_sig(std::move(name), std::move(params));
  }

  const Json& graphs = array_at(member(j, "", "graphs"), "/graphs");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const std::string at = pointer_join("/graphs", i);
    const Json& g = graphs[i];
    std::string name;
    if (g.is_object() && g.contains("name")) {
      name = string_at(g["name"], pointer_join(at, "name"));
      if (gs.find_name(name)) throw SchemaError(pointer_join(at, "name"), "duplicate graph name '" + name + "'");
    }
    auto sig_for = [&](const char* key) {
      const std::string p = pointer_join(at, key);
      std::string n = string_at(member(g, at, key), p);
      SigRef s = gs.find_sig(n);
      if (!s) throw SchemaError(p, "unknown function '" + n + "'");
      return s;
    };
    SigRef src = sig_for("source");
    SigRef tgt = sig_for("target");
    const std::string arcs_at = pointer_join(at, "arcs");
    const Json& arcs = array_at(member(g, at, "arcs"), arcs_at);
    std::vector<Arc> parsed;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const std::string aat = pointer_join(arcs_at, a);
      auto param = [&](const char* key, const SigRef& sig) {
        const std::string p = pointer_join(aat, key);
        std::string n = string_at(member(arcs[a], aat, key), p);
        auto idx = sig->index_of(n);
        if (!idx) throw SchemaError(p, "unknown parameter '" + n + "' of function '" + sig->name + "'");
        return *idx;
      };
      ParamIndex from = param("from", src);
      ParamIndex to = param("to", tgt);
      std::string kind = string_at(member(arcs[a], aat, "kind"), pointer_join(aat, "kind"));
      ArcKind k;
      if (kind == "strict") k = ArcKind::strict;
      else if (kind == "nonstrict") k = ArcKind::nonstrict;
      else throw SchemaError(pointer_join(aat, "kind"), "kind must be \"strict\" or \"nonstrict\"");
      for (const Arc& prev : parsed)
        if (prev.src == from && prev.tgt == to)
          throw SchemaError(aat, "second arc between the same pair of parameters");
      parsed.push_back({from, k, to});
    }
    try {
      gs.add(SizeChangeGraph(src, tgt, std::move(parsed)), std::move(name));
    } catch (const InvalidGraphError& e) {
      throw SchemaError(at, e.what());
    }
  }
  return gs;
}

inline GraphSet graph_set_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("invalid JSON: ") + e.what());
  }
  return graph_set_from_json(j);
}

}  // namespace sct
