#pragma once

// Named fixtures shipped with the tool (`sct fixtures`).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sct/graph.hpp"
#include "sct/graph_json.hpp"
#include "sct/principles.hpp"

namespace sct::fixtures {

inline constexpr std::string_view ackermann_source =
    "# Peter-Ackermann function\n"
    "A(x, y) = if x = 0 then y + 1\n"
    "          else if y = 0 then A(x - 1, 1)\n"
    "          else A(x - 1, A(x, y - 1))\n";

/// G01 = {x↓x} (describes A(x-1, 1) and A(x-1, A(x, y-1))), G2 = {x⇓x, y↓y}.
inline GraphSet ackermann_graphs() {
  GraphSet gs;
  const SigRef& a = gs.add_sig("A", {"x", "y"});
  gs.add(SizeChangeGraph(a, a, {{0, ArcKind::strict, 0}}), "G01");
  gs.add(SizeChangeGraph(a, a, {{0, ArcKind::nonstrict, 0}, {1, ArcKind::strict, 1}}), "G2");
  return gs;
}

/// S = {x⇓y, y⇓x}: argument swap, not size-change terminating.
inline GraphSet swap_graphs() {
  GraphSet gs;
  const SigRef& f = gs.add_sig("f", {"x", "y"});
  gs.add(SizeChangeGraph(f, f, {{0, ArcKind::nonstrict, 1}, {1, ArcKind::nonstrict, 0}}), "S");
  return gs;
}

struct FixtureFile {
  std::string name;
  std::string contents;
};

inline std::vector<FixtureFile> all() {
  auto dump = [](const GraphSet& gs) { return to_json(gs).dump(2) + "\n"; };
  return {
      {"ackermann.sct", std::string(ackermann_source)},
      {"ackermann-graphs.json", dump(ackermann_graphs())},
      {"swap-graphs.json", dump(swap_graphs())},
      {"spp-warmup.json", dump(spp_warmup_family())},
  };
}

}  // namespace sct::fixtures
