#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace sct;

namespace {

const SigRef A = make_sig("A", {"x", "y"});
const SizeChangeGraph G01(A, A, {{0, ArcKind::strict, 0}});
const SizeChangeGraph G2(A, A, {{0, ArcKind::nonstrict, 0}, {1, ArcKind::strict, 1}});

const SigRef F = make_sig("f", {"x", "y"});
const SizeChangeGraph S(F, F, {{0, ArcKind::nonstrict, 1}, {1, ArcKind::nonstrict, 0}});
const SizeChangeGraph SS(F, F, {{0, ArcKind::nonstrict, 0}, {1, ArcKind::nonstrict, 1}});

}  // namespace

TEST_CASE("arcs are sorted and looked up by endpoints", "[graph]") {
  SizeChangeGraph g(A, A, {{1, ArcKind::strict, 1}, {0, ArcKind::nonstrict, 0}});
  REQUIRE(g == G2);
  CHECK(g.arc(1, 1) == ArcKind::strict);
  CHECK(g.arc(0, 0) == ArcKind::nonstrict);
  CHECK_FALSE(g.arc(0, 1).has_value());
  CHECK(g.strict_self_arcs() == std::vector<ParamIndex>{1});
}

TEST_CASE("graph invariants are enforced", "[graph]") {
  CHECK_THROWS_AS(SizeChangeGraph(A, A, {{0, ArcKind::strict, 0}, {0, ArcKind::nonstrict, 0}}),
                  InvalidGraphError);
  CHECK_THROWS_AS(SizeChangeGraph(A, A, {{2, ArcKind::strict, 0}}), InvalidGraphError);
  CHECK_THROWS_AS(make_sig("f", {"x", "x"}), InvalidGraphError);
  CHECK_THROWS_AS(make_sig("f", {}), InvalidGraphError);
}

TEST_CASE("equality is structural across signature copies", "[graph]") {
  const SigRef a2 = make_sig("A", {"x", "y"});
  CHECK(SizeChangeGraph(a2, a2, {{0, ArcKind::strict, 0}}) == G01);
  const SigRef b = make_sig("B", {"x", "y"});
  CHECK_FALSE(SizeChangeGraph(b, b, {{0, ArcKind::strict, 0}}) == G01);
}

TEST_CASE("composition examples", "[graph][compose]") {
  CHECK(compose(G01, G2) == SizeChangeGraph(A, A, {{0, ArcKind::strict, 0}}));
  CHECK(compose(S, S) == SS);

  const SigRef h = make_sig("h", {"u"});
  const SizeChangeGraph g(A, h, {{1, ArcKind::strict, 0}, {0, ArcKind::nonstrict, 0}});
  CHECK(compose(identity_graph(A), g) == g);
  CHECK(compose(g, identity_graph(h)) == g);
}

TEST_CASE("a strict arc anywhere on a linking path wins", "[graph][compose]") {
  // x⇓y then y↓z, and x↓y' then y'⇓z: both give x↓z, merged into one arc.
  const SigRef m = make_sig("m", {"y", "y2"});
  const SigRef t = make_sig("t", {"z"});
  SizeChangeGraph g0(A, m, {{0, ArcKind::nonstrict, 0}, {0, ArcKind::nonstrict, 1}});
  SizeChangeGraph g1(m, t, {{0, ArcKind::nonstrict, 0}, {1, ArcKind::strict, 0}});
  const SizeChangeGraph c = compose(g0, g1);
  REQUIRE(c.arcs().size() == 1);
  CHECK(c.arc(0, 0) == ArcKind::strict);
}

TEST_CASE("composing mismatched graphs is an error", "[graph][compose]") {
  CHECK_THROWS_AS(compose(G01, S), ComposabilityError);
  GraphSet gs = fixtures::ackermann_graphs();
  CHECK_THROWS_AS(compose_word(gs, {}), ComposabilityError);
  CHECK_THROWS_AS(compose_word(gs, {7}), ComposabilityError);
}

TEST_CASE("composition matches the edge-set definition", "[graph][compose][random]") {
  std::mt19937_64 rng(7);
  const char* names[] = {"f", "g", "h"};
  for (int trial = 0; trial < 2000; ++trial) {
    SigRef s[3];
    for (int i = 0; i < 3; ++i) s[i] = test::random_sig(rng, names[i], 3);
    const SizeChangeGraph g0 = test::random_graph(rng, s[0], s[1]);
    const SizeChangeGraph g1 = test::random_graph(rng, s[1], s[2]);
    REQUIRE(compose(g0, g1) == test::ref_compose(g0, g1));
  }
}

TEST_CASE("idempotence examples", "[graph][idempotent]") {
  CHECK(is_idempotent(G2));
  CHECK_FALSE(is_idempotent(S));
  CHECK(is_idempotent(SizeChangeGraph(F, F)));
  const SigRef g = make_sig("g", {"x", "y"});
  CHECK_FALSE(is_idempotent(SizeChangeGraph(F, g)));
}

TEST_CASE("idempotent power examples", "[graph][idempotent]") {
  auto s = idempotent_power(S);
  CHECK(s.graph == SS);
  CHECK(s.exponent == 2);

  auto g2 = idempotent_power(G2);
  CHECK(g2.graph == G2);
  CHECK(g2.exponent == 1);

  const SizeChangeGraph D(F, F, {{0, ArcKind::strict, 1}, {1, ArcKind::strict, 0}});
  auto d = idempotent_power(D);
  CHECK(d.graph == SizeChangeGraph(F, F, {{0, ArcKind::strict, 0}, {1, ArcKind::strict, 1}}));
  CHECK(d.exponent == 2);

  const SigRef g = make_sig("g", {"x", "y"});
  CHECK_THROWS_AS(idempotent_power(SizeChangeGraph(F, g)), ComposabilityError);
}

TEST_CASE("idempotent power is the first idempotent power", "[graph][idempotent][random]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const SigRef f = test::random_sig(rng, "f", 3);
    const SizeChangeGraph g = test::random_graph(rng, f, f);
    const IdempotentPower e = idempotent_power(g);
    REQUIRE(e.graph == test::ref_power(g, e.exponent));
    REQUIRE(test::ref_compose(e.graph, e.graph) == e.graph);
    for (std::uint64_t n = 1; n < e.exponent; ++n) {
      const SizeChangeGraph p = test::ref_power(g, n);
      REQUIRE_FALSE(test::ref_compose(p, p) == p);
    }
  }
}

TEST_CASE("graph count bound", "[graph]") {
  CHECK(graph_count_bound(1, 1) == 3);
  CHECK(graph_count_bound(2, 2) == 81);
  CHECK(graph_count_bound(3, 3) == 19683);
  CHECK(graph_count_bound(100, 100) == UINT64_MAX);
}

TEST_CASE("graph sets check names and endpoints", "[graph][graphset]") {
  GraphSet gs;
  const SigRef a = gs.add_sig("A", {"x", "y"});
  CHECK_THROWS_AS(gs.add_sig("A", {"z"}), InvalidGraphError);
  CHECK(gs.add(SizeChangeGraph(a, a)) == 0);
  CHECK(gs.name(0) == "G0");
  CHECK_THROWS_AS(gs.add(SizeChangeGraph(a, a), "G0"), InvalidGraphError);
  CHECK_THROWS_AS(gs.add(S), InvalidGraphError);
  const SigRef other = make_sig("A", {"x"});
  CHECK_THROWS_AS(gs.add(SizeChangeGraph(other, other)), InvalidGraphError);
  gs.replace(0, G01);
  CHECK(gs[0] == G01);
  CHECK(gs.find_name("G0") == 0u);
  CHECK_FALSE(gs.find_name("nope").has_value());
}

TEST_CASE("composable words", "[graph][graphset]") {
  GraphSet gs;
  const SigRef f = gs.add_sig("f", {"x"});
  const SigRef g = gs.add_sig("g", {"x"});
  gs.add(SizeChangeGraph(f, g, {{0, ArcKind::strict, 0}}), "fg");
  gs.add(SizeChangeGraph(g, f, {{0, ArcKind::nonstrict, 0}}), "gf");
  CHECK(is_composable(gs, {0, 1, 0}));
  CHECK_FALSE(is_composable(gs, {0, 0}));
  CHECK(compose_word(gs, {0, 1}) == SizeChangeGraph(f, f, {{0, ArcKind::strict, 0}}));
}
