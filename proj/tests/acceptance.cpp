// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace sct;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

void ackermann_golden(Outcome& o) {
  const Program p = test::ackermann_program();
  const Description d = extract_description(p, ExtractMode::guarded);
  const GraphSet want = fixtures::ackermann_graphs();
  if (d.size() != 3) return o.fail("expected 3 call sites");
  if (d.graphs.names() != std::vector<std::string>{"tau0", "tau1", "tau2"}) o.fail("site names");
  if (!(d.graph_for(0) == want[0])) o.fail("tau0 is not G01");
  if (!(d.graph_for(1) == want[0])) o.fail("tau1 is not G01");
  if (!(d.graph_for(2) == want[1])) o.fail("tau2 is not G2");
  const Closure cl = closure(d.graphs);
  if (cl.size() != 2) o.fail("closure size " + std::to_string(cl.size()));
  if (!check_sct_criterion(cl, d.graphs).is_sct()) o.fail("verdict is not SCT");
  o.detail << "closure size " << cl.size();
}

void composition_algebra(Outcome& o) {
  std::mt19937_64 rng(1001);
  const char* names[] = {"f", "g", "h"};
  std::size_t triples = 0, powers = 0;
  std::uint64_t worst = 0;
  for (; triples < 10000; ++triples) {
    SigRef s[4];
    for (int i = 0; i < 3; ++i) s[i] = test::random_sig(rng, names[i], 3);
    s[3] = s[0];
    SizeChangeGraph g[3] = {test::random_graph(rng, s[0], s[1]), test::random_graph(rng, s[1], s[2]),
                            test::random_graph(rng, s[2], s[3])};
    const SizeChangeGraph left = compose(compose(g[0], g[1]), g[2]);
    const SizeChangeGraph right = compose(g[0], compose(g[1], g[2]));
    if (!(left == right)) o.fail("associativity");
    if (!(left == test::ref_compose(test::ref_compose(g[0], g[1]), g[2]))) o.fail("composition formula");
    for (std::size_t i = 1; i < left.arcs().size(); ++i)
      if (left.arcs()[i - 1].src == left.arcs()[i].src && left.arcs()[i - 1].tgt == left.arcs()[i].tgt)
        o.fail("two arcs between one pair");
    // The triple's composition is cyclic (f → f): its idempotent power.
    const std::uint64_t bound = graph_count_bound(s[0]->arity(), s[0]->arity());
    const IdempotentPower e = idempotent_power(left);
    ++powers;
    worst = std::max(worst, e.exponent);
    if (e.exponent > bound) o.fail("idempotent power past 3^(n^2)");
    if (!(test::ref_compose(e.graph, e.graph) == e.graph)) o.fail("power is not idempotent");
    if (!(e.graph == test::ref_power(left, e.exponent))) o.fail("power is not left^n");
  }
  o.detail << triples << " triples, " << powers << " idempotent powers, largest exponent " << worst;
}

void criterion_vs_oracle(Outcome& o) {
  std::mt19937_64 rng(1002);
  std::size_t sets = 0, not_sct = 0;
  for (; sets < 500; ++sets) {
    const GraphSet gs = test::random_graph_set(rng, {2, 2, 3, false});
    const Closure cl = closure(gs);
    const Verdict v = check_sct_criterion(cl, gs);
    const OracleReport r = bounded_lasso_oracle(gs, std::max<std::size_t>(cl.max_witness_length(), 1));
    if (v.is_sct() != !r.found_counterexample()) o.fail("disagreement on set " + std::to_string(sets));
    if (!v.is_sct()) {
      ++not_sct;
      if (decide_periodic_descent(v.counterexample->lasso, gs)) o.fail("NOT_SCT lasso has a descent");
    }
  }
  o.detail << sets << " sets, " << not_sct << " NOT_SCT";
}

void synthesis_round_trip(Outcome& o) {
  std::mt19937_64 rng(1003);
  std::size_t sets = 0, sct_count = 0;
  for (; sets < 200; ++sets) {
    const GraphSet gs = test::random_graph_set(rng, {3, 3, 5, true});
    const Program p = synthesize(gs);
    const Description d = extract_description(p, ExtractMode::syntactic);
    // Padding may widen signatures; names and arcs must match exactly.
    std::multiset<std::tuple<std::string, std::string, std::vector<Arc>>> want, got;
    for (const auto& g : gs.graphs()) want.emplace(g.source()->name, g.target()->name, g.arcs());
    for (const auto& g : d.graphs.graphs()) got.emplace(g.source()->name, g.target()->name, g.arcs());
    if (want != got) o.fail("multiset mismatch on set " + std::to_string(sets));
    const bool a = check_sct_criterion(gs).is_sct();
    if (a != check_sct_criterion(d.graphs).is_sct()) o.fail("verdict changed on set " + std::to_string(sets));
    sct_count += a;
  }
  o.detail << sets << " sets, " << sct_count << " SCT";
}

void safety_sampling(Outcome& o) {
  const Program p = test::ackermann_program();
  Description d = extract_description(p, ExtractMode::guarded);
  SafetyOptions opts;
  opts.trials = 1000;
  opts.value_bound = 3;
  opts.fuel = 1'000'000;
  const SafetyReport good = sample_safety(p, d, opts);
  if (good.violation_count != 0) o.fail("violations in the extracted description");
  if (good.trials < 1000) o.fail("too few trials");

  const SizeChangeGraph& t0 = d.graph_for(0);
  d.graphs.replace(0, SizeChangeGraph(t0.source(), t0.target(), {{0, ArcKind::strict, 0}, {1, ArcKind::strict, 1}}));
  const SafetyReport bad = sample_safety(p, d, opts);
  if (bad.violation_count < 1) o.fail("corrupted graph not caught");
  o.detail << good.trials << " trials, " << good.transitions << " transitions, 0 violations expected / "
           << good.violation_count << " found; corrupted: " << bad.violation_count << " violations";
}

void interpreter_values(Outcome& o) {
  const Program p = test::ackermann_program();
  const auto a22 = eval(p, "A", {2, 2}, Fuel{1'000'000});
  const auto a33 = eval(p, "A", {3, 3}, Fuel{1'000'000});
  if (a22 != 7u || test::ackermann_by_recurrence(2, 2) != 7) o.fail("A(2,2)");
  if (a33 != 61u || test::ackermann_by_recurrence(3, 3) != 61) o.fail("A(3,3)");
  for (Nat x = 0; x <= 3; ++x)
    for (Nat y = 0; y <= 5; ++y)
      if (eval(p, "A", {x, y}, Fuel{10'000'000}) != test::ackermann_by_recurrence(x, y)) o.fail("recurrence");

  std::mt19937_64 rng(1006);
  std::uniform_int_distribution<Nat> v(0, 3);
  std::uniform_int_distribution<std::uint64_t> f(0, 3000);
  std::size_t samples = 0;
  for (; samples < 500; ++samples) {
    const Nat x = v(rng), y = v(rng);
    const std::uint64_t lo = f(rng), hi = lo + f(rng);
    const auto small = eval(p, "A", {x, y}, Fuel{lo});
    const auto big = eval(p, "A", {x, y}, Fuel{hi});
    if (small && big != small) o.fail("fuel monotonicity");
  }
  o.detail << "A(2,2)=" << a22.value_or(0) << " A(3,3)=" << a33.value_or(0) << ", " << samples
           << " fuel pairs";
}

bool reversal_case(const EPColoring& c, std::size_t& extra) {
  const ReversalRun r = build_reversal_multipath(c);
  if (!decide_periodic_descent(r.lasso, r.graphs)) return false;
  const std::string want = index_set_param(index_set(spp_witness(c)));
  const auto& sig = *r.graphs.sigs().front();
  bool found = false;
  for (ParamIndex q : descent_parameters(r.lasso, r.graphs)) {
    if (sig.params[q] == want) found = true;
    else ++extra;
  }
  if (!found) return false;
  for (const IndexSet& I : index_sets(c.k)) {
    const ClaimSides s = check_claim_Ax(c, I);
    if (s.every_color_recurs != s.active_in_cycle) return false;
  }
  return true;
}

void reversal(Outcome& o) {
  std::size_t cases = 0, extra = 0;
  auto words = [](Color k, std::size_t min_len, std::size_t max_len) {
    std::vector<std::vector<Color>> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
      std::vector<Color> w(len, 0);
      while (true) {
        out.push_back(w);
        std::size_t pos = len;
        while (pos > 0 && ++w[pos - 1] == k) w[--pos] = 0;
        if (pos == 0) break;
      }
    }
    return out;
  };
  for (Color k = 1; k <= 2; ++k)
    for (const auto& prefix : words(k, 0, 3))
      for (const auto& period : words(k, 1, 4)) {
        ++cases;
        if (!reversal_case({k, prefix, period}, extra)) {
          std::ostringstream s;
          s << "k=" << k << " prefix size " << prefix.size() << " period size " << period.size();
          o.fail(s.str());
        }
      }
  std::mt19937_64 rng(1007);
  std::uniform_int_distribution<std::size_t> plen(0, 3), qlen(1, 4);
  std::uniform_int_distribution<Color> col(0, 2);
  std::size_t sampled = 0;
  for (; sampled < 300; ++sampled, ++cases) {
    EPColoring c{3, std::vector<Color>(plen(rng)), std::vector<Color>(qlen(rng))};
    for (auto& x : c.prefix) x = col(rng);
    for (auto& x : c.period) x = col(rng);
    if (!reversal_case(c, extra)) o.fail("k=3 sample " + std::to_string(sampled));
  }
  o.detail << cases << " colorings (" << sampled << " sampled at k=3); additional descent parameters seen: "
           << extra;
}

void family_sct(Outcome& o) {
  auto check = [&](const GraphSet& gs, const std::string& label) {
    const Closure cl = closure(gs);
    for (const auto& d : cl)
      if (!d.graph.has_strict_self_arc()) o.fail(label + ": closure element without strict self-arc");
    if (!check_sct_criterion(cl, gs).is_sct()) o.fail(label + ": not SCT");
    o.detail << label << " |cl|=" << cl.size() << " ";
  };
  check(spp_reduction_family(1), "k=1");
  check(spp_reduction_family(2), "k=2");
  check(spp_warmup_family(), "warm-up");
}

void star_instances(Outcome& o) {
  const auto parity = PairColoring::from(2, 20, [](std::size_t i, std::size_t j) { return (j - i) % 2; });
  const auto w = star_search(parity, 5);
  if (!w || w->pairs.size() < 5) o.fail("parity coloring");

  const GraphSet ack = fixtures::ackermann_graphs();
  std::size_t lassos = 0;
  for (const Word& prefix : std::vector<Word>{{}, {0}, {1}, {1, 0}})
    for (const Word& period : enumerate_cyclic_words(ack, 3)) {
      ++lassos;
      std::vector<SizeChangeGraph> palette;
      const PairColoring c = induced_coloring({prefix, period}, ack, 20, palette);
      const auto s = star_search(c, 5);
      if (!s) {
        o.fail("no star in an induced coloring");
        continue;
      }
      const SizeChangeGraph& g = palette[s->color];
      if (!is_idempotent(g) || !g.has_strict_self_arc()) o.fail("star color graph");
    }
  o.detail << "parity: t=" << (w ? w->t : 0) << " pairs=" << (w ? w->pairs.size() : 0) << "; " << lassos
           << " Ackermann lassos";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Ackermann golden path", ackermann_golden},
      {"composition algebra", composition_algebra},
      {"criterion agrees with bounded oracle", criterion_vs_oracle},
      {"synthesis round trip", synthesis_round_trip},
      {"safety sampling", safety_sampling},
      {"interpreter", interpreter_values},
      {"reversal construction", reversal},
      {"family SCT", family_sct},
      {"STAR instances", star_instances},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail.str() << "\n";
  }
  return failures == 0 ? 0 : 1;
}
