// sct: size-change termination analysis from the command line.
//
// Exit codes: 0 = terminating (SCT) / success, 1 = definitely not SCT,
// 2 = input or usage error, 3 = evaluation ran out of fuel,
// 4 = oracle and criterion disagree.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sct/sct.hpp"

namespace {

constexpr int kExitSct = 0;
constexpr int kExitNotSct = 1;
constexpr int kExitInput = 2;
constexpr int kExitOutOfFuel = 3;
constexpr int kExitDisagree = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

std::string dump(const sct::Json& j) { return j.dump(2) + "\n"; }

sct::ExtractMode parse_mode(const std::string& s) {
  auto m = sct::extract_mode_from_name(s);
  if (!m) throw InputError("unknown mode '" + s + "' (expected guarded or syntactic)");
  return *m;
}

std::vector<sct::Color> parse_colors(const std::string& s) {
  std::vector<sct::Color> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<sct::Color>(v));
    } catch (const std::exception&) {
      throw InputError("bad color '" + item + "' in '" + s + "'");
    }
  }
  return out;
}

sct::Json analysis_report(const sct::Description& d) {
  const sct::Closure cl = sct::closure(d.graphs);
  const sct::Verdict v = sct::check_sct_criterion(cl, d.graphs);
  sct::Json j;
  j["sct"] = v.is_sct();
  j["mode"] = sct::to_string(d.mode);
  j["description"] = sct::to_json(d.graphs);
  j["closure_size"] = cl.size();
  if (v.counterexample) {
    sct::Json vj = sct::verdict_to_json(v, d.graphs);
    j["counterexample"] = {{"failing_idempotent", vj["failing_idempotent"]}, {"lasso", vj["lasso"]}};
  }
  return j;
}

sct::Json oracle_report(const sct::OracleReport& r, const sct::GraphSet& gs) {
  sct::Json j;
  j["result"] = r.found_counterexample() ? "NOT_SCT" : "NO_COUNTEREXAMPLE";
  j["max_word_len"] = r.max_len;
  j["words_checked"] = r.words_checked;
  if (r.counterexample) {
    j["lasso"] = sct::lasso_to_json(*r.counterexample, gs);
    j["idempotent"] = sct::graph_to_json(*r.idempotent, "idempotent");
  }
  return j;
}

/// Runs the criterion next to an oracle report. They must agree whenever
/// the oracle bound covers every closure witness; below that bound an
/// oracle counterexample must still be confirmed by the criterion.
bool compare_with_criterion(const sct::GraphSet& gs, const sct::OracleReport& r, sct::Json& out) {
  const sct::Closure cl = sct::closure(gs);
  const sct::Verdict v = sct::check_sct_criterion(cl, gs);
  const bool bound_sufficient = r.max_len >= cl.max_witness_length();
  const bool agree = bound_sufficient ? (r.found_counterexample() == !v.is_sct())
                                      : (!r.found_counterexample() || !v.is_sct());
  out["criterion"] = sct::verdict_to_json(v, gs);
  out["closure_witness_bound"] = cl.max_witness_length();
  out["bound_sufficient"] = bound_sufficient;
  out["agree"] = agree;
  return agree;
}

sct::PairColoring star_pattern(const std::string& pattern, std::size_t n, sct::Color k,
                               const std::string& file) {
  if (pattern == "parity")
    return sct::PairColoring::from(k, n, [&](std::size_t i, std::size_t j) { return (j - i) % k; });
  if (pattern == "constant") return sct::PairColoring::from(k, n, [](std::size_t, std::size_t) { return 0; });
  if (pattern == "file") {
    if (file.empty()) throw InputError("--pattern file needs --file");
    sct::Json j = sct::Json::parse(read_file(file));
    if (!j.is_array()) throw InputError("pair coloring file must be a JSON array of rows");
    const std::size_t rows = j.size();
    return sct::PairColoring::from(k, rows, [&](std::size_t i, std::size_t j2) {
      return j.at(i).at(j2).get<sct::Color>();
    });
  }
  throw InputError("unknown pattern '" + pattern + "' (expected parity, constant or file)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Size-change termination analyzer"};
  app.require_subcommand(1);
  bool json_output = true;
  app.add_flag("--json,!--no-json", json_output, "JSON output (default)");

  std::string mode = "guarded";
  std::string output;

  // analyze
  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Parse, extract and decide a program");
  analyze->add_option("file", analyze_path, "Program (.sct)")->required();
  analyze->add_option("--mode", mode, "guarded or syntactic");

  // extract
  std::string extract_path;
  auto* extract = app.add_subcommand("extract", "Write the size-change graphs of a program");
  extract->add_option("file", extract_path, "Program (.sct)")->required();
  extract->add_option("--mode", mode, "guarded or syntactic");
  extract->add_option("-o,--output", output, "Output graph-set JSON");

  // synth
  std::string synth_path;
  auto* synth = app.add_subcommand("synth", "Compile a graph set into a program it describes");
  synth->add_option("graphs", synth_path, "Graph-set JSON")->required();
  synth->add_option("-o,--output", output, "Output program");

  // run
  std::string run_path, run_fun;
  std::vector<sct::Nat> run_args;
  std::uint64_t fuel = 1'000'000;
  std::size_t trace_len = 0;
  auto* run = app.add_subcommand("run", "Evaluate a function");
  run->add_option("file", run_path, "Program (.sct)")->required();
  run->add_option("fun", run_fun, "Function name")->required();
  run->add_option("args", run_args, "Natural-number arguments");
  run->add_option("--fuel", fuel, "Maximum number of function entries");
  run->add_option("--trace", trace_len, "Also report up to N call transitions");

  // safety
  std::string safety_path, safety_graphs;
  sct::SafetyOptions safety_opts;
  auto* safety = app.add_subcommand("safety", "Check a description against random executions");
  safety->add_option("file", safety_path, "Program (.sct)")->required();
  safety->add_option("--graphs", safety_graphs, "Description JSON (graphs named tau<i>); default: extract");
  safety->add_option("--mode", mode, "extraction mode when --graphs is absent");
  safety->add_option("--trials", safety_opts.trials, "Number of random states");
  safety->add_option("--bound", safety_opts.value_bound, "Largest sampled argument value");
  safety->add_option("--fuel", safety_opts.fuel, "Fuel per trial");
  safety->add_option("--seed", safety_opts.seed, "Random seed");

  // oracle
  std::string oracle_path;
  std::size_t max_word_len = 0;
  bool compare = false;
  auto* oracle = app.add_subcommand("oracle", "Bounded brute-force search for a counterexample");
  oracle->add_option("graphs", oracle_path, "Graph-set JSON")->required();
  oracle->add_option("--max-word-len", max_word_len, "Longest cyclic word to try")->required();
  oracle->add_flag("--compare", compare, "Also run the criterion and require agreement");

  // graphs check
  std::string check_path;
  std::size_t check_oracle = 0;
  auto* graphs = app.add_subcommand("graphs", "Graph-set operations");
  graphs->require_subcommand(1);
  auto* check = graphs->add_subcommand("check", "Decide a graph set");
  check->add_option("graphs", check_path, "Graph-set JSON")->required();
  check->add_option("--oracle", check_oracle, "Cross-check with the oracle up to this word length");

  // principles
  auto* principles = app.add_subcommand("principles", "Combinatorial principles");
  principles->require_subcommand(1);
  sct::Color k = 2;
  auto* family = principles->add_subcommand("spp-family", "The reduction graph family");
  family->add_option("--k", k, "Number of colors (1-3)")->required();
  family->add_option("-o,--output", output, "Output graph-set JSON");

  std::string period_s, prefix_s;
  auto* reversal = principles->add_subcommand("reversal", "Run the reduction on an eventually periodic coloring");
  reversal->add_option("--k", k, "Number of colors")->required();
  reversal->add_option("--period", period_s, "Comma-separated period colors")->required();
  reversal->add_option("--prefix", prefix_s, "Comma-separated prefix colors");

  std::size_t star_n = 20, min_triangles = 5;
  std::string pattern = "parity", pattern_file;
  auto* star = principles->add_subcommand("star", "Search a pair coloring for a triangle star");
  star->add_option("--n", star_n, "Domain size");
  star->add_option("--k", k, "Number of colors");
  star->add_option("--pattern", pattern, "parity, constant or file");
  star->add_option("--file", pattern_file, "JSON matrix rows for --pattern file");
  star->add_option("--min-triangles", min_triangles, "Triangles required");

  // fixtures
  std::string fixture_name, fixture_dir;
  auto* fixtures = app.add_subcommand("fixtures", "List, print or write the bundled fixtures");
  fixtures->add_option("name", fixture_name, "Fixture to print");
  fixtures->add_option("-o,--output-dir", fixture_dir, "Write every fixture into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }
  (void)json_output;

  try {
    if (*analyze) {
      sct::Program p = sct::parse_program(read_file(analyze_path));
      const sct::Description d = sct::extract_description(p, parse_mode(mode));
      sct::Json report = analysis_report(d);
      std::cout << dump(report);
      return report["sct"].get<bool>() ? kExitSct : kExitNotSct;
    }
    if (*extract) {
      sct::Program p = sct::parse_program(read_file(extract_path));
      const sct::Description d = sct::extract_description(p, parse_mode(mode));
      write_output(output, dump(sct::to_json(d.graphs)));
      return 0;
    }
    if (*synth) {
      const sct::GraphSet gs = sct::graph_set_from_string(read_file(synth_path));
      write_output(output, sct::to_source(sct::synthesize(gs)));
      return 0;
    }
    if (*run) {
      sct::Program p = sct::parse_program(read_file(run_path));
      auto fun = p.find(run_fun);
      if (!fun) throw InputError("unknown function '" + run_fun + "'");
      std::vector<sct::Transition> trace;
      sct::RunResult r = sct::run(p, *fun, run_args, sct::Fuel{fuel}, [&](const sct::Transition& t) {
        if (trace.size() < trace_len) trace.push_back(t);
        return true;
      });
      sct::Json j;
      j["function"] = run_fun;
      j["args"] = run_args;
      if (r.value) j["value"] = *r.value;
      else j["value"] = nullptr;
      j["out_of_fuel"] = r.out_of_fuel;
      j["calls"] = r.calls;
      if (trace_len > 0) {
        sct::Json tj = sct::Json::array();
        for (const auto& t : trace)
          tj.push_back({{"from", {p.defs[t.from.fun].sig.name, t.from.values}},
                        {"site", sct::site_name(t.site)},
                        {"to", {p.defs[t.to.fun].sig.name, t.to.values}}});
        j["trace"] = std::move(tj);
      }
      std::cout << dump(j);
      return r.value ? 0 : kExitOutOfFuel;
    }
    if (*safety) {
      sct::Program p = sct::parse_program(read_file(safety_path));
      const sct::Description d =
          safety_graphs.empty()
              ? sct::extract_description(p, parse_mode(mode))
              : sct::description_from_graph_set(p, sct::graph_set_from_string(read_file(safety_graphs)));
      const sct::SafetyReport r = sct::sample_safety(p, d, safety_opts);
      std::cout << dump(sct::to_json(r, d));
      return r.violation_count == 0 ? 0 : kExitNotSct;
    }
    if (*oracle) {
      const sct::GraphSet gs = sct::graph_set_from_string(read_file(oracle_path));
      const sct::OracleReport r = sct::bounded_lasso_oracle(gs, max_word_len);
      sct::Json j = oracle_report(r, gs);
      bool agree = true;
      if (compare) agree = compare_with_criterion(gs, r, j);
      std::cout << dump(j);
      if (!agree) return kExitDisagree;
      return r.found_counterexample() ? kExitNotSct : kExitSct;
    }
    if (*check) {
      const sct::GraphSet gs = sct::graph_set_from_string(read_file(check_path));
      const sct::Closure cl = sct::closure(gs);
      const sct::Verdict v = sct::check_sct_criterion(cl, gs);
      sct::Json j = sct::verdict_to_json(v, gs);
      j["closure_size"] = cl.size();
      bool agree = true;
      if (check_oracle > 0) {
        const sct::OracleReport r = sct::bounded_lasso_oracle(gs, check_oracle);
        sct::Json oj = oracle_report(r, gs);
        agree = compare_with_criterion(gs, r, oj);
        oj.erase("criterion");
        j["oracle"] = std::move(oj);
      }
      std::cout << dump(j);
      if (!agree) return kExitDisagree;
      return v.is_sct() ? kExitSct : kExitNotSct;
    }
    if (*family) {
      write_output(output, dump(sct::to_json(sct::spp_reduction_family(k))));
      return 0;
    }
    if (*reversal) {
      sct::EPColoring c{k, parse_colors(prefix_s), parse_colors(period_s)};
      const auto witness = sct::spp_witness(c);
      const sct::ReversalRun r = sct::build_reversal_multipath(c);
      const auto sets = sct::index_sets(k);
      const sct::IndexSet expected = sct::index_set(witness);
      const auto descents = sct::descent_parameters(r.lasso, r.graphs);
      const auto& sig = *r.graphs.sigs().front();
      sct::Json j;
      j["recurring_colors"] = witness;
      j["expected_parameter"] = sct::index_set_param(expected);
      sct::Json dj = sct::Json::array();
      bool found = false;
      for (auto p : descents) {
        dj.push_back(sig.params[p]);
        if (sig.params[p] == sct::index_set_param(expected)) found = true;
      }
      j["descent_parameters"] = std::move(dj);
      j["descent_at_expected"] = found;
      j["lasso"] = sct::lasso_to_json(r.lasso, r.graphs);
      j["graphs"] = sct::to_json(r.graphs);
      sct::Json claims = sct::Json::array();
      bool claims_ok = true;
      for (const auto& I : sets) {
        const sct::ClaimSides s = sct::check_claim_Ax(c, I);
        claims_ok = claims_ok && s.every_color_recurs == s.active_in_cycle;
        claims.push_back({{"I", sct::index_set_param(I)},
                          {"every_color_recurs", s.every_color_recurs},
                          {"active_in_cycle", s.active_in_cycle}});
      }
      j["claims"] = std::move(claims);
      j["ok"] = found && claims_ok;
      std::cout << dump(j);
      return found && claims_ok ? 0 : kExitNotSct;
    }
    if (*star) {
      const sct::PairColoring c = star_pattern(pattern, star_n, k, pattern_file);
      auto w = sct::star_search(c, min_triangles);
      sct::Json j;
      j["found"] = w.has_value();
      if (w) {
        j["t"] = w->t;
        j["color"] = w->color;
        sct::Json pairs = sct::Json::array();
        for (auto [m, l] : w->pairs) pairs.push_back({m, l});
        j["pairs"] = std::move(pairs);
      }
      std::cout << dump(j);
      return w ? 0 : kExitNotSct;
    }
    if (*fixtures) {
      const auto all = sct::fixtures::all();
      if (!fixture_dir.empty()) {
        std::filesystem::create_directories(fixture_dir);
        for (const auto& f : all) write_output((std::filesystem::path(fixture_dir) / f.name).string(), f.contents);
        return 0;
      }
      if (fixture_name.empty()) {
        for (const auto& f : all) std::cout << f.name << "\n";
        return 0;
      }
      for (const auto& f : all)
        if (f.name == fixture_name) {
          std::cout << f.contents;
          return 0;
        }
      throw InputError("unknown fixture '" + fixture_name + "'");
    }
  } catch (const sct::ParseError& e) {
    for (const auto& d : e.diagnostics()) std::cerr << "error: " << d.str() << "\n";
    return kExitInput;
  } catch (const sct::SchemaError& e) {
    std::cerr << "error: schema: " << e.what() << "\n";
    return kExitInput;
  } catch (const sct::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const sct::Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
