// hamlocal: check ball-local Hamiltonicity conditions, run exact cycle
// oracles, verify condition->conclusion implications over corpora, emit the
// named graph families, search for separating witnesses, and probe infinite
// graphs through finite windows.
//
// Exit codes: 0 clean/pass; 1 a sought violation or witness was found (for
// searches this is the success signal); 2 input error; 3 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamlocal/conditions.hpp"
#include "hamlocal/families.hpp"
#include "hamlocal/graph.hpp"
#include "hamlocal/harness.hpp"
#include "hamlocal/infinite.hpp"
#include "hamlocal/oracles.hpp"

using namespace hamlocal;
using nlohmann::ordered_json;

namespace {

constexpr int kExitClean = 0;
constexpr int kExitFound = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "resource-limit";
  }
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  out << "]";
  return out.str();
}

std::string witness_str(const Witness& w) {
  std::ostringstream out;
  out << w.detail << " vertices=" << join(w.vertices) << " center=" << w.center
      << " lhs=" << w.lhs << " rhs=" << w.rhs;
  return out.str();
}

std::string report_str(const ConditionReport& r) {
  switch (r.verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail " + witness_str(*r.witness);
    default: return "not-applicable (" + r.reason + ")";
  }
}

// Labeled graphs as the CLI reads them: graph6 (one record per line) or a
// single plain-text edge list ("n m" then one "u v" line per edge).
struct InputGraph {
  Graph graph;
  std::string label;  // graph6 form, for stable output
};

std::vector<InputGraph> read_graphs(std::istream& in, bool edges_format) {
  std::vector<InputGraph> graphs;
  if (edges_format) {
    std::ostringstream all;
    all << in.rdbuf();
    Graph g = parse_edge_list_text(all.str());
    graphs.push_back({g, encode_graph6(g)});
    return graphs;
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back({parse_graph6(line), line});
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " +
                                  e.what());
    }
  }
  return graphs;
}

std::vector<InputGraph> read_graphs_from(const std::string& input_path,
                                         bool edges_format) {
  if (input_path.empty()) return read_graphs(std::cin, edges_format);
  std::ifstream in(input_path);
  if (!in) throw std::invalid_argument("cannot open input: " + input_path);
  return read_graphs(in, edges_format);
}

std::vector<int64_t> parse_id_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty id in set: " + text);
    size_t used = 0;
    out.push_back(std::stoll(tok, &used));
    if (used != tok.size())
      throw std::invalid_argument("bad id in set: " + tok);
  }
  if (out.empty()) throw std::invalid_argument("empty id set");
  return out;
}

ordered_json run_json(const VerificationRun& run) {
  ordered_json j;
  j["condition"] = run.condition;
  j["conclusion"] = run.conclusion;
  j["source"] = run.source;
  j["graphs"] = run.graphs;
  j["passes"] = run.passes;
  j["fails"] = run.fails;
  j["not_applicable"] = run.not_applicable;
  j["oracle_nodes"] = run.oracle_nodes;
  j["resource_limited"] = run.resource_limited;
  ordered_json cxs = ordered_json::array();
  for (const auto& cx : run.counterexamples) {
    ordered_json c;
    c["graph_index"] = cx.graph_index;
    c["graph6"] = cx.graph6;
    c["oracle"] = cx.oracle;
    c["answer"] = answer_name(cx.oracle_answer);
    if (cx.oracle_certificate) c["certificate"] = *cx.oracle_certificate;
    cxs.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(cxs);
  j["clean"] = run.clean();
  return j;
}

int cmd_check(const std::string& condition, const std::string& input,
              bool edges_format) {
  auto graphs = read_graphs_from(input, edges_format);
  bool any_fail = false;
  for (size_t i = 0; i < graphs.size(); ++i) {
    ConditionReport r = check_condition(graphs[i].graph, condition);
    std::cout << "graph " << i << " " << graphs[i].label << ": "
              << report_str(r) << "\n";
    if (r.verdict == Verdict::Fail) any_fail = true;
  }
  return any_fail ? kExitFound : kExitClean;
}

int cmd_oracle(const std::string& which, const std::string& input,
               bool edges_format, const SearchLimits& limits) {
  auto graphs = read_graphs_from(input, edges_format);
  bool any_no = false, any_limit = false;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i].graph;
    std::cout << "graph " << i << " " << graphs[i].label << ": ";
    if (which == kOracleHamiltonian) {
      CycleSearchResult r = is_hamiltonian(g, limits);
      std::cout << answer_name(r.answer);
      if (r.answer == Answer::Yes) std::cout << " cycle=" << join(r.certificate);
      any_no |= r.answer == Answer::No;
      any_limit |= r.answer == Answer::ResourceLimit;
    } else if (which == kOracleDominating) {
      DominatingCheckResult r = all_longest_cycles_dominating(g, limits);
      std::cout << answer_name(r.answer) << " longest=" << r.longest_length;
      if (r.counterexample) std::cout << " cycle=" << join(*r.counterexample);
      any_no |= r.answer == Answer::No;
      any_limit |= r.answer == Answer::ResourceLimit;
    } else if (which == "longest-cycle") {
      LongestCycleResult r = longest_cycle(g, limits);
      if (r.answer == Answer::ResourceLimit) {
        std::cout << "resource-limit";
        any_limit = true;
      } else {
        std::cout << "length=" << r.length;
        if (!r.cycle.empty()) std::cout << " cycle=" << join(r.cycle);
      }
    } else if (which == "longest-path") {
      LongestPathResult r = longest_path(g, limits);
      if (r.answer == Answer::ResourceLimit) {
        std::cout << "resource-limit";
        any_limit = true;
      } else {
        std::cout << "length=" << r.length_vertices
                  << " path=" << join(r.path);
      }
    } else {
      throw std::invalid_argument(
          "unknown oracle (expected hamiltonian, dominating-longest-cycles, "
          "longest-cycle, or longest-path): " +
          which);
    }
    std::cout << "\n";
  }
  if (any_no) return kExitFound;
  if (any_limit) return kExitResource;
  return kExitClean;
}

int cmd_verify_corpus(const std::string& condition, const std::string& source,
                      const std::string& conclusion, bool as_json,
                      const SearchLimits& limits) {
  VerificationRun run = verify_corpus(condition, source, limits, conclusion);
  if (as_json) {
    std::cout << run_json(run).dump(2) << "\n";
  } else {
    std::cout << "condition " << run.condition << " -> " << run.conclusion
              << " over " << run.source << "\n"
              << "graphs=" << run.graphs << " passes=" << run.passes
              << " fails=" << run.fails
              << " not-applicable=" << run.not_applicable
              << " resource-limited=" << run.resource_limited.size()
              << " counterexamples=" << run.counterexamples.size() << "\n";
    for (const auto& cx : run.counterexamples) {
      std::cout << "counterexample graph " << cx.graph_index << " "
                << cx.graph6 << ": condition passes but " << cx.oracle
                << " answers " << answer_name(cx.oracle_answer);
      if (cx.oracle_certificate)
        std::cout << " cycle=" << join(*cx.oracle_certificate);
      std::cout << "\n";
    }
    std::cout << (run.clean() ? "clean" : "NOT CLEAN") << "\n";
  }
  if (!run.counterexamples.empty()) return kExitFound;
  if (!run.resource_limited.empty()) return kExitResource;
  return kExitClean;
}

int cmd_gen_family(const std::string& name,
                   const std::vector<long long>& params) {
  Graph g = named_family(name, params);
  std::cout << encode_graph6(g) << "\n";
  return kExitClean;
}

int cmd_search_witness(const WitnessQuery& query, bool as_json,
                       const SearchLimits& limits) {
  WitnessSearchOutcome outcome = search_witness(query, limits);
  if (as_json) {
    ordered_json j;
    j["pass"] = query.pass_id;
    j["fail"] = query.fail_id;
    j["graphs_scanned"] = outcome.graphs_scanned;
    j["resource_limited"] = outcome.resource_limited;
    if (outcome.witness) {
      const FoundWitness& w = *outcome.witness;
      ordered_json wj;
      wj["graph_index"] = w.graph_index;
      wj["graph6"] = w.graph6;
      if (w.fail_report && w.fail_report->witness)
        wj["fail_witness"] = witness_str(*w.fail_report->witness);
      if (!w.oracle.empty()) {
        wj["oracle"] = w.oracle;
        wj["answer"] = answer_name(w.oracle_answer);
        if (w.oracle_certificate)
          wj["certificate"] = *w.oracle_certificate;
      }
      j["witness"] = std::move(wj);
    } else {
      j["witness"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else if (outcome.witness) {
    const FoundWitness& w = *outcome.witness;
    std::cout << "witness graph " << w.graph_index << " " << w.graph6 << ": "
              << query.pass_id << " passes";
    if (w.fail_report) {
      std::cout << ", " << query.fail_id << " fails";
      if (w.fail_report->witness)
        std::cout << " (" << witness_str(*w.fail_report->witness) << ")";
    } else {
      std::cout << ", " << w.oracle << " answers "
                << answer_name(w.oracle_answer);
      if (w.oracle_certificate)
        std::cout << " cycle=" << join(*w.oracle_certificate);
    }
    std::cout << "\n";
  } else {
    std::cout << "none within bounds (scanned " << outcome.graphs_scanned
              << " graphs";
    if (!outcome.resource_limited.empty())
      std::cout << "; " << outcome.resource_limited.size()
                << " skipped at the resource limit";
    std::cout << ")\n";
  }
  if (outcome.witness) return kExitFound;  // the sought object: success
  if (!outcome.resource_limited.empty()) return kExitResource;
  return kExitClean;
}

int cmd_infinite(const std::string& oracle_spec, const std::string& mode,
                 const std::string& condition, const std::string& set_text,
                 int cap, int radius, int inner_r, bool as_json) {
  AdjacencyOracle oracle = oracle_from_name(oracle_spec);
  if (mode == "probe") {
    if (set_text.empty())
      throw std::invalid_argument("probe needs --set id,id,...");
    ProbeResult pr = curve_probe(oracle, parse_id_list(set_text), cap);
    if (as_json) {
      ordered_json j;
      j["oracle"] = oracle.name;
      j["set"] = pr.set;
      j["anchor"] = pr.anchor;
      j["spread"] = pr.spread;
      j["window_radius"] = pr.window_radius;
      j["window_size"] = pr.window_size;
      j["answer"] = answer_name(pr.answer);
      j["cycle"] = pr.cycle;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "oracle " << oracle.name << " set=" << join(pr.set)
                << " anchor=" << pr.anchor << " spread=" << pr.spread
                << " window_radius=" << pr.window_radius
                << " window_size=" << pr.window_size << ": "
                << answer_name(pr.answer);
      if (pr.answer == Answer::Yes) std::cout << " cycle=" << join(pr.cycle);
      std::cout << "\n";
    }
    if (pr.answer == Answer::Yes) return kExitClean;
    if (pr.answer == Answer::No) return kExitFound;
    return kExitResource;
  }
  if (mode != "check")
    throw std::invalid_argument("unknown infinite mode (expected probe or "
                                "check): " +
                                mode);
  if (condition.empty())
    throw std::invalid_argument("check needs a condition id");
  if (radius < 0) throw std::invalid_argument("check needs --radius R");
  Window w = materialize_window(oracle, oracle.root, radius);
  WindowCheck check = check_on_window(w, condition, inner_r);
  if (as_json) {
    ordered_json j;
    j["oracle"] = oracle.name;
    j["condition"] = check.condition;
    j["window_radius"] = radius;
    j["window_size"] = w.size();
    j["reach"] = check.reach;
    j["centers_checked"] = check.centers_checked;
    j["verdict"] = check.verdict == Verdict::Pass
                       ? "pass"
                       : (check.verdict == Verdict::Fail ? "fail"
                                                         : "not-applicable");
    if (check.witness) {
      ordered_json wj;
      wj["vertices"] = check.witness->vertices;
      if (check.witness->center) wj["center"] = *check.witness->center;
      wj["lhs"] = check.witness->lhs;
      wj["rhs"] = check.witness->rhs;
      wj["detail"] = check.witness->detail;
      j["witness"] = std::move(wj);
    }
    if (check.verdict == Verdict::NotApplicable) j["reason"] = check.reason;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "oracle " << oracle.name << " condition " << check.condition
              << " window_radius=" << radius << " window_size=" << w.size()
              << " centers=" << check.centers_checked << ": ";
    if (check.verdict == Verdict::Pass) {
      std::cout << "pass\n";
    } else if (check.verdict == Verdict::Fail) {
      const WindowWitness& ww = *check.witness;
      std::cout << "fail " << ww.detail << " vertices=" << join(ww.vertices);
      if (ww.center) std::cout << " center=" << *ww.center;
      std::cout << " lhs=" << ww.lhs << " rhs=" << ww.rhs << "\n";
    } else {
      std::cout << "not-applicable (" << check.reason << ")\n";
    }
  }
  return check.verdict == Verdict::Fail ? kExitFound : kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ball-local sufficient conditions for Hamiltonicity and dominating "
      "cycles: checkers, exact oracles, corpus verification, graph families, "
      "witness search, and infinite-graph windows.\n"
      "Exit codes: 0 clean/pass; 1 violation or witness found (the success "
      "signal for searches); 2 input error; 3 resource limit."};
  app.require_subcommand(1);

  uint64_t node_budget = SearchLimits{}.node_budget;
  app.add_option("--node-budget", node_budget,
                 "Search node budget for the exact oracles")
      ->capture_default_str();

  std::string input_path;
  bool use_graph6 = false, use_edges = false;

  auto* check = app.add_subcommand(
      "check",
      "Check one condition on graphs from stdin (pass/NA exit 0, any fail "
      "exit 1)");
  std::string check_condition_id;
  check->add_option("condition", check_condition_id, "Condition id")
      ->required();
  check->add_flag("--graph6", use_graph6,
                  "Input is graph6, one record per line (default)");
  check->add_flag("--edges", use_edges,
                  "Input is one plain-text edge list: 'n m' then 'u v' lines");
  check->add_option("--input", input_path, "Read from a file instead of stdin");

  auto* oracle = app.add_subcommand(
      "oracle",
      "Run an exact oracle on graphs from stdin (any 'no' exit 1)");
  std::string oracle_which;
  oracle
      ->add_option("which", oracle_which,
                   "hamiltonian | dominating-longest-cycles | longest-cycle | "
                   "longest-path")
      ->required();
  oracle->add_flag("--graph6", use_graph6, "Input is graph6 (default)");
  oracle->add_flag("--edges", use_edges, "Input is one plain-text edge list");
  oracle->add_option("--input", input_path, "Read from a file instead of stdin");

  auto* verify = app.add_subcommand(
      "verify-corpus",
      "Verify condition => conclusion over a corpus with the exact oracle "
      "(counterexample exit 1, resource limit exit 3)");
  std::string verify_condition_id, verify_source, verify_conclusion;
  bool verify_json = false;
  verify->add_option("condition", verify_condition_id, "Condition id")
      ->required();
  verify
      ->add_option("--source", verify_source,
                   "graph6 file, or enum:n for all connected graphs of size "
                   "<= n (n <= 10)")
      ->required();
  verify->add_option(
      "--conclusion", verify_conclusion,
      "Conclusion to test for a bare predicate (hamiltonian or "
      "dominating-longest-cycles); catalog conditions imply their own");
  verify->add_flag("--json", verify_json, "Emit the run as JSON");

  auto* gen = app.add_subcommand("gen-family",
                                 "Emit a named family instance as graph6");
  std::string family_name;
  std::vector<long long> family_params;
  gen->add_option("name", family_name,
                  "ce_tight_H | g_pn | gn_dirac | mm_diam6")
      ->required();
  gen->add_option("params", family_params, "Family parameters");

  auto* search = app.add_subcommand(
      "search-witness",
      "Find a graph passing one predicate and failing another (found exit 1 "
      "= success, none exit 0)");
  WitnessQuery query;
  bool search_json = false;
  search->add_option("--pass", query.pass_id, "Predicate that must pass")
      ->required();
  search
      ->add_option("--fail", query.fail_id,
                   "Predicate that must fail, or an oracle tag (hamiltonian, "
                   "dominating-longest-cycles) that must answer no")
      ->required();
  search->add_option("--max-n", query.max_n,
                     "Enumerate all connected graphs of size <= n (n <= 10)")
      ->capture_default_str();
  search->add_option("--source", query.source,
                     "graph6 file to scan instead of the enumerator");
  search->add_flag("--json", search_json, "Emit the outcome as JSON");

  auto* infinite = app.add_subcommand(
      "infinite",
      "Probe an infinite graph through finite windows (probe: no-cycle exit "
      "1; check: fail exit 1)");
  std::string inf_oracle, inf_mode, inf_condition, inf_set;
  int inf_cap = 64, inf_radius = -1, inf_r = 2;
  bool inf_json = false;
  infinite
      ->add_option("oracle", inf_oracle,
                   "Adjacency oracle: path or layered:<p>")
      ->required();
  infinite->add_option("mode", inf_mode, "probe | check")->required();
  infinite->add_option("condition", inf_condition,
                       "Window condition id (check mode)");
  infinite->add_option("--set", inf_set,
                       "Comma-separated vertex ids the cycle must contain "
                       "(probe mode)");
  infinite->add_option("--cap", inf_cap, "Probe BFS distance cap")
      ->capture_default_str();
  infinite->add_option("--radius", inf_radius, "Window radius (check mode)");
  infinite->add_option("--r", inf_r,
                       "Inner ball radius for infinite_ce (default 2)");
  infinite->add_flag("--json", inf_json, "Emit the outcome as JSON");

  auto* report = app.add_subcommand(
      "report", "Emit a JSON report of condition verdicts over a corpus");
  std::string report_source;
  std::vector<std::string> report_conditions;
  bool report_oracle = false, report_timings = false;
  report
      ->add_option("--source", report_source,
                   "graph6 file, or enum:n (n <= 10)")
      ->required();
  report
      ->add_option("--conditions", report_conditions,
                   "Comma-separated condition ids (default: whole catalog)")
      ->delimiter(',');
  report->add_flag("--with-oracle", report_oracle,
                   "Attach the conclusion oracle's outcome to every entry");
  report->add_flag("--timings", report_timings,
                   "Add elapsed_ms fields (breaks byte-for-byte determinism)");
  bool report_json = false;  // accepted for symmetry; report is always JSON
  report->add_flag("--json", report_json, "Emit JSON (the only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitInput;
  }

  SearchLimits limits;
  limits.node_budget = node_budget;

  try {
    if (use_graph6 && use_edges)
      throw std::invalid_argument("--graph6 and --edges are exclusive");
    if (check->parsed())
      return cmd_check(check_condition_id, input_path, use_edges);
    if (oracle->parsed())
      return cmd_oracle(oracle_which, input_path, use_edges, limits);
    if (verify->parsed())
      return cmd_verify_corpus(verify_condition_id, verify_source,
                               verify_conclusion, verify_json, limits);
    if (gen->parsed()) return cmd_gen_family(family_name, family_params);
    if (search->parsed()) return cmd_search_witness(query, search_json, limits);
    if (infinite->parsed())
      return cmd_infinite(inf_oracle, inf_mode, inf_condition, inf_set,
                          inf_cap, inf_radius, inf_r, inf_json);
    if (report->parsed()) {
      ReportOptions opts;
      opts.conditions = report_conditions;
      opts.with_oracle = report_oracle;
      opts.timings = report_timings;
      opts.limits = limits;
      ReportResult result = make_report(report_source, opts);
      std::cout << result.json;
      return result.resource_limited ? kExitResource : kExitClean;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitClean;
}
