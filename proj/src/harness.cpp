#include "hamlocal/harness.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hamlocal/enumerate.hpp"

namespace hamlocal {

namespace {

using nlohmann::ordered_json;

std::string answer_name(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "resource-limit";
  }
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "not-applicable";
  }
}

// The conclusion oracle outcome for a finite graph.
struct ConclusionOutcome {
  Answer answer = Answer::Yes;
  std::optional<std::vector<int>> certificate;
  uint64_t nodes = 0;
};

ConclusionOutcome run_conclusion_oracle(const Graph& g, Conclusion c,
                                        const SearchLimits& limits) {
  ConclusionOutcome out;
  if (c == Conclusion::Hamiltonian) {
    CycleSearchResult r = is_hamiltonian(g, limits);
    out.answer = r.answer;
    out.nodes = r.stats.nodes;
    if (r.answer == Answer::Yes) out.certificate = r.certificate;
  } else if (c == Conclusion::DominatingLongestCycles) {
    DominatingCheckResult r = all_longest_cycles_dominating(g, limits);
    out.answer = r.answer;
    out.nodes = r.stats.nodes;
    if (r.counterexample) out.certificate = r.counterexample;
  } else {
    throw std::invalid_argument(
        "conclusion has no finite-graph oracle: " + conclusion_tag(c));
  }
  return out;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["vertices"] = w.vertices;
  j["center"] = w.center;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["detail"] = w.detail;
  return j;
}

}  // namespace

const std::vector<std::string>& oracle_tags() {
  static const std::vector<std::string> tags{kOracleHamiltonian,
                                             kOracleDominating};
  return tags;
}

bool is_oracle_tag(const std::string& id) {
  for (const auto& t : oracle_tags())
    if (t == id) return true;
  return false;
}

const std::vector<std::string>& all_condition_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = catalog_ids();
    const auto& extras = extra_predicate_ids();
    v.insert(v.end(), extras.begin(), extras.end());
    return v;
  }();
  return ids;
}

bool is_condition_id(const std::string& id) {
  for (const auto& c : all_condition_ids())
    if (c == id) return true;
  return false;
}

std::string conclusion_tag(Conclusion c) {
  switch (c) {
    case Conclusion::Hamiltonian: return kOracleHamiltonian;
    case Conclusion::DominatingLongestCycles: return kOracleDominating;
    default: return "hamiltonian-curve-criterion";
  }
}

void for_each_corpus_item(const std::string& source,
                          const std::function<bool(const CorpusItem&)>& sink) {
  const std::string prefix = "enum:";
  if (source.rfind(prefix, 0) == 0) {
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(source.substr(prefix.size()), &used);
      if (used != source.size() - prefix.size()) n = 0;
    } catch (const std::exception&) {
      n = 0;
    }
    if (n < 1 || n > 10)
      throw std::invalid_argument(
          "enum:n supports 1 <= n <= 10; larger corpora must come from "
          "graph6 files");
    int index = 0;
    bool keep_going = true;
    for (int size = 1; size <= n && keep_going; ++size) {
      enumerate_connected(size, [&](const Graph& g) {
        CorpusItem item{index++, g, encode_graph6(g)};
        keep_going = sink(item);
        return keep_going;
      });
    }
    return;
  }

  std::ifstream in(source);
  if (!in)
    throw std::invalid_argument("cannot open corpus file: " + source);
  std::string line;
  int line_no = 0;
  int index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) continue;
    Graph g(1);
    try {
      g = parse_graph6(line);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(source + " line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
    CorpusItem item{index++, std::move(g), line};
    if (!sink(item)) return;
  }
}

VerificationRun verify_corpus(const std::string& condition,
                              const std::string& source,
                              const SearchLimits& limits,
                              const std::string& conclusion_override) {
  if (!is_condition_id(condition))
    throw std::invalid_argument("unknown condition: " + condition);
  auto conclusion = guaranteed_conclusion(condition);
  if (conclusion && *conclusion == Conclusion::HamiltonianCurveCriterion)
    throw std::invalid_argument(
        "condition applies to infinite graphs, not finite corpora: " +
        condition);
  if (!conclusion_override.empty()) {
    if (!is_oracle_tag(conclusion_override))
      throw std::invalid_argument("unknown conclusion tag: " +
                                  conclusion_override);
    Conclusion wanted = conclusion_override == kOracleHamiltonian
                            ? Conclusion::Hamiltonian
                            : Conclusion::DominatingLongestCycles;
    if (conclusion && *conclusion != wanted)
      throw std::invalid_argument(condition + " guarantees " +
                                  conclusion_tag(*conclusion) +
                                  ", not " + conclusion_override);
    conclusion = wanted;
  }
  if (!conclusion)
    throw std::invalid_argument(
        "bare predicate needs an explicit conclusion to verify: " + condition);

  VerificationRun run;
  run.condition = condition;
  run.source = source;
  run.conclusion = conclusion_tag(*conclusion);

  for_each_corpus_item(source, [&](const CorpusItem& item) {
    ++run.graphs;
    ConditionReport report = check_condition(item.graph, condition);
    if (report.verdict == Verdict::NotApplicable) {
      ++run.not_applicable;
      return true;
    }
    if (report.verdict == Verdict::Fail) {
      ++run.fails;
      return true;
    }
    // passes counts condition verdicts; the oracle outcome lands in
    // counterexamples / resource_limited on top of that.
    ++run.passes;
    ConclusionOutcome oracle =
        run_conclusion_oracle(item.graph, *conclusion, limits);
    run.oracle_nodes += oracle.nodes;
    if (oracle.answer == Answer::ResourceLimit) {
      run.resource_limited.push_back(item.index);
      return true;
    }
    if (oracle.answer == Answer::No) {
      run.counterexamples.push_back({item.index, item.graph6, report,
                                     run.conclusion, oracle.answer,
                                     oracle.certificate});
    }
    return true;
  });
  return run;
}

WitnessSearchOutcome search_witness(const WitnessQuery& q,
                                    const SearchLimits& limits) {
  if (!is_condition_id(q.pass_id))
    throw std::invalid_argument("unknown pass predicate: " + q.pass_id);
  const bool fail_is_oracle = is_oracle_tag(q.fail_id);
  if (!fail_is_oracle && !is_condition_id(q.fail_id))
    throw std::invalid_argument("unknown fail predicate or oracle tag: " +
                                q.fail_id);
  std::string source = q.source;
  if (source.empty()) {
    if (q.max_n < 1 || q.max_n > 10)
      throw std::invalid_argument("--max-n supports 1 <= n <= 10");
    source = "enum:" + std::to_string(q.max_n);
  }

  WitnessSearchOutcome out;
  for_each_corpus_item(source, [&](const CorpusItem& item) {
    ++out.graphs_scanned;
    ConditionEngine engine(item.graph);
    ConditionReport pass_report = engine.check(q.pass_id);
    if (pass_report.verdict != Verdict::Pass) return true;

    FoundWitness w;
    w.graph_index = item.index;
    w.graph6 = item.graph6;
    w.pass_report = pass_report;
    if (fail_is_oracle) {
      Conclusion c = q.fail_id == kOracleHamiltonian
                         ? Conclusion::Hamiltonian
                         : Conclusion::DominatingLongestCycles;
      ConclusionOutcome oracle = run_conclusion_oracle(item.graph, c, limits);
      if (oracle.answer == Answer::ResourceLimit) {
        out.resource_limited.push_back(item.index);
        return true;
      }
      if (oracle.answer != Answer::No) return true;
      w.oracle = q.fail_id;
      w.oracle_answer = oracle.answer;
      w.oracle_certificate = oracle.certificate;
    } else {
      ConditionReport fail_report = engine.check(q.fail_id);
      if (fail_report.verdict != Verdict::Fail) return true;
      w.fail_report = std::move(fail_report);
    }
    out.witness = std::move(w);
    return false;  // first witness wins; stop the scan
  });
  return out;
}

ReportResult make_report(const std::string& source, const ReportOptions& opts) {
  std::vector<std::string> conditions =
      opts.conditions.empty() ? catalog_ids() : opts.conditions;
  for (const auto& id : conditions)
    if (!is_condition_id(id))
      throw std::invalid_argument("unknown condition: " + id);

  ReportResult result;
  ordered_json entries = ordered_json::array();
  for_each_corpus_item(source, [&](const CorpusItem& item) {
    ConditionEngine engine(item.graph);
    for (const auto& id : conditions) {
      auto started = std::chrono::steady_clock::now();
      ConditionReport report = engine.check(id);
      ordered_json entry;
      entry["graph_index"] = item.index;
      entry["graph6"] = item.graph6;
      entry["condition"] = id;
      entry["verdict"] = verdict_name(report.verdict);
      if (report.witness) entry["witness"] = witness_json(*report.witness);
      if (report.verdict == Verdict::NotApplicable)
        entry["reason"] = report.reason;
      auto conclusion = guaranteed_conclusion(id);
      if (opts.with_oracle && conclusion &&
          report.verdict != Verdict::NotApplicable &&
          *conclusion != Conclusion::HamiltonianCurveCriterion) {
        ConclusionOutcome oracle =
            run_conclusion_oracle(item.graph, *conclusion, opts.limits);
        ordered_json oj;
        oj["tag"] = conclusion_tag(*conclusion);
        oj["answer"] = answer_name(oracle.answer);
        entry["oracle"] = oj;
        if (oracle.certificate) entry["certificate"] = *oracle.certificate;
        if (oracle.answer == Answer::ResourceLimit)
          result.resource_limited = true;
      }
      if (opts.timings) {
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        entry["elapsed_ms"] = elapsed;
      }
      entries.push_back(std::move(entry));
    }
    return true;
  });
  result.json = entries.dump(2) + "\n";
  return result;
}

}  // namespace hamlocal
