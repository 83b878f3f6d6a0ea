#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamlocal/conditions.hpp"
#include "hamlocal/graph.hpp"
#include "hamlocal/oracles.hpp"

namespace hamlocal {

// ---------------------------------------------------------------------------
// Registry: every id the harness accepts, plus the two oracle tags that name
// a conclusion directly.

inline constexpr const char* kOracleHamiltonian = "hamiltonian";
inline constexpr const char* kOracleDominating = "dominating-longest-cycles";

const std::vector<std::string>& oracle_tags();
bool is_oracle_tag(const std::string& id);

// catalog_ids() followed by extra_predicate_ids().
const std::vector<std::string>& all_condition_ids();
bool is_condition_id(const std::string& id);

// "hamiltonian", "dominating-longest-cycles", "hamiltonian-curve-criterion".
std::string conclusion_tag(Conclusion c);

// ---------------------------------------------------------------------------
// Corpus sources. A source is either "enum:n" — the built-in isomorphism-free
// enumerator over all connected graphs with 1 <= size <= n, n <= 10 — or a
// path to a file of graph6 records, one per line (blank lines skipped).
// Items arrive in deterministic order with 0-based indices; the sink returns
// false to stop early. Throws std::invalid_argument on bad specs, unreadable
// files, or malformed graph6 (with the line number).

struct CorpusItem {
  int index = 0;
  Graph graph;
  std::string graph6;
};

void for_each_corpus_item(const std::string& source,
                          const std::function<bool(const CorpusItem&)>& sink);

// ---------------------------------------------------------------------------
// verify-corpus: for every corpus graph where the condition passes, evaluate
// the guaranteed conclusion with the exact oracle and collect violations.

struct Counterexample {
  int graph_index = 0;
  std::string graph6;
  ConditionReport report;  // the Pass report
  std::string oracle;      // conclusion tag
  Answer oracle_answer = Answer::No;
  // Hamiltonian: absent (there is nothing to certify a No with beyond the
  // exhaustive search); dominating: a longest cycle that is not dominating.
  std::optional<std::vector<int>> oracle_certificate;
};

struct VerificationRun {
  std::string condition;
  std::string source;
  std::string conclusion;
  uint64_t graphs = 0;
  uint64_t passes = 0;
  uint64_t fails = 0;
  uint64_t not_applicable = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<int> resource_limited;  // graph indices; never counted clean
  uint64_t oracle_nodes = 0;
  bool clean() const {
    return counterexamples.empty() && resource_limited.empty();
  }
};

// `conclusion` names the implication to test for a bare predicate (an
// oracle tag: "hamiltonian" or "dominating-longest-cycles"); catalog
// conditions use their guaranteed conclusion and reject a mismatching
// override. Throws std::invalid_argument when the pair leaves nothing to
// verify: a bare predicate with no explicit conclusion, or a window
// condition (its conclusion has no finite oracle).
VerificationRun verify_corpus(const std::string& condition,
                              const std::string& source,
                              const SearchLimits& limits = {},
                              const std::string& conclusion = "");

// ---------------------------------------------------------------------------
// search-witness: first corpus graph that passes predicate A and fails
// predicate B (a condition id, requiring verdict Fail — out-of-scope graphs
// do not count — or an oracle tag, requiring the oracle to answer No).

struct WitnessQuery {
  std::string pass_id;
  std::string fail_id;
  int max_n = 9;       // enumerator bound; ignored when source is set
  std::string source;  // optional file override
};

struct FoundWitness {
  int graph_index = 0;
  std::string graph6;
  ConditionReport pass_report;
  std::optional<ConditionReport> fail_report;  // when B is a condition id
  std::string oracle;                          // when B is an oracle tag
  Answer oracle_answer = Answer::Yes;
  std::optional<std::vector<int>> oracle_certificate;
};

struct WitnessSearchOutcome {
  std::optional<FoundWitness> witness;
  uint64_t graphs_scanned = 0;
  std::vector<int> resource_limited;  // indices skipped for budget reasons
};

WitnessSearchOutcome search_witness(const WitnessQuery& q,
                                    const SearchLimits& limits = {});

// ---------------------------------------------------------------------------
// report: one JSON entry per (graph, condition), in corpus order then
// condition order. Deterministic and byte-identical for fixed inputs unless
// `timings` is set, which adds wall-clock fields. Returned as a serialized
// JSON array (2-space indent, trailing newline).

struct ReportOptions {
  std::vector<std::string> conditions;  // empty = the whole finite catalog
  // Attach the conclusion oracle's outcome to every entry with a verdict
  // (skipped for not-applicable entries and conclusions with no finite
  // oracle).
  bool with_oracle = false;
  bool timings = false;
  SearchLimits limits;
};

struct ReportResult {
  std::string json;
  bool resource_limited = false;  // some attached oracle hit its budget
};

ReportResult make_report(const std::string& source, const ReportOptions& opts);

}  // namespace hamlocal
