#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hamlocal/graph.hpp"

namespace hamlocal {

// Exhaustive searches are bounded by an explicit node budget (deterministic).
// A wall-clock limit is opt-in; verdicts under node budgets are reproducible.
struct SearchLimits {
  uint64_t node_budget = 400'000'000;
  double wall_seconds = 0;  // 0 = no wall-clock limit
};

enum class Answer { Yes, No, ResourceLimit };

struct OracleStats {
  uint64_t nodes = 0;
  std::string engine;
};

struct CycleSearchResult {
  Answer answer = Answer::No;
  std::vector<int> certificate;  // canonicalized cycle when answer == Yes
  OracleStats stats;
};

struct LongestCycleResult {
  Answer answer = Answer::Yes;   // ResourceLimit if the search was cut off
  int length = 0;                // 0 means acyclic
  std::vector<int> cycle;        // canonicalized witness when length >= 3
  OracleStats stats;
};

struct LongestPathResult {
  Answer answer = Answer::Yes;
  int length_vertices = 0;
  std::vector<int> path;  // canonical orientation: first endpoint <= last
  OracleStats stats;
};

struct DominatingCheckResult {
  Answer answer = Answer::Yes;  // Yes = every longest cycle is dominating
  int longest_length = 0;
  std::optional<std::vector<int>> counterexample;  // a longest cycle that is not dominating
  OracleStats stats;
};

// Hamilton-cycle decision. Dispatches to the subset-DP engine for n <= 20 and
// to pruned backtracking beyond; both are exposed for cross-validation.
CycleSearchResult is_hamiltonian(const Graph& g, const SearchLimits& limits = {});
CycleSearchResult is_hamiltonian_dp(const Graph& g, const SearchLimits& limits = {});
CycleSearchResult is_hamiltonian_backtracking(const Graph& g, const SearchLimits& limits = {});

// Exact maximum cycle length with witness (subset DP for n <= 20, otherwise
// exhaustive backtracking under the node budget).
LongestCycleResult longest_cycle(const Graph& g, const SearchLimits& limits = {});

// Exact maximum path vertex count with witness.
LongestPathResult longest_path(const Graph& g, const SearchLimits& limits = {});

// True iff every cycle of maximum length is dominating (its complement is an
// independent set). Acyclic graphs pass vacuously.
DominatingCheckResult all_longest_cycles_dominating(const Graph& g,
                                                    const SearchLimits& limits = {});

// Decides whether some cycle contains every vertex of S (S nonempty).
CycleSearchResult cycle_through(const Graph& g, const std::vector<int>& S,
                                const SearchLimits& limits = {});

// Independent certificate validators.
bool validate_cycle(const Graph& g, const std::vector<int>& seq);
bool validate_path(const Graph& g, const std::vector<int>& seq);

// Lexicographically smallest rotation/reflection, starting at the minimum
// vertex of the cycle.
std::vector<int> canonical_cycle(const std::vector<int>& seq);

}  // namespace hamlocal
