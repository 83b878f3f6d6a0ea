#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hamlocal/graph.hpp"

namespace hamlocal {

// A structural precondition of a constructive operation does not hold; the
// input is rejected before any search runs.
struct ContractViolation : std::invalid_argument {
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// The bounded exhaustive search exhausted every candidate cycle without
// meeting the output contract. Under the guaranteeing condition this cannot
// happen, so it signals either a theorem-level precondition violation (the
// graph does not actually satisfy the condition) or an implementation bug.
struct NoExtensionFound : std::runtime_error {
  explicit NoExtensionFound(const std::string& what) : std::runtime_error(what) {}
};

// The rotation set A of the path engine is empty, i.e. the local degree
// condition fails for the path's endpoints.
struct RotationUnavailable : std::runtime_error {
  explicit RotationUnavailable(const std::string& what) : std::runtime_error(what) {}
};

// Ball radius confining every cycle modification.
inline constexpr int kLocalityRadius = 12;

// A cycle with a fixed orientation. The stored sequence is the orientation;
// successor/predecessor wrap around it.
class OrientedCycle {
 public:
  // Validates on construction: >= 3 distinct vertices of g, consecutive
  // (and wrap-around) adjacency. Throws ContractViolation otherwise.
  OrientedCycle(const Graph& g, std::vector<int> sequence);

  int length() const { return int(seq_.size()); }
  const std::vector<int>& vertices() const { return seq_; }
  bool contains(int v) const;
  int successor(int v) const;
  int predecessor(int v) const;
  // The vertices from `from` to `to`, both inclusive, walking along the
  // orientation. from == to yields {from}.
  std::vector<int> segment(int from, int to) const;

 private:
  int index_of(int v) const;  // throws ContractViolation if off the cycle
  std::vector<int> seq_;
  std::vector<int> pos_;
};

// Elementwise successor along the orientation; throws ContractViolation when
// a member is off the cycle.
std::vector<int> successor_set(const OrientedCycle& c, const std::vector<int>& s);

// A path v_1 ... v_n with a fixed direction.
class OrientedPath {
 public:
  // Validates distinctness and consecutive adjacency (>= 2 vertices).
  OrientedPath(const Graph& g, std::vector<int> sequence);

  int length_vertices() const { return int(seq_.size()); }
  const std::vector<int>& vertices() const { return seq_; }

 private:
  std::vector<int> seq_;
};

// True iff neither endpoint has a neighbor off the path.
bool is_maximal_path(const Graph& g, const OrientedPath& p);

// Largest 1-based index i with v_1 v_i in E; f = n iff the path closes to a
// cycle. Defined only for maximal paths whose start vertex has degree >= 2;
// throws ContractViolation otherwise.
int f_statistic(const Graph& g, const OrientedPath& p);

// Lengthen c using only vertices and edges near u: the returned cycle C' has
// |C'| > |c|, contains a neighbor of u, loses at most one vertex of c, and
// differs from c (vertices and edges) only inside M_12(u). Preconditions:
// u off the cycle, with at least one neighbor on it and at least one off it.
// Throws ContractViolation (precondition) or NoExtensionFound (search
// exhausted).
OrientedCycle extend_cycle_locally(const Graph& g, const OrientedCycle& c, int u);

// Absorb a vertex v whose whole neighborhood lies on c: the returned cycle
// contains V(c) u {v} and differs from c only inside M_12(v). Preconditions:
// v off the cycle and N(v) subseteq V(c).
OrientedCycle absorb_vertex(const Graph& g, const OrientedCycle& c, int v);

// One rotation step of the path engine: given a maximal path P = v_1...v_n in
// a bipartite graph with d(v_1) >= 2 and f(P) < 2*floor(n/2), returns a path Q
// on the same vertex set with f(Q) > f(P). Throws RotationUnavailable when the
// rotation set is empty (a local degree violation), ContractViolation when a
// structural precondition fails.
OrientedPath mm_rotate(const Graph& g, const OrientedPath& p);

// Rotate until f reaches 2*floor(n/2), then close the first 2*floor(n/2)
// vertices into a cycle; the result misses at most one vertex of p.
OrientedCycle mm_close_to_cycle(const Graph& g, const OrientedPath& p);

// One growth step of grow_hamilton_cycle, for locality validation.
struct GrowthStep {
  std::string op;  // "extend" or "absorb"
  int pivot = -1;
  std::vector<int> before;
  std::vector<int> after;
};

// Repeatedly extend/absorb until the cycle is Hamiltonian. Picks the smallest
// off-cycle vertex adjacent to the cycle each round; absorbs when its whole
// neighborhood is on the cycle, extends otherwise. Appends one GrowthStep per
// round to *trace when given.
OrientedCycle grow_hamilton_cycle(const Graph& g, const OrientedCycle& start,
                                  std::vector<GrowthStep>* trace = nullptr);

}  // namespace hamlocal
