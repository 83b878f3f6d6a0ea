#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamlocal/conditions.hpp"
#include "hamlocal/graph.hpp"
#include "hamlocal/oracles.hpp"

namespace hamlocal {

// A locally finite infinite graph presented by adjacency: vertices are int64
// ids and `neighbors` returns the complete (finite) neighbor list of an id.
// Lists may come back unsorted or with duplicates; consumers normalize them.
struct AdjacencyOracle {
  std::string name;
  int64_t root = 0;
  std::function<std::vector<int64_t>(int64_t)> neighbors;
};

// Two-way infinite layered graph: layer l (over all integers) holds the ids
// l*p .. l*p + p - 1, and the union of any two consecutive layers induces a
// clique, so every vertex has degree 3p - 1. p = 1 degenerates to the two-way
// infinite path.
AdjacencyOracle layered_infinite_oracle(int p);
AdjacencyOracle path_infinite_oracle();  // == layered_infinite_oracle(1)

// Parse "path" or "layered:<p>". Throws std::invalid_argument otherwise.
AdjacencyOracle oracle_from_name(const std::string& spec);

// A finite faithful fragment of the infinite graph: the induced subgraph on
// the BFS ball of `radius` around `anchor`, together with the true infinite-
// graph degree of every member. Every infinite-graph edge between two window
// members is present, and for any center c with depth[c] <= radius - rho the
// radius-rho ball around c computed in `graph` equals the infinite graph's.
// Construction verifies adjacency symmetry between window members and throws
// std::invalid_argument when the oracle violates it.
struct Window {
  Graph graph;                   // induced subgraph, local ids 0..k-1
  std::vector<int64_t> ids;      // local id -> oracle id (BFS discovery order)
  std::vector<int> depth;        // local id -> distance from the anchor
  std::vector<int> true_degree;  // local id -> degree in the infinite graph
  std::unordered_map<int64_t, int> index;  // oracle id -> local id
  int64_t anchor = 0;
  int radius = 0;

  int size() const { return graph.num_vertices(); }
  int local_of(int64_t id) const;  // -1 when the id is outside the window
};

Window materialize_window(const AdjacencyOracle& oracle, int64_t anchor,
                          int radius);

// A witness in oracle-id coordinates.
struct WindowWitness {
  std::vector<int64_t> vertices;
  std::optional<int64_t> center;
  long long lhs = 0;
  long long rhs = 0;
  std::string detail;
};

struct WindowCheck {
  std::string condition;
  Verdict verdict = Verdict::Pass;
  std::optional<WindowWitness> witness;  // present iff verdict == Fail
  std::string reason;                    // present iff verdict == NotApplicable
  int centers_checked = 0;  // window vertices deep enough for a faithful ball
  int reach = 0;            // ball radius the condition needs around a center
};

// Evaluate one vertex-local condition over every window vertex whose ball of
// the condition's reach is faithful (depth <= radius - reach). Degrees are
// the true infinite-graph degrees. Conditions:
//   infinite_ce            kappa(G_r(u)) >= alpha(G_{r+1}(u)); reach r + 1
//   infinite_jung          G_2(x) 2-connected, and d(u) + d(v) >= |M_2(x)| - 1
//                          for every path u-x-v with u, v nonadjacent; reach 2
//   infinite_kappa         G_3(v) 2-connected, and every independent triple of
//                          interior vertices of G_3(v) has degree sum at least
//                          |M_3(v)| + kappa(G_3(v)); reach 3
//   infinite_kappa_single  same with 3 d(u) for single interior vertices
// Centers are scanned in ascending id order; the first violation is reported.
// A window whose radius is below the condition's reach yields NotApplicable.
// `r` only affects infinite_ce and must be >= 1.
WindowCheck check_on_window(const Window& w, const std::string& id, int r = 2);

// One instance of the finite-cycle criterion: a finite cycle through a given
// finite vertex set, found inside a window. The window is anchored at the
// least id of the set, with radius (max distance to a member) + 12.
struct ProbeResult {
  std::vector<int64_t> set;  // sorted, deduplicated input
  int64_t anchor = 0;
  int spread = 0;         // max distance anchor -> set member
  int window_radius = 0;  // spread + 12
  int window_size = 0;
  Answer answer = Answer::No;
  std::vector<int64_t> cycle;  // canonical orientation; empty unless Yes
  OracleStats stats;
};

// Throws std::invalid_argument for an empty set or when some member is not
// reachable from the least id within `distance_cap` BFS steps.
ProbeResult curve_probe(const AdjacencyOracle& oracle, std::vector<int64_t> set,
                        int distance_cap = 64);

}  // namespace hamlocal
