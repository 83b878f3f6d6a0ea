#pragma once

#include "hamlocal/graph.hpp"

namespace hamlocal {

// BFS distances from v; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int v);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Vertices at distance exactly r from v (sorted).
std::vector<int> sphere(const Graph& g, int v, int r);

// Ball of radius r around `center`: the induced subgraph on
// M_r(center) = { w : d(center, w) <= r } plus bookkeeping.
// A member w is *interior* when all of its parent-graph neighbors lie in the
// ball; degrees of interior vertices are therefore identical in both graphs.
struct BallView {
  int center = -1;
  int radius = 0;
  BitRow members;               // parent ids in M_r(center)
  Graph subgraph;               // induced, local ids 0..k-1
  std::vector<int> to_parent;   // local id -> parent id (sorted ascending)
  std::vector<int> interior;    // parent ids, sorted
  BitRow interior_mask;         // same set as a parent-id mask
  int size() const { return int(to_parent.size()); }
};

BallView ball(const Graph& g, int center, int radius);

// Longest shortest-path distance; requires a connected graph.
int diameter(const Graph& g);

// Vertex connectivity via unit-vertex-capacity max-flow over all nonadjacent
// pairs; kappa(K_n) = n-1, kappa(disconnected) = 0, kappa(K_1) = 0.
int vertex_connectivity(const Graph& g);

// Exact maximum independent set size (branch and bound).
int independence_number(const Graph& g);

// One maximum independent set (sorted). Deterministic for a given graph.
std::vector<int> maximum_independent_set(const Graph& g);

bool is_claw_free(const Graph& g);

// Every open neighborhood induces a connected graph; neighborhoods of size
// <= 1 count as connected.
bool is_locally_connected(const Graph& g);

// art[v] true iff v is an articulation (cut) vertex of its component.
std::vector<bool> articulation_map(const Graph& g);

// n >= 3, connected, and no articulation vertex (equivalently kappa >= 2).
bool is_two_connected(const Graph& g);

}  // namespace hamlocal
