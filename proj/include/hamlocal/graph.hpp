#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamlocal {

using VertexId = int;

// Fixed-width bit set used for adjacency rows and vertex sets.
// Word count is determined by the universe size n given at construction.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const;
  bool empty() const;
  bool subset_of(const BitRow& o) const;
  bool intersects(const BitRow& o) const;

  BitRow& operator|=(const BitRow& o);
  BitRow& operator&=(const BitRow& o);
  BitRow& subtract(const BitRow& o);  // this &= ~o

  bool operator==(const BitRow& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Index of the lowest set bit at or after `from`, or -1.
  int next(int from = 0) const;

  std::vector<int> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (int v = next(0); v >= 0; v = next(v + 1)) f(v);
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Immutable simple undirected graph on dense vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), rows_(n, BitRow(n)) {}

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const;
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return rows_[v].count(); }
  const BitRow& neighbors(int v) const { return rows_[v]; }
  std::vector<int> neighbor_list(int v) const { return rows_[v].to_vector(); }
  std::vector<std::pair<int, int>> edge_list() const;

  // Mutation is only exposed for construction-time use (builders, generators).
  void add_edge(int u, int v);

  bool operator==(const Graph& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  std::vector<BitRow> rows_;
};

struct InducedSubgraph {
  Graph graph;                  // on ids 0..k-1
  std::vector<int> to_parent;   // new id -> parent id
};

// `vertices` must be distinct, in-range parent ids; order is preserved in the mapping.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

bool is_connected(const Graph& g);

struct Bipartition {
  std::vector<int> side[2];  // proper 2-coloring, component-wise
  bool balanced = false;     // side sizes equal
};

// Returns the 2-coloring if g is bipartite (color of the smallest vertex in each
// component is 0), nullopt otherwise.
std::optional<Bipartition> bipartition(const Graph& g);

// graph6 codec (bit-exact). parse throws std::invalid_argument on malformed
// records: bad length, characters outside [63,126], or nonzero padding bits.
// An optional ">>graph6<<" header prefix is accepted and stripped.
Graph parse_graph6(std::string_view record);
std::string encode_graph6(const Graph& g);

// Plain-text edge list: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list_text(std::string_view text);
std::string encode_edge_list_text(const Graph& g);

// Small builders used across tests and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph complete_bipartite(int a, int b);

}  // namespace hamlocal
