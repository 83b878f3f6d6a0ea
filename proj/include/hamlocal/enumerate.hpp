#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hamlocal/graph.hpp"

namespace hamlocal {

// Canonical labeling via individualization-refinement with automorphism
// pruning. Intended for the small graphs this project works with (n <= ~16).
struct CanonResult {
  // Certificate bytes: equal certificates <=> isomorphic graphs (with matching
  // initial color classes, for the colored variant).
  std::string cert;
  // canonical_position[v] = position of vertex v in the canonical order.
  std::vector<int> canonical_position;
  // Automorphisms discovered along the way (vertex -> vertex maps). They are
  // genuine automorphisms but are not guaranteed to generate the full group.
  std::vector<std::vector<int>> generators;
};

// Uniform initial coloring.
CanonResult canonical_form(const Graph& g);

// Initial coloring given per vertex; classes are ordered by ascending color
// value. Certificates embed the class sizes, so colorings with different
// class structure never compare equal.
CanonResult canonical_form_colored(const Graph& g, const std::vector<int>& colors);

std::string canonical_cert(const Graph& g);

// True iff some automorphism of g maps u to v (exact orbit test via marked
// certificates).
bool same_orbit(const Graph& g, int u, int v);

// Streaming enumeration of one representative per isomorphism class.
// The sink returns false to stop early. Returns the number of graphs emitted.
using GraphSink = std::function<bool(const Graph&)>;

// All connected graphs on exactly n >= 1 vertices.
uint64_t enumerate_connected(int n, const GraphSink& sink);

// All connected bipartite graphs on exactly n >= 1 vertices.
uint64_t enumerate_connected_bipartite(int n, const GraphSink& sink);

}  // namespace hamlocal
