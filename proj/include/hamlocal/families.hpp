#pragma once

#include <string>
#include <vector>

#include "hamlocal/graph.hpp"

namespace hamlocal {

// Layered graph description. Vertices are numbered consecutively by layer
// (layer 0 first, ascending within each layer). Two distinct vertices are
// adjacent iff they both lie in V_i u V_{i+1} for some consecutive pair of
// layers; with `wrap` the last layer and layer 0 also count as consecutive.
// With `cross_only` the rule tightens to u in V_i, v in V_{i+1}: consecutive
// layers are joined completely but no layer spans a clique.
struct LayeredSpec {
  std::vector<int> sizes;
  bool wrap = false;
  bool cross_only = false;
};

// Throws std::invalid_argument on empty sizes, a non-positive layer size, or
// wrap with fewer than 3 layers.
Graph layered_graph(const LayeredSpec& spec);

// Layer index of each vertex in layered_graph's vertex numbering.
std::vector<int> layer_assignment(const LayeredSpec& spec);

// Named instances used as fixtures and separation witnesses:
//  - ce_tight_H(n), n >= 3: 2n layers, sizes n,...,n,n-1; 2n^2-1 vertices
//    with connectivity = independence number = n and diameter 2n-1.
//  - g_pn(p, n), p >= 2, n >= 3: 2n layers of size p joined in a ring;
//    (3p-1)-regular with diameter n.
//  - gn_dirac(n), n >= 2: layers n, 3n, n+1, n+1, 3n, n; 10n+2 vertices with
//    2 d(u) = |M_3(u)| at every vertex.
//  - mm_diam6(n), n >= 5: layers 1, n-1, n, n, n, n-1, 1 with cross-layer
//    adjacency only; 5n vertices, bipartite, diameter 6.
LayeredSpec named_family_spec(const std::string& name,
                              const std::vector<long long>& params);
Graph named_family(const std::string& name, const std::vector<long long>& params);

const std::vector<std::string>& family_names();

}  // namespace hamlocal
