#include "hamlocal/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "hamlocal/metrics.hpp"

namespace hamlocal {

namespace {

// Equitable refinement: repeatedly recolor by (own color, sorted neighbor
// color multiset) until the number of classes stabilizes. Class ids are ranks
// in the lexicographic order of signatures, so refinement only ever splits
// classes and keeps the relative order of existing classes.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.num_vertices();
  int classes = 0;
  for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s;
      s.reserve(g.degree(v) + 1);
      s.push_back(color[v]);
      g.neighbors(v).for_each([&](int w) { s.push_back(color[w]); });
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sorted)
      rank.emplace(s, int(rank.size()));
    int new_classes = int(rank.size());
    for (int v = 0; v < n; ++v) color[v] = rank.at(sig[v].first);
    if (new_classes == classes) return;
    classes = new_classes;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct IRSearch {
  const Graph& g;
  int n;
  std::string header;
  std::string best_cert;
  std::vector<int> best_position;
  bool have_best = false;
  // First permutation (vertex -> position) seen for each leaf certificate.
  std::unordered_map<std::string, std::vector<int>> leaf_perms;
  std::vector<std::vector<int>> generators;

  explicit IRSearch(const Graph& g) : g(g), n(g.num_vertices()) {}

  std::string leaf_cert(const std::vector<int>& position) const {
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[position[v]] = v;
    std::string bits = header;
    int acc = 0, nb = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        acc = acc << 1 | int(g.adjacent(order[i], order[j]));
        if (++nb == 8) {
          bits.push_back(char(acc));
          acc = 0;
          nb = 0;
        }
      }
    if (nb > 0) bits.push_back(char(acc << (8 - nb)));
    return bits;
  }

  void handle_leaf(const std::vector<int>& position) {
    std::string cert = leaf_cert(position);
    auto [it, fresh] = leaf_perms.emplace(cert, position);
    if (!fresh) {
      // Same certificate from two labelings: their composition is an
      // automorphism sigma with position_old(sigma(v)) == position_new(v).
      const std::vector<int>& old_pos = it->second;
      std::vector<int> old_order(n);
      for (int v = 0; v < n; ++v) old_order[old_pos[v]] = v;
      std::vector<int> sigma(n);
      bool identity = true;
      for (int v = 0; v < n; ++v) {
        sigma[v] = old_order[position[v]];
        if (sigma[v] != v) identity = false;
      }
      if (!identity) generators.push_back(std::move(sigma));
    }
    if (!have_best || cert < best_cert) {
      best_cert = std::move(cert);
      best_position = position;
      have_best = true;
    }
  }

  void search(std::vector<int> color, std::vector<int>& prefix) {
    refine(g, color);
    int classes = 0;
    for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
    if (classes == n) {
      handle_leaf(color);
      return;
    }
    // Target cell: smallest class id with more than one member.
    int target = -1;
    {
      std::vector<int> count(classes, 0);
      for (int v = 0; v < n; ++v) ++count[color[v]];
      for (int c = 0; c < classes; ++c)
        if (count[c] > 1) {
          target = c;
          break;
        }
    }
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (color[v] == target) cell.push_back(v);

    std::vector<int> tried;
    for (int v : cell) {
      // Skip v if a known automorphism fixing the individualized prefix maps
      // an already-explored candidate to it; that subtree is an isomorphic
      // image and contributes the same leaf certificates.
      if (!tried.empty()) {
        UnionFind uf(n);
        for (const auto& sigma : generators) {
          bool fixes = true;
          for (int w : prefix)
            if (sigma[w] != w) {
              fixes = false;
              break;
            }
          if (fixes)
            for (int w = 0; w < n; ++w) uf.unite(w, sigma[w]);
        }
        bool skip = false;
        for (int u : tried)
          if (uf.find(u) == uf.find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      tried.push_back(v);
      std::vector<int> child = color;
      for (int w = 0; w < n; ++w)
        if (child[w] >= target) ++child[w];
      child[v] = target;
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }
};

CanonResult run_canonical(const Graph& g, std::vector<int> color) {
  const int n = g.num_vertices();
  // Normalize initial colors to ranks and record class sizes in the header.
  std::vector<int> vals(color);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<int> sizes(vals.size(), 0);
  for (int v = 0; v < n; ++v) {
    color[v] = int(std::lower_bound(vals.begin(), vals.end(), color[v]) - vals.begin());
    ++sizes[color[v]];
  }
  IRSearch s(g);
  s.header.push_back(char(n));
  s.header.push_back(char(sizes.size()));
  for (int sz : sizes) s.header.push_back(char(sz));
  if (n == 0) {
    return {s.header, {}, {}};
  }
  std::vector<int> prefix;
  s.search(std::move(color), prefix);
  return {std::move(s.best_cert), std::move(s.best_position), std::move(s.generators)};
}

}  // namespace

CanonResult canonical_form(const Graph& g) {
  return run_canonical(g, std::vector<int>(g.num_vertices(), 0));
}

CanonResult canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
  if (int(colors.size()) != g.num_vertices())
    throw std::invalid_argument("canonical_form_colored: color count mismatch");
  return run_canonical(g, colors);
}

std::string canonical_cert(const Graph& g) { return canonical_form(g).cert; }

bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  const int n = g.num_vertices();
  std::vector<int> cu(n, 0), cv(n, 0);
  cu[u] = 1;
  cv[v] = 1;
  return run_canonical(g, cu).cert == run_canonical(g, cv).cert;
}

// ---------------------------------------------------------------------------
// Canonical augmentation enumeration.

namespace {

Graph augment(const Graph& p, uint32_t subset) {
  const int k = p.num_vertices();
  Graph h = Graph::from_edge_list(k + 1, p.edge_list());
  for (int v = 0; v < k; ++v)
    if (subset >> v & 1) h.add_edge(v, k);
  return h;
}

// Canonical-parent acceptance: the freshly added vertex (label k) must lie in
// the automorphism orbit of the canonical deletion vertex, which is the
// non-cut vertex at the maximum canonical position.
bool child_is_canonical(const Graph& h) {
  const int k = h.num_vertices() - 1;
  CanonResult cr = canonical_form(h);
  std::vector<bool> art = articulation_map(h);
  int m = -1;
  for (int v = 0; v <= k; ++v)
    if (!art[v] && (m == -1 || cr.canonical_position[v] > cr.canonical_position[m])) m = v;
  if (m == k) return true;
  if (art[k]) return false;  // never happens: h minus the new vertex is connected
  if (h.degree(m) != h.degree(k)) return false;
  return same_orbit(h, m, k);
}

uint64_t grow(const Graph& p, int target, bool bipartite_only, const GraphSink& sink,
              bool& keep_going) {
  const int k = p.num_vertices();
  if (k == target) {
    keep_going = sink(p);
    return 1;
  }
  uint64_t emitted = 0;
  std::vector<uint32_t> candidates;
  if (!bipartite_only) {
    for (uint32_t x = 1; x < (uint32_t(1) << k); ++x) candidates.push_back(x);
  } else {
    auto bp = bipartition(p);
    if (!bp) throw std::logic_error("bipartite enumeration reached a non-bipartite graph");
    for (int side = 0; side < 2; ++side) {
      const std::vector<int>& verts = bp->side[side];
      if (verts.empty()) continue;
      for (uint32_t pick = 1; pick < (uint32_t(1) << verts.size()); ++pick) {
        uint32_t x = 0;
        for (size_t i = 0; i < verts.size(); ++i)
          if (pick >> i & 1) x |= uint32_t(1) << verts[i];
        candidates.push_back(x);
      }
    }
  }
  std::unordered_set<std::string> seen;
  for (uint32_t x : candidates) {
    std::vector<int> colors(k, 0);
    for (int v = 0; v < k; ++v)
      if (x >> v & 1) colors[v] = 1;
    std::string cert = canonical_form_colored(p, colors).cert;
    if (!seen.insert(std::move(cert)).second) continue;
    Graph h = augment(p, x);
    if (!child_is_canonical(h)) continue;
    emitted += grow(h, target, bipartite_only, sink, keep_going);
    if (!keep_going) break;
  }
  return emitted;
}

uint64_t enumerate_impl(int n, bool bipartite_only, const GraphSink& sink) {
  if (n < 1) throw std::invalid_argument("enumerate: need n >= 1");
  if (n > 31) throw std::invalid_argument("enumerate: n too large");
  bool keep_going = true;
  return grow(Graph(1), n, bipartite_only, sink, keep_going);
}

}  // namespace

uint64_t enumerate_connected(int n, const GraphSink& sink) {
  return enumerate_impl(n, false, sink);
}

uint64_t enumerate_connected_bipartite(int n, const GraphSink& sink) {
  return enumerate_impl(n, true, sink);
}

}  // namespace hamlocal
