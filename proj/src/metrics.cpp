#include "hamlocal/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace hamlocal {

std::vector<int> distances_from(const Graph& g, int v) {
  const int n = g.num_vertices();
  if (v < 0 || v >= n) throw std::invalid_argument("distances_from: vertex out of range");
  std::vector<int> dist(n, -1);
  dist[v] = 0;
  std::vector<int> frontier{v};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<int> next;
    for (int u : frontier)
      g.neighbors(u).for_each([&](int w) {
        if (dist[w] == -1) {
          dist[w] = d;
          next.push_back(w);
        }
      });
    frontier = std::move(next);
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) out.push_back(distances_from(g, v));
  return out;
}

std::vector<int> sphere(const Graph& g, int v, int r) {
  if (r < 0) throw std::invalid_argument("sphere: negative radius");
  auto dist = distances_from(g, v);
  std::vector<int> out;
  for (int w = 0; w < g.num_vertices(); ++w)
    if (dist[w] == r) out.push_back(w);
  return out;
}

BallView ball(const Graph& g, int center, int radius) {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  auto dist = distances_from(g, center);
  BallView b;
  b.center = center;
  b.radius = radius;
  b.members = BitRow(g.num_vertices());
  b.interior_mask = BitRow(g.num_vertices());
  std::vector<int> verts;
  for (int w = 0; w < g.num_vertices(); ++w)
    if (dist[w] != -1 && dist[w] <= radius) {
      b.members.set(w);
      verts.push_back(w);
    }
  auto sub = induced_subgraph(g, verts);
  b.subgraph = std::move(sub.graph);
  b.to_parent = std::move(sub.to_parent);
  for (int w : verts)
    if (g.neighbors(w).subset_of(b.members)) {
      b.interior.push_back(w);
      b.interior_mask.set(w);
    }
  return b;
}

int diameter(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("diameter: empty graph");
  int best = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = distances_from(g, v);
    for (int w = 0; w < n; ++w) {
      if (dist[w] == -1) throw std::invalid_argument("diameter: graph is disconnected");
      best = std::max(best, dist[w]);
    }
  }
  return best;
}

namespace {

// Max-flow on the vertex-split digraph with unit vertex capacities.
// Node 2v = v_in, 2v+1 = v_out. Returns min(limit, maxflow(s_out, t_in)).
int vertex_disjoint_paths(const Graph& g, int s, int t, int limit) {
  const int n = g.num_vertices();
  const int N = 2 * n;
  int flow = 0;
  // cap[u][v] in {0,1}: unit capacities suffice (internal arcs 1, edge arcs
  // never need more than 1 because they start from a capacity-1 out-node).
  std::vector<BitRow> cap(N, BitRow(N));
  for (int v = 0; v < n; ++v) {
    cap[2 * v].set(2 * v + 1);
    g.neighbors(v).for_each([&](int w) { cap[2 * v + 1].set(2 * w); });
  }
  const int src = 2 * s + 1, dst = 2 * t;
  std::vector<int> prev(N);
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[src] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && prev[dst] == -1) {
      int u = q.front();
      q.pop();
      cap[u].for_each([&](int w) {
        if (prev[w] == -1) {
          prev[w] = u;
          q.push(w);
        }
      });
    }
    if (prev[dst] == -1) break;
    for (int v = dst; v != src; v = prev[v]) {
      cap[prev[v]].reset(v);
      cap[v].set(prev[v]);
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
  if (n == 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;  // complete-graph convention
  for (int s = 0; s < n && best > 0; ++s)
    for (int t = s + 1; t < n && best > 0; ++t)
      if (!g.adjacent(s, t)) best = std::min(best, vertex_disjoint_paths(g, s, t, best));
  return best;
}

namespace {

int mis_recurse(const Graph& g, BitRow cand, int& best, int current) {
  int size = cand.count();
  if (current + size <= best) return best;
  int v = cand.next(0);
  if (v < 0) {
    best = std::max(best, current);
    return best;
  }
  // Pick the candidate with the most candidate-neighbors to branch on.
  int pick = v, pick_deg = -1;
  cand.for_each([&](int u) {
    BitRow nb = g.neighbors(u);
    nb &= cand;
    int d = nb.count();
    if (d > pick_deg) {
      pick_deg = d;
      pick = u;
    }
  });
  if (pick_deg <= 1) {
    // Remaining candidates induce degree <= 1: greedy is exact here.
    int extra = 0;
    BitRow rest = cand;
    for (int u = rest.next(0); u >= 0; u = rest.next(u + 1)) {
      ++extra;
      rest.reset(u);
      rest.subtract(g.neighbors(u));
    }
    best = std::max(best, current + extra);
    return best;
  }
  // Include pick.
  BitRow inc = cand;
  inc.reset(pick);
  inc.subtract(g.neighbors(pick));
  mis_recurse(g, inc, best, current + 1);
  // Exclude pick.
  BitRow exc = cand;
  exc.reset(pick);
  mis_recurse(g, exc, best, current);
  return best;
}

void mis_set_recurse(const Graph& g, BitRow cand, BitRow chosen, int current, int& best,
                     BitRow& best_set) {
  if (current + cand.count() <= best) return;
  int v = cand.next(0);
  if (v < 0) {
    if (current > best) {
      best = current;
      best_set = chosen;
    }
    return;
  }
  int pick = v, pick_deg = -1;
  cand.for_each([&](int u) {
    BitRow nb = g.neighbors(u);
    nb &= cand;
    int d = nb.count();
    if (d > pick_deg) {
      pick_deg = d;
      pick = u;
    }
  });
  if (pick_deg <= 1) {
    BitRow rest = cand;
    int extra = 0;
    for (int u = rest.next(0); u >= 0; u = rest.next(u + 1)) {
      ++extra;
      chosen.set(u);
      rest.reset(u);
      rest.subtract(g.neighbors(u));
    }
    if (current + extra > best) {
      best = current + extra;
      best_set = chosen;
    }
    return;
  }
  BitRow inc = cand;
  inc.reset(pick);
  inc.subtract(g.neighbors(pick));
  BitRow with = chosen;
  with.set(pick);
  mis_set_recurse(g, inc, with, current + 1, best, best_set);
  BitRow exc = cand;
  exc.reset(pick);
  mis_set_recurse(g, exc, chosen, current, best, best_set);
}

}  // namespace

int independence_number(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  BitRow all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  int best = 0;
  return mis_recurse(g, all, best, 0);
}

std::vector<int> maximum_independent_set(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return {};
  BitRow all(n);
  for (int v = 0; v < n; ++v) all.set(v);
  int best = 0;
  BitRow best_set(n);
  mis_set_recurse(g, all, BitRow(n), 0, best, best_set);
  return best_set.to_vector();
}

bool is_claw_free(const Graph& g) {
  const int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbor_list(v);
    const int k = int(nb.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (int l = j + 1; l < k; ++l)
          if (!g.adjacent(nb[i], nb[l]) && !g.adjacent(nb[j], nb[l])) return false;
      }
  }
  return true;
}

bool is_locally_connected(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbor_list(v);
    if (nb.size() <= 1) continue;
    auto sub = induced_subgraph(g, nb);
    if (!is_connected(sub.graph)) return false;
  }
  return true;
}

namespace {

}  // namespace

std::vector<bool> articulation_map(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<bool> art(n, false);
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    int v, parent;
    int next = 0;
    int children = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      std::vector<int> nbrs = g.neighbor_list(f.v);
      if (f.next < int(nbrs.size())) {
        int w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          ++f.children;
          stack.push_back({w, f.v});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, parent = f.parent, children = f.children;
        stack.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (parent != root && low[v] >= disc[parent]) art[parent] = true;
        }
        if (v == root && children > 1) art[root] = true;
      }
    }
  }
  return art;
}

bool is_two_connected(const Graph& g) {
  if (g.num_vertices() < 3) return false;
  if (!is_connected(g)) return false;
  auto art = articulation_map(g);
  return std::find(art.begin(), art.end(), true) == art.end();
}

}  // namespace hamlocal
