#include "hamlocal/infinite.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "hamlocal/constructive.hpp"
#include "hamlocal/metrics.hpp"

namespace hamlocal {

namespace {

// floor(id / p) for possibly negative ids.
int64_t floor_div(int64_t id, int64_t p) {
  int64_t q = id / p;
  if (id % p != 0 && (id < 0) != (p < 0)) --q;
  return q;
}

std::vector<int64_t> normalized_neighbors(const AdjacencyOracle& o, int64_t v) {
  std::vector<int64_t> nb = o.neighbors(v);
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  nb.erase(std::remove(nb.begin(), nb.end(), v), nb.end());
  return nb;
}

}  // namespace

AdjacencyOracle layered_infinite_oracle(int p) {
  if (p < 1) throw std::invalid_argument("layer size must be >= 1");
  AdjacencyOracle o;
  o.name = "layered:" + std::to_string(p);
  o.root = 0;
  o.neighbors = [p](int64_t v) {
    const int64_t layer = floor_div(v, p);
    std::vector<int64_t> nb;
    nb.reserve(3 * p - 1);
    for (int64_t l = layer - 1; l <= layer + 1; ++l)
      for (int s = 0; s < p; ++s) {
        int64_t w = l * p + s;
        if (w != v) nb.push_back(w);
      }
    return nb;
  };
  return o;
}

AdjacencyOracle path_infinite_oracle() {
  AdjacencyOracle o = layered_infinite_oracle(1);
  o.name = "path";
  return o;
}

AdjacencyOracle oracle_from_name(const std::string& spec) {
  if (spec == "path") return path_infinite_oracle();
  const std::string prefix = "layered:";
  if (spec.rfind(prefix, 0) == 0) {
    int p = 0;
    try {
      size_t used = 0;
      p = std::stoi(spec.substr(prefix.size()), &used);
      if (used != spec.size() - prefix.size()) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p >= 1) return layered_infinite_oracle(p);
  }
  throw std::invalid_argument("unknown oracle: " + spec +
                              " (expected path or layered:<p>)");
}

int Window::local_of(int64_t id) const {
  auto it = index.find(id);
  return it == index.end() ? -1 : it->second;
}

Window materialize_window(const AdjacencyOracle& oracle, int64_t anchor,
                          int radius) {
  if (radius < 0) throw std::invalid_argument("window radius must be >= 0");
  Window w;
  w.anchor = anchor;
  w.radius = radius;

  std::vector<std::vector<int64_t>> neighbor_ids;
  std::deque<int> queue;
  w.ids.push_back(anchor);
  w.depth.push_back(0);
  w.index[anchor] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    neighbor_ids.resize(std::max(neighbor_ids.size(), size_t(u) + 1));
    neighbor_ids[u] = normalized_neighbors(oracle, w.ids[u]);
    if (w.depth[u] == radius) continue;
    for (int64_t id : neighbor_ids[u]) {
      if (w.index.count(id)) continue;
      int local = int(w.ids.size());
      w.ids.push_back(id);
      w.depth.push_back(w.depth[u] + 1);
      w.index[id] = local;
      queue.push_back(local);
    }
  }
  neighbor_ids.resize(w.ids.size());

  const int n = int(w.ids.size());
  w.true_degree.resize(n);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    w.true_degree[u] = int(neighbor_ids[u].size());
    for (int64_t id : neighbor_ids[u]) {
      int v = w.local_of(id);
      if (v < 0) continue;
      if (!std::binary_search(neighbor_ids[v].begin(), neighbor_ids[v].end(),
                              w.ids[u]))
        throw std::invalid_argument(
            "adjacency oracle is not symmetric: " + std::to_string(w.ids[u]) +
            " lists " + std::to_string(id) + " but not conversely");
      if (u < v) edges.push_back({u, v});
    }
  }
  w.graph = Graph::from_edge_list(n, edges);
  return w;
}

namespace {

// Window members of the radius-rho ball around `c` sorted by oracle id, with
// a membership mask; faithful when depth[c] <= radius - rho.
struct WindowBall {
  BallView view;            // over w.graph
  std::vector<int> by_id;   // ball locals sorted by oracle id
};

WindowBall window_ball(const Window& w, int c, int rho) {
  WindowBall b{ball(w.graph, c, rho), {}};
  b.by_id = b.view.to_parent;
  std::sort(b.by_id.begin(), b.by_id.end(),
            [&](int a, int z) { return w.ids[a] < w.ids[z]; });
  return b;
}

// All true neighbors of window vertex x lie inside the mask. Neighbors
// outside the window cannot be in the mask, so comparing against the true
// degree is exact.
bool true_interior(const Window& w, const BitRow& mask, int x) {
  BitRow nb = w.graph.neighbors(x);
  nb &= mask;
  return nb.count() == w.true_degree[x];
}

std::vector<int64_t> to_ids(const Window& w, const std::vector<int>& locals) {
  std::vector<int64_t> out;
  out.reserve(locals.size());
  for (int v : locals) out.push_back(w.ids[v]);
  return out;
}

WindowCheck fail_check(WindowCheck base, WindowWitness witness) {
  base.verdict = Verdict::Fail;
  base.witness = std::move(witness);
  return base;
}

std::optional<WindowWitness> ball_not_two_connected(const Window& w, int center,
                                                    const BallView& b) {
  if (is_two_connected(b.subgraph)) return std::nullopt;
  WindowWitness witness;
  witness.center = w.ids[center];
  witness.detail = "ball-not-2-connected";
  auto art = articulation_map(b.subgraph);
  for (int v = 0; v < b.subgraph.num_vertices(); ++v)
    if (art[v]) {
      witness.vertices = {w.ids[b.to_parent[v]]};
      break;
    }
  return witness;
}

}  // namespace

WindowCheck check_on_window(const Window& w, const std::string& id, int r) {
  WindowCheck out;
  out.condition = id;
  int reach = 0;
  if (id == "infinite_ce") {
    if (r < 1) throw std::invalid_argument("ball radius must be >= 1");
    reach = r + 1;
  } else if (id == "infinite_jung") {
    reach = 2;
  } else if (id == "infinite_kappa" || id == "infinite_kappa_single") {
    reach = 3;
  } else {
    throw std::invalid_argument("unknown infinite condition: " + id);
  }
  out.reach = reach;
  if (w.radius < reach) {
    out.verdict = Verdict::NotApplicable;
    out.reason = "window radius below condition reach";
    return out;
  }

  // Scan eligible centers in ascending oracle-id order.
  std::vector<int> centers;
  for (int v = 0; v < w.size(); ++v)
    if (w.depth[v] <= w.radius - reach) centers.push_back(v);
  std::sort(centers.begin(), centers.end(),
            [&](int a, int b) { return w.ids[a] < w.ids[b]; });

  for (int c : centers) {
    ++out.centers_checked;
    if (id == "infinite_ce") {
      WindowBall inner = window_ball(w, c, r);
      WindowBall outer = window_ball(w, c, r + 1);
      int kappa = vertex_connectivity(inner.view.subgraph);
      int alpha = independence_number(outer.view.subgraph);
      if (kappa < alpha) {
        std::vector<int> mis = maximum_independent_set(outer.view.subgraph);
        for (int& v : mis) v = outer.view.to_parent[v];
        WindowWitness witness;
        witness.vertices = to_ids(w, mis);
        witness.center = w.ids[c];
        witness.lhs = kappa;
        witness.rhs = alpha;
        witness.detail = "ball-connectivity-below-independence";
        return fail_check(std::move(out), std::move(witness));
      }
    } else if (id == "infinite_jung") {
      WindowBall b2 = window_ball(w, c, 2);
      if (auto witness = ball_not_two_connected(w, c, b2.view))
        return fail_check(std::move(out), std::move(*witness));
      const long long rhs = b2.view.size() - 1;
      BitRow nbmask = w.graph.neighbors(c);
      std::vector<int> nb;
      for (int v = nbmask.next(0); v >= 0; v = nbmask.next(v + 1)) nb.push_back(v);
      std::sort(nb.begin(), nb.end(),
                [&](int a, int z) { return w.ids[a] < w.ids[z]; });
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
          int u = nb[i], v = nb[j];
          if (w.graph.adjacent(u, v)) continue;
          long long lhs = w.true_degree[u] + w.true_degree[v];
          if (lhs < rhs) {
            WindowWitness witness;
            witness.vertices = {w.ids[u], w.ids[v]};
            witness.center = w.ids[c];
            witness.lhs = lhs;
            witness.rhs = rhs;
            witness.detail = "degree-sum";
            return fail_check(std::move(out), std::move(witness));
          }
        }
    } else {
      const bool single = id == "infinite_kappa_single";
      WindowBall b3 = window_ball(w, c, 3);
      if (auto witness = ball_not_two_connected(w, c, b3.view))
        return fail_check(std::move(out), std::move(*witness));
      const long long rhs =
          b3.view.size() + vertex_connectivity(b3.view.subgraph);
      std::vector<int> in;
      for (int v : b3.by_id)
        if (true_interior(w, b3.view.members, v)) in.push_back(v);
      if (single) {
        for (int u : in) {
          long long lhs = 3LL * w.true_degree[u];
          if (lhs < rhs) {
            WindowWitness witness;
            witness.vertices = {w.ids[u]};
            witness.center = w.ids[c];
            witness.lhs = lhs;
            witness.rhs = rhs;
            witness.detail = "interior-degree";
            return fail_check(std::move(out), std::move(witness));
          }
        }
      } else {
        for (size_t i = 0; i < in.size(); ++i)
          for (size_t j = i + 1; j < in.size(); ++j) {
            if (w.graph.adjacent(in[i], in[j])) continue;
            for (size_t l = j + 1; l < in.size(); ++l) {
              if (w.graph.adjacent(in[i], in[l]) ||
                  w.graph.adjacent(in[j], in[l]))
                continue;
              long long lhs = w.true_degree[in[i]] + w.true_degree[in[j]] +
                              w.true_degree[in[l]];
              if (lhs < rhs) {
                WindowWitness witness;
                witness.vertices = {w.ids[in[i]], w.ids[in[j]], w.ids[in[l]]};
                witness.center = w.ids[c];
                witness.lhs = lhs;
                witness.rhs = rhs;
                witness.detail = "interior-triple-sum";
                return fail_check(std::move(out), std::move(witness));
              }
            }
          }
      }
    }
  }
  out.verdict = Verdict::Pass;
  return out;
}

ProbeResult curve_probe(const AdjacencyOracle& oracle, std::vector<int64_t> set,
                        int distance_cap) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw std::invalid_argument("probe set is empty");

  ProbeResult out;
  out.set = set;
  out.anchor = set.front();

  // Lazy BFS from the anchor until every member is located.
  std::unordered_map<int64_t, int> dist{{out.anchor, 0}};
  std::deque<int64_t> queue{out.anchor};
  size_t found = 1;  // the anchor
  int spread = 0;
  while (found < set.size()) {
    if (queue.empty())
      throw std::invalid_argument("probe set is not connected to its least id");
    int64_t u = queue.front();
    queue.pop_front();
    int du = dist[u];
    if (du >= distance_cap)
      throw std::invalid_argument(
          "probe set spans more than the distance cap of " +
          std::to_string(distance_cap));
    for (int64_t v : normalized_neighbors(oracle, u)) {
      if (dist.count(v)) continue;
      dist[v] = du + 1;
      queue.push_back(v);
      if (std::binary_search(set.begin(), set.end(), v)) {
        ++found;
        spread = std::max(spread, du + 1);
        if (found == set.size()) break;
      }
    }
  }
  out.spread = spread;
  out.window_radius = spread + kLocalityRadius;

  Window w = materialize_window(oracle, out.anchor, out.window_radius);
  out.window_size = w.size();
  std::vector<int> locals;
  locals.reserve(set.size());
  for (int64_t id : set) locals.push_back(w.local_of(id));

  CycleSearchResult res = cycle_through(w.graph, locals);
  out.answer = res.answer;
  out.stats = res.stats;
  if (res.answer == Answer::Yes) {
    out.cycle.reserve(res.certificate.size());
    for (int v : res.certificate) out.cycle.push_back(w.ids[v]);
  }
  return out;
}

}  // namespace hamlocal
