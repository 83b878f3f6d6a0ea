#include "hamlocal/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <queue>
#include <stdexcept>

namespace hamlocal {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  uint64_t limit;
  double wall;
  Clock::time_point t0 = Clock::now();
  uint64_t used = 0;

  explicit Budget(const SearchLimits& l) : limit(l.node_budget), wall(l.wall_seconds) {}

  // Returns false once the budget is exhausted.
  bool tick() {
    ++used;
    if (used > limit) return false;
    if (wall > 0 && (used & 0xfff) == 0) {
      double s = std::chrono::duration<double>(Clock::now() - t0).count();
      if (s > wall) return false;
    }
    return true;
  }
};

uint32_t adjacency_mask32(const Graph& g, int v) {
  uint32_t m = 0;
  g.neighbors(v).for_each([&](int w) { m |= uint32_t(1) << w; });
  return m;
}

enum class Walk { Found, Exhausted, Limit };

}  // namespace

bool validate_cycle(const Graph& g, const std::vector<int>& seq) {
  const int k = int(seq.size());
  if (k < 3) return false;
  BitRow seen(g.num_vertices());
  for (int v : seq) {
    if (v < 0 || v >= g.num_vertices() || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i < k; ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % k])) return false;
  return true;
}

bool validate_path(const Graph& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  BitRow seen(g.num_vertices());
  for (int v : seq) {
    if (v < 0 || v >= g.num_vertices() || seen.test(v)) return false;
    seen.set(v);
  }
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  return true;
}

std::vector<int> canonical_cycle(const std::vector<int>& seq) {
  const int k = int(seq.size());
  if (k == 0) return {};
  int at = int(std::min_element(seq.begin(), seq.end()) - seq.begin());
  std::vector<int> fwd(k), bwd(k);
  for (int i = 0; i < k; ++i) {
    fwd[i] = seq[(at + i) % k];
    bwd[i] = seq[(at - i + k) % k];
  }
  return std::min(fwd, bwd);
}

// ---------------------------------------------------------------------------
// Subset-DP engines (n <= 20).

CycleSearchResult is_hamiltonian_dp(const Graph& g, const SearchLimits& limits) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("is_hamiltonian_dp: n too large for subset DP");
  CycleSearchResult res;
  res.stats.engine = "subset_dp";
  if (n < 3) return res;
  Budget budget(limits);

  const int m = n - 1;  // vertices 1..n-1 as bits 0..m-1
  const uint32_t full = (uint32_t(1) << m) - 1;
  std::vector<uint32_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = adjacency_mask32(g, v) >> 1;
  const uint32_t adj0 = adj[0];

  std::vector<uint32_t> ends(size_t(full) + 1, 0);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (!budget.tick()) {
      res.answer = Answer::ResourceLimit;
      res.stats.nodes = budget.used;
      return res;
    }
    uint32_t e = 0;
    for (uint32_t rest = mask; rest;) {
      uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit) + 1;
      uint32_t prev = mask ^ bit;
      if (prev == 0 ? (adj0 & bit) != 0 : (ends[prev] & adj[v]) != 0) e |= bit;
    }
    ends[mask] = e;
  }
  res.stats.nodes = budget.used;
  uint32_t closers = ends[full] & adj0;
  if (!closers) return res;

  // Reconstruct one witness, lowest-bit-first for determinism.
  std::vector<int> seq{0};
  uint32_t mask = full;
  uint32_t bit = closers & (~closers + 1);
  while (true) {
    int v = std::countr_zero(bit) + 1;
    seq.push_back(v);
    uint32_t prev = mask ^ bit;
    if (prev == 0) break;
    uint32_t cands = ends[prev] & adj[v];
    mask = prev;
    bit = cands & (~cands + 1);
  }
  std::reverse(seq.begin() + 1, seq.end());
  res.answer = Answer::Yes;
  res.certificate = canonical_cycle(seq);
  return res;
}

// ---------------------------------------------------------------------------
// Pruned backtracking Hamilton-cycle search (general n).

namespace {

struct HamSearch {
  const Graph& g;
  Budget budget;
  std::vector<int> path;
  BitRow visited;
  int n;

  HamSearch(const Graph& g, const SearchLimits& l)
      : g(g), budget(l), visited(g.num_vertices()), n(g.num_vertices()) {}

  // Every unvisited vertex must keep >= 2 usable incidences and stay reachable
  // from the current endpoint; the start must stay reachable as well.
  bool feasible(int end) {
    BitRow all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    BitRow un = all;
    un.subtract(visited);
    if (un.empty()) return g.adjacent(end, path[0]);
    bool start_touch = false;
    for (int u = un.next(0); u >= 0; u = un.next(u + 1)) {
      BitRow nb = g.neighbors(u);
      BitRow nb_un = nb;
      nb_un &= un;
      int inc = nb_un.count();
      if (nb.test(end)) ++inc;
      if (nb.test(path[0])) {
        ++inc;
        start_touch = true;
      }
      if (inc < 2) return false;
    }
    if (!start_touch) return false;
    // Reachability of all unvisited vertices from `end` through unvisited.
    BitRow seen(n);
    seen.set(end);
    std::vector<int> stack{end};
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      BitRow nb = g.neighbors(v);
      nb &= un;
      nb.subtract(seen);
      for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
        seen.set(w);
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == un.count();
  }

  Walk dfs() {
    if (!budget.tick()) return Walk::Limit;
    int end = path.back();
    if (int(path.size()) == n)
      return g.adjacent(end, path[0]) ? Walk::Found : Walk::Exhausted;
    if (!feasible(end)) return Walk::Exhausted;
    BitRow nb = g.neighbors(end);
    for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
      if (visited.test(w)) continue;
      visited.set(w);
      path.push_back(w);
      Walk r = dfs();
      if (r == Walk::Found) return r;  // leave the witness path intact
      path.pop_back();
      visited.reset(w);
      if (r == Walk::Limit) return r;
    }
    return Walk::Exhausted;
  }
};

}  // namespace

CycleSearchResult is_hamiltonian_backtracking(const Graph& g, const SearchLimits& limits) {
  CycleSearchResult res;
  res.stats.engine = "backtracking";
  const int n = g.num_vertices();
  if (n < 3 || !is_connected(g)) return res;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return res;
  HamSearch s(g, limits);
  s.visited.set(0);
  s.path.push_back(0);
  Walk r = s.dfs();
  res.stats.nodes = s.budget.used;
  if (r == Walk::Limit) {
    res.answer = Answer::ResourceLimit;
  } else if (r == Walk::Found) {
    res.answer = Answer::Yes;
    res.certificate = canonical_cycle(s.path);
  }
  return res;
}

CycleSearchResult is_hamiltonian(const Graph& g, const SearchLimits& limits) {
  return g.num_vertices() <= 20 ? is_hamiltonian_dp(g, limits)
                                : is_hamiltonian_backtracking(g, limits);
}

// ---------------------------------------------------------------------------
// Longest cycle / longest path.

namespace {

// Subset DP over all masks; the root of a mask is its lowest bit, so every
// cycle is counted exactly once (rooted at its minimum vertex).
LongestCycleResult longest_cycle_dp(const Graph& g, const SearchLimits& limits) {
  const int n = g.num_vertices();
  LongestCycleResult res;
  res.stats.engine = "subset_dp";
  Budget budget(limits);
  if (n < 3) return res;
  std::vector<uint32_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = adjacency_mask32(g, v);
  const uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
  std::vector<uint32_t> ends(size_t(full) + 1, 0);
  int best_len = 0;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (!budget.tick()) {
      res.answer = Answer::ResourceLimit;
      res.length = best_len;
      res.stats.nodes = budget.used;
      return res;
    }
    uint32_t root_bit = mask & (~mask + 1);
    int root = std::countr_zero(root_bit);
    uint32_t rest_all = mask ^ root_bit;
    if (!rest_all) continue;
    uint32_t e = 0;
    for (uint32_t rest = rest_all; rest;) {
      uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit);
      uint32_t prev = mask ^ bit;
      if (prev == root_bit ? (adj[root] & bit) != 0 : (ends[prev] & adj[v]) != 0) e |= bit;
    }
    ends[mask] = e;
    int pc = std::popcount(mask);
    if (pc >= 3 && pc > best_len && (e & adj[root])) {
      best_len = pc;
      best_mask = mask;
    }
  }
  res.stats.nodes = budget.used;
  res.length = best_len;
  if (best_len >= 3) {
    uint32_t mask = best_mask;
    uint32_t root_bit = mask & (~mask + 1);
    int root = std::countr_zero(root_bit);
    std::vector<int> seq{root};
    uint32_t closers = ends[mask] & adj[root];
    uint32_t bit = closers & (~closers + 1);
    while (true) {
      int v = std::countr_zero(bit);
      seq.push_back(v);
      uint32_t prev = mask ^ bit;
      if (prev == root_bit) break;
      uint32_t cands = ends[prev] & adj[v];
      mask = prev;
      bit = cands & (~cands + 1);
    }
    std::reverse(seq.begin() + 1, seq.end());
    res.cycle = canonical_cycle(seq);
  }
  return res;
}

// Exhaustive cycle enumeration rooted at the minimum cycle vertex. Visits each
// cycle once up to rotation (reflection is halved by requiring the second
// vertex to be smaller than the last). The callback returns false to stop.
template <typename F>
Walk enumerate_rooted_cycles(const Graph& g, Budget& budget, int exact_len, F&& visit) {
  const int n = g.num_vertices();
  std::vector<int> path;
  BitRow visited(n);

  struct Frame {
    const Graph& g;
    Budget& budget;
    std::vector<int>& path;
    BitRow& visited;
    int exact_len;
    F& visit;
    int n;

    Walk dfs() {
      if (!budget.tick()) return Walk::Limit;
      int end = path.back();
      int root = path[0];
      int len = int(path.size());
      if (exact_len > 0 && len == exact_len) {
        if (g.adjacent(end, root) && path[1] < path.back())
          if (!visit(path)) return Walk::Found;
        return Walk::Exhausted;
      }
      if (len >= 3 && exact_len == 0 && g.adjacent(end, root) && path[1] < path.back())
        if (!visit(path)) return Walk::Found;
      // Reachability bound: remaining growth cannot exceed vertices reachable
      // from the endpoint through unused vertices greater than the root.
      if (exact_len > 0) {
        BitRow seen(n);
        seen.set(end);
        std::vector<int> stack{end};
        int reach = 0;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          g.neighbors(v).for_each([&](int w) {
            if (w > root && !visited.test(w) && !seen.test(w)) {
              seen.set(w);
              ++reach;
              stack.push_back(w);
            }
          });
        }
        if (len + reach < exact_len) return Walk::Exhausted;
      }
      BitRow nb = g.neighbors(end);
      for (int w = nb.next(root + 1); w >= 0; w = nb.next(w + 1)) {
        if (visited.test(w)) continue;
        visited.set(w);
        path.push_back(w);
        Walk r = dfs();
        path.pop_back();
        visited.reset(w);
        if (r != Walk::Exhausted) return r;
      }
      return Walk::Exhausted;
    }
  };

  for (int s = 0; s < n; ++s) {
    path.assign(1, s);
    visited = BitRow(n);
    visited.set(s);
    Frame f{g, budget, path, visited, exact_len, visit, n};
    Walk r = f.dfs();
    if (r != Walk::Exhausted) return r;
  }
  return Walk::Exhausted;
}

LongestCycleResult longest_cycle_backtracking(const Graph& g, const SearchLimits& limits) {
  LongestCycleResult res;
  res.stats.engine = "backtracking";
  Budget budget(limits);
  std::vector<int> best;
  Walk r = enumerate_rooted_cycles(g, budget, 0, [&](const std::vector<int>& cyc) {
    if (cyc.size() > best.size()) best = cyc;
    return true;
  });
  res.stats.nodes = budget.used;
  if (r == Walk::Limit) res.answer = Answer::ResourceLimit;
  res.length = int(best.size());
  if (!best.empty()) res.cycle = canonical_cycle(best);
  return res;
}

}  // namespace

LongestCycleResult longest_cycle(const Graph& g, const SearchLimits& limits) {
  return g.num_vertices() <= 20 ? longest_cycle_dp(g, limits)
                                : longest_cycle_backtracking(g, limits);
}

namespace {

LongestPathResult longest_path_dp(const Graph& g, const SearchLimits& limits) {
  const int n = g.num_vertices();
  LongestPathResult res;
  res.stats.engine = "subset_dp";
  Budget budget(limits);
  if (n == 0) return res;
  std::vector<uint32_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = adjacency_mask32(g, v);
  const uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
  std::vector<uint32_t> ends(size_t(full) + 1, 0);
  int best_len = 0;
  uint32_t best_mask = 0;
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (!budget.tick()) {
      res.answer = Answer::ResourceLimit;
      res.length_vertices = best_len;
      res.stats.nodes = budget.used;
      return res;
    }
    uint32_t e = 0;
    if (std::popcount(mask) == 1) {
      e = mask;
    } else {
      for (uint32_t rest = mask; rest;) {
        uint32_t bit = rest & (~rest + 1);
        rest ^= bit;
        int v = std::countr_zero(bit);
        if (ends[mask ^ bit] & adj[v]) e |= bit;
      }
    }
    ends[mask] = e;
    int pc = std::popcount(mask);
    if (e && pc > best_len) {
      best_len = pc;
      best_mask = mask;
    }
  }
  res.stats.nodes = budget.used;
  res.length_vertices = best_len;
  uint32_t mask = best_mask;
  uint32_t bit = ends[mask] & (~ends[mask] + 1);
  std::vector<int> seq;
  while (mask) {
    int v = std::countr_zero(bit);
    seq.push_back(v);
    uint32_t prev = mask ^ bit;
    if (!prev) break;
    uint32_t cands = ends[prev] & adj[v];
    mask = prev;
    bit = cands & (~cands + 1);
  }
  std::reverse(seq.begin(), seq.end());
  if (!seq.empty() && seq.front() > seq.back()) std::reverse(seq.begin(), seq.end());
  res.path = seq;
  return res;
}

struct LongestPathSearch {
  const Graph& g;
  Budget budget;
  std::vector<int> path, best;
  BitRow visited;
  int n;

  LongestPathSearch(const Graph& g, const SearchLimits& l)
      : g(g), budget(l), visited(g.num_vertices()), n(g.num_vertices()) {}

  Walk dfs() {
    if (!budget.tick()) return Walk::Limit;
    if (path.size() > best.size()) best = path;
    if (int(best.size()) == n) return Walk::Found;
    int end = path.back();
    // Bound: the path can only grow into vertices reachable from the endpoint.
    BitRow seen(n);
    seen.set(end);
    std::vector<int> stack{end};
    int reach = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.neighbors(v).for_each([&](int w) {
        if (!visited.test(w) && !seen.test(w)) {
          seen.set(w);
          ++reach;
          stack.push_back(w);
        }
      });
    }
    if (path.size() + reach <= best.size()) return Walk::Exhausted;
    BitRow nb = g.neighbors(end);
    for (int w = nb.next(0); w >= 0; w = nb.next(w + 1)) {
      if (visited.test(w)) continue;
      visited.set(w);
      path.push_back(w);
      Walk r = dfs();
      path.pop_back();
      visited.reset(w);
      if (r != Walk::Exhausted) return r;
    }
    return Walk::Exhausted;
  }
};

LongestPathResult longest_path_backtracking(const Graph& g, const SearchLimits& limits) {
  LongestPathResult res;
  res.stats.engine = "backtracking";
  LongestPathSearch s(g, limits);
  Walk r = Walk::Exhausted;
  for (int v = 0; v < g.num_vertices() && r == Walk::Exhausted; ++v) {
    s.path.assign(1, v);
    s.visited = BitRow(g.num_vertices());
    s.visited.set(v);
    r = s.dfs();
  }
  res.stats.nodes = s.budget.used;
  if (r == Walk::Limit) res.answer = Answer::ResourceLimit;
  res.length_vertices = int(s.best.size());
  res.path = s.best;
  if (!res.path.empty() && res.path.front() > res.path.back())
    std::reverse(res.path.begin(), res.path.end());
  return res;
}

}  // namespace

LongestPathResult longest_path(const Graph& g, const SearchLimits& limits) {
  return g.num_vertices() <= 20 ? longest_path_dp(g, limits)
                                : longest_path_backtracking(g, limits);
}

DominatingCheckResult all_longest_cycles_dominating(const Graph& g, const SearchLimits& limits) {
  DominatingCheckResult res;
  res.stats.engine = "longest_cycle+enumeration";
  auto lc = longest_cycle(g, limits);
  res.stats.nodes = lc.stats.nodes;
  res.longest_length = lc.length;
  if (lc.answer == Answer::ResourceLimit) {
    res.answer = Answer::ResourceLimit;
    return res;
  }
  const int n = g.num_vertices();
  if (lc.length == 0 || lc.length == n) return res;  // vacuously dominating

  SearchLimits rem = limits;
  rem.node_budget = limits.node_budget > res.stats.nodes
                        ? limits.node_budget - res.stats.nodes
                        : 0;
  Budget budget(rem);
  std::optional<std::vector<int>> bad;
  Walk r = enumerate_rooted_cycles(g, budget, lc.length, [&](const std::vector<int>& cyc) {
    BitRow off(n);
    for (int v = 0; v < n; ++v) off.set(v);
    for (int v : cyc) off.reset(v);
    for (int u = off.next(0); u >= 0; u = off.next(u + 1)) {
      BitRow nb = g.neighbors(u);
      nb &= off;
      if (!nb.empty()) {
        bad = cyc;
        return false;  // stop: found a longest cycle that is not dominating
      }
    }
    return true;
  });
  res.stats.nodes += budget.used;
  if (r == Walk::Limit) {
    res.answer = Answer::ResourceLimit;
  } else if (bad) {
    res.answer = Answer::No;
    res.counterexample = canonical_cycle(*bad);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Cycle through a prescribed vertex set.

namespace {

struct CycleThroughSearch {
  const Graph& g;
  Budget budget;
  int n;
  int s0;
  BitRow target;  // prescribed vertices except s0
  std::vector<int> path;
  BitRow onpath;
  int unmet;

  CycleThroughSearch(const Graph& g, const SearchLimits& l, const std::vector<int>& S)
      : g(g), budget(l), n(g.num_vertices()), s0(S[0]), target(n), onpath(n) {
    for (size_t i = 1; i < S.size(); ++i) target.set(S[i]);
    unmet = target.count();
  }

  Walk dfs() {
    if (!budget.tick()) return Walk::Limit;
    int v = path.back();
    if (unmet == 0 && path.size() >= 3 && g.adjacent(v, s0)) return Walk::Found;

    // Distances from v through free vertices; prunes unreachable prescribed
    // vertices and unreachable closure, and orders moves toward the nearest
    // goal (an unmet prescribed vertex, or a neighbor of s0 when done).
    std::vector<int> dist(n, -1);
    dist[v] = 0;
    std::vector<int> frontier{v};
    int seen_unmet = 0;
    bool closure = false;
    int d = 0;
    while (!frontier.empty()) {
      ++d;
      std::vector<int> next;
      for (int u : frontier)
        g.neighbors(u).for_each([&](int w) {
          if (dist[w] == -1 && !onpath.test(w)) {
            dist[w] = d;
            next.push_back(w);
            if (target.test(w)) ++seen_unmet;
            if (g.adjacent(w, s0)) closure = true;
          }
        });
      frontier = std::move(next);
    }
    if (seen_unmet < unmet || !closure) return Walk::Exhausted;

    // Goal distances for move ordering.
    std::vector<int> goal(n, -1);
    std::vector<int> sources;
    if (unmet > 0) {
      target.for_each([&](int t) {
        if (!onpath.test(t)) {
          goal[t] = 0;
          sources.push_back(t);
        }
      });
    } else {
      g.neighbors(s0).for_each([&](int t) {
        if (!onpath.test(t)) {
          goal[t] = 0;
          sources.push_back(t);
        }
      });
    }
    for (size_t qi = 0; qi < sources.size(); ++qi) {
      int u = sources[qi];
      g.neighbors(u).for_each([&](int w) {
        if (goal[w] == -1 && !onpath.test(w)) {
          goal[w] = goal[u] + 1;
          sources.push_back(w);
        }
      });
    }

    std::vector<std::pair<int, int>> moves;
    g.neighbors(v).for_each([&](int w) {
      if (!onpath.test(w) && goal[w] >= 0) moves.emplace_back(goal[w], w);
    });
    std::sort(moves.begin(), moves.end());
    for (auto [_, w] : moves) {
      bool was_target = target.test(w);
      onpath.set(w);
      path.push_back(w);
      if (was_target) --unmet;
      Walk r = dfs();
      if (r == Walk::Found) return r;  // leave the witness path intact
      if (was_target) ++unmet;
      path.pop_back();
      onpath.reset(w);
      if (r == Walk::Limit) return r;
    }
    return Walk::Exhausted;
  }
};

}  // namespace

CycleSearchResult cycle_through(const Graph& g, const std::vector<int>& S,
                                const SearchLimits& limits) {
  CycleSearchResult res;
  res.stats.engine = "cycle_through_dfs";
  if (S.empty()) throw std::invalid_argument("cycle_through: empty prescribed set");
  std::vector<int> s = S;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int v : s)
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("cycle_through: vertex out of range");

  CycleThroughSearch search(g, limits, s);
  search.onpath.set(s[0]);
  search.path.push_back(s[0]);
  Walk r = search.dfs();
  res.stats.nodes = search.budget.used;
  if (r == Walk::Limit) {
    res.answer = Answer::ResourceLimit;
  } else if (r == Walk::Found) {
    res.answer = Answer::Yes;
    res.certificate = canonical_cycle(search.path);
  }
  return res;
}

}  // namespace hamlocal
