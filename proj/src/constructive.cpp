#include "hamlocal/constructive.hpp"

#include <algorithm>
#include <optional>

#include "hamlocal/metrics.hpp"

namespace hamlocal {

namespace {

void check_vertex(const Graph& g, int v, const char* role) {
  if (v < 0 || v >= g.num_vertices())
    throw ContractViolation(std::string(role) + " out of range");
}

// Exhaustive search for a cycle of exactly `exact_len` vertices inside the
// `allowed` set, using only `adj` edges, containing every `required` vertex,
// missing at most `max_drop` vertices of `optional_old`, using every edge in
// `forced_at`, and (when `nb_hit` is nonempty) meeting `nb_hit`.
//
// Determinism: the root ranges over candidate minimum vertices in ascending
// order, the DFS extends by ascending neighbor and only through vertices
// larger than the root, and a cycle is accepted only with path[1] <
// path.back(). Under those rules a found cycle is reported exactly in its
// canonical form (least vertex first, lexicographically smaller direction),
// and the first cycle found is the lexicographically least canonical form of
// any valid cycle of that length, so the search can stop at the first hit.
struct ConstrainedCycleSearch {
  const Graph& g;
  int n;
  std::vector<BitRow> adj;
  BitRow allowed;
  BitRow required;
  BitRow optional_old;
  int max_drop;
  BitRow nb_hit;
  std::vector<BitRow> forced_at;
  int forced_total;
  int exact_len = 0;

  std::vector<int> path;
  BitRow on_path;
  int required_missing = 0;
  int optional_unvisited = 0;
  int forced_used = 0;
  int nb_hits_on_path = 0;
  int root = 0;
  std::optional<std::vector<int>> solution;

  explicit ConstrainedCycleSearch(const Graph& graph)
      : g(graph),
        n(graph.num_vertices()),
        allowed(n),
        required(n),
        optional_old(n),
        max_drop(0),
        nb_hit(n),
        forced_total(0),
        on_path(n) {
    adj.assign(n, BitRow(n));
    forced_at.assign(n, BitRow(n));
  }

  void set_forced(const std::vector<std::pair<int, int>>& forced) {
    forced_total = int(forced.size());
    for (auto [a, b] : forced) {
      forced_at[a].set(b);
      forced_at[b].set(a);
    }
  }

  void add_edge(int a, int b) {
    if (a == b) return;
    adj[a].set(b);
    adj[b].set(a);
  }

  // Every forced partner of x must be one of its two cycle neighbors a, b.
  bool forced_ok(int x, int a, int b) const {
    BitRow rest = forced_at[x];
    rest.reset(a);
    rest.reset(b);
    return rest.empty();
  }

  void push(int v) {
    path.push_back(v);
    on_path.set(v);
    if (required.test(v)) --required_missing;
    if (optional_old.test(v)) --optional_unvisited;
    if (nb_hit.test(v)) ++nb_hits_on_path;
  }

  void pop() {
    int v = path.back();
    path.pop_back();
    on_path.reset(v);
    if (required.test(v)) ++required_missing;
    if (optional_old.test(v)) ++optional_unvisited;
    if (nb_hit.test(v)) --nb_hits_on_path;
  }

  bool dfs() {
    const int cur = path.back();
    const int len = int(path.size());
    if (len == exact_len) {
      if (!adj[cur].test(root)) return false;
      if (path[1] >= path.back()) return false;  // one direction per cycle
      if (required_missing > 0) return false;
      if (optional_unvisited > max_drop) return false;
      if (forced_total > 0) {
        if (!forced_ok(root, path[1], cur)) return false;
        if (!forced_ok(cur, path[len - 2], root)) return false;
        int used = forced_used + (forced_at[cur].test(root) ? 1 : 0);
        if (used != forced_total) return false;
      }
      if (!nb_hit.empty() && nb_hits_on_path == 0) return false;
      solution = path;
      return true;
    }
    const int remaining = exact_len - len;
    if (required_missing + std::max(0, optional_unvisited - max_drop) > remaining)
      return false;
    BitRow cand = adj[cur];
    cand.subtract(on_path);
    for (int w = cand.next(root + 1); w >= 0; w = cand.next(w + 1)) {
      // Extending cur -> w fixes cur's cycle neighbors (unless cur is the
      // root, whose second edge is the closing one).
      if (forced_total > 0 && len >= 2 && !forced_ok(cur, path[len - 2], w)) continue;
      bool counts = forced_at[cur].test(w);
      if (counts) ++forced_used;
      push(w);
      bool found = dfs();
      pop();
      if (counts) --forced_used;
      if (found) return true;
    }
    return false;
  }

  std::optional<std::vector<int>> run(int min_len, int max_len) {
    const int first_required = required.next(0);
    const int min_required = first_required < 0 ? n : first_required;
    for (int len = min_len; len <= max_len; ++len) {
      exact_len = len;
      for (int r = allowed.next(0); r >= 0 && r <= min_required;
           r = allowed.next(r + 1)) {
        root = r;
        required_missing = required.count() - (required.test(r) ? 1 : 0);
        optional_unvisited = optional_old.count() - (optional_old.test(r) ? 1 : 0);
        forced_used = 0;
        nb_hits_on_path = 0;
        path.clear();
        on_path = BitRow(n);
        path.push_back(r);
        on_path.set(r);
        if (nb_hit.test(r)) nb_hits_on_path = 1;
        bool found = dfs();
        path.pop_back();  // leave clean
        on_path.reset(r);
        if (found) return solution;
      }
    }
    return std::nullopt;
  }
};

// Shared setup for extend/absorb: allowed vertices, edge set, and the frozen
// portion of the cycle outside the locality ball around `center`.
struct LocalProblem {
  BitRow ball;
  BitRow allowed;
  std::vector<std::pair<int, int>> forced;
};

LocalProblem local_problem(const Graph& g, const OrientedCycle& c, int center,
                           ConstrainedCycleSearch& search) {
  const int n = g.num_vertices();
  LocalProblem pb{BitRow(n), BitRow(n), {}};
  auto dist = distances_from(g, center);
  for (int v = 0; v < n; ++v)
    if (dist[v] >= 0 && dist[v] <= kLocalityRadius) pb.ball.set(v);

  BitRow on_cycle(n);
  for (int v : c.vertices()) on_cycle.set(v);
  pb.allowed = pb.ball;
  pb.allowed |= on_cycle;

  // Graph edges inside the ball are available for the new cycle...
  for (int v = pb.ball.next(0); v >= 0; v = pb.ball.next(v + 1)) {
    BitRow nb = g.neighbors(v);
    nb &= pb.ball;
    for (int w = nb.next(v + 1); w >= 0; w = nb.next(w + 1)) search.add_edge(v, w);
  }
  // ...cycle edges are available everywhere, and those leaving the ball are
  // frozen: edge changes must stay inside the ball.
  const auto& seq = c.vertices();
  for (size_t i = 0; i < seq.size(); ++i) {
    int a = seq[i], b = seq[(i + 1) % seq.size()];
    search.add_edge(a, b);
    if (!pb.ball.test(a) || !pb.ball.test(b)) pb.forced.push_back({a, b});
  }
  return pb;
}

void validate_cycle_in_graph(const Graph& g, const OrientedCycle& c) {
  const auto& seq = c.vertices();
  for (size_t i = 0; i < seq.size(); ++i) {
    check_vertex(g, seq[i], "cycle vertex");
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()]))
      throw ContractViolation("cycle does not lie in the graph");
  }
}

void validate_path_in_graph(const Graph& g, const OrientedPath& p) {
  const auto& seq = p.vertices();
  for (size_t i = 0; i < seq.size(); ++i) {
    check_vertex(g, seq[i], "path vertex");
    if (i + 1 < seq.size() && !g.adjacent(seq[i], seq[i + 1]))
      throw ContractViolation("path does not lie in the graph");
  }
}

}  // namespace

OrientedCycle::OrientedCycle(const Graph& g, std::vector<int> sequence)
    : seq_(std::move(sequence)), pos_(g.num_vertices(), -1) {
  if (seq_.size() < 3) throw ContractViolation("cycle needs at least 3 vertices");
  for (size_t i = 0; i < seq_.size(); ++i) {
    int v = seq_[i];
    check_vertex(g, v, "cycle vertex");
    if (pos_[v] != -1) throw ContractViolation("repeated cycle vertex");
    pos_[v] = int(i);
  }
  for (size_t i = 0; i < seq_.size(); ++i)
    if (!g.adjacent(seq_[i], seq_[(i + 1) % seq_.size()]))
      throw ContractViolation("cycle vertices must be consecutively adjacent");
}

bool OrientedCycle::contains(int v) const {
  return v >= 0 && v < int(pos_.size()) && pos_[v] >= 0;
}

int OrientedCycle::index_of(int v) const {
  if (!contains(v)) throw ContractViolation("vertex off the cycle");
  return pos_[v];
}

int OrientedCycle::successor(int v) const {
  return seq_[(index_of(v) + 1) % seq_.size()];
}

int OrientedCycle::predecessor(int v) const {
  return seq_[(index_of(v) + seq_.size() - 1) % seq_.size()];
}

std::vector<int> OrientedCycle::segment(int from, int to) const {
  int i = index_of(from);
  const int j = index_of(to);
  std::vector<int> out{seq_[i]};
  while (i != j) {
    i = (i + 1) % int(seq_.size());
    out.push_back(seq_[i]);
  }
  return out;
}

std::vector<int> successor_set(const OrientedCycle& c, const std::vector<int>& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(c.successor(v));
  return out;
}

OrientedPath::OrientedPath(const Graph& g, std::vector<int> sequence)
    : seq_(std::move(sequence)) {
  if (seq_.size() < 2) throw ContractViolation("path needs at least 2 vertices");
  std::vector<bool> seen(g.num_vertices(), false);
  for (int v : seq_) {
    check_vertex(g, v, "path vertex");
    if (seen[v]) throw ContractViolation("repeated path vertex");
    seen[v] = true;
  }
  for (size_t i = 0; i + 1 < seq_.size(); ++i)
    if (!g.adjacent(seq_[i], seq_[i + 1]))
      throw ContractViolation("path vertices must be consecutively adjacent");
}

bool is_maximal_path(const Graph& g, const OrientedPath& p) {
  validate_path_in_graph(g, p);
  BitRow on(g.num_vertices());
  for (int v : p.vertices()) on.set(v);
  for (int end : {p.vertices().front(), p.vertices().back()}) {
    BitRow nb = g.neighbors(end);
    nb.subtract(on);
    if (!nb.empty()) return false;
  }
  return true;
}

int f_statistic(const Graph& g, const OrientedPath& p) {
  validate_path_in_graph(g, p);
  const auto& seq = p.vertices();
  if (g.degree(seq.front()) < 2)
    throw ContractViolation("f-statistic needs a start vertex of degree >= 2");
  if (!is_maximal_path(g, p))
    throw ContractViolation("f-statistic is defined only for maximal paths");
  int f = -1;
  for (size_t i = 1; i < seq.size(); ++i)
    if (g.adjacent(seq.front(), seq[i])) f = int(i) + 1;
  return f;  // >= 2: the start has degree >= 2 and all neighbors lie on p
}

OrientedCycle extend_cycle_locally(const Graph& g, const OrientedCycle& c, int u) {
  validate_cycle_in_graph(g, c);
  check_vertex(g, u, "pivot vertex");
  if (c.contains(u)) throw ContractViolation("pivot vertex already on the cycle");
  BitRow nb = g.neighbors(u);
  BitRow on(g.num_vertices());
  for (int v : c.vertices()) on.set(v);
  BitRow nb_on = nb;
  nb_on &= on;
  if (nb_on.empty())
    throw ContractViolation("pivot vertex has no neighbor on the cycle");
  BitRow nb_off = nb;
  nb_off.subtract(on);
  if (nb_off.empty())
    throw ContractViolation("pivot vertex has all neighbors on the cycle");

  ConstrainedCycleSearch search(g);
  LocalProblem pb = local_problem(g, c, u, search);
  search.allowed = pb.allowed;
  search.required = on;
  search.required.subtract(pb.ball);
  search.optional_old = on;
  search.optional_old &= pb.ball;
  search.max_drop = 1;
  search.nb_hit = nb;
  search.nb_hit &= pb.allowed;
  search.set_forced(pb.forced);

  auto best = search.run(c.length() + 1, pb.allowed.count());
  if (!best) throw NoExtensionFound("no-extension-found");
  return OrientedCycle(g, *best);
}

OrientedCycle absorb_vertex(const Graph& g, const OrientedCycle& c, int v) {
  validate_cycle_in_graph(g, c);
  check_vertex(g, v, "absorbed vertex");
  if (c.contains(v)) throw ContractViolation("absorbed vertex already on the cycle");
  BitRow on(g.num_vertices());
  for (int x : c.vertices()) on.set(x);
  BitRow nb = g.neighbors(v);
  nb.subtract(on);
  if (!nb.empty())
    throw ContractViolation("absorbed vertex has a neighbor off the cycle");

  ConstrainedCycleSearch search(g);
  LocalProblem pb = local_problem(g, c, v, search);
  search.allowed = pb.allowed;
  search.required = on;
  search.required.set(v);
  search.set_forced(pb.forced);

  auto best = search.run(c.length() + 1, pb.allowed.count());
  if (!best) throw NoExtensionFound("no-extension-found");
  return OrientedCycle(g, *best);
}

OrientedPath mm_rotate(const Graph& g, const OrientedPath& p) {
  if (!bipartition(g)) throw ContractViolation("rotation needs a bipartite graph");
  const auto& seq = p.vertices();
  const int n = int(seq.size());
  const int f = f_statistic(g, p);  // validates maximality and d(v_1) >= 2
  const int target = 2 * (n / 2);
  if (f >= target)
    throw ContractViolation("f-statistic already maximal; nothing to rotate");

  // Neighbor indices of v_1 on the path (1-based): i_1 < ... < i_p = f.
  std::vector<int> idx;
  for (int i = 1; i < n; ++i)
    if (g.adjacent(seq[0], seq[i])) idx.push_back(i + 1);
  // f < 2*floor(n/2) and bipartite parity give i_p + 2 <= n.
  const int ip = idx.back();
  const int pivot = seq[ip + 1];  // v_{i_p + 2}
  int r_found = -1;
  for (size_t r = 1; r < idx.size(); ++r) {  // r = 2..p over 1-based indexing
    int candidate = seq[idx[r] - 2];         // v_{i_r - 1}
    if (g.adjacent(pivot, candidate)) {
      r_found = int(r);
      break;
    }
  }
  if (r_found < 0) throw RotationUnavailable("rotation-unavailable");
  const int ir = idx[r_found];

  // Q = v_{i_p+1} <-P v_{i_r},  v_1 ->P v_{i_r-1},  v_{i_p+2} ->P v_n.
  std::vector<int> q;
  for (int i = ip; i >= ir - 1; --i) q.push_back(seq[i]);  // v_{i_p+1} down to v_{i_r}
  for (int i = 0; i <= ir - 2; ++i) q.push_back(seq[i]);   // v_1 up to v_{i_r-1}
  for (int i = ip + 1; i < n; ++i) q.push_back(seq[i]);    // v_{i_p+2} up to v_n
  return OrientedPath(g, q);
}

OrientedCycle mm_close_to_cycle(const Graph& g, const OrientedPath& p) {
  OrientedPath cur = p;
  const int n = cur.length_vertices();
  const int target = 2 * (n / 2);
  int f = f_statistic(g, cur);
  int guard = 0;
  while (f < target) {
    OrientedPath next = mm_rotate(g, cur);
    int nf = f_statistic(g, next);
    if (nf <= f) throw NoExtensionFound("rotation failed to advance the f-statistic");
    cur = std::move(next);
    f = nf;
    if (++guard > n) throw NoExtensionFound("rotation did not converge");
  }
  std::vector<int> cyc(cur.vertices().begin(), cur.vertices().begin() + target);
  return OrientedCycle(g, cyc);
}

OrientedCycle grow_hamilton_cycle(const Graph& g, const OrientedCycle& start,
                                  std::vector<GrowthStep>* trace) {
  OrientedCycle c = start;
  const int n = g.num_vertices();
  while (c.length() < n) {
    int pick = -1;
    bool absorb = false;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (c.contains(v)) continue;
      bool any_on = false, any_off = false;
      BitRow nb = g.neighbors(v);
      for (int w = nb.next(0); w >= 0; w = nb.next(w + 1))
        (c.contains(w) ? any_on : any_off) = true;
      if (!any_on) continue;
      pick = v;
      absorb = !any_off;
    }
    if (pick < 0)
      throw NoExtensionFound("no off-cycle vertex touches the cycle");
    GrowthStep step;
    step.op = absorb ? "absorb" : "extend";
    step.pivot = pick;
    step.before = c.vertices();
    c = absorb ? absorb_vertex(g, c, pick) : extend_cycle_locally(g, c, pick);
    step.after = c.vertices();
    if (trace) trace->push_back(std::move(step));
  }
  return c;
}

}  // namespace hamlocal
