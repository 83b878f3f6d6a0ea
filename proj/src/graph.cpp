#include "hamlocal/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace hamlocal {

int BitRow::count() const {
  int c = 0;
  for (uint64_t x : w_) c += std::popcount(x);
  return c;
}

bool BitRow::empty() const {
  for (uint64_t x : w_)
    if (x) return false;
  return true;
}

bool BitRow::subset_of(const BitRow& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

bool BitRow::intersects(const BitRow& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

BitRow& BitRow::operator|=(const BitRow& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

BitRow& BitRow::operator&=(const BitRow& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

BitRow& BitRow::subtract(const BitRow& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

int BitRow::next(int from) const {
  if (from >= n_) return -1;
  size_t k = from >> 6;
  uint64_t cur = w_[k] & (~uint64_t(0) << (from & 63));
  while (true) {
    if (cur) {
      int v = int(k * 64 + std::countr_zero(cur));
      return v < n_ ? v : -1;
    }
    if (++k >= w_.size()) return -1;
    cur = w_[k];
  }
}

std::vector<int> BitRow::to_vector() const {
  std::vector<int> out;
  for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
  return out;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("graph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("graph: self-loop rejected");
  rows_[u].set(v);
  rows_[v].set(u);
}

int Graph::num_edges() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += degree(v);
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = rows_[u].next(u + 1); v >= 0; v = rows_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  const int k = int(vertices.size());
  std::vector<int> where(g.num_vertices(), -1);
  for (int i = 0; i < k; ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (where[v] != -1) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    where[v] = i;
  }
  Graph sub(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(vertices[i], vertices[j])) sub.add_edge(i, j);
  return {std::move(sub), vertices};
}

bool is_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return true;
  BitRow seen(n);
  seen.set(0);
  std::vector<int> stack{0};
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbors(v).for_each([&](int w) {
      if (!seen.test(w)) {
        seen.set(w);
        ++cnt;
        stack.push_back(w);
      }
    });
  }
  return cnt == n;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      bool odd = false;
      g.neighbors(v).for_each([&](int w) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          q.push(w);
        } else if (color[w] == color[v]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) b.side[color[v]].push_back(v);
  b.balanced = b.side[0].size() == b.side[1].size();
  return b;
}

namespace {

constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;

void append_bits(std::string& out, uint64_t value, int bits) {
  // Most-significant bit first, packed into 6-bit printable chunks by caller.
  for (int i = bits - 1; i >= 0; --i) out.push_back(char('0' + ((value >> i) & 1)));
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  constexpr std::string_view header = ">>graph6<<";
  if (record.substr(0, header.size()) == header) record.remove_prefix(header.size());
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r'))
    record.remove_suffix(1);
  if (record.empty()) throw std::invalid_argument("graph6: empty record");
  for (char c : record)
    if (c < kG6Lo || c > kG6Hi)
      throw std::invalid_argument("graph6: character outside printable range [63,126]");

  size_t pos = 0;
  long long n;
  if (record[0] != '~') {
    n = record[0] - kG6Lo;
    pos = 1;
  } else if (record.size() >= 2 && record[1] != '~') {
    if (record.size() < 4) throw std::invalid_argument("graph6: truncated size field");
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (record[i] - kG6Lo);
    pos = 4;
  } else {
    if (record.size() < 8) throw std::invalid_argument("graph6: truncated size field");
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (record[i] - kG6Lo);
    pos = 8;
  }
  if (n < 0 || n > 1'000'000) throw std::invalid_argument("graph6: vertex count out of range");

  const long long nbits = n * (n - 1) / 2;
  const size_t want = size_t((nbits + 5) / 6);
  if (record.size() - pos != want)
    throw std::invalid_argument("graph6: record length does not match vertex count");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (size_t i = pos; i < record.size(); ++i) {
    int chunk = record[i] - kG6Lo;
    for (int b = 5; b >= 0; --b, ++bit) {
      int on = (chunk >> b) & 1;
      if (bit >= nbits) {
        if (on) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (on) {
        // Bit order: column-wise upper triangle, (0,1),(0,2),(1,2),(0,3),...
        long long idx = bit;
        int col = 1;
        while (idx >= col) idx -= col, ++col;
        g.add_edge(int(idx), col);
      }
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(char(kG6Lo + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int i = 2; i >= 0; --i) out.push_back(char(kG6Lo + ((n >> (6 * i)) & 63)));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int i = 5; i >= 0; --i) out.push_back(char(kG6Lo + ((n >> (6 * i)) & 63)));
  }
  std::string bits;
  bits.reserve(size_t(n * (n - 1) / 2));
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row) append_bits(bits, g.adjacent(row, col) ? 1 : 0, 1);
  while (bits.size() % 6) bits.push_back('0');
  for (size_t i = 0; i < bits.size(); i += 6) {
    int chunk = 0;
    for (int b = 0; b < 6; ++b) chunk = (chunk << 1) | (bits[i + b] - '0');
    out.push_back(char(kG6Lo + chunk));
  }
  return out;
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative counts");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
    g.add_edge(int(u), int(v));
  }
  return g;
}

std::string encode_edge_list_text(const Graph& g) {
  std::ostringstream out;
  auto edges = g.edge_list();
  out << g.num_vertices() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

}  // namespace hamlocal
