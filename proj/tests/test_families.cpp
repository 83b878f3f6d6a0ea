#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hamlocal/conditions.hpp"
#include "hamlocal/families.hpp"
#include "hamlocal/graph.hpp"
#include "hamlocal/metrics.hpp"
#include "hamlocal/oracles.hpp"

using namespace hamlocal;

namespace {

bool passes(const Graph& g, const std::string& id) {
  return check_condition(g, id).verdict == Verdict::Pass;
}

bool fails(const Graph& g, const std::string& id) {
  return check_condition(g, id).verdict == Verdict::Fail;
}

bool regular_of_degree(const Graph& g, int k) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

}  // namespace

TEST_CASE("families: layered construction basics") {
  CHECK(encode_graph6(layered_graph({{1, 1, 1}, true, false})) ==
        encode_graph6(complete_graph(3)));

  // Cross-only consecutive joins give complete bipartite between layers.
  Graph g = layered_graph({{2, 3}, false, true});
  CHECK(encode_graph6(g) == encode_graph6(complete_bipartite(2, 3)));

  // Clique-chain rule: one layer pair forms a clique on the union.
  CHECK(encode_graph6(layered_graph({{2, 3}, false, false})) ==
        encode_graph6(complete_graph(5)));

  auto layers = layer_assignment({{2, 3, 1}, false, false});
  CHECK(layers == std::vector<int>{0, 0, 1, 1, 1, 2});

  CHECK_THROWS_AS(layered_graph({{}, false, false}), std::invalid_argument);
  CHECK_THROWS_AS(layered_graph({{2, 0, 2}, false, false}), std::invalid_argument);
  CHECK_THROWS_AS(layered_graph({{2, 2}, true, false}), std::invalid_argument);
}

TEST_CASE("families: named instances and parameter validation") {
  CHECK(family_names() == std::vector<std::string>{"ce_tight_H", "g_pn", "gn_dirac",
                                                   "mm_diam6"});
  auto spec = named_family_spec("gn_dirac", {2});
  CHECK(spec.sizes == std::vector<int>{2, 6, 3, 3, 6, 2});
  CHECK(!spec.wrap);
  CHECK(!spec.cross_only);
  CHECK(named_family_spec("ce_tight_H", {3}).sizes ==
        std::vector<int>{3, 3, 3, 3, 3, 2});
  CHECK(named_family_spec("g_pn", {2, 4}).wrap);
  CHECK(named_family_spec("mm_diam6", {5}).cross_only);

  CHECK_THROWS_AS(named_family("no_such_family", {3}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("ce_tight_H", {2}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("ce_tight_H", {}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("g_pn", {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("g_pn", {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("g_pn", {2}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("gn_dirac", {1}), std::invalid_argument);
  CHECK_THROWS_AS(named_family("mm_diam6", {4}), std::invalid_argument);
}

TEST_CASE("families: golden encodings") {
  CHECK(encode_graph6(named_family("ce_tight_H", {3})) == "P~~ww{^?wF_^?F?F_Bw?F??{");
  CHECK(encode_graph6(named_family("g_pn", {2, 3})) == "K~KwW[B?}@wF");
  CHECK(encode_graph6(named_family("g_pn", {2, 4})) == "O~KwW[B?w@_F?B?Bw?]?F");
  CHECK(encode_graph6(named_family("g_pn", {3, 3})) == "Q~~ww{^?wF_^?F?F_B~?Fw?~_Bw");
  CHECK(encode_graph6(named_family("g_pn", {3, 4})) ==
        "W~~ww{^?wF_^?F?F_Bw?F??{?Bw??w??{??^w??~??F{??^");
  CHECK(encode_graph6(named_family("gn_dirac", {2})) ==
        "U~~~~{~Nx~_F?N?N_?w?N?@{?Fw?Nw?N{??~??Nw");
  CHECK(encode_graph6(named_family("mm_diam6", {5})) ==
        "Xs`zrpw]?N_}@{@{?}??^?Bw?N_?^??^???^??Fo??}??Bw???N");
}

TEST_CASE("families: connectivity-tight chain statistics") {
  Graph h3 = named_family("ce_tight_H", {3});
  CHECK(h3.num_vertices() == 17);
  CHECK(h3.edge_list().size() == 58);
  CHECK(vertex_connectivity(h3) == 3);
  CHECK(independence_number(h3) == 3);
  CHECK(diameter(h3) == 5);
  CHECK(passes(h3, "chvatal_erdos"));
  CHECK(passes(h3, "ce_ball_sqrt"));
  CHECK(is_hamiltonian(h3).answer == Answer::Yes);

  Graph h4 = named_family("ce_tight_H", {4});
  CHECK(h4.num_vertices() == 31);
  CHECK(vertex_connectivity(h4) == 4);
  CHECK(independence_number(h4) == 4);
  CHECK(diameter(h4) == 7);
}

TEST_CASE("families: ring-of-layers instances") {
  for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 3}, {3, 4}}) {
    CAPTURE(p);
    CAPTURE(n);
    Graph g = named_family("g_pn", {p, n});
    CHECK(g.num_vertices() == 2 * n * p);
    CHECK(regular_of_degree(g, 3 * p - 1));
    CHECK(diameter(g) == n);
    CHECK(fails(g, "ore"));
    CHECK(fails(g, "local_dirac_M3"));
    CHECK(passes(g, "ore_ball1_lifted"));
    CHECK(passes(g, "local_ore_M2"));
    CHECK(passes(g, "local_ore_L0"));
    CHECK(passes(g, "local_ore_regular"));
    CHECK(passes(g, "sphere2_below_degree"));
    CHECK(is_hamiltonian(g).answer == Answer::Yes);
  }

  // |M_2(v)| = 1 + (3p-1) + 2p = 10 for p = 2 at every vertex.
  Graph g24 = named_family("g_pn", {2, 4});
  auto apd = all_pairs_distances(g24);
  for (int v = 0; v < g24.num_vertices(); ++v) {
    int m2 = 0;
    for (int d : apd[v])
      if (d >= 0 && d <= 2) ++m2;
    CHECK(m2 == 10);
  }
}

TEST_CASE("families: degree-equals-half-ball chain") {
  Graph g = named_family("gn_dirac", {2});
  CHECK(g.num_vertices() == 22);
  CHECK(g.edge_list().size() == 107);
  int mindeg = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) mindeg = std::min(mindeg, g.degree(v));
  CHECK(mindeg == 7);
  CHECK(diameter(g) == 5);

  // 2 d(u) = |M_3(u)| holds with equality at every vertex.
  auto apd = all_pairs_distances(g);
  for (int u = 0; u < g.num_vertices(); ++u) {
    int m3 = 0;
    for (int d : apd[u])
      if (d >= 0 && d <= 3) ++m3;
    CHECK(2 * g.degree(u) == m3);
  }
  CHECK(passes(g, "local_dirac_M3"));
  CHECK(fails(g, "dirac"));
  auto ham = is_hamiltonian(g);
  CHECK(ham.answer == Answer::Yes);
  CHECK(ham.stats.engine == "backtracking");
}

TEST_CASE("families: bipartite diameter-6 instance") {
  Graph g = named_family("mm_diam6", {5});
  CHECK(g.num_vertices() == 25);
  CHECK(g.edge_list().size() == 98);
  CHECK(diameter(g) == 6);
  auto bp = bipartition(g);
  REQUIRE(bp.has_value());
  int s0 = int(bp->side[0].size()), s1 = int(bp->side[1].size());
  CHECK(std::min(s0, s1) == 12);
  CHECK(std::max(s0, s1) == 13);
  CHECK(!bp->balanced);
  CHECK(passes(g, "local_mm_degree"));
  CHECK(check_condition(g, "moon_moser").verdict == Verdict::NotApplicable);
  CHECK(check_condition(g, "local_mm").verdict == Verdict::NotApplicable);
}
