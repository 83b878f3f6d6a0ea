#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hamlocal/graph.hpp"
#include "hamlocal/oracles.hpp"

using namespace hamlocal;

namespace {

Graph random_graph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("cycle and path validation") {
  Graph c5 = cycle_graph(5);
  CHECK(validate_cycle(c5, {0, 1, 2, 3, 4}));
  CHECK(validate_cycle(c5, {2, 3, 4, 0, 1}));
  CHECK(!validate_cycle(c5, {0, 1, 2}));        // chord 2-0 missing
  CHECK(!validate_cycle(c5, {0, 1}));           // too short
  CHECK(!validate_cycle(c5, {0, 1, 2, 3, 3}));  // repeat
  CHECK(!validate_cycle(c5, {0, 1, 2, 3, 5}));  // out of range

  CHECK(validate_path(c5, {3, 4, 0, 1}));
  CHECK(validate_path(c5, {2}));
  CHECK(!validate_path(c5, {}));
  CHECK(!validate_path(c5, {0, 2}));
}

TEST_CASE("canonical cycle form") {
  CHECK(canonical_cycle({2, 0, 1}) == std::vector<int>{0, 1, 2});
  CHECK(canonical_cycle({0, 2, 1}) == std::vector<int>{0, 1, 2});
  CHECK(canonical_cycle({4, 3, 2, 1, 0}) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(canonical_cycle({1, 3, 0, 2}) == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("hamiltonicity: frozen verdicts") {
  auto yes = [](const Graph& g) {
    auto r = is_hamiltonian(g);
    REQUIRE(r.answer == Answer::Yes);
    CHECK(validate_cycle(g, r.certificate));
    CHECK(int(r.certificate.size()) == g.num_vertices());
  };
  yes(complete_graph(3));
  yes(complete_graph(5));
  yes(cycle_graph(7));
  yes(complete_bipartite(4, 4));

  CHECK(is_hamiltonian(petersen_graph()).answer == Answer::No);
  CHECK(is_hamiltonian(path_graph(5)).answer == Answer::No);
  CHECK(is_hamiltonian(complete_graph(2)).answer == Answer::No);
  CHECK(is_hamiltonian(complete_graph(1)).answer == Answer::No);
  CHECK(is_hamiltonian(complete_bipartite(3, 4)).answer == Answer::No);
  CHECK(is_hamiltonian(Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5},
                                                 {5, 3}}))
            .answer == Answer::No);
}

TEST_CASE("hamiltonicity: both engines agree") {
  std::vector<Graph> graphs = {petersen_graph(), cycle_graph(9), complete_bipartite(4, 5),
                               path_graph(8)};
  for (int n = 8; n <= 13; ++n)
    for (double p : {0.25, 0.4, 0.6})
      graphs.push_back(random_graph(n, p, uint64_t(n * 100) + uint64_t(p * 10)));
  for (const Graph& g : graphs) {
    auto a = is_hamiltonian_dp(g);
    auto b = is_hamiltonian_backtracking(g);
    REQUIRE(a.answer == b.answer);
    if (a.answer == Answer::Yes) {
      CHECK(validate_cycle(g, a.certificate));
      CHECK(validate_cycle(g, b.certificate));
    }
  }
}

TEST_CASE("hamiltonicity: dispatcher uses backtracking above the DP range") {
  Graph c25 = cycle_graph(25);
  auto r = is_hamiltonian(c25);
  CHECK(r.answer == Answer::Yes);
  CHECK(r.stats.engine == "backtracking");
  CHECK(validate_cycle(c25, r.certificate));

  auto r2 = is_hamiltonian(cycle_graph(12));
  CHECK(r2.stats.engine == "subset_dp");
}

TEST_CASE("resource limit verdict") {
  SearchLimits tiny;
  tiny.node_budget = 1;
  Graph g = random_graph(14, 0.5, 99);
  CHECK(is_hamiltonian_dp(g, tiny).answer == Answer::ResourceLimit);
  CHECK(is_hamiltonian_backtracking(g, tiny).answer == Answer::ResourceLimit);
  CHECK(longest_cycle(g, tiny).answer == Answer::ResourceLimit);
  CHECK(longest_path(g, tiny).answer == Answer::ResourceLimit);
  CHECK(all_longest_cycles_dominating(g, tiny).answer == Answer::ResourceLimit);
  CHECK(cycle_through(g, {0, 1}, tiny).answer == Answer::ResourceLimit);
}

TEST_CASE("longest cycle: frozen values") {
  auto pet = longest_cycle(petersen_graph());
  CHECK(pet.answer == Answer::Yes);
  CHECK(pet.length == 9);
  CHECK(validate_cycle(petersen_graph(), pet.cycle));
  CHECK(int(pet.cycle.size()) == 9);

  CHECK(longest_cycle(path_graph(6)).length == 0);
  CHECK(longest_cycle(cycle_graph(6)).length == 6);
  CHECK(longest_cycle(complete_graph(2)).length == 0);
  Graph two_tri = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(longest_cycle(two_tri).length == 3);

  // Triangle with a pendant path.
  Graph g = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
  auto r = longest_cycle(g);
  CHECK(r.length == 3);
  CHECK(r.cycle == std::vector<int>{0, 1, 2});
}

TEST_CASE("longest path: frozen values") {
  auto pet = longest_path(petersen_graph());
  CHECK(pet.answer == Answer::Yes);
  CHECK(pet.length_vertices == 10);
  CHECK(validate_path(petersen_graph(), pet.path));

  CHECK(longest_path(path_graph(6)).length_vertices == 6);
  CHECK(longest_path(complete_graph(1)).length_vertices == 1);
  auto lp = longest_path(cycle_graph(5));
  CHECK(lp.length_vertices == 5);
  CHECK(validate_path(cycle_graph(5), lp.path));
  CHECK(lp.path.front() <= lp.path.back());

  Graph star = complete_bipartite(1, 4);
  CHECK(longest_path(star).length_vertices == 3);
}

TEST_CASE("longest cycle/path engines agree on random graphs") {
  for (int n : {8, 10, 12}) {
    for (double p : {0.2, 0.35, 0.5}) {
      Graph g = random_graph(n, p, uint64_t(n) * 17 + uint64_t(p * 100));
      auto dp_c = longest_cycle(g);
      auto r = is_hamiltonian_backtracking(g);
      if (dp_c.length == n)
        CHECK(r.answer == Answer::Yes);
      else
        CHECK(r.answer == Answer::No);
    }
  }
}

TEST_CASE("dominating longest cycles") {
  // Hamiltonian graph: trivially dominating.
  CHECK(all_longest_cycles_dominating(cycle_graph(6)).answer == Answer::Yes);
  // Acyclic graph: vacuously dominating.
  CHECK(all_longest_cycles_dominating(path_graph(5)).answer == Answer::Yes);
  // Petersen: longest cycles have 9 of 10 vertices; the leftover vertex is
  // always dominated.
  auto pet = all_longest_cycles_dominating(petersen_graph());
  CHECK(pet.answer == Answer::Yes);
  CHECK(pet.longest_length == 9);

  // Two triangles joined by a long path: a triangle is a longest cycle but the
  // far triangle's edge is untouched.
  Graph g = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 5}});
  auto r = all_longest_cycles_dominating(g);
  CHECK(r.answer == Answer::No);
  CHECK(r.longest_length == 3);
  REQUIRE(r.counterexample.has_value());
  CHECK(validate_cycle(g, *r.counterexample));
  CHECK(int(r.counterexample->size()) == 3);

  // C6 plus one chord and a pendant vertex on the far side: longest cycle
  // leaves a vertex with a neighbor off the cycle only if such a cycle exists.
  Graph tadpole = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
  auto rt = all_longest_cycles_dominating(tadpole);
  CHECK(rt.answer == Answer::No);  // vertex 3 is on no longest cycle; edge 3-4 loose
}

TEST_CASE("cycle through prescribed vertices") {
  Graph c5 = cycle_graph(5);
  auto all = cycle_through(c5, {0, 1, 2, 3, 4});
  CHECK(all.answer == Answer::Yes);
  CHECK(all.certificate == std::vector<int>{0, 1, 2, 3, 4});

  auto single = cycle_through(c5, {3});
  CHECK(single.answer == Answer::Yes);
  CHECK(validate_cycle(c5, single.certificate));

  // Petersen has no Hamilton cycle: prescribing all vertices must fail.
  std::vector<int> all10(10);
  for (int i = 0; i < 10; ++i) all10[i] = i;
  CHECK(cycle_through(petersen_graph(), all10).answer == Answer::No);
  // Any 9 vertices lie on a common cycle.
  std::vector<int> nine(all10.begin(), all10.end() - 1);
  auto r9 = cycle_through(petersen_graph(), nine);
  CHECK(r9.answer == Answer::Yes);
  CHECK(validate_cycle(petersen_graph(), r9.certificate));
  CHECK(r9.certificate.size() >= 9);

  // No cycle at all.
  CHECK(cycle_through(path_graph(4), {1}).answer == Answer::No);
  CHECK_THROWS_AS(cycle_through(c5, {}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_through(c5, {9}), std::invalid_argument);

  Graph barbell = Graph::from_edge_list(
      7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
  CHECK(cycle_through(barbell, {0, 5}).answer == Answer::No);
  CHECK(cycle_through(barbell, {0, 1, 2}).answer == Answer::Yes);
}

TEST_CASE("node accounting is reported") {
  auto r = is_hamiltonian(cycle_graph(10));
  CHECK(r.stats.nodes > 0);
  CHECK(!r.stats.engine.empty());
}
