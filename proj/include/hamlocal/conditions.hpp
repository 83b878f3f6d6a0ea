#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlocal/graph.hpp"
#include "hamlocal/metrics.hpp"

namespace hamlocal {

// Verdict of a sufficient-condition check:
//  - Pass: the condition's premises hold; its conclusion is guaranteed.
//  - Fail: some premise inequality or structural clause is violated; a
//    witness pinpoints the first violation found (deterministic order).
//  - NotApplicable: the graph is outside the condition's scope (size,
//    connectivity, regularity, bipartiteness), or the condition is only
//    defined for infinite graphs.
enum class Verdict { Pass, Fail, NotApplicable };

enum class Conclusion { Hamiltonian, DominatingLongestCycles, HamiltonianCurveCriterion };

// Violation record. Interpretation depends on the condition:
//  - vertices: the offending vertex/pair/triple/set (parent-graph ids),
//  - center:   ball or path center when the condition is localized (-1 else),
//  - lhs/rhs:  the two sides of the violated comparison,
//  - detail:   which clause failed, as a short slug.
struct Witness {
  std::vector<int> vertices;
  int center = -1;
  long long lhs = 0;
  long long rhs = 0;
  std::string detail;
};

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::NotApplicable;
  std::optional<Witness> witness;  // present iff verdict == Fail
  std::string reason;              // present iff verdict == NotApplicable
};

// Evaluates conditions on one graph, caching distances, balls, and ball
// connectivity numbers across checks.
class ConditionEngine {
 public:
  explicit ConditionEngine(const Graph& g);

  // Throws std::invalid_argument for unknown condition ids.
  ConditionReport check(const std::string& condition_id);

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::optional<std::vector<std::vector<int>>> apd_;
  std::map<std::pair<int, int>, BallView> balls_;
  std::map<std::pair<int, int>, int> ball_kappa_;
  std::optional<bool> connected_;
  std::optional<int> kappa_;
  std::optional<int> alpha_;
  std::optional<std::optional<Bipartition>> bip_;

  const std::vector<std::vector<int>>& apd();
  const BallView& get_ball(int v, int r);
  int ball_kappa(int v, int r);
  bool connected();
  int kappa();
  int alpha();
  const std::optional<Bipartition>& bip();
  int msize(int v, int r);                // |M_r(v)|
  int ssize(int v, int r);                // |N_r(v)| (exact distance r)
  std::optional<int> regular_degree();    // k if k-regular

  ConditionReport pass(const std::string& id);
  ConditionReport fail(const std::string& id, Witness w);
  ConditionReport na(const std::string& id, const std::string& reason);

  // One method per condition family.
  ConditionReport dirac(const std::string& id);
  ConditionReport ore(const std::string& id);
  ConditionReport chvatal_erdos(const std::string& id);
  ConditionReport oberly_sumner(const std::string& id);
  ConditionReport local_ore_L0(const std::string& id);
  ConditionReport lifted_ball(const std::string& id, int radius, bool ore_form);
  ConditionReport ce_ball_sqrt(const std::string& id);
  ConditionReport local_dirac(const std::string& id, int radius);
  ConditionReport local_ore_M3_interior(const std::string& id);
  ConditionReport local_ore_M2(const std::string& id);
  ConditionReport local_ore_regular(const std::string& id);
  ConditionReport sphere2_below_degree(const std::string& id);
  ConditionReport bondy_global(const std::string& id);
  ConditionReport bondy_ball4(const std::string& id);
  ConditionReport local_bondy(const std::string& id, bool general);
  ConditionReport haggkvist_nicoghossian(const std::string& id);
  ConditionReport bauer(const std::string& id);
  ConditionReport local_kappa(const std::string& id, bool single);
  ConditionReport moon_moser(const std::string& id);
  ConditionReport moon_moser_ball6(const std::string& id);
  ConditionReport local_mm(const std::string& id, bool require_balanced);
  ConditionReport weak_local_dirac_M2(const std::string& id);
  ConditionReport two_connected_pred(const std::string& id);
  ConditionReport balls3_two_connected(const std::string& id);
};

// Convenience one-shot check.
ConditionReport check_condition(const Graph& g, const std::string& condition_id);

// The named sufficient conditions, in catalog order (finite ones first, then
// the window-evaluated ones for infinite graphs).
const std::vector<std::string>& catalog_ids();

// Additional bare predicates usable by the harness (no guaranteed
// conclusion): local_mm_degree, weak_local_dirac_M2, two_connected,
// balls3_two_connected.
const std::vector<std::string>& extra_predicate_ids();

// What a Pass guarantees; nullopt for bare predicates.
std::optional<Conclusion> guaranteed_conclusion(const std::string& condition_id);

// True iff the report's witness indeed violates the condition on g.
// Pass/NotApplicable reports revalidate trivially to true.
bool revalidate_witness(const Graph& g, const ConditionReport& report);

}  // namespace hamlocal
