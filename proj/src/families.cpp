#include "hamlocal/families.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace hamlocal {

namespace {

void validate(const LayeredSpec& spec) {
  if (spec.sizes.empty()) throw std::invalid_argument("layered spec needs layers");
  for (int s : spec.sizes)
    if (s <= 0) throw std::invalid_argument("layer sizes must be positive");
  if (spec.wrap && spec.sizes.size() < 3)
    throw std::invalid_argument("wrapping needs at least 3 layers");
}

long long want_params(const std::string& name, const std::vector<long long>& params,
                      size_t count, size_t index, long long minimum) {
  if (params.size() != count)
    throw std::invalid_argument(name + " takes " + std::to_string(count) +
                                " parameter(s)");
  if (params[index] < minimum)
    throw std::invalid_argument(name + " parameter " + std::to_string(index + 1) +
                                " must be at least " + std::to_string(minimum));
  return params[index];
}

}  // namespace

std::vector<int> layer_assignment(const LayeredSpec& spec) {
  validate(spec);
  std::vector<int> layer;
  for (size_t i = 0; i < spec.sizes.size(); ++i)
    layer.insert(layer.end(), spec.sizes[i], int(i));
  return layer;
}

Graph layered_graph(const LayeredSpec& spec) {
  validate(spec);
  const int k = int(spec.sizes.size());
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + spec.sizes[i];
  const int n = offset[k];

  std::vector<std::pair<int, int>> edges;
  const int pairs = spec.wrap ? k : k - 1;
  for (int i = 0; i < pairs; ++i) {
    const int j = (i + 1) % k;
    if (spec.cross_only) {
      for (int u = offset[i]; u < offset[i + 1]; ++u)
        for (int v = offset[j]; v < offset[j] + spec.sizes[j]; ++v)
          edges.push_back({u, v});
    } else {
      // V_i u V_{i+1} spans a clique; duplicated intra-layer pairs collapse
      // in from_edge_list.
      std::vector<int> members;
      for (int u = offset[i]; u < offset[i + 1]; ++u) members.push_back(u);
      for (int v = offset[j]; v < offset[j] + spec.sizes[j]; ++v) members.push_back(v);
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b)
          edges.push_back({members[a], members[b]});
    }
  }
  return Graph::from_edge_list(n, edges);
}

LayeredSpec named_family_spec(const std::string& name,
                              const std::vector<long long>& params) {
  LayeredSpec spec;
  if (name == "ce_tight_H") {
    int n = int(want_params(name, params, 1, 0, 3));
    spec.sizes.assign(2 * n - 1, n);
    spec.sizes.push_back(n - 1);
    return spec;
  }
  if (name == "g_pn") {
    if (params.size() != 2) throw std::invalid_argument("g_pn takes 2 parameters");
    int p = int(want_params(name, params, 2, 0, 2));
    int n = int(want_params(name, params, 2, 1, 3));
    spec.sizes.assign(2 * n, p);
    spec.wrap = true;
    return spec;
  }
  if (name == "gn_dirac") {
    int n = int(want_params(name, params, 1, 0, 2));
    spec.sizes = {n, 3 * n, n + 1, n + 1, 3 * n, n};
    return spec;
  }
  if (name == "mm_diam6") {
    int n = int(want_params(name, params, 1, 0, 5));
    spec.sizes = {1, n - 1, n, n, n, n - 1, 1};
    spec.cross_only = true;
    return spec;
  }
  throw std::invalid_argument("unknown family: " + name);
}

Graph named_family(const std::string& name, const std::vector<long long>& params) {
  return layered_graph(named_family_spec(name, params));
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"ce_tight_H", "g_pn", "gn_dirac",
                                                 "mm_diam6"};
  return names;
}

}  // namespace hamlocal
