#include "corpus.hpp"

using namespace chaintutte;

namespace testing {

Matroid complete_graph(int v) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j) edges.emplace_back(i, j);
  return make_graphic(v, edges);
}

Matroid cycle_graph(int v) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < v; ++i) edges.emplace_back(i, (i + 1) % v);
  return make_graphic(v, edges);
}

Matroid k4_minus_edge() { return make_graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

const std::vector<NamedMatroid>& corpus() {
  static const std::vector<NamedMatroid> all = [] {
    std::vector<NamedMatroid> out;
    for (int n = 0; n <= 6; ++n)
      for (int r = 0; r <= n; ++r)
        out.push_back({"U" + std::to_string(r) + "," + std::to_string(n), make_uniform(r, n)});
    for (int n = 0; n <= 5; ++n) out.push_back({"B" + std::to_string(n), make_boolean(n)});
    for (int v = 1; v <= 5; ++v) out.push_back({"K" + std::to_string(v), complete_graph(v)});
    for (int v = 3; v <= 7; ++v) out.push_back({"C" + std::to_string(v), cycle_graph(v)});
    out.push_back({"K4-e", k4_minus_edge()});
    out.push_back({"U0,1+U1,1", direct_sum(make_uniform(0, 1), make_uniform(1, 1))});
    out.push_back({"U1,2+U2,3", direct_sum(make_uniform(1, 2), make_uniform(2, 3))});
    out.push_back({"C3+U0,1", direct_sum(cycle_graph(3), make_uniform(0, 1))});
    out.push_back({"K4-e+U1,1", direct_sum(k4_minus_edge(), make_uniform(1, 1))});
    return out;
  }();
  return all;
}

std::vector<NamedMatroid> corpus_up_to(int max_n) {
  std::vector<NamedMatroid> out;
  for (const auto& nm : corpus())
    if (nm.m.size() <= max_n) out.push_back(nm);
  return out;
}

}  // namespace testing
