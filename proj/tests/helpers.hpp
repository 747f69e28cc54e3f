// Small graph builders shared by the unit tests.
#pragma once

#include <string>
#include <vector>

#include "matchings/graph.hpp"

namespace test_helpers {

// Cycle v0..v{n-1} with edge i joining v_i and v_{i+1 mod n} at the given
// weight; includes the obvious rotation system.
inline matchings::WeightedPlanarGraph cycle_graph(const std::vector<long>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::string> ids;
  std::vector<matchings::EdgeSpec> edges;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    edges.push_back({ids[i], ids[(i + 1) % n], matchings::ExactScalar(weights[i])});
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, i};
  return matchings::build_graph(ids, edges, rot);
}

// Path v0-...-v{n-1} with unit weights and rotation.
inline matchings::WeightedPlanarGraph path_graph(int n) {
  std::vector<std::string> ids;
  std::vector<matchings::EdgeSpec> edges;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i)
    edges.push_back({ids[i], ids[i + 1], matchings::ExactScalar(1)});
  std::vector<std::vector<int>> rot(n);
  for (int i = 0; i < n; ++i) {
    if (i > 0) rot[i].push_back(i - 1);
    if (i + 1 < n) rot[i].push_back(i);
  }
  return matchings::build_graph(ids, edges, rot);
}

}  // namespace test_helpers
