// Deterministic random test graphs: embedded grid subgraphs and lattice duals.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "matchings/graph.hpp"

namespace matchings {

// A corpus instance: bipartite embedded graph with its outer boundary cycle
// (collapsed to first visits, so the entries are distinct vertices in cyclic
// order) and, optionally, one degree-1 vertex hanging off that boundary.
struct CorpusGraph {
  WeightedPlanarGraph graph;
  std::vector<int> outer;
  std::vector<int> color;   // bipartition classes
  int pendant = -1;         // degree-1 vertex index, or -1
  int attachment = -1;      // its unique neighbor, or -1
};

// Reproducible stream of corpus graphs; all randomness flows from the seed.
class CorpusGenerator {
 public:
  explicit CorpusGenerator(std::uint64_t seed) : rng_(seed) {}

  // Staircase-shaped grid subgraph (nonincreasing column heights) with random
  // nonzero integer weights in [-9,9]; at most 24 vertices.  with_pendant adds
  // one extra vertex attached east of the top of the last column.
  CorpusGraph grid(bool with_pendant = false);

  // Dual of a small lattice region (hexagon, three-dent hexagon, or dented
  // trapezoid) with edge weights rerandomized; at most 24 vertices.
  CorpusGraph hex_dual();

  // Alternates between the two families.
  CorpusGraph next(bool with_pendant = false);

  // m distinct ascending positions into g.outer, returned as vertex indices
  // (so the vertices are in cyclic boundary order).
  std::vector<int> marked_on_boundary(const CorpusGraph& g, int m);

  std::mt19937_64& rng() { return rng_; }

 private:
  ExactScalar random_weight();
  int uniform_int(int lo, int hi);

  std::mt19937_64 rng_;
  int tick_ = 0;
};

// First-visit collapse of a face walk (helper shared with the test drivers).
std::vector<int> collapse_walk(const std::vector<int>& walk);

// The longest face of g, collapsed to distinct vertices in cyclic order.
std::vector<int> outer_cycle(const WeightedPlanarGraph& g);

}  // namespace matchings
