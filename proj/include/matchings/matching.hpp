// Exact weighted perfect-matching counting: reference oracle and frontier DP.
#pragma once

#include <cstddef>
#include <stdexcept>

#include "matchings/graph.hpp"

namespace matchings {

// Raised when a configurable resource cap is exceeded (exit code 3 in the CLI).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatchingOptions {
  std::size_t max_states = 2'000'000;  // live frontier-state cap for the DP
  // Default options, honoring the MATCHINGS_MAX_STATES environment variable.
  static MatchingOptions from_env();
};

// Sum over all perfect matchings of the product of edge weights, by plain
// recursion on the lowest-indexed uncovered vertex.  1 for the empty graph,
// 0 when no perfect matching exists (e.g. odd vertex count).
ExactScalar count_matchings_oracle(const WeightedPlanarGraph& g);

// Same value, computed by frontier dynamic programming over the vertex order.
// Agrees with the oracle on every input; throws ResourceLimitError when the
// number of live states exceeds opt.max_states.
ExactScalar count_matchings_fast(const WeightedPlanarGraph& g,
                                 const MatchingOptions& opt = MatchingOptions::from_env());

}  // namespace matchings
