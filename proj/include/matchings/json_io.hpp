// JSON interchange for graphs and region specifications.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchings/graph.hpp"
#include "matchings/lattice.hpp"

namespace matchings {

// Parses {"vertices":[id...], "edges":[{"u":id,"v":id,"w":"decimal"}...],
// "rotation":{id:[edge-index...]}}.  Weights are decimal strings (or JSON
// integers); rotation is optional.  Throws std::invalid_argument on malformed
// input.
WeightedPlanarGraph graph_from_json(const std::string& text);

// Inverse of graph_from_json; weights serialized as decimal strings.
std::string graph_to_json(const WeightedPlanarGraph& g);

// A constructed region plus any distinguished cells its family defines
// (pendants, marked boundary cells, the four recurrence cells).
struct RegionSpec {
  std::string family;
  Region region;
  std::vector<TriCell> marked;
};

// Parses {"family":"hexagon|eisenkolbl|hstar|t|hk|hstar_strings|hkl|
// hkl_prime|f|augmented", "params":{...}} and builds the region.  Dent lists
// are [{"side":"s|ne|nw","pos":n}...]; t-region removals are "xs":[...].
RegionSpec region_spec_from_json(const std::string& text);

// Either a graph or a region, depending on which schema the input matches.
struct CountInput {
  std::optional<WeightedPlanarGraph> graph;
  std::optional<RegionSpec> region;
};

// Dispatches on the top-level keys: "vertices" selects the graph schema,
// "family" the region schema.
CountInput count_input_from_json(const std::string& text);

}  // namespace matchings
