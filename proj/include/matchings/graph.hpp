// Weighted graphs with an optional rotation system (combinatorial embedding).
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "matchings/scalar.hpp"

namespace matchings {

// Edge between dense vertex indices; the edge's id is its position in edges().
struct Edge {
  int u = -1;
  int v = -1;
  ExactScalar w;
};

// Input edge referencing vertices by their opaque ids.
struct EdgeSpec {
  std::string u;
  std::string v;
  ExactScalar w;
};

// Immutable after construction.  Vertex ids are opaque strings mapped to dense
// indices 0..n-1 in declaration order; rotation()[v] lists the incident edge
// indices of v in counterclockwise order when an embedding is supplied.
class WeightedPlanarGraph {
 public:
  WeightedPlanarGraph() = default;

  int vertex_count() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& vertex_id(int i) const { return ids_.at(i); }
  int index_of(const std::string& id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  // Unordered incident edge-index lists (always available).
  const std::vector<std::vector<int>>& incident() const { return incident_; }

  bool has_rotation() const { return has_rotation_; }
  const std::vector<std::vector<int>>& rotation() const;

  int degree(int v) const { return static_cast<int>(incident_.at(v).size()); }
  int other_end(int edge, int v) const {
    const Edge& e = edges_.at(edge);
    return e.u == v ? e.v : e.u;
  }
  bool is_connected() const;

 private:
  friend WeightedPlanarGraph build_graph(
      const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
      const std::optional<std::vector<std::vector<int>>>& rotation);
  friend WeightedPlanarGraph delete_vertices(const WeightedPlanarGraph& g,
                                             const std::vector<int>& doomed);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> rotation_;
  bool has_rotation_ = false;
};

// Builds a graph from vertex ids and endpoint-id edges.  rotation, if given,
// is indexed by vertex position and must list each vertex's incident edge
// indices exactly once (counterclockwise).  Throws std::invalid_argument on
// duplicate/unknown ids, self-loops, or malformed rotations.
WeightedPlanarGraph build_graph(
    const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
    const std::optional<std::vector<std::vector<int>>>& rotation = std::nullopt);

// Face cycles of the embedding as vertex-index sequences (one entry per dart,
// so a face's length equals the number of directed edges it consumes).
// Requires a rotation system and a connected graph.
std::vector<std::vector<int>> faces(const WeightedPlanarGraph& g);

// A marked-vertex list together with the graph it refers to.
struct FaceSelection {
  const WeightedPlanarGraph* graph = nullptr;
  std::vector<int> marked;                 // a_1..a_{2k}, distinct, even count
  std::optional<int> face_witness;         // restrict the search to this face
};

struct OrderWitness {
  int face = -1;                           // index into faces(g)
  std::vector<int> boundary;               // collapsed first-visit vertex order
};

// Accepts iff the marked vertices appear in the given cyclic order on some
// face, where revisits along the face walk collapse to the first visit and the
// two endpoints of a pending edge (degree-one vertex plus its attachment, both
// marked) may be listed in either order.  Returns the accepting face and its
// collapsed boundary, or nullopt on rejection.
std::optional<OrderWitness> validate_cyclic_order(const FaceSelection& sel);

// Induced subgraph on vertices minus `doomed`; rotation restricted when present.
WeightedPlanarGraph delete_vertices(const WeightedPlanarGraph& g,
                                    const std::vector<int>& doomed);

// Convenience overload resolving ids first.
WeightedPlanarGraph delete_vertices(const WeightedPlanarGraph& g,
                                    const std::vector<std::string>& doomed_ids);

// Two-coloring of a bipartite graph: color[v] in {0,1}, color 0 for the
// smallest-index vertex of each component.  Throws std::invalid_argument if an
// odd cycle exists.
std::vector<int> bipartition(const WeightedPlanarGraph& g);

}  // namespace matchings
