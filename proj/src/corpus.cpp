// Random embedded test graphs with known boundary cycles.
#include "matchings/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "matchings/lattice.hpp"

namespace matchings {

std::vector<int> collapse_walk(const std::vector<int>& walk) {
  std::vector<int> out;
  std::vector<char> seen;
  for (int v : walk) {
    if (v >= static_cast<int>(seen.size())) seen.resize(v + 1, 0);
    if (!seen[v]) {
      seen[v] = 1;
      out.push_back(v);
    }
  }
  return out;
}

std::vector<int> outer_cycle(const WeightedPlanarGraph& g) {
  std::vector<std::vector<int>> fs = faces(g);
  if (fs.empty()) throw std::invalid_argument("graph has no faces");
  size_t best = 0;
  for (size_t i = 1; i < fs.size(); ++i) {
    if (fs[i].size() > fs[best].size()) best = i;
  }
  return collapse_walk(fs[best]);
}

int CorpusGenerator::uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

ExactScalar CorpusGenerator::random_weight() {
  int w = 0;
  while (w == 0) w = uniform_int(-9, 9);
  return ExactScalar(w);
}

CorpusGraph CorpusGenerator::grid(bool with_pendant) {
  // Nonincreasing column heights: a staircase subgraph of the square grid.
  const int cols = uniform_int(2, 4);
  std::vector<int> h(cols);
  h[0] = uniform_int(2, 4);
  for (int c = 1; c < cols; ++c) h[c] = uniform_int(1, h[c - 1]);

  auto id = [](int r, int c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
  std::vector<std::string> vertices;
  std::map<std::pair<int, int>, int> pos;
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < h[c]; ++r) {
      pos[{r, c}] = static_cast<int>(vertices.size());
      vertices.push_back(id(r, c));
    }
  }

  std::vector<EdgeSpec> edges;
  std::map<std::pair<int, int>, std::map<int, int>> dir_edge;  // vertex -> angle -> edge
  auto add_edge = [&](int r1, int c1, int r2, int c2, int angle_out, int angle_in) {
    int e = static_cast<int>(edges.size());
    edges.push_back({id(r1, c1), id(r2, c2), random_weight()});
    dir_edge[{r1, c1}][angle_out] = e;
    dir_edge[{r2, c2}][angle_in] = e;
  };
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < h[c]; ++r) {
      if (c + 1 < cols && r < h[c + 1]) add_edge(r, c, r, c + 1, 0, 180);  // east
      if (r + 1 < h[c]) add_edge(r, c, r + 1, c, 90, 270);                // north
    }
  }

  int pendant = -1, attachment = -1;
  if (with_pendant) {
    const int r = h[cols - 1] - 1, c = cols - 1;
    int e = static_cast<int>(edges.size());
    vertices.push_back("pend");
    edges.push_back({id(r, c), "pend", random_weight()});
    dir_edge[{r, c}][0] = e;  // east of the top of the last column is free
    attachment = pos[{r, c}];
    pendant = static_cast<int>(vertices.size()) - 1;
  }

  std::vector<std::vector<int>> rotation(vertices.size());
  for (const auto& [rc, by_angle] : dir_edge) {
    for (const auto& [angle, e] : by_angle) rotation[pos[rc]].push_back(e);
  }
  if (pendant >= 0) rotation[pendant].push_back(static_cast<int>(edges.size()) - 1);

  CorpusGraph out;
  out.graph = build_graph(vertices, edges, rotation);
  out.outer = outer_cycle(out.graph);
  out.color = bipartition(out.graph);
  out.pendant = pendant;
  out.attachment = attachment;
  return out;
}

namespace {

// Dents and forced-lozenge reduction can split a region; the condensation
// suites need a single boundary cycle, so those draws fall back to a hexagon.
bool region_connected(const Region& r) {
  if (r.empty()) return true;
  std::vector<TriCell> stack = {r.cells().front()};
  std::set<TriCell> seen = {r.cells().front()};
  while (!stack.empty()) {
    TriCell c = stack.back();
    stack.pop_back();
    for (const TriCell& nb : cell_neighbors(c)) {
      if (r.contains(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return static_cast<int>(seen.size()) == r.size();
}

}  // namespace

CorpusGraph CorpusGenerator::hex_dual() {
  Region region;
  const int kind = uniform_int(0, 2);
  if (kind == 0) {
    int a = uniform_int(1, 2), b = uniform_int(1, 2), c = uniform_int(1, 2);
    if (a + b + c > 5) a = 1;  // keep the dual at 24 vertices or fewer
    region = hexagon(a, b, c);
  } else if (kind == 1) {
    region = eisenkolbl_region(1, 1, 1, uniform_int(0, 3), uniform_int(0, 3),
                               uniform_int(0, 3));
    // 30 cells is over the corpus budget; shrink by forced-lozenge reduction.
    region = remove_forced(region).region;
  } else {
    const int m = uniform_int(1, 3), n = uniform_int(1, 2);
    std::vector<int> slots(m + n);
    std::iota(slots.begin(), slots.end(), 1);
    std::shuffle(slots.begin(), slots.end(), rng_);
    std::vector<int> xs(slots.begin(), slots.begin() + n);
    std::sort(xs.begin(), xs.end());
    region = t_region(m, n, xs);
  }
  if (region.empty() || region.size() > 24 || !region_connected(region))
    region = hexagon(2, 1, 2);

  WeightedPlanarGraph unit = dual_graph(region);
  std::vector<EdgeSpec> edges;
  for (const Edge& e : unit.edges()) {
    edges.push_back({unit.vertex_id(e.u), unit.vertex_id(e.v), random_weight()});
  }
  CorpusGraph out;
  out.graph = build_graph(unit.vertex_ids(), edges, unit.rotation());
  out.outer = outer_cycle(out.graph);
  out.color = bipartition(out.graph);
  return out;
}

CorpusGraph CorpusGenerator::next(bool with_pendant) {
  ++tick_;
  if (with_pendant || tick_ % 3 != 0) return grid(with_pendant);
  return hex_dual();
}

std::vector<int> CorpusGenerator::marked_on_boundary(const CorpusGraph& g, int m) {
  const int n = static_cast<int>(g.outer.size());
  if (m > n) throw std::invalid_argument("boundary too short for marked set");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng_);
  idx.resize(m);
  std::sort(idx.begin(), idx.end());
  std::vector<int> out;
  for (int i : idx) out.push_back(g.outer[i]);
  return out;
}

}  // namespace matchings
