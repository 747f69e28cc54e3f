// Graph construction, face traversal, cyclic-order validation, vertex deletion.
#include "matchings/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace matchings {

int WeightedPlanarGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex id: " + id);
  return it->second;
}

const std::vector<std::vector<int>>& WeightedPlanarGraph::rotation() const {
  if (!has_rotation_) throw std::invalid_argument("graph has no rotation system");
  return rotation_;
}

bool WeightedPlanarGraph::is_connected() const {
  const int n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : incident_[v]) {
      int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

WeightedPlanarGraph build_graph(
    const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges,
    const std::optional<std::vector<std::vector<int>>>& rotation) {
  WeightedPlanarGraph g;
  g.ids_ = vertices;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (!g.index_.emplace(vertices[i], i).second)
      throw std::invalid_argument("duplicate vertex id: " + vertices[i]);
  }
  g.incident_.resize(vertices.size());
  for (const EdgeSpec& es : edges) {
    int u = g.index_of(es.u);
    int v = g.index_of(es.v);
    if (u == v) throw std::invalid_argument("self-loop at vertex: " + es.u);
    int id = static_cast<int>(g.edges_.size());
    g.edges_.push_back(Edge{u, v, es.w});
    g.incident_[u].push_back(id);
    g.incident_[v].push_back(id);
  }
  if (rotation.has_value()) {
    if (rotation->size() != vertices.size())
      throw std::invalid_argument("rotation must list every vertex");
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
      std::vector<int> expect = g.incident_[v];
      std::vector<int> given = (*rotation)[v];
      std::sort(expect.begin(), expect.end());
      std::vector<int> sorted_given = given;
      std::sort(sorted_given.begin(), sorted_given.end());
      if (expect != sorted_given)
        throw std::invalid_argument("rotation at vertex " + vertices[v] +
                                    " is not a permutation of its incident edges");
    }
    g.rotation_ = *rotation;
    g.has_rotation_ = true;
  }
  return g;
}

namespace {

// Darts are directed edges: dart 2e   travels edges[e].u -> edges[e].v,
//           dart 2e+1 travels edges[e].v -> edges[e].u.
int dart_tail(const WeightedPlanarGraph& g, int d) {
  const Edge& e = g.edges()[d / 2];
  return (d % 2 == 0) ? e.u : e.v;
}

int dart_head(const WeightedPlanarGraph& g, int d) {
  const Edge& e = g.edges()[d / 2];
  return (d % 2 == 0) ? e.v : e.u;
}

int dart_from(const WeightedPlanarGraph& g, int edge, int tail) {
  return 2 * edge + (g.edges()[edge].u == tail ? 0 : 1);
}

}  // namespace

std::vector<std::vector<int>> faces(const WeightedPlanarGraph& g) {
  const auto& rot = g.rotation();  // throws when absent
  if (!g.is_connected())
    throw std::invalid_argument("face traversal requires a connected graph");
  const int n = g.vertex_count();
  // Position of each edge within its endpoint's rotation list.
  std::vector<std::unordered_map<int, int>> pos(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) pos[v][rot[v][i]] = i;

  const int ndarts = 2 * static_cast<int>(g.edges().size());
  std::vector<char> used(ndarts, 0);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < ndarts; ++start) {
    if (used[start]) continue;
    std::vector<int> walk;
    int d = start;
    while (!used[d]) {
      used[d] = 1;
      walk.push_back(dart_tail(g, d));
      int h = dart_head(g, d);
      const auto& r = rot[h];
      int i = pos[h].at(d / 2);
      int next_edge = r[(i + 1) % r.size()];
      d = dart_from(g, next_edge, h);
    }
    out.push_back(std::move(walk));
  }
  return out;
}

namespace {

// Collapses a cyclic walk (rotated to begin at `shift`) to first visits.
std::vector<int> collapse(const std::vector<int>& walk, int shift) {
  std::vector<int> out;
  std::set<int> seen;
  const int L = static_cast<int>(walk.size());
  for (int i = 0; i < L; ++i) {
    int v = walk[(shift + i) % L];
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

// True when `positions` is cyclically nondecreasing (at most one descent).
bool cyclically_nondecreasing(const std::vector<int>& positions) {
  int descents = 0;
  const int n = static_cast<int>(positions.size());
  for (int i = 0; i < n; ++i)
    if (positions[i] > positions[(i + 1) % n]) ++descents;
  return descents <= 1;
}

}  // namespace

std::optional<OrderWitness> validate_cyclic_order(const FaceSelection& sel) {
  if (sel.graph == nullptr) throw std::invalid_argument("selection has no graph");
  const WeightedPlanarGraph& g = *sel.graph;
  const std::vector<int>& marked = sel.marked;
  if (marked.size() < 2 || marked.size() % 2 != 0)
    throw std::invalid_argument("marked list must have even length >= 2");
  std::set<int> mset(marked.begin(), marked.end());
  if (mset.size() != marked.size())
    throw std::invalid_argument("marked vertices must be distinct");
  for (int v : marked)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("marked vertex index out of range");

  const auto all_faces = faces(g);  // validates rotation + connectivity

  // A pending pair is a degree-one marked vertex plus its marked attachment;
  // their relative order may be swapped, which we model by letting the pendant
  // share its attachment's boundary position when they are adjacent there.
  std::unordered_map<int, int> pendant_attach;
  for (int v : marked) {
    if (g.degree(v) == 1) {
      int nb = g.other_end(g.incident()[v][0], v);
      if (mset.count(nb)) pendant_attach[v] = nb;
    }
  }

  for (int f = 0; f < static_cast<int>(all_faces.size()); ++f) {
    if (sel.face_witness && *sel.face_witness != f) continue;
    const std::vector<int>& walk = all_faces[f];
    std::set<int> on_face(walk.begin(), walk.end());
    bool all_present = true;
    for (int v : marked)
      if (!on_face.count(v)) {
        all_present = false;
        break;
      }
    if (!all_present) continue;

    const int L = static_cast<int>(walk.size());
    for (int dir = 0; dir < 2; ++dir) {
      std::vector<int> w = walk;
      if (dir == 1) std::reverse(w.begin(), w.end());
      for (int shift = 0; shift < L; ++shift) {
        std::vector<int> col = collapse(w, shift);
        std::unordered_map<int, int> pos;
        for (int i = 0; i < static_cast<int>(col.size()); ++i) pos[col[i]] = i;
        std::vector<int> p(marked.size());
        for (std::size_t i = 0; i < marked.size(); ++i) p[i] = pos.at(marked[i]);
        // Let adjacent pending pairs share the earlier boundary slot, so the
        // pair's two members may appear in either order in the marked list.
        for (std::size_t i = 0; i < marked.size(); ++i) {
          auto it = pendant_attach.find(marked[i]);
          if (it == pendant_attach.end()) continue;
          int pa = pos.at(it->second);
          if (p[i] == pa + 1 || pa == p[i] + 1) {
            int shared = std::min(p[i], pa);
            p[i] = shared;
            for (std::size_t j = 0; j < marked.size(); ++j)
              if (marked[j] == it->second) p[j] = shared;
          }
        }
        if (cyclically_nondecreasing(p)) return OrderWitness{f, std::move(col)};
      }
    }
  }
  return std::nullopt;
}

WeightedPlanarGraph delete_vertices(const WeightedPlanarGraph& g,
                                    const std::vector<int>& doomed) {
  const int n = g.vertex_count();
  std::vector<char> kill(n, 0);
  for (int v : doomed) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex index out of range");
    kill[v] = 1;
  }
  WeightedPlanarGraph out;
  std::vector<int> vmap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (kill[v]) continue;
    vmap[v] = static_cast<int>(out.ids_.size());
    out.ids_.push_back(g.vertex_id(v));
    out.index_.emplace(g.vertex_id(v), vmap[v]);
  }
  out.incident_.resize(out.ids_.size());
  std::vector<int> emap(g.edges().size(), -1);
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) {
    const Edge& ed = g.edges()[e];
    if (kill[ed.u] || kill[ed.v]) continue;
    emap[e] = static_cast<int>(out.edges_.size());
    out.edges_.push_back(Edge{vmap[ed.u], vmap[ed.v], ed.w});
    out.incident_[vmap[ed.u]].push_back(emap[e]);
    out.incident_[vmap[ed.v]].push_back(emap[e]);
  }
  if (g.has_rotation()) {
    out.rotation_.resize(out.ids_.size());
    for (int v = 0; v < n; ++v) {
      if (kill[v]) continue;
      for (int e : g.rotation()[v])
        if (emap[e] >= 0) out.rotation_[vmap[v]].push_back(emap[e]);
    }
    out.has_rotation_ = true;
  }
  return out;
}

WeightedPlanarGraph delete_vertices(const WeightedPlanarGraph& g,
                                    const std::vector<std::string>& doomed_ids) {
  std::vector<int> idx;
  idx.reserve(doomed_ids.size());
  for (const std::string& id : doomed_ids) idx.push_back(g.index_of(id));
  return delete_vertices(g, idx);
}

std::vector<int> bipartition(const WeightedPlanarGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g.incident()[v]) {
        int w = g.other_end(e, v);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          throw std::invalid_argument("graph is not bipartite");
        }
      }
    }
  }
  return color;
}

}  // namespace matchings
