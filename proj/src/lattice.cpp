// Region constructors, dual graphs, forced-lozenge reduction, and rendering.
#include "matchings/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace matchings {

namespace {

std::string cell_str(const TriCell& c) {
  std::ostringstream os;
  os << (c.o == kUp ? "U(" : "D(") << c.u << "," << c.v << ")";
  return os.str();
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::array<TriCell, 3> cell_neighbors(const TriCell& c) {
  if (c.o == kUp) {
    return {TriCell{c.u, c.v, kDown}, TriCell{c.u - 1, c.v, kDown},
            TriCell{c.u, c.v - 1, kDown}};
  }
  return {TriCell{c.u, c.v, kUp}, TriCell{c.u + 1, c.v, kUp},
          TriCell{c.u, c.v + 1, kUp}};
}

Region Region::from_cells(std::vector<TriCell> cells) {
  std::sort(cells.begin(), cells.end());
  auto dup = std::adjacent_find(cells.begin(), cells.end());
  if (dup != cells.end()) {
    throw std::invalid_argument("duplicate cell " + cell_str(*dup));
  }
  Region r;
  r.cells_ = std::move(cells);
  return r;
}

bool Region::contains(const TriCell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

int Region::up_count() const {
  int n = 0;
  for (const auto& c : cells_) n += (c.o == kUp) ? 1 : 0;
  return n;
}

Region Region::minus(const std::vector<TriCell>& doomed) const {
  std::set<TriCell> s(cells_.begin(), cells_.end());
  for (const auto& c : doomed) {
    if (s.erase(c) == 0) {
      throw std::invalid_argument("cell not in region: " + cell_str(c));
    }
  }
  Region r;
  r.cells_.assign(s.begin(), s.end());
  return r;
}

Region Region::plus(const std::vector<TriCell>& extra) const {
  std::set<TriCell> s(cells_.begin(), cells_.end());
  for (const auto& c : extra) {
    if (!s.insert(c).second) {
      throw std::invalid_argument("cell already in region: " + cell_str(c));
    }
  }
  Region r;
  r.cells_.assign(s.begin(), s.end());
  return r;
}

// ---- hexagon family ----

Region hexagon_general(const std::array<int, 6>& sides) {
  const auto [nN, nNE, nSE, nS, nSW, nNW] = sides;
  for (int s : sides) require(s >= 0, "hexagon side lengths must be nonnegative");
  require(nN + nNE == nS + nSW && nNE + nSE == nSW + nNW,
          "hexagon side lengths do not close up");
  const int T = nN + nNE + nSE;  // bounding up-triangle size
  const int p = nN, q = nSW, r = nSE;
  std::vector<TriCell> cells;
  for (int v = 0; v < T; ++v) {
    for (int u = 0; u < T; ++u) {
      if (u > T - r - 1 || v > T - p - 1) continue;
      if (q <= u + v && u + v <= T - 1) cells.push_back({u, v, kUp});
      if (q - 1 <= u + v && u + v <= T - 2) cells.push_back({u, v, kDown});
    }
  }
  return Region::from_cells(std::move(cells));
}

Region hexagon(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "hexagon sides must be nonnegative");
  require(a + b + c > 0, "hexagon sides must not all be zero");
  return hexagon_general({a, b, c, a, b, c});
}

TriCell side_cell(const std::array<int, 6>& sides, HexSide side, int pos) {
  const auto [nN, nNE, nSE, nS, nSW, nNW] = sides;
  const int T = nN + nNE + nSE;
  const int q = nSW, r = nSE;
  switch (side) {
    case HexSide::south:
      require(0 <= pos && pos < nS, "south slot out of range");
      return {q + pos, 0, kUp};
    case HexSide::northeast:
      require(0 <= pos && pos < nNE, "northeast slot out of range");
      return {T - 1 - (r + pos), r + pos, kUp};
    case HexSide::northwest:
      require(0 <= pos && pos < nNW, "northwest slot out of range");
      return {0, q + pos, kUp};
  }
  throw std::invalid_argument("unknown hexagon side");
}

TriCell pendant_cell(const std::array<int, 6>& sides, HexSide side, int pos) {
  TriCell in = side_cell(sides, side, pos);
  switch (side) {
    case HexSide::south:
      return {in.u, in.v - 1, kDown};
    case HexSide::northeast:
      return {in.u, in.v, kDown};
    case HexSide::northwest:
      return {in.u - 1, in.v, kDown};
  }
  throw std::invalid_argument("unknown hexagon side");
}

Region eisenkolbl_region(int a, int b, int c, int r, int s, int t) {
  require(a >= 0 && b >= 0 && c >= 0, "hexagon sides must be nonnegative");
  require(0 <= r && r <= a + 2, "dent position r out of range");
  require(0 <= s && s <= b + 2, "dent position s out of range");
  require(0 <= t && t <= c + 2, "dent position t out of range");
  const std::array<int, 6> sides{a, b + 3, c, a + 3, b, c + 3};
  Region hex = hexagon_general(sides);
  return hex.minus({side_cell(sides, HexSide::south, r),
                    side_cell(sides, HexSide::northeast, s),
                    side_cell(sides, HexSide::northwest, (c + 2) - t)});
}

HStarRegion hstar_region(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "hexagon sides must be nonnegative");
  const std::array<int, 6> sides{a, b + 3, c, a + 3, b, c + 3};
  Region hex = hexagon_general(sides);
  TriCell b1 = pendant_cell(sides, HexSide::south, 0);
  TriCell b2 = pendant_cell(sides, HexSide::northeast, 0);
  TriCell b3 = pendant_cell(sides, HexSide::northwest, c + 2);
  return {hex.plus({b1, b2, b3}), {b1, b2, b3}};
}

// ---- trapezoid family ----

Region t_region(int m, int n, const std::vector<int>& xs) {
  require(m >= 0 && n >= 0, "trapezoid dimensions must be nonnegative");
  require(static_cast<int>(xs.size()) == n, "need exactly n removed positions");
  for (size_t i = 0; i < xs.size(); ++i) {
    require(1 <= xs[i] && xs[i] <= m + n, "removed position out of range");
    require(i == 0 || xs[i - 1] < xs[i], "removed positions must be increasing");
  }
  std::vector<TriCell> cells;
  for (int v = 0; v < n; ++v) {
    for (int u = -v; u <= m - 1; ++u) cells.push_back({u, v, kUp});
    for (int u = -v - 1; u <= m - 1; ++u) cells.push_back({u, v, kDown});
  }
  Region r = Region::from_cells(std::move(cells));
  std::vector<TriCell> doomed;
  for (int x : xs) doomed.push_back({-n + x - 1, n - 1, kDown});
  return r.minus(doomed);
}

// ---- dented hexagons ----

namespace {

std::array<int, 6> hk_sides(int x, int y, int z, int k) {
  return {x, y + k, z, x + k, y, z + k};
}

HexSide check_dents(int x, int y, int z, int k, const std::vector<Dent>& dents) {
  require(x >= 0 && y >= 0 && z >= 0 && k >= 0, "parameters must be nonnegative");
  require(static_cast<int>(dents.size()) == k, "need exactly k dents");
  std::set<std::pair<int, int>> seen;
  for (const Dent& d : dents) {
    int len = 0;
    switch (d.side) {
      case HexSide::south: len = x + k; break;
      case HexSide::northeast: len = y + k; break;
      case HexSide::northwest: len = z + k; break;
    }
    require(0 <= d.pos && d.pos < len, "dent position out of range for its side");
    require(seen.insert({static_cast<int>(d.side), d.pos}).second,
            "dents must be distinct");
  }
  return HexSide::south;
}

}  // namespace

Region h_k_region(int x, int y, int z, int k, const std::vector<Dent>& dents) {
  check_dents(x, y, z, k, dents);
  const auto sides = hk_sides(x, y, z, k);
  require(x + y + z + k > 0, "region must be nonempty");
  Region hex = hexagon_general(sides);
  std::vector<TriCell> doomed;
  for (const Dent& d : dents) doomed.push_back(side_cell(sides, d.side, d.pos));
  return hex.minus(doomed);
}

StarStrings h_star_strings(int x, int y, int z, int k, const std::vector<Dent>& dents) {
  check_dents(x, y, z, k, dents);
  const auto sides = hk_sides(x, y, z, k);
  require(x + y + z + k > 0, "region must be nonempty");
  Region hex = hexagon_general(sides);

  std::set<int> s_dents, ne_dents, nw_dents;
  for (const Dent& d : dents) {
    switch (d.side) {
      case HexSide::south: s_dents.insert(d.pos); break;
      case HexSide::northeast: ne_dents.insert(d.pos); break;
      case HexSide::northwest: nw_dents.insert(d.pos); break;
    }
  }
  const int ks = static_cast<int>(s_dents.size());
  const int kne = static_cast<int>(ne_dents.size());
  const int knw = static_cast<int>(nw_dents.size());

  // Strings of pendant cells: S side slots 0..ks-1, NE slots 0..kne-1,
  // NW top slots z+k-knw..z+k-1.
  std::set<int> s_str, ne_str, nw_str;
  for (int i = 0; i < ks; ++i) s_str.insert(i);
  for (int i = 0; i < kne; ++i) ne_str.insert(i);
  for (int i = 0; i < knw; ++i) nw_str.insert(z + k - 1 - i);

  StarStrings out;
  std::vector<TriCell> pend;
  auto visit = [&](HexSide side, int pos, const std::set<int>& dset,
                   const std::set<int>& sset) {
    if (dset.count(pos)) {
      TriCell a = side_cell(sides, side, pos);
      out.dent_cells.push_back(a);
      out.marked.push_back(a);
    }
    if (sset.count(pos)) {
      TriCell b = pendant_cell(sides, side, pos);
      out.pendant_cells.push_back(b);
      out.marked.push_back(b);
      pend.push_back(b);
    }
  };
  for (int pos = 0; pos < x + k; ++pos) visit(HexSide::south, pos, s_dents, s_str);
  for (int pos = 0; pos < y + k; ++pos) visit(HexSide::northeast, pos, ne_dents, ne_str);
  for (int pos = z + k - 1; pos >= 0; --pos) visit(HexSide::northwest, pos, nw_dents, nw_str);

  out.region = hex.plus(pend);
  return out;
}

Region h_kl_region(int x, int y, int z, int k, int l) {
  require(x >= 0 && y >= 0 && z >= 0 && k >= 0, "parameters must be nonnegative");
  require(0 <= l && l <= z + k, "dent position l out of range");
  const std::array<int, 6> sides{x, y + k + 1, z, x + k + 1, y, z + k + 1};
  const int T = x + y + k + 1 + z;
  Region hex = hexagon_general(sides);
  std::vector<TriCell> doomed{side_cell(sides, HexSide::northwest, l)};
  const int v0 = z + 1;
  const int u0 = T - v0 - k;
  for (int du = 0; du < k; ++du) {
    for (int dv = 0; dv + du <= k - 1; ++dv) {
      doomed.push_back({u0 + du, v0 + dv, kUp});
      if (du + dv <= k - 2) doomed.push_back({u0 + du, v0 + dv, kDown});
    }
  }
  try {
    return hex.minus(doomed);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("dent and notch collide; region undefined");
  }
}

Region h_prime_kl_region(int x, int y, int z, int k, int l) {
  require(x >= 0 && y >= 0 && z >= 0 && k >= 0, "parameters must be nonnegative");
  require(0 <= l && l <= z + k, "dent position l out of range");
  const std::array<int, 6> sides{x, y + k + 1, z, x + k + 1, y, z + k + 1};
  const int T = x + y + k + 1 + z;
  Region hex = hexagon_general(sides);
  std::vector<TriCell> doomed{side_cell(sides, HexSide::northwest, l)};
  const int v0 = z + y;
  const int u0 = T - v0 - k;
  for (int du = 0; du < k; ++du) {
    for (int dv = 0; dv + du <= k - 1; ++dv) {
      doomed.push_back({u0 + du, v0 + dv, kUp});
      if (du + dv <= k - 2) doomed.push_back({u0 + du, v0 + dv, kDown});
    }
  }
  try {
    return hex.minus(doomed);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("dent and notch collide; region undefined");
  }
}

bool h_kl_region_valid(int x, int y, int z, int k, int l, bool prime) {
  if (x < 0 || y < 0 || z < 0 || k < 0 || l < 0 || l > z + k) return false;
  try {
    if (prime) {
      h_prime_kl_region(x, y, z, k, l);
    } else {
      h_kl_region(x, y, z, k, l);
    }
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Region f_region(int x, int y, int z, int l) {
  return h_kl_region(x, y, z, 0, l);
}

AugmentedRegion augmented_region(int x, int y, int z, int k, int l) {
  require(x >= 1, "x must be at least 1");
  require(y >= 1, "y must be at least 1");
  require(l >= 1, "l must be at least 1");
  Region base = h_kl_region(x, y, z, k, l);
  const int T = x + y + k + 1 + z;
  const int vband = T - x;
  std::vector<TriCell> band;
  for (int u = 0; u <= x - 1; ++u) band.push_back({u, vband, kUp});
  for (int u = 0; u <= x - 2; ++u) band.push_back({u, vband, kDown});
  AugmentedRegion out;
  out.region = base.plus(band);
  out.a = {0, y, kUp};
  out.b = {0, vband, kUp};
  out.c = {T - 1 - z, z, kUp};
  out.d = {y - 1, 0, kDown};
  for (const TriCell* c : {&out.a, &out.b, &out.c, &out.d}) {
    require(out.region.contains(*c), "marked cell missing from region");
  }
  return out;
}

// ---- dual graph ----

namespace {

// Row sweep: bottom to top, west to east, up before down within a column pair.
bool dual_order_less(const TriCell& a, const TriCell& b) {
  int ka = 2 * a.u + a.o, kb = 2 * b.u + b.o;
  if (a.v != b.v) return a.v < b.v;
  if (ka != kb) return ka < kb;
  return a.o < b.o;
}

}  // namespace

std::string dual_vertex_id(const TriCell& c) { return cell_str(c); }

WeightedPlanarGraph dual_graph(const Region& r) {
  std::vector<TriCell> order = r.cells();
  std::sort(order.begin(), order.end(), dual_order_less);
  std::map<TriCell, int> index;
  std::vector<std::string> ids;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    index[order[i]] = i;
    ids.push_back(dual_vertex_id(order[i]));
  }

  // Counterclockwise neighbor directions around each cell.
  auto ccw = [](const TriCell& c) -> std::array<TriCell, 3> {
    if (c.o == kUp) {
      return {TriCell{c.u, c.v, kDown}, TriCell{c.u - 1, c.v, kDown},
              TriCell{c.u, c.v - 1, kDown}};
    }
    return {TriCell{c.u, c.v + 1, kUp}, TriCell{c.u, c.v, kUp},
            TriCell{c.u + 1, c.v, kUp}};
  };

  std::vector<EdgeSpec> edges;
  std::map<std::pair<int, int>, int> edge_index;  // (up idx, down idx) -> edge
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const TriCell& c = order[i];
    if (c.o != kUp) continue;
    for (const TriCell& nb : ccw(c)) {
      auto it = index.find(nb);
      if (it == index.end()) continue;
      edge_index[{i, it->second}] = static_cast<int>(edges.size());
      edges.push_back({ids[i], ids[it->second], ExactScalar(1)});
    }
  }

  std::vector<std::vector<int>> rotation(order.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const TriCell& c = order[i];
    for (const TriCell& nb : ccw(c)) {
      auto it = index.find(nb);
      if (it == index.end()) continue;
      auto key = (c.o == kUp) ? std::make_pair(i, it->second)
                              : std::make_pair(it->second, i);
      rotation[i].push_back(edge_index.at(key));
    }
  }
  return build_graph(ids, edges, rotation);
}

std::vector<int> dual_indices(const Region& r, const std::vector<TriCell>& cells) {
  std::vector<TriCell> order = r.cells();
  std::sort(order.begin(), order.end(), dual_order_less);
  std::map<TriCell, int> index;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) index[order[i]] = i;
  std::vector<int> out;
  for (const TriCell& c : cells) {
    auto it = index.find(c);
    if (it == index.end()) {
      throw std::invalid_argument("cell not in region: " + cell_str(c));
    }
    out.push_back(it->second);
  }
  return out;
}

ExactScalar count_tilings(const Region& r, const MatchingOptions& opt) {
  if (!r.balanced()) return ExactScalar(0);
  return count_matchings_fast(dual_graph(r), opt);
}

ReducedRegion remove_forced(const Region& r) {
  std::set<TriCell> cells(r.cells().begin(), r.cells().end());
  bool changed = true;
  while (changed) {
    changed = false;
    // Snapshot for deterministic iteration while erasing.
    std::vector<TriCell> sweep(cells.begin(), cells.end());
    for (const TriCell& c : sweep) {
      if (!cells.count(c)) continue;
      TriCell only{};
      int found = 0;
      for (const TriCell& nb : cell_neighbors(c)) {
        if (cells.count(nb)) {
          only = nb;
          ++found;
        }
      }
      if (found == 0) {
        Region out;
        out = Region::from_cells({cells.begin(), cells.end()});
        return {out, true};
      }
      if (found == 1) {
        cells.erase(c);
        cells.erase(only);
        changed = true;
      }
    }
  }
  return {Region::from_cells({cells.begin(), cells.end()}), false};
}

// ---- rendering ----

std::string render(const Region& r, RenderFormat format,
                   const std::vector<TriCell>& marked) {
  std::set<TriCell> mk(marked.begin(), marked.end());
  if (r.empty()) {
    return format == RenderFormat::ascii
               ? std::string("(empty)\n")
               : std::string("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" "
                             "height=\"0\"></svg>\n");
  }
  if (format == RenderFormat::ascii) {
    int vmin = r.cells()[0].v, vmax = r.cells()[0].v;
    int cmin = 0;
    bool first = true;
    for (const auto& c : r.cells()) {
      vmin = std::min(vmin, c.v);
      vmax = std::max(vmax, c.v);
      int col = 2 * c.u + c.v + c.o;
      if (first || col < cmin) cmin = col;
      first = false;
    }
    std::ostringstream os;
    for (int v = vmax; v >= vmin; --v) {
      std::string line;
      for (const auto& c : r.cells()) {
        if (c.v != v) continue;
        int col = 2 * c.u + c.v + c.o - cmin;
        if (static_cast<int>(line.size()) <= col) line.resize(col + 1, ' ');
        line[col] = mk.count(c) ? '*' : (c.o == kUp ? '^' : 'v');
      }
      os << line << "\n";
    }
    return os.str();
  }

  // SVG: cell (u,v) corner at (u + v/2, -v * sqrt(3)/2), scaled.
  const double S = 24.0;
  const double H = S * 0.8660254037844386;
  double xmin = 1e18, xmax = -1e18, ymin = 1e18, ymax = -1e18;
  auto px = [&](int u, int v) { return S * (u + 0.5 * v); };
  auto py = [&](int v) { return -H * v; };
  for (const auto& c : r.cells()) {
    for (int du = 0; du <= 1; ++du) {
      for (int dv = 0; dv <= 1; ++dv) {
        xmin = std::min(xmin, px(c.u + du, c.v + dv));
        xmax = std::max(xmax, px(c.u + du, c.v + dv));
        ymin = std::min(ymin, py(c.v + dv));
        ymax = std::max(ymax, py(c.v + dv));
      }
    }
  }
  const double pad = 4.0;
  auto fmt = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << fmt(xmax - xmin + 2 * pad) << "\" height=\"" << fmt(ymax - ymin + 2 * pad)
     << "\" viewBox=\"0 0 " << fmt(xmax - xmin + 2 * pad) << " "
     << fmt(ymax - ymin + 2 * pad) << "\">\n";
  for (const auto& c : r.cells()) {
    double ox = -xmin + pad, oy = -ymin + pad;
    std::array<std::pair<double, double>, 3> pts;
    if (c.o == kUp) {
      pts = {{{px(c.u, c.v) + ox, py(c.v) + oy},
              {px(c.u + 1, c.v) + ox, py(c.v) + oy},
              {px(c.u, c.v + 1) + ox, py(c.v + 1) + oy}}};
    } else {
      pts = {{{px(c.u + 1, c.v) + ox, py(c.v) + oy},
              {px(c.u, c.v + 1) + ox, py(c.v + 1) + oy},
              {px(c.u + 1, c.v + 1) + ox, py(c.v + 1) + oy}}};
    }
    const char* fill = mk.count(c) ? "#e5484d" : (c.o == kUp ? "#dbeafe" : "#fef3c7");
    os << "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) os << " ";
      os << fmt(pts[i].first) << "," << fmt(pts[i].second);
    }
    os << "\" fill=\"" << fill << "\" stroke=\"#334155\" stroke-width=\"1\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

// ---- lattice symmetries ----

TriCell rot120_cell(const TriCell& c) {
  if (c.o == kUp) return {-c.u - c.v - 1, c.u, kUp};
  return {-c.u - c.v - 2, c.u, kDown};
}

TriCell mirror_cell(const TriCell& c) {
  if (c.o == kUp) return {-c.u - c.v - 1, c.v, kUp};
  return {-c.u - c.v - 2, c.v, kDown};
}

TriCell hmirror_cell(const TriCell& c) {
  if (c.o == kUp) return {c.u + c.v, -c.v - 1, kDown};
  return {c.u + c.v + 1, -c.v - 1, kUp};
}

Region normalized(const Region& r) {
  if (r.empty()) return r;
  int umin = r.cells()[0].u, vmin = r.cells()[0].v;
  for (const auto& c : r.cells()) {
    umin = std::min(umin, c.u);
    vmin = std::min(vmin, c.v);
  }
  std::vector<TriCell> out;
  for (const auto& c : r.cells()) out.push_back({c.u - umin, c.v - vmin, c.o});
  return Region::from_cells(std::move(out));
}

std::vector<Region> all_orientations(const Region& r) {
  std::vector<Region> out;
  for (int hm = 0; hm < 2; ++hm) {
    for (int rot = 0; rot < 3; ++rot) {
      for (int mir = 0; mir < 2; ++mir) {
        std::vector<TriCell> cells;
        for (TriCell c : r.cells()) {
          if (mir) c = mirror_cell(c);
          for (int i = 0; i < rot; ++i) c = rot120_cell(c);
          if (hm) c = hmirror_cell(c);
          cells.push_back(c);
        }
        out.push_back(normalized(Region::from_cells(std::move(cells))));
      }
    }
  }
  return out;
}

std::string canonical_key(const Region& r) {
  std::vector<TriCell> best;
  bool first = true;
  for (const Region& img : all_orientations(r)) {
    if (first || img.cells() < best) {
      best = img.cells();
      first = false;
    }
  }
  std::ostringstream os;
  for (const auto& c : best) os << c.u << "," << c.v << "," << c.o << ";";
  return os.str();
}

bool congruent(const Region& a, const Region& b) {
  return canonical_key(a) == canonical_key(b);
}

bool same_up_to_translation(const Region& a, const Region& b) {
  return normalized(a) == normalized(b);
}

}  // namespace matchings
