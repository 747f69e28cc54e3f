// Triangular-lattice regions: constructors, dual graphs, reductions, rendering.
#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "matchings/graph.hpp"
#include "matchings/matching.hpp"

namespace matchings {

// Unit triangle in oblique coordinates.  Up-cell (u,v) is edge-adjacent
// exactly to down-cells (u,v), (u-1,v), (u,v-1).
struct TriCell {
  int u = 0;
  int v = 0;
  int o = 0;  // 0 = up-pointing, 1 = down-pointing
  auto operator<=>(const TriCell&) const = default;
};

inline constexpr int kUp = 0;
inline constexpr int kDown = 1;

// The three potential neighbors of a cell (present or not).
std::array<TriCell, 3> cell_neighbors(const TriCell& c);

// Finite set of cells, stored sorted and duplicate-free.
class Region {
 public:
  Region() = default;
  static Region from_cells(std::vector<TriCell> cells);  // sorts, rejects duplicates

  const std::vector<TriCell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  bool empty() const { return cells_.empty(); }
  bool contains(const TriCell& c) const;
  int up_count() const;
  bool balanced() const { return 2 * up_count() == size(); }

  Region minus(const std::vector<TriCell>& doomed) const;   // throws if absent
  Region plus(const std::vector<TriCell>& extra) const;     // throws if present

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<TriCell> cells_;
};

// ---- region family constructors ----

// Hexagon with side lengths a,b,c,a,b,c clockwise from the northern side.
Region hexagon(int a, int b, int c);

// General hexagon with sides (N, NE, SE, S, SW, NW) clockwise from north,
// realized as the size-(N+NE+SE) up-triangle minus three corner triangles.
Region hexagon_general(const std::array<int, 6>& sides);

enum class HexSide { south, northeast, northwest };

struct Dent {
  HexSide side;
  int pos = 0;  // 0-based slot along the side (see side_cell)
};

// Boundary up-cell of a general hexagon: S side counted from the west end,
// NE side from the bottom (east corner), NW side from the bottom (west corner).
TriCell side_cell(const std::array<int, 6>& sides, HexSide side, int pos);

// Down-cell just outside the hexagon at the same boundary slot.
TriCell pendant_cell(const std::array<int, 6>& sides, HexSide side, int pos);

// Hexagon of sides (a, b+3, c, a+3, b, c+3) minus one up-pointing unit dent in
// each long side: r slots from the S side's west end, s slots from the NE
// side's east corner, t slots below the NW side's top corner (calibrated).
Region eisenkolbl_region(int a, int b, int c, int r, int s, int t);

struct HStarRegion {
  Region region;
  std::array<TriCell, 3> pendants;  // b_1 (south), b_2 (northeast), b_3 (northwest)
};

// The dent-free hexagon of eisenkolbl_region with three protruding down-cells
// replacing the dents (one per long side, at the calibrated slots).
HStarRegion hstar_region(int a, int b, int c);

// Trapezoid of sides m, n, m+n, n (clockwise from the bottom) minus the
// down-pointing cells at 1-based top positions xs.
Region t_region(int m, int n, const std::vector<int>& xs);

// Hexagon of sides (x, y+k, z, x+k, y, z+k) minus k up-pointing boundary dents
// distributed over the S, NE, and NW sides.
Region h_k_region(int x, int y, int z, int k, const std::vector<Dent>& dents);

struct StarStrings {
  Region region;                  // hexagon plus all pendant strings (dents filled)
  std::vector<TriCell> dent_cells;     // a_1..a_k in counterclockwise order
  std::vector<TriCell> pendant_cells;  // b_1..b_k in counterclockwise order
  std::vector<TriCell> marked;         // a's and b's interleaved along the boundary
};

// The companion region of h_k_region: dents filled back, plus per-side strings
// of contiguous pendant down-cells anchored at the calibrated slots (S side
// west end, NE side bottom, NW side top).  marked lists the 2k cells in their
// counterclockwise boundary order (dent before pendant at a shared slot).
StarStrings h_star_strings(int x, int y, int z, int k, const std::vector<Dent>& dents);

// Hexagon of sides (x, y+k+1, z, x+k+1, y, z+k+1) minus one up-pointing unit
// dent on the NW side l slots above the western corner, minus a size-k
// up-pointing notch on the NE side: one unit above the eastern corner for the
// plain variant, one unit below the northeastern corner for the primed one.
Region h_kl_region(int x, int y, int z, int k, int l);
Region h_prime_kl_region(int x, int y, int z, int k, int l);

// True when the parameters are in range and the dent does not collide with the
// notch (the collision happens only for x = y = 0, l > z).
bool h_kl_region_valid(int x, int y, int z, int k, int l, bool prime = false);

// h_kl_region with k = 0: single-dent hexagon of sides (x,y+1,z,x+1,y,z+1).
Region f_region(int x, int y, int z, int l);

struct AugmentedRegion {
  Region region;
  TriCell a, b, c, d;  // the four marked cells, in cyclic boundary order a,d,c,b
};

// h_kl_region plus a trapezoidal band of 2x-1 cells on top, with the four
// cells whose deletions produce the recurrence's six regions.  Requires
// x, y, l >= 1.
AugmentedRegion augmented_region(int x, int y, int z, int k, int l);

// ---- graph view, reduction, rendering ----

// Bipartite dual: one vertex per cell (up vs down classes), unit weights,
// rotation from the geometric embedding.  Vertices are ordered by the row
// sweep (v, then 2u + orientation) and named like "U(u,v)" / "D(u,v)".
WeightedPlanarGraph dual_graph(const Region& r);

// Dual vertex id and index lookups for specific cells.
std::string dual_vertex_id(const TriCell& c);
std::vector<int> dual_indices(const Region& r, const std::vector<TriCell>& cells);

// Tiling count = perfect matching count of the dual (0 when unbalanced).
ExactScalar count_tilings(const Region& r,
                          const MatchingOptions& opt = MatchingOptions::from_env());

struct ReducedRegion {
  Region region;
  bool no_tilings = false;  // an uncoverable cell was found; the count is 0
};

// Iteratively removes cells with exactly one available neighbor together with
// that neighbor (their lozenge is forced); tiling count is preserved.  Stops
// with no_tilings when a cell has no neighbor left.
ReducedRegion remove_forced(const Region& r);

enum class RenderFormat { ascii, svg };

// Deterministic drawing; marked cells are highlighted.
std::string render(const Region& r, RenderFormat format,
                   const std::vector<TriCell>& marked = {});

// ---- lattice symmetries (used by the shape classifier and tests) ----

TriCell rot120_cell(const TriCell& c);
TriCell mirror_cell(const TriCell& c);
TriCell hmirror_cell(const TriCell& c);

// The 12 images of the region under the symmetry group generated by rot120,
// mirror, and hmirror (orientation-reversing), each translated so its minimum
// u and v are 0.
std::vector<Region> all_orientations(const Region& r);

// Translate so the minimum u and v over cells are 0.
Region normalized(const Region& r);

// Lexicographically least normalized orientation, serialized; equal keys mean
// the regions coincide up to lattice symmetry and translation.
std::string canonical_key(const Region& r);

bool congruent(const Region& a, const Region& b);
bool same_up_to_translation(const Region& a, const Region& b);

}  // namespace matchings
