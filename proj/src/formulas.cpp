// Product formulas, shape recognition, and the Pfaffian reassembly check.
#include "matchings/formulas.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "matchings/condensation.hpp"
#include "matchings/graph.hpp"
#include "matchings/pfaffian.hpp"

namespace matchings {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ExactScalar pochhammer(const ExactScalar& a, int k) {
  require(k >= 0, "pochhammer length must be nonnegative");
  ExactScalar out(1);
  ExactScalar t = a;
  for (int i = 0; i < k; ++i) {
    out *= t;
    t += ExactScalar(1);
  }
  return out;
}

ExactScalar superfactorial(int n) {
  require(n >= 0, "superfactorial argument must be nonnegative");
  ExactScalar out(1);
  for (int k = 0; k < n; ++k) out *= factorial(k);
  return out;
}

ExactScalar macmahon(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, "macmahon arguments must be nonnegative");
  return superfactorial(a) * superfactorial(b) * superfactorial(c) *
         superfactorial(a + b + c) /
         (superfactorial(a + b) * superfactorial(b + c) * superfactorial(c + a));
}

ExactScalar clp_formula(int m, int n, const std::vector<int>& xs) {
  require(m >= 0 && n >= 0, "dimensions must be nonnegative");
  require(static_cast<int>(xs.size()) == n, "need exactly n positions");
  for (size_t i = 0; i < xs.size(); ++i) {
    require(1 <= xs[i] && xs[i] <= m + n, "position out of range");
    require(i == 0 || xs[i - 1] < xs[i], "positions must be increasing");
  }
  ExactScalar out(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out *= ExactScalar(xs[j] - xs[i]);
      out /= ExactScalar(j - i);
    }
  }
  return out;
}

// ---- three-dent hexagon ----

ExactScalar eisenkolbl_bracket(int a, int b, int c, int r, int s, int t) {
  const ExactScalar A(a + 1), B(b + 1), C(c + 1);
  const ExactScalar R(r), S(s), Tt(t);
  const ExactScalar Rp(a + 2 - r), Sp(b + 2 - s), Tp(c + 2 - t);
  return A * B * C * Rp * Sp * Tp + A * B * C * R * S * Tt -
         R * S * Tt * Rp * Sp * Tp + A * C * Sp * Tp * R * S +
         A * B * Rp * Tp * S * Tt + B * C * Rp * Sp * R * Tt;
}

ExactScalar eisenkolbl_det_form(int a, int b, int c, int r, int s, int t) {
  require(r != 0 && s != 0 && t != 0 && r != a + 2 && s != b + 2 && t != c + 2,
          "determinant form needs nonzero dent offsets on both ends");
  const ExactScalar A(a + 1), B(b + 1), C(c + 1);
  const ExactScalar R(r), S(s), Tt(t);
  const ExactScalar Rp(a + 2 - r), Sp(b + 2 - s), Tp(c + 2 - t);
  const ExactScalar one(1);
  // det of [[1/r, 1/B, 1/t'], [-1/r', 1/s, 1/C], [-1/A, -1/s', 1/t]],
  // scaled by r s t r' s' t' A B C.
  const std::array<std::array<ExactScalar, 3>, 3> m = {{
      {one / R, one / B, one / Tp},
      {-(one / Rp), one / S, one / C},
      {-(one / A), -(one / Sp), one / Tt},
  }};
  const ExactScalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                          m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return R * S * Tt * Rp * Sp * Tp * A * B * C * det;
}

namespace {

ExactScalar eisenkolbl_prefactor(int a, int b, int c, int r, int s, int t) {
  ExactScalar pre = pochhammer(ExactScalar(r + 1), b) *
                    pochhammer(ExactScalar(s + 1), c) *
                    pochhammer(ExactScalar(t + 1), a) *
                    pochhammer(ExactScalar(a + 3 - r), c) *
                    pochhammer(ExactScalar(b + 3 - s), a) *
                    pochhammer(ExactScalar(c + 3 - t), b);
  ExactScalar num = superfactorial(a + 1) * superfactorial(b + 1) *
                    superfactorial(c + 1) * superfactorial(a + b + c + 3);
  ExactScalar den = superfactorial(b + c + 3) * superfactorial(a + c + 3) *
                    superfactorial(a + b + 3);
  return pre * num / den;
}

}  // namespace

ExactScalar eisenkolbl_formula(int a, int b, int c, int r, int s, int t) {
  require(0 <= r && r <= a + 2, "dent position r out of range");
  require(0 <= s && s <= b + 2, "dent position s out of range");
  require(0 <= t && t <= c + 2, "dent position t out of range");
  return eisenkolbl_prefactor(a, b, c, r, s, t) * eisenkolbl_bracket(a, b, c, r, s, t);
}

// ---- dent-and-notch hexagon counts ----

namespace {

ExactScalar mid_product(int x, int y, int z, int k) {
  const int m = std::min(x, y), M = std::max(x, y);
  ExactScalar out(1);
  for (int j = 1; j <= m; ++j) out *= ExactScalar(z + k + 1 + j).pow(j);
  for (int j = m + 1; j <= M; ++j) out *= ExactScalar(z + k + 1 + j).pow(m);
  for (int i = 1; i <= m - 1; ++i) out *= ExactScalar(z + k + M + 1 + i).pow(m - i);
  return out;
}

ExactScalar p_sum(int y, int k, int z, int l) {
  ExactScalar out(0);
  for (int i = 1; i <= k + 1; ++i) {
    ExactScalar term = ExactScalar(1) / (factorial(i - 1) * factorial(k - i + 1));
    if ((i - 1) % 2 == 1) term = -term;
    term *= pochhammer(ExactScalar(l - k + i), k - i + 1);
    term *= pochhammer(ExactScalar(l + y + 1), i - 1);
    term *= pochhammer(ExactScalar(z + 1), i - 1);
    term *= pochhammer(ExactScalar(z + i + 1), k - i + 1);
    out += term;
  }
  return out;
}

ExactScalar q_sum(int y, int k, int z, int l) {
  ExactScalar out(0);
  for (int i = 1; i <= k + 1; ++i) {
    ExactScalar term = ExactScalar(1) / (factorial(i - 1) * factorial(k - i + 1));
    if ((i - 1) % 2 == 1) term = -term;
    term *= pochhammer(ExactScalar(l - k + i), k - i + 1);
    term *= pochhammer(ExactScalar(l + y + 1), i - 1);
    term *= pochhammer(ExactScalar(l - k - z), i - 1);
    term *= pochhammer(ExactScalar(l - k - z + i), k - i + 1);
    out += term;
  }
  return out;
}

}  // namespace

ExactScalar p_poly(int x, int y, int k, int z, int l) {
  return pochhammer(ExactScalar(l + 1), y) * pochhammer(ExactScalar(z + k - l + 1), x) *
         mid_product(x, y, z, k) * p_sum(y, k, z, l);
}

ExactScalar d_factor(int y, int k, int z) {
  const int nu = std::min(y - 1, k);
  if (nu == -1) return ExactScalar(1) / pochhammer(ExactScalar(z + 1), k);
  ExactScalar out(1);
  for (int j = 1; j <= y + k - 2; ++j) {
    const int e = std::min({j, nu, y + k - 1 - j});
    if (e > 0) out *= ExactScalar(z + 1 + j).pow(e);
  }
  return out;
}

ExactScalar q_poly(int x, int y, int k, int z, int l) {
  return d_factor(y, k, z) * pochhammer(ExactScalar(l + 1), y) *
         pochhammer(ExactScalar(z + k - l + 1), x) * mid_product(x, y, z, k) *
         q_sum(y, k, z, l);
}

ExactScalar count_h_kl(int x, int y, int z, int k, int l) {
  require(x >= 0 && y >= 0 && z >= 0 && k >= 0, "parameters must be nonnegative");
  require(0 <= l && l <= z + k, "dent position l out of range");
  return macmahon(x, y, k) * p_poly(x, y, k, z, l) / p_poly(x, y, k, 0, 0);
}

ExactScalar count_h_prime_kl(int x, int y, int z, int k, int l) {
  require(x >= 0 && y >= 0 && z >= 0 && k >= 0, "parameters must be nonnegative");
  require(0 <= l && l <= z + k, "dent position l out of range");
  return binomial(x + k, k) * q_poly(x, y, k, z, l) / q_poly(x, y, k, 0, 0);
}

// ---- terminating Gauss evaluation ----

ExactScalar hyp2f1_terminating(int k, const ExactScalar& b, const ExactScalar& c) {
  require(k >= 0, "series length must be nonnegative");
  ExactScalar out(1);
  ExactScalar term(1);
  for (int i = 0; i < k; ++i) {
    ExactScalar num = ExactScalar(-k + i) * (b + ExactScalar(i));
    ExactScalar den = ExactScalar(i + 1) * (c + ExactScalar(i));
    if (den.is_zero()) {
      if (num.is_zero()) break;  // series terminated before the bad pole
      throw std::domain_error("lower parameter hits a nonpositive integer");
    }
    term *= num / den;
    out += term;
    if (term.is_zero()) break;
  }
  return out;
}

std::pair<ExactScalar, ExactScalar> verify_gauss(int k, int y, int z) {
  require(k >= 0, "k must be nonnegative");
  require(z >= 1, "z must be positive");
  ExactScalar lhs = hyp2f1_terminating(k, ExactScalar(k + y), ExactScalar(z));
  ExactScalar rhs = pochhammer(ExactScalar(z - y - k), k) / pochhammer(ExactScalar(z), k);
  return {lhs, rhs};
}

// ---- shape recognition ----

std::optional<std::array<int, 6>> match_hexagon(const Region& r) {
  if (r.empty()) return std::nullopt;
  int umin = 0, vmin = 0;
  bool have_up = false;
  for (const auto& c : r.cells()) {
    if (c.o != kUp) continue;
    if (!have_up || c.u < umin) umin = have_up ? std::min(umin, c.u) : c.u;
    if (!have_up || c.v < vmin) vmin = have_up ? std::min(vmin, c.v) : c.v;
    have_up = true;
  }
  if (!have_up) return std::nullopt;
  std::vector<TriCell> shifted;
  for (const auto& c : r.cells()) shifted.push_back({c.u - umin, c.v - vmin, c.o});
  int T = 0, umax = 0, vmax = 0, qmin = 0;
  bool first = true;
  for (const auto& c : shifted) {
    if (c.o != kUp) continue;
    T = std::max(T, c.u + c.v + 1);
    umax = first ? c.u : std::max(umax, c.u);
    vmax = first ? c.v : std::max(vmax, c.v);
    qmin = first ? c.u + c.v : std::min(qmin, c.u + c.v);
    first = false;
  }
  const int p = T - 1 - vmax, rr = T - 1 - umax, q = qmin;
  const std::array<int, 6> sides{p, T - p - rr, rr, T - q - rr, q, T - p - q};
  for (int s : sides) {
    if (s < 0) return std::nullopt;
  }
  try {
    if (hexagon_general(sides) == Region::from_cells(std::move(shifted))) return sides;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<TrapezoidMatch> match_t_region(const Region& r) {
  if (r.empty()) return std::nullopt;
  for (const Region& img : all_orientations(r)) {
    int vmax = 0;
    for (const auto& c : img.cells()) vmax = std::max(vmax, c.v);
    const int n = vmax + 1;  // all_orientations already puts vmin at 0
    int ubot = 0;
    bool have_bot = false;
    for (const auto& c : img.cells()) {
      if (c.v == 0 && c.o == kUp) {
        ubot = have_bot ? std::min(ubot, c.u) : c.u;
        have_bot = true;
      }
    }
    if (!have_bot) continue;
    int m = 0;
    for (const auto& c : img.cells()) {
      if (c.v == 0 && c.o == kUp) m = std::max(m, c.u - ubot + 1);
    }
    std::set<TriCell> have;
    for (const auto& c : img.cells()) have.insert({c.u - ubot, c.v, c.o});
    std::set<TriCell> full;
    for (int v = 0; v < n; ++v) {
      for (int u = -v; u <= m - 1; ++u) full.insert({u, v, kUp});
      for (int u = -v - 1; u <= m - 1; ++u) full.insert({u, v, kDown});
    }
    std::vector<int> xs;
    bool ok = true;
    for (const auto& c : full) {
      if (have.count(c)) continue;
      if (c.v != n - 1 || c.o != kDown) {
        ok = false;
        break;
      }
      xs.push_back(c.u + n + 1);
    }
    if (!ok || static_cast<int>(xs.size()) != n) continue;
    std::sort(xs.begin(), xs.end());
    if (!xs.empty() && (xs.front() < 1 || xs.back() > m + n)) continue;
    // Everything present must also lie inside the full trapezoid.
    bool subset = true;
    for (const auto& c : have) {
      if (!full.count(c)) {
        subset = false;
        break;
      }
    }
    if (!subset) continue;
    try {
      if (t_region(m, n, xs) == Region::from_cells({have.begin(), have.end()})) {
        return TrapezoidMatch{m, n, xs};
      }
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
  return std::nullopt;
}

std::optional<DentedMatch> match_h_kl(const Region& r) {
  if (r.empty()) return std::nullopt;
  for (const Region& img : all_orientations(r)) {
    // Frame: all_orientations translates min u and min v over all cells to 0.
    int T = 0, umax = 0, vmax = 0;
    int qmin = 1 << 30;
    bool have_up = false;
    for (const auto& c : img.cells()) {
      umax = std::max(umax, c.u);
      vmax = std::max(vmax, c.v);
      if (c.o == kUp) {
        T = std::max(T, c.u + c.v + 1);
        qmin = std::min(qmin, c.u + c.v);
        have_up = true;
      } else {
        qmin = std::min(qmin, c.u + c.v + 1);
      }
    }
    if (!have_up) continue;
    const int x = T - 1 - vmax, z = T - 1 - umax, y = qmin;
    const int k = T - x - y - z - 1;
    if (x < 0 || y < 0 || z < 0 || k < 0) continue;
    // Locate the single missing up-cell on the northwest column.
    std::vector<int> missing;
    for (int l = 0; l <= z + k; ++l) {
      if (!img.contains({0, y + l, kUp})) missing.push_back(l);
    }
    if (missing.size() != 1) continue;
    const int l = missing[0];
    for (bool prime : {false, true}) {
      if (!h_kl_region_valid(x, y, z, k, l, prime)) continue;
      Region want = prime ? h_prime_kl_region(x, y, z, k, l) : h_kl_region(x, y, z, k, l);
      if (want == img) return DentedMatch{x, y, z, k, l, prime};
    }
  }
  return std::nullopt;
}

// ---- unified counting ----

namespace {

std::mutex cache_mutex;
std::unordered_map<std::string, ExactScalar>& count_cache() {
  static std::unordered_map<std::string, ExactScalar> cache;
  return cache;
}

}  // namespace

ExactScalar closed_form_count(const Region& r, const MatchingOptions& opt) {
  if (!r.balanced()) return ExactScalar(0);
  ReducedRegion red = remove_forced(r);
  if (red.no_tilings) return ExactScalar(0);
  if (red.region.empty()) return ExactScalar(1);

  const std::string key = canonical_key(red.region);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = count_cache().find(key);
    if (it != count_cache().end()) return it->second;
  }

  ExactScalar out;
  bool done = false;
  if (auto hex = match_hexagon(red.region)) {
    const auto& s = *hex;
    if (s[0] == s[3] && s[1] == s[4] && s[2] == s[5]) {
      out = macmahon(s[0], s[1], s[2]);
      done = true;
    }
  }
  if (!done) {
    if (auto tz = match_t_region(red.region)) {
      out = clp_formula(tz->m, tz->n, tz->xs);
      done = true;
    }
  }
  if (!done) {
    if (auto dm = match_h_kl(red.region)) {
      out = dm->prime ? count_h_prime_kl(dm->x, dm->y, dm->z, dm->k, dm->l)
                      : count_h_kl(dm->x, dm->y, dm->z, dm->k, dm->l);
      done = true;
    }
  }
  if (!done) out = count_tilings(red.region, opt);

  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    count_cache().emplace(key, out);
  }
  return out;
}

// ---- Pfaffian reassembly of the dented-hexagon count ----

AssemblyResult theorem_4_1_assembly(int x, int y, int z, int k,
                                    const std::vector<Dent>& dents,
                                    const MatchingOptions& opt) {
  Region dented = h_k_region(x, y, z, k, dents);
  ExactScalar lhs = count_tilings(dented, opt);

  StarStrings star = h_star_strings(x, y, z, k, dents);
  ExactScalar mstar = closed_form_count(star.region, opt);

  if (k == 0) {
    ExactScalar rhs = mstar;
    return {lhs, rhs, lhs - rhs, mstar};
  }

  // The marked cells must sit in this cyclic order on a dual-graph face.
  WeightedPlanarGraph dual = dual_graph(star.region);
  FaceSelection sel{&dual, dual_indices(star.region, star.marked), std::nullopt};
  if (!validate_cyclic_order(sel)) {
    throw std::logic_error("marked cells are not in cyclic boundary order");
  }

  const int n = 2 * k;
  Matrix a(n, std::vector<ExactScalar>(n, ExactScalar(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ExactScalar mij =
          closed_form_count(star.region.minus({star.marked[i], star.marked[j]}), opt);
      a[i][j] = mij;
      a[j][i] = -mij;
    }
  }
  ExactScalar pf = pfaffian(SkewMatrix(a));
  ExactScalar rhs = pf / mstar.pow(static_cast<unsigned long>(k - 1));
  return {lhs, rhs, lhs - rhs, mstar};
}

}  // namespace matchings
