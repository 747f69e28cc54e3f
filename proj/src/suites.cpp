// Implementation of the verification sweeps shared by the CLI and the
// acceptance driver.
#include "matchings/suites.hpp"

#include <algorithm>
#include <array>
#include <cstdarg>
#include <cstdio>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "matchings/condensation.hpp"
#include "matchings/corpus.hpp"
#include "matchings/formulas.hpp"
#include "matchings/json_io.hpp"
#include "matchings/lattice.hpp"

namespace matchings {
namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return std::string(buf);
}

std::string join_ids(const WeightedPlanarGraph& g, const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += g.vertex_id(vs[i]);
  }
  return out;
}

void record(SuiteReport& r, bool ok, const std::string& key,
            const std::string& detail = "", const std::string& replay = "") {
  ++r.instances;
  if (ok) {
    r.lines.push_back("ok " + key);
  } else {
    ++r.failures;
    r.lines.push_back("FAIL " + key + (detail.empty() ? "" : " : " + detail));
    if (!replay.empty()) r.replays.push_back(replay);
  }
}

std::string graph_replay(const CorpusGraph& g, const std::vector<int>& marked) {
  nlohmann::json j;
  j["graph"] = nlohmann::json::parse(graph_to_json(g.graph));
  nlohmann::json ids = nlohmann::json::array();
  for (int v : marked) ids.push_back(g.graph.vertex_id(v));
  j["marked"] = ids;
  return j.dump();
}

// One corpus graph plus 2k marked boundary vertices in ascending boundary
// order.  When pendant is set the marks include the degree-1 vertex and its
// attachment; att_pos/pen_pos are their indices inside marked.
struct DrawnInstance {
  CorpusGraph g;
  std::vector<int> marked;
  int att_pos = -1;
  int pen_pos = -1;
};

DrawnInstance draw_boundary_instance(CorpusGenerator& gen, int two_k, bool pendant) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    CorpusGraph g = pendant ? gen.grid(true) : gen.next(false);
    if (g.graph.vertex_count() % 2 != 0) continue;
    if (static_cast<int>(g.outer.size()) < two_k) continue;
    if (!pendant) {
      std::vector<int> marked = gen.marked_on_boundary(g, two_k);
      return {std::move(g), std::move(marked), -1, -1};
    }
    int pa = -1, pp = -1;
    for (int i = 0; i < static_cast<int>(g.outer.size()); ++i) {
      if (g.outer[i] == g.attachment) pa = i;
      if (g.outer[i] == g.pendant) pp = i;
    }
    if (pa < 0 || pp < 0) continue;
    std::vector<int> pool;
    for (int i = 0; i < static_cast<int>(g.outer.size()); ++i)
      if (i != pa && i != pp) pool.push_back(i);
    if (static_cast<int>(pool.size()) < two_k - 2) continue;
    std::shuffle(pool.begin(), pool.end(), gen.rng());
    std::vector<int> pos(pool.begin(), pool.begin() + (two_k - 2));
    pos.push_back(pa);
    pos.push_back(pp);
    std::sort(pos.begin(), pos.end());
    std::vector<int> marked;
    int att_pos = -1, pen_pos = -1;
    for (int i = 0; i < static_cast<int>(pos.size()); ++i) {
      marked.push_back(g.outer[pos[i]]);
      if (pos[i] == pa) att_pos = i;
      if (pos[i] == pp) pen_pos = i;
    }
    return {std::move(g), std::move(marked), att_pos, pen_pos};
  }
  throw std::runtime_error("corpus draw could not satisfy the instance constraints");
}

// Four ascending boundary vertices whose colors alternate.
std::vector<int> alternating_four(CorpusGenerator& gen, const CorpusGraph& g) {
  if (static_cast<int>(g.outer.size()) < 4) return {};
  for (int t = 0; t < 400; ++t) {
    std::vector<int> m = gen.marked_on_boundary(g, 4);
    if (g.color[m[0]] == g.color[m[2]] && g.color[m[1]] == g.color[m[3]] &&
        g.color[m[0]] != g.color[m[1]]) {
      return m;
    }
  }
  return {};
}

}  // namespace

SuiteReport suite_kuo4(std::uint64_t seed, int trials, const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "kuo4";
  report.seed = seed;
  CorpusGenerator gen(seed);
  CondensationOptions copt;
  copt.matching = opt;
  for (int i = 0; i < trials; ++i) {
    CorpusGraph g;
    int guard = 0;
    do {
      g = gen.next(false);
    } while ((g.graph.vertex_count() % 2 != 0 || g.outer.size() < 4) && ++guard < 200);
    std::vector<int> m = gen.marked_on_boundary(g, 4);
    ExactScalar r_gen = verify_kuo_4pt(g.graph, m[0], m[1], m[2], m[3],
                                       KuoVariant::general, copt);
    record(report, r_gen.is_zero(),
           fmt("kuo4 i=%03d variant=general marked=", i) + join_ids(g.graph, m),
           "residual=" + r_gen.str(), graph_replay(g, m));
    std::vector<int> mb = alternating_four(gen, g);
    if (mb.empty()) {
      // Tree-like boundaries may admit no color-alternating 4-tuple in walk
      // order; the general variant above already covered this graph.
      record(report, true, fmt("kuo4 i=%03d variant=bipartite skipped=1", i));
      continue;
    }
    ExactScalar r_bip = verify_kuo_4pt(g.graph, mb[0], mb[1], mb[2], mb[3],
                                       KuoVariant::bipartite, copt);
    record(report, r_bip.is_zero(),
           fmt("kuo4 i=%03d variant=bipartite marked=", i) + join_ids(g.graph, mb),
           "residual=" + r_bip.str(), graph_replay(g, mb));
  }
  return report;
}

SuiteReport suite_thm21(std::uint64_t seed, int trials, int kmax, bool use_oracle,
                        const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "thm21";
  report.seed = seed;
  CorpusGenerator gen(seed);
  CondensationOptions copt;
  copt.use_oracle = use_oracle;
  copt.matching = opt;
  for (int k = 1; k <= kmax; ++k) {
    const int per_k = std::max(1, trials / k);
    for (int i = 0; i < per_k; ++i) {
      const bool pendant = (i % 25 == 0);
      DrawnInstance inst = draw_boundary_instance(gen, 2 * k, pendant);
      const std::string key = fmt("thm21 k=%d i=%03d pend=%d marked=", k, i, pendant ? 1 : 0) +
                              join_ids(inst.g.graph, inst.marked);
      const std::string replay = graph_replay(inst.g, inst.marked);
      if (!validate_cyclic_order({&inst.g.graph, inst.marked, std::nullopt})) {
        record(report, false, key, "cyclic-order validation rejected the marks", replay);
        continue;
      }
      ExactScalar resid = verify_theorem_2_1(inst.g.graph, inst.marked, copt);
      bool ok = resid.is_zero();
      std::string detail = "residual=" + resid.str();
      if (ok && pendant) {
        std::vector<int> swapped = inst.marked;
        std::swap(swapped[inst.att_pos], swapped[inst.pen_pos]);
        if (!validate_cyclic_order({&inst.g.graph, swapped, std::nullopt})) {
          ok = false;
          detail = "swapped pending-edge order rejected by validation";
        } else {
          ExactScalar resid2 = verify_theorem_2_1(inst.g.graph, swapped, copt);
          if (!resid2.is_zero()) {
            ok = false;
            detail = "swapped pending-edge residual=" + resid2.str();
          }
        }
      }
      record(report, ok, key, detail, replay);
    }
  }
  return report;
}

SuiteReport suite_prop22(std::uint64_t seed, int trials, int kmax,
                         const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "prop22";
  report.seed = seed;
  CorpusGenerator gen(seed);
  CondensationOptions copt;
  copt.matching = opt;
  for (int k = 1; k <= kmax; ++k) {
    const int per_k = std::max(1, trials / k);
    for (int i = 0; i < per_k; ++i) {
      const bool pendant = (i % 25 == 0);
      DrawnInstance inst = draw_boundary_instance(gen, 2 * k, pendant);
      const std::string key = fmt("prop22 k=%d i=%03d pend=%d marked=", k, i, pendant ? 1 : 0) +
                              join_ids(inst.g.graph, inst.marked);
      const std::string replay = graph_replay(inst.g, inst.marked);
      if (!validate_cyclic_order({&inst.g.graph, inst.marked, std::nullopt})) {
        record(report, false, key, "cyclic-order validation rejected the marks", replay);
        continue;
      }
      auto [lhs, rhs] = verify_prop_2_2(inst.g.graph, inst.marked, copt);
      record(report, lhs == rhs, key,
             "lhs=" + lhs.str() + " rhs=" + rhs.str(), replay);
    }
  }
  return report;
}

SuiteReport suite_cor24(std::uint64_t seed, int trials, int kmax,
                        const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "cor24";
  report.seed = seed;
  CorpusGenerator gen(seed);
  CondensationOptions copt;
  copt.matching = opt;
  for (int k = 1; k <= kmax; ++k) {
    const int per_k = std::max(1, trials / k);
    for (int i = 0; i < per_k; ++i) {
      // Balanced bipartite graphs with an ascending boundary selection whose
      // first half lies in one color class and whose second half lies in the
      // other (the (a_1..a_k, b_k..b_1) pattern).
      std::vector<int> m;
      CorpusGraph g;
      for (int attempt = 0; attempt < 60 && m.empty(); ++attempt) {
        g = gen.hex_dual();
        int ones = 0;
        for (int c : g.color) ones += c;
        if (2 * ones != g.graph.vertex_count()) continue;
        if (static_cast<int>(g.outer.size()) < 2 * k) continue;
        for (int t = 0; t < 400; ++t) {
          std::vector<int> cand = gen.marked_on_boundary(g, 2 * k);
          bool front = true, back = true;
          for (int j = 1; j < k; ++j) front &= (g.color[cand[j]] == g.color[cand[0]]);
          for (int j = k + 1; j < 2 * k; ++j) back &= (g.color[cand[j]] == g.color[cand[k]]);
          if (front && back && g.color[cand[0]] != g.color[cand[k]]) {
            m = cand;
            break;
          }
        }
      }
      if (m.empty()) {
        record(report, false, fmt("cor24 k=%d i=%03d", k, i),
               "no colored boundary pattern found");
        continue;
      }
      std::vector<int> as(m.begin(), m.begin() + k);
      std::vector<int> bs(m.rbegin(), m.rbegin() + k);  // reverse of (b_k..b_1)
      const std::string key = fmt("cor24 k=%d i=%03d as=", k, i) + join_ids(g.graph, as) +
                              " bs=" + join_ids(g.graph, bs);
      const std::string replay = graph_replay(g, m);
      ExactScalar resid = verify_corollary_2_4(g.graph, as, bs, copt);
      bool ok = resid.is_zero();
      std::string detail = "residual=" + resid.str();
      if (ok) {
        // Sign bookkeeping: reordering the condensation matrix into block form
        // must reproduce the direct Pfaffian through the recorded sign.
        SkewMatrix A = condensation_matrix(g.graph, m, copt);
        ExactScalar pf = pfaffian(A);
        std::vector<int> rows(k), cols(k);
        for (int j = 0; j < k; ++j) {
          rows[j] = j;
          cols[j] = 2 * k - 1 - j;
        }
        BlockSplit split = block_reorder(A, rows, cols);
        ExactScalar via_block = ExactScalar(split.sign) * pfaffian_block(split.block);
        if (pf != via_block) {
          ok = false;
          detail = "block-reordered Pfaffian " + via_block.str() +
                   " differs from direct Pfaffian " + pf.str();
        }
      }
      record(report, ok, key, detail, replay);
    }
  }
  return report;
}

SuiteReport suite_eisenkolbl(const std::vector<std::array<int, 3>>& tuples,
                             const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "eisenkolbl";
  for (const auto& t3 : tuples) {
    const int a = t3[0], b = t3[1], c = t3[2];
    for (int r = 0; r <= a + 2; ++r) {
      for (int s = 0; s <= b + 2; ++s) {
        for (int t = 0; t <= c + 2; ++t) {
          const std::string key = fmt("eis a=%d b=%d c=%d r=%d s=%d t=%d", a, b, c, r, s, t);
          ExactScalar direct = count_tilings(eisenkolbl_region(a, b, c, r, s, t), opt);
          ExactScalar formula = eisenkolbl_formula(a, b, c, r, s, t);
          bool ok = direct == formula;
          std::string detail = "direct=" + direct.str() + " formula=" + formula.str();
          const int rp = a + 2 - r, sp = b + 2 - s, tp = c + 2 - t;
          if (ok && r && s && t && rp && sp && tp) {
            ExactScalar br = eisenkolbl_bracket(a, b, c, r, s, t);
            ExactScalar det = eisenkolbl_det_form(a, b, c, r, s, t);
            if (br != det) {
              ok = false;
              detail = "bracket=" + br.str() + " determinant-form=" + det.str();
            }
          }
          record(report, ok, key, detail, key);
        }
      }
    }
  }
  return report;
}

SuiteReport suite_thm41(int xyzmax, int kmax, const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "thm41";
  for (int x = 0; x <= xyzmax; ++x)
    for (int y = 0; y <= xyzmax; ++y)
      for (int z = 0; z <= xyzmax; ++z)
        for (int k = 0; k <= kmax; ++k) {
          if (x + y + z + k == 0) continue;  // empty base region
          const std::array<int, 6> sides = {x, y + k, z, x + k, y, z + k};
          std::vector<Dent> slots;
          for (int i = 0; i < x + k; ++i) slots.push_back({HexSide::south, i});
          for (int i = 0; i < y + k; ++i) slots.push_back({HexSide::northeast, i});
          for (int i = 0; i < z + k; ++i) slots.push_back({HexSide::northwest, i});
          if (static_cast<int>(slots.size()) < k) continue;
          std::vector<int> comb(k);
          for (int i = 0; i < k; ++i) comb[i] = i;
          while (true) {
            std::vector<Dent> dents;
            std::string dkey;
            std::set<TriCell> cells;
            for (int i = 0; i < k; ++i) {
              dents.push_back(slots[comb[i]]);
              cells.insert(side_cell(sides, dents.back().side, dents.back().pos));
              const char* side = dents.back().side == HexSide::south        ? "s"
                                 : dents.back().side == HexSide::northeast ? "ne"
                                                                           : "nw";
              dkey += fmt("%s%s%d", i ? "+" : "", side, dents.back().pos);
            }
            // On degenerate hexagons two slots can name the same corner cell;
            // such a selection is not a placement of k distinct dents.
            const bool distinct = static_cast<int>(cells.size()) == k;
            const std::string key = fmt("hk x=%d y=%d z=%d k=%d dents=", x, y, z, k) +
                                    (dkey.empty() ? "none" : dkey);
            if (!distinct) {
              int pos = k - 1;
              const int n = static_cast<int>(slots.size());
              while (pos >= 0 && comb[pos] == n - k + pos) --pos;
              if (pos < 0) break;
              ++comb[pos];
              for (int j = pos + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
              continue;
            }
            try {
              AssemblyResult res = theorem_4_1_assembly(x, y, z, k, dents, opt);
              record(report, res.residual.is_zero(), key,
                     "lhs=" + res.lhs.str() + " rhs=" + res.rhs.str(), key);
            } catch (const std::exception& e) {
              record(report, false, key, e.what(), key);
            }
            // next k-combination of the slot list
            int pos = k - 1;
            const int n = static_cast<int>(slots.size());
            while (pos >= 0 && comb[pos] == n - k + pos) --pos;
            if (pos < 0) break;
            ++comb[pos];
            for (int j = pos + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          }
        }
  return report;
}

SuiteReport suite_prop42(int xyzmax, int kmax, const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "prop42";
  for (int prime = 0; prime <= 1; ++prime)
    for (int x = 0; x <= xyzmax; ++x)
      for (int y = 0; y <= xyzmax; ++y)
        for (int z = 0; z <= xyzmax; ++z)
          for (int k = 0; k <= kmax; ++k)
            for (int l = 0; l <= z + k; ++l) {
              if (!h_kl_region_valid(x, y, z, k, l, prime != 0)) continue;
              const std::string key =
                  fmt("hkl x=%d y=%d z=%d k=%d l=%d prime=%d", x, y, z, k, l, prime);
              Region region = prime ? h_prime_kl_region(x, y, z, k, l)
                                    : h_kl_region(x, y, z, k, l);
              ExactScalar direct = count_tilings(region, opt);
              ExactScalar formula = prime ? count_h_prime_kl(x, y, z, k, l)
                                          : count_h_kl(x, y, z, k, l);
              record(report, direct == formula, key,
                     "direct=" + direct.str() + " formula=" + formula.str(), key);
            }
  return report;
}

SuiteReport suite_recurrence48(int vmax, int ymax, int kmax, const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "recurrence48";
  for (int x = 1; x <= vmax; ++x)
    for (int y = 1; y <= ymax; ++y)
      for (int z = 1; z <= vmax; ++z)
        for (int k = 0; k <= kmax; ++k)
          for (int l = 1; l <= vmax && l <= z + k; ++l) {
            const std::string key = fmt("rec x=%d y=%d z=%d k=%d l=%d", x, y, z, k, l);
            ExactScalar fa = count_h_kl(x, y, z, k, l);
            ExactScalar fb = count_h_kl(x - 1, y, z + k, 0, l - 1);
            ExactScalar fc = count_h_kl(x - 1, y + 1, z, k, l - 1);
            ExactScalar fd = count_h_kl(x, y - 1, z + k, 0, l);
            ExactScalar fe = count_h_kl(x, y, z - 1, k, l - 1);
            ExactScalar ff = count_h_kl(x - 1, y, z + k + 1, 0, l);
            ExactScalar formula_resid = fa * fb - fc * fd - fe * ff;
            ExactScalar da = count_tilings(h_kl_region(x, y, z, k, l), opt);
            ExactScalar db = count_tilings(f_region(x - 1, y, z + k, l - 1), opt);
            ExactScalar dc = count_tilings(h_kl_region(x - 1, y + 1, z, k, l - 1), opt);
            ExactScalar dd = count_tilings(f_region(x, y - 1, z + k, l), opt);
            ExactScalar de = count_tilings(h_kl_region(x, y, z - 1, k, l - 1), opt);
            ExactScalar df = count_tilings(f_region(x - 1, y, z + k + 1, l), opt);
            ExactScalar direct_resid = da * db - dc * dd - de * df;
            bool ok = formula_resid.is_zero() && direct_resid.is_zero();
            record(report, ok, key,
                   "formula-residual=" + formula_resid.str() +
                       " direct-residual=" + direct_resid.str(),
                   key);
          }
  return report;
}

SuiteReport suite_thm43(int vmax, int ymax, int kmax, const MatchingOptions& opt) {
  SuiteReport report;
  report.name = "thm43";
  CondensationOptions copt;
  copt.matching = opt;
  for (int x = 1; x <= vmax; ++x)
    for (int y = 1; y <= ymax; ++y)
      for (int z = 1; z <= vmax; ++z)
        for (int k = 0; k <= kmax; ++k)
          for (int l = 1; l <= vmax && l <= z + k; ++l) {
            const std::string key = fmt("aug x=%d y=%d z=%d k=%d l=%d", x, y, z, k, l);
            AugmentedRegion aug = augmented_region(x, y, z, k, l);
            WeightedPlanarGraph dual = dual_graph(aug.region);
            std::vector<int> idx =
                dual_indices(aug.region, {aug.a, aug.b, aug.c, aug.d});
            ExactScalar resid =
                verify_kuo_unbalanced(dual, idx[0], idx[1], idx[2], idx[3], copt);
            bool ok = resid.is_zero();
            std::string detail = "residual=" + resid.str();
            if (ok) {
              // The six deletion counts equal the counts of the named regions.
              struct Check {
                std::vector<TriCell> doomed;
                Region expected;
                const char* label;
              };
              const Check checks[] = {
                  {{aug.b}, h_kl_region(x, y, z, k, l), "minus-b"},
                  {{aug.a, aug.c, aug.d}, f_region(x - 1, y, z + k, l - 1), "minus-acd"},
                  {{aug.a}, h_kl_region(x - 1, y + 1, z, k, l - 1), "minus-a"},
                  {{aug.b, aug.c, aug.d}, f_region(x, y - 1, z + k, l), "minus-bcd"},
                  {{aug.c}, f_region(x - 1, y, z + k + 1, l), "minus-c"},
                  {{aug.a, aug.b, aug.d}, h_kl_region(x, y, z - 1, k, l - 1), "minus-abd"},
              };
              for (const Check& ch : checks) {
                ExactScalar got = count_tilings(aug.region.minus(ch.doomed), opt);
                ExactScalar want = count_tilings(ch.expected, opt);
                if (got != want) {
                  ok = false;
                  detail = std::string(ch.label) + " count " + got.str() +
                           " differs from region count " + want.str();
                  break;
                }
              }
            }
            record(report, ok, key, detail, key);
          }
  return report;
}

SuiteReport suite_gauss(int kmax, int zmax) {
  SuiteReport report;
  report.name = "gauss";
  for (int k = 0; k <= kmax; ++k)
    for (int y = 0; y <= kmax; ++y)
      for (int z = 1; z <= zmax; ++z) {
        const std::string key = fmt("gauss k=%d y=%d z=%d", k, y, z);
        auto [lhs, rhs] = verify_gauss(k, y, z);
        record(report, lhs == rhs, key, "lhs=" + lhs.str() + " rhs=" + rhs.str(), key);
      }
  return report;
}

std::string format_report(const SuiteReport& r) {
  std::string out = "suite=" + r.name + " seed=" + std::to_string(r.seed) + "\n";
  for (const std::string& line : r.lines) out += line + "\n";
  out += "summary: suite=" + r.name + " instances=" + std::to_string(r.instances) +
         " failures=" + std::to_string(r.failures) +
         (r.failures == 0 ? " status=PASS" : " status=FAIL") + "\n";
  if (!r.replays.empty()) {
    out += "replay:\n";
    for (const std::string& rep : r.replays) out += rep + "\n";
  }
  return out;
}

}  // namespace matchings
