// Acceptance driver: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matchings/condensation.hpp"
#include "matchings/corpus.hpp"
#include "matchings/formulas.hpp"
#include "matchings/lattice.hpp"
#include "matchings/matching.hpp"
#include "matchings/pfaffian.hpp"
#include "matchings/suites.hpp"

using namespace matchings;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
  std::vector<std::string> diagnostics;
};

Outcome from_report(const SuiteReport& r) {
  Outcome out;
  out.ok = r.passed();
  out.detail = "instances=" + std::to_string(r.instances) +
               " failures=" + std::to_string(r.failures);
  if (!out.ok) {
    int shown = 0;
    for (const std::string& line : r.lines) {
      if (line.rfind("FAIL", 0) == 0 && shown < 3) {
        out.diagnostics.push_back(line);
        ++shown;
      }
    }
    for (const std::string& rep : r.replays) {
      if (static_cast<int>(out.diagnostics.size()) >= 6) break;
      out.diagnostics.push_back("replay " + rep);
    }
  }
  return out;
}

// Ascending n-subsets of {1..limit}.
bool next_subset(std::vector<int>& xs, int limit) {
  const int n = static_cast<int>(xs.size());
  int pos = n - 1;
  while (pos >= 0 && xs[pos] == limit - n + 1 + pos) --pos;
  if (pos < 0) return false;
  ++xs[pos];
  for (int j = pos + 1; j < n; ++j) xs[j] = xs[j - 1] + 1;
  return true;
}

Matrix random_skew(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> w(-9, 9);
  Matrix m(n, std::vector<ExactScalar>(n, ExactScalar(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m[i][j] = ExactScalar(w(rng));
      m[j][i] = -m[i][j];
    }
  return m;
}

}  // namespace

int main() {
  const MatchingOptions opt = MatchingOptions::from_env();
  const std::uint64_t seed = 42;

  struct Criterion {
    const char* description;
    double budget_seconds;
    std::function<Outcome()> run;
  };

  std::vector<Criterion> criteria;

  criteria.push_back({"four-point condensation on random weighted duals (suite kuo4, 200 graphs)",
                      10.0, [&] { return from_report(suite_kuo4(seed, 200, opt)); }});

  criteria.push_back(
      {"Pfaffian condensation with reference-counted entries (suite thm21, k<=3, pending edges both orders)",
       60.0, [&] {
         SuiteReport r = suite_thm21(seed, 200, 3, true, opt);
         Outcome out = from_report(r);
         bool has_pending = false;
         for (const std::string& line : r.lines)
           if (line.find("pend=1") != std::string::npos) has_pending = true;
         if (!has_pending) {
           out.ok = false;
           out.detail += " (no pending-edge instance in the run)";
         }
         return out;
       }});

  criteria.push_back({"two-sided expansion equality on the same corpus (suite prop22, k<=3)",
                      30.0, [&] { return from_report(suite_prop22(seed, 200, 3, opt)); }});

  criteria.push_back({"bipartite determinant form with block-sign bookkeeping (suite cor24, k<=3)",
                      30.0, [&] { return from_report(suite_cor24(seed, 200, 3, opt)); }});

  criteria.push_back({"boxed-count product formula vs direct counts, all sides <= 3", 30.0, [&] {
    Outcome out;
    out.ok = true;
    int n = 0;
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c) {
          ++n;
          ExactScalar direct = count_tilings(hexagon_general({a, b, c, a, b, c}), opt);
          if (direct != macmahon(a, b, c)) {
            out.ok = false;
            out.diagnostics.push_back("mismatch at a=" + std::to_string(a) +
                                      " b=" + std::to_string(b) + " c=" + std::to_string(c));
          }
        }
    out.detail = "instances=" + std::to_string(n);
    return out;
  }});

  criteria.push_back({"dented-trapezoid product formula, all m+n <= 8 plus a deep instance",
                      60.0, [&] {
    Outcome out;
    out.ok = true;
    int n_checked = 0;
    for (int s = 0; s <= 8; ++s)
      for (int n = 0; n <= s; ++n) {
        const int m = s - n;
        std::vector<int> xs(n);
        for (int i = 0; i < n; ++i) xs[i] = i + 1;
        do {
          ++n_checked;
          if (count_tilings(t_region(m, n, xs), opt) != clp_formula(m, n, xs)) {
            out.ok = false;
            out.diagnostics.push_back("mismatch at m=" + std::to_string(m) +
                                      " n=" + std::to_string(n));
          }
        } while (next_subset(xs, s));
      }
    ExactScalar deep = count_tilings(t_region(6, 5, {1, 3, 4, 7, 10}), opt);
    if (deep.str() != "1701" || clp_formula(6, 5, {1, 3, 4, 7, 10}).str() != "1701") {
      out.ok = false;
      out.diagnostics.push_back("deep trapezoid instance got " + deep.str());
    }
    ++n_checked;
    out.detail = "instances=" + std::to_string(n_checked);
    return out;
  }});

  criteria.push_back({"three-dent hexagon product formula, all dent positions at four shapes (suite eisenkolbl)",
                      300.0, [&] {
    return from_report(
        suite_eisenkolbl({{1, 1, 1}, {1, 1, 2}, {2, 1, 1}, {2, 2, 1}}, opt));
  }});

  criteria.push_back({"dented-hexagon Pfaffian reassembly over all dent placements (suite thm41, sides <= 2, k <= 3)",
                      300.0, [&] { return from_report(suite_thm41(2, 3, opt)); }});

  criteria.push_back({"dent-and-notch closed forms vs direct counts (suite prop42, sides <= 3, k <= 2)",
                      300.0, [&] { return from_report(suite_prop42(3, 2, opt)); }});

  criteria.push_back({"two-term recurrence from formulas and from direct counts (suite recurrence48)",
                      120.0, [&] { return from_report(suite_recurrence48(3, 3, 2, opt)); }});

  criteria.push_back({"unbalanced three-term condensation on augmented regions (suite thm43)",
                      60.0, [&] { return from_report(suite_thm43(3, 3, 2, opt)); }});

  criteria.push_back({"terminating Gauss evaluation grid (suite gauss, k,y <= 12, z <= 12)",
                      5.0, [&] { return from_report(suite_gauss(12, 12)); }});

  criteria.push_back({"Pfaffians square to determinants; block forms agree", 5.0, [&] {
    Outcome out;
    out.ok = true;
    std::mt19937_64 rng(2024);
    int n_checked = 0;
    for (int rep = 0; rep < 10; ++rep)
      for (int n : {2, 4, 6, 8}) {
        ++n_checked;
        SkewMatrix A(random_skew(rng, n));
        ExactScalar pf = pfaffian(A);
        if (pf * pf != determinant(A.entries())) {
          out.ok = false;
          out.diagnostics.push_back("square mismatch at dim " + std::to_string(n));
        }
      }
    std::uniform_int_distribution<long> w(-9, 9);
    for (int k = 1; k <= 5; ++k) {
      ++n_checked;
      Matrix B(k, std::vector<ExactScalar>(k));
      for (auto& row : B)
        for (auto& x : row) x = ExactScalar(w(rng));
      Matrix big(2 * k, std::vector<ExactScalar>(2 * k, ExactScalar(0)));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          big[i][k + j] = B[i][j];
          big[k + j][i] = -B[i][j];
        }
      if (pfaffian_block(B) != pfaffian(SkewMatrix(big))) {
        out.ok = false;
        out.diagnostics.push_back("block mismatch at k=" + std::to_string(k));
      }
    }
    out.detail = "instances=" + std::to_string(n_checked);
    return out;
  }});

  criteria.push_back({"reference recursion and frontier DP agree across the corpus", 60.0, [&] {
    Outcome out;
    out.ok = true;
    CorpusGenerator gen(777);
    int n_checked = 0;
    for (int i = 0; i < 60; ++i) {
      CorpusGraph g = gen.next(i % 5 == 4);
      ++n_checked;
      if (count_matchings_oracle(g.graph) != count_matchings_fast(g.graph, opt)) {
        out.ok = false;
        out.diagnostics.push_back("disagreement on corpus graph " + std::to_string(i));
      }
    }
    out.detail = "instances=" + std::to_string(n_checked);
    return out;
  }});

  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed <= criteria[i].budget_seconds;
    const bool pass = out.ok && in_budget;
    std::printf("%s %2zu %s%s%s (%.1fs)\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].description, out.detail.empty() ? "" : " ",
                out.detail.c_str(), elapsed);
    if (!in_budget)
      std::printf("     ^ exceeded the %.0fs budget\n", criteria[i].budget_seconds);
    for (const std::string& d : out.diagnostics)
      std::fprintf(stderr, "     %s\n", d.c_str());
    std::fflush(stdout);
    all_ok = all_ok && pass;
  }
  return all_ok ? 0 : 1;
}
