// Verification sweeps: each suite checks one identity family over a corpus or
// parameter grid and reports per-instance pass/fail lines.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "matchings/matching.hpp"

namespace matchings {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;       // embedded even for deterministic sweeps
  int instances = 0;
  int failures = 0;
  std::vector<std::string> lines;     // "ok <key>" / "FAIL <key> <details>"
  std::vector<std::string> replays;   // serialized offending instances
  bool passed() const { return failures == 0; }
};

// Four-point condensation (bipartite and general forms) on random graphs.
SuiteReport suite_kuo4(std::uint64_t seed, int trials,
                       const MatchingOptions& opt = MatchingOptions::from_env());

// Pfaffian condensation for marked boundary 2k-tuples, k in [1,kmax]; entries
// counted by the exponential-time reference counter when use_oracle is set.
// Every run includes pending-edge instances checked in both endpoint orders.
SuiteReport suite_thm21(std::uint64_t seed, int trials, int kmax, bool use_oracle,
                        const MatchingOptions& opt = MatchingOptions::from_env());

// Laurent-style two-sided expansion of the same Pfaffian identity.
SuiteReport suite_prop22(std::uint64_t seed, int trials, int kmax,
                         const MatchingOptions& opt = MatchingOptions::from_env());

// Determinant form for bipartite selections, plus block-reordering sign
// consistency against the direct Pfaffian.
SuiteReport suite_cor24(std::uint64_t seed, int trials, int kmax,
                        const MatchingOptions& opt = MatchingOptions::from_env());

// Three-dent hexagon product formula vs direct counts for the given (a,b,c)
// tuples, all dent positions; also bracket-vs-determinant-form agreement on
// the domain where both apply.
SuiteReport suite_eisenkolbl(const std::vector<std::array<int, 3>>& tuples,
                             const MatchingOptions& opt = MatchingOptions::from_env());

// Dented-hexagon Pfaffian reassembly for all dent placements with k <= kmax,
// x,y,z <= xyzmax.
SuiteReport suite_thm41(int xyzmax, int kmax,
                        const MatchingOptions& opt = MatchingOptions::from_env());

// Dent-and-notch hexagon closed forms vs direct counts, both variants, for
// x,y,z <= xyzmax, k <= kmax, all valid l.
SuiteReport suite_prop42(int xyzmax, int kmax,
                         const MatchingOptions& opt = MatchingOptions::from_env());

// Two-term recurrence between the dented families: both sides evaluated from
// the closed formulas and, independently, from direct counts.
// x,z,l in [1,vmax], y in [1,ymax], k in [0,kmax].
SuiteReport suite_recurrence48(int vmax, int ymax, int kmax,
                               const MatchingOptions& opt = MatchingOptions::from_env());

// Unbalanced three-term condensation on the augmented regions, including the
// identification of all six deletion counts with their closed-form values.
SuiteReport suite_thm43(int vmax, int ymax, int kmax,
                        const MatchingOptions& opt = MatchingOptions::from_env());

// Terminating Gauss evaluation: k,y in [0,kmax], z in [1,zmax].
SuiteReport suite_gauss(int kmax, int zmax);

// Renders a report: header with the seed, per-instance lines, summary line.
std::string format_report(const SuiteReport& r);

}  // namespace matchings
