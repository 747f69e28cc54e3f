// Perfect-matching counters: reference recursion and frontier dynamic program.
#include "matchings/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace matchings {

MatchingOptions MatchingOptions::from_env() {
  MatchingOptions opt;
  if (const char* s = std::getenv("MATCHINGS_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) opt.max_states = static_cast<std::size_t>(v);
  }
  return opt;
}

namespace {

mpq_class oracle_rec(const WeightedPlanarGraph& g, std::vector<char>& covered, int from) {
  const int n = g.vertex_count();
  int i = from;
  while (i < n && covered[i]) ++i;
  if (i == n) return mpq_class(1);
  covered[i] = 1;
  mpq_class total(0);
  for (int e : g.incident()[i]) {
    int j = g.other_end(e, i);
    if (covered[j]) continue;
    covered[j] = 1;
    total += g.edges()[e].w.value() * oracle_rec(g, covered, i + 1);
    covered[j] = 0;
  }
  covered[i] = 0;
  return total;
}

struct StateHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

ExactScalar count_matchings_oracle(const WeightedPlanarGraph& g) {
  if (g.vertex_count() % 2 != 0) return 0;
  std::vector<char> covered(g.vertex_count(), 0);
  return ExactScalar(oracle_rec(g, covered, 0));
}

ExactScalar count_matchings_fast(const WeightedPlanarGraph& g, const MatchingOptions& opt) {
  const int n = g.vertex_count();
  if (n % 2 != 0) return 0;

  // Combine parallel edges: a matching uses at most one of them, so their
  // weights add.  adjacency[i] lists (j, total weight) with j != i.
  std::vector<std::map<int, mpq_class>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u][e.v] += e.w.value();
    adj[e.v][e.u] += e.w.value();
  }
  std::vector<int> maxnb(n, -1);
  for (int i = 0; i < n; ++i)
    for (const auto& [j, w] : adj[i]) maxnb[i] = std::max(maxnb[i], j);

  using StateMap = std::unordered_map<std::vector<int>, mpq_class, StateHash>;
  StateMap states;
  states.emplace(std::vector<int>{}, mpq_class(1));

  for (int i = 0; i < n; ++i) {
    StateMap next;
    auto add = [&next](std::vector<int> st, const mpq_class& w) {
      auto [it, fresh] = next.try_emplace(std::move(st), w);
      if (!fresh) it->second += w;
    };
    for (const auto& [st, w] : states) {
      // Match vertex i with an earlier unmatched neighbor.
      for (int j : st) {
        auto it = adj[i].find(j);
        if (it == adj[i].end()) continue;
        std::vector<int> rest;
        rest.reserve(st.size() - 1);
        for (int x : st)
          if (x != j) rest.push_back(x);
        add(std::move(rest), w * it->second);
      }
      // Leave vertex i unmatched for a later neighbor.
      if (maxnb[i] > i) {
        std::vector<int> grown = st;
        grown.insert(std::lower_bound(grown.begin(), grown.end(), i), i);
        add(std::move(grown), w);
      }
    }
    // Prune states holding a vertex that can no longer be matched.
    states.clear();
    for (auto& [st, w] : next) {
      bool viable = true;
      for (int v : st)
        if (maxnb[v] <= i) {
          viable = false;
          break;
        }
      if (viable && sgn(w) != 0) states.emplace(st, std::move(w));
    }
    if (states.size() > opt.max_states)
      throw ResourceLimitError("frontier state count " + std::to_string(states.size()) +
                               " exceeds cap " + std::to_string(opt.max_states));
    if (states.empty()) return 0;
  }
  auto it = states.find(std::vector<int>{});
  return it == states.end() ? ExactScalar(0) : ExactScalar(it->second);
}

}  // namespace matchings
