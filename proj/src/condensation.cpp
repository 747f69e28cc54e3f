// Assembles condensation matrices and evaluates each identity's residual.
#include "matchings/condensation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace matchings {

namespace {

void check_marked(const WeightedPlanarGraph& g, const std::vector<int>& marked) {
  if (marked.size() < 2 || marked.size() % 2 != 0)
    throw std::invalid_argument("marked list must have even length >= 2");
  std::set<int> s(marked.begin(), marked.end());
  if (s.size() != marked.size())
    throw std::invalid_argument("marked vertices must be distinct");
  for (int v : marked)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("marked vertex index out of range");
}

ExactScalar count_minus(const WeightedPlanarGraph& g, const std::vector<int>& doomed,
                        const CondensationOptions& opt) {
  return count_matchings(delete_vertices(g, doomed), opt);
}

}  // namespace

ExactScalar count_matchings(const WeightedPlanarGraph& g, const CondensationOptions& opt) {
  return opt.use_oracle ? count_matchings_oracle(g)
                        : count_matchings_fast(g, opt.matching);
}

SkewMatrix condensation_matrix(const WeightedPlanarGraph& g,
                               const std::vector<int>& marked,
                               const CondensationOptions& opt) {
  check_marked(g, marked);
  const int n = static_cast<int>(marked.size());
  Matrix a(n, std::vector<ExactScalar>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ExactScalar m = count_minus(g, {marked[i], marked[j]}, opt);
      a[i][j] = m;
      a[j][i] = -m;
    }
  }
  return SkewMatrix(std::move(a));
}

ExactScalar verify_theorem_2_1(const WeightedPlanarGraph& g,
                               const std::vector<int>& marked,
                               const CondensationOptions& opt) {
  check_marked(g, marked);
  const int k = static_cast<int>(marked.size()) / 2;
  ExactScalar mg = count_matchings(g, opt);
  ExactScalar mall = count_minus(g, marked, opt);
  ExactScalar lhs = mg.pow(static_cast<unsigned long>(k - 1)) * mall;
  return lhs - pfaffian(condensation_matrix(g, marked, opt));
}

std::pair<ExactScalar, ExactScalar> verify_prop_2_2(const WeightedPlanarGraph& g,
                                                    const std::vector<int>& marked,
                                                    const CondensationOptions& opt) {
  check_marked(g, marked);
  const int n = static_cast<int>(marked.size());
  ExactScalar lhs = count_matchings(g, opt) * count_minus(g, marked, opt);
  ExactScalar rhs = 0;
  for (int j = 2; j <= n; ++j) {  // 1-based position of a_j; a_1 pairs with each a_j
    std::vector<int> pair = {marked[0], marked[j - 1]};
    std::vector<int> complement;
    for (int t = 1; t < n; ++t)
      if (t != j - 1) complement.push_back(marked[t]);
    ExactScalar term = count_minus(g, pair, opt) * count_minus(g, complement, opt);
    if (j % 2 == 0)
      rhs += term;
    else
      lhs += term;
  }
  return {lhs, rhs};
}

ExactScalar verify_corollary_2_4(const WeightedPlanarGraph& g,
                                 const std::vector<int>& as, const std::vector<int>& bs,
                                 const CondensationOptions& opt) {
  if (as.empty() || as.size() != bs.size())
    throw std::invalid_argument("need equally many as and bs, at least one each");
  std::vector<int> all = as;
  all.insert(all.end(), bs.begin(), bs.end());
  check_marked(g, all);
  std::vector<int> color = bipartition(g);  // throws if not bipartite
  int n0 = static_cast<int>(std::count(color.begin(), color.end(), 0));
  if (2 * n0 != g.vertex_count())
    throw std::invalid_argument("color classes must have equal sizes");
  for (int a : as)
    if (color[a] != color[as[0]])
      throw std::invalid_argument("all as must share one color class");
  for (int b : bs)
    if (color[b] == color[as[0]])
      throw std::invalid_argument("all bs must lie in the other color class");

  const int k = static_cast<int>(as.size());
  ExactScalar lhs =
      count_matchings(g, opt).pow(static_cast<unsigned long>(k - 1)) * count_minus(g, all, opt);
  Matrix m(k, std::vector<ExactScalar>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = count_minus(g, {as[i], bs[j]}, opt);
  return lhs - determinant(m);
}

ExactScalar verify_kuo_4pt(const WeightedPlanarGraph& g, int a, int b, int c, int d,
                           KuoVariant variant, const CondensationOptions& opt) {
  check_marked(g, {a, b, c, d});
  if (variant == KuoVariant::bipartite) {
    std::vector<int> color = bipartition(g);
    if (color[a] != color[c] || color[b] != color[d] || color[a] == color[b])
      throw std::invalid_argument("bipartite variant needs a,c and b,d in opposite classes");
  }
  ExactScalar lhs = count_matchings(g, opt) * count_minus(g, {a, b, c, d}, opt);
  ExactScalar rhs = count_minus(g, {a, b}, opt) * count_minus(g, {c, d}, opt) +
                    count_minus(g, {a, d}, opt) * count_minus(g, {b, c}, opt);
  if (variant == KuoVariant::general)
    rhs -= count_minus(g, {a, c}, opt) * count_minus(g, {b, d}, opt);
  return lhs - rhs;
}

ExactScalar verify_kuo_unbalanced(const WeightedPlanarGraph& g, int a, int b, int c,
                                  int d, const CondensationOptions& opt) {
  check_marked(g, {a, b, c, d});
  std::vector<int> color = bipartition(g);
  int v1 = color[a];
  if (color[b] != v1 || color[c] != v1 || color[d] == v1)
    throw std::invalid_argument("need a,b,c in one class and d in the other");
  long n1 = std::count(color.begin(), color.end(), v1);
  long n2 = g.vertex_count() - n1;
  if (n1 != n2 + 1)
    throw std::invalid_argument("class containing a,b,c must exceed the other by one");
  return count_minus(g, {b}, opt) * count_minus(g, {a, c, d}, opt) -
         count_minus(g, {a}, opt) * count_minus(g, {b, c, d}, opt) -
         count_minus(g, {c}, opt) * count_minus(g, {a, b, d}, opt);
}

BlockSplit block_reorder(const SkewMatrix& A, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
  const int n = A.dim();
  const int k = static_cast<int>(rows.size());
  if (static_cast<int>(cols.size()) != k || 2 * k != n)
    throw std::invalid_argument("rows and cols must split the index set in half");
  std::vector<int> perm = rows;
  perm.insert(perm.end(), cols.begin(), cols.end());
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("rows and cols must partition the indices");
    seen[v] = 1;
  }
  // Checkerboard zero pattern: same-class entries must vanish.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!A.at(rows[i], rows[j]).is_zero() || !A.at(cols[i], cols[j]).is_zero())
        throw std::invalid_argument("zero-pattern violation in block_reorder");
    }
  // Sign of the permutation old-index <- new-position, by cycle parity.
  std::vector<char> vis(n, 0);
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    if (vis[i]) continue;
    int len = 0;
    int j = i;
    while (!vis[j]) {
      vis[j] = 1;
      j = perm[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  Matrix b(k, std::vector<ExactScalar>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b[i][j] = A.at(perm[i], perm[k + j]);
  return BlockSplit{std::move(b), sign};
}

}  // namespace matchings
