#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace oracle {

Grid grid(const binsimplex::BinMatrix& m) {
  Grid g;
  for (const auto& row : m.to_strings()) {
    std::vector<int> r;
    for (char c : row) r.push_back(c == '1');
    g.push_back(r);
  }
  return g;
}

binsimplex::BinMatrix bin(const Grid& g) {
  std::vector<std::string> rows;
  for (const auto& r : g) {
    std::string s;
    for (int v : r) s += v ? '1' : '0';
    rows.push_back(s);
  }
  std::vector<std::string_view> views(rows.begin(), rows.end());
  return binsimplex::BinMatrix::from_rows(std::span<const std::string_view>(views));
}

Grid transpose(const Grid& g) {
  if (g.empty()) return {};
  Grid t(g[0].size(), std::vector<int>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[0].size(); ++j) t[j][i] = g[i][j];
  return t;
}

long cofactor_det(const Grid& g) {
  const std::size_t n = g.size();
  if (n == 0) return 1;
  if (n == 1) return g[0][0];
  long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!g[0][j]) continue;
    Grid minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<int> r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) r.push_back(g[i][c]);
      minor.push_back(r);
    }
    long sub = cofactor_det(minor);
    total += (j % 2 == 0 ? 1 : -1) * sub;
  }
  return total;
}

QMat to_q(const Grid& g) {
  QMat q(g.size(), std::vector<mpq_class>(g.empty() ? 0 : g[0].size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g[i].size(); ++j) q[i][j] = g[i][j];
  return q;
}

std::optional<QMat> inverse(const QMat& m) {
  const std::size_t n = m.size();
  QMat a = m, inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    mpq_class d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

QMat product(const QMat& a, const QMat& b) {
  QMat c(a.size(), std::vector<mpq_class>(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

QMat gram(const Grid& p) {
  QMat pq = to_q(p);
  return product(to_q(transpose(p)), pq);
}

std::optional<QMat> transposed_inverse(const Grid& p) {
  auto inv = inverse(to_q(p));
  if (!inv) return std::nullopt;
  QMat t(inv->size(), std::vector<mpq_class>(inv->size()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) t[i][j] = (*inv)[j][i];
  return t;
}

std::string verdict(const Grid& p) {
  auto b = inverse(gram(p));
  if (!b) return "degenerate";
  const std::size_t k = b->size();
  bool strict = true, weak = true;
  for (std::size_t i = 0; i < k; ++i) {
    mpq_class sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      sum += (*b)[i][j];
      if (i == j) continue;
      if ((*b)[i][j] > 0) weak = false;
      if ((*b)[i][j] >= 0) strict = false;
    }
    if (sum < 0) weak = false;
    if (sum <= 0) strict = false;
  }
  if (strict) return "acute";
  return weak ? "nonobtuse" : "obtuse";
}

bool partly_decomposable(const Grid& a) {
  const std::size_t n = a.size();
  for (std::uint32_t rows = 1; rows + 1 < (1U << n); ++rows) {
    std::size_t zero_cols = 0;
    for (std::size_t j = 0; j < n; ++j) {
      bool zero = true;
      for (std::size_t i = 0; i < n && zero; ++i)
        if ((rows >> i) & 1U) zero = !a[i][j];
      zero_cols += zero;
    }
    if (zero_cols + static_cast<std::size_t>(__builtin_popcount(rows)) >= n) return true;
  }
  return false;
}

Grid reflect(const Grid& p, std::size_t c) {
  Grid out = p;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (j != c) out[i][j] = p[i][j] ^ p[i][c];
  return out;
}

Grid permute(const Grid& p, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Grid out(rows.size(), std::vector<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = p[rows[i]][cols[j]];
  return out;
}

std::string key(const Grid& p) {
  std::string s;
  for (const auto& r : p)
    for (int v : r) s += v ? '1' : '0';
  return s;
}

std::string orbit_minimum(const Grid& p) {
  const std::size_t n = p.size(), k = p.empty() ? 0 : p[0].size();
  std::vector<Grid> starts{p};
  for (std::size_t c = 0; c < k; ++c) starts.push_back(reflect(p, c));
  std::string best;
  std::vector<std::size_t> rows(n), cols(k);
  for (const auto& s : starts) {
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        std::string kk = key(permute(s, rows, cols));
        if (best.empty() || kk < best) best = kk;
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }
  return best;
}

namespace {

std::uint32_t encode(const Grid& g) {
  std::uint32_t code = 0;
  for (const auto& r : g)
    for (int v : r) code = (code << 1) | static_cast<std::uint32_t>(v);
  return code;
}

}  // namespace

Grid decode(std::uint32_t code, std::size_t n) {
  Grid g(n, std::vector<int>(n));
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = n; j-- > 0;) {
      g[i][j] = code & 1U;
      code >>= 1;
    }
  return g;
}

std::map<std::uint32_t, std::size_t> nonsingular_orbits(std::size_t n) {
  std::map<std::uint32_t, std::size_t> label;
  std::vector<std::size_t> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  if (n > 1) std::swap(swap01[0], swap01[1]);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  auto id = swap01;
  std::iota(id.begin(), id.end(), 0);
  std::size_t orbits = 0;
  for (std::uint32_t code = 0; code < (1U << (n * n)); ++code) {
    Grid g = decode(code, n);
    if (cofactor_det(g) == 0 || label.count(code)) continue;
    std::queue<Grid> todo;
    todo.push(g);
    label[code] = orbits;
    while (!todo.empty()) {
      Grid cur = todo.front();
      todo.pop();
      for (const Grid& next : {permute(cur, swap01, id), permute(cur, cycle, id), permute(cur, id, swap01),
                               permute(cur, id, cycle), reflect(cur, 0)}) {
        std::uint32_t c = encode(next);
        if (label.emplace(c, orbits).second) todo.push(next);
      }
    }
    ++orbits;
  }
  return label;
}

Grid subsimplex(const Grid& p, const std::vector<std::size_t>& ids) {
  const std::size_t n = p.size();
  auto vertex = [&](std::size_t id) {
    std::vector<int> v(n, 0);
    if (id > 0)
      for (std::size_t i = 0; i < n; ++i) v[i] = p[i][id - 1];
    return v;
  };
  auto base = vertex(ids[0]);
  Grid out(n, std::vector<int>(ids.size() - 1));
  for (std::size_t t = 1; t < ids.size(); ++t) {
    auto v = vertex(ids[t]);
    for (std::size_t i = 0; i < n; ++i) out[i][t - 1] = v[i] ^ base[i];
  }
  return out;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> labeled_trees(std::size_t m) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  if (m == 1) return {{}};
  if (m == 2) return {{{0, 1}}};
  std::vector<std::size_t> seq(m - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(m, 1);
    for (auto s : seq) ++degree[s];
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto s : seq) {
      std::size_t leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, s);
      --degree[leaf];
      --degree[s];
    }
    std::vector<std::size_t> rest;
    for (std::size_t v = 0; v < m; ++v)
      if (degree[v] == 1) rest.push_back(v);
    edges.emplace_back(rest[0], rest[1]);
    out.push_back(edges);
    std::size_t pos = 0;
    while (pos < seq.size() && ++seq[pos] == m) seq[pos++] = 0;
    if (pos == seq.size()) break;
  }
  return out;
}

std::string tree_minimum(std::size_t m, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string adj(m * m, '0');
    for (auto [a, b] : edges) {
      adj[perm[a] * m + perm[b]] = '1';
      adj[perm[b] * m + perm[a]] = '1';
    }
    if (best.empty() || adj < best) best = adj;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::size_t unlabeled_tree_count(std::size_t m) {
  std::set<std::string> seen;
  for (const auto& t : labeled_trees(m)) seen.insert(tree_minimum(m, t));
  return seen.size();
}

binsimplex::BinMatrix Rng::matrix(std::size_t rows, std::size_t cols, double density) {
  std::bernoulli_distribution coin(density);
  Grid g(rows, std::vector<int>(cols));
  for (auto& r : g)
    for (auto& v : r) v = coin(gen);
  return bin(g);
}

binsimplex::BinMatrix Rng::nonsingular(std::size_t n) {
  while (true) {
    auto m = matrix(n, n);
    auto inv = inverse(to_q(grid(m)));
    if (inv) return m;
  }
}

binsimplex::Permutation Rng::permutation(std::size_t n) {
  binsimplex::Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), gen);
  return p;
}

binsimplex::BinMatrix Rng::step(const binsimplex::BinMatrix& p) {
  switch (below(3)) {
    case 0:
      return binsimplex::permute(p, permutation(p.rows()), binsimplex::identity_permutation(p.cols()));
    case 1:
      return binsimplex::permute(p, binsimplex::identity_permutation(p.rows()), permutation(p.cols()));
    default:
      return binsimplex::xor_reflect(p, below(p.cols()));
  }
}

}  // namespace oracle
