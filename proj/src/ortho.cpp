#include <binsimplex/ortho.hpp>

#include <binsimplex/errors.hpp>
#include <binsimplex/exact.hpp>
#include <binsimplex/geometry.hpp>
#include <binsimplex/structure.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace binsimplex {

bool is_orthogonal_simplex(const BinMatrix& p) {
  if (!p.is_square()) throw std::invalid_argument("is_orthogonal_simplex requires a square matrix");
  Verdict v = classify_verdict(p);
  if (v == Verdict::Degenerate) throw SingularMatrixError("matrix is singular");
  if (!is_nonobtuse(v)) return false;
  auto d = block_triangular_form(p);
  return std::all_of(d.blocks.begin(), d.blocks.end(), [](const Block& b) { return b.size() == 1; });
}

std::vector<BinMatrix> enumerate_upper_triangular_ortho(std::size_t n) {
  if (n < 1 || n > 8) throw std::invalid_argument("upper triangular enumeration needs 1 <= n <= 8");
  std::vector<BinMatrix> level{BinMatrix::identity(1)};
  for (std::size_t m = 1; m < n; ++m) {
    std::vector<BinMatrix> next;
    next.reserve(level.size() * (m + 1));
    for (const auto& p : level) {
      for (std::size_t r = 0; r <= m; ++r) {
        // column m of the new matrix: r = 0 is the zero column, else column r-1 of P, and a 1 below
        std::vector<Word> words(p.row_words());
        for (std::size_t i = 0; i < m; ++i)
          if (r > 0 && p(i, r - 1)) words[i] |= Word{1} << m;
        words.push_back(Word{1} << m);
        next.emplace_back(m + 1, std::move(words));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::string tree_encoding(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (nodes == 0) return "";
  if (edges.size() + 1 != nodes) throw std::invalid_argument("not a tree: wrong edge count");
  std::vector<std::vector<std::size_t>> adj(nodes);
  for (auto [a, b] : edges) {
    if (a >= nodes || b >= nodes) throw std::out_of_range("tree node out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t u : adj[v])
        if (!seen[u]) {
          seen[u] = true;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != nodes) throw std::invalid_argument("not a tree: disconnected");
  }
  // centers by leaf peeling
  std::vector<std::size_t> deg(nodes), layer;
  for (std::size_t v = 0; v < nodes; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t left = nodes;
  while (left > 2) {
    left -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t u : adj[v])
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::function<std::string(std::size_t, std::size_t)> code = [&](std::size_t v, std::size_t parent) {
    std::vector<std::string> kids;
    for (std::size_t u : adj[v])
      if (u != parent) kids.push_back(code(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::size_t seen = 0;
  std::string best;
  for (std::size_t c : layer) {
    std::string s = code(c, c);
    if (seen++ == 0 || s < best) best = s;
  }
  return best;
}

OrthoTree spanning_tree(const BinMatrix& p) {
  if (!is_orthogonal_simplex(p)) throw NotOrthogonalError("matrix does not represent an orthogonal simplex");
  auto d = block_triangular_form(p);
  OrthoTree t;
  t.nodes = p.cols() + 1;
  for (const auto& b : d.blocks) {
    std::size_t base = b.strip_column ? *b.strip_column + 1 : 0;
    t.edges.emplace_back(base, b.cols.front() + 1);
  }
  std::sort(t.edges.begin(), t.edges.end());
  t.degrees.assign(t.nodes, 0);
  for (auto [a, b] : t.edges) {
    ++t.degrees[a];
    ++t.degrees[b];
  }
  t.encoding = tree_encoding(t.nodes, t.edges);
  return t;
}

}  // namespace binsimplex
