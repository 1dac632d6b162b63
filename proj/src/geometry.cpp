#include <binsimplex/geometry.hpp>

#include <binsimplex/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace binsimplex {

namespace {

// Signs of B = (XᵀX)⁻¹ entries and row sums. False when X is rank deficient.
bool inverse_gram_signs(const BinMatrix& x, std::vector<int>& signs, std::vector<int>& row_sums) {
  const std::size_t k = x.cols();
  if (k > x.rows()) return false;
  if (k <= detail::kSmallGramLimit) return detail::small_gram_inverse_signs(x, signs, row_sums);
  Adjugate a;
  try {
    a = adjugate(gram(x));
  } catch (const SingularMatrixError&) {
    return false;
  }
  // det of a nonsingular Gram matrix is positive, so adj has the signs of B
  signs.assign(k * k, 0);
  row_sums.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      signs[i * k + j] = sgn(a.adj(i, j));
      s += a.adj(i, j);
    }
    row_sums[i] = sgn(s);
  }
  return true;
}

Classification classify_from_signs(std::size_t k, const std::vector<int>& signs, const std::vector<int>& row_sums) {
  std::optional<Witness> first_zero;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      int s = signs[i * k + j];
      if (s > 0) return {Verdict::Obtuse, Witness{Witness::Kind::OffDiagonal, i, j}};
      if (s == 0 && !first_zero) first_zero = Witness{Witness::Kind::OffDiagonal, i, j};
    }
    if (row_sums[i] < 0) return {Verdict::Obtuse, Witness{Witness::Kind::RowSum, i, i}};
    if (row_sums[i] == 0 && !first_zero) first_zero = Witness{Witness::Kind::RowSum, i, i};
  }
  if (first_zero) return {Verdict::Nonobtuse, first_zero};
  return {Verdict::Acute, std::nullopt};
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Degenerate: return "degenerate";
    case Verdict::Obtuse: return "obtuse";
    case Verdict::Nonobtuse: return "nonobtuse";
    case Verdict::Acute: return "acute";
  }
  return "?";
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::Degenerate, Verdict::Obtuse, Verdict::Nonobtuse, Verdict::Acute})
    if (to_string(v) == text) return v;
  throw std::invalid_argument("unknown verdict: " + std::string(text));
}

Classification classify(const BinMatrix& p) {
  std::vector<int> signs, row_sums;
  if (p.cols() == 0 || !inverse_gram_signs(p, signs, row_sums)) return {Verdict::Degenerate, std::nullopt};
  return classify_from_signs(p.cols(), signs, row_sums);
}

Verdict classify_verdict(const BinMatrix& p) {
  std::vector<int> signs, row_sums;
  if (p.cols() == 0 || !inverse_gram_signs(p, signs, row_sums)) return Verdict::Degenerate;
  const std::size_t k = p.cols();
  bool strict = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (signs[i * k + j] > 0) return Verdict::Obtuse;
      if (signs[i * k + j] == 0) strict = false;
    }
    if (row_sums[i] < 0) return Verdict::Obtuse;
    if (row_sums[i] == 0) strict = false;
  }
  return strict ? Verdict::Acute : Verdict::Nonobtuse;
}

StochasticSplit stochastic_split(const ExactMatrix& q) {
  StochasticSplit s{ExactMatrix(q.rows(), q.cols()), ExactMatrix(q.rows(), q.cols())};
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      if (q(i, j) > 0) s.positive(i, j) = q(i, j);
      else if (q(i, j) < 0) s.negative(i, j) = -q(i, j);
    }
  return s;
}

bool is_doubly_stochastic(const ExactMatrix& d) {
  if (d.rows() != d.cols()) return false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (d(i, j) < 0) return false;
  for (const auto& s : d.row_sums())
    if (s != 1) return false;
  for (const auto& s : d.col_sums())
    if (s != 1) return false;
  return true;
}

bool is_row_substochastic(const ExactMatrix& c) {
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j) < 0) return false;
  for (const auto& s : c.row_sums())
    if (s >= 1) return false;
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> support(const ExactMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out.emplace_back(i, j);
  return out;
}

SignPatternReport sign_pattern_check(const BinMatrix& p, const ExactMatrix& q, SignMode mode) {
  if (!p.is_square() || q.rows() != p.rows() || q.cols() != p.cols())
    throw std::invalid_argument("sign_pattern_check: dimension mismatch");
  const std::size_t n = p.rows();
  ExactMatrix prod = q.transpose() * to_exact(to_int_matrix(p));
  if (!(prod == ExactMatrix::identity(n))) throw std::invalid_argument("sign_pattern_check: Q transpose times P is not the identity");

  SignPatternReport r;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int s = sgn(q(i, j));
      const bool one = p(i, j);
      if (s > 0 && !one) r.violations.push_back({i, j, "positive entry where P is 0"});
      if (s < 0 && one) r.violations.push_back({i, j, "negative entry where P is 1"});
      if (s == 0) {
        r.zero_entries.emplace_back(i, j);
        if (mode == SignMode::Strict) r.violations.push_back({i, j, "zero entry"});
      }
    }
  return r;
}

FacetNormals normals(const BinMatrix& p) {
  FacetNormals f{transposed_inverse(p), {}};
  f.sum = f.columns.row_sums();
  return f;
}

FacetProjector::FacetProjector(std::vector<BinVector> facet_vertices) : vertices_(std::move(facet_vertices)) {
  if (vertices_.empty()) throw DegenerateFacetError("facet has no vertices");
  const std::size_t n = vertices_.front().size();
  for (const auto& v : vertices_)
    if (v.size() != n) throw std::invalid_argument("facet vertex length mismatch");
  const std::size_t m = vertices_.size() - 1;
  if (m == 0) return;
  IntMatrix g(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i)
        s += (long(vertices_[a + 1][i]) - vertices_[0][i]) * (long(vertices_[b + 1][i]) - vertices_[0][i]);
      g(a, b) = s;
    }
  try {
    edge_gram_inverse_ = inverse(g);
  } catch (const SingularMatrixError&) {
    throw DegenerateFacetError("facet vertices are affinely dependent");
  }
}

Projection FacetProjector::project(const BinVector& v) const {
  const std::size_t n = vertices_.front().size();
  if (v.size() != n) throw std::invalid_argument("query vertex length mismatch");
  const std::size_t m = vertices_.size() - 1;
  // rhs = Eᵀ (v - v0)
  std::vector<long> rhs(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      rhs[a] += (long(vertices_[a + 1][i]) - vertices_[0][i]) * (long(v[i]) - vertices_[0][i]);
  ExactVector lambda(m, mpq_class(0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (rhs[b] != 0) lambda[a] += edge_gram_inverse_(a, b) * rhs[b];

  Projection pr;
  pr.barycentric.assign(m + 1, mpq_class(0));
  mpq_class rest = 1;
  for (std::size_t a = 0; a < m; ++a) {
    pr.barycentric[a + 1] = lambda[a];
    rest -= lambda[a];
  }
  pr.barycentric[0] = rest;
  pr.foot.assign(n, mpq_class(0));
  for (std::size_t a = 0; a <= m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      if (vertices_[a][i]) pr.foot[i] += pr.barycentric[a];
  pr.inside = std::all_of(pr.barycentric.begin(), pr.barycentric.end(), [](const mpq_class& x) { return x >= 0; });
  return pr;
}

Projection project_onto_facet(std::span<const BinVector> facet_vertices, const BinVector& v) {
  return FacetProjector(std::vector<BinVector>(facet_vertices.begin(), facet_vertices.end())).project(v);
}

std::vector<BinVector> simplex_vertices(const BinMatrix& p) {
  std::vector<BinVector> out;
  out.reserve(p.cols() + 1);
  out.push_back(BinVector::zero(p.rows()));
  for (auto& c : p.columns()) out.push_back(c);
  return out;
}

BinMatrix subsimplex(const BinMatrix& p, std::span<const std::size_t> vertex_ids, std::optional<std::size_t> chosen) {
  if (vertex_ids.size() < 2) throw DependentSubsetError("subsimplex needs at least two vertices");
  std::vector<bool> seen(p.cols() + 1, false);
  for (std::size_t id : vertex_ids) {
    if (id > p.cols()) throw std::out_of_range("vertex id out of range");
    if (seen[id]) throw DependentSubsetError("vertex listed twice");
    seen[id] = true;
  }
  const std::size_t base = chosen.value_or(vertex_ids.front());
  if (std::find(vertex_ids.begin(), vertex_ids.end(), base) == vertex_ids.end())
    throw std::invalid_argument("chosen vertex is not in the subset");
  const auto verts = simplex_vertices(p);
  std::vector<BinVector> cols;
  for (std::size_t id : vertex_ids)
    if (id != base) cols.push_back(verts[id] ^ verts[base]);
  BinMatrix out = BinMatrix::from_columns(cols);
  if (detail::small_rank(out) != out.cols()) throw DependentSubsetError("subset vertices are affinely dependent");
  return out;
}

std::size_t right_dihedral_count(const BinMatrix& p) {
  std::vector<int> signs, row_sums;
  if (!p.is_square() || !inverse_gram_signs(p, signs, row_sums)) throw SingularMatrixError("matrix is singular");
  const std::size_t n = p.cols();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (signs[i * n + j] == 0) ++count;
    if (row_sums[i] == 0) ++count;
  }
  return count;
}

}  // namespace binsimplex
