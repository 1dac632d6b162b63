#include <binsimplex/neighbors.hpp>

#include <binsimplex/errors.hpp>
#include <binsimplex/structure.hpp>

#include <algorithm>
#include <stdexcept>

namespace binsimplex {

namespace {

constexpr std::size_t kMaxSearchDim = 24;

void check_facet(const BinMatrix& p, std::size_t facet) {
  if (!p.is_square()) throw std::invalid_argument("facet analysis requires a square matrix");
  if (facet > p.cols()) throw std::out_of_range("facet index out of range");
}

bool in_cube(const ExactVector& x) {
  return std::all_of(x.begin(), x.end(), [](const mpq_class& v) { return v >= 0 && v <= 1; });
}

}  // namespace

std::vector<BinVector> facet_vertices(const BinMatrix& p, std::size_t facet) {
  check_facet(p, facet);
  auto all = simplex_vertices(p);
  all.erase(all.begin() + static_cast<std::ptrdiff_t>(facet));
  return all;
}

BinVector opposite_vertex(const BinMatrix& p, std::size_t facet) {
  check_facet(p, facet);
  return facet == 0 ? BinVector::zero(p.rows()) : p.column(facet - 1);
}

BinMatrix complete_facet(const BinMatrix& p, std::size_t facet, const BinVector& v) {
  check_facet(p, facet);
  if (facet > 0) return p.with_column(facet - 1, v);
  std::vector<Word> words(p.row_words());
  for (std::size_t i = 0; i < words.size(); ++i)
    if (v[i]) words[i] ^= low_mask(p.cols());
  return BinMatrix(p.cols(), std::move(words));
}

bool facet_in_cube_facet(std::span<const BinVector> vertices) {
  if (vertices.empty()) return false;
  const std::size_t n = vertices.front().size();
  Word all_and = low_mask(n), all_or = 0;
  for (const auto& v : vertices) {
    all_and &= v.bits();
    all_or |= v.bits();
  }
  // constant 1 somewhere, or constant 0 somewhere
  return all_and != 0 || all_or != low_mask(n);
}

std::size_t NeighborReport::other_candidates() const {
  return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(),
                                                [&](const BinVector& v) { return v != opposite; }));
}

NeighborReport neighbor_search(const BinMatrix& p, std::size_t facet, NeighborOptions opts) {
  check_facet(p, facet);
  const std::size_t n = p.rows();
  if (n > kMaxSearchDim) throw std::invalid_argument("neighbor search is limited to 24 dimensions");
  if (detail::small_rank(p) != n) throw SingularMatrixError("matrix is singular");

  NeighborReport r;
  r.facet = facet;
  r.opposite = opposite_vertex(p, facet);
  auto fv = facet_vertices(p, facet);
  r.interior = !facet_in_cube_facet(fv);
  std::optional<FacetProjector> projector;
  if (!opts.fast) projector.emplace(fv);

  for (Word bits = 0; bits <= low_mask(n); ++bits) {
    BinVector v(n, bits);
    if (std::find(fv.begin(), fv.end(), v) != fv.end()) continue;
    Verdict verdict = classify_verdict(complete_facet(p, facet, v));
    r.tested.push_back({v, verdict});
    bool hit = opts.target == Target::Acute ? verdict == Verdict::Acute : is_nonobtuse(verdict);
    if (hit) r.candidates.push_back(v);
    if (projector && projector->project(v).inside) r.altitude_feet.push_back(v);
    if (opts.fast && r.other_candidates() >= 2) {
      r.stopped_early = true;
      break;
    }
  }
  return r;
}

BinVector restricted_antipode(const BinVector& p, const ExactVector& q) {
  if (q.size() != p.size()) throw std::invalid_argument("restricted_antipode: length mismatch");
  Word bits = 0;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (q[j] != 0 && !p[j]) bits |= Word{1} << j;
  return BinVector(p.size(), bits);
}

std::vector<BinVector> altitudes_inside_cube(const BinMatrix& p, std::size_t facet) {
  check_facet(p, facet);
  const std::size_t n = p.rows();
  if (n > kMaxSearchDim) throw std::invalid_argument("altitude search is limited to 24 dimensions");
  FacetProjector projector(facet_vertices(p, facet));
  std::vector<BinVector> out;
  for (Word bits = 0; bits <= low_mask(n); ++bits) {
    BinVector v(n, bits);
    Projection pr = projector.project(v);
    bool on_plane = true;
    for (std::size_t i = 0; i < n && on_plane; ++i) on_plane = pr.foot[i] == (v[i] ? 1 : 0);
    if (!on_plane && in_cube(pr.foot)) out.push_back(v);
  }
  return out;
}

bool verify_one_neighbor_all_acute_components(const BinMatrix& p) {
  BlockDecomposition d = block_triangular_form(p);
  for (const auto& b : d.blocks) {
    std::vector<std::size_t> idx(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) idx[i] = b.offset + i;
    if (classify_verdict(d.permuted.submatrix(idx, idx)) != Verdict::Acute)
      throw ComponentNotAcuteError("a fully indecomposable component is not acute");
  }
  for (std::size_t f = 0; f <= p.cols(); ++f) {
    NeighborReport r = neighbor_search(p, f, {Target::Nonobtuse, true});
    if (r.interior && r.other_candidates() > 1) return false;
  }
  return true;
}

bool verify_one_neighbor_acute(const BinMatrix& p) {
  if (classify_verdict(p) != Verdict::Acute) throw std::invalid_argument("verify_one_neighbor_acute requires an acute simplex");
  for (std::size_t f = 0; f <= p.cols(); ++f) {
    NeighborReport r = neighbor_search(p, f, {Target::Nonobtuse, true});
    if (r.other_candidates() > 1) return false;
    for (const auto& c : r.tested) {
      if (c.verdict != Verdict::Acute) continue;
      if (c.vertex != r.opposite && c.vertex != r.opposite.antipode()) return false;
    }
  }
  return true;
}

}  // namespace binsimplex
