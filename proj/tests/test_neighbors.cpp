#include <doctest.h>

#include <binsimplex/enumerate.hpp>
#include <binsimplex/errors.hpp>
#include <binsimplex/geometry.hpp>
#include <binsimplex/golden.hpp>
#include <binsimplex/neighbors.hpp>
#include <binsimplex/structure.hpp>

#include "oracle.hpp"

#include <set>

using namespace binsimplex;

namespace {

std::set<std::string> strings(const std::vector<BinVector>& vs) {
  std::set<std::string> s;
  for (const auto& v : vs) s.insert(v.to_string());
  return s;
}

// Inward normal to the facet, read off P⁻ᵀ: column facet-1 for facet >= 1,
// minus the row sums for the facet opposite the origin.
ExactVector facet_normal(const BinMatrix& p, std::size_t facet) {
  auto q = *oracle::transposed_inverse(oracle::grid(p));
  ExactVector out(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (facet > 0) {
      out[i] = q[i][facet - 1];
    } else {
      for (std::size_t j = 0; j < p.cols(); ++j) out[i] -= q[i][j];
    }
  }
  return out;
}

// Cube vertices v for which v + αq or v − αq stays in the cube for small α > 0.
std::set<std::string> line_entries(const ExactVector& q) {
  std::set<std::string> out;
  const std::size_t n = q.size();
  for (Word bits = 0; bits <= low_mask(n); ++bits) {
    BinVector v(n, bits);
    bool plus = true, minus = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (q[i] > 0) (v[i] ? plus : minus) = false;
      if (q[i] < 0) (v[i] ? minus : plus) = false;
    }
    if (plus || minus) out.insert(v.to_string());
  }
  return out;
}

std::size_t zeros(const ExactVector& q) {
  return static_cast<std::size_t>(std::count(q.begin(), q.end(), mpq_class(0)));
}

}  // namespace

TEST_CASE("facets and their vertices") {
  BinMatrix id = BinMatrix::identity(3);
  CHECK(strings(facet_vertices(id, 0)) == std::set<std::string>{"100", "010", "001"});
  CHECK(strings(facet_vertices(id, 2)) == std::set<std::string>{"000", "100", "001"});
  CHECK(opposite_vertex(id, 0) == BinVector::zero(3));
  CHECK(opposite_vertex(id, 3) == BinVector::unit(3, 2));
  CHECK_THROWS_AS(facet_vertices(id, 4), std::out_of_range);

  BinVector e = BinVector::all_ones(3);
  BinMatrix swapped = complete_facet(id, 0, e);
  auto vs = simplex_vertices(swapped);
  std::set<std::string> shifted;
  for (const auto& v : vs) shifted.insert((v ^ e).to_string());
  CHECK(shifted == std::set<std::string>{"111", "100", "010", "001"});
  CHECK(complete_facet(id, 2, e) == BinMatrix::from_rows({"110", "010", "011"}));
}

TEST_CASE("facets inside cube facets") {
  std::vector<BinVector> a{BinVector::from_string("100"), BinVector::from_string("010"), BinVector::from_string("001")};
  CHECK_FALSE(facet_in_cube_facet(a));
  std::vector<BinVector> b{BinVector::from_string("000"), BinVector::from_string("100"), BinVector::from_string("110")};
  CHECK(facet_in_cube_facet(b));
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_classes(n, EnumerationFilter::parse("acute")).classes)
      for (std::size_t f = 0; f <= n; ++f) {
        auto fv = facet_vertices(p, f);
        if (n >= 2) CHECK_FALSE(facet_in_cube_facet(fv));
      }
}

TEST_CASE("corner tetrahedron: completions of the facet opposite the origin") {
  auto r = neighbor_search(BinMatrix::identity(3), 0);
  CHECK(r.interior);
  CHECK(strings(r.candidates) == std::set<std::string>{"000", "111"});
  CHECK(r.other_candidates() == 1);
  CHECK(r.tested.size() == 5);
  for (const auto& t : r.tested) CHECK(t.verdict == classify(complete_facet(BinMatrix::identity(3), 0, t.vertex)).verdict);
}

TEST_CASE("acute reference: acute completions are the opposite vertex or its antipode") {
  BinMatrix p = golden::acute_7x7();
  for (std::size_t f = 0; f <= 7; ++f) {
    auto r = neighbor_search(p, f, {Target::Acute, false});
    BinVector v = opposite_vertex(p, f);
    for (const auto& c : r.candidates) CHECK((c == v || c == v.antipode()));
    CHECK(r.interior);
  }
  CHECK(verify_one_neighbor_acute(p));
}

TEST_CASE("obtuse 5x5 facet has four altitude feet") {
  BinMatrix p = golden::obtuse_5x5_four_feet();
  auto r = neighbor_search(p, 0);
  CHECK(strings(r.altitude_feet) == std::set<std::string>{"00000", "01111", "10000", "11111"});
  ExactVector q = normals(p).sum;
  CHECK(restricted_antipode(BinVector::zero(5), q) == BinVector::from_string("01111"));
}

TEST_CASE("restricted antipode") {
  ExactVector full{1, -1, mpq_class(1, 2)};
  BinVector p = BinVector::from_string("100");
  CHECK(restricted_antipode(p, full) == p.antipode());
  ExactVector partial{0, 1, -1};
  BinVector inside = BinVector::from_string("001");
  CHECK(restricted_antipode(restricted_antipode(inside, partial), partial) == inside);
  CHECK_THROWS_AS(restricted_antipode(p, ExactVector{1}), std::invalid_argument);
}

TEST_CASE("interior flag and acute completions") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& cls : enumerate_classes(n).classes)
      for (std::size_t f = 0; f <= n; ++f) {
        auto r = neighbor_search(cls, f, {Target::Acute, false});
        if (!r.interior) CHECK(r.candidates.empty());
      }
}

TEST_CASE("altitude lines of nonobtuse facets") {
  for (std::size_t n = 2; n <= 5; ++n)
    for (const auto& p : enumerate_classes(n, EnumerationFilter::parse("nonobtuse")).classes) {
      bool acute = classify(p).verdict == Verdict::Acute;
      for (std::size_t f = 0; f <= n; ++f) {
        ExactVector q = facet_normal(p, f);
        auto entries = line_entries(q);
        CHECK(entries.size() == (std::size_t{1} << (zeros(q) + 1)));
        // off the facet plane, these are exactly the vertices whose altitude
        // foot stays in the cube
        auto fv = facet_vertices(p, f);
        FacetProjector proj(fv);
        std::set<std::string> off_plane;
        for (const auto& s : entries) {
          BinVector v = BinVector::from_string(s);
          auto pr = proj.project(v);
          bool on = true;
          for (std::size_t i = 0; i < n && on; ++i) on = pr.foot[i] == (v[i] ? 1 : 0);
          if (!on) off_plane.insert(s);
        }
        CHECK(strings(altitudes_inside_cube(p, f)) == off_plane);
        if (acute) {
          BinVector v = opposite_vertex(p, f);
          CHECK(entries == std::set<std::string>{v.to_string(), v.antipode().to_string()});
        }
      }
    }
}

TEST_CASE("one-neighbor statements on small classes") {
  CHECK(verify_one_neighbor_all_acute_components(BinMatrix::identity(3)));
  CHECK(verify_one_neighbor_all_acute_components(golden::three_component_complex_8x8()));
  CHECK_THROWS_AS(verify_one_neighbor_all_acute_components(golden::nonobtuse_fully_indecomposable_9x9()),
                  ComponentNotAcuteError);
  CHECK_THROWS_AS(verify_one_neighbor_acute(BinMatrix::identity(3)), std::invalid_argument);
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_classes(n, EnumerationFilter::parse("acute")).classes)
      for (std::size_t f = 0; f <= n; ++f) {
        auto r = neighbor_search(p, f);
        std::size_t acute_others = 0;
        for (const auto& t : r.tested)
          if (t.verdict == Verdict::Acute && t.vertex != r.opposite) ++acute_others;
        CHECK(acute_others <= 1);
        CHECK(r.other_candidates() <= 1);
      }
}

TEST_CASE("fast mode stops early and agrees on the count") {
  BinMatrix p = golden::obtuse_5x5_four_feet();
  for (std::size_t f = 0; f <= 5; ++f) {
    auto full = neighbor_search(p, f);
    auto fast = neighbor_search(p, f, {Target::Nonobtuse, true});
    CHECK(fast.altitude_feet.empty());
    CHECK(std::min<std::size_t>(full.other_candidates(), 2) == fast.other_candidates());
  }
  CHECK_THROWS_AS(neighbor_search(BinMatrix::all_ones(3, 3), 0), SingularMatrixError);
}
