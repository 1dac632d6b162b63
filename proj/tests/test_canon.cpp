#include <doctest.h>

#include <binsimplex/canon.hpp>
#include <binsimplex/enumerate.hpp>
#include <binsimplex/errors.hpp>
#include <binsimplex/golden.hpp>
#include <binsimplex/ortho.hpp>
#include <binsimplex/structure.hpp>

#include "oracle.hpp"

#include <set>

using namespace binsimplex;

namespace {

std::string flat(const BinMatrix& m) {
  std::string s;
  for (const auto& r : m.to_strings()) s += r;
  return s;
}

void check_witness(const BinMatrix& p, const CanonicalForm& c) {
  BinMatrix start = c.origin ? xor_reflect(p, *c.origin) : p;
  CHECK(permute(start, c.row_perm, c.col_perm) == c.matrix);
}

}  // namespace

TEST_CASE("canonical form is the orbit minimum for every nonsingular matrix up to 3x3") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint32_t code = 0; code < (1U << (n * n)); ++code) {
      auto g = oracle::decode(code, n);
      if (oracle::cofactor_det(g) == 0) continue;
      auto p = oracle::bin(g);
      auto c = canonical_form(p);
      CHECK(flat(c.matrix) == oracle::orbit_minimum(g));
      check_witness(p, c);
    }
}

TEST_CASE("canonical form separates exactly the orbits of 4x4 matrices") {
  auto orbits = oracle::nonsingular_orbits(4);
  std::map<std::size_t, std::string> form_of_orbit;
  std::set<std::string> forms;
  for (const auto& [code, orbit] : orbits) {
    auto p = oracle::bin(oracle::decode(code, 4));
    std::string f = flat(canonical_form(p).matrix);
    auto [it, fresh] = form_of_orbit.emplace(orbit, f);
    if (fresh) {
      forms.insert(f);
    } else {
      CHECK(it->second == f);
    }
  }
  CHECK(forms.size() == form_of_orbit.size());
  CHECK(forms.size() == 17);
}

TEST_CASE("rectangular vertex sets") {
  oracle::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng.below(4), k = 1 + rng.below(n);
    auto p = rng.matrix(n, k);
    auto c = canonical_form_rect(p);
    CHECK(flat(c.matrix) == oracle::orbit_minimum(oracle::grid(p)));
    check_witness(p, c);
  }
}

TEST_CASE("the four views of the tetrahedron") {
  auto views = golden::tetrahedron_representations();
  auto first = canonical_form(views[0]).matrix;
  for (const auto& v : views) CHECK(canonical_form(v).matrix == first);
  for (std::size_t i = 0; i < views.size(); ++i)
    for (std::size_t j = 0; j < views.size(); ++j) CHECK(equivalent(views[i], views[j]));
}

TEST_CASE("corner and regular tetrahedra are different classes") {
  BinMatrix corner = BinMatrix::identity(3);
  BinMatrix regular = BinMatrix::from_rows({"011", "101", "110"});
  CHECK_FALSE(equivalent(corner, regular));
  CHECK(flat(canonical_form(corner).matrix) == oracle::orbit_minimum(oracle::grid(corner)));
  CHECK(canonical_form(corner).matrix != canonical_form(regular).matrix);
}

TEST_CASE("equivalence basics") {
  BinMatrix p = golden::acute_7x7();
  CHECK(equivalent(p, p));
  oracle::Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    auto q = xor_reflect(permute(p, rng.permutation(7), rng.permutation(7)), rng.below(7));
    CHECK(equivalent(p, q));
  }
  CHECK_FALSE(equivalent(p, BinMatrix::identity(7)));
  CHECK_THROWS_AS(equivalent(BinMatrix::identity(2), BinMatrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(canonical_form(BinMatrix::all_ones(3, 3)), SingularMatrixError);
}

TEST_CASE("idempotence and orbit constancy under 1000 random operation sequences") {
  oracle::Rng rng(43);
  std::vector<BinMatrix> samples{BinMatrix::identity(6), golden::obtuse_5x5_four_feet()};
  for (std::size_t n = 2; n <= 6; ++n) samples.push_back(rng.nonsingular(n));
  for (std::size_t n = 4; n <= 6; ++n) {
    auto cls = enumerate_classes(n, EnumerationFilter::parse("nonobtuse")).classes;
    samples.push_back(cls[rng.below(cls.size())]);
  }
  for (const auto& p : samples) {
    auto c = canonical_form(p);
    CHECK(canonical_form(c.matrix).matrix == c.matrix);
    Verdict v = classify(p).verdict;
    bool fi = is_fully_indecomposable(p);
    bool ortho = is_orthogonal_simplex(p);
    bool nonobtuse = is_nonobtuse(v);
    for (int t = 0; t < 1000; ++t) {
      auto q = p;
      for (int s = 0, len = 1 + static_cast<int>(rng.below(8)); s < len; ++s) q = rng.step(q);
      auto cq = canonical_form(q);
      CHECK(cq.matrix == c.matrix);
      check_witness(q, cq);
      CHECK(classify(q).verdict == v);
      CHECK(is_orthogonal_simplex(q) == ortho);
      if (nonobtuse) CHECK(is_fully_indecomposable(q) == fi);
    }
  }
}
