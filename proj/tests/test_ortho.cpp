#include <doctest.h>

#include <binsimplex/canon.hpp>
#include <binsimplex/enumerate.hpp>
#include <binsimplex/errors.hpp>
#include <binsimplex/geometry.hpp>
#include <binsimplex/golden.hpp>
#include <binsimplex/ortho.hpp>

#include "oracle.hpp"

#include <set>

using namespace binsimplex;

namespace {

std::vector<int> vertex(const BinMatrix& p, std::size_t id) {
  std::vector<int> v(p.rows(), 0);
  if (id > 0)
    for (std::size_t i = 0; i < p.rows(); ++i) v[i] = p(i, id - 1);
  return v;
}

bool upper_triangular(const BinMatrix& p) {
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if ((i == j && !p(i, j)) || (j < i && p(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("recognition") {
  CHECK(is_orthogonal_simplex(BinMatrix::identity(4)));
  CHECK(is_orthogonal_simplex(BinMatrix::from_rows({"1"})));
  CHECK(is_orthogonal_simplex(BinMatrix::from_rows({"111", "011", "001"})));
  CHECK_FALSE(is_orthogonal_simplex(golden::nonobtuse_fully_indecomposable_9x9()));
  CHECK_FALSE(is_orthogonal_simplex(golden::acute_7x7()));
  // ones on the diagonal and superdiagonal give an obtuse path, not a right one
  CHECK_FALSE(is_orthogonal_simplex(BinMatrix::from_rows({"110", "011", "001"})));
  CHECK_THROWS_AS(is_orthogonal_simplex(BinMatrix::all_ones(2, 2)), SingularMatrixError);
}

TEST_CASE("upper triangular representations") {
  CHECK(enumerate_upper_triangular_ortho(1) == std::vector<BinMatrix>{BinMatrix::from_rows({"1"})});
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    factorial *= n;
    auto all = enumerate_upper_triangular_ortho(n);
    CHECK(all.size() == factorial);
    CHECK(std::set<BinMatrix>(all.begin(), all.end()).size() == factorial);
    for (const auto& p : all) {
      CHECK(upper_triangular(p));
      CHECK(is_orthogonal_simplex(p));
      CHECK(oracle::verdict(oracle::grid(p)) == (n == 1 ? "acute" : "nonobtuse"));
      CHECK(right_dihedral_count(p) == n * (n - 1) / 2);
    }
  }
  CHECK_THROWS_AS(enumerate_upper_triangular_ortho(0), std::invalid_argument);
}

TEST_CASE("spanning trees have mutually orthogonal edges") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_upper_triangular_ortho(n)) {
      auto t = spanning_tree(p);
      CHECK(t.nodes == n + 1);
      CHECK(t.edges.size() == n);
      std::vector<std::vector<int>> dirs;
      for (auto [a, b] : t.edges) {
        auto va = vertex(p, a), vb = vertex(p, b);
        std::vector<int> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = vb[i] - va[i];
        dirs.push_back(d);
      }
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          int dot = 0;
          for (std::size_t i = 0; i < n; ++i) dot += dirs[x][i] * dirs[y][i];
          CHECK(dot == 0);
        }
      std::size_t degree_sum = 0;
      for (auto d : t.degrees) degree_sum += d;
      CHECK(degree_sum == 2 * n);
      CHECK(t.encoding == tree_encoding(t.nodes, t.edges));
    }
}

TEST_CASE("star and path") {
  auto star = spanning_tree(BinMatrix::identity(3));
  CHECK(star.degrees == std::vector<std::size_t>{3, 1, 1, 1});
  auto path = spanning_tree(BinMatrix::from_rows({"111", "011", "001"}));
  auto d = path.degrees;
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(star.encoding != path.encoding);
  CHECK_THROWS_AS(spanning_tree(golden::acute_7x7()), NotOrthogonalError);
}

TEST_CASE("tree encoding matches brute isomorphism on all labeled trees") {
  for (std::size_t m = 1; m <= 7; ++m) {
    std::map<std::string, std::string> brute_to_code;
    std::set<std::string> codes;
    for (const auto& t : oracle::labeled_trees(m)) {
      std::string code = tree_encoding(m, t);
      codes.insert(code);
      if (m <= 6) {
        auto [it, fresh] = brute_to_code.emplace(oracle::tree_minimum(m, t), code);
        if (!fresh) CHECK(it->second == code);
      }
    }
    if (m <= 6) CHECK(codes.size() == brute_to_code.size());
  }
  CHECK_THROWS_AS(tree_encoding(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(tree_encoding(4, {{0, 1}, {1, 0}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("tree classes count the unlabeled trees") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> codes;
    for (const auto& p : enumerate_upper_triangular_ortho(n)) codes.insert(spanning_tree(p).encoding);
    CHECK(codes.size() == oracle::unlabeled_tree_count(n + 1));
    CHECK(enumerate_classes(n, EnumerationFilter::parse("orthogonal")).classes.size() == codes.size());
  }
  std::set<std::string> six;
  for (const auto& p : enumerate_upper_triangular_ortho(6)) six.insert(spanning_tree(p).encoding);
  CHECK(six.size() == 11);
}

TEST_CASE("orthogonal simplices are equivalent exactly when their trees are isomorphic") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto all = enumerate_upper_triangular_ortho(n);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a; b < all.size(); ++b)
        CHECK(equivalent(all[a], all[b]) == (spanning_tree(all[a]).encoding == spanning_tree(all[b]).encoding));
  }
}

TEST_CASE("every orthogonal class has the expected right angles") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_classes(n, EnumerationFilter::parse("orthogonal")).classes) {
      CHECK(is_nonobtuse(classify(p).verdict));
      CHECK(right_dihedral_count(p) == n * (n - 1) / 2);
    }
}
