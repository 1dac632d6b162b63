#include <binsimplex/golden.hpp>

#include <binsimplex/canon.hpp>
#include <binsimplex/enumerate.hpp>
#include <binsimplex/geometry.hpp>
#include <binsimplex/neighbors.hpp>
#include <binsimplex/ortho.hpp>
#include <binsimplex/structure.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace binsimplex::golden {

namespace {

IntMatrix int_rows(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

ExactMatrix scaled(const IntMatrix& m, long den) {
  ExactMatrix out = to_exact(m);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      out(i, j) /= den;
      out(i, j).canonicalize();
    }
  return out;
}

// Collects failed expectations; the first one becomes the detail text.
struct Expect {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

bool strictly_contained(const std::vector<std::pair<std::size_t, std::size_t>>& a,
                        const std::vector<std::pair<std::size_t, std::size_t>>& b) {
  std::set<std::pair<std::size_t, std::size_t>> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return sa.size() < sb.size() && std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

std::string check_acute_7x7() {
  Expect expect;
  BinMatrix p = acute_7x7();
  ExactMatrix q = transposed_inverse(p);
  expect(classify(p).verdict == Verdict::Acute, "not classified acute");
  expect(q == scaled(acute_7x7_scaled_inverse(), 13), "transposed inverse differs from the reference");
  expect(abs(determinant(p)) == 13, "|det| is not 13");
  auto split = stochastic_split(q);
  expect(is_doubly_stochastic(split.positive), "positive part not doubly stochastic");
  expect(is_row_substochastic(split.negative), "negative part not row substochastic");
  expect(split.negative.col_sums()[2] == mpq_class(14, 13), "third column of the negative part does not sum to 14/13");
  expect(sign_pattern_check(p, q, SignMode::Strict).passed(), "sign pattern mismatch");
  expect(is_fully_indecomposable(p), "not fully indecomposable");
  expect(classify(p.transpose()).verdict != Verdict::Acute, "transpose classified acute");
  return expect.failure;
}

std::string check_partly_decomposable_7x7() {
  Expect expect;
  BinMatrix p = nonobtuse_partly_decomposable_7x7();
  ExactMatrix q = transposed_inverse(p);
  expect(classify(p).verdict == Verdict::Nonobtuse, "not classified nonobtuse (and not acute)");
  expect(q == scaled(nonobtuse_partly_decomposable_7x7_scaled_inverse(), 2), "transposed inverse differs from the reference");
  expect(!is_fully_indecomposable(p), "not partly decomposable");
  expect(block_triangular_form(p).block_sizes() == std::vector<std::size_t>{1, 1, 1, 1, 3}, "block sizes differ from 1,1,1,1,3");
  auto split = stochastic_split(q);
  expect(is_doubly_stochastic(split.positive), "positive part not doubly stochastic");
  expect(strictly_contained(support(split.positive), p.support()), "support of the positive part not strictly inside P");
  auto weak = sign_pattern_check(p, q, SignMode::Weak);
  expect(weak.passed() && !weak.zero_entries.empty(), "weak sign check failed or found no zero entries");
  return expect.failure;
}

std::string check_fi_9x9() {
  Expect expect;
  BinMatrix p = nonobtuse_fully_indecomposable_9x9();
  expect(classify(p).verdict == Verdict::Nonobtuse, "not classified nonobtuse (and not acute)");
  expect(is_fully_indecomposable(p), "not fully indecomposable");
  expect(abs(determinant(p)) == 80, "|det| is not 80");
  expect(transposed_inverse(p) == scaled(nonobtuse_fully_indecomposable_9x9_scaled_inverse(), 20),
         "transposed inverse differs from the reference");
  ExactVector expected{mpq_class(1, 2), mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 4), 0, 0, 0, 0};
  expect(normals(p).sum == expected, "normal opposite the origin differs from (10,5,5,5,5,0,0,0,0)/20");
  IntMatrix g = gram(p);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) expect(g(i, j) >= (i == j ? 2 : 1), "Gram matrix below I + all-ones");
  expect(!is_orthogonal_simplex(p), "classified orthogonal");
  return expect.failure;
}

std::string check_tetrahedra(std::size_t threads) {
  Expect expect;
  auto views = tetrahedron_representations();
  for (std::size_t i = 1; i < views.size(); ++i) expect(equivalent(views[0], views[i]), "views are not equivalent");
  expect(enumerate_classes(3, {}, threads).classes.size() == 4, "I^3 does not hold exactly four classes");
  return expect.failure;
}

std::string check_block_steps() {
  Expect expect;
  auto steps = block_diagonalization_steps();
  const BinMatrix& p = steps[0];
  auto swap12 = Permutation{1, 0, 2, 3, 4, 5, 6};
  auto swap26 = Permutation{0, 5, 2, 3, 4, 1, 6};
  auto id = identity_permutation(7);
  expect(xor_reflect(p, 1) == steps[1], "X(2) step differs");
  expect(permute(steps[1], swap12, id) == steps[2], "row swap step differs");
  expect(xor_reflect(steps[2], 5) == steps[3], "X(6) step differs");
  expect(permute(steps[3], swap12, swap26) == steps[4], "column and row swap step differs");
  expect(xor_reflect(p, 5) == steps[4], "X(6) applied directly differs");
  auto bd = block_diagonalize(p);
  expect(bd.matrix == steps[1], "block diagonalization does not produce the X(2) matrix");
  expect(bipartite_components(steps[1]) == 2, "X(2) matrix is not block diagonal");
  return expect.failure;
}

std::string check_ortho_counts() {
  Expect expect;
  std::size_t factorial = 1;
  for (std::size_t n = 1; n <= 6; ++n) {
    factorial *= n;
    auto all = enumerate_upper_triangular_ortho(n);
    expect(all.size() == factorial, "upper triangular count is not n!");
    for (const auto& p : all) expect(is_orthogonal_simplex(p), "upper triangular matrix not orthogonal");
  }
  return expect.failure;
}

std::string check_four_feet() {
  Expect expect;
  BinMatrix p = obtuse_5x5_four_feet();
  expect(!is_nonobtuse(classify(p).verdict), "classified nonobtuse");
  expect(normals(p).sum == ExactVector{0, mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2), mpq_class(1, 2)},
         "normal opposite the origin differs from (0,1,1,1,1)/2");
  auto r = neighbor_search(p, 0);
  std::vector<BinVector> want{BinVector::from_string("00000"), BinVector::from_string("01111"),
                              BinVector::from_string("10000"), BinVector::from_string("11111")};
  auto got = r.altitude_feet;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  expect(got == want, "altitude feet differ from {0, 01111, e1, e}");
  return expect.failure;
}

std::string check_fi_acute(std::size_t threads) {
  Expect expect;
  for (std::size_t n = 1; n <= 5; ++n) expect(sweep_verify(n, "fi-implies-acute", threads).passed, "counterexample found");
  return expect.failure;
}

std::string check_one_neighbor(std::size_t threads) {
  Expect expect;
  for (std::size_t n = 1; n <= 5; ++n) {
    expect(sweep_verify(n, "one-neighbor-acute", threads).passed, "acute facet with two neighbors");
    expect(sweep_verify(n, "one-neighbor-all-acute-components", threads).passed, "interior facet with two neighbors");
  }
  return expect.failure;
}

std::string check_complex() {
  Expect expect;
  BinMatrix p = three_component_complex_8x8();
  expect(block_triangular_form(p).block_sizes() == std::vector<std::size_t>{3, 1, 4}, "block sizes differ from 3,1,4");
  auto cc = indecomposable_components(p);
  expect(cc.vertex_multiplicity[0] == 2 && cc.vertex_multiplicity[4] == 2, "shared vertices differ");
  auto bd = block_diagonalize(p);
  expect(bd.operations.size() == 1 && bd.operations[0].kind == Operation::Kind::XorReflect && bd.operations[0].column == 3,
         "decoupling does not reflect vertex 4");
  expect(bipartite_components(bd.matrix) == 2, "reflected matrix not block diagonal");
  for (std::size_t c = 0; c < 8; ++c)
    if (c != 3) expect(bipartite_components(xor_reflect(p, c)) == 1, "another vertex decouples the matrix");
  return expect.failure;
}

std::string check_reflection_displays() {
  Expect expect;
  expect(xor_reflect(BinMatrix::identity(3), 0) == BinMatrix::from_rows({"111", "010", "001"}), "reflected identity differs");
  expect(xor_reflect(BinMatrix::all_ones(3, 3), 0) == BinMatrix::from_rows({"100", "100", "100"}), "reflected all-ones differs");
  BinMatrix p = BinMatrix::from_rows({"011", "101", "110"});
  expect(antipodal_replace(p, 0) == BinMatrix::from_rows({"111", "001", "010"}), "antipodal replacement differs");
  return expect.failure;
}

}  // namespace

BinMatrix acute_7x7() {
  return BinMatrix::from_rows({"1110011", "1001100", "0101100", "0011110", "0011101", "0001011", "0000111"});
}

IntMatrix acute_7x7_scaled_inverse() {
  return int_rows({{4, 4, 3, -2, -2, 1, 1},
                   {9, -4, -3, 2, 2, -1, -1},
                   {-4, 9, -3, 2, 2, -1, -1},
                   {-2, -2, 5, 1, 1, 6, -7},
                   {-2, -2, 5, 1, 1, -7, 6},
                   {-1, -1, -4, 7, -6, 3, 3},
                   {-1, -1, -4, -6, 7, 3, 3}});
}

BinMatrix nonobtuse_partly_decomposable_7x7() {
  return BinMatrix::from_rows({"1100111", "0100111", "0011000", "0001000", "0000110", "0000101", "0000011"});
}

IntMatrix nonobtuse_partly_decomposable_7x7_scaled_inverse() {
  return int_rows({{2, 0, 0, 0, 0, 0, 0},
                   {-2, 2, 0, 0, 0, 0, 0},
                   {0, 0, 2, 0, 0, 0, 0},
                   {0, 0, -2, 2, 0, 0, 0},
                   {0, -1, 0, 0, 1, 1, -1},
                   {0, -1, 0, 0, 1, -1, 1},
                   {0, -1, 0, 0, -1, 1, 1}});
}

BinMatrix nonobtuse_fully_indecomposable_9x9() {
  return BinMatrix::from_rows({"110011110", "101110011", "101101101", "011110101", "011101011", "001111110", "001011001",
                               "001000111", "000111111"});
}

IntMatrix nonobtuse_fully_indecomposable_9x9_scaled_inverse() {
  return int_rows({{6, 6, -2, -6, 2, 2, 2, 2, -2},
                   {7, -3, 1, 3, 4, -6, -6, 4, 1},
                   {7, -3, 1, 3, -6, 4, 4, -6, 1},
                   {-3, 7, 1, 3, 4, -6, 4, -6, 1},
                   {-3, 7, 1, 3, -6, 4, -6, 4, 1},
                   {-4, -4, 8, 4, 2, 2, 2, 2, -12},
                   {-2, -2, 4, -8, 6, 6, -4, -4, 4},
                   {-2, -2, 4, -8, -4, -4, 6, 6, 4},
                   {-4, -4, -12, 4, 2, 2, 2, 2, 8}});
}

BinMatrix three_component_complex_8x8() {
  return BinMatrix::from_rows(
      {"11000000", "10100000", "01100000", "00011111", "00001110", "00001101", "00001011", "00000111"});
}

BinMatrix obtuse_5x5_four_feet() { return BinMatrix::from_rows({"11100", "11010", "10001", "00110", "01101"}); }

std::vector<BinMatrix> tetrahedron_representations() {
  return {BinMatrix::from_rows({"001", "110", "100"}), BinMatrix::from_rows({"110", "010", "001"}),
          BinMatrix::from_rows({"101", "010", "001"}), BinMatrix::from_rows({"011", "010", "111"})};
}

std::vector<BinMatrix> block_diagonalization_steps() {
  return {nonobtuse_partly_decomposable_7x7(),
          BinMatrix::from_rows({"0111000", "1111000", "0011000", "0001000", "0000110", "0000101", "0000011"}),
          BinMatrix::from_rows({"1111000", "0111000", "0011000", "0001000", "0000110", "0000101", "0000011"}),
          BinMatrix::from_rows({"1111000", "0111000", "0011000", "0001000", "1111011", "0000101", "1111110"}),
          BinMatrix::from_rows({"0011010", "1011010", "0011000", "0001000", "1111011", "0000101", "1111110"})};
}

std::vector<CheckResult> verify_all(std::size_t threads) {
  const std::vector<std::pair<std::string, std::function<std::string()>>> checks{
      {"acute 7x7 reference", check_acute_7x7},
      {"nonobtuse partly decomposable 7x7 reference", check_partly_decomposable_7x7},
      {"nonobtuse fully indecomposable 9x9 reference", check_fi_9x9},
      {"tetrahedron views and the four classes in I^3", [&] { return check_tetrahedra(threads); }},
      {"block diagonalization steps", check_block_steps},
      {"upper triangular orthogonal simplices, n = 1..6", check_ortho_counts},
      {"altitude feet of the obtuse 5x5 facet", check_four_feet},
      {"fully indecomposable nonobtuse implies acute, n <= 5", [&] { return check_fi_acute(threads); }},
      {"one-neighbor sweeps, n <= 5", [&] { return check_one_neighbor(threads); }},
      {"three-component complex 8x8", check_complex},
      {"reflection and antipodal replacement displays", check_reflection_displays},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = fn();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace binsimplex::golden
