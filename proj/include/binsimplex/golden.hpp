#pragma once

// Reference matrices with published properties, and the checks run by
// `simplex verify-paper`.

#include <binsimplex/bitcore.hpp>
#include <binsimplex/exact.hpp>

#include <string>
#include <vector>

namespace binsimplex::golden {

BinMatrix acute_7x7();                       // |det| = 13
IntMatrix acute_7x7_scaled_inverse();         // 13 * P⁻ᵀ
BinMatrix nonobtuse_partly_decomposable_7x7();
IntMatrix nonobtuse_partly_decomposable_7x7_scaled_inverse();  // 2 * P⁻ᵀ
BinMatrix nonobtuse_fully_indecomposable_9x9();
IntMatrix nonobtuse_fully_indecomposable_9x9_scaled_inverse();  // 20 * P⁻ᵀ
BinMatrix three_component_complex_8x8();
BinMatrix obtuse_5x5_four_feet();
std::vector<BinMatrix> tetrahedron_representations();  // four views of one tetrahedron
// The partly decomposable 7x7 matrix followed by the four matrices produced
// by X(2); R(1 2); X(6); C(2 6) R(1 2).
std::vector<BinMatrix> block_diagonalization_steps();

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs every reference check; threads = 0 picks the hardware concurrency.
std::vector<CheckResult> verify_all(std::size_t threads = 0);

}  // namespace binsimplex::golden
