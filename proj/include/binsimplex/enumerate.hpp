#pragma once

// Exhaustive enumeration of 0/1-simplices in I^n up to cube symmetry, and
// sweeps that evaluate structural statements over every enumerated class.

#include <binsimplex/bitcore.hpp>
#include <binsimplex/geometry.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binsimplex {

inline constexpr std::size_t kMaxEnumerationDim = 6;

struct EnumerationFilter {
  bool nonobtuse = false;
  bool acute = false;
  // every matrix representation of the class is fully indecomposable
  bool fully_indecomposable = false;
  bool orthogonal = false;

  // Comma separated subset of "acute,nonobtuse,fi,orthogonal"; "all" or the
  // empty string selects everything.
  static EnumerationFilter parse(std::string_view text);
  std::string to_string() const;
  bool accepts(const BinMatrix& p) const;
};

struct EnumerationResult {
  std::size_t n = 0;
  EnumerationFilter filter;
  std::vector<BinMatrix> classes;  // canonical forms, sorted
  std::array<std::size_t, 4> verdict_counts{};  // indexed by Verdict

  std::size_t count(Verdict v) const { return verdict_counts[static_cast<std::size_t>(v)]; }
};

// threads = 0 picks the hardware concurrency. The result does not depend on
// the thread count. Throws DimensionTooLargeError for n > 6.
EnumerationResult enumerate_classes(std::size_t n, const EnumerationFilter& filter = {}, std::size_t threads = 0);

// All n+1 representations reachable by moving a vertex to the origin (P
// itself first).
std::vector<BinMatrix> origin_representations(const BinMatrix& p);

struct SweepReport {
  std::string property;
  std::size_t n = 0;
  std::size_t classes_checked = 0;
  bool passed = true;
  std::optional<BinMatrix> counterexample;
  std::string detail;
};

const std::vector<std::string>& sweep_properties();

// Throws UnknownPropertyError for an unregistered property name.
SweepReport sweep_verify(std::size_t n, std::string_view property, std::size_t threads = 0);

}  // namespace binsimplex
