#pragma once

// 0/1 vectors and matrices with one machine word per row.
//
// Coordinates and columns are 0-based. Bit j of a row word is column j, bit i
// of a vector word is coordinate i. Every value is immutable; operations
// return new values.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binsimplex {

inline constexpr std::size_t kMaxDim = 64;

using Word = std::uint64_t;
using Permutation = std::vector<std::size_t>;

// Mask with the low `width` bits set (width <= 64).
constexpr Word low_mask(std::size_t width) {
  return width >= 64 ? ~Word{0} : ((Word{1} << width) - 1);
}

class BinVector {
 public:
  BinVector() = default;
  explicit BinVector(std::size_t size, Word bits = 0);

  static BinVector zero(std::size_t size) { return BinVector(size); }
  static BinVector all_ones(std::size_t size) { return BinVector(size, low_mask(size)); }
  static BinVector unit(std::size_t size, std::size_t i);
  static BinVector from_string(std::string_view text);

  std::size_t size() const { return size_; }
  Word bits() const { return bits_; }
  bool operator[](std::size_t i) const { return (bits_ >> i) & 1U; }

  std::size_t ones() const;
  std::size_t zeros() const { return size_ - ones(); }

  BinVector antipode() const { return BinVector(size_, ~bits_ & low_mask(size_)); }
  BinVector with(std::size_t i, bool value) const;

  std::string to_string() const;

  friend BinVector operator^(const BinVector& a, const BinVector& b);
  friend bool operator==(const BinVector&, const BinVector&) = default;
  friend std::strong_ordering operator<=>(const BinVector& a, const BinVector& b);

 private:
  Word bits_ = 0;
  std::size_t size_ = 0;
};

class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols);
  // Row words; bits at or above `cols` must be clear.
  BinMatrix(std::size_t cols, std::vector<Word> row_words);

  static BinMatrix identity(std::size_t n);
  static BinMatrix all_ones(std::size_t rows, std::size_t cols);
  // One string per row, '0'/'1' characters.
  static BinMatrix from_rows(std::span<const std::string_view> rows);
  static BinMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BinMatrix from_columns(std::span<const BinVector> columns);

  std::size_t rows() const { return row_words_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows() == cols_; }

  bool operator()(std::size_t i, std::size_t j) const { return (row_words_[i] >> j) & 1U; }
  Word row_word(std::size_t i) const { return row_words_[i]; }
  const std::vector<Word>& row_words() const { return row_words_; }
  BinVector row(std::size_t i) const { return BinVector(cols_, row_words_[i]); }
  BinVector column(std::size_t j) const;
  std::vector<BinVector> columns() const;

  std::size_t ones() const;
  std::size_t zeros() const { return rows() * cols_ - ones(); }
  std::vector<std::pair<std::size_t, std::size_t>> support() const;

  BinMatrix transpose() const;
  BinMatrix with_column(std::size_t j, const BinVector& column) const;
  BinMatrix with_appended_column(const BinVector& column) const;
  BinMatrix without_column(std::size_t j) const;
  // Submatrix on the given row and column index lists (in that order).
  BinMatrix submatrix(std::span<const std::size_t> row_index, std::span<const std::size_t> col_index) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;
  // Dimensions first, then row-major lexicographic on bits with column 0 most
  // significant inside a row.
  friend std::strong_ordering operator<=>(const BinMatrix& a, const BinMatrix& b);

 private:
  std::vector<Word> row_words_;
  std::size_t cols_ = 0;
};

// Entrywise complement.
BinMatrix antipode(const BinMatrix& x);

// Operation (X): keep column c, replace every other column d by c XOR d.
// Geometrically this reflects vertex c onto the origin. Works for any shape.
BinMatrix xor_reflect(const BinMatrix& p, std::size_t c);

// result(i, j) = p(row_perm[i], col_perm[j]). Realizes operations (R) and (C).
BinMatrix permute(const BinMatrix& p, const Permutation& row_perm, const Permutation& col_perm);

Permutation identity_permutation(std::size_t n);
Permutation inverse_permutation(const Permutation& perm);
bool is_permutation(const Permutation& perm, std::size_t n);

// Text format: one row per line, '0'/'1' only, surrounding whitespace ignored.
// Leading blank lines are skipped; the first blank line after a row ends the
// matrix.
BinMatrix parse_matrix(std::istream& in);
BinMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BinMatrix& m);

std::ostream& operator<<(std::ostream& os, const BinVector& v);
std::ostream& operator<<(std::ostream& os, const BinMatrix& m);

}  // namespace binsimplex
