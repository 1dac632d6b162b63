#pragma once

// Full and partial decomposability, and the block upper triangular form of
// nonobtuse representations with rank-one strips above the diagonal blocks.

#include <binsimplex/bitcore.hpp>
#include <binsimplex/exact.hpp>

#include <optional>
#include <string>
#include <vector>

namespace binsimplex {

struct PartitionWitness {
  BinVector v;  // row set
  BinVector w;  // column set; vᵀ A w = 0 and ones(v) + ones(w) = n
};

// Empty iff A is fully indecomposable. A 1x1 matrix is always fully
// indecomposable (there is no split into two nonempty parts).
std::optional<PartitionWitness> find_partition_witness(const BinMatrix& a);
bool is_fully_indecomposable(const BinMatrix& a);

// A perfect matching of rows to columns (match[i] = column of row i), if any.
std::optional<std::vector<std::size_t>> perfect_matching(const BinMatrix& a);

// One diagonal block of the block upper triangular form. Blocks are listed
// top to bottom; indices refer to the original matrix.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::size_t offset = 0;  // position of the block on the diagonal
  // Strip above the block: every column of the block restricted to the rows
  // above it equals `strip` (zero, or a column of the leading submatrix).
  BinVector strip;                             // length `offset`, in permuted row order
  std::optional<std::size_t> strip_column;     // original column index when nonzero
  std::size_t size() const { return rows.size(); }
};

struct Attachment {
  std::size_t block;   // the block being attached
  std::size_t target;  // block that owns the shared vertex
  std::size_t vertex;  // 0 = origin, j >= 1 = original column j-1
};

struct BlockDecomposition {
  Permutation row_perm;  // permute(P, row_perm, col_perm) is the block form
  Permutation col_perm;
  std::vector<Block> blocks;
  std::vector<Attachment> attachments;
  BinMatrix permuted;

  std::vector<std::size_t> block_sizes() const;
};

// Requires a nonobtuse (or acute) representation; throws NotNonobtuseError
// otherwise. Blocks are placed bottom-up: each step takes, among the blocks
// whose rows see no other remaining block, the one holding the largest
// original row index. Inside a block rows and columns keep their original
// order. A strip that breaks the column-copy rule raises std::logic_error.
BlockDecomposition block_triangular_form(const BinMatrix& p);

struct Operation {
  enum class Kind { PermuteRows, PermuteColumns, XorReflect };
  Kind kind;
  Permutation perm;     // for the permutations
  std::size_t column = 0;  // for XorReflect (0-based column of the current matrix)
};

std::string describe(const Operation& op);
BinMatrix apply(const BinMatrix& p, const Operation& op);
BinMatrix apply(const BinMatrix& p, const std::vector<Operation>& ops);

struct BlockDiagonalization {
  BinMatrix matrix;
  std::vector<Operation> operations;  // applied in order to the input
  // The trailing fully indecomposable diagonal block of `matrix` (rows and
  // columns offset .. n-1) decouples from the rest.
  std::size_t trailing_offset = 0;
};

// Brings the block form to a block diagonal shape with a fully indecomposable
// trailing block by reflecting the strip vertex of the last block into the
// origin. Throws FullyIndecomposableError for a fully indecomposable input and
// NotNonobtuseError for non-nonobtuse inputs. An input that is already block
// diagonal gets an empty operation list.
BlockDiagonalization block_diagonalize(const BinMatrix& p);

struct ComponentComplex {
  std::vector<std::size_t> dimensions;  // one per block, top to bottom
  std::vector<Attachment> attachments;
  // How many components contain each vertex (index 0 = origin, j = column j-1).
  std::vector<std::size_t> vertex_multiplicity;
};

ComponentComplex indecomposable_components(const BinMatrix& p);

// Column j replaced by its antipode.
BinMatrix antipodal_replace(const BinMatrix& p, std::size_t j);

// Number of connected components of the bipartite row/column graph of the
// support, counting empty rows or columns as components of their own.
std::size_t bipartite_components(const BinMatrix& a);

}  // namespace binsimplex
