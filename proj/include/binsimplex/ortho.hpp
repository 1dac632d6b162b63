#pragma once

// Orthogonal 0/1-simplices: nonobtuse simplices whose fully indecomposable
// components are all 1x1.

#include <binsimplex/bitcore.hpp>

#include <string>
#include <utility>
#include <vector>

namespace binsimplex {

// Throws SingularMatrixError for singular input.
bool is_orthogonal_simplex(const BinMatrix& p);

// The n! upper triangular representations, built by extending P to
// [[P, r], [0, 1]] with r running over the columns of [0 | P].
std::vector<BinMatrix> enumerate_upper_triangular_ortho(std::size_t n);

struct OrthoTree {
  std::size_t nodes = 0;  // 0 = origin, j = column j-1
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> degrees;
  // Canonical encoding of the unlabeled tree; equal iff isomorphic.
  std::string encoding;
};

// Tree of mutually orthogonal edges; throws NotOrthogonalError.
OrthoTree spanning_tree(const BinMatrix& p);

// Canonical string of an unlabeled tree given by an edge list on `nodes`
// vertices (center rooting plus nested parenthesis codes).
std::string tree_encoding(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace binsimplex
