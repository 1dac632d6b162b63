#pragma once

// Canonical representatives of 0/1-simplices modulo cube symmetries and
// vertex relabeling.

#include <binsimplex/bitcore.hpp>

#include <optional>

namespace binsimplex {

struct CanonicalForm {
  BinMatrix matrix;
  // One witness: permute(reflected, row_perm, col_perm) == matrix, where
  // reflected = xor_reflect(P, *origin) or P itself when origin is empty.
  std::optional<std::size_t> origin;
  Permutation row_perm;
  Permutation col_perm;
};

// Smallest matrix in the orbit of P under row permutations, column
// permutations and moving any vertex to the origin, in the BinMatrix order
// (row-major, column 0 most significant). Throws SingularMatrixError for
// square singular input.
CanonicalForm canonical_form(const BinMatrix& p);

// Same minimization for an n x k vertex set (k <= n columns, full column
// rank not required). Used by enumeration for partial simplices.
CanonicalForm canonical_form_rect(const BinMatrix& p);

// Throws std::invalid_argument on a dimension mismatch.
bool equivalent(const BinMatrix& p, const BinMatrix& r);

}  // namespace binsimplex
