#pragma once

#include <stdexcept>
#include <string>

namespace binsimplex {

// Analysis errors: the input is well formed but the requested operation does
// not apply to it. Usage errors (bad indices, bad permutations, dimension
// mismatches) are reported with std::invalid_argument / std::out_of_range.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define BINSIMPLEX_ERROR(Name)              \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

BINSIMPLEX_ERROR(SingularMatrixError);
BINSIMPLEX_ERROR(DegenerateFacetError);
BINSIMPLEX_ERROR(DependentSubsetError);
BINSIMPLEX_ERROR(NotNonobtuseError);
BINSIMPLEX_ERROR(FullyIndecomposableError);
BINSIMPLEX_ERROR(ComponentNotAcuteError);
BINSIMPLEX_ERROR(NotOrthogonalError);
BINSIMPLEX_ERROR(DimensionTooLargeError);
BINSIMPLEX_ERROR(UnknownPropertyError);

#undef BINSIMPLEX_ERROR

// Malformed text input. Kept apart from Error because the CLI treats it as a
// usage problem rather than an analysis result.
class MalformedMatrixError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace binsimplex
