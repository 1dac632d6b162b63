#pragma once

// Classification of 0/1-simplices through the inverse Gram matrix, and the
// sign structure of the facet normals Q = P⁻ᵀ.

#include <binsimplex/bitcore.hpp>
#include <binsimplex/exact.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace binsimplex {

enum class Verdict { Degenerate, Obtuse, Nonobtuse, Acute };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

// True for Nonobtuse and Acute.
constexpr bool is_nonobtuse(Verdict v) { return v == Verdict::Nonobtuse || v == Verdict::Acute; }

struct Witness {
  enum class Kind { OffDiagonal, RowSum };
  Kind kind;
  std::size_t i;
  std::size_t j;  // equals i for RowSum

  friend bool operator==(const Witness&, const Witness&) = default;
};

// For Obtuse the witness is the first entry violating the nonobtuse criteria
// (a positive off-diagonal entry or a negative row sum of (PᵀP)⁻¹); for
// Nonobtuse it is the first entry that is exactly zero, which is what keeps
// the simplex from being acute. Acute and Degenerate carry no witness.
struct Classification {
  Verdict verdict;
  std::optional<Witness> witness;
};

// Works for square and rectangular (n x k, k <= n) representations; the
// criteria only involve the k x k Gram matrix.
Classification classify(const BinMatrix& p);

// Fast path used in enumeration loops: same verdict as classify(), no witness.
Verdict classify_verdict(const BinMatrix& p);

// Q = D - C with D, C >= 0 and disjoint supports.
struct StochasticSplit {
  ExactMatrix positive;  // D = (|Q| + Q) / 2
  ExactMatrix negative;  // C = (|Q| - Q) / 2
};

StochasticSplit stochastic_split(const ExactMatrix& q);

bool is_doubly_stochastic(const ExactMatrix& d);
// Every row sum strictly below one.
bool is_row_substochastic(const ExactMatrix& c);
std::vector<std::pair<std::size_t, std::size_t>> support(const ExactMatrix& m);

enum class SignMode {
  Strict,  // q_ij > 0 <=> p_ij = 1 and q_ij < 0 <=> p_ij = 0; zeros are violations
  Weak,    // q_ij > 0 => p_ij = 1 and q_ij < 0 => p_ij = 0; zeros allowed
};

struct SignViolation {
  std::size_t i;
  std::size_t j;
  std::string reason;
};

struct SignPatternReport {
  std::vector<SignViolation> violations;
  std::vector<std::pair<std::size_t, std::size_t>> zero_entries;
  bool passed() const { return violations.empty(); }
};

// Requires Qᵀ P = I (std::invalid_argument otherwise).
SignPatternReport sign_pattern_check(const BinMatrix& p, const ExactMatrix& q, SignMode mode);

struct FacetNormals {
  ExactMatrix columns;  // q_1 .. q_n as columns, i.e. P⁻ᵀ
  ExactVector sum;      // q = P⁻ᵀ e, normal to the facet opposite the origin
};

FacetNormals normals(const BinMatrix& p);

struct Projection {
  ExactVector barycentric;  // one coordinate per facet vertex, summing to 1
  ExactVector foot;         // the projected point in R^n
  bool inside = false;      // all barycentric coordinates >= 0
};

// Orthogonal projection of v onto the affine hull of the given (affinely
// independent) points. Throws DegenerateFacetError otherwise.
Projection project_onto_facet(std::span<const BinVector> facet_vertices, const BinVector& v);

// Reusable form of project_onto_facet for many query points.
class FacetProjector {
 public:
  explicit FacetProjector(std::vector<BinVector> facet_vertices);
  Projection project(const BinVector& v) const;
  const std::vector<BinVector>& vertices() const { return vertices_; }

 private:
  std::vector<BinVector> vertices_;
  ExactMatrix edge_gram_inverse_;  // (EᵀE)⁻¹ for edges E from vertex 0
};

// Vertex ids: 0 is the origin, j >= 1 is column j-1 of P. The chosen vertex
// (default: the first listed) is reflected to the origin; the result holds the
// remaining subset vertices XOR the chosen one, in the listed order.
BinMatrix subsimplex(const BinMatrix& p, std::span<const std::size_t> vertex_ids,
                     std::optional<std::size_t> chosen = std::nullopt);

// All vertices of the simplex represented by p: the origin first, then the
// columns.
std::vector<BinVector> simplex_vertices(const BinMatrix& p);

// Number of right dihedral angles: zero off-diagonal entries of (PᵀP)⁻¹
// (facet pairs away from the origin) plus zero row sums (pairs with the facet
// opposite the origin).
std::size_t right_dihedral_count(const BinMatrix& p);

}  // namespace binsimplex
