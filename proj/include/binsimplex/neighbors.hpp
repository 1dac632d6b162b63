#pragma once

// Facets of a simplex and the cube vertices that complete them to nonobtuse
// or acute simplices.

#include <binsimplex/exact.hpp>
#include <binsimplex/geometry.hpp>

#include <span>
#include <vector>

namespace binsimplex {

// Facet ids: 0 is the facet opposite the origin, j >= 1 the facet opposite
// column j-1 of P.
std::vector<BinVector> facet_vertices(const BinMatrix& p, std::size_t facet);
BinVector opposite_vertex(const BinMatrix& p, std::size_t facet);

// Representation of the simplex spanned by the facet and v: column j-1
// replaced by v, or for the origin facet v moved to the origin.
BinMatrix complete_facet(const BinMatrix& p, std::size_t facet, const BinVector& v);

// True iff some coordinate is constant over all the given vertices.
bool facet_in_cube_facet(std::span<const BinVector> vertices);

enum class Target { Nonobtuse, Acute };

struct NeighborCandidate {
  BinVector vertex;
  Verdict verdict;
};

struct NeighborReport {
  std::size_t facet = 0;
  bool interior = false;  // not contained in a facet of the cube
  BinVector opposite;     // the vertex of P opposite the facet
  std::vector<NeighborCandidate> tested;      // every vertex examined
  std::vector<BinVector> candidates;          // those meeting the target, opposite vertex included
  std::vector<BinVector> altitude_feet;       // vertices whose foot lands on the closed facet
  bool stopped_early = false;

  // Candidates other than the opposite vertex.
  std::size_t other_candidates() const;
};

struct NeighborOptions {
  Target target = Target::Nonobtuse;
  // Stop once two candidates besides the opposite vertex are known; altitude
  // feet are then not computed.
  bool fast = false;
};

NeighborReport neighbor_search(const BinMatrix& p, std::size_t facet, NeighborOptions opts = {});

// Flip p where q is nonzero, 0 where q is zero.
BinVector restricted_antipode(const BinVector& p, const ExactVector& q);

// Cube vertices off the facet's hyperplane whose altitude segment onto that
// hyperplane stays in the closed cube.
std::vector<BinVector> altitudes_inside_cube(const BinMatrix& p, std::size_t facet);

// Every interior facet has at most one nonobtuse completion besides the
// existing vertex. Requires a nonobtuse P whose fully indecomposable diagonal
// blocks are all acute (ComponentNotAcuteError otherwise).
bool verify_one_neighbor_all_acute_components(const BinMatrix& p);

// For an acute P: at every facet at most one other vertex completes to an
// acute simplex and at most one to a nonobtuse simplex, and the acute ones lie
// in {p, antipode(p)}. Returns false on the first facet that breaks this.
bool verify_one_neighbor_acute(const BinMatrix& p);

}  // namespace binsimplex
