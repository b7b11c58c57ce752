#pragma once

#include "finepoly/polytope.hpp"

namespace finepoly {

// A simplicial lattice cone: linearly independent integer generators.
struct SimplicialCone {
  std::vector<IntVec> generators;
};

// Minimal generating set (the irreducible elements) of cone(generators) cap Z^d.
// Throws on dependent or empty generator lists.
std::vector<IntVec> hilbert_basis(const SimplicialCone& cone);

// Triangulation of a pointed cone into simplicial subcones spanned by subsets
// of the (extreme-ray) generators: pulling triangulation from the
// lexicographically smallest generator, recursing into the facets.
std::vector<std::vector<IntVec>> triangulate_cone(std::vector<IntVec> generators);

// Finitely many inner normals that suffice to carve out every Fine interior of
// every dilation of P: the union of Hilbert bases over a simplicial
// triangulation of each maximal cone of the normal fan. The origins record,
// per vector, one witnessing simplicial cone and the coordinates in it (used
// by consistency checks: support minima are additive inside each cone).
struct CandidateOrigin {
  int vertex_index = 0;
  std::vector<IntVec> cone_generators;
  RatVec coordinates;
};
struct CandidateSet {
  std::vector<IntVec> vectors;           // sorted, unique
  std::vector<CandidateOrigin> origins;  // parallel to vectors
};
CandidateSet candidate_set(const LatticePolytope& p);

// F(lambda P) = {x : <x,nu> >= lambda*min_P(nu) + 1 for all nonzero nu in the
// dual lattice}; the candidate set reduces that to finitely many halfspaces.
// Requires a full-dimensional p and lambda > 0.
Polytope fine_interior(const LatticePolytope& p, const Rat& lambda, const CandidateSet& cand);
Polytope fine_interior(const LatticePolytope& p, const Rat& lambda);
Polytope fine_interior(const LatticePolytope& p);

// Directions whose bound is attained with slack exactly one:
// {nu : min over F(lambda P) of <.,nu> == lambda*min_P(nu) + 1}.
// Throws when F(lambda P) is empty.
std::vector<IntVec> support_set(const LatticePolytope& p, const Rat& lambda,
                                const CandidateSet& cand, const Polytope& fine);
std::vector<IntVec> support_set(const LatticePolytope& p, const Rat& lambda);

// {x : <x,nu> >= lambda*min_P(nu) for nu in the support set}. The support set
// spans positively whenever F is nonempty, so this is bounded in practice; the
// flag reports it and the region is only meaningful when bounded.
struct CRegion {
  bool bounded = false;
  Polytope region;
  std::vector<IntVec> recession_rays;
};
CRegion c_polytope(const LatticePolytope& p, const Rat& lambda);

}  // namespace finepoly
