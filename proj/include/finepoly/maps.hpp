#pragma once

#include "finepoly/polytope.hpp"

#include <string>

namespace finepoly {

// Affine lattice map x -> matrix*x + offset. For projections the matrix must
// be surjective onto the target lattice Z^rows (checked through the Smith
// form), so lattice points map onto lattice points.
struct ProjectionMap {
  IMat matrix;
  IntVec offset;
};

LatticePolytope apply_projection(const ProjectionMap& map, const LatticePolytope& p);

// A (d-1) x d integer matrix that is surjective onto Z^{d-1} with kernel
// exactly Z*u. Requires u primitive and nonzero.
IMat quotient_map(const IntVec& u);

// Width of p in direction nu: max <x,nu> - min <x,nu> over p.
Int width_in_direction(const LatticePolytope& p, const IntVec& nu);

// Minimal width over primitive directions scanned in the box [-bound, bound]^d
// (one direction per +/- pair). `exhaustive` is set when the scanned box
// provably contains every direction whose width does not exceed the best facet
// normal width, in which case `value` is the true lattice width.
struct WidthResult {
  Int value;
  std::vector<IntVec> directions;
  bool exhaustive = false;
};
WidthResult lattice_width(const LatticePolytope& p, const Int& bound);

// Canonical representative of the orbit of p under affine unimodular maps:
// the lexicographically smallest Hermite form of the vertex difference matrix
// over all choices of base vertex and vertex order. Two lattice polytopes are
// affinely unimodularly equivalent iff their keys are equal. Factorial in the
// vertex count; throws beyond `vertex_cap` vertices.
struct NormalFormKey {
  int ambient = 0;
  std::vector<IntVec> canonical_vertices;

  bool operator==(const NormalFormKey& o) const = default;
  std::string digest() const;  // short hex fingerprint for display
};
NormalFormKey affine_normal_form(const LatticePolytope& p, std::size_t vertex_cap = 10);

bool unimodular_equivalent(const LatticePolytope& a, const LatticePolytope& b,
                           std::size_t vertex_cap = 10);

}  // namespace finepoly
