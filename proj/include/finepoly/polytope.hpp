#pragma once

#include "finepoly/linalg.hpp"
#include "finepoly/rat.hpp"

#include <functional>

namespace finepoly {

// One closed halfspace <x, normal> >= rhs with a primitive integer normal.
struct Halfspace {
  IntVec normal;
  Rat rhs;

  bool operator==(const Halfspace& o) const { return normal == o.normal && rhs == o.rhs; }
};

// A rational polytope carrying both descriptions. Always canonical: vertices
// sorted lexicographically, facets sorted by (normal, rhs), rhs equal to the
// exact minimum of the normal over the polytope. The empty polytope has
// dim == -1 and no vertices. Lower-dimensional polytopes carry their affine
// hull as pairs of opposite halfspaces inside `facets`.
struct Polytope {
  int ambient = 0;
  int dim = -1;
  std::vector<RatVec> vertices;
  std::vector<Halfspace> facets;

  bool empty() const { return dim < 0; }
};

// Lattice polytope: integral vertex set plus the hull data.
struct LatticePolytope {
  int ambient = 0;
  std::vector<IntVec> vertices;
  Polytope hull;

  int dim() const { return hull.dim; }
};

// ---- generic cone double description ----------------------------------------

// Dual description of the cone {y in R^n : <c, y> >= 0 for all rows c}:
// cone = span(lineality) + nonnegative span(rays), with the rays extreme
// modulo the lineality space. All vectors primitive integer, deterministic.
struct ConeDD {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
};
ConeDD cone_dual(int n, const std::vector<IntVec>& constraint_rows);

// ---- construction ------------------------------------------------------------

Polytope polytope_from_points(int ambient, const std::vector<RatVec>& points);
LatticePolytope lattice_polytope(int ambient, const std::vector<IntVec>& points);

// Raw dual description of {x : <x, normal_i> >= rhs_i}.
struct HrepDescription {
  std::vector<RatVec> vertices;
  std::vector<IntVec> recession_rays;
  std::vector<IntVec> lines;
  bool bounded() const { return recession_rays.empty() && lines.empty(); }
};
HrepDescription describe_hrep(int ambient, const std::vector<Halfspace>& halfspaces);

// Polytope from an H-representation; throws std::invalid_argument when the
// region is unbounded. The result is canonical (vertices recomputed into a
// fresh irredundant facet description).
Polytope polytope_from_hrep(int ambient, const std::vector<Halfspace>& halfspaces);

// ---- queries -----------------------------------------------------------------

// min over the polytope of <x, direction>; throws on the empty polytope.
Rat support_min(const Polytope& p, const IntVec& direction);
Rat support_max(const Polytope& p, const IntVec& direction);

bool contains(const Polytope& p, const RatVec& x, bool strict = false);

// Visit every integer point of the coordinate box [lo, hi] (empty when some
// lo[i] > hi[i]).
void scan_lattice_box(const IntVec& lo, const IntVec& hi,
                      const std::function<void(const IntVec&)>& fn);

// All lattice points (coordinate-box scan; exact membership through facets).
std::vector<IntVec> lattice_points(const Polytope& p);
// Lattice points satisfying every facet strictly; empty for dim < ambient.
std::vector<IntVec> interior_lattice_points(const Polytope& p);

// Exact Euclidean volume (0 when dim < ambient).
Rat volume(const Polytope& p);

// {x : <x, v> >= -1 for every vertex v}; requires 0 strictly interior.
Polytope polar_dual(const Polytope& p);

Polytope scale(const Polytope& p, const Rat& factor);
Polytope translate(const Polytope& p, const RatVec& offset);

bool same_polytope(const Polytope& a, const Polytope& b);

// ---- normal fan ---------------------------------------------------------------

// One maximal cone per vertex, generated by the primitive inward normals of the
// facets through that vertex. Requires a full-dimensional polytope.
struct NormalFan {
  struct MaxCone {
    RatVec vertex;
    std::vector<IntVec> generators;
  };
  std::vector<MaxCone> cones;
};
NormalFan normal_fan(const Polytope& p);

}  // namespace finepoly
