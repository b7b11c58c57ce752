#pragma once

#include "finepoly/fine.hpp"
#include "finepoly/maps.hpp"

#include <optional>
#include <string>

namespace finepoly {

// Trichotomy at the minimal multiplier mu = min{lambda > 0 : F(lambda P) != 0}:
// mu <= 1 means F(P) itself is nonempty; otherwise P is F-hollow and the
// dimension of F(mu P) separates the point case from the positive-dimensional
// one.
enum class PolyClass { not_f_hollow, weakly_sporadic, projectable };
const char* class_name(PolyClass c);

// Weakly sporadic case: F(mu P) is a single point p, Q = conv(support set) is
// a canonical Fano polytope (origin is its unique interior lattice point), and
// mu P - p sits inside the polar Q*.
struct CanonicalFano {
  RatVec base_point;
  LatticePolytope q;
  Polytope q_dual;
  Rat adjunction;  // (mu - 1) / mu
};

// Projectable case: collapsing the directions of F(mu P) is a lattice
// projection whose image is F-hollow with the same multiplier and a
// zero-dimensional Fine interior at that multiplier.
struct CanonicalProjection {
  ProjectionMap map;
  LatticePolytope image;
  Rat image_mu;
  int image_fine_dim = 0;
};

struct MultiplierReport {
  int ambient = 0;
  Rat mu;
  Polytope fine_at_mu;
  int fine_dim_at_mu = -1;
  std::vector<IntVec> support_at_mu;
  PolyClass cls = PolyClass::not_f_hollow;
  std::optional<CanonicalFano> fano;
  std::optional<CanonicalProjection> projection;
  Polytope fine_at_one;
  std::optional<int> kodaira;  // nullopt encodes minus infinity
};

// Solved as one exact linear program in (x, lambda): minimize lambda subject
// to <x, nu> - lambda * min_P(nu) >= 1 over the candidate set, lambda >= 0.
Rat minimal_multiplier(const LatticePolytope& p);
Rat minimal_multiplier(const LatticePolytope& p, const CandidateSet& cand);

MultiplierReport classify(const LatticePolytope& p);

// Wrappers that classify and insist on the matching class
// (std::invalid_argument otherwise).
CanonicalFano canonical_fano(const LatticePolytope& p);
CanonicalProjection canonical_projection(const LatticePolytope& p);

// min(dim P - 1, dim F(P)), or nullopt (minus infinity) when F(P) is empty.
std::optional<int> kodaira_dimension(const LatticePolytope& p);

// Does an F-hollow polytope project onto some lower-dimensional F-hollow
// polytope? `certified` marks answers backed by a verified witness or a proof
// (exhaustive width search in the plane, the trivial segment case); bounded
// searches that find nothing return `undetermined` and stay uncertified.
enum class SporadicStatus { sporadic, not_sporadic, undetermined };
const char* sporadic_status_name(SporadicStatus s);

struct SporadicityResult {
  SporadicStatus status = SporadicStatus::undetermined;
  bool certified = false;
  std::string note;
  std::optional<ProjectionMap> witness;
  std::optional<LatticePolytope> witness_image;
};
SporadicityResult sporadicity_check(const LatticePolytope& p, const MultiplierReport& report,
                                    const Int& bound = 6);
SporadicityResult sporadicity_check(const LatticePolytope& p, const Int& bound = 6);

}  // namespace finepoly
