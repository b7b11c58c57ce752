#include "finepoly/classify.hpp"

#include "finepoly/lp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace finepoly {

const char* class_name(PolyClass c) {
  switch (c) {
    case PolyClass::not_f_hollow: return "NOT_F_HOLLOW";
    case PolyClass::weakly_sporadic: return "WEAKLY_SPORADIC";
    case PolyClass::projectable: return "PROJECTABLE";
  }
  return "?";
}

const char* sporadic_status_name(SporadicStatus s) {
  switch (s) {
    case SporadicStatus::sporadic: return "SPORADIC";
    case SporadicStatus::not_sporadic: return "NOT_SPORADIC";
    case SporadicStatus::undetermined: return "UNDETERMINED";
  }
  return "?";
}

namespace {

// The one joint LP below is valid for every lambda because the candidate set
// does not depend on the dilation; the reason is that support minima are
// additive inside each witnessing simplicial cone. Checked here at runtime:
// Min_P(nu) = sum lambda_i Min_P(g_i) for nu = sum lambda_i g_i.
void verify_candidate_additivity(const LatticePolytope& p, const CandidateSet& cand) {
  std::map<IntVec, Rat> min_cache;
  auto min_of = [&](const IntVec& nu) {
    auto it = min_cache.find(nu);
    if (it != min_cache.end()) return it->second;
    Rat m = support_min(p.hull, nu);
    min_cache.emplace(nu, m);
    return m;
  };
  for (std::size_t i = 0; i < cand.vectors.size(); ++i) {
    const CandidateOrigin& o = cand.origins[i];
    Rat sum = 0;
    for (std::size_t j = 0; j < o.cone_generators.size(); ++j)
      sum += o.coordinates[j] * min_of(o.cone_generators[j]);
    if (min_of(cand.vectors[i]) != sum)
      throw std::logic_error("minimal_multiplier: support minimum is not additive on a candidate cone");
  }
}

}  // namespace

Rat minimal_multiplier(const LatticePolytope& p, const CandidateSet& cand) {
  verify_candidate_additivity(p, cand);
  const int d = p.ambient;
  std::vector<RatVec> a;
  RatVec b;
  for (const IntVec& nu : cand.vectors) {
    RatVec row = to_rat_vec(nu);
    row.push_back(-support_min(p.hull, nu));
    a.push_back(row);
    b.push_back(Rat(1));
  }
  RatVec lam_row(d + 1, Rat(0));
  lam_row[d] = 1;
  a.push_back(lam_row);
  b.push_back(Rat(0));
  RatVec c(d + 1, Rat(0));
  c[d] = 1;
  LpResult res = lp_minimize(a, b, c);
  if (res.status != LpStatus::optimal)
    throw std::logic_error("minimal_multiplier: the dilation program must have an optimum");
  return res.objective;
}

Rat minimal_multiplier(const LatticePolytope& p) {
  if (p.dim() != p.ambient)
    throw std::invalid_argument("minimal_multiplier: polytope must be full-dimensional");
  return minimal_multiplier(p, candidate_set(p));
}

namespace {

CanonicalFano make_fano(const LatticePolytope& p, const Rat& mu, const Polytope& fine_mu,
                        const std::vector<IntVec>& support) {
  CanonicalFano f;
  f.base_point = fine_mu.vertices[0];
  f.q = lattice_polytope(p.ambient, support);
  if (f.q.dim() != p.ambient)
    throw std::logic_error("canonical_fano: support set is not full-dimensional");
  std::vector<IntVec> interior = interior_lattice_points(f.q.hull);
  if (interior.size() != 1 || !is_zero(interior[0]))
    throw std::logic_error("canonical_fano: origin is not the unique interior lattice point");
  f.q_dual = polar_dual(f.q.hull);
  for (const IntVec& v : p.vertices) {
    RatVec y(p.ambient);
    for (int i = 0; i < p.ambient; ++i) y[i] = mu * Rat(v[i]) - f.base_point[i];
    if (!contains(f.q_dual, y))
      throw std::logic_error("canonical_fano: shifted dilation escapes the polar");
  }
  f.adjunction = (mu - 1) / mu;
  return f;
}

CanonicalProjection make_projection(const LatticePolytope& p, const Rat& mu,
                                    const Polytope& fine_mu) {
  const int d = p.ambient;
  const int k = fine_mu.dim;
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < fine_mu.vertices.size(); ++i)
    diffs.push_back(clear_denominators(vec_sub(fine_mu.vertices[i], fine_mu.vertices[0])));
  std::vector<IntVec> ker = saturated_kernel(IMat::from_rows(diffs));
  if (static_cast<int>(ker.size()) != d - k)
    throw std::logic_error("canonical_projection: kernel rank mismatch");

  CanonicalProjection out;
  out.map.matrix = IMat::from_rows(ker);
  out.map.offset.assign(d - k, Int(0));
  for (int j = 0; j < d - k; ++j) {
    Int mn = dot(out.map.matrix.row(j), p.vertices[0]);
    for (const IntVec& v : p.vertices) mn = std::min(mn, dot(out.map.matrix.row(j), v));
    out.map.offset[j] = -mn;
  }
  out.image = apply_projection(out.map, p);
  if (!fine_interior(out.image, Rat(1)).empty())
    throw std::logic_error("canonical_projection: image is not F-hollow");
  out.image_mu = minimal_multiplier(out.image);
  if (out.image_mu != mu)
    throw std::logic_error("canonical_projection: image multiplier differs from the source");
  out.image_fine_dim = fine_interior(out.image, out.image_mu).dim;
  if (out.image_fine_dim != 0)
    throw std::logic_error("canonical_projection: image Fine interior is not a point");
  return out;
}

}  // namespace

MultiplierReport classify(const LatticePolytope& p) {
  if (p.dim() != p.ambient)
    throw std::invalid_argument("classify: polytope must be full-dimensional");
  CandidateSet cand = candidate_set(p);
  MultiplierReport r;
  r.ambient = p.ambient;
  r.mu = minimal_multiplier(p, cand);
  r.fine_at_mu = fine_interior(p, r.mu, cand);
  if (r.fine_at_mu.empty())
    throw std::logic_error("classify: Fine interior empty at the minimal multiplier");
  r.fine_dim_at_mu = r.fine_at_mu.dim;
  r.support_at_mu = support_set(p, r.mu, cand, r.fine_at_mu);
  r.fine_at_one = r.mu == 1 ? r.fine_at_mu : fine_interior(p, Rat(1), cand);
  if (!r.fine_at_one.empty()) r.kodaira = std::min(p.ambient - 1, r.fine_at_one.dim);
  if (r.mu <= 1) {
    r.cls = PolyClass::not_f_hollow;
  } else if (r.fine_dim_at_mu == 0) {
    r.cls = PolyClass::weakly_sporadic;
    r.fano = make_fano(p, r.mu, r.fine_at_mu, r.support_at_mu);
  } else {
    r.cls = PolyClass::projectable;
    r.projection = make_projection(p, r.mu, r.fine_at_mu);
  }
  return r;
}

CanonicalFano canonical_fano(const LatticePolytope& p) {
  MultiplierReport r = classify(p);
  if (r.cls != PolyClass::weakly_sporadic)
    throw std::invalid_argument("canonical_fano: polytope is not weakly sporadic");
  return *r.fano;
}

CanonicalProjection canonical_projection(const LatticePolytope& p) {
  MultiplierReport r = classify(p);
  if (r.cls != PolyClass::projectable)
    throw std::invalid_argument("canonical_projection: polytope is not projectable");
  return *r.projection;
}

std::optional<int> kodaira_dimension(const LatticePolytope& p) {
  if (p.dim() != p.ambient)
    throw std::invalid_argument("kodaira_dimension: polytope must be full-dimensional");
  Polytope f = fine_interior(p);
  if (f.empty()) return std::nullopt;
  return std::min(p.ambient - 1, f.dim);
}

SporadicityResult sporadicity_check(const LatticePolytope& p, const MultiplierReport& report,
                                    const Int& bound) {
  if (p.dim() != p.ambient)
    throw std::invalid_argument("sporadicity_check: polytope must be full-dimensional");
  if (bound < 1) throw std::invalid_argument("sporadicity_check: bound must be positive");
  if (report.mu <= 1)
    throw std::invalid_argument("sporadicity_check: polytope is not F-hollow");
  const int d = p.ambient;
  SporadicityResult res;

  if (d == 1) {
    res.status = SporadicStatus::sporadic;
    res.certified = true;
    res.note = "one-dimensional F-hollow polytope: no lower dimensions to project to";
    return res;
  }

  if (report.cls == PolyClass::projectable) {
    res.status = SporadicStatus::not_sporadic;
    res.certified = true;
    res.note = "the projection along the Fine interior of the minimal dilation has an F-hollow image";
    res.witness = report.projection->map;
    res.witness_image = report.projection->image;
    return res;
  }

  WidthResult w = lattice_width(p, bound);
  if (w.value == 1) {
    const IntVec& nu = w.directions[0];
    ProjectionMap map;
    map.matrix = IMat::from_rows({nu});
    map.offset = {-rat_num(support_min(p.hull, nu))};
    res.status = SporadicStatus::not_sporadic;
    res.certified = true;
    res.note = "lattice width one: the polytope projects onto the unit segment";
    res.witness = map;
    res.witness_image = apply_projection(map, p);
    return res;
  }

  if (d == 2) {
    if (w.exhaustive) {
      res.status = SporadicStatus::sporadic;
      res.certified = true;
      res.note = "width at least two: every segment image has an interior lattice point";
    } else {
      res.note = "width search was not exhaustive at this bound";
    }
    return res;
  }

  // Codimension-one quotients by a primitive direction. An image of dimension
  // at most two is F-hollow iff it has no interior lattice points, which also
  // prunes the higher-dimensional Fine interior checks.
  bool found = false;
  IntVec lo(d, -bound), hi(d, bound);
  scan_lattice_box(lo, hi, [&](const IntVec& u) {
    if (found || is_zero(u)) return;
    for (const Int& c : u) {
      if (c == 0) continue;
      if (c < 0) return;
      break;
    }
    if (content(u) != 1) return;
    ProjectionMap map;
    map.matrix = quotient_map(u);
    map.offset.assign(d - 1, Int(0));
    LatticePolytope img = apply_projection(map, p);
    if (!interior_lattice_points(img.hull).empty()) return;
    if (d - 1 >= 3 && !fine_interior(img, Rat(1)).empty()) return;
    found = true;
    res.status = SporadicStatus::not_sporadic;
    res.certified = true;
    res.note = "quotient by a primitive direction has an F-hollow image";
    res.witness = map;
    res.witness_image = img;
  });
  if (!found)
    res.note = "no F-hollow image found among width directions and codimension-one quotients "
               "within bound " + bound.str() + "; search not exhaustive";
  return res;
}

SporadicityResult sporadicity_check(const LatticePolytope& p, const Int& bound) {
  return sporadicity_check(p, classify(p), bound);
}

}  // namespace finepoly
