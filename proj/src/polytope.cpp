#include "finepoly/polytope.hpp"

#include <algorithm>
#include <cstdint>

namespace finepoly {

namespace {

// Small bitset over the constraints processed so far.
struct TightSet {
  std::vector<std::uint64_t> w;

  void push(bool b) {
    std::size_t bit = size_++;
    if (bit % 64 == 0) w.push_back(0);
    if (b) w.back() |= std::uint64_t(1) << (bit % 64);
  }
  std::size_t size_ = 0;

  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet r;
    r.size_ = a.size_;
    r.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }
  bool subset_of(const TightSet& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
};

struct DdRay {
  IntVec v;
  TightSet tight;
};

IntVec unit_vec(int n, int i) {
  IntVec e(n);
  e[i] = 1;
  return e;
}

}  // namespace

ConeDD cone_dual(int n, const std::vector<IntVec>& constraint_rows) {
  if (n <= 0) throw std::invalid_argument("cone_dual: ambient dimension must be positive");

  std::vector<IntVec> lin;
  for (int i = 0; i < n; ++i) lin.push_back(unit_vec(n, i));
  std::vector<DdRay> rays;
  std::size_t processed = 0;

  for (const IntVec& c : constraint_rows) {
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("cone_dual: row arity");
    if (is_zero(c)) continue;  // trivial 0 >= 0

    // A lineality vector escaping the hyperplane turns into the single new ray;
    // everything else is shifted into the hyperplane (old constraints vanish on
    // the lineality space, so existing tight sets are unaffected).
    int star = -1;
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(c, lin[i]) != 0) {
        star = static_cast<int>(i);
        break;
      }
    if (star >= 0) {
      IntVec l = lin[static_cast<std::size_t>(star)];
      Int dl = dot(c, l);
      if (dl < 0) {
        for (Int& x : l) x = -x;
        dl = -dl;
      }
      std::vector<IntVec> new_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (static_cast<int>(i) == star) continue;
        Int di = dot(c, lin[i]);
        if (di == 0) {
          new_lin.push_back(lin[i]);
          continue;
        }
        IntVec v(n);
        for (int j = 0; j < n; ++j) v[j] = dl * lin[i][j] - di * l[j];
        new_lin.push_back(primitive(v));
      }
      for (DdRay& r : rays) {
        Int dr = dot(c, r.v);
        if (dr == 0) {
          r.tight.push(true);
          continue;
        }
        IntVec v(n);
        for (int j = 0; j < n; ++j) v[j] = dl * r.v[j] - dr * l[j];
        r.v = primitive(v);
        r.tight.push(true);
      }
      DdRay nr;
      nr.v = l;
      for (std::size_t k = 0; k < processed; ++k) nr.tight.push(true);
      nr.tight.push(false);
      rays.push_back(std::move(nr));
      lin = std::move(new_lin);
      ++processed;
      continue;
    }

    // Motzkin step on the rays.
    std::vector<Int> d(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      d[i] = dot(c, rays[i].v);
      if (d[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i) rays[i].tight.push(d[i] == 0);
      ++processed;
      continue;
    }

    auto adjacent = [&](std::size_t a, std::size_t b) {
      // Extreme rays a, b are adjacent iff no third ray lies in the minimal
      // common face, i.e. is tight on everything both are tight on.
      TightSet common = TightSet::intersect(rays[a].tight, rays[b].tight);
      for (std::size_t k = 0; k < rays.size(); ++k) {
        if (k == a || k == b) continue;
        if (common.subset_of(rays[k].tight)) return false;
      }
      return true;
    };

    std::vector<DdRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (d[i] < 0) continue;
      DdRay r = rays[i];
      r.tight.push(d[i] == 0);
      next.push_back(std::move(r));
    }
    for (std::size_t ip = 0; ip < rays.size(); ++ip) {
      if (d[ip] <= 0) continue;
      for (std::size_t in = 0; in < rays.size(); ++in) {
        if (d[in] >= 0) continue;
        if (!adjacent(ip, in)) continue;
        IntVec v(n);
        for (int j = 0; j < n; ++j) v[j] = d[ip] * rays[in].v[j] - d[in] * rays[ip].v[j];
        DdRay nr;
        nr.v = primitive(v);
        // The combination is tight exactly where both parents are: old dots are
        // nonnegative on both, so the positive mix vanishes iff both vanish.
        nr.tight = TightSet::intersect(rays[ip].tight, rays[in].tight);
        nr.tight.push(true);
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    ++processed;
  }

  ConeDD out;
  for (const DdRay& r : rays) out.rays.push_back(r.v);
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  if (!lin.empty()) {
    HnfResult h = hnf(IMat::from_rows(lin));
    for (int i = 0; i < h.h.rows; ++i) {
      IntVec row = h.h.row(i);
      if (!is_zero(row)) out.lineality.push_back(primitive(row));
    }
  }
  return out;
}

namespace {

Polytope canonical_empty(int ambient) {
  Polytope p;
  p.ambient = ambient;
  p.dim = -1;
  Halfspace a{unit_vec(ambient, 0), Rat(1)};
  IntVec neg = a.normal;
  for (Int& x : neg) x = -x;
  Halfspace b{neg, Rat(1)};
  p.facets = {b, a};
  return p;
}

int affine_rank(const std::vector<RatVec>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<IntVec> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec diff = vec_sub(pts[i], pts[0]);
    IntVec cleared = clear_denominators(diff);
    if (!is_zero(cleared)) rows.push_back(cleared);
  }
  if (rows.empty()) return 0;
  return rank(IMat::from_rows(rows));
}

Polytope build_from_points(int ambient, std::vector<RatVec> pts, bool rebuilt);

Polytope assemble(int ambient, const std::vector<RatVec>& pts, const ConeDD& polar,
                  bool rebuilt) {
  // Rays of the polar cone are the facets, its lineality the affine hull.
  std::vector<Halfspace> facets;
  for (const IntVec& ray : polar.rays) {
    IntVec normal(ray.begin() + 1, ray.end());
    if (is_zero(normal)) continue;  // the trivial inequality 1 >= 0
    Int g = content(normal);
    for (Int& x : normal) x /= g;
    facets.push_back({normal, Rat(-ray[0], g)});
  }
  for (const IntVec& l : polar.lineality) {
    IntVec normal(l.begin() + 1, l.end());
    Int g = content(normal);  // nonzero: (1,0,...,0) cannot lie in the lineality
    IntVec pos(normal), neg(normal);
    for (Int& x : pos) x /= g;
    for (Int& x : neg) x = -x / g;
    facets.push_back({pos, Rat(-l[0], g)});
    facets.push_back({neg, Rat(l[0], g)});
  }
  std::sort(facets.begin(), facets.end(), [](const Halfspace& a, const Halfspace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.rhs < b.rhs;
  });

  // A point is a vertex iff its tight facet normals span the full space.
  std::vector<RatVec> verts;
  for (const RatVec& v : pts) {
    std::vector<IntVec> tight;
    for (const Halfspace& f : facets)
      if (dot(v, to_rat_vec(f.normal)) == f.rhs) tight.push_back(f.normal);
    if (!tight.empty() && rank(IMat::from_rows(tight)) == ambient) verts.push_back(v);
  }

  if (!rebuilt && verts.size() != pts.size()) {
    // Non-extreme input points can perturb the facet representatives of
    // lower-dimensional hulls; rebuilding from the vertex set alone makes the
    // result a function of the hull, not of the presentation.
    return build_from_points(ambient, verts, true);
  }

  Polytope p;
  p.ambient = ambient;
  p.vertices = std::move(verts);
  p.facets = std::move(facets);
  p.dim = affine_rank(p.vertices);
  return p;
}

Polytope build_from_points(int ambient, std::vector<RatVec> pts, bool rebuilt) {
  if (ambient <= 0) throw std::invalid_argument("polytope: ambient dimension must be positive");
  for (const RatVec& v : pts)
    if (static_cast<int>(v.size()) != ambient)
      throw std::invalid_argument("polytope: point arity mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return canonical_empty(ambient);

  std::vector<IntVec> rows;
  for (const RatVec& v : pts) {
    RatVec row(static_cast<std::size_t>(ambient) + 1);
    row[0] = 1;
    for (int j = 0; j < ambient; ++j) row[j + 1] = v[j];
    rows.push_back(primitive_rat(row));
  }
  ConeDD polar = cone_dual(ambient + 1, rows);
  return assemble(ambient, pts, polar, rebuilt);
}

}  // namespace

Polytope polytope_from_points(int ambient, const std::vector<RatVec>& points) {
  return build_from_points(ambient, points, false);
}

LatticePolytope lattice_polytope(int ambient, const std::vector<IntVec>& points) {
  if (points.empty()) throw std::invalid_argument("lattice_polytope: no points");
  std::vector<RatVec> pts;
  for (const IntVec& v : points) pts.push_back(to_rat_vec(v));
  LatticePolytope lp;
  lp.ambient = ambient;
  lp.hull = polytope_from_points(ambient, pts);
  for (const RatVec& v : lp.hull.vertices) lp.vertices.push_back(to_int_vec(v));
  return lp;
}

HrepDescription describe_hrep(int ambient, const std::vector<Halfspace>& halfspaces) {
  std::vector<IntVec> rows;
  for (const Halfspace& h : halfspaces) {
    if (static_cast<int>(h.normal.size()) != ambient)
      throw std::invalid_argument("describe_hrep: normal arity mismatch");
    RatVec row(static_cast<std::size_t>(ambient) + 1);
    row[0] = -h.rhs;
    for (int j = 0; j < ambient; ++j) row[j + 1] = Rat(h.normal[j]);
    if (is_zero(clear_denominators(row))) continue;
    rows.push_back(primitive_rat(row));
  }
  rows.push_back(unit_vec(ambient + 1, 0));  // homogenization: t >= 0

  ConeDD cone = cone_dual(ambient + 1, rows);
  HrepDescription out;
  for (const IntVec& l : cone.lineality) {
    // t >= 0 pins the homogenizing coordinate of any line to zero.
    IntVec space(l.begin() + 1, l.end());
    out.lines.push_back(primitive(space));
  }
  for (const IntVec& r : cone.rays) {
    if (r[0] == 0) {
      IntVec space(r.begin() + 1, r.end());
      out.recession_rays.push_back(primitive(space));
    } else {
      RatVec v(static_cast<std::size_t>(ambient));
      for (int j = 0; j < ambient; ++j) v[j] = Rat(r[j + 1], r[0]);
      out.vertices.push_back(std::move(v));
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

Polytope polytope_from_hrep(int ambient, const std::vector<Halfspace>& halfspaces) {
  HrepDescription d = describe_hrep(ambient, halfspaces);
  if (!d.bounded()) throw std::invalid_argument("polytope_from_hrep: region is unbounded");
  if (d.vertices.empty()) return canonical_empty(ambient);
  return polytope_from_points(ambient, d.vertices);
}

Rat support_min(const Polytope& p, const IntVec& direction) {
  if (p.empty()) throw std::invalid_argument("support_min: empty polytope");
  RatVec dir = to_rat_vec(direction);
  Rat best = dot(p.vertices[0], dir);
  for (std::size_t i = 1; i < p.vertices.size(); ++i) best = std::min(best, dot(p.vertices[i], dir));
  return best;
}

Rat support_max(const Polytope& p, const IntVec& direction) {
  if (p.empty()) throw std::invalid_argument("support_max: empty polytope");
  RatVec dir = to_rat_vec(direction);
  Rat best = dot(p.vertices[0], dir);
  for (std::size_t i = 1; i < p.vertices.size(); ++i) best = std::max(best, dot(p.vertices[i], dir));
  return best;
}

bool contains(const Polytope& p, const RatVec& x, bool strict) {
  if (p.empty()) return false;
  for (const Halfspace& f : p.facets) {
    Rat lhs = dot(x, to_rat_vec(f.normal));
    if (strict ? lhs <= f.rhs : lhs < f.rhs) return false;
  }
  return true;
}

namespace {

template <typename F>
void scan_box(const IntVec& lo, const IntVec& hi, F&& fn) {
  int n = static_cast<int>(lo.size());
  for (int i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVec cur = lo;
  for (;;) {
    fn(cur);
    int i = 0;
    while (i < n) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

std::vector<IntVec> points_in(const Polytope& p, bool strict) {
  std::vector<IntVec> out;
  if (p.empty()) return out;
  if (strict && p.dim < p.ambient) return out;
  IntVec lo(p.ambient), hi(p.ambient);
  for (int i = 0; i < p.ambient; ++i) {
    Rat mn = p.vertices[0][i], mx = p.vertices[0][i];
    for (const RatVec& v : p.vertices) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = rat_ceil(mn);
    hi[i] = rat_floor(mx);
  }
  scan_box(lo, hi, [&](const IntVec& x) {
    if (contains(p, to_rat_vec(x), strict)) out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void scan_lattice_box(const IntVec& lo, const IntVec& hi,
                      const std::function<void(const IntVec&)>& fn) {
  scan_box(lo, hi, fn);
}

std::vector<IntVec> lattice_points(const Polytope& p) { return points_in(p, false); }

std::vector<IntVec> interior_lattice_points(const Polytope& p) { return points_in(p, true); }

namespace {

Rat volume_full(const Polytope& p) {
  // p is full-dimensional in its ambient space. Sum over the pyramids from the
  // first vertex to each facet; a facet's (n-1)-volume is measured through the
  // coordinate projection along any axis its normal meets, which keeps the
  // whole computation rational: pyramid = slack * vol(proj facet) / (n * |a_j|).
  int n = p.ambient;
  if (n == 1) {
    Rat mn = p.vertices.front()[0], mx = p.vertices.back()[0];
    return mx - mn;
  }
  const RatVec& apex = p.vertices[0];
  Rat total = 0;
  for (const Halfspace& f : p.facets) {
    Rat slack = dot(apex, to_rat_vec(f.normal)) - f.rhs;
    if (slack == 0) continue;
    int j = 0;
    while (f.normal[j] == 0) ++j;
    std::vector<RatVec> proj;
    for (const RatVec& v : p.vertices) {
      if (dot(v, to_rat_vec(f.normal)) != f.rhs) continue;
      RatVec q;
      q.reserve(static_cast<std::size_t>(n) - 1);
      for (int k = 0; k < n; ++k)
        if (k != j) q.push_back(v[k]);
      proj.push_back(std::move(q));
    }
    total += slack * volume_full(polytope_from_points(n - 1, proj)) / int_abs(f.normal[j]);
  }
  return total / n;
}

}  // namespace

Rat volume(const Polytope& p) {
  if (p.empty() || p.dim < p.ambient) return Rat(0);
  return volume_full(p);
}

Polytope polar_dual(const Polytope& p) {
  if (p.empty()) throw std::invalid_argument("polar_dual: empty polytope");
  for (const Halfspace& f : p.facets)
    if (f.rhs >= 0)
      throw std::invalid_argument("polar_dual: origin is not strictly interior");
  std::vector<Halfspace> hs;
  for (const RatVec& v : p.vertices) {
    IntVec w = clear_denominators(v);  // v is a vertex of a full-dim polytope: nonzero
    Int l = 1;
    for (std::size_t i = 0; i < v.size(); ++i) l = int_lcm(l, rat_den(v[i]));
    Int g = content(w);
    for (Int& x : w) x /= g;
    hs.push_back({w, Rat(-l, g)});
  }
  return polytope_from_hrep(p.ambient, hs);
}

Polytope scale(const Polytope& p, const Rat& factor) {
  if (factor <= 0) throw std::invalid_argument("scale: factor must be positive");
  Polytope q = p;
  for (RatVec& v : q.vertices)
    for (Rat& x : v) x *= factor;
  for (Halfspace& f : q.facets) f.rhs *= factor;
  return q;
}

Polytope translate(const Polytope& p, const RatVec& offset) {
  if (static_cast<int>(offset.size()) != p.ambient)
    throw std::invalid_argument("translate: offset arity mismatch");
  Polytope q = p;
  for (RatVec& v : q.vertices) v = vec_add(v, offset);
  for (Halfspace& f : q.facets) f.rhs += dot(offset, to_rat_vec(f.normal));
  return q;
}

bool same_polytope(const Polytope& a, const Polytope& b) {
  if (a.ambient != b.ambient || a.dim != b.dim) return false;
  return a.vertices == b.vertices;
}

NormalFan normal_fan(const Polytope& p) {
  if (p.empty() || p.dim != p.ambient)
    throw std::invalid_argument("normal_fan: polytope must be full-dimensional");
  NormalFan fan;
  for (const RatVec& v : p.vertices) {
    NormalFan::MaxCone cone;
    cone.vertex = v;
    for (const Halfspace& f : p.facets)
      if (dot(v, to_rat_vec(f.normal)) == f.rhs) cone.generators.push_back(f.normal);
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace finepoly
