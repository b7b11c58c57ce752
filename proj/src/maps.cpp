#include "finepoly/maps.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace finepoly {

LatticePolytope apply_projection(const ProjectionMap& map, const LatticePolytope& p) {
  const IMat& m = map.matrix;
  if (m.cols != p.ambient)
    throw std::invalid_argument("apply_projection: matrix width does not match the ambient dimension");
  if (static_cast<int>(map.offset.size()) != m.rows)
    throw std::invalid_argument("apply_projection: offset does not match the target dimension");
  if (m.rows < 1 || m.rows > m.cols)
    throw std::invalid_argument("apply_projection: target dimension out of range");
  SnfResult s = snf(m);
  for (int i = 0; i < m.rows; ++i)
    if (s.s.at(i, i) != 1)
      throw std::invalid_argument("apply_projection: matrix is not surjective onto the target lattice");
  std::vector<IntVec> images;
  images.reserve(p.vertices.size());
  for (const IntVec& v : p.vertices) images.push_back(vec_add(mat_apply(m, v), map.offset));
  return lattice_polytope(m.rows, images);
}

IMat quotient_map(const IntVec& u) {
  const int d = static_cast<int>(u.size());
  if (d < 2) throw std::invalid_argument("quotient_map: ambient dimension must be at least 2");
  if (is_zero(u)) throw std::invalid_argument("quotient_map: zero direction");
  if (content(u) != 1) throw std::invalid_argument("quotient_map: direction must be primitive");
  IMat col(d, 1);
  for (int i = 0; i < d; ++i) col.at(i, 0) = u[i];
  SnfResult s = snf(col);
  if (s.s.at(0, 0) != 1) throw std::logic_error("quotient_map: Smith form of a primitive vector");
  // s.u * u = +-e1, so the remaining rows of s.u kill u and extend to a lattice
  // basis: the induced map Z^d -> Z^{d-1} is surjective with kernel Z*u.
  IMat out(d - 1, d);
  for (int r = 1; r < d; ++r)
    for (int c = 0; c < d; ++c) out.at(r - 1, c) = s.u.at(r, c);
  return out;
}

Int width_in_direction(const LatticePolytope& p, const IntVec& nu) {
  if (is_zero(nu)) throw std::invalid_argument("width_in_direction: zero direction");
  Rat w = support_max(p.hull, nu) - support_min(p.hull, nu);
  return rat_num(w);  // integral: the extremes are attained at lattice vertices
}

WidthResult lattice_width(const LatticePolytope& p, const Int& bound) {
  if (p.dim() != p.ambient)
    throw std::invalid_argument("lattice_width: polytope must be full-dimensional");
  if (bound < 1) throw std::invalid_argument("lattice_width: bound must be positive");
  const int d = p.ambient;

  // Upper bound from the facet normals; every direction at least as good lies
  // in K = {y : |<u - v, y>| <= w0 for all vertex pairs u, v}, which is compact
  // because the vertex differences span. If the scan box covers the integer
  // points of K, the minimum over the box is the true lattice width.
  std::optional<Rat> w0;
  for (const Halfspace& f : p.hull.facets) {
    Rat w = support_max(p.hull, f.normal) - support_min(p.hull, f.normal);
    if (!w0 || w < *w0) w0 = w;
  }
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      if (i == j) continue;
      hs.push_back({vec_sub(p.vertices[j], p.vertices[i]), -*w0});
    }
  HrepDescription box = describe_hrep(d, hs);
  Int bstar = 0;
  for (const RatVec& v : box.vertices)
    for (const Rat& c : v) bstar = std::max(bstar, rat_floor(c < 0 ? -c : c));
  const bool exhaustive = box.bounded() && bstar <= bound;

  std::optional<Int> best;
  std::vector<IntVec> dirs;
  IntVec lo(d, -bound), hi(d, bound);
  scan_lattice_box(lo, hi, [&](const IntVec& nu) {
    if (is_zero(nu)) return;
    for (const Int& c : nu) {
      if (c == 0) continue;
      if (c < 0) return;  // keep one direction per +/- pair
      break;
    }
    if (content(nu) != 1) return;
    Int w = width_in_direction(p, nu);
    if (!best || w < *best) {
      best = w;
      dirs.assign(1, nu);
    } else if (w == *best) {
      dirs.push_back(nu);
    }
  });
  std::sort(dirs.begin(), dirs.end());
  return {*best, dirs, exhaustive};
}

NormalFormKey affine_normal_form(const LatticePolytope& p, std::size_t vertex_cap) {
  const std::vector<IntVec>& verts = p.vertices;
  if (verts.empty()) throw std::invalid_argument("affine_normal_form: no vertices");
  if (verts.size() > vertex_cap)
    throw std::invalid_argument("affine_normal_form: " + std::to_string(verts.size()) +
                                " vertices exceed the cap of " + std::to_string(vertex_cap) +
                                " (the search is factorial in the vertex count)");
  const int d = p.ambient;
  const int n = static_cast<int>(verts.size());
  if (n == 1) return {d, {IntVec(d, Int(0))}};

  // Minimize the Hermite form of the vertex difference matrix over every base
  // vertex and every column order. An affine unimodular map permutes the same
  // finite set of Hermite forms, so the minimum is an orbit invariant, and it
  // determines the vertex set, so equal keys mean equivalent polytopes.
  std::optional<std::vector<Int>> best;
  IMat best_h;
  for (int i0 = 0; i0 < n; ++i0) {
    std::vector<IntVec> others;
    others.reserve(n - 1);
    for (int i = 0; i < n; ++i)
      if (i != i0) others.push_back(verts[i]);
    std::sort(others.begin(), others.end());
    do {
      IMat diff(d, n - 1);
      for (int j = 0; j < n - 1; ++j)
        for (int r = 0; r < d; ++r) diff.at(r, j) = others[j][r] - verts[i0][r];
      IMat h = hnf(diff).h;
      if (!best || h.a < *best) {
        best = h.a;
        best_h = h;
      }
    } while (std::next_permutation(others.begin(), others.end()));
  }

  NormalFormKey key;
  key.ambient = d;
  key.canonical_vertices.push_back(IntVec(d, Int(0)));
  for (int j = 0; j < best_h.cols; ++j) {
    IntVec col(d);
    for (int r = 0; r < d; ++r) col[r] = best_h.at(r, j);
    key.canonical_vertices.push_back(col);
  }
  return key;
}

std::string NormalFormKey::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
  };
  feed(std::to_string(ambient));
  for (const IntVec& v : canonical_vertices) {
    feed(";");
    for (const Int& c : v) {
      feed(c.str());
      feed(",");
    }
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

bool unimodular_equivalent(const LatticePolytope& a, const LatticePolytope& b,
                           std::size_t vertex_cap) {
  if (a.ambient != b.ambient || a.dim() != b.dim()) return false;
  if (a.vertices.size() != b.vertices.size()) return false;
  return affine_normal_form(a, vertex_cap) == affine_normal_form(b, vertex_cap);
}

}  // namespace finepoly
