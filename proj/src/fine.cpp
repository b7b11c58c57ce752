#include "finepoly/fine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace finepoly {

namespace {

// Inverse of a unimodular integer matrix (solves m * X = I, checks integrality).
IMat inverse_unimodular(const IMat& m) {
  std::vector<IntVec> cols(m.cols, IntVec(m.rows));
  for (int c = 0; c < m.cols; ++c)
    for (int r = 0; r < m.rows; ++r) cols[c][r] = m.at(r, c);
  IMat out(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c) {
    RatVec e(m.rows, Rat(0));
    e[c] = 1;
    RatVec lam;
    if (!solve_columns(cols, e, lam))
      throw std::logic_error("inverse_unimodular: matrix is singular");
    for (int r = 0; r < m.rows; ++r) {
      if (rat_den(lam[r]) != 1)
        throw std::logic_error("inverse_unimodular: matrix is not unimodular");
      out.at(r, c) = rat_num(lam[r]);
    }
  }
  return out;
}

}  // namespace

std::vector<IntVec> hilbert_basis(const SimplicialCone& cone) {
  const std::vector<IntVec>& gens = cone.generators;
  if (gens.empty()) throw std::invalid_argument("hilbert_basis: no generators");
  const int d = static_cast<int>(gens[0].size());
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("hilbert_basis: mixed dimensions");
    if (is_zero(g)) throw std::invalid_argument("hilbert_basis: zero generator");
  }
  const int r = static_cast<int>(gens.size());
  if (rank(IMat::from_rows(gens)) != r)
    throw std::invalid_argument("hilbert_basis: generators are linearly dependent");

  // Every element of the monoid is (point of the half-open fundamental
  // parallelepiped) + (nonnegative integer combination of the generators), so
  // parallelepiped points plus generators generate. The parallelepiped points
  // are enumerated through the Smith form: with u * g * v = s, the columns
  // b_1..b_r of u^-1 are a basis of span(gens) cap Z^d, the generator lattice
  // is spanned by s_i * b_i, and each residue k (0 <= k_i < s_i) reduces to a
  // unique parallelepiped point by taking fractional parts of its coordinates.
  IMat g = transpose(IMat::from_rows(gens));  // columns are the generators
  SnfResult sf = snf(g);
  IMat uinv = inverse_unimodular(sf.u);

  struct Cand {
    IntVec v;
    RatVec lam;  // coordinates with respect to the generators
    Rat total;
  };
  std::vector<Cand> cands;
  for (int i = 0; i < r; ++i) {
    RatVec lam(r, Rat(0));
    lam[i] = 1;
    cands.push_back({gens[i], lam, Rat(1)});
  }

  IntVec k(r, Int(0));
  while (true) {
    if (!is_zero(k)) {
      IntVec y(d, Int(0));
      for (int i = 0; i < r; ++i)
        for (int row = 0; row < d; ++row) y[row] += k[i] * uinv.at(row, i);
      RatVec lam;
      if (!solve_columns(gens, to_rat_vec(y), lam))
        throw std::logic_error("hilbert_basis: residue left the generator span");
      RatVec frac(r);
      Rat total = 0;
      RatVec pt(d, Rat(0));
      for (int i = 0; i < r; ++i) {
        frac[i] = lam[i] - Rat(rat_floor(lam[i]));
        total += frac[i];
        for (int row = 0; row < d; ++row) pt[row] += frac[i] * Rat(gens[i][row]);
      }
      cands.push_back({to_int_vec(pt), frac, total});
    }
    int pos = 0;
    while (pos < r) {
      ++k[pos];
      if (k[pos] < sf.s.at(pos, pos)) break;
      k[pos] = 0;
      ++pos;
    }
    if (pos == r) break;
  }

  // x is reducible iff some other candidate fits under it coordinatewise; such
  // a witness can be taken irreducible and has strictly smaller coordinate sum,
  // so an ascending sweep only needs to compare against survivors.
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.total != b.total) return a.total < b.total;
    return a.v < b.v;
  });
  std::vector<Cand> irred;
  for (const Cand& c : cands) {
    bool reducible = false;
    for (const Cand& y : irred) {
      if (y.total >= c.total) break;
      bool below = true;
      for (int i = 0; i < r && below; ++i) below = y.lam[i] <= c.lam[i];
      if (below) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irred.push_back(c);
  }

  std::vector<IntVec> out;
  out.reserve(irred.size());
  for (const Cand& c : irred) out.push_back(c.v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<IntVec>> triangulate_cone(std::vector<IntVec> gens) {
  if (gens.empty()) throw std::invalid_argument("triangulate_cone: no generators");
  const int d = static_cast<int>(gens[0].size());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const IntVec& g : gens) {
    if (static_cast<int>(g.size()) != d)
      throw std::invalid_argument("triangulate_cone: mixed dimensions");
    if (is_zero(g)) throw std::invalid_argument("triangulate_cone: zero generator");
  }
  if (rank(IMat::from_rows(gens)) == static_cast<int>(gens.size())) return {gens};

  // Pull from the lexicographically smallest generator: cone over each facet
  // that misses it, recursing into the facet. The facets show up as the
  // extreme rays of the dual cone.
  ConeDD dual = cone_dual(d, gens);
  const IntVec v0 = gens[0];
  std::vector<std::vector<IntVec>> out;
  for (const IntVec& b : dual.rays) {
    if (dot(v0, b) == 0) continue;
    std::vector<IntVec> sub;
    for (const IntVec& g : gens)
      if (dot(g, b) == 0) sub.push_back(g);
    if (sub.empty()) continue;
    for (std::vector<IntVec> t : triangulate_cone(std::move(sub))) {
      t.push_back(v0);
      std::sort(t.begin(), t.end());
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CandidateSet candidate_set(const LatticePolytope& p) {
  if (p.dim() != p.ambient)
    throw std::invalid_argument("candidate_set: polytope must be full-dimensional");
  NormalFan fan = normal_fan(p.hull);
  std::map<IntVec, CandidateOrigin> seen;
  for (int vi = 0; vi < static_cast<int>(fan.cones.size()); ++vi) {
    for (const std::vector<IntVec>& tri : triangulate_cone(fan.cones[vi].generators)) {
      for (const IntVec& h : hilbert_basis({tri})) {
        if (seen.count(h)) continue;
        RatVec lam;
        if (!solve_columns(tri, to_rat_vec(h), lam))
          throw std::logic_error("candidate_set: basis element left its cone span");
        seen.emplace(h, CandidateOrigin{vi, tri, lam});
      }
    }
  }
  CandidateSet out;
  out.vectors.reserve(seen.size());
  out.origins.reserve(seen.size());
  for (auto& [v, o] : seen) {
    out.vectors.push_back(v);
    out.origins.push_back(o);
  }
  return out;
}

Polytope fine_interior(const LatticePolytope& p, const Rat& lambda, const CandidateSet& cand) {
  if (lambda <= 0) throw std::invalid_argument("fine_interior: lambda must be positive");
  std::vector<Halfspace> hs;
  hs.reserve(cand.vectors.size());
  for (const IntVec& nu : cand.vectors)
    hs.push_back({nu, lambda * support_min(p.hull, nu) + 1});
  return polytope_from_hrep(p.ambient, hs);
}

Polytope fine_interior(const LatticePolytope& p, const Rat& lambda) {
  return fine_interior(p, lambda, candidate_set(p));
}

Polytope fine_interior(const LatticePolytope& p) { return fine_interior(p, Rat(1)); }

std::vector<IntVec> support_set(const LatticePolytope& p, const Rat& lambda,
                                const CandidateSet& cand, const Polytope& fine) {
  if (fine.empty())
    throw std::invalid_argument("support_set: Fine interior is empty at this dilation");
  std::vector<IntVec> out;
  for (const IntVec& nu : cand.vectors)
    if (support_min(fine, nu) == lambda * support_min(p.hull, nu) + 1) out.push_back(nu);
  return out;
}

std::vector<IntVec> support_set(const LatticePolytope& p, const Rat& lambda) {
  CandidateSet cand = candidate_set(p);
  Polytope fine = fine_interior(p, lambda, cand);
  return support_set(p, lambda, cand, fine);
}

CRegion c_polytope(const LatticePolytope& p, const Rat& lambda) {
  CandidateSet cand = candidate_set(p);
  Polytope fine = fine_interior(p, lambda, cand);
  std::vector<IntVec> support = support_set(p, lambda, cand, fine);
  std::vector<Halfspace> hs;
  hs.reserve(support.size());
  for (const IntVec& nu : support) hs.push_back({nu, lambda * support_min(p.hull, nu)});
  HrepDescription desc = describe_hrep(p.ambient, hs);
  CRegion out;
  out.bounded = desc.bounded();
  out.recession_rays = desc.recession_rays;
  if (out.bounded) out.region = polytope_from_points(p.ambient, desc.vertices);
  return out;
}

}  // namespace finepoly
