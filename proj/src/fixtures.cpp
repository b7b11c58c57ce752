#include "finepoly/fixtures.hpp"

#include <stdexcept>

namespace finepoly {

namespace {

PolytopeDocument doc_of(std::string name, int ambient, const std::vector<IntVec>& verts) {
  PolytopeDocument d;
  d.name = std::move(name);
  d.ambient = ambient;
  for (const IntVec& v : verts) d.vertices.push_back(to_rat_vec(v));
  return d;
}

IntVec unit(int d, int i, Int scale = 1) {
  IntVec v(d, Int(0));
  v[i] = scale;
  return v;
}

void need(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

PolytopeDocument make_fixture(const std::string& family, const std::vector<int>& params) {
  if (family == "unit-simplex") {
    need(params.size() == 1, "unit-simplex takes one parameter: the dimension d");
    int d = params[0];
    need(d >= 1 && d <= 8, "unit-simplex: d must be in 1..8");
    std::vector<IntVec> v{IntVec(d, Int(0))};
    for (int i = 0; i < d; ++i) v.push_back(unit(d, i));
    return doc_of("unit-simplex-" + std::to_string(d), d, v);
  }
  if (family == "scaled-simplex") {
    need(params.size() == 2, "scaled-simplex takes two parameters: dimension d and factor k");
    int d = params[0], k = params[1];
    need(d >= 1 && d <= 8, "scaled-simplex: d must be in 1..8");
    need(k >= 1 && k <= 1000, "scaled-simplex: k must be in 1..1000");
    std::vector<IntVec> v{IntVec(d, Int(0))};
    for (int i = 0; i < d; ++i) v.push_back(unit(d, i, k));
    return doc_of("scaled-simplex-" + std::to_string(d) + "-" + std::to_string(k), d, v);
  }
  if (family == "klein") {
    // Newton simplex of t1^2 + t1 t2^2 + ... + t_d t_{d+1}^2 + t_{d+1},
    // a (d+1)-dimensional simplex on d+2 vertices.
    need(params.size() == 1, "klein takes one parameter: the index d");
    int d = params[0];
    need(d >= 1 && d <= 7, "klein: d must be in 1..7");
    int n = d + 1;
    std::vector<IntVec> v;
    v.push_back(unit(n, 0, 2));
    for (int i = 0; i < d; ++i) {
      IntVec w(n, Int(0));
      w[i] = 1;
      w[i + 1] = 2;
      v.push_back(w);
    }
    v.push_back(unit(n, n - 1));
    return doc_of("klein-" + std::to_string(d), n, v);
  }
  if (family == "delpezzo") {
    need(params.size() == 1, "delpezzo takes one parameter: the index i");
    int i = params[0];
    need(i >= 1 && i <= 3, "delpezzo: i must be in 1..3");
    std::vector<IntVec> v{IntVec(3, Int(0))};
    if (i == 1) {
      v.push_back({2, 0, 0});
      v.push_back({0, 3, 0});
      v.push_back({0, 0, 6});
    } else if (i == 2) {
      v.push_back({2, 0, 0});
      v.push_back({0, 4, 0});
      v.push_back({0, 0, 4});
    } else {
      v.push_back({3, 0, 0});
      v.push_back({0, 3, 0});
      v.push_back({0, 0, 3});
    }
    PolytopeDocument doc = doc_of("delpezzo-" + std::to_string(i), 3, v);
    // Known to be sporadic through an external classification; this toolkit's
    // bounded search cannot certify it, so the document carries an assertion.
    doc.asserted_sporadic = true;
    return doc;
  }
  if (family == "paper-polygon") {
    need(params.size() == 1, "paper-polygon takes one parameter: the index n");
    int n = params[0];
    need(n >= 1 && n <= 4, "paper-polygon: n must be in 1..4");
    std::vector<IntVec> v;
    if (n == 1) {
      v = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};  // unit square
    } else if (n == 2) {
      v = {{0, 0}, {2, 0}, {0, 1}};
    } else if (n == 3) {
      v = {{0, 0}, {1, 0}, {0, 1}};  // unit triangle
    } else {
      v = {{-4, -2}, {0, -2}, {-2, -1}, {-4, -1}};
    }
    return doc_of("paper-polygon-" + std::to_string(n), 2, v);
  }
  throw std::invalid_argument("unknown fixture family '" + family +
                              "'; known families: unit-simplex, scaled-simplex, klein, "
                              "delpezzo, paper-polygon");
}

std::vector<std::string> fixture_usage() {
  return {
      "unit-simplex d     conv{0, e_1, ..., e_d}",
      "scaled-simplex d k conv{0, k e_1, ..., k e_d}",
      "klein d            (d+1)-dim Newton simplex of t1^2 + t1 t2^2 + ... + t_{d+1}",
      "delpezzo i         i in 1..3; lattice tetrahedra with mu = 7/6, 5/4, 4/3",
      "paper-polygon n    n in 1..4; the classic weakly sporadic polygons and the"
      " projectable quadrilateral",
  };
}

}  // namespace finepoly
