#pragma once

#include "finepoly/rat.hpp"

namespace finepoly {

// Dense row-major integer matrix. Deliberately minimal: the polytope code needs
// exact elimination, not a linear algebra framework.
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  IntVec row(int r) const {
    IntVec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
  }
  void set_row(int r, const IntVec& v) {
    for (int c = 0; c < cols; ++c) at(r, c) = v[c];
  }

  static IMat identity(int n);
  static IMat from_rows(const std::vector<IntVec>& rows_in);

  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IMat mat_mul(const IMat& x, const IMat& y);
IMat transpose(const IMat& m);
IntVec mat_apply(const IMat& m, const IntVec& v);

// Exact determinant (square matrices only), fraction-free Bareiss elimination.
Int det(const IMat& m);

// Rank over the rationals.
int rank(const IMat& m);

// gcd of the entries; 0 for the zero vector.
Int content(const IntVec& v);

// v divided by its content. The zero vector has no primitive multiple: throws.
IntVec primitive(const IntVec& v);

// Row-style Hermite normal form: h = u * a with u unimodular. Pivots positive,
// entries above each pivot reduced into [0, pivot), zero rows collected at the
// bottom. This normal form is unique, so hnf(h).h == h.
struct HnfResult {
  IMat h;
  IMat u;
};
HnfResult hnf(const IMat& m);

// Smith normal form: s = u * a * v with u, v unimodular, s diagonal with
// non-negative entries and s[i] | s[i+1].
struct SnfResult {
  IMat s;
  IMat u;
  IMat v;
};
SnfResult snf(const IMat& m);

// Basis of {x in Z^cols : m x = 0}. The integer kernel of a matrix is always a
// saturated sublattice (a direct summand), and the basis returned here is the
// HNF-canonical one, so the result is deterministic. Certified by the SNF of
// the basis matrix having all-ones diagonal; see the tests.
std::vector<IntVec> saturated_kernel(const IMat& m);

// Solve g * lambda = x exactly over the rationals, where the columns of g are
// linearly independent. Returns false if x is outside the column span.
bool solve_columns(const std::vector<IntVec>& g_cols, const RatVec& x, RatVec& lambda);

bool is_unimodular(const IMat& m);

// l * v with l the lcm of the denominators (an integer vector).
IntVec clear_denominators(const RatVec& v);

// Primitive integer direction of a nonzero rational vector.
IntVec primitive_rat(const RatVec& v);

}  // namespace finepoly
