#include "finepoly/linalg.hpp"

#include <algorithm>

namespace finepoly {

IMat IMat::identity(int n) {
  IMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IMat IMat::from_rows(const std::vector<IntVec>& rows_in) {
  if (rows_in.empty()) return IMat(0, 0);
  IMat m(static_cast<int>(rows_in.size()), static_cast<int>(rows_in[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows_in[r].size()) != m.cols)
      throw std::invalid_argument("IMat::from_rows: ragged rows");
    m.set_row(r, rows_in[r]);
  }
  return m;
}

IMat mat_mul(const IMat& x, const IMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  IMat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

IMat transpose(const IMat& m) {
  IMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

IntVec mat_apply(const IMat& m, const IntVec& v) {
  if (m.cols != static_cast<int>(v.size()))
    throw std::invalid_argument("mat_apply: dimension mismatch");
  IntVec r(m.rows);
  for (int i = 0; i < m.rows; ++i) {
    Int acc = 0;
    for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Int det(const IMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  int n = m.rows;
  if (n == 0) return 1;
  IMat w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j)) / prev;
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

int rank(const IMat& m) {
  // Rational rank via fraction-free elimination on a working copy.
  IMat w = m;
  int rk = 0;
  for (int c = 0; c < w.cols && rk < w.rows; ++c) {
    int p = -1;
    for (int i = rk; i < w.rows; ++i)
      if (w.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(rk, j), w.at(p, j));
    for (int i = rk + 1; i < w.rows; ++i) {
      if (w.at(i, c) == 0) continue;
      Int f1 = w.at(rk, c), f2 = w.at(i, c);
      for (int j = 0; j < w.cols; ++j) w.at(i, j) = w.at(i, j) * f1 - w.at(rk, j) * f2;
    }
    ++rk;
  }
  return rk;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = int_gcd(g, x);
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

namespace {

// Extended Euclid: returns g = gcd(a,b) >= 0 and x, y with a*x + b*y = g.
Int xgcd(const Int& a, const Int& b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_x = 1, xx = 0;
  Int old_y = 0, yy = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division is fine: invariants hold over Z
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * xx;
    old_x = xx;
    xx = t;
    t = old_y - q * yy;
    old_y = yy;
    yy = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  x = old_x;
  y = old_y;
  return old_r;
}

void row_combine(IMat& m, IMat& u, int r1, int r2, const Int& p, const Int& q, const Int& s,
                 const Int& t) {
  // (row r1, row r2) <- (p*row r1 + q*row r2, s*row r1 + t*row r2), applied to
  // the working matrix and the transformation accumulator alike.
  for (IMat* w : {&m, &u}) {
    for (int j = 0; j < w->cols; ++j) {
      Int a1 = w->at(r1, j), a2 = w->at(r2, j);
      w->at(r1, j) = p * a1 + q * a2;
      w->at(r2, j) = s * a1 + t * a2;
    }
  }
}

void row_swap(IMat& m, IMat& u, int r1, int r2) {
  for (IMat* w : {&m, &u})
    for (int j = 0; j < w->cols; ++j) std::swap(w->at(r1, j), w->at(r2, j));
}

void row_negate(IMat& m, IMat& u, int r) {
  for (IMat* w : {&m, &u})
    for (int j = 0; j < w->cols; ++j) w->at(r, j) = -w->at(r, j);
}

void row_addmul(IMat& m, IMat& u, int dst, int src, const Int& f) {
  if (f == 0) return;
  for (IMat* w : {&m, &u})
    for (int j = 0; j < w->cols; ++j) w->at(dst, j) += f * w->at(src, j);
}

}  // namespace

HnfResult hnf(const IMat& m) {
  IMat h = m;
  IMat u = IMat::identity(m.rows);
  int r = 0;
  for (int c = 0; c < h.cols && r < h.rows; ++c) {
    // Clear the column below row r with unimodular gcd combinations.
    int p = -1;
    for (int i = r; i < h.rows; ++i)
      if (h.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) row_swap(h, u, r, p);
    for (int i = r + 1; i < h.rows; ++i) {
      if (h.at(i, c) == 0) continue;
      Int x, y;
      Int g = xgcd(h.at(r, c), h.at(i, c), x, y);
      Int s = -h.at(i, c) / g, t = h.at(r, c) / g;
      // [x y; s t] has determinant x*t - y*s = (x*a + y*b)/g = 1.
      row_combine(h, u, r, i, x, y, s, t);
    }
    if (h.at(r, c) < 0) row_negate(h, u, r);
    for (int i = 0; i < r; ++i) {
      Int f = floor_div(h.at(i, c), h.at(r, c));
      row_addmul(h, u, i, r, -f);
    }
    ++r;
  }
  return {h, u};
}

SnfResult snf(const IMat& m) {
  IMat s = m;
  IMat u = IMat::identity(m.rows);
  IMat v = IMat::identity(m.cols);

  auto col_ops = [&](auto op) {
    // Column operations act on s and v; express them as row operations on the
    // transposes to reuse the helpers.
    IMat st = transpose(s), vt = transpose(v);
    op(st, vt);
    s = transpose(st);
    v = transpose(vt);
  };

  int k = 0;
  int n = std::min(s.rows, s.cols);
  while (k < n) {
    // Find a pivot in the remaining block.
    int pr = -1, pc = -1;
    for (int i = k; i < s.rows && pr < 0; ++i)
      for (int j = k; j < s.cols; ++j)
        if (s.at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    if (pr != k) row_swap(s, u, k, pr);
    if (pc != k) col_ops([&](IMat& st, IMat& vt) { row_swap(st, vt, k, pc); });

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = k + 1; i < s.rows; ++i) {
        if (s.at(i, k) == 0) continue;
        if (s.at(i, k) % s.at(k, k) == 0) {
          // Exact multiple: subtract without touching the pivot row. (A full
          // Bezout combine here can rewrite the pivot row and undo a previous
          // column step, cycling forever.)
          row_addmul(s, u, i, k, -(s.at(i, k) / s.at(k, k)));
          continue;
        }
        Int x, y;
        Int g = xgcd(s.at(k, k), s.at(i, k), x, y);
        Int ss = -s.at(i, k) / g, t = s.at(k, k) / g;
        row_combine(s, u, k, i, x, y, ss, t);
      }
      for (int j = k + 1; j < s.cols; ++j) {
        if (s.at(k, j) == 0) continue;
        if (s.at(k, j) % s.at(k, k) == 0) {
          Int f = -(s.at(k, j) / s.at(k, k));
          col_ops([&](IMat& st, IMat& vt) { row_addmul(st, vt, j, k, f); });
          continue;  // the pivot column is untouched: nothing to re-check
        }
        Int x, y;
        Int g = xgcd(s.at(k, k), s.at(k, j), x, y);
        Int ss = -s.at(k, j) / g, t = s.at(k, k) / g;
        col_ops([&](IMat& st, IMat& vt) { row_combine(st, vt, k, j, x, y, ss, t); });
        dirty = true;  // column ops may reintroduce entries below the pivot
      }
      if (dirty) continue;
      // Enforce the divisibility chain: fold any bad entry into column k.
      for (int i = k + 1; i < s.rows && !dirty; ++i)
        for (int j = k + 1; j < s.cols && !dirty; ++j)
          if (s.at(i, j) % s.at(k, k) != 0) {
            row_addmul(s, u, k, i, 1);
            dirty = true;
          }
    }
    if (s.at(k, k) < 0) row_negate(s, u, k);
    ++k;
  }
  return {s, u, v};
}

std::vector<IntVec> saturated_kernel(const IMat& m) {
  // Rows of U opposite the zero rows of hnf(m^T) span ker(m) over Z; the kernel
  // of an integer matrix is saturated by construction. Re-running HNF on the
  // basis makes the output canonical.
  HnfResult t = hnf(transpose(m));
  std::vector<IntVec> basis;
  for (int i = 0; i < t.h.rows; ++i) {
    bool zero = true;
    for (int j = 0; j < t.h.cols; ++j)
      if (t.h.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) basis.push_back(t.u.row(i));
  }
  if (basis.empty()) return basis;
  HnfResult canon = hnf(IMat::from_rows(basis));
  std::vector<IntVec> out;
  for (int i = 0; i < canon.h.rows; ++i) {
    IntVec r = canon.h.row(i);
    if (!is_zero(r)) out.push_back(r);
  }
  return out;
}

bool solve_columns(const std::vector<IntVec>& g_cols, const RatVec& x, RatVec& lambda) {
  int d = static_cast<int>(x.size());
  int r = static_cast<int>(g_cols.size());
  // Gaussian elimination on the augmented system [G | x] over the rationals.
  std::vector<RatVec> aug(d, RatVec(r + 1));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < r; ++j) aug[i][j] = Rat(g_cols[j][i]);
    aug[i][r] = x[i];
  }
  int row = 0;
  std::vector<int> pivot_row(r, -1);
  for (int c = 0; c < r && row < d; ++c) {
    int p = -1;
    for (int i = row; i < d; ++i)
      if (aug[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return false;  // columns were promised independent
    std::swap(aug[row], aug[p]);
    for (int i = 0; i < d; ++i) {
      if (i == row || aug[i][c] == 0) continue;
      Rat f = aug[i][c] / aug[row][c];
      for (int j = c; j <= r; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_row[c] = row;
    ++row;
  }
  for (int i = row; i < d; ++i)
    if (aug[i][r] != 0) return false;  // inconsistent: x outside the span
  lambda.assign(r, Rat(0));
  for (int c = 0; c < r; ++c) lambda[c] = aug[pivot_row[c]][r] / aug[pivot_row[c]][c];
  return true;
}

bool is_unimodular(const IMat& m) {
  if (m.rows != m.cols) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

IntVec clear_denominators(const RatVec& v) {
  Int l = 1;
  for (const Rat& r : v) l = int_lcm(l, rat_den(r));
  IntVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = rat_num(v[i]) * (l / rat_den(v[i]));
  return w;
}

IntVec primitive_rat(const RatVec& v) { return primitive(clear_denominators(v)); }

}  // namespace finepoly
