#include "finepoly/lp.hpp"

#include <stdexcept>

namespace finepoly {

namespace {

// Exact tableau simplex for  min cost.y  s.t.  E y = f,  y >= 0,
// where E has r rows and the columns are supplied explicitly; r artificial
// columns are appended internally to seed the basis. Pricing is Dantzig's rule
// (steepest reduced cost) with a permanent switch to Bland's rule after a long
// streak of degenerate pivots, which keeps the usual speed while guaranteeing
// termination: the objective strictly drops at every non-degenerate pivot, so
// only finitely many such pivots exist, and a pure-Bland tail cannot cycle.
struct EqSimplex {
  int r = 0;                // equality rows
  int ncols = 0;            // real columns (artificials live at ncols..ncols+r-1)
  std::vector<RatVec> t;    // r rows, ncols + r + 1 entries (last = rhs)
  RatVec z;                 // reduced-cost row, same width as t's rows
  std::vector<int> basis;   // basis[i] = column basic in row i

  EqSimplex(const std::vector<RatVec>& cols, const RatVec& f) {
    r = static_cast<int>(f.size());
    ncols = static_cast<int>(cols.size());
    int width = ncols + r + 1;
    t.assign(r, RatVec(width, Rat(0)));
    basis.resize(r);
    for (int i = 0; i < r; ++i) {
      bool flip = f[i] < 0;  // keep every right-hand side non-negative
      for (int j = 0; j < ncols; ++j)
        if (cols[j][i] != 0) t[i][j] = flip ? -cols[j][i] : cols[j][i];
      t[i][ncols + i] = 1;
      t[i][ncols + r] = flip ? -f[i] : f[i];
      basis[i] = ncols + i;
    }
  }

  // Rebuild the reduced-cost row for a fresh objective: z[j] = cost[j] -
  // sum_i cost[basis[i]] * t[i][j]; the rhs cell carries minus the objective.
  void set_cost(const RatVec& cost) {
    int width = ncols + r + 1;
    z.assign(width, Rat(0));
    for (int j = 0; j < static_cast<int>(cost.size()); ++j) z[j] = cost[j];
    for (int i = 0; i < r; ++i) {
      const Rat cb = basis[i] < static_cast<int>(cost.size()) ? cost[basis[i]] : Rat(0);
      if (cb == 0) continue;
      for (int j = 0; j < width; ++j)
        if (t[i][j] != 0) z[j] -= cb * t[i][j];
    }
  }

  Rat objective() const { return -z[ncols + r]; }

  void pivot(int row, int col) {
    int width = ncols + r + 1;
    Rat p = t[row][col];
    for (int j = 0; j < width; ++j)
      if (t[row][j] != 0) t[row][j] /= p;
    for (int i = 0; i < r; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (int j = 0; j < width; ++j)
        if (t[row][j] != 0) t[i][j] -= f * t[row][j];
    }
    if (z[col] != 0) {
      Rat f = z[col];
      for (int j = 0; j < width; ++j)
        if (t[row][j] != 0) z[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Minimize over columns < limit (artificials are frozen by passing
  // limit = ncols). Returns false when the objective is unbounded below.
  bool solve(int limit) {
    long stall = 0;
    const long stall_limit = 4L * (ncols + r) + 16;
    bool bland = false;
    for (;;) {
      int enter = -1;
      if (bland) {
        for (int j = 0; j < limit; ++j)
          if (z[j] < 0) {
            enter = j;
            break;
          }
      } else {
        for (int j = 0; j < limit; ++j)
          if (z[j] < 0 && (enter < 0 || z[j] < z[enter])) enter = j;
      }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int i = 0; i < r; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][ncols + r] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      bool degenerate = t[leave][ncols + r] == 0;
      pivot(leave, enter);
      if (!bland) {
        stall = degenerate ? stall + 1 : 0;
        if (stall > stall_limit) bland = true;
      }
    }
  }

  // Phase 1: drive the artificial columns out. Returns false when E y = f has
  // no solution with y >= 0.
  bool make_feasible() {
    RatVec cost(ncols + r, Rat(0));
    for (int i = 0; i < r; ++i) cost[ncols + i] = 1;
    set_cost(cost);
    solve(ncols + r);  // bounded below by zero
    if (objective() != 0) return false;
    // Pivot leftover zero-level artificials onto real columns when possible;
    // rows that cannot pivot encode dependent equations and stay harmless.
    for (int i = 0; i < r; ++i) {
      if (basis[i] < ncols) continue;
      for (int j = 0; j < ncols; ++j)
        if (t[i][j] != 0) {
          pivot(i, j);
          break;
        }
    }
    return true;
  }
};

// Exact Gaussian elimination for a small square rational system M x = v.
RatVec solve_square(std::vector<RatVec> m, RatVec v) {
  int n = static_cast<int>(v.size());
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (m[i][k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::logic_error("lp_minimize: singular basis system");
    std::swap(m[k], m[piv]);
    std::swap(v[k], v[piv]);
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      v[i] -= f * v[k];
    }
  }
  RatVec x(n, Rat(0));
  for (int k = n - 1; k >= 0; --k) {
    Rat s = v[k];
    for (int j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
    x[k] = s / m[k][k];
  }
  return x;
}

}  // namespace

// The primal has few variables and possibly many constraints, so the solver
// works on the dual  max b.y  s.t.  A^T y = c,  y >= 0  whose tableau has only
// nfree rows. Duality gives back the primal exactly: a dual optimum yields the
// primal optimum (the simplex multipliers of the optimal dual basis are the
// primal witness), a dual ray means the primal is infeasible, and when the dual
// is infeasible a Farkas run on  A^T y = 0  separates primal-unbounded from
// primal-infeasible.
LpResult lp_minimize(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  int m = static_cast<int>(a.size());
  int nfree = static_cast<int>(c.size());
  for (const RatVec& row : a)
    if (static_cast<int>(row.size()) != nfree)
      throw std::invalid_argument("lp_minimize: constraint arity mismatch");
  if (static_cast<int>(b.size()) != m)
    throw std::invalid_argument("lp_minimize: rhs size mismatch");

  // Dual columns are the rows of A; the dual objective max b.y is run as
  // min (-b).y.
  std::vector<RatVec> cols(a.begin(), a.end());
  RatVec negb(m);
  for (int j = 0; j < m; ++j) negb[j] = -b[j];

  EqSimplex dual(cols, c);
  if (!dual.make_feasible()) {
    // Dual infeasible: the primal is unbounded if it is feasible at all.
    // Feasibility of  A x >= b  is equivalent (Farkas) to boundedness of
    // max b.y  s.t.  A^T y = 0,  y >= 0, which is feasible at y = 0.
    EqSimplex farkas(cols, RatVec(nfree, Rat(0)));
    if (!farkas.make_feasible())
      throw std::logic_error("lp_minimize: homogeneous system lost feasibility");
    farkas.set_cost(negb);
    if (!farkas.solve(m)) return {LpStatus::infeasible, Rat(0), {}};
    return {LpStatus::unbounded, Rat(0), {}};
  }

  dual.set_cost(negb);
  if (!dual.solve(m)) return {LpStatus::infeasible, Rat(0), {}};

  // Optimal. Value: max b.y = -min(-b).y. Witness: the multipliers z with
  // A_j z = b_j for every basic real column j (and z_k = 0 for each leftover
  // basic artificial k, whose dual equation is the k-th unit column); the
  // optimality of the basis makes z feasible for every primal constraint.
  std::vector<RatVec> rows;
  RatVec rhs;
  for (int i = 0; i < nfree; ++i) {
    int j = dual.basis[i];
    if (j < m) {
      rows.push_back(a[j]);
      rhs.push_back(b[j]);
    } else {
      RatVec unit(nfree, Rat(0));
      unit[j - m] = 1;
      rows.push_back(unit);
      rhs.push_back(Rat(0));
    }
  }
  return {LpStatus::optimal, -dual.objective(), solve_square(rows, rhs)};
}

}  // namespace finepoly
