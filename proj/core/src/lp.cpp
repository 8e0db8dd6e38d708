#include "ehrhart/lp.hpp"

#include <cstddef>
#include <limits>
#include <stdexcept>

namespace ehrhart {

namespace {

struct Tableau {
  // rows x (ncols + 1), rhs in the last column
  std::vector<RatVector> t;
  std::vector<std::size_t> basis;
  std::size_t ncols = 0;

  Rat& rhs(std::size_t i) { return t[i][ncols]; }

  void pivot(std::size_t row, std::size_t col, RatVector& obj) {
    Rat inv = 1 / t[row][col];
    for (std::size_t j = 0; j <= ncols; ++j) t[row][j] *= inv;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      Rat f = obj[col];
      for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Maximizes the objective encoded in `obj` (reduced costs). Returns the
  // entering column on unboundedness, or ncols when optimal.
  std::size_t run(RatVector& obj, std::size_t col_limit) {
    for (;;) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < col_limit; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;  // Bland: first improving column
        }
      if (enter == ncols) return ncols;
      std::size_t leave = t.size();
      Rat best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = rhs(i) / t[i][enter];
        if (leave == t.size() || ratio < best ||
            (ratio == best && basis[i] < basis[leave]))
          leave = i, best = ratio;
      }
      if (leave == t.size()) return enter;  // unbounded
      pivot(leave, enter, obj);
    }
  }
};

}  // namespace

LpOutcome lp_solve(const LpProblem& p) {
  const std::size_t n = p.c.size();
  for (const auto& row : p.a)
    if (row.size() != n) throw std::invalid_argument("lp: bad row width");
  for (const auto& row : p.aeq)
    if (row.size() != n) throw std::invalid_argument("lp: bad eq row width");
  if (p.a.size() != p.b.size() || p.aeq.size() != p.beq.size())
    throw std::invalid_argument("lp: rhs length mismatch");

  const std::size_t nvars = p.nonneg ? n : 2 * n;  // free x split as u - w
  const std::size_t m = p.a.size() + p.aeq.size();
  const std::size_t nslack = p.a.size();

  auto var_coeff = [&](const RatVector& row, std::size_t j) -> Rat {
    if (p.nonneg) return row[j];
    return j < n ? row[j] : -row[j - n];
  };

  // Columns: structural | slacks | artificials.
  Tableau tab;
  std::vector<std::size_t> artificial_rows;
  std::size_t nart = 0;
  {
    std::vector<bool> need_art(m, false);
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
      bool is_eq = i >= p.a.size();
      const Rat& rhs = is_eq ? p.beq[i - p.a.size()] : p.b[i];
      if (rhs < 0) sign[i] = -1;
      need_art[i] = is_eq || sign[i] < 0;
      if (need_art[i]) ++nart;
    }
    tab.ncols = nvars + nslack + nart;
    tab.t.assign(m, RatVector(tab.ncols + 1, Rat(0)));
    tab.basis.assign(m, 0);
    std::size_t art = nvars + nslack;
    for (std::size_t i = 0; i < m; ++i) {
      bool is_eq = i >= p.a.size();
      const RatVector& row = is_eq ? p.aeq[i - p.a.size()] : p.a[i];
      const Rat& rhs = is_eq ? p.beq[i - p.a.size()] : p.b[i];
      for (std::size_t j = 0; j < nvars; ++j)
        tab.t[i][j] = sign[i] * var_coeff(row, j);
      if (!is_eq) tab.t[i][nvars + i] = sign[i];
      tab.t[i][tab.ncols] = sign[i] * rhs;
      if (need_art[i]) {
        tab.t[i][art] = 1;
        tab.basis[i] = art++;
        artificial_rows.push_back(i);
      } else {
        tab.basis[i] = nvars + i;
      }
    }
  }

  // Phase I: maximize -(sum of artificials).
  if (nart > 0) {
    RatVector obj(tab.ncols + 1, Rat(0));
    for (std::size_t j = nvars + nslack; j < tab.ncols; ++j) obj[j] = -1;
    for (std::size_t i : artificial_rows)
      for (std::size_t j = 0; j <= tab.ncols; ++j) obj[j] += tab.t[i][j];
    tab.run(obj, nvars + nslack);  // artificials never re-enter
    if (obj[tab.ncols] != 0) return {LpStatus::kInfeasible, Rat(0), {}};
    // Drive remaining artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < nvars + nslack) continue;
      std::size_t col = tab.ncols;
      for (std::size_t j = 0; j < nvars + nslack; ++j)
        if (tab.t[i][j] != 0) {
          col = j;
          break;
        }
      if (col < tab.ncols) tab.pivot(i, col, obj);
      // else: redundant row, harmless to keep (stays zero).
    }
  }

  // Phase II.
  RatVector obj(tab.ncols + 1, Rat(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    Rat cj = p.nonneg ? p.c[j] : (j < n ? p.c[j] : Rat(-p.c[j - n]));
    obj[j] = p.maximize ? cj : Rat(-cj);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= nvars || obj[tab.basis[i]] == 0) continue;
    Rat f = obj[tab.basis[i]];
    for (std::size_t j = 0; j <= tab.ncols; ++j) obj[j] -= f * tab.t[i][j];
  }
  std::size_t enter = tab.run(obj, nvars + nslack);

  auto to_x = [&](const RatVector& vals) {
    RatVector x(n, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
      x[j] = p.nonneg ? vals[j] : Rat(vals[j] - vals[j + n]);
    return x;
  };

  if (enter < tab.ncols) {
    // Unbounded: ray from the entering column.
    RatVector dir(nvars + nslack, Rat(0));
    dir[enter] = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] < dir.size()) dir[tab.basis[i]] = -tab.t[i][enter];
    return {LpStatus::kUnbounded, Rat(0), to_x(dir)};
  }

  RatVector vals(nvars + nslack, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < vals.size()) vals[tab.basis[i]] = tab.rhs(i);
  Rat value = obj[tab.ncols];
  if (!p.maximize) value = -value;
  // obj accumulated -(c.x - const); recompute the value from the witness
  // to keep signs simple.
  RatVector x = to_x(vals);
  value = dot(p.c, x);
  return {LpStatus::kOptimal, value, std::move(x)};
}

bool lp_feasible_nonneg(const RatMatrix& aeq, const RatVector& beq) {
  LpProblem p;
  p.aeq = aeq;
  p.beq = beq;
  p.c.assign(aeq.empty() ? 0 : aeq.front().size(), Rat(0));
  p.nonneg = true;
  return lp_solve(p).status == LpStatus::kOptimal;
}

}  // namespace ehrhart
