#include "unidual/lp.hpp"

#include <stdexcept>

namespace unidual {

namespace {

struct Tableau {
  size_t m, ncols;            // ncols excludes the rhs column
  std::vector<Vec> t;         // m rows, ncols + 1 entries
  std::vector<size_t> basis;  // basic column per row

  void pivot(size_t r, size_t c) {
    Q inv = 1 / t[r][c];
    for (auto& x : t[r]) x *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Q f = t[i][c];
      for (size_t j = 0; j <= ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximizes cost . x over the columns flagged usable. Returns false when unbounded.
  bool optimize(const Vec& cost, const std::vector<bool>& usable) {
    while (true) {
      // Reduced cost of column j: cost_j - sum_i cost_{basis_i} t_ij.
      size_t enter = ncols;
      for (size_t j = 0; j < ncols && enter == ncols; ++j) {
        if (!usable[j]) continue;
        Q rc = cost[j];
        for (size_t i = 0; i < m; ++i)
          if (t[i][j] != 0 && cost[basis[i]] != 0) rc -= cost[basis[i]] * t[i][j];
        if (rc > 0) enter = j;
      }
      if (enter == ncols) return true;
      size_t leave = m;
      Q best;
      for (size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Q ratio = t[i][ncols] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPResult maximize(const LinearProgram& lp) {
  size_t n = lp.nvars;
  size_t m = lp.constraints.size();
  if (lp.objective.size() != n) throw std::invalid_argument("lp: objective size");

  // Column layout: structural | slack or surplus (one per inequality) | artificial.
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  size_t ncols = n;
  std::vector<Rel> rel(m);
  std::vector<bool> flip(m, false);
  for (size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    if (c.a.size() != n) throw std::invalid_argument("lp: constraint size");
    rel[i] = c.rel;
    if (c.b < 0) {
      flip[i] = true;
      if (rel[i] == Rel::LE) rel[i] = Rel::GE;
      else if (rel[i] == Rel::GE) rel[i] = Rel::LE;
    }
    if (rel[i] != Rel::EQ) slack_col[i] = static_cast<int>(ncols++);
  }
  size_t first_art = ncols;
  for (size_t i = 0; i < m; ++i)
    if (rel[i] != Rel::LE) art_col[i] = static_cast<int>(ncols++);

  Tableau tab{m, ncols, std::vector<Vec>(m, Vec(ncols + 1)), std::vector<size_t>(m)};
  for (size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    Q s = flip[i] ? Q(-1) : Q(1);
    for (size_t j = 0; j < n; ++j) tab.t[i][j] = s * c.a[j];
    tab.t[i][ncols] = s * c.b;
    if (rel[i] == Rel::LE) {
      tab.t[i][slack_col[i]] = 1;
      tab.basis[i] = slack_col[i];
    } else {
      if (rel[i] == Rel::GE) tab.t[i][slack_col[i]] = -1;
      tab.t[i][art_col[i]] = 1;
      tab.basis[i] = art_col[i];
    }
  }

  std::vector<bool> all(ncols, true);
  if (first_art < ncols) {
    Vec cost(ncols);
    for (size_t j = first_art; j < ncols; ++j) cost[j] = -1;
    tab.optimize(cost, all);
    Q infeas = 0;
    for (size_t i = 0; i < m; ++i)
      if (tab.basis[i] >= first_art) infeas += tab.t[i][ncols];
    if (infeas != 0) return {LPResult::Infeasible, 0, {}};
    // Drive zero-level artificials out of the basis where possible.
    for (size_t i = 0; i < m; ++i) {
      if (tab.basis[i] < first_art) continue;
      for (size_t j = 0; j < first_art; ++j)
        if (tab.t[i][j] != 0) {
          tab.pivot(i, j);
          break;
        }
    }
  }
  std::vector<bool> usable(ncols, true);
  for (size_t j = first_art; j < ncols; ++j) usable[j] = false;
  Vec cost(ncols);
  for (size_t j = 0; j < n; ++j) cost[j] = lp.objective[j];
  if (!tab.optimize(cost, usable)) return {LPResult::Unbounded, 0, {}};

  LPResult r;
  r.status = LPResult::Optimal;
  r.y.assign(n, Q(0));
  for (size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) r.y[tab.basis[i]] = tab.t[i][ncols];
  r.value = dot(lp.objective, r.y);
  return r;
}

}  // namespace unidual
