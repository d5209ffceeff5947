#include "unidual/arrangement.hpp"

#include "unidual/lp.hpp"
#include "unidual/parallel.hpp"

#include <algorithm>

namespace unidual {

Slice hermitian_slice(const RootSystem& rs) {
  auto basis = minus_one_eigenspace(rs);
  Slice s;
  if (basis.size() == rs.rank()) return s;
  // Rows of m span the slice in simple coordinates; its left kernel gives the equations.
  Mat m(basis.size(), rs.rank());
  for (size_t k = 0; k < basis.size(); ++k) {
    Vec x = rs.simple_coords(basis[k]);
    for (size_t i = 0; i < rs.rank(); ++i) m(k, i) = x[i];
  }
  s.equations = nullspace(m);
  return s;
}

bool in_slice(const Slice& s, const Vec& x) {
  for (const auto& u : s.equations)
    if (dot(u, x) != 0) return false;
  return true;
}

std::vector<std::vector<int>> enumerate_antichains(const RootSystem& rs) {
  int n = static_cast<int>(rs.num_positive());
  std::vector<std::vector<bool>> comparable(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) comparable[a][b] = rs.leq(a, b) || rs.leq(b, a);

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int from) -> void {
    out.push_back(cur);
    for (int r = from; r < n; ++r) {
      bool ok = true;
      for (int c : cur)
        if (comparable[c][r]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(r);
      self(self, r + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

std::vector<int> complement_antichain(const RootSystem& rs, const std::vector<int>& delta) {
  int n = static_cast<int>(rs.num_positive());
  std::vector<bool> below(n, false);
  for (int b = 0; b < n; ++b)
    for (int d : delta)
      if (rs.leq(b, d)) {
        below[b] = true;
        break;
      }
  std::vector<int> out;
  for (int b = 0; b < n; ++b) {
    if (below[b]) continue;
    bool minimal = true;
    for (int c = 0; c < n && minimal; ++c)
      if (c != b && !below[c] && rs.leq(c, b)) minimal = false;
    if (minimal) out.push_back(b);
  }
  return out;
}

namespace {

Vec coeff_vec(const RootSystem& rs, int root, size_t nv) {
  Vec a(nv);
  for (size_t i = 0; i < rs.rank(); ++i) a[i] = rs.coeffs[root][i];
  return a;
}

// Variables (x_1..x_n, eps). The region constraints with margin eps; `skip` marks simple
// coordinates that are exempt from the x_i >= eps bound.
LinearProgram region_lp(const RootSystem& rs, const std::vector<int>& delta, const std::vector<int>& delta_prime,
                        const Slice& slice, const std::vector<bool>& skip) {
  size_t n = rs.rank(), nv = n + 1;
  LinearProgram lp;
  lp.nvars = nv;
  lp.objective.assign(nv, Q(0));
  lp.objective[n] = 1;
  Q h = rs.coxeter_number;
  for (size_t i = 0; i < n; ++i) {
    Vec a(nv);
    a[i] = 1;
    lp.constraints.push_back({a, Rel::LE, h});
    if (skip[i]) continue;
    a[n] = -1;
    lp.constraints.push_back({a, Rel::GE, Q(0)});
  }
  for (int d : delta) {
    Vec a = coeff_vec(rs, d, nv);
    a[n] = 1;
    lp.constraints.push_back({a, Rel::LE, Q(1)});
  }
  for (int d : delta_prime) {
    Vec a = coeff_vec(rs, d, nv);
    a[n] = -1;
    lp.constraints.push_back({a, Rel::GE, Q(1)});
  }
  for (const auto& u : slice.equations) {
    Vec a(u);
    a.push_back(0);
    lp.constraints.push_back({a, Rel::EQ, Q(0)});
  }
  Vec cap(nv);
  cap[n] = 1;
  lp.constraints.push_back({cap, Rel::LE, Q(1)});
  return lp;
}

}  // namespace

std::optional<SamplePoint> sample_point(const RootSystem& rs, const std::vector<int>& delta,
                                        const std::vector<int>& delta_prime, const Slice& slice) {
  auto lp = region_lp(rs, delta, delta_prime, slice, std::vector<bool>(rs.rank(), false));
  auto res = maximize(lp);
  if (res.status != LPResult::Optimal || res.value <= 0) return std::nullopt;
  SamplePoint p;
  p.x.assign(res.y.begin(), res.y.begin() + rs.rank());
  p.margin = res.value;
  return p;
}

std::vector<Vec> extra_samples(const RootSystem& rs, const Region& region, const Slice& slice, size_t count) {
  size_t n = rs.rank();
  auto lp = region_lp(rs, region.delta, region.delta_prime, slice, std::vector<bool>(n, false));
  Vec floor(n + 1);
  floor[n] = 1;
  lp.constraints.push_back({floor, Rel::GE, region.margin / 2});
  std::vector<Vec> out;
  // Pull the LP center toward vertices in the directions +e_i, -e_i, +-(sum of e_i).
  std::vector<Vec> dirs;
  for (size_t i = 0; i < n; ++i) {
    Vec d(n + 1);
    d[i] = 1;
    dirs.push_back(d);
    d[i] = -1;
    dirs.push_back(d);
  }
  Vec all(n + 1, Q(1));
  all[n] = 0;
  dirs.push_back(all);
  dirs.push_back(Q(-1) * all);
  for (const auto& d : dirs) {
    if (out.size() >= count) break;
    lp.objective = d;
    auto res = maximize(lp);
    if (res.status != LPResult::Optimal) continue;
    Vec v(res.y.begin(), res.y.begin() + n);
    Vec mid = Q(1, 2) * (v + region.x);
    if (mid == region.x || std::find(out.begin(), out.end(), mid) != out.end()) continue;
    out.push_back(mid);
  }
  return out;
}

std::vector<int> zero_walls(const RootSystem& rs, const Region& region, const Slice& slice) {
  size_t n = rs.rank();
  std::vector<int> walls;
  for (size_t i = 0; i < n; ++i) {
    // Coordinates that vanish identically on the slice intersected with x_i = 0.
    Mat m(slice.equations.size() + 1, n);
    for (size_t k = 0; k < slice.equations.size(); ++k)
      for (size_t j = 0; j < n; ++j) m(k, j) = slice.equations[k][j];
    m(slice.equations.size(), i) = 1;
    auto basis = nullspace(m);
    std::vector<bool> skip(n, true);
    for (const auto& b : basis)
      for (size_t j = 0; j < n; ++j)
        if (b[j] != 0) skip[j] = false;
    auto lp = region_lp(rs, region.delta, region.delta_prime, slice, skip);
    Vec e(n + 1);
    e[i] = 1;
    lp.constraints.push_back({e, Rel::EQ, Q(0)});
    auto res = maximize(lp);
    if (res.status == LPResult::Optimal && res.value > 0) walls.push_back(static_cast<int>(i));
  }
  return walls;
}

std::vector<int> zero_walls_combinatorial(const RootSystem& rs, const Region& region) {
  std::vector<int> walls;
  for (size_t i = 0; i < rs.rank(); ++i) {
    bool blocked = false;
    for (int b : region.delta) {
      auto c = rs.coeffs[b];
      ++c[i];
      if (rs.index_of(c) >= 0) blocked = true;
    }
    for (int b : region.delta_prime) {
      auto c = rs.coeffs[b];
      --c[i];
      bool zero = std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
      if (zero || rs.index_of(c) >= 0) blocked = true;
    }
    if (!blocked) walls.push_back(static_cast<int>(i));
  }
  return walls;
}

int max_orthogonal_antichain(const RootSystem& rs) {
  int n = static_cast<int>(rs.num_positive());
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      ok[a][b] = !rs.leq(a, b) && !rs.leq(b, a) && dot(rs.positive_roots[a], rs.positive_roots[b]) == 0;
  int best = 0;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(cur.size()));
    for (int r = from; r < n; ++r) {
      bool good = true;
      for (int c : cur)
        if (!ok[c][r]) {
          good = false;
          break;
        }
      if (!good) continue;
      cur.push_back(r);
      self(self, r + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

std::optional<Location> locate(const RootSystem& rs, const Vec& x) {
  int n = static_cast<int>(rs.num_positive());
  std::vector<int> sign(n);
  for (int b = 0; b < n; ++b) {
    Q p = rs.pairing_index(b, x);
    if (p == 1) return std::nullopt;
    sign[b] = p < 1 ? -1 : 1;
  }
  Location loc;
  for (int b = 0; b < n; ++b) {
    if (sign[b] < 0) {
      bool maximal = true;
      for (const auto& cv : rs.covers)
        if (cv.lower == b && sign[cv.upper] < 0) maximal = false;
      if (maximal) loc.delta.push_back(b);
    } else {
      bool minimal = true;
      for (const auto& cv : rs.covers)
        if (cv.upper == b && sign[cv.lower] > 0) minimal = false;
      if (minimal) loc.delta_prime.push_back(b);
    }
  }
  return loc;
}

Arrangement build_regions(const RootSystem& rs, const Slice& slice, unsigned threads) {
  auto antichains = enumerate_antichains(rs);
  std::vector<std::optional<Region>> slot(antichains.size());
  parallel_for(antichains.size(), threads, [&](size_t k) {
    Region r;
    r.delta = antichains[k];
    r.delta_prime = complement_antichain(rs, r.delta);
    auto p = sample_point(rs, r.delta, r.delta_prime, slice);
    if (!p) return;
    r.x = p->x;
    r.margin = p->margin;
    r.sample = rs.from_simple_coords(r.x);
    for (int d : r.delta_prime)
      if (rs.level[d] == 1) r.bounded = false;
    r.zero_walls = zero_walls(rs, r, slice);
    slot[k] = std::move(r);
  });
  Arrangement arr;
  for (auto& s : slot) {
    if (s) arr.regions.push_back(std::move(*s));
    else ++arr.dropped;
  }
  return arr;
}

}  // namespace unidual
