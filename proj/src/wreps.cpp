#include "unidual/wreps.hpp"

#include <map>
#include <stdexcept>

namespace unidual {

void WRep::finalize() {
  dim = form.rows();
  sparse.clear();
  for (const auto& g : gens) sparse.push_back(SparseZ::from(g));
}

WRep trivial_rep(const RootSystem& rs) {
  WRep r;
  r.name = "trivial";
  r.gens.assign(rs.rank(), Mat::identity(1));
  r.form = Mat::identity(1);
  r.finalize();
  return r;
}

WRep sign_rep(const RootSystem& rs) {
  WRep r;
  r.name = "sign";
  r.gens.assign(rs.rank(), Mat::identity(1).scaled(-1));
  r.form = Mat::identity(1);
  r.finalize();
  return r;
}

WRep regular_rep(const RootSystem& rs, const WeylGroup& g) {
  WRep r;
  r.name = "regular";
  size_t n = g.size();
  for (size_t i = 0; i < rs.rank(); ++i) {
    Mat m(n, n);
    for (size_t w = 0; w < n; ++w) m(g.left[i][w], w) = 1;
    r.gens.push_back(std::move(m));
  }
  r.form = Mat::identity(n);
  r.finalize();
  r.regular = regular_model(rs, g);
  return r;
}

std::shared_ptr<const RegularModel> regular_model(const RootSystem& rs, const WeylGroup& g) {
  auto m = std::make_shared<RegularModel>();
  m->group = g;
  // Greedy orthogonal set, highest root first.
  for (int b = static_cast<int>(rs.num_positive()) - 1; b >= 0; --b) {
    bool orth = true;
    for (int c : m->roots) orth = orth && dot(rs.positive_roots[b], rs.positive_roots[c]) == 0;
    if (orth) m->roots.push_back(b);
  }
  std::vector<int> refl;
  for (int b : m->roots) {
    Mat s = reflect(rs.positive_roots[b]).matrix;
    int found = -1;
    for (size_t w = 0; w < g.size() && found < 0; ++w)
      if (g.matrices[w] == s) found = static_cast<int>(w);
    if (found < 0) throw std::logic_error("regular_model: reflection missing from the group");
    refl.push_back(found);
  }
  size_t nk = size_t{1} << refl.size();
  m->k_elems.assign(nk, 0);
  for (size_t mask = 1; mask < nk; ++mask) {
    int low = __builtin_ctzl(mask);
    m->k_elems[mask] = g.multiply(m->k_elems[mask & (mask - 1)], refl[low]);
  }
  std::vector<bool> seen(g.size(), false);
  for (size_t x = 0; x < g.size(); ++x) {
    if (seen[x]) continue;
    m->transversal.push_back(static_cast<int>(x));
    for (int k : m->k_elems) seen[g.multiply(static_cast<int>(x), k)] = true;
  }
  size_t nt = m->transversal.size();
  if (nt * nk != g.size()) throw std::logic_error("regular_model: cosets do not tile the group");
  m->prod.resize(nt * nk * nt);
  for (size_t x = 0; x < nt; ++x)
    for (size_t s = 0; s < nk; ++s) {
      int xk = g.multiply(m->transversal[x], m->k_elems[s]);
      for (size_t y = 0; y < nt; ++y)
        m->prod[(x * nk + s) * nt + y] = g.multiply(xk, g.inverse[m->transversal[y]]);
    }
  return m;
}

WRep reflection_rep(const RootSystem& rs) {
  WRep r;
  r.name = "refl";
  size_t n = rs.rank();
  for (size_t i = 0; i < n; ++i) {
    Mat m = Mat::identity(n);
    for (size_t j = 0; j < n; ++j) m(i, j) -= rs.cartan_m(j, i);
    r.gens.push_back(std::move(m));
  }
  r.form = rs.gram;
  r.finalize();
  return r;
}

namespace {

struct PairIndex {
  size_t n;
  std::vector<std::vector<size_t>> idx;
  explicit PairIndex(size_t n_) : n(n_), idx(n_, std::vector<size_t>(n_)) {
    size_t k = 0;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a; b < n; ++b) idx[a][b] = idx[b][a] = k++;
  }
  size_t size() const { return n * (n + 1) / 2; }
};

}  // namespace

WRep sym2_full(const RootSystem& rs) {
  WRep refl = reflection_rep(rs);
  size_t n = rs.rank();
  PairIndex p(n);
  size_t N = p.size();
  WRep r;
  r.name = "sym2";
  r.trivial_split = 1;
  for (const auto& s : refl.gens) {
    Mat m(N, N);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a; b < n; ++b) {
        size_t col = p.idx[a][b];
        for (size_t k = 0; k < n; ++k) {
          if (s(k, a) == 0) continue;
          for (size_t l = 0; l < n; ++l)
            if (s(l, b) != 0) m(p.idx[k][l], col) += s(k, a) * s(l, b);
        }
      }
    r.gens.push_back(std::move(m));
  }
  const Mat& G = rs.gram;
  r.form = Mat(N, N);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        for (size_t d = c; d < n; ++d) r.form(p.idx[a][b], p.idx[c][d]) = G(a, c) * G(b, d) + G(a, d) * G(b, c);
  r.finalize();
  return r;
}

Vec sym2_invariant(const RootSystem& rs) {
  size_t n = rs.rank();
  PairIndex p(n);
  Mat gi = *inverse(rs.gram);
  Vec q(p.size());
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a; b < n; ++b) q[p.idx[a][b]] = a == b ? gi(a, a) : 2 * gi(a, b);
  return q;
}

WRep sym2_nontrivial(const RootSystem& rs) {
  WRep full = sym2_full(rs);
  size_t N = full.form.rows();
  Vec inv = sym2_invariant(rs);
  Vec phi = mul(full.form, inv);
  Mat row(1, N);
  for (size_t k = 0; k < N; ++k) row(0, k) = phi[k];
  auto basis = nullspace(row);
  size_t d = basis.size();
  Mat B(N, d);
  for (size_t c = 0; c < d; ++c)
    for (size_t k = 0; k < N; ++k) B(k, c) = basis[c][k];
  Mat BtF = B.transpose() * full.form;
  Mat gram = BtF * B;
  Mat proj = *inverse(gram) * BtF;
  WRep r;
  r.name = "sym2_nontrivial";
  for (const auto& s : full.gens) r.gens.push_back(proj * (s * B));
  r.form = gram;
  r.finalize();
  return r;
}

bool generators_are_involutions(const WRep& r) {
  Mat id = Mat::identity(r.dim);
  for (const auto& g : r.gens)
    if (g * g != id) return false;
  return true;
}

int coxeter_m(const RootSystem& rs, int i, int j) {
  if (i == j) return 1;
  Q prod = rs.cartan_m(i, j) * rs.cartan_m(j, i);
  if (prod == 0) return 2;
  if (prod == 1) return 3;
  if (prod == 2) return 4;
  return 6;
}

bool braid_relations_hold(const WRep& r, const RootSystem& rs) {
  Mat id = Mat::identity(r.dim);
  for (size_t i = 0; i < rs.rank(); ++i)
    for (size_t j = i + 1; j < rs.rank(); ++j) {
      Mat st = r.gens[i] * r.gens[j];
      Mat p = id;
      int m = coxeter_m(rs, static_cast<int>(i), static_cast<int>(j));
      for (int k = 0; k < m; ++k) p = p * st;
      if (p != id) return false;
    }
  return true;
}

bool form_is_invariant(const WRep& r) {
  if (!r.form.is_symmetric()) return false;
  for (const auto& g : r.gens)
    if (g.transpose() * r.form * g != r.form) return false;
  return true;
}

std::vector<Mat> element_matrices(const WRep& r, const WeylGroup& g) {
  // Breadth-first order puts s_i w after w, with words[s_i w] = i . words[w].
  std::vector<Mat> m(g.size());
  m[0] = Mat::identity(r.dim);
  for (size_t w = 1; w < g.size(); ++w) {
    int first = g.words[w][0];
    int rest = g.left[first][w];
    m[w] = r.gens[first] * m[rest];
  }
  return m;
}

namespace {

Q trace(const Mat& m) {
  Q t = 0;
  for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Coefficients of det(1 - q M), lowest degree first (Faddeev-LeVerrier).
Vec det_one_minus(const Mat& m) {
  size_t n = m.rows();
  Vec c(n + 1);  // char poly det(t - M) = sum c_k t^k
  c[n] = 1;
  Mat mk = Mat::identity(n);
  Mat id = Mat::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    Mat am = m * mk;
    Q ck = -trace(am) / Q(static_cast<long>(k));
    c[n - k] = ck;
    mk = am + id.scaled(ck);
  }
  // det(1 - qM) = q^n det(1/q - M) = sum_k c_k q^{n-k}
  Vec out(n + 1);
  for (size_t k = 0; k <= n; ++k) out[n - k] = c[k];
  return out;
}

}  // namespace

Vec character(const WRep& r, const WeylGroup& g) {
  Vec chi(g.size(), Q(0));
  if (r.regular) {
    for (size_t w = 0; w < g.size(); ++w)
      if (g.words[w].empty()) chi[w] = Q(static_cast<long>(g.size()));
    return chi;
  }
  auto m = element_matrices(r, g);
  for (size_t w = 0; w < g.size(); ++w) chi[w] = trace(m[w]);
  return chi;
}

Q character_inner_product(const WRep& a, const WRep& b, const WeylGroup& g) {
  Vec ca = character(a, g), cb = character(b, g);
  Q s = 0;
  for (size_t w = 0; w < g.size(); ++w) s += ca[w] * cb[g.inverse[w]];
  return s / Q(static_cast<long>(g.size()));
}

int lowest_harmonic_degree(const WRep& r, const RootSystem& rs, const WeylGroup& g) {
  int top = static_cast<int>(rs.num_positive());
  size_t len = top + 1;
  // prod (1 - q^{d_i}) = (1 - q)^n * sum_w q^{l(w)}
  Vec poinc(len + rs.rank() + 1);
  for (size_t w = 0; w < g.size(); ++w) poinc[g.length(static_cast<int>(w))] += 1;
  Vec numer = poinc;
  for (size_t k = 0; k < rs.rank(); ++k) {
    Vec nxt(numer.size());
    for (size_t d = 0; d < numer.size(); ++d) {
      nxt[d] += numer[d];
      if (d + 1 < numer.size()) nxt[d + 1] -= numer[d];
    }
    numer = nxt;
  }
  WRep refl = reflection_rep(rs);
  auto mr = element_matrices(r, g);
  auto mf = element_matrices(refl, g);
  Vec total(len);
  for (size_t w = 0; w < g.size(); ++w) {
    Q chi = trace(mr[w]);
    if (chi == 0) continue;
    Vec den = det_one_minus(mf[w]);
    // Power series of 1/den up to degree top.
    Vec inv(len);
    inv[0] = 1;
    for (size_t d = 1; d < len; ++d) {
      Q s = 0;
      for (size_t k = 1; k <= d && k < den.size(); ++k) s -= den[k] * inv[d - k];
      inv[d] = s;
    }
    for (size_t d = 0; d < len; ++d) {
      Q s = 0;
      for (size_t k = 0; k <= d; ++k) s += numer[k] * inv[d - k];
      total[d] += chi * s;
    }
  }
  for (size_t d = 0; d < len; ++d)
    if (total[d] != 0) return static_cast<int>(d);
  throw std::logic_error("representation with no harmonic constituent");
}

}  // namespace unidual
