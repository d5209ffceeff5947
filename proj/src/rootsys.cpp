#include "unidual/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace unidual {

namespace {

Vec unit(size_t n, size_t i, const Q& s = 1) {
  Vec v(n);
  v[i] = s;
  return v;
}

Vec ints(std::initializer_list<long> xs, const Q& scale = 1) {
  Vec v;
  for (long x : xs) v.push_back(scale * Q(x));
  return v;
}

std::vector<Vec> simple_roots_of(CartanType t) {
  std::vector<Vec> s;
  int n = t.rank;
  switch (t.family) {
    case 'A':
      for (int i = 0; i < n; ++i) s.push_back(unit(n + 1, i) - unit(n + 1, i + 1));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 0; i + 1 < n; ++i) s.push_back(unit(n, i) - unit(n, i + 1));
      if (t.family == 'B') s.push_back(unit(n, n - 1));
      if (t.family == 'C') s.push_back(unit(n, n - 1, 2));
      if (t.family == 'D') s.push_back(unit(n, n - 2) + unit(n, n - 1));
      break;
    case 'G':
      s.push_back({Q(2, 3), Q(-1, 3), Q(-1, 3)});
      s.push_back(ints({-1, 1, 0}));
      break;
    case 'F':
      s.push_back(ints({1, -1, -1, -1}));
      s.push_back(ints({0, 0, 0, 2}));
      s.push_back(ints({0, 0, 1, -1}));
      s.push_back(ints({0, 1, -1, 0}));
      break;
    case 'E': {
      std::vector<Vec> e8;
      e8.push_back(ints({1, -1, -1, -1, -1, -1, -1, 1}, Q(1, 2)));
      e8.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i < 6; ++i) e8.push_back(unit(8, i + 1) - unit(8, i));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
  }
  return s;
}

}  // namespace

CartanType CartanType::make(char family, int rank) {
  if (family >= 'a' && family <= 'z') family = static_cast<char>(family - 'a' + 'A');
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: break;
  }
  if (!ok)
    throw std::invalid_argument("invalid Cartan type " + std::string(1, family) + std::to_string(rank));
  return CartanType{family, rank};
}

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("invalid Cartan type '" + s + "'");
  int r = 0;
  for (size_t i = 1; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9' || r > 1000) throw std::invalid_argument("invalid Cartan type '" + s + "'");
    r = r * 10 + (s[i] - '0');
  }
  return make(s[0], r);
}

Q pairing(const Vec& root, const Vec& chi) {
  if (root.size() != chi.size()) throw std::invalid_argument("pairing: dimension mismatch");
  return dot(root, chi);
}

WeylElement reflect(const Vec& root) {
  if (is_zero(root)) throw std::invalid_argument("reflect: zero root");
  size_t n = root.size();
  Q nn = dot(root, root);
  WeylElement w;
  w.matrix = Mat::identity(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) w.matrix(i, j) -= 2 * root[i] * root[j] / nn;
  return w;
}

Vec act(const WeylElement& w, const Vec& v) { return mul(w.matrix, v); }

RootSystem RootSystem::build(CartanType cartan) {
  cartan = CartanType::make(cartan.family, cartan.rank);
  RootSystem rs;
  rs.cartan = cartan;
  rs.simple_roots = simple_roots_of(cartan);
  size_t n = rs.simple_roots.size();
  rs.ambient_dim = rs.simple_roots[0].size();
  rs.gram = Mat(n, n);
  rs.cartan_m = Mat(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      rs.gram(i, j) = dot(rs.simple_roots[i], rs.simple_roots[j]);
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) rs.cartan_m(i, j) = 2 * rs.gram(i, j) / rs.gram(j, j);
  rs.gram_inv_ = *inverse(rs.gram);

  // Closure of the simple roots under simple reflections gives every root.
  std::set<Vec> seen(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<Vec> todo(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!todo.empty()) {
    Vec b = todo.front();
    todo.pop_front();
    for (size_t i = 0; i < n; ++i) {
      Vec c = rs.reflect_simple(static_cast<int>(i), b);
      if (seen.insert(c).second) todo.push_back(c);
    }
  }
  struct Entry {
    std::vector<int> c;
    Vec v;
    int lev;
  };
  std::vector<Entry> pos;
  for (const auto& r : seen) {
    Vec p(n);
    for (size_t i = 0; i < n; ++i) p[i] = dot(rs.simple_roots[i], r);
    Vec c = mul(rs.gram_inv_, p);
    std::vector<int> ci(n);
    bool nonneg = true;
    int lev = 0;
    for (size_t i = 0; i < n; ++i) {
      if (c[i].get_den() != 1) throw std::logic_error("root with non-integral coefficients");
      ci[i] = static_cast<int>(c[i].get_num().get_si());
      if (ci[i] < 0) nonneg = false;
      lev += ci[i];
    }
    if (nonneg) pos.push_back({ci, r, lev});
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.lev != b.lev) return a.lev < b.lev;
    return a.c > b.c;
  });
  for (auto& e : pos) {
    rs.positive_roots.push_back(e.v);
    rs.coeffs.push_back(e.c);
    rs.level.push_back(e.lev);
  }
  rs.simple_pos_.assign(n, -1);
  for (size_t i = 0; i < n; ++i) {
    std::vector<int> c(n, 0);
    c[i] = 1;
    rs.simple_pos_[i] = rs.index_of(c);
  }
  for (size_t b = 0; b < rs.coeffs.size(); ++b)
    for (size_t i = 0; i < n; ++i) {
      auto c = rs.coeffs[b];
      ++c[i];
      int g = rs.index_of(c);
      if (g >= 0) rs.covers.push_back({static_cast<int>(b), g, static_cast<int>(i)});
    }
  rs.coxeter_number = rs.level.back() + 1;
  return rs;
}

int RootSystem::index_of(const std::vector<int>& c) const {
  // Positive roots are few (at most 120); a binary search on the sort key is enough.
  int lev = 0;
  for (int x : c) {
    if (x < 0) return -1;
    lev += x;
  }
  auto lo = std::lower_bound(level.begin(), level.end(), lev) - level.begin();
  auto hi = std::upper_bound(level.begin(), level.end(), lev) - level.begin();
  for (auto k = lo; k < hi; ++k)
    if (coeffs[k] == c) return static_cast<int>(k);
  return -1;
}

bool RootSystem::leq(int beta, int gamma) const {
  for (size_t i = 0; i < rank(); ++i)
    if (coeffs[beta][i] > coeffs[gamma][i]) return false;
  return true;
}

Vec RootSystem::reflect_simple(int i, const Vec& v) const {
  const Vec& a = simple_roots[i];
  Q f = 2 * dot(v, a) / gram(i, i);
  Vec r(v);
  for (size_t k = 0; k < r.size(); ++k) r[k] -= f * a[k];
  return r;
}

Vec RootSystem::simple_coords(const Vec& chi) const {
  Vec x(rank());
  for (size_t i = 0; i < rank(); ++i) x[i] = pairing(simple_roots[i], chi);
  return x;
}

Vec RootSystem::from_simple_coords(const Vec& x) const {
  Vec c = mul(gram_inv_, x);
  Vec chi(ambient_dim);
  for (size_t j = 0; j < rank(); ++j)
    for (size_t k = 0; k < ambient_dim; ++k) chi[k] += c[j] * simple_roots[j][k];
  return chi;
}

Q RootSystem::pairing_index(int root, const Vec& x) const {
  Q s = 0;
  for (size_t i = 0; i < rank(); ++i)
    if (coeffs[root][i]) s += coeffs[root][i] * x[i];
  return s;
}

bool RootSystem::in_root_span(const Vec& v) const {
  return from_simple_coords(simple_coords(v)) == v;
}

bool RootSystem::is_dominant(const Vec& chi) const {
  for (const auto& a : simple_roots)
    if (dot(a, chi) < 0) return false;
  return true;
}

Vec RootSystem::make_dominant(const Vec& chi) const {
  Vec v(chi);
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i < rank(); ++i)
      if (dot(simple_roots[i], v) < 0) {
        v = reflect_simple(static_cast<int>(i), v);
        moved = true;
      }
  }
  return v;
}

std::vector<int> RootSystem::diagram_involution() const {
  WeylElement w0 = longest_element(*this);
  std::vector<int> sigma(rank());
  for (size_t i = 0; i < rank(); ++i) {
    Vec img = Q(-1) * mul(w0.matrix, simple_roots[i]);
    auto it = std::find(simple_roots.begin(), simple_roots.end(), img);
    if (it == simple_roots.end()) throw std::logic_error("-w0 does not permute simple roots");
    sigma[i] = static_cast<int>(it - simple_roots.begin());
  }
  return sigma;
}

Mat simple_reflection_matrix(const RootSystem& rs, int i) { return reflect(rs.simple_roots[i]).matrix; }

Mat word_matrix(const RootSystem& rs, const std::vector<int>& word) {
  Mat m = Mat::identity(rs.ambient_dim);
  for (int i : word) m = m * simple_reflection_matrix(rs, i);
  return m;
}

WeylElement longest_element(const RootSystem& rs) {
  Vec v = rs.from_simple_coords(Vec(rs.rank(), Q(1)));
  std::vector<int> applied;
  while (true) {
    int pick = -1;
    for (size_t i = 0; i < rs.rank(); ++i)
      if (dot(rs.simple_roots[i], v) > 0) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick < 0) break;
    v = rs.reflect_simple(pick, v);
    applied.push_back(pick);
  }
  // v = s_{a_k} ... s_{a_1} v0, so w0 has the word a_k ... a_1.
  WeylElement w;
  w.word.assign(applied.rbegin(), applied.rend());
  w.matrix = word_matrix(rs, w.word);
  return w;
}

std::vector<Vec> minus_one_eigenspace(const RootSystem& rs) {
  WeylElement w0 = longest_element(rs);
  size_t n = rs.rank();
  // Solve (w0 + 1) sum_j c_j alpha_j = 0 for c.
  Mat m(rs.ambient_dim, n);
  for (size_t j = 0; j < n; ++j) {
    Vec img = mul(w0.matrix, rs.simple_roots[j]) + rs.simple_roots[j];
    for (size_t k = 0; k < rs.ambient_dim; ++k) m(k, j) = img[k];
  }
  std::vector<Vec> out;
  for (const auto& c : nullspace(m)) {
    Vec chi(rs.ambient_dim);
    for (size_t j = 0; j < n; ++j) chi = chi + c[j] * rs.simple_roots[j];
    out.push_back(chi);
  }
  return out;
}

int WeylGroup::multiply(int a, int b) const {
  int x = a;
  for (int i : words[b]) x = right[i][x];
  return x;
}

int WeylGroup::longest() const {
  int best = 0;
  for (size_t w = 0; w < size(); ++w)
    if (words[w].size() > words[best].size()) best = static_cast<int>(w);
  return best;
}

unsigned long long group_order(CartanType t) {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
  };
  switch (t.family) {
    case 'A': return fact(t.rank + 1);
    case 'B':
    case 'C': return fact(t.rank) << t.rank;
    case 'D': return fact(t.rank) << (t.rank - 1);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E': return t.rank == 6 ? 51840ULL : t.rank == 7 ? 2903040ULL : 696729600ULL;
  }
  return 0;
}

WeylGroup enumerate_group(const RootSystem& rs, size_t cap) {
  if (group_order(rs.cartan) > cap)
    throw CapExceeded("Weyl group of " + rs.cartan.name() + " has " + std::to_string(group_order(rs.cartan)) +
                      " elements, above the cap " + std::to_string(cap));
  size_t n = rs.rank();
  Vec v0 = rs.from_simple_coords(Vec(n, Q(1)));
  std::vector<Mat> gens;
  for (size_t i = 0; i < n; ++i) gens.push_back(simple_reflection_matrix(rs, static_cast<int>(i)));

  WeylGroup g;
  std::map<Vec, int> index;
  std::vector<Vec> image;
  g.matrices.push_back(Mat::identity(rs.ambient_dim));
  g.words.push_back({});
  image.push_back(v0);
  index[v0] = 0;
  for (size_t k = 0; k < g.matrices.size(); ++k) {
    for (size_t i = 0; i < n; ++i) {
      Vec img = mul(gens[i], image[k]);
      if (index.count(img)) continue;
      index[img] = static_cast<int>(g.matrices.size());
      g.matrices.push_back(gens[i] * g.matrices[k]);
      std::vector<int> w{static_cast<int>(i)};
      w.insert(w.end(), g.words[k].begin(), g.words[k].end());
      g.words.push_back(std::move(w));
      image.push_back(std::move(img));
    }
  }
  g.left.assign(n, std::vector<int>(g.size()));
  g.right.assign(n, std::vector<int>(g.size()));
  g.inverse.resize(g.size());
  for (size_t w = 0; w < g.size(); ++w) {
    for (size_t i = 0; i < n; ++i) {
      g.left[i][w] = index.at(mul(gens[i], image[w]));
      g.right[i][w] = index.at(mul(g.matrices[w], mul(gens[i], v0)));
    }
    g.inverse[w] = index.at(mul(g.matrices[w].transpose(), v0));
  }
  return g;
}

}  // namespace unidual
