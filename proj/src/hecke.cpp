#include "unidual/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace unidual {

Poly Poly::constant(size_t nvars, const Q& c) {
  Poly p;
  p.n_ = nvars;
  p.add(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::linear(const Vec& v) {
  Poly p;
  p.n_ = v.size();
  for (size_t k = 0; k < v.size(); ++k) {
    Monomial m(v.size(), 0);
    m[k] = 1;
    p.add(m, v[k]);
  }
  return p;
}

void Poly::add(const Monomial& m, const Q& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (int e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  if (r.n_ == 0) r.n_ = o.n_;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o * Q(-1); }

Poly Poly::operator*(const Q& s) const {
  Poly r;
  r.n_ = n_;
  if (s == 0) return r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  r.n_ = std::max(n_, o.n_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma);
      for (size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
      r.add(m, ca * cb);
    }
  return r;
}

Q Poly::evaluate(const Vec& chi) const {
  Q s = 0;
  for (const auto& [m, c] : terms_) {
    Q t = c;
    for (size_t k = 0; k < m.size(); ++k)
      for (int e = 0; e < m[k]; ++e) t *= chi[k];
    s += t;
  }
  return s;
}

Poly Poly::transform(const Mat& a) const {
  // x_k o A^T is the linear form with coefficient vector A e_k (column k of A).
  std::vector<Poly> img(n_);
  for (size_t k = 0; k < n_; ++k) {
    Vec col(n_);
    for (size_t i = 0; i < n_; ++i) col[i] = a(i, k);
    img[k] = linear(col);
  }
  Poly r;
  r.n_ = n_;
  for (const auto& [m, c] : terms_) {
    Poly t = constant(n_, c);
    for (size_t k = 0; k < n_; ++k)
      for (int e = 0; e < m[k]; ++e) t = t * img[k];
    r = r + t;
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    for (size_t k = 0; k < m.size(); ++k)
      if (m[k]) s += "*x" + std::to_string(k + 1) + (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
  }
  return s;
}

HeckeAlgebra::HeckeAlgebra(const RootSystem& rs, const WeylGroup& g) : rs_(rs), g_(g) {
  for (size_t i = 0; i < rs.rank(); ++i) {
    refl_.push_back(simple_reflection_matrix(rs, static_cast<int>(i)));
    coroot_.push_back(Q(2) / rs.gram(i, i) * rs.simple_roots[i]);
  }
}

HeckeAlgebra::Element HeckeAlgebra::one() const { return t(0); }

HeckeAlgebra::Element HeckeAlgebra::t(int w) const {
  return {{w, Poly::constant(rs_.ambient_dim, 1)}};
}

HeckeAlgebra::Element HeckeAlgebra::poly(const Poly& p) const {
  Element e;
  if (!p.is_zero()) e[0] = p;
  return e;
}

HeckeAlgebra::Element HeckeAlgebra::add(const Element& a, const Element& b) const {
  Element r(a);
  for (const auto& [w, p] : b) {
    auto it = r.find(w);
    if (it == r.end()) {
      r.emplace(w, p);
      continue;
    }
    it->second = it->second + p;
    if (it->second.is_zero()) r.erase(it);
  }
  return r;
}

HeckeAlgebra::Element HeckeAlgebra::scale(const Element& a, const Q& s) const {
  Element r;
  if (s == 0) return r;
  for (const auto& [w, p] : a) r.emplace(w, p * s);
  return r;
}

Poly HeckeAlgebra::reflect(int s, const Poly& p) const { return p.transform(refl_[s]); }

Poly HeckeAlgebra::divided(int s, const Poly& f) const {
  // D_s(w g) = <w, alpha^vee> s(g) + w D_s(g), D_s(constant) = 0.
  size_t n = rs_.ambient_dim;
  Poly out = Poly::constant(n, 0);
  for (const auto& [m, c] : f.terms()) {
    auto k = std::find_if(m.begin(), m.end(), [](int e) { return e > 0; });
    if (k == m.end()) continue;
    size_t var = k - m.begin();
    Poly::Monomial rest(m);
    --rest[var];
    Poly g;
    {
      Poly one = Poly::constant(n, c);
      Poly mono = one;
      for (size_t v = 0; v < n; ++v)
        for (int e = 0; e < rest[v]; ++e) {
          Vec u(n);
          u[v] = 1;
          mono = mono * Poly::linear(u);
        }
      g = mono;
    }
    Vec ev(n);
    ev[var] = 1;
    Poly w = Poly::linear(ev);
    out = out + reflect(s, g) * coroot_[s][var] + w * divided(s, g);
  }
  return out;
}

HeckeAlgebra::Element HeckeAlgebra::left_t(int s, const Element& a) const {
  // t_s p t_w = s(p) t_{s w} - D_s(s(p)) t_w
  Element r;
  for (const auto& [w, p] : a) {
    Poly sp = reflect(s, p);
    r = add(r, {{g_.left[s][w], sp}});
    Poly d = divided(s, sp);
    if (!d.is_zero()) r = add(r, {{w, d * Q(-1)}});
  }
  return r;
}

HeckeAlgebra::Element HeckeAlgebra::multiply(const Element& a, const Element& b) const {
  Element r;
  for (const auto& [u, p] : a) {
    Element tb = b;
    const auto& word = g_.words[u];
    for (size_t k = word.size(); k-- > 0;) tb = left_t(word[k], tb);
    for (auto& [w, q] : tb) {
      Poly pq = p * q;
      if (!pq.is_zero()) r = add(r, {{w, pq}});
    }
  }
  return r;
}

int HeckeAlgebra::element_of(const std::vector<int>& word) const {
  int x = 0;
  for (int i : word) x = g_.right[i][x];
  return x;
}

HeckeAlgebra::Element HeckeAlgebra::r_element(const std::vector<int>& word) const {
  int w = element_of(word);
  if (g_.length(w) != static_cast<int>(word.size())) throw std::invalid_argument("r_element: word is not reduced");
  Element r = one();
  for (int i : word) {
    int s = g_.left[i][0];
    Element f = multiply(t(s), poly(Poly::linear(rs_.simple_roots[i])));
    f = add(f, scale(one(), -1));
    r = multiply(r, f);
  }
  return r;
}

HeckeAlgebra::Element HeckeAlgebra::kappa(int w) const {
  size_t n = rs_.ambient_dim;
  Poly k = Poly::constant(n, 1);
  for (const auto& beta : rs_.positive_roots) {
    Vec img = mul(g_.matrices[w], beta);
    bool positive = std::find(rs_.positive_roots.begin(), rs_.positive_roots.end(), img) != rs_.positive_roots.end();
    if (positive) continue;
    Poly b = Poly::linear(beta);
    k = k * (b * b - Poly::constant(n, 1));
  }
  return poly(k);
}

HeckeAlgebra::Element HeckeAlgebra::to_right_form(const Element& a) const {
  // p t_w with w = s w': p t_s t_w' = t_s [s(p) t_w'] + [D_s(p) t_w'].
  auto conv = [&](auto&& self, const Poly& p, int w) -> Element {
    if (p.is_zero()) return {};
    if (w == 0) return {{0, p}};
    int s = g_.words[w][0];
    int rest = g_.left[s][w];
    Element first = self(self, reflect(s, p), rest);
    Element shifted;
    for (const auto& [y, q] : first) shifted.emplace(g_.left[s][y], q);
    return add(shifted, self(self, divided(s, p), rest));
  };
  Element r;
  for (const auto& [w, p] : a) r = add(r, conv(conv, p, w));
  return r;
}

Mat HeckeAlgebra::principal_series_action(const Element& h, const Vec& chi) const {
  size_t n = g_.size();
  Mat m(n, n);
  for (size_t x = 0; x < n; ++x) {
    Element right = to_right_form(multiply(t(static_cast<int>(x)), h));
    for (const auto& [w, q] : right) m(w, x) = q.evaluate(chi);
  }
  return m;
}

std::vector<std::vector<int>> HeckeAlgebra::reduced_words(int w) const {
  if (w == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < rs_.rank(); ++i) {
    int v = g_.left[i][w];
    if (g_.length(v) >= g_.length(w)) continue;
    for (auto& tail : reduced_words(v)) {
      std::vector<int> word{static_cast<int>(i)};
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

}  // namespace unidual
