#include "unidual/intertwine.hpp"

#include <stdexcept>

namespace unidual {

Mat rank_one_factor(const WRep& rep, int i, const Q& t) {
  if (t == -1) throw std::domain_error("rank_one_factor: pole at t = -1");
  const Mat& s = rep.gens[i];
  Mat id = Mat::identity(rep.dim);
  Q c = (1 - t) / (1 + t);
  Mat plus = (id + s).scaled(Q(1, 2));
  Mat minus = (id - s).scaled(Q(1, 2));
  return plus + minus.scaled(c);
}

std::vector<Q> operator_scalars(const RootSystem& rs, const std::vector<int>& word, const Vec& chi) {
  std::vector<Q> t(word.size());
  Vec v = chi;
  for (size_t j = word.size(); j-- > 0;) {
    t[j] = pairing(rs.simple_roots[word[j]], v);
    v = rs.reflect_simple(word[j], v);
  }
  return t;
}

namespace {

std::vector<Q> checked_scalars(const RootSystem& rs, const std::vector<int>& word, const Vec& chi) {
  if (!rs.is_dominant(chi)) throw NotDominant("long operator needs a dominant parameter, got " + to_string(chi));
  auto t = operator_scalars(rs, word, chi);
  for (const auto& x : t)
    if (x < 0) throw std::logic_error("negative intermediate scalar at a dominant parameter");
  return t;
}

}  // namespace

OperatorResult long_operator(const WRep& rep, const RootSystem& rs, const Vec& chi, const std::vector<int>* word) {
  std::vector<int> w0 = word ? *word : longest_element(rs).word;
  auto t = checked_scalars(rs, w0, chi);
  OperatorResult r;
  r.chi = chi;
  r.rep_name = rep.name;
  bool integral = true;
  for (const auto& s : rep.sparse) integral = integral && s.has_value();
  if (integral && !word) {
    Q scale;
    ZMat a = long_operator_scaled(rep, rs, chi, scale);
    r.matrix = to_rational(a).scaled(scale);
    return r;
  }
  r.matrix = Mat::identity(rep.dim);
  for (size_t j = 0; j < w0.size(); ++j)
    if (t[j] != 0) r.matrix = r.matrix * rank_one_factor(rep, w0[j], t[j]);
  return r;
}

ZMat long_operator_scaled(const WRep& rep, const RootSystem& rs, const Vec& chi, Q& scale) {
  auto w0 = longest_element(rs).word;
  auto t = checked_scalars(rs, w0, chi);
  size_t d = rep.dim;
  ZMat a = ZMat::identity(d);
  ZMat b(d, d);
  scale = 1;
  Z g;
  for (size_t j = 0; j < w0.size(); ++j) {
    if (t[j] == 0) continue;
    const auto& sp = rep.sparse[w0[j]];
    if (!sp) throw std::logic_error("long_operator_scaled: generator is not integral");
    const Z& p = t[j].get_num();
    const Z& q = t[j].get_den();
    // a <- a (q + p s), and the true factor is (q + p s) / (q + p).
    for (size_t c = 0; c < d; ++c) {
      for (size_t r = 0; r < d; ++r) b(r, c) = 0;
      for (const auto& [k, v] : sp->cols[c])
        for (size_t r = 0; r < d; ++r)
          if (a(r, k) != 0) b(r, c) += a(r, k) * v;
    }
    for (size_t i = 0; i < d * d; ++i) {
      Z& x = a.data()[i];
      x *= q;
      x += p * b.data()[i];
    }
    scale /= Q(q + p);
    if (j % 8 == 7 || j + 1 == w0.size()) {
      g = 0;
      for (const auto& x : a.data()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
      }
      if (g > 1) {
        for (auto& x : a.data()) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        scale *= Q(g);
      }
    }
  }
  return a;
}

bool is_hermitian(const RootSystem& rs, const Vec& chi) {
  Vec img = mul(longest_element(rs).matrix, chi);
  for (size_t k = 0; k < img.size(); ++k)
    if (img[k] != -chi[k]) return false;
  return true;
}

Mat hermitian_form(const OperatorResult& op, const WRep& rep, const RootSystem& rs) {
  if (!is_hermitian(rs, op.chi)) throw std::invalid_argument("hermitian_form: w0 chi != -chi");
  Mat h = rep.form * op.matrix;
  if (!h.is_symmetric()) throw std::logic_error("hermitian_form: asymmetric form for " + rep.name);
  return h;
}

namespace {

template <class T>
Inertia inertia_q(Dense<T> in) {
  size_t n = in.rows();
  Mat a(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a(i, j) = Q(in(i, j));
  std::vector<bool> done(n, false);
  size_t left = n;
  Inertia res;
  auto eliminate = [&](size_t p) {
    const Q piv = a(p, p);
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || i == p || a(i, p) == 0) continue;
      Q f = a(i, p) / piv;
      for (size_t j = 0; j < n; ++j)
        if (!done[j] && j != p && a(p, j) != 0) a(i, j) -= f * a(p, j);
    }
    done[p] = true;
    --left;
  };
  while (left > 0) {
    size_t p = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        p = i;
        break;
      }
    if (p < n) {
      (a(p, p) > 0 ? res.positive : res.negative)++;
      eliminate(p);
      continue;
    }
    size_t u = n, v = n;
    for (size_t i = 0; i < n && u == n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (!done[i] && !done[j] && a(i, j) != 0) {
          u = i;
          v = j;
          break;
        }
    if (u == n) {
      res.zero += left;
      break;
    }
    // Block [[0,b],[b,0]] has inertia (1,1); take its Schur complement.
    Q b = a(u, v);
    for (size_t i = 0; i < n; ++i) {
      if (done[i] || i == u || i == v) continue;
      Q xu = a(i, u), xv = a(i, v);
      if (xu == 0 && xv == 0) continue;
      for (size_t j = 0; j < n; ++j) {
        if (done[j] || j == u || j == v) continue;
        // subtract [xu xv] P^{-1} [a(u,j); a(v,j)] with P^{-1} = [[0,1/b],[1/b,0]]
        a(i, j) -= (xu * a(v, j) + xv * a(u, j)) / b;
      }
    }
    done[u] = done[v] = true;
    left -= 2;
    res.positive++;
    res.negative++;
  }
  return res;
}

}  // namespace

Inertia inertia(const Mat& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
  return inertia_q(m);
}

Inertia inertia(const ZMat& in) {
  if (!in.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
  size_t n = in.rows();
  ZMat a(in);
  std::vector<size_t> act(n);
  for (size_t i = 0; i < n; ++i) act[i] = i;
  Z prev = 1;
  int prev_sign = 1;
  Inertia res;
  Z tmp;
  while (!act.empty()) {
    size_t pos = act.size();
    for (size_t k = 0; k < act.size(); ++k)
      if (a(act[k], act[k]) != 0) {
        pos = k;
        break;
      }
    if (pos == act.size()) {
      // Zero diagonal: fold a partner row into row u (a unimodular congruence), which
      // makes the diagonal entry 2 a(u,v) nonzero.
      size_t u = n, v = n;
      for (size_t x = 0; x < act.size() && u == n; ++x)
        for (size_t y = x + 1; y < act.size(); ++y)
          if (a(act[x], act[y]) != 0) {
            u = act[x];
            v = act[y];
            pos = x;
            break;
          }
      if (u == n) {
        res.zero += act.size();
        break;
      }
      for (size_t j : act) {
        if (j == u) continue;
        a(u, j) += a(v, j);
      }
      a(u, u) = 2 * a(v, u);
      for (size_t j : act)
        if (j != u) a(j, u) = a(u, j);
    }
    size_t p = act[pos];
    act.erase(act.begin() + pos);
    int sign = sgn(a(p, p));
    (sign * prev_sign > 0 ? res.positive : res.negative)++;
    const Z piv = a(p, p);
    for (size_t x = 0; x < act.size(); ++x) {
      size_t i = act[x];
      for (size_t y = x; y < act.size(); ++y) {
        size_t j = act[y];
        // a_ij <- (piv a_ij - a_ip a_pj) / prev
        tmp = piv * a(i, j);
        tmp -= a(i, p) * a(p, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
        if (i != j) a(j, i) = a(i, j);
      }
    }
    prev = piv;
    prev_sign = sign;
  }
  return res;
}

Inertia operator+(const Inertia& a, const Inertia& b) {
  return {a.positive + b.positive, a.negative + b.negative, a.zero + b.zero};
}

std::vector<Z> regular_element(const RegularModel& m, const RootSystem& rs, const Vec& chi, Q& scale) {
  const auto& g = m.group;
  auto w0 = longest_element(rs).word;
  auto t = checked_scalars(rs, w0, chi);
  std::vector<Z> a(g.size()), b(g.size());
  a[0] = 1;
  scale = 1;
  for (size_t j = 0; j < w0.size(); ++j) {
    if (t[j] == 0) continue;
    const Z& p = t[j].get_num();
    const Z& q = t[j].get_den();
    // a <- a (q + p s): (a s)_g = a_{g s}
    const auto& right = g.right[w0[j]];
    for (size_t x = 0; x < g.size(); ++x) b[x] = q * a[x] + p * a[right[x]];
    std::swap(a, b);
    scale /= Q(q + p);
  }
  Z c = 0;
  for (const auto& x : a) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  if (c > 1) {
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    scale *= Q(c);
  }
  return a;
}

Inertia regular_inertia(const RegularModel& m, const RootSystem& rs, const Vec& chi) {
  Q scale;
  auto a = regular_element(m, rs, chi, scale);
  for (size_t x = 0; x < a.size(); ++x)
    if (a[x] != a[m.group.inverse[x]]) throw std::logic_error("regular_inertia: operator is not self-adjoint");
  size_t nt = m.transversal.size(), nk = m.k_elems.size();
  Inertia total;
  for (size_t chr = 0; chr < nk; ++chr) {
    // Block of the character k_S -> (-1)^{|S & chr|}: B_xy = sum_S chi(k_S) a[x k_S y^{-1}].
    ZMat blk(nt, nt);
    for (size_t x = 0; x < nt; ++x)
      for (size_t y = 0; y < nt; ++y) {
        Z& e = blk(x, y);
        for (size_t s = 0; s < nk; ++s) {
          const Z& v = a[m.prod[(x * nk + s) * nt + y]];
          if (__builtin_popcountl(s & chr) & 1) e -= v;
          else e += v;
        }
      }
    total = total + inertia(blk);
  }
  return total;
}

Inertia form_inertia(const WRep& rep, const RootSystem& rs, const Vec& chi) {
  if (!is_hermitian(rs, chi)) throw std::invalid_argument("form_inertia: w0 chi != -chi");
  bool integral = true;
  for (const auto& s : rep.sparse) integral = integral && s.has_value();
  Inertia in;
  if (rep.regular) {
    in = regular_inertia(*rep.regular, rs, chi);
  } else if (integral) {
    Q scale;
    ZMat a = long_operator_scaled(rep, rs, chi, scale);
    // Clear the form's denominators; positive scalars do not change the inertia.
    Z l = 1;
    for (const auto& x : rep.form.data()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    size_t d = rep.dim;
    ZMat f(d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        Q x = rep.form(i, j) * l;
        f(i, j) = x.get_num();
      }
    ZMat h = f * a;
    if (!h.is_symmetric()) throw std::logic_error("form_inertia: asymmetric form for " + rep.name);
    in = inertia(h);
  } else {
    in = inertia(hermitian_form(long_operator(rep, rs, chi), rep, rs));
  }
  if (rep.trivial_split > 0) {
    if (in.positive < static_cast<size_t>(rep.trivial_split))
      throw std::logic_error("form_inertia: trivial summand missing");
    in.positive -= rep.trivial_split;
  }
  return in;
}

bool is_reducible(const RootSystem& rs, const Vec& chi) {
  for (const auto& b : rs.positive_roots)
    if (pairing(b, chi) == 1) return true;
  return false;
}

}  // namespace unidual
