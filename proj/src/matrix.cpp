#include "unidual/matrix.hpp"

#include <stdexcept>

namespace unidual {

Vec mul(const Mat& m, const Vec& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mul: dimension mismatch");
  Vec r(m.rows());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) r[i] += m(i, j) * v[j];
  return r;
}

Mat to_rational(const ZMat& m) {
  Mat r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r(i, j) = Q(m(i, j));
  return r;
}

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Q inv = 1 / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

size_t rank(const Mat& m) {
  Mat t(m);
  return rref(t).size();
}

std::vector<Vec> nullspace(const Mat& m) {
  Mat t(m);
  auto piv = rref(t);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -t(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug(k, a.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<SparseZ> SparseZ::from(const Mat& m) {
  SparseZ s;
  s.dim = m.rows();
  s.cols.resize(m.cols());
  for (size_t j = 0; j < m.cols(); ++j)
    for (size_t i = 0; i < m.rows(); ++i) {
      const Q& x = m(i, j);
      if (x == 0) continue;
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) return std::nullopt;
      s.cols[j].emplace_back(i, x.get_num().get_si());
    }
  return s;
}

}  // namespace unidual
