#pragma once

#include "unidual/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace unidual {

// Row-major dense matrix; T is mpq_class or mpz_class.
template <class T>
class Dense {
 public:
  Dense() = default;
  Dense(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Dense identity(size_t n) {
    Dense m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }
  T* row(size_t i) { return a_.data() + i * c_; }
  const T* row(size_t i) const { return a_.data() + i * c_; }

  Dense operator*(const Dense& o) const {
    Dense m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        const T& x = (*this)(i, k);
        if (x == 0) continue;
        for (size_t j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
      }
    return m;
  }

  Dense operator+(const Dense& o) const {
    Dense m(*this);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
  }

  Dense operator-(const Dense& o) const {
    Dense m(*this);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
  }

  Dense scaled(const T& s) const {
    Dense m(*this);
    for (auto& x : m.a_) x *= s;
    return m;
  }

  Dense transpose() const {
    Dense m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  bool operator==(const Dense& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Dense& o) const { return !(*this == o); }

  bool is_symmetric() const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = i + 1; j < c_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  std::vector<T>& data() { return a_; }
  const std::vector<T>& data() const { return a_; }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using Mat = Dense<Q>;
using ZMat = Dense<Z>;

Vec mul(const Mat& m, const Vec& v);
Mat to_rational(const ZMat& m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Mat& m);
size_t rank(const Mat& m);
std::vector<Vec> nullspace(const Mat& m);
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> inverse(const Mat& m);

// Sparse integer matrix stored by columns, used for generator matrices.
struct SparseZ {
  size_t dim = 0;
  std::vector<std::vector<std::pair<size_t, long>>> cols;
  static std::optional<SparseZ> from(const Mat& m);
};

}  // namespace unidual
