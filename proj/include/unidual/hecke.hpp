#pragma once

#include "unidual/matrix.hpp"
#include "unidual/rootsys.hpp"

#include <map>
#include <string>
#include <vector>

namespace unidual {

// Polynomial in the ambient coordinate functionals x_1..x_d, rational coefficients.
class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() = default;
  static Poly constant(size_t nvars, const Q& c);
  // The linear form v . x.
  static Poly linear(const Vec& v);

  size_t nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Q>& terms() const { return terms_; }
  int degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Q& s) const;
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Q evaluate(const Vec& chi) const;
  // f o A^T, i.e. the image of f under the linear map A on the underlying space.
  Poly transform(const Mat& a) const;
  std::string str() const;

 private:
  void add(const Monomial& m, const Q& c);
  size_t n_ = 0;
  std::map<Monomial, Q> terms_;
};

// Graded Hecke algebra at r = 1/2: t_s^2 = 1 and  w t_s = t_s s(w) + <w, alpha^vee>.
class HeckeAlgebra {
 public:
  // sum_w p_w t_w with the polynomial part on the left.
  using Element = std::map<int, Poly>;

  HeckeAlgebra(const RootSystem& rs, const WeylGroup& g);

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& group() const { return g_; }

  Element one() const;
  Element t(int w) const;
  Element poly(const Poly& p) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Q& s) const;
  Element multiply(const Element& a, const Element& b) const;

  // r_w = r_{alpha_1} ... r_{alpha_k} with r_alpha = t_alpha alpha - 1. Throws on a non-reduced word.
  Element r_element(const std::vector<int>& word) const;
  // kappa_w = prod over beta > 0 with w beta < 0 of (beta^2 - 1).
  Element kappa(int w) const;

  // The same element written as sum_w t_w q_w, polynomial part on the right.
  Element to_right_form(const Element& a) const;
  // Matrix of t_x (x) 1 |-> t_x h (x) 1 on the basis {t_w (x) 1} of the principal series at chi.
  Mat principal_series_action(const Element& h, const Vec& chi) const;

  // Index of the group element with the given word.
  int element_of(const std::vector<int>& word) const;
  // All reduced words of w.
  std::vector<std::vector<int>> reduced_words(int w) const;

 private:
  Poly reflect(int s, const Poly& p) const;
  // D_s(f) = f t_s - t_s s(f), a polynomial.
  Poly divided(int s, const Poly& f) const;
  Element left_t(int s, const Element& a) const;

  const RootSystem& rs_;
  const WeylGroup& g_;
  std::vector<Mat> refl_;     // ambient reflection matrices
  std::vector<Vec> coroot_;   // alpha^vee
};

}  // namespace unidual
