#pragma once

#include "unidual/matrix.hpp"
#include "unidual/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace unidual {

struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
  // "E8", "b3", ... ; throws std::invalid_argument.
  static CartanType parse(const std::string& s);
  static CartanType make(char family, int rank);
  bool operator==(const CartanType&) const = default;
};

struct WeylElement {
  Mat matrix;
  std::vector<int> word;  // 0-based simple reflection indices, leftmost factor first
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RootSystem {
 public:
  static RootSystem build(CartanType cartan);

  CartanType cartan;
  size_t ambient_dim = 0;
  std::vector<Vec> simple_roots;
  // Sorted by level, then by simple-root coefficient vector in decreasing lexicographic order.
  std::vector<Vec> positive_roots;
  std::vector<std::vector<int>> coeffs;  // simple-root coefficients of each positive root
  std::vector<int> level;
  struct Cover {
    int lower, upper, simple;
  };
  std::vector<Cover> covers;
  int coxeter_number = 0;
  Mat gram;     // (alpha_i, alpha_j)
  Mat cartan_m; // <alpha_i, alpha_j^vee>

  size_t rank() const { return simple_roots.size(); }
  size_t num_positive() const { return positive_roots.size(); }
  int highest_root() const { return static_cast<int>(positive_roots.size()) - 1; }
  // Index of a positive root from its coefficient vector, or -1.
  int index_of(const std::vector<int>& c) const;
  int simple_index(int i) const { return simple_pos_[i]; }
  // beta <= gamma in the root poset.
  bool leq(int beta, int gamma) const;

  Vec reflect_simple(int i, const Vec& v) const;
  // x_i = <alpha_i, chi>.
  Vec simple_coords(const Vec& chi) const;
  // The point of the root span with prescribed simple coordinates.
  Vec from_simple_coords(const Vec& x) const;
  Q pairing_index(int root, const Vec& x_simple) const;
  bool in_root_span(const Vec& v) const;
  bool is_dominant(const Vec& chi) const;
  // Conjugate into the closed dominant chamber.
  Vec make_dominant(const Vec& chi) const;
  // sigma(i) with -w0(alpha_i) = alpha_sigma(i).
  std::vector<int> diagram_involution() const;

 private:
  std::vector<int> simple_pos_;
  Mat gram_inv_;
};

Q pairing(const Vec& root, const Vec& chi);
WeylElement reflect(const Vec& root);
Vec act(const WeylElement& w, const Vec& v);
Mat simple_reflection_matrix(const RootSystem& rs, int i);
Mat word_matrix(const RootSystem& rs, const std::vector<int>& word);
WeylElement longest_element(const RootSystem& rs);
std::vector<Vec> minus_one_eigenspace(const RootSystem& rs);

// All of W, each element once, in breadth-first order from the identity.
struct WeylGroup {
  std::vector<Mat> matrices;
  std::vector<std::vector<int>> words;   // reduced words, leftmost factor first
  std::vector<std::vector<int>> left;    // left[i][w] = index of s_i w
  std::vector<std::vector<int>> right;   // right[i][w] = index of w s_i
  std::vector<int> inverse;
  size_t size() const { return matrices.size(); }
  int length(int w) const { return static_cast<int>(words[w].size()); }
  int multiply(int a, int b) const;  // index of a*b
  int longest() const;
};

constexpr size_t kDefaultCap = 1152;
WeylGroup enumerate_group(const RootSystem& rs, size_t cap = kDefaultCap);

// Known |W| without enumeration.
unsigned long long group_order(CartanType t);

}  // namespace unidual
