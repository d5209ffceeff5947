#pragma once

#include "unidual/matrix.hpp"
#include "unidual/rootsys.hpp"
#include "unidual/wreps.hpp"

#include <string>
#include <vector>

namespace unidual {

struct Inertia {
  size_t positive = 0, negative = 0, zero = 0;
  bool operator==(const Inertia&) const = default;
  size_t dim() const { return positive + negative + zero; }
  bool definite() const { return negative == 0 && zero == 0; }
  bool semidefinite() const { return negative == 0; }
};

struct OperatorResult {
  Mat matrix;
  Vec chi;
  std::string rep_name;
};

class NotDominant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// P+ + (1-t)/(1+t) P- for the simple reflection s_i.
Mat rank_one_factor(const WRep& rep, int i, const Q& t);

// t_j = <alpha_{i_j}, s_{i_{j+1}} ... s_{i_k} chi> along a word i_1 ... i_k.
std::vector<Q> operator_scalars(const RootSystem& rs, const std::vector<int>& word, const Vec& chi);

// a_mu(chi) = product of the rank-one factors along a reduced word of w0 (longest_element's
// word unless one is supplied). chi must be dominant.
OperatorResult long_operator(const WRep& rep, const RootSystem& rs, const Vec& chi,
                             const std::vector<int>* word = nullptr);

// Integer form of the same operator: returns A' with a_mu(chi) = A' * scale, scale > 0.
// Needs integer generators.
ZMat long_operator_scaled(const WRep& rep, const RootSystem& rs, const Vec& chi, Q& scale);

bool is_hermitian(const RootSystem& rs, const Vec& chi);
// form * a_mu(chi); requires w0 chi = -chi and checks symmetry exactly.
Mat hermitian_form(const OperatorResult& op, const WRep& rep, const RootSystem& rs);

Inertia inertia(const Mat& m);
// Fraction-free (Bareiss) elimination with symmetric pivoting.
Inertia inertia(const ZMat& m);
Inertia operator+(const Inertia& a, const Inertia& b);

// a_mu(chi) on C[W] is left multiplication by one group-algebra element; returns its
// coefficients (indexed like the group) up to the positive factor `scale`.
std::vector<Z> regular_element(const RegularModel& m, const RootSystem& rs, const Vec& chi, Q& scale);
// Inertia of the regular-representation form, assembled from the blocks of the model.
Inertia regular_inertia(const RegularModel& m, const RootSystem& rs, const Vec& chi);

// Inertia of the hermitian form of rep at chi, with any deliberately carried trivial
// summands removed. Uses the integer path when the generators are integral.
Inertia form_inertia(const WRep& rep, const RootSystem& rs, const Vec& chi);

bool is_reducible(const RootSystem& rs, const Vec& chi);

}  // namespace unidual
