#pragma once

#include "unidual/matrix.hpp"
#include "unidual/rootsys.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace unidual {

// Extra structure of the regular representation. K is the elementary abelian subgroup
// generated by the reflections in a maximal set of mutually orthogonal positive roots; the
// characters of K split C[W] into blocks that every left multiplication preserves.
struct RegularModel {
  WeylGroup group;
  std::vector<int> k_elems;      // element of K for each subset mask of the chosen roots
  std::vector<int> transversal;  // one element from each left coset x K
  // prod[(x * nk + s) * nt + y] = transversal[x] * k_elems[s] * transversal[y]^{-1}
  std::vector<int> prod;
  std::vector<int> roots;        // indices of the chosen orthogonal positive roots
};

struct WRep {
  std::string name;
  size_t dim = 0;
  std::vector<Mat> gens;  // one matrix per simple reflection, acting on column vectors
  Mat form;               // invariant symmetric positive definite form
  // Number of trivial summands carried along on purpose (the invariant line of the full
  // symmetric square); their +1's are removed from reported inertias.
  int trivial_split = 0;
  std::vector<std::optional<SparseZ>> sparse;  // integer generators when available
  std::shared_ptr<const RegularModel> regular;  // set for regular_rep only

  void finalize();
};

WRep trivial_rep(const RootSystem& rs);
WRep sign_rep(const RootSystem& rs);
WRep regular_rep(const RootSystem& rs, const WeylGroup& g);
std::shared_ptr<const RegularModel> regular_model(const RootSystem& rs, const WeylGroup& g);
WRep reflection_rep(const RootSystem& rs);
// Sym^2 of the reflection representation on the monomials e_a e_b (a <= b).
WRep sym2_full(const RootSystem& rs);
// The form-orthogonal complement of the invariant line inside sym2_full.
WRep sym2_nontrivial(const RootSystem& rs);
// Invariant quadratic element of sym2_full, in its monomial basis.
Vec sym2_invariant(const RootSystem& rs);

bool generators_are_involutions(const WRep& r);
bool braid_relations_hold(const WRep& r, const RootSystem& rs);
bool form_is_invariant(const WRep& r);
// Coxeter matrix entry m_ij from the Cartan integers.
int coxeter_m(const RootSystem& rs, int i, int j);

// Matrices of every group element in the representation, indexed like g.
std::vector<Mat> element_matrices(const WRep& r, const WeylGroup& g);
// Smallest degree of the coinvariant algebra containing a constituent of r.
int lowest_harmonic_degree(const WRep& r, const RootSystem& rs, const WeylGroup& g);
// Character values indexed like g; the regular representation is read off without matrices.
Vec character(const WRep& r, const WeylGroup& g);
// Multiplicities <chi_a, chi_b> of two representations from their characters.
Q character_inner_product(const WRep& a, const WRep& b, const WeylGroup& g);

}  // namespace unidual
