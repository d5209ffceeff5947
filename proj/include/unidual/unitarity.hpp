#pragma once

#include "unidual/arrangement.hpp"
#include "unidual/intertwine.hpp"
#include "unidual/wreps.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace unidual {

enum class Method { Regular, Relevant, Auto };
std::string to_string(Method m);
Method parse_method(const std::string& s);

struct Witness {
  std::string rep;
  Inertia inertia;
};

struct Verdict {
  Region region;
  bool unitary = false;   // every witness is positive semidefinite
  bool definite = false;  // every witness is positive definite
  std::vector<Witness> witnesses;
  Method method = Method::Relevant;
};

struct ClassifyOptions {
  unsigned threads = 1;
  size_t cap = kDefaultCap;
  // Skip the remaining representations once one has a negative direction.
  bool short_circuit = false;
  std::function<void(size_t done, size_t total)> progress;
};

struct ZeroCS {
  CartanType type;
  Method method = Method::Relevant;
  bool sliced = false;
  size_t dropped = 0;
  std::vector<Verdict> verdicts;
  size_t unitary_count() const;
};

// Regular when the group fits under the cap, relevant otherwise.
Method resolve_method(const RootSystem& rs, Method m, size_t cap);
std::vector<WRep> test_representations(const RootSystem& rs, Method m, size_t cap);

ZeroCS classify_zero_cs(const RootSystem& rs, Method m, const ClassifyOptions& opt = {});

// Witnesses for one hermitian dominant parameter.
std::vector<Witness> witnesses_at(const RootSystem& rs, const std::vector<WRep>& reps, const Vec& chi,
                                  bool short_circuit = false);

// nu sorted nondecreasing and nonnegative; A takes the nonnegative half of the string.
bool classical_predicate(char family, const Vec& nu);
// G2: nu = (<alpha_1,chi>, <alpha_2,chi>); F4: nu = ambient coordinates.
bool g2f4_predicate(char family, const Vec& nu);

// One alcove description: strict <1 and >1 lists and the simple roots printed with >= 0,
// all as 1-based positive-root indices.
struct ConditionSet {
  std::vector<int> below, above, nonneg;
};
const std::vector<ConditionSet>& alcove_conditions(int erank);
// Index of the condition set containing chi, or -1. chi must be dominant and hermitian.
int matching_condition(const RootSystem& rs, const Vec& chi);
bool alcove_predicate(const RootSystem& rs, const Vec& chi);

// The closed-form answer for a dominant hermitian chi, in the family's own coordinates.
std::optional<bool> closed_form(const RootSystem& rs, const Vec& chi);
// The coordinates fed to classical_predicate / g2f4_predicate.
Vec closed_form_coordinates(const RootSystem& rs, const Vec& chi);

struct CrossReport {
  CartanType type;
  Method method = Method::Relevant;
  size_t regions = 0, unitary = 0, agree = 0;
  std::vector<std::string> disagreements;
  bool ok() const { return disagreements.empty(); }
};
CrossReport cross_validate(const ZeroCS& z, const RootSystem& rs);

// E6/E7/E8: the unitary regions and the alcove condition sets correspond one to one.
// Returns the condition index of each unitary region in order; detail explains a failure.
bool conditions_bijective(const RootSystem& rs, const ZeroCS& z, std::vector<int>* matches = nullptr,
                          std::string* detail = nullptr);

}  // namespace unidual
