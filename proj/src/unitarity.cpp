#include "unidual/unitarity.hpp"

#include "unidual/parallel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace unidual {

std::string to_string(Method m) {
  switch (m) {
    case Method::Regular: return "regular";
    case Method::Relevant: return "relevant";
    case Method::Auto: return "auto";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  if (s == "regular") return Method::Regular;
  if (s == "relevant") return Method::Relevant;
  if (s == "auto") return Method::Auto;
  throw std::invalid_argument("unknown method '" + s + "'");
}

size_t ZeroCS::unitary_count() const {
  return std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.unitary; });
}

Method resolve_method(const RootSystem& rs, Method m, size_t cap) {
  if (m != Method::Auto) return m;
  return group_order(rs.cartan) <= cap ? Method::Regular : Method::Relevant;
}

std::vector<WRep> test_representations(const RootSystem& rs, Method m, size_t cap) {
  m = resolve_method(rs, m, cap);
  if (m == Method::Regular) return {regular_rep(rs, enumerate_group(rs, cap))};
  return {reflection_rep(rs), sym2_full(rs)};
}

std::vector<Witness> witnesses_at(const RootSystem& rs, const std::vector<WRep>& reps, const Vec& chi,
                                  bool short_circuit) {
  std::vector<Witness> out;
  for (const auto& r : reps) {
    Witness w{r.name == "sym2" ? "sym2_nontrivial" : r.name, form_inertia(r, rs, chi)};
    out.push_back(w);
    if (short_circuit && w.inertia.negative > 0) break;
  }
  return out;
}

ZeroCS classify_zero_cs(const RootSystem& rs, Method m, const ClassifyOptions& opt) {
  ZeroCS z;
  z.type = rs.cartan;
  z.method = resolve_method(rs, m, opt.cap);
  Slice slice = hermitian_slice(rs);
  z.sliced = !slice.full();
  auto reps = test_representations(rs, z.method, opt.cap);
  WRep refl = reflection_rep(rs);
  auto arr = build_regions(rs, slice, opt.threads);
  z.dropped = arr.dropped;
  z.verdicts.resize(arr.regions.size());
  std::atomic<size_t> done{0};
  std::mutex mu;
  parallel_for(arr.regions.size(), opt.threads, [&](size_t k) {
    Verdict v;
    v.region = arr.regions[k];
    v.method = z.method;
    if (!v.region.bounded) {
      // Unbounded regions are never unitary; the reflection representation shows it.
      v.witnesses.push_back({"refl", form_inertia(refl, rs, v.region.sample)});
      if (v.witnesses[0].inertia.negative == 0)
        throw std::logic_error("unbounded region with a semidefinite reflection form");
    } else {
      v.witnesses = witnesses_at(rs, reps, v.region.sample, opt.short_circuit);
    }
    v.unitary = std::all_of(v.witnesses.begin(), v.witnesses.end(),
                            [](const Witness& w) { return w.inertia.semidefinite(); });
    v.definite = std::all_of(v.witnesses.begin(), v.witnesses.end(),
                             [](const Witness& w) { return w.inertia.definite(); });
    z.verdicts[k] = std::move(v);
    size_t d = ++done;
    if (opt.progress) {
      std::lock_guard<std::mutex> lock(mu);
      opt.progress(d, arr.regions.size());
    }
  });
  return z;
}

namespace {

void require_sorted(const Vec& nu) {
  for (size_t k = 0; k < nu.size(); ++k) {
    if (nu[k] < 0) throw std::invalid_argument("classical_predicate: negative entry");
    if (k && nu[k] < nu[k - 1]) throw std::invalid_argument("classical_predicate: input not sorted");
  }
}

bool bd_predicate(char family, const Vec& nu) {
  size_t n = nu.size();
  // Reducible parameters are excluded.
  for (size_t j = 0; j < n; ++j) {
    if (family == 'B' && nu[j] == 1) return false;
    for (size_t k = j + 1; k < n; ++k)
      if (nu[j] + nu[k] == 1 || nu[k] - nu[j] == 1) return false;
  }
  for (size_t i = 1; i <= n; ++i) {
    // Small block nu_1..nu_i, with nu_0 = 0.
    Q prev = i >= 2 ? nu[i - 2] : Q(0);
    Q bound = 1 - prev;
    if (!(nu[i - 1] < bound)) continue;
    Vec large(nu.begin() + i, nu.end());
    if (!large.empty() && !(bound < large.front())) continue;
    bool increasing = true;
    for (size_t k = 1; k < large.size(); ++k)
      if (!(large[k - 1] < large[k])) increasing = false;
    if (!increasing) continue;
    if (!large.empty() && !(large.back() < 1)) continue;
    Vec points{nu[i - 1]};
    points.insert(points.end(), large.begin(), large.end());
    bool odd = true;
    for (size_t k = 0; k + 1 < points.size() && odd; ++k) {
      int crossings = 0;
      for (size_t l = 0; l + 1 < i; ++l) {
        Q r = 1 - nu[l];
        if (points[k] < r && r < points[k + 1]) ++crossings;
      }
      odd = crossings % 2 == 1;
    }
    if (odd) return true;
  }
  return false;
}

}  // namespace

bool classical_predicate(char family, const Vec& nu) {
  require_sorted(nu);
  switch (family) {
    case 'A':
    case 'C':
      return nu.empty() || nu.back() < Q(1, 2);
    case 'B':
    case 'D':
      return bd_predicate(family, nu);
  }
  throw std::invalid_argument("classical_predicate: family must be A, B, C or D");
}

bool g2f4_predicate(char family, const Vec& nu) {
  if (family == 'G') {
    if (nu.size() != 2) throw std::invalid_argument("g2f4_predicate: G2 takes two entries");
    const Q &a = nu[0], &b = nu[1];
    if (a < 0 || b < 0) throw std::invalid_argument("g2f4_predicate: parameter not dominant");
    return 3 * a + 2 * b < 1 || (2 * a + b < 1 && 1 < 3 * a + b);
  }
  if (family == 'F') {
    if (nu.size() != 4) throw std::invalid_argument("g2f4_predicate: F4 takes four entries");
    const Q &a = nu[0], &b = nu[1], &c = nu[2], &d = nu[3];
    if (a - b - c - d < 0 || b < c || c < d || d < 0)
      throw std::invalid_argument("g2f4_predicate: parameter not dominant");
    return 2 * a < 1 || (a + b + c - d < 1 && 1 < a + b + c + d);
  }
  throw std::invalid_argument("g2f4_predicate: family must be G or F");
}

const std::vector<ConditionSet>& alcove_conditions(int erank) {
  static const std::vector<ConditionSet> e6 = {
      {{36}, {}, {1, 2, 3, 4, 5, 6}},
      {{34}, {35}, {1, 2, 3, 5, 6}},
  };
  static const std::vector<ConditionSet> e7 = {
      {{63}, {}, {1, 2, 3, 4, 5, 6, 7}},
      {{61}, {62}, {1, 2, 4, 5, 6, 7}},
      {{58, 59}, {60}, {1, 3, 4, 6, 7}},
      {{53, 54, 55}, {56, 57}, {1, 3, 5}},
      {{46, 47, 48, 49}, {50, 51, 52}, {2}},
      {{53, 59}, {56}, {1, 3, 4, 5, 6}},
      {{49, 53, 54}, {52, 56}, {3, 4, 5}},
      {{47, 48, 49, 53}, {51, 52}, {2, 4}},
  };
  static const std::vector<ConditionSet> e8 = {
      {{120}, {}, {1, 2, 3, 4, 5, 6, 7, 8}},
      {{113, 114}, {115}, {1, 4, 5, 6, 7, 8}},
      {{109, 110}, {111, 112}, {3, 5, 6, 7, 8}},
      {{91, 92, 97, 98}, {95, 96, 101}, {3, 4}},
      {{90, 91, 92, 97}, {94, 95, 96}, {1, 3}},
      {{89, 90, 91, 92}, {93, 94, 95, 96}, {1}},
      {{104, 110}, {107, 112}, {3, 4, 5, 7, 8}},
      {{104, 105, 106}, {107, 108}, {2, 4, 7, 8}},
      {{118}, {119}, {1, 2, 3, 4, 5, 6, 8}},
      {{97, 110}, {101, 112}, {3, 4, 5, 6, 7}},
      {{97, 105, 106}, {101, 108}, {2, 4, 6, 7}},
      {{116}, {117}, {1, 2, 3, 4, 6, 7, 8}},
      {{97, 98, 106}, {101, 102}, {2, 4, 5, 6}},
      {{97, 98, 99}, {96, 101, 102}, {2, 4, 5}},
      {{97, 98, 99, 100}, {101, 102, 103}, {2, 5}},
      {{114}, {112}, {1, 3, 4, 5, 6, 7, 8}},
  };
  switch (erank) {
    case 6: return e6;
    case 7: return e7;
    case 8: return e8;
  }
  throw std::invalid_argument("alcove_conditions: rank must be 6, 7 or 8");
}

int matching_condition(const RootSystem& rs, const Vec& chi) {
  if (rs.cartan.family != 'E') throw std::invalid_argument("alcove predicate needs type E");
  if (!rs.is_dominant(chi)) throw std::invalid_argument("alcove predicate: parameter not dominant");
  if (!is_hermitian(rs, chi)) throw std::invalid_argument("alcove predicate: parameter off the hermitian slice");
  const auto& sets = alcove_conditions(rs.cartan.rank);
  auto p = [&](int idx) { return pairing(rs.positive_roots[idx - 1], chi); };
  for (size_t k = 0; k < sets.size(); ++k) {
    const auto& c = sets[k];
    bool ok = true;
    for (int i : c.below) ok = ok && p(i) < 1;
    for (int i : c.above) ok = ok && p(i) > 1;
    for (int i : c.nonneg) ok = ok && p(i) >= 0;
    if (ok) return static_cast<int>(k);
  }
  return -1;
}

bool alcove_predicate(const RootSystem& rs, const Vec& chi) { return matching_condition(rs, chi) >= 0; }

Vec closed_form_coordinates(const RootSystem& rs, const Vec& chi) {
  Vec nu;
  switch (rs.cartan.family) {
    case 'A':
      for (const auto& x : chi)
        if (x > 0) nu.push_back(x);
      break;
    case 'B':
    case 'C':
    case 'D':
      for (const auto& x : chi) nu.push_back(abs(x));
      break;
    case 'G':
      return rs.simple_coords(chi);
    case 'F':
      return chi;
    default:
      return chi;
  }
  std::sort(nu.begin(), nu.end());
  return nu;
}

std::optional<bool> closed_form(const RootSystem& rs, const Vec& chi) {
  char f = rs.cartan.family;
  if (f == 'E') return alcove_predicate(rs, chi);
  if (is_reducible(rs, chi)) return false;
  Vec nu = closed_form_coordinates(rs, chi);
  if (f == 'G' || f == 'F') return g2f4_predicate(f, nu);
  return classical_predicate(f, nu);
}

CrossReport cross_validate(const ZeroCS& z, const RootSystem& rs) {
  CrossReport rep;
  rep.type = z.type;
  rep.method = z.method;
  for (const auto& v : z.verdicts) {
    ++rep.regions;
    if (v.unitary) ++rep.unitary;
    auto cf = closed_form(rs, v.region.sample);
    if (cf && *cf == v.unitary) {
      ++rep.agree;
      continue;
    }
    std::ostringstream os;
    os << "delta={";
    for (size_t k = 0; k < v.region.delta.size(); ++k) os << (k ? "," : "") << v.region.delta[k] + 1;
    os << "} delta'={";
    for (size_t k = 0; k < v.region.delta_prime.size(); ++k) os << (k ? "," : "") << v.region.delta_prime[k] + 1;
    os << "} sample=" << to_string(v.region.sample) << " signature=" << (v.unitary ? "unitary" : "not unitary")
       << " closed-form=" << (cf ? (*cf ? "unitary" : "not unitary") : "n/a") << " witnesses:";
    for (const auto& w : v.witnesses)
      os << " " << w.rep << "(" << w.inertia.positive << "," << w.inertia.negative << "," << w.inertia.zero << ")";
    rep.disagreements.push_back(os.str());
  }
  return rep;
}

bool conditions_bijective(const RootSystem& rs, const ZeroCS& z, std::vector<int>* matches, std::string* detail) {
  const auto& sets = alcove_conditions(rs.cartan.rank);
  std::vector<int> hits(sets.size(), 0);
  std::vector<int> found;
  std::ostringstream os;
  for (const auto& v : z.verdicts) {
    if (!v.unitary) continue;
    int k = matching_condition(rs, v.region.sample);
    found.push_back(k);
    if (k < 0)
      os << "unitary region at " << to_string(v.region.sample) << " matches no condition set; ";
    else
      ++hits[k];
  }
  for (size_t k = 0; k < sets.size(); ++k)
    if (hits[k] != 1) os << "condition set " << k + 1 << " matched " << hits[k] << " times; ";
  if (matches) *matches = found;
  if (detail) *detail = os.str();
  return os.str().empty();
}

}  // namespace unidual
