#include "unidual/wreps.hpp"

#include <doctest.h>

#include <algorithm>

using namespace unidual;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

}  // namespace

TEST_SUITE("wreps") {
  TEST_CASE("Coxeter relations and invariant forms") {
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      for (const WRep& r : {trivial_rep(rs), sign_rep(rs), reflection_rep(rs), sym2_full(rs), sym2_nontrivial(rs)}) {
        CAPTURE(r.name);
        CHECK(generators_are_involutions(r));
        CHECK(braid_relations_hold(r, rs));
        CHECK(form_is_invariant(r));
      }
    }
  }

  TEST_CASE("dimensions") {
    RootSystem rs = rs_of("F4");
    CHECK(reflection_rep(rs).dim == 4);
    WRep full = sym2_full(rs);
    CHECK(full.dim == 10);
    CHECK(full.trivial_split == 1);
    CHECK(sym2_nontrivial(rs).dim == 9);
    CHECK(regular_rep(rs, enumerate_group(rs)).dim == 1152);
  }

  TEST_CASE("Coxeter matrix") {
    RootSystem g2 = rs_of("G2");
    CHECK(coxeter_m(g2, 0, 1) == 6);
    RootSystem b3 = rs_of("B3");
    CHECK(coxeter_m(b3, 0, 1) == 3);
    CHECK(coxeter_m(b3, 1, 2) == 4);
    CHECK(coxeter_m(b3, 0, 2) == 2);
  }

  TEST_CASE("character inner products") {
    for (const char* name : {"B3", "G2", "F4", "D4"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      WRep refl = reflection_rep(rs);
      CHECK(character_inner_product(refl, refl, g) == 1);
      CHECK(character_inner_product(trivial_rep(rs), sym2_full(rs), g) == 1);
      CHECK(character_inner_product(trivial_rep(rs), sym2_nontrivial(rs), g) == 0);
      CHECK(character_inner_product(regular_rep(rs, g), refl, g) == Q(static_cast<long>(refl.dim)));
    }
    // Sym^2 minus the invariant line is irreducible for G2 (2_2) and F4 (9_1).
    for (const char* name : {"G2", "F4"}) {
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      WRep s = sym2_nontrivial(rs);
      CHECK(character_inner_product(s, s, g) == 1);
    }
  }

  TEST_CASE("B2 regular representation") {
    // Four one-dimensional characters and the two-dimensional one twice: 4 * 1 + 2^2 = 8.
    RootSystem rs = rs_of("B2");
    WeylGroup g = enumerate_group(rs);
    WRep reg = regular_rep(rs, g);
    CHECK(reg.dim == 8);
    CHECK(character_inner_product(reg, reg, g) == 8);
    CHECK(character_inner_product(reg, trivial_rep(rs), g) == 1);
    CHECK(character_inner_product(reg, sign_rep(rs), g) == 1);
    CHECK(character_inner_product(reg, reflection_rep(rs), g) == 2);
    Vec chi = character(reg, g);
    CHECK(std::count(chi.begin(), chi.end(), Q(0)) == 7);
  }

  TEST_CASE("lowest harmonic degrees") {
    for (const char* name : {"A2", "B2", "G2", "B3", "F4"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      CHECK(lowest_harmonic_degree(trivial_rep(rs), rs, g) == 0);
      CHECK(lowest_harmonic_degree(reflection_rep(rs), rs, g) == 1);
      CHECK(lowest_harmonic_degree(sign_rep(rs), rs, g) == static_cast<int>(rs.num_positive()));
      // For A2 the nontrivial part of Sym^2 is the reflection representation again.
      CHECK(lowest_harmonic_degree(sym2_nontrivial(rs), rs, g) == (rs.cartan.family == 'A' ? 1 : 2));
    }
    RootSystem b2 = rs_of("B2");
    CHECK(lowest_harmonic_degree(sign_rep(b2), b2, enumerate_group(b2)) == 4);
  }

  TEST_CASE("regular representation matrices") {
    RootSystem rs = rs_of("G2");
    WeylGroup g = enumerate_group(rs);
    WRep reg = regular_rep(rs, g);
    auto mats = element_matrices(reg, g);
    REQUIRE(mats.size() == g.size());
    for (size_t a = 0; a < g.size(); ++a)
      for (size_t b = 0; b < g.size(); ++b) CHECK(mats[a] * mats[b] == mats[g.multiply(a, b)]);
  }
}
