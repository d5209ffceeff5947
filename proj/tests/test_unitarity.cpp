#include "unidual/unitarity.hpp"

#include <doctest.h>

using namespace unidual;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

Vec v(std::initializer_list<Q> xs) { return Vec(xs); }

}  // namespace

TEST_SUITE("unitarity") {
  TEST_CASE("G2 regions from the signature") {
    RootSystem rs = rs_of("G2");
    ZeroCS z = classify_zero_cs(rs, Method::Regular);
    CHECK(z.verdicts.size() == 8);
    CHECK(z.unitary_count() == 2);
    for (const auto& verdict : z.verdicts) {
      Vec x = verdict.region.x;
      CHECK(verdict.unitary == g2f4_predicate('G', x));
    }
  }

  TEST_CASE("classical predicate") {
    CHECK(classical_predicate('C', v({Q(1, 5), Q(2, 5)})));
    CHECK(!classical_predicate('C', v({Q(1, 5), Q(1, 2)})));
    CHECK(classical_predicate('A', v({Q(0), Q(49, 100)})));
    CHECK(classical_predicate('B', v({Q(1, 10), Q(1, 5)})));
    CHECK(classical_predicate('B', v({Q(1, 5), Q(7, 10)})));
    CHECK(!classical_predicate('B', v({Q(3, 10), Q(9, 10)})));
    // nu_j + nu_k = 1 and nu = 1 are reducible.
    CHECK(!classical_predicate('B', v({Q(1, 2), Q(1, 2)})));
    CHECK(!classical_predicate('B', v({Q(1)})));
    CHECK(!classical_predicate('D', v({Q(1, 4), Q(3, 4)})));
    // The empty small block compares against nu_0 = 0.
    CHECK(classical_predicate('D', v({Q(0), Q(9, 10)})));
    CHECK_THROWS_AS(classical_predicate('C', v({Q(2, 5), Q(1, 5)})), std::invalid_argument);
    CHECK_THROWS_AS(classical_predicate('C', v({Q(-1, 5)})), std::invalid_argument);
    CHECK_THROWS_AS(classical_predicate('E', v({Q(0)})), std::invalid_argument);
  }

  TEST_CASE("G2 and F4 predicates") {
    CHECK(g2f4_predicate('G', v({Q(0), Q(0)})));
    CHECK(g2f4_predicate('G', v({Q(1, 6), Q(1, 6)})));
    CHECK(!g2f4_predicate('G', v({Q(1, 4), Q(1, 4)})));
    CHECK(g2f4_predicate('G', v({Q(3, 10), Q(1, 5)})));
    CHECK(!g2f4_predicate('G', v({Q(1, 2), Q(0)})));
    CHECK(g2f4_predicate('F', v({Q(2, 5), Q(0), Q(0), Q(0)})));
    CHECK(!g2f4_predicate('F', v({Q(3, 5), Q(0), Q(0), Q(0)})));
    CHECK(g2f4_predicate('F', v({Q(3, 5), Q(1, 5), Q(1, 5), Q(1, 10)})));
    CHECK_THROWS_AS(g2f4_predicate('F', v({Q(0), Q(1), Q(0), Q(0)})), std::invalid_argument);
    CHECK_THROWS_AS(g2f4_predicate('G', v({Q(0)})), std::invalid_argument);
  }

  TEST_CASE("signatures agree with the closed forms in small rank") {
    for (const char* name : {"A2", "A3", "B2", "C2", "B3", "C3", "G2"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      ZeroCS z = classify_zero_cs(rs, Method::Regular);
      CrossReport rep = cross_validate(z, rs);
      for (const auto& d : rep.disagreements) MESSAGE(d);
      CHECK(rep.ok());
      CHECK(rep.agree == z.verdicts.size());
      ZeroCS r = classify_zero_cs(rs, Method::Relevant);
      REQUIRE(r.verdicts.size() == z.verdicts.size());
      for (size_t k = 0; k < z.verdicts.size(); ++k) CHECK(r.verdicts[k].unitary == z.verdicts[k].unitary);
    }
  }

  TEST_CASE("unitary regions are bounded and touch a wall") {
    for (const char* name : {"B3", "C3", "D4", "G2", "F4"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      ZeroCS z = classify_zero_cs(rs, Method::Relevant);
      for (const auto& verdict : z.verdicts) {
        if (!verdict.unitary) continue;
        CHECK(verdict.region.bounded);
        CHECK(!verdict.region.zero_walls.empty());
      }
    }
  }

  TEST_CASE("method resolution") {
    CHECK(resolve_method(rs_of("F4"), Method::Auto, kDefaultCap) == Method::Regular);
    CHECK(resolve_method(rs_of("E6"), Method::Auto, kDefaultCap) == Method::Relevant);
    CHECK(resolve_method(rs_of("E6"), Method::Relevant, kDefaultCap) == Method::Relevant);
    CHECK(resolve_method(rs_of("E7"), Method::Regular, kDefaultCap) == Method::Regular);
    CHECK_THROWS_AS(test_representations(rs_of("E7"), Method::Regular, kDefaultCap), CapExceeded);
    CHECK(parse_method("regular") == Method::Regular);
    CHECK_THROWS_AS(parse_method("fast"), std::invalid_argument);
  }

  TEST_CASE("alcove conditions") {
    CHECK(alcove_conditions(6).size() == 2);
    CHECK(alcove_conditions(7).size() == 8);
    CHECK(alcove_conditions(8).size() == 16);
    RootSystem e7 = rs_of("E7");
    Vec small = e7.from_simple_coords(Vec(7, Q(1, 40)));
    CHECK(matching_condition(e7, small) == 0);
    CHECK(alcove_predicate(e7, small));
    CHECK(witnesses_at(e7, test_representations(e7, Method::Relevant, kDefaultCap), small).size() >= 2);
  }

  TEST_CASE("E6 hermitian slice matches the condition sets") {
    RootSystem rs = rs_of("E6");
    ZeroCS z = classify_zero_cs(rs, Method::Relevant);
    CHECK(z.sliced);
    CHECK(z.unitary_count() == 2);
    std::vector<int> matches;
    std::string detail;
    CHECK_MESSAGE(conditions_bijective(rs, z, &matches, &detail), detail);
    CHECK(matches.size() == 2);
    CHECK(cross_validate(z, rs).ok());
  }
}
