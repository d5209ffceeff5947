#include "unidual/arrangement.hpp"
#include "unidual/intertwine.hpp"
#include "unidual/wreps.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace unidual;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

// Catalan number of W: prod over exponents e of (h + e + 1) / (e + 1).
unsigned long long catalan(const RootSystem& rs) {
  static const std::map<std::string, std::vector<int>> exponents = {
      {"A1", {1}},          {"A2", {1, 2}},          {"A3", {1, 2, 3}},       {"A4", {1, 2, 3, 4}},
      {"B2", {1, 3}},       {"B3", {1, 3, 5}},       {"C3", {1, 3, 5}},       {"D4", {1, 3, 3, 5}},
      {"G2", {1, 5}},       {"F4", {1, 5, 7, 11}},   {"E6", {1, 4, 5, 7, 8, 11}},
      {"E7", {1, 5, 7, 9, 11, 13, 17}}};
  Q c = 1;
  for (int e : exponents.at(rs.cartan.name())) {
    Q f(rs.coxeter_number + e + 1, e + 1);
    f.canonicalize();
    c *= f;
  }
  return c.get_num().get_ui();
}

}  // namespace

TEST_SUITE("arrangement") {
  TEST_CASE("antichains are counted by the Catalan number") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      CHECK(enumerate_antichains(rs).size() == catalan(rs));
    }
  }

  TEST_CASE("every antichain gives a region in rank <= 4") {
    for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      Arrangement a = build_regions(rs, Slice{});
      CHECK(a.dropped == 0);
      CHECK(a.regions.size() == enumerate_antichains(rs).size());
    }
  }

  TEST_CASE("samples reproduce the full sign vector") {
    for (const char* name : {"B3", "G2", "F4"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      Arrangement a = build_regions(rs, Slice{});
      for (const auto& r : a.regions) {
        REQUIRE(rs.is_dominant(r.sample));
        auto loc = locate(rs, r.x);
        REQUIRE(loc.has_value());
        CHECK(loc->delta == r.delta);
        CHECK(loc->delta_prime == r.delta_prime);
        for (int b : r.delta) CHECK(pairing(rs.positive_roots[b], r.sample) < 1);
        for (int b : r.delta_prime) CHECK(pairing(rs.positive_roots[b], r.sample) > 1);
        CHECK(complement_antichain(rs, r.delta) == r.delta_prime);
      }
    }
  }

  TEST_CASE("hermitian slices") {
    RootSystem e6 = rs_of("E6");
    Slice s = hermitian_slice(e6);
    CHECK(s.equations.size() == 2);
    Arrangement a = build_regions(e6, s);
    CHECK(a.regions.size() + a.dropped == 833);
    for (const auto& r : a.regions) CHECK(is_hermitian(e6, r.sample));
    CHECK(hermitian_slice(rs_of("B3")).full());
  }

  TEST_CASE("signatures are constant on regions") {
    for (const char* name : {"B2", "G2"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WRep reg = regular_rep(rs, enumerate_group(rs));
      Arrangement a = build_regions(rs, Slice{});
      for (const auto& r : a.regions) {
        Inertia base = form_inertia(reg, rs, r.sample);
        auto extra = extra_samples(rs, r, Slice{}, 3);
        CHECK(extra.size() == 3);
        for (const auto& x : extra) {
          CHECK(x != r.x);
          auto loc = locate(rs, x);
          REQUIRE(loc.has_value());
          CHECK(loc->delta == r.delta);
          CHECK(form_inertia(reg, rs, rs.from_simple_coords(x)) == base);
        }
      }
    }
  }

  TEST_CASE("walls") {
    RootSystem a2 = rs_of("A2");
    Arrangement a = build_regions(a2, Slice{});
    for (const auto& r : a.regions) {
      if (r.delta == std::vector<int>{a2.highest_root()}) CHECK(r.zero_walls == std::vector<int>{0, 1});
      if (r.delta_prime == std::vector<int>{a2.highest_root()}) CHECK(r.zero_walls.empty());
    }
    RootSystem e8 = rs_of("E8");
    auto alcove = sample_point(e8, {e8.highest_root()}, {}, Slice{});
    REQUIRE(alcove.has_value());
    CHECK(pairing(e8.positive_roots.back(), e8.from_simple_coords(alcove->x)) < 1);
  }

  TEST_CASE("LP walls match the root criterion in simply-laced types") {
    for (const char* name : {"A3", "A4", "D4", "D5"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      Arrangement a = build_regions(rs, Slice{});
      for (const auto& r : a.regions) CHECK(zero_walls_combinatorial(rs, r) == r.zero_walls);
    }
  }

  TEST_CASE("maximal orthogonal antichains") {
    for (const char* name : {"A1", "A2", "A3", "A4", "A5", "D4", "G2", "F4"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      int mid = (rs.coxeter_number + 1) / 2;
      int at_level = static_cast<int>(std::count(rs.level.begin(), rs.level.end(), mid));
      CHECK(max_orthogonal_antichain(rs) == at_level);
    }
    CHECK(max_orthogonal_antichain(rs_of("A2")) == 1);
    CHECK(max_orthogonal_antichain(rs_of("D4")) == 3);
  }
}
