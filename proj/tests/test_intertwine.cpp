#include "unidual/arrangement.hpp"
#include "unidual/intertwine.hpp"
#include "unidual/wreps.hpp"

#include <doctest.h>

#include <random>

using namespace unidual;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

Vec random_dominant(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 30), den(1, 13);
  Vec x;
  for (size_t i = 0; i < rs.rank(); ++i) {
    x.push_back(Q(num(rng), den(rng)));
    x.back().canonicalize();
  }
  return rs.from_simple_coords(x);
}

// A dominant point with w0 chi = -chi: average x with its image under the diagram involution.
Vec random_hermitian(const RootSystem& rs, std::mt19937_64& rng) {
  Vec x = rs.simple_coords(random_dominant(rs, rng));
  auto sigma = rs.diagram_involution();
  Vec y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + x[sigma[i]]) / 2;
  return rs.from_simple_coords(y);
}

bool symmetric(const Mat& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

}  // namespace

TEST_SUITE("intertwine") {
  TEST_CASE("the long operator is the identity at chi = 0") {
    for (const char* name : {"A3", "B2", "G2", "F4", "E6"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      Vec zero(rs.ambient_dim, Q(0));
      for (const WRep& r : {reflection_rep(rs), sym2_full(rs), sym2_nontrivial(rs)})
        CHECK(long_operator(r, rs, zero).matrix == Mat::identity(r.dim));
    }
    RootSystem g2 = rs_of("G2");
    WRep reg = regular_rep(g2, enumerate_group(g2));
    CHECK(long_operator(reg, g2, Vec(g2.ambient_dim, Q(0))).matrix == Mat::identity(12));
  }

  TEST_CASE("rank-one factor at t = 0") {
    RootSystem rs = rs_of("B3");
    WRep refl = reflection_rep(rs);
    for (int i = 0; i < 3; ++i) CHECK(rank_one_factor(refl, i, Q(0)) == Mat::identity(3));
  }

  TEST_CASE("dominance makes every scalar nonnegative") {
    std::mt19937_64 rng(11);
    for (const char* name : {"B3", "G2", "F4", "E6", "E7"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      auto word = longest_element(rs).word;
      for (int trial = 0; trial < 5; ++trial) {
        Vec chi = random_dominant(rs, rng);
        for (const Q& t : operator_scalars(rs, word, chi)) CHECK(t >= 0);
      }
    }
  }

  TEST_CASE("the form is symmetric on hermitian parameters") {
    std::mt19937_64 rng(12);
    for (const char* name : {"A3", "B3", "G2", "D5", "E6"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      for (int trial = 0; trial < 3; ++trial) {
        Vec chi = random_hermitian(rs, rng);
        REQUIRE(is_hermitian(rs, chi));
        for (const WRep& r : {reflection_rep(rs), sym2_nontrivial(rs)}) {
          OperatorResult op = long_operator(r, rs, chi);
          CHECK(symmetric(hermitian_form(op, r, rs)));
        }
      }
    }
  }

  TEST_CASE("non-dominant parameters are rejected") {
    RootSystem rs = rs_of("B2");
    CHECK_THROWS_AS(long_operator(reflection_rep(rs), rs, Vec{Q(-1, 3), Q(0)}), NotDominant);
  }

  TEST_CASE("integer path and regular fast path agree with the dense form") {
    std::mt19937_64 rng(13);
    for (const char* name : {"A2", "B2", "G2", "B3", "A3"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      WRep reg = regular_rep(rs, g);
      for (int trial = 0; trial < 4; ++trial) {
        Vec chi = random_hermitian(rs, rng);
        CAPTURE(to_string(chi));
        Inertia dense = inertia(hermitian_form(long_operator(reg, rs, chi), reg, rs));
        CHECK(regular_inertia(*reg.regular, rs, chi) == dense);
        CHECK(form_inertia(reg, rs, chi) == dense);
      }
    }
  }

  TEST_CASE("the Sym^2 witness equals the nontrivial part") {
    std::mt19937_64 rng(14);
    for (const char* name : {"B3", "G2", "F4", "E6"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WRep full = sym2_full(rs), part = sym2_nontrivial(rs);
      for (int trial = 0; trial < 4; ++trial) {
        Vec chi = random_hermitian(rs, rng);
        Inertia direct = inertia(hermitian_form(long_operator(part, rs, chi), part, rs));
        CHECK(form_inertia(full, rs, chi) == direct);
        CHECK(form_inertia(part, rs, chi) == direct);
      }
    }
  }

  TEST_CASE("hermitian and reducible parameters") {
    RootSystem a2 = rs_of("A2");
    CHECK(is_hermitian(a2, a2.from_simple_coords(Vec{Q(1, 3), Q(1, 3)})));
    CHECK(!is_hermitian(a2, a2.from_simple_coords(Vec{Q(1, 3), Q(1, 5)})));
    CHECK(is_reducible(a2, a2.from_simple_coords(Vec{Q(1), Q(1, 5)})));
    CHECK(is_reducible(a2, a2.from_simple_coords(Vec{Q(2, 5), Q(3, 5)})));
    CHECK(!is_reducible(a2, a2.from_simple_coords(Vec{Q(2, 5), Q(1, 5)})));
  }

  TEST_CASE("inertia") {
    Mat m(3, 3);
    m(0, 0) = 1;
    m(1, 1) = -2;
    CHECK(inertia(m) == Inertia{1, 1, 1});
    Mat h(2, 2);
    h(0, 1) = h(1, 0) = 1;
    CHECK(inertia(h) == Inertia{1, 1, 0});
    ZMat z(2, 2);
    z(0, 0) = 2;
    z(0, 1) = z(1, 0) = 3;
    z(1, 1) = 4;
    CHECK(inertia(z) == Inertia{1, 1, 0});
    z(1, 1) = 5;
    CHECK(inertia(z) == Inertia{2, 0, 0});
  }
}
