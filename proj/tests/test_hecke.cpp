#include "unidual/hecke.hpp"
#include "unidual/intertwine.hpp"
#include "unidual/wreps.hpp"

#include <doctest.h>

#include <random>

using namespace unidual;

namespace {

RootSystem rs_of(const char* name) { return RootSystem::build(CartanType::parse(name)); }

Vec random_dominant(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 40), den(2, 17);
  Vec x;
  for (size_t i = 0; i < rs.rank(); ++i) {
    x.push_back(Q(num(rng), den(rng)));
    x.back().canonicalize();
  }
  return rs.from_simple_coords(x);
}

Mat transpose(const Mat& a) {
  Mat t(a.cols(), a.rows());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("defining relations") {
    RootSystem rs = rs_of("B2");
    WeylGroup g = enumerate_group(rs);
    HeckeAlgebra h(rs, g);
    for (int s = 0; s < 2; ++s) {
      auto ts = h.t(h.element_of({s}));
      CHECK(h.multiply(ts, ts) == h.one());
      // x t_s = t_s s(x) + <x, alpha_s^vee> for a linear form x.
      for (size_t k = 0; k < rs.ambient_dim; ++k) {
        Vec e(rs.ambient_dim, Q(0));
        e[k] = 1;
        Poly x = Poly::linear(e);
        const Vec& a = rs.simple_roots[s];
        Vec coroot = (Q(2) / dot(a, a)) * a;
        Vec se = rs.reflect_simple(s, e);
        auto lhs = h.multiply(h.poly(x), ts);
        auto rhs = h.add(h.multiply(ts, h.poly(Poly::linear(se))),
                         h.poly(Poly::constant(rs.ambient_dim, dot(e, coroot))));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("r_w does not depend on the reduced word") {
    for (const char* name : {"A3", "B2", "G2"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      HeckeAlgebra h(rs, g);
      for (size_t w = 0; w < g.size(); ++w) {
        auto words = h.reduced_words(static_cast<int>(w));
        REQUIRE(!words.empty());
        auto first = h.r_element(words[0]);
        for (size_t k = 1; k < words.size(); ++k) CHECK(h.r_element(words[k]) == first);
      }
    }
  }

  TEST_CASE("r_w^-1 r_w is the scalar (-1)^l(w) kappa_w") {
    for (const char* name : {"A2", "B2"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      HeckeAlgebra h(rs, g);
      for (size_t w = 0; w < g.size(); ++w) {
        const auto& word = g.words[w];
        std::vector<int> rev(word.rbegin(), word.rend());
        auto prod = h.multiply(h.r_element(rev), h.r_element(word));
        CHECK(prod.size() <= 1);
        if (!prod.empty()) CHECK(prod.begin()->first == h.element_of({}));
        Q sign = word.size() % 2 ? Q(-1) : Q(1);
        CHECK(prod == h.scale(h.kappa(static_cast<int>(w)), sign));
      }
    }
  }

  TEST_CASE("rank-one factors match the r_w0 action on the principal series") {
    std::mt19937_64 rng(7);
    for (const char* name : {"A2", "B2", "G2"}) {
      CAPTURE(std::string(name));
      RootSystem rs = rs_of(name);
      WeylGroup g = enumerate_group(rs);
      HeckeAlgebra h(rs, g);
      WRep reg = regular_rep(rs, g);
      auto r = h.r_element(longest_element(rs).word);
      size_t n = g.size();
      Mat J(n, n);
      for (size_t w = 0; w < n; ++w) J(w, g.inverse[w]) = 1;
      for (int trial = 0; trial < 5; ++trial) {
        Vec chi = random_dominant(rs, rng);
        CAPTURE(to_string(chi));
        Mat a = long_operator(reg, rs, chi).matrix;
        Mat hm = h.principal_series_action(r, Q(-1) * chi);
        Vec ones(n, Q(1));
        Vec image = mul(hm, ones);
        Q s = image[0];
        REQUIRE(s != 0);
        CHECK(image == s * ones);
        Mat normalized = hm;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) normalized(i, j) /= s;
        CHECK(normalized == J * transpose(a) * J);
      }
    }
  }

  TEST_CASE("polynomials") {
    Poly x = Poly::linear(Vec{1, 0});
    Poly y = Poly::linear(Vec{0, 1});
    Poly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(Vec{3, 2}) == 5);
    CHECK((p - p).is_zero());
  }
}
