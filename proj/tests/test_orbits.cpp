#include "unidual/orbits.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace unidual;

namespace {

const OrbitTables& tables() {
  static const OrbitTables t = load_tables();
  return t;
}

const OrbitRecord& rec(const char* ambient, const char* label) {
  const OrbitRecord* r = tables().find(ambient, label);
  REQUIRE(r != nullptr);
  return *r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_variant(const std::string& name, const std::string& text) {
  std::string path = std::string(UNIDUAL_TEST_DATA) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::string load_error(const std::string& path) {
  try {
    load_tables(path);
  } catch (const TableError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("orbits") {
  TEST_CASE("tables load and carry a valid checksum") {
    const OrbitTables& t = tables();
    CHECK(t.records.size() == 133);
    CHECK(!t.maxpar.empty());
    CHECK(table_checksum(read_file(default_tables_path())) == t.checksum);
  }

  TEST_CASE("E8 E7 row") {
    const OrbitRecord& r = rec("E8", "E7");
    CHECK(cs_membership(r, {Q(1, 4)}).member == std::optional<bool>(true));
    CHECK(cs_membership(r, {Q(1, 4)}).path == "factors");
    CHECK(cs_membership(r, {Q(3, 4)}).member == std::optional<bool>(false));
  }

  TEST_CASE("E8 A4+A2+A1 row") {
    const OrbitRecord& r = rec("E8", "A4+A2+A1");
    CHECK(r.exceptional);
    CHECK(cs_membership(r, {Q(1, 4)}).member == std::optional<bool>(true));
    CHECK(cs_membership(r, {Q(2, 5)}).member == std::optional<bool>(false));
  }

  TEST_CASE("E8 4A1 exception is larger than the C4 rule") {
    const OrbitRecord& r = rec("E8", "4A1");
    Vec nu{Q(1, 4), Q(7, 20), Q(3, 5), Q(7, 10)};
    Membership m = cs_membership(r, nu);
    CHECK(m.member == std::optional<bool>(true));
    CHECK(m.path == "exception-region-2");
    CHECK(!factor_product(r, nu));
    // The same point with its coordinates permuted.
    Vec shuffled{Q(7, 10), Q(1, 4), Q(3, 5), Q(7, 20)};
    CHECK(cs_membership(r, shuffled).member == std::optional<bool>(true));
  }

  TEST_CASE("hermitian parameters") {
    CHECK(hermitian_chi(rec("E8", "E8"), {}) == Vec{0, 1, 2, 3, 4, 5, 6, 23});
    CHECK(hermitian_chi(rec("E8", "D4"), Vec(4, Q(0))) == Vec{0, 1, 2, 3, 0, 0, 0, 0});
    Q a(1, 10), b(1, 5), c(1, 7), d(1, 9);
    Vec expect{Q(0), Q(1), Q(-1, 2) + a, Q(1, 2) + a, Q(-1, 2) + b, Q(1, 2) + b, d - c, d + c};
    CHECK(hermitian_chi(rec("E8", "4A1"), {a, b, c, d}) == expect);
    CHECK_THROWS_AS(hermitian_chi(rec("E8", "4A1"), {a}), std::invalid_argument);
    CHECK_THROWS_AS(cs_membership(rec("E8", "E7"), {a, b}), std::invalid_argument);
  }

  TEST_CASE("centralizer factors") {
    const OrbitRecord& r = rec("E8", "A4+A1");
    CHECK(r.slot_count() == 3);
    REQUIRE(r.factors.size() == 2);
    CHECK(r.factors[0].kind == "A2");
    CHECK(r.factors[1].kind == "T1");
    CHECK(r.factors[1].rank() == 1);
    CHECK(r.factors[0].family() == 'A');
    // The torus only accepts nu = 0.
    CHECK(cs_membership(r, {Q(0), Q(0), Q(0)}).member == std::optional<bool>(true));
    CHECK(cs_membership(r, {Q(0), Q(0), Q(1, 10)}).member == std::optional<bool>(false));
  }

  TEST_CASE("nu = 0 is accepted for every orbit") {
    for (const auto& r : tables().records) {
      CAPTURE(r.name());
      Membership m = cs_membership(r, Vec(r.slot_count(), Q(0)));
      CHECK(m.member == std::optional<bool>(true));
    }
  }

  TEST_CASE("orbits without a description are reported as unsupported") {
    const OrbitRecord& r = rec("E8", "D4(a1)+A2");
    CHECK(r.exceptional);
    CHECK(!r.exception.has_value());
    Membership m = cs_membership(r, Vec(r.slot_count(), Q(1, 10)));
    CHECK(!m.member.has_value());
    CHECK(m.path == "unsupported");
    CHECK(cs_membership(r, Vec(r.slot_count(), Q(0))).path == "tempered");
  }

  TEST_CASE("exception set") {
    for (const char* label : {"A4+A2+A1", "A4+A2", "D4(a1)+A2", "A3+2A1", "A2+2A1", "4A1"}) {
      CHECK(in_exception_set("E8", label));
      CHECK(rec("E8", label).exceptional);
    }
    CHECK(in_exception_set("E7", "A2+3A1"));
    CHECK(!in_exception_set("E8", "E7"));
    CHECK(!in_exception_set("E6", "A2+2A1"));
  }

  TEST_CASE("label normalization") {
    CHECK(normalize_label("A_4+A_2+A_1") == normalize_label("A4+A2+A1"));
    CHECK(tables().find("E8", "A_4+A_2+A_1") == tables().find("E8", "A4+A2+A1"));
    CHECK(tables().find("E8", "A9") == nullptr);
  }

  TEST_CASE("inequalities") {
    Inequality i{Vec{1, -1}, "<", Q(1, 2)};
    CHECK(i.holds(Vec{Q(1, 5), Q(0)}));
    CHECK(!i.holds(Vec{Q(1, 2), Q(0)}));
    Inequality j{Vec{1}, ">=", Q(0)};
    CHECK(j.holds(Vec{Q(0), Q(3)}));
  }

  TEST_CASE("the consistency audit passes") {
    AuditReport rep = consistency_audit(tables());
    for (const auto& item : rep.items)
      if (!item.ok) MESSAGE(item.name << ": " << item.detail);
    CHECK(rep.ok());
    CHECK(rep.items.size() > 10);
  }

  TEST_CASE("a changed payload fails the checksum") {
    std::string text = read_file(default_tables_path());
    auto pos = text.find("\"E8 parameter table, row E7\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 28, "\"E8 parameter table, row E_7\"");
    std::string err = load_error(write_variant("tables_checksum.json", text));
    CHECK(err.find("checksum mismatch") != std::string::npos);
  }

  TEST_CASE("a bad row is cited") {
    std::string text = read_file(default_tables_path());
    auto pos = text.find("\"kind\": \"C4\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 12, "\"kind\": \"C5\"");
    std::string err = load_error(write_variant("tables_row.json", text));
    CHECK(err.find("(E8 4A1)") != std::string::npos);
    CHECK(load_error(std::string(UNIDUAL_TEST_DATA) + "/missing.json").find("cannot open") != std::string::npos);
  }
}
