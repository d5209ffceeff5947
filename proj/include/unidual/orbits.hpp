#pragma once

#include "unidual/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unidual {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Inequality {
  Vec coeffs;       // missing trailing coefficients are zero
  std::string rel;  // "<", "<=", ">", ">=", "="
  Q rhs;
  bool holds(const Vec& nu) const;
  std::string to_string() const;
};

using ExceptionRegion = std::vector<Inequality>;

struct CentralizerFactor {
  std::string kind;        // "A1", "A1l", "A3", "B2", "G2", "E6", "T1", ...
  std::vector<int> slots;  // 1-based nu indices; 0 pins the coordinate to zero
  char family() const { return kind[0]; }
  // Rank for A..G kinds, torus dimension for T; 1 for A1l.
  int rank() const;
};

struct OrbitRecord {
  std::string ambient;  // E6, E7, E8
  std::string label;
  std::string source;
  std::string note;
  Vec constant;
  std::vector<Vec> columns;
  std::vector<CentralizerFactor> factors;
  std::optional<std::vector<ExceptionRegion>> exception;
  bool exceptional = false;

  size_t slot_count() const { return columns.size(); }
  std::string name() const { return ambient + " " + label; }
};

struct MaxparEntry {
  std::string ambient, label;
  Q endpoint;  // the parameter is accepted exactly on [0, endpoint); 0 means only nu = 0
};

struct OrbitTables {
  int version = 0;
  std::string checksum;
  std::vector<OrbitRecord> records;
  std::vector<MaxparEntry> maxpar;

  // Labels compare after dropping '+', '_', blanks and braces, so "A_4+A_2+A_1" finds "A4+A2+A1".
  const OrbitRecord* find(const std::string& ambient, const std::string& label) const;
};

std::string default_tables_path();
std::string normalize_label(const std::string& label);
// Parses and validates; errors cite the offending record.
OrbitTables load_tables(const std::string& path = default_tables_path());
// FNV-1a 64 over the compact, key-sorted serialization of records and maxpar.
std::string table_checksum(const std::string& json_text);

Vec hermitian_chi(const OrbitRecord& rec, const Vec& nu);

struct FactorResult {
  std::string kind;
  Vec values;  // the factor's coordinates after pinning
  bool member = false;
  std::string reason;
};

struct Membership {
  std::optional<bool> member;  // empty when no description is available
  // "factors", "exception-region-K", "exception-none", "tempered", "unsupported"
  std::string path;
  std::vector<FactorResult> factors;
};

Membership cs_membership(const OrbitRecord& rec, const Vec& nu);
// The product of the centralizer factor predicates, ignoring any exception.
bool factor_product(const OrbitRecord& rec, const Vec& nu, std::vector<FactorResult>* detail = nullptr);
// Orbits whose membership differs from the centralizer rule.
bool in_exception_set(const std::string& ambient, const std::string& label);

struct AuditItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditItem> items;
  bool ok() const;
};

AuditReport consistency_audit(const OrbitTables& tables);

}  // namespace unidual
