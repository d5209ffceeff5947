#include "unidual/orbits.hpp"

#include "unidual/intertwine.hpp"
#include "unidual/rootsys.hpp"
#include "unidual/unitarity.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>

#ifndef UNIDUAL_DEFAULT_TABLES
#define UNIDUAL_DEFAULT_TABLES "data/orbit_tables.json"
#endif

namespace unidual {

using json = nlohmann::json;

namespace {

const std::set<std::pair<std::string, std::string>>& exception_set() {
  static const std::set<std::pair<std::string, std::string>> s = {
      {"E7", "A2+3A1"}, {"E8", "A4+A2+A1"}, {"E8", "A4+A2"}, {"E8", "D4(a1)+A2"},
      {"E8", "A3+2A1"}, {"E8", "A2+2A1"},   {"E8", "4A1"}};
  return s;
}

int parse_rank(const std::string& kind) {
  if (kind == "A1l") return 1;
  if (kind.size() < 2) return -1;
  try {
    size_t used = 0;
    int r = std::stoi(kind.substr(1), &used);
    return used + 1 == kind.size() ? r : -1;
  } catch (const std::exception&) {
    return -1;
  }
}

// Number of nu slots a factor consumes in the given ambient table.
int expected_slots(const std::string& ambient, const CentralizerFactor& f) {
  char fam = f.family();
  int r = f.rank();
  if (ambient == "E6") {
    // E6 parameters are hermitian: A_k keeps half its string and tori vanish.
    if (fam == 'T') return 0;
    if (fam == 'A' && f.kind != "A1l") return (r + 1) / 2;
  }
  return r;
}

bool valid_kind(const std::string& kind) {
  if (kind == "A1l") return true;
  int r = parse_rank(kind);
  if (r < 1) return false;
  switch (kind[0]) {
    case 'A': case 'T': return true;
    case 'B': case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'G': return r == 2;
    case 'F': return r == 4;
    case 'E': return r == 6 || r == 7;
  }
  return false;
}

std::string cite(size_t index, const json& rec) {
  std::ostringstream os;
  os << "record " << index;
  if (rec.is_object() && rec.contains("ambient") && rec.contains("label") && rec["ambient"].is_string() &&
      rec["label"].is_string())
    os << " (" << rec["ambient"].get<std::string>() << " " << rec["label"].get<std::string>() << ")";
  return os.str();
}

Q rational_field(const json& j) {
  if (!j.is_string()) throw TableError("expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw TableError("bad rational '" + j.get<std::string>() + "'");
  }
}

Vec rational_list(const json& j) {
  if (!j.is_array()) throw TableError("expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rational_field(x));
  return v;
}

const RootSystem& ambient_system(const std::string& ambient) {
  static const RootSystem e6 = RootSystem::build(CartanType::make('E', 6));
  static const RootSystem e7 = RootSystem::build(CartanType::make('E', 7));
  static const RootSystem e8 = RootSystem::build(CartanType::make('E', 8));
  if (ambient == "E6") return e6;
  if (ambient == "E7") return e7;
  return e8;
}

const RootSystem& factor_system(char family, int rank) {
  static std::map<std::pair<char, int>, RootSystem> cache;
  static std::mutex guard;
  std::lock_guard<std::mutex> lock(guard);
  auto key = std::make_pair(family, rank);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, RootSystem::build(CartanType::make(family, rank))).first;
  return it->second;
}

// Ambient span of the E6 and E7 tables inside the E8 coordinates.
bool in_ambient_span(const std::string& ambient, const Vec& v) {
  if (ambient == "E7") return v[6] == -v[7];
  if (ambient == "E6") return v[5] == v[6] && v[6] == -v[7];
  return true;
}

// The constant term must be conjugate to h/2: simple pairings of its dominant form in {0, 1/2, 1}.
bool is_half_h(const std::string& ambient, const Vec& c) {
  const RootSystem& rs = ambient_system(ambient);
  Vec x = rs.simple_coords(rs.make_dominant(c));
  return std::all_of(x.begin(), x.end(), [](const Q& q) { return q == 0 || q == Q(1, 2) || q == 1; });
}

void validate_record(const OrbitRecord& r) {
  if (r.ambient != "E6" && r.ambient != "E7" && r.ambient != "E8") throw TableError("unknown ambient '" + r.ambient + "'");
  if (r.constant.size() != 8) throw TableError("constant must have 8 entries");
  for (const auto& c : r.columns)
    if (c.size() != 8) throw TableError("every direction must have 8 entries");
  if (!in_ambient_span(r.ambient, r.constant)) throw TableError("constant outside the " + r.ambient + " span");
  for (const auto& c : r.columns)
    if (!in_ambient_span(r.ambient, c)) throw TableError("direction outside the " + r.ambient + " span");
  if (!is_half_h(r.ambient, r.constant)) throw TableError("constant is not conjugate to h/2");
  std::vector<int> used(r.columns.size() + 1, 0);
  for (const auto& f : r.factors) {
    if (!valid_kind(f.kind)) throw TableError("unknown factor kind '" + f.kind + "'");
    int want = expected_slots(r.ambient, f);
    if (static_cast<int>(f.slots.size()) != want)
      throw TableError("factor " + f.kind + " needs " + std::to_string(want) + " slots, has " +
                       std::to_string(f.slots.size()));
    for (int s : f.slots) {
      if (s < 0 || s > static_cast<int>(r.columns.size()))
        throw TableError("slot " + std::to_string(s) + " out of range");
      if (s > 0 && used[s]++) throw TableError("slot " + std::to_string(s) + " used twice");
    }
  }
  for (size_t s = 1; s < used.size(); ++s)
    if (!used[s])
      throw TableError("parameter count " + std::to_string(r.columns.size()) +
                       " does not match the centralizer slots");
  if (r.exception) {
    for (const auto& region : *r.exception)
      for (const auto& q : region) {
        if (q.coeffs.size() > r.columns.size()) throw TableError("inequality longer than the parameter");
        static const std::set<std::string> rels = {"<", "<=", ">", ">=", "="};
        if (!rels.count(q.rel)) throw TableError("bad relation '" + q.rel + "'");
      }
  }
}

OrbitRecord parse_record(const json& j) {
  if (!j.is_object()) throw TableError("record is not an object");
  OrbitRecord r;
  r.ambient = j.at("ambient").get<std::string>();
  r.label = j.at("label").get<std::string>();
  r.source = j.value("source", "");
  r.note = j.value("note", "");
  const json& chi = j.at("chi_affine");
  r.constant = rational_list(chi.at("constant"));
  for (const auto& c : chi.at("columns")) r.columns.push_back(rational_list(c));
  for (const auto& f : j.at("factors")) {
    CentralizerFactor cf;
    cf.kind = f.at("kind").get<std::string>();
    cf.slots = f.at("slots").get<std::vector<int>>();
    r.factors.push_back(cf);
  }
  const json& ex = j.at("exception");
  if (!ex.is_null()) {
    std::vector<ExceptionRegion> regions;
    for (const auto& reg : ex) {
      ExceptionRegion region;
      for (const auto& q : reg) {
        Inequality in;
        in.coeffs = rational_list(q.at("coeffs"));
        in.rel = q.at("rel").get<std::string>();
        in.rhs = rational_field(q.at("rhs"));
        region.push_back(in);
      }
      regions.push_back(region);
    }
    r.exception = regions;
  }
  r.exceptional = j.at("exceptional").get<bool>();
  return r;
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string canonical_payload(const json& doc) {
  json payload = json::object();
  payload["records"] = doc.at("records");
  payload["maxpar"] = doc.at("maxpar");
  return payload.dump();
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

// Values of the factor coordinates, with pinned slots set to zero.
Vec factor_values(const CentralizerFactor& f, const Vec& nu) {
  Vec v;
  for (int s : f.slots) v.push_back(s == 0 ? Q(0) : nu[s - 1]);
  return v;
}

Vec sorted_abs(Vec v) {
  for (auto& x : v) x = abs(x);
  std::sort(v.begin(), v.end());
  return v;
}

// A representative of nu in the dominant chamber of the centralizer; exception inequalities
// are written for it.
Vec centralizer_dominant(const OrbitRecord& rec, const Vec& nu) {
  Vec out = nu;
  for (const auto& f : rec.factors) {
    char fam = f.family();
    std::vector<size_t> idx;
    for (int s : f.slots)
      if (s > 0) idx.push_back(static_cast<size_t>(s - 1));
    if (fam == 'A' && f.rank() == 1) {
      for (size_t i : idx) out[i] = abs(out[i]);
    } else if (fam == 'B' || fam == 'C') {
      Vec v = sorted_abs(factor_values(f, nu));
      for (size_t k = 0; k < f.slots.size(); ++k)
        if (f.slots[k] > 0) out[f.slots[k] - 1] = v[k];
    } else if (fam == 'G') {
      const RootSystem& rs = factor_system('G', 2);
      Vec x = rs.simple_coords(rs.make_dominant(rs.from_simple_coords(factor_values(f, nu))));
      for (size_t k = 0; k < 2; ++k)
        if (f.slots[k] > 0) out[f.slots[k] - 1] = x[k];
    }
  }
  return out;
}

bool in_half_interval(const Q& x) { return 0 <= x && x < Q(1, 2); }

FactorResult evaluate_factor(const std::string& ambient, const CentralizerFactor& f, const Vec& nu) {
  FactorResult res;
  res.kind = f.kind;
  res.values = factor_values(f, nu);
  const Vec& v = res.values;
  char fam = f.family();
  int k = f.rank();
  auto verdict = [&](bool ok, std::string why) {
    res.member = ok;
    res.reason = std::move(why);
    return res;
  };
  if (fam == 'T') return verdict(is_zero(v), "torus coordinates must vanish");
  if (f.kind == "A1l") return verdict(0 <= v[0] && v[0] < 1, "0 <= nu < 1");
  if (fam == 'A') {
    if (k == 1) return verdict(in_half_interval(v[0]), "0 <= nu < 1/2");
    if (ambient == "E6") {
      bool ok = std::all_of(v.begin(), v.end(), in_half_interval);
      return verdict(ok, "each entry in [0,1/2)");
    }
    size_t free = static_cast<size_t>(k / 2);
    bool ok = true;
    for (size_t i = 0; i < v.size(); ++i) ok = ok && (i < free ? in_half_interval(v[i]) : v[i] == 0);
    return verdict(ok, "last " + std::to_string(k - k / 2) + " entries 0, others in [0,1/2)");
  }
  if (fam == 'B' || fam == 'C' || fam == 'D')
    return verdict(classical_predicate(fam, sorted_abs(v)), std::string("type ") + fam + " predicate");
  const RootSystem& rs = factor_system(fam, k);
  if (fam == 'G') {
    Vec chi = rs.make_dominant(rs.from_simple_coords(v));
    if (is_reducible(rs, chi)) return verdict(false, "reducible");
    return verdict(g2f4_predicate('G', rs.simple_coords(chi)), "G2 predicate");
  }
  if (fam == 'F') {
    Vec chi = rs.make_dominant(v);
    if (is_reducible(rs, chi)) return verdict(false, "reducible");
    return verdict(g2f4_predicate('F', chi), "F4 predicate");
  }
  // E6 and E7 factors in E8 coordinates.
  Vec chi(8, Q(0));
  if (k == 6) {
    for (int i = 0; i < 5; ++i) chi[i] = v[i];
    chi[5] = -v[5];
    chi[6] = -v[5];
    chi[7] = v[5];
  } else {
    for (int i = 0; i < 6; ++i) chi[i] = v[i];
    chi[6] = -v[6];
    chi[7] = v[6];
  }
  chi = rs.make_dominant(chi);
  if (!is_hermitian(rs, chi)) return verdict(false, "not hermitian");
  return verdict(alcove_predicate(rs, chi), f.kind + " alcove conditions");
}

}  // namespace

int CentralizerFactor::rank() const { return parse_rank(kind); }

bool Inequality::holds(const Vec& nu) const {
  Q lhs = 0;
  for (size_t i = 0; i < coeffs.size(); ++i) lhs += coeffs[i] * nu.at(i);
  if (rel == "<") return lhs < rhs;
  if (rel == "<=") return lhs <= rhs;
  if (rel == ">") return lhs > rhs;
  if (rel == ">=") return lhs >= rhs;
  return lhs == rhs;
}

std::string Inequality::to_string() const {
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string c = unidual::to_string(coeffs[i]);
    if (!s.empty() && coeffs[i] > 0) s += "+";
    if (coeffs[i] == 1) c = "";
    if (coeffs[i] == -1) c = "-";
    s += c + "nu" + std::to_string(i + 1);
  }
  if (s.empty()) s = "0";
  return s + " " + rel + " " + unidual::to_string(rhs);
}

std::string normalize_label(const std::string& label) {
  std::string out;
  for (char c : label)
    if (c != '+' && c != '_' && c != ' ' && c != '{' && c != '}') out += c;
  return out;
}

const OrbitRecord* OrbitTables::find(const std::string& ambient, const std::string& label) const {
  std::string key = normalize_label(label);
  for (const auto& r : records)
    if (r.ambient == ambient && normalize_label(r.label) == key) return &r;
  return nullptr;
}

std::string default_tables_path() { return UNIDUAL_DEFAULT_TABLES; }

std::string table_checksum(const std::string& json_text) {
  json doc = json::parse(json_text);
  return hex64(fnv1a64(canonical_payload(doc)));
}

OrbitTables load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open tables file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw TableError(path + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("records") || !doc.contains("maxpar") || !doc["records"].is_array())
    throw TableError(path + ": missing records or maxpar");
  OrbitTables t;
  t.version = doc.value("version", 0);
  if (t.version != 1) throw TableError(path + ": unsupported version " + std::to_string(t.version));
  t.checksum = doc.value("checksum", "");

  std::vector<std::string> errors;
  std::set<std::pair<std::string, std::string>> seen;
  const json& recs = doc["records"];
  for (size_t i = 0; i < recs.size(); ++i) {
    try {
      OrbitRecord r = parse_record(recs[i]);
      validate_record(r);
      if (!seen.insert({r.ambient, normalize_label(r.label)}).second) throw TableError("duplicate label");
      t.records.push_back(std::move(r));
    } catch (const TableError& e) {
      errors.push_back(cite(i, recs[i]) + ": " + e.what());
    } catch (const json::exception& e) {
      errors.push_back(cite(i, recs[i]) + ": " + e.what());
    }
  }
  const json& mp = doc["maxpar"];
  for (size_t i = 0; i < mp.size(); ++i) {
    try {
      MaxparEntry m{mp[i].at("ambient").get<std::string>(), mp[i].at("label").get<std::string>(),
                    rational_field(mp[i].at("endpoint"))};
      t.maxpar.push_back(m);
    } catch (const std::exception& e) {
      errors.push_back("maxpar entry " + std::to_string(i) + ": " + e.what());
    }
  }
  std::string actual = hex64(fnv1a64(canonical_payload(doc)));
  if (errors.empty() && actual != t.checksum)
    errors.push_back("checksum mismatch: file says " + t.checksum + ", contents give " + actual);
  if (!errors.empty()) {
    std::string msg = path + ":";
    for (const auto& e : errors) msg += "\n  " + e;
    throw TableError(msg);
  }
  return t;
}

Vec hermitian_chi(const OrbitRecord& rec, const Vec& nu) {
  if (nu.size() != rec.slot_count())
    throw std::invalid_argument(rec.name() + " takes " + std::to_string(rec.slot_count()) + " parameters, got " +
                                std::to_string(nu.size()));
  Vec chi = rec.constant;
  for (size_t i = 0; i < nu.size(); ++i) chi = chi + nu[i] * rec.columns[i];
  return chi;
}

bool in_exception_set(const std::string& ambient, const std::string& label) {
  for (const auto& [a, l] : exception_set())
    if (a == ambient && normalize_label(l) == normalize_label(label)) return true;
  return false;
}

bool factor_product(const OrbitRecord& rec, const Vec& nu, std::vector<FactorResult>* detail) {
  bool ok = true;
  for (const auto& f : rec.factors) {
    FactorResult fr = evaluate_factor(rec.ambient, f, nu);
    ok = ok && fr.member;
    if (detail) detail->push_back(std::move(fr));
  }
  return ok;
}

Membership cs_membership(const OrbitRecord& rec, const Vec& nu) {
  if (nu.size() != rec.slot_count())
    throw std::invalid_argument(rec.name() + " takes " + std::to_string(rec.slot_count()) + " parameters, got " +
                                std::to_string(nu.size()));
  Membership m;
  bool product = factor_product(rec, nu, &m.factors);
  if (rec.exception) {
    Vec dom = centralizer_dominant(rec, nu);
    for (size_t k = 0; k < rec.exception->size(); ++k) {
      const auto& region = (*rec.exception)[k];
      if (std::all_of(region.begin(), region.end(), [&](const Inequality& q) { return q.holds(dom); })) {
        m.member = true;
        m.path = "exception-region-" + std::to_string(k + 1);
        return m;
      }
    }
    m.member = false;
    m.path = "exception-none";
    return m;
  }
  if (rec.exceptional) {
    if (is_zero(nu)) {
      m.member = true;
      m.path = "tempered";
    } else {
      m.path = "unsupported";
    }
    return m;
  }
  m.member = product;
  m.path = "factors";
  return m;
}

bool AuditReport::ok() const {
  return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.ok; });
}

AuditReport consistency_audit(const OrbitTables& tables) {
  AuditReport rep;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    rep.items.push_back({std::move(name), ok, std::move(detail)});
  };
  auto member = [](const OrbitRecord& r, const Vec& nu) { return cs_membership(r, nu).member; };

  for (const auto& e : tables.maxpar) {
    std::string name = "endpoint " + e.ambient + " " + e.label + " = " + to_string(e.endpoint);
    const OrbitRecord* r = tables.find(e.ambient, e.label);
    if (!r || r->slot_count() != 1) {
      add(name, false, r ? "record does not have one parameter" : "record missing");
      continue;
    }
    std::vector<Q> inside{Q(0)}, outside{e.endpoint + Q(1, 1000), e.endpoint + Q(1, 4), Q(1)};
    if (e.endpoint > 0) {
      inside.push_back(e.endpoint / 2);
      inside.push_back(e.endpoint - Q(1, 1000));
      outside.push_back(e.endpoint);
    }
    std::string bad;
    for (const auto& x : inside)
      if (member(*r, {x}) != std::optional<bool>(true)) bad += " rejects " + to_string(x);
    for (const auto& x : outside)
      if (member(*r, {x}) != std::optional<bool>(false)) bad += " accepts " + to_string(x);
    add(name, bad.empty(), bad);
  }

  {
    std::string bad;
    size_t n = 0;
    for (const auto& r : tables.records) {
      if (r.factors.empty() || r.slot_count() == 0) continue;
      if (!std::all_of(r.factors.begin(), r.factors.end(), [](const CentralizerFactor& f) { return f.family() == 'T'; }))
        continue;
      ++n;
      for (size_t i = 0; i < r.slot_count(); ++i)
        for (const Q& x : {Q(1, 1000), Q(1, 4), Q(-1, 3)}) {
          Vec nu(r.slot_count(), Q(0));
          nu[i] = x;
          if (member(r, nu) != std::optional<bool>(false)) bad += " " + r.name();
        }
    }
    add("torus rows accept only nu = 0 (" + std::to_string(n) + " rows)", bad.empty(), bad);
  }

  {
    std::string bad;
    for (const auto& r : tables.records)
      if (member(r, Vec(r.slot_count(), Q(0))) != std::optional<bool>(true)) bad += " " + r.name();
    add("nu = 0 accepted for all " + std::to_string(tables.records.size()) + " rows", bad.empty(), bad);
  }

  {
    const OrbitRecord* r = tables.find("E8", "4A1");
    Vec nu{Q(1, 4), Q(7, 20), Q(3, 5), Q(7, 10)};
    bool ok = false;
    std::string detail = "record missing";
    if (r) {
      Membership m = cs_membership(*r, nu);
      bool c4 = classical_predicate('C', sorted_abs(nu));
      ok = m.member == std::optional<bool>(true) && m.path == "exception-region-2" && !c4;
      detail = "path " + m.path + ", C4 predicate " + (c4 ? "accepts" : "rejects");
    }
    add("E8 4A1 sample (1/4,7/20,3/5,7/10) in region 2, outside C4", ok, detail);
  }

  {
    const OrbitRecord* r = tables.find("E8", "A4+A2+A1");
    bool ok = r && member(*r, {Q(1, 4)}) == std::optional<bool>(true) &&
              member(*r, {Q(2, 5)}) == std::optional<bool>(false);
    add("E8 A4+A2+A1: 1/4 accepted, 2/5 rejected", ok);
  }

  {
    const OrbitRecord* r = tables.find("E8", "E7");
    bool ok = r && member(*r, {Q(1, 4)}) == std::optional<bool>(true) &&
              member(*r, {Q(3, 4)}) == std::optional<bool>(false);
    add("E8 E7: 1/4 accepted, 3/4 rejected", ok);
  }

  {
    const OrbitRecord* r = tables.find("E8", "A6");
    std::string bad = r ? "" : " record missing";
    if (r && r->slot_count() == 2) {
      const std::vector<Q> grid{Q(0), Q(1, 4), Q(49, 100), Q(1, 2), Q(3, 4), Q(1)};
      for (const auto& a : grid)
        for (const auto& b : grid) {
          bool want = in_half_interval(a) && in_half_interval(b);
          if (member(*r, {a, b}) != std::optional<bool>(want)) bad += " (" + to_string(a) + "," + to_string(b) + ")";
        }
    } else if (r) {
      bad = " expected two parameters";
    }
    add("E8 A6: [0,1/2) x [0,1/2) product rule", bad.empty(), bad);
  }

  {
    std::string bad;
    for (const auto& [a, l] : exception_set()) {
      const OrbitRecord* r = tables.find(a, l);
      if (!r) bad += " missing " + a + " " + l;
      else if (!r->exceptional) bad += " unflagged " + a + " " + l;
    }
    for (const auto& r : tables.records)
      if (r.exceptional && !r.exception && !in_exception_set(r.ambient, r.label)) bad += " stray " + r.name();
    add("exception orbits flagged", bad.empty(), bad);
  }

  // Sampled comparison of each explicit exception with the centralizer rule: the 4A1 set is
  // strictly larger, every other one strictly smaller.
  std::mt19937_64 rng(20260101);
  for (const auto& r : tables.records) {
    if (!r.exception) continue;
    bool larger = r.ambient == "E8" && r.label == "4A1";
    std::uniform_int_distribution<int> pick(0, 150);
    size_t only_exc = 0, only_factor = 0, both = 0;
    Vec nu(r.slot_count());
    for (int s = 0; s < 6000; ++s) {
      for (auto& x : nu) {
        x = Q(pick(rng), 97);
        x.canonicalize();
      }
      bool e = *member(r, nu);
      bool f = factor_product(r, nu);
      only_exc += e && !f;
      only_factor += f && !e;
      both += e && f;
    }
    bool ok = both > 0 && (larger ? (only_factor == 0 && only_exc > 0) : (only_exc == 0 && only_factor > 0));
    std::ostringstream os;
    os << "both " << both << ", exception only " << only_exc << ", centralizer only " << only_factor;
    add("exception " + r.name() + (larger ? " strictly contains" : " strictly inside") + " the centralizer set", ok,
        os.str());
  }
  return rep;
}

}  // namespace unidual
