#include "unidual/report.hpp"

#include <sstream>

namespace unidual {

Json to_json(const Q& q) { return to_string(q); }

Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const Mat& m) {
  Json a = Json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json to_json(const Inertia& i) {
  return Json{{"positive", i.positive}, {"negative", i.negative}, {"zero", i.zero}};
}

namespace {

Json one_based(const std::vector<int>& v) {
  Json a = Json::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

}  // namespace

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["type"] = rs.cartan.name();
  j["rank"] = rs.rank();
  Json simple = Json::array();
  for (const auto& a : rs.simple_roots) simple.push_back(to_json(a));
  j["simple_roots"] = simple;
  Json pos = Json::array();
  for (size_t k = 0; k < rs.num_positive(); ++k)
    pos.push_back(Json{{"index", k + 1}, {"coeffs", rs.coeffs[k]}, {"root", to_json(rs.positive_roots[k])}});
  j["positive_roots"] = pos;
  Json covers = Json::array();
  for (const auto& c : rs.covers)
    covers.push_back(Json{{"lower", c.lower + 1}, {"upper", c.upper + 1}, {"simple", c.simple + 1}});
  j["covers"] = covers;
  return j;
}

Json region_json(const Region& r) {
  Json j;
  j["delta"] = one_based(r.delta);
  j["delta_prime"] = one_based(r.delta_prime);
  j["sample"] = to_json(r.sample);
  j["x"] = to_json(r.x);
  j["bounded"] = r.bounded;
  j["zero_walls"] = one_based(r.zero_walls);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j = region_json(v.region);
  j["unitary"] = v.unitary;
  j["definite"] = v.definite;
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back(Json{{"rep", x.rep}, {"inertia", to_json(x.inertia)}});
  j["witnesses"] = w;
  return j;
}

Json zero_cs_json(const RootSystem& rs, const ZeroCS& z) {
  Json j;
  j["type"] = rs.cartan.name();
  j["method"] = to_string(z.method);
  j["sliced"] = z.sliced;
  j["regions"] = z.verdicts.size();
  j["dropped"] = z.dropped;
  j["unitary_regions"] = z.unitary_count();
  Json v = Json::array();
  for (const auto& x : z.verdicts) v.push_back(verdict_json(x));
  j["verdicts"] = v;
  return j;
}

Json cross_json(const CrossReport& c) {
  Json j;
  j["type"] = c.type.name();
  j["method"] = to_string(c.method);
  j["regions"] = c.regions;
  j["unitary"] = c.unitary;
  j["agree"] = c.agree;
  j["ok"] = c.ok();
  j["disagreements"] = c.disagreements;
  return j;
}

Json operator_json(const OperatorResult& op) {
  return Json{{"rep", op.rep_name}, {"chi", to_json(op.chi)}, {"matrix", to_json(op.matrix)}};
}

Json membership_json(const OrbitRecord& rec, const Vec& nu, const Membership& m) {
  Json j;
  j["ambient"] = rec.ambient;
  j["orbit"] = rec.label;
  j["source"] = rec.source;
  j["nu"] = to_json(nu);
  j["chi"] = to_json(hermitian_chi(rec, nu));
  j["member"] = m.member ? Json(*m.member) : Json(nullptr);
  j["path"] = m.path;
  Json f = Json::array();
  for (const auto& x : m.factors)
    f.push_back(Json{{"kind", x.kind}, {"values", to_json(x.values)}, {"member", x.member}, {"rule", x.reason}});
  j["factors"] = f;
  return j;
}

Json audit_json(const AuditReport& a) {
  Json items = Json::array();
  for (const auto& i : a.items) items.push_back(Json{{"check", i.name}, {"ok", i.ok}, {"detail", i.detail}});
  return Json{{"ok", a.ok()}, {"items", items}};
}

std::string indices_text(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k] + 1);
  return s + "}";
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.unitary ? "U " : "- ") << "delta=" << indices_text(v.region.delta)
     << " delta'=" << indices_text(v.region.delta_prime) << " walls=" << indices_text(v.region.zero_walls)
     << (v.region.bounded ? "" : " unbounded") << " x=" << to_string(v.region.x);
  for (const auto& w : v.witnesses)
    os << " " << w.rep << ":" << w.inertia.positive << "/" << w.inertia.negative << "/" << w.inertia.zero;
  return os.str();
}

std::string zero_cs_text(const RootSystem& rs, const ZeroCS& z) {
  std::ostringstream os;
  for (const auto& v : z.verdicts) os << verdict_text(v) << "\n";
  os << rs.cartan.name() << " method=" << to_string(z.method) << (z.sliced ? " hermitian slice" : "")
     << " regions=" << z.verdicts.size() << " dropped=" << z.dropped << " unitary=" << z.unitary_count() << "\n";
  return os.str();
}

std::string cross_text(const CrossReport& c) {
  std::ostringstream os;
  os << (c.ok() ? "PASS " : "FAIL ") << c.type.name() << " method=" << to_string(c.method) << " regions=" << c.regions
     << " unitary=" << c.unitary << " agree=" << c.agree << "/" << c.regions << "\n";
  for (const auto& d : c.disagreements) os << "  " << d << "\n";
  return os.str();
}

std::string membership_text(const OrbitRecord& rec, const Vec& nu, const Membership& m) {
  std::ostringstream os;
  os << rec.ambient << " " << rec.label << " nu=" << to_string(nu) << "\n";
  os << "chi=" << to_string(hermitian_chi(rec, nu)) << "\n";
  for (const auto& f : m.factors)
    os << "  " << f.kind << " " << to_string(f.values) << " " << (f.member ? "yes" : "no") << " (" << f.reason << ")\n";
  os << "member=" << (m.member ? (*m.member ? "true" : "false") : "unknown") << " path=" << m.path << "\n";
  return os.str();
}

std::string audit_text(const AuditReport& a) {
  std::ostringstream os;
  for (const auto& i : a.items) {
    os << (i.ok ? "PASS " : "FAIL ") << i.name;
    if (!i.detail.empty()) os << ": " << i.detail;
    os << "\n";
  }
  os << "audit " << (a.ok() ? "passed" : "failed") << "\n";
  return os.str();
}

}  // namespace unidual
