#pragma once

#include "unidual/arrangement.hpp"
#include "unidual/intertwine.hpp"
#include "unidual/orbits.hpp"
#include "unidual/unitarity.hpp"

#include <json.hpp>

#include <string>

namespace unidual {

using Json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings; root indices are 1-based.
Json to_json(const Q& q);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Inertia& i);

Json root_system_json(const RootSystem& rs);
Json region_json(const Region& r);
Json verdict_json(const Verdict& v);
Json zero_cs_json(const RootSystem& rs, const ZeroCS& z);
Json cross_json(const CrossReport& c);
Json operator_json(const OperatorResult& op);
Json membership_json(const OrbitRecord& rec, const Vec& nu, const Membership& m);
Json audit_json(const AuditReport& a);

std::string indices_text(const std::vector<int>& v);  // "{3,5}" with 1-based indices
std::string verdict_text(const Verdict& v);
std::string zero_cs_text(const RootSystem& rs, const ZeroCS& z);
std::string cross_text(const CrossReport& c);
std::string membership_text(const OrbitRecord& rec, const Vec& nu, const Membership& m);
std::string audit_text(const AuditReport& a);

}  // namespace unidual
