#include "unidual/arrangement.hpp"
#include "unidual/intertwine.hpp"
#include "unidual/orbits.hpp"
#include "unidual/report.hpp"
#include "unidual/unitarity.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace unidual;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct Options {
  std::string type;
  int rank = 0;
  std::string param;
  std::string nu;
  std::string orbit;
  std::string method = "auto";
  std::string format = "text";
  std::string tables = default_tables_path();
  std::string slow;
  bool include_slow = false;
  bool dump_operators = false;
  unsigned threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CartanType cartan_of(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  if (o.rank > 0) {
    if (o.type.size() != 1) throw UsageError("--rank needs a bare family letter in --type");
    return CartanType::make(o.type[0], o.rank);
  }
  return CartanType::parse(o.type);
}

bool json_output(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(1) << "\n"; }

// Ambient parameter from the command line: G2 takes simple pairings, A_n may omit the last
// coordinate, everything else is ambient.
Vec parameter_point(const RootSystem& rs, const Vec& p) {
  if (rs.cartan.family == 'G') {
    if (p.size() != 2) throw UsageError("G2 takes (nu1,nu2) = (<alpha_1,chi>, <alpha_2,chi>)");
    return rs.from_simple_coords(p);
  }
  if (rs.cartan.family == 'A' && p.size() == rs.ambient_dim - 1) {
    Vec chi = p;
    Q s = 0;
    for (const auto& x : p) s += x;
    chi.push_back(-s);
    return chi;
  }
  if (p.size() != rs.ambient_dim)
    throw UsageError(rs.cartan.name() + " takes " + std::to_string(rs.ambient_dim) + " ambient coordinates");
  if (!rs.in_root_span(p)) throw UsageError("parameter is not in the span of the roots");
  return p;
}

std::function<void(size_t, size_t)> progress_log(const std::string& what) {
  auto start = std::make_shared<std::chrono::steady_clock::time_point>(std::chrono::steady_clock::now());
  return [what, start](size_t done, size_t total) {
    size_t step = std::max<size_t>(1, total / 20);
    if (done % step && done != total) return;
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - *start).count();
    std::cerr << what << ": " << done << "/" << total << " regions, " << static_cast<long>(s) << " s\n";
  };
}

ZeroCS run_classification(const RootSystem& rs, Method m, unsigned threads, bool log) {
  ClassifyOptions opt;
  opt.threads = threads;
  if (log) opt.progress = progress_log(rs.cartan.name());
  return classify_zero_cs(rs, m, opt);
}

int cmd_zero_cs(const Options& o) {
  RootSystem rs = RootSystem::build(cartan_of(o));
  Method m = parse_method(o.method);
  bool log = rs.cartan.family == 'E' && rs.cartan.rank >= 7;
  ZeroCS z = run_classification(rs, m, o.threads, log);
  if (json_output(o)) {
    Json j = zero_cs_json(rs, z);
    j["root_system"] = root_system_json(rs);
    emit(j);
  } else {
    std::cout << zero_cs_text(rs, z);
  }
  return kOk;
}

int cmd_check(const Options& o) {
  RootSystem rs = RootSystem::build(cartan_of(o));
  Vec chi = parameter_point(rs, parse_rational_list(o.param));
  Vec dom = rs.make_dominant(chi);
  bool hermitian = is_hermitian(rs, dom);
  bool reducible = is_reducible(rs, dom);
  std::vector<Witness> witnesses;
  std::vector<OperatorResult> ops;
  Method m = resolve_method(rs, parse_method(o.method), kDefaultCap);
  if (hermitian) {
    auto reps = test_representations(rs, m, kDefaultCap);
    witnesses = witnesses_at(rs, reps, dom);
    if (o.dump_operators)
      for (const auto& r : reps) ops.push_back(long_operator(r, rs, dom));
  }
  bool unitary = hermitian && !reducible &&
                 std::all_of(witnesses.begin(), witnesses.end(), [](const Witness& w) { return w.inertia.definite(); });
  auto loc = locate(rs, rs.simple_coords(dom));
  std::optional<bool> closed = hermitian ? closed_form(rs, dom) : std::optional<bool>(false);

  if (json_output(o)) {
    Json j;
    j["type"] = rs.cartan.name();
    j["chi"] = to_json(chi);
    j["dominant"] = to_json(dom);
    j["simple_coords"] = to_json(rs.simple_coords(dom));
    j["hermitian"] = hermitian;
    j["reducible"] = reducible;
    j["unitary"] = unitary;
    j["closed_form"] = closed ? Json(*closed) : Json(nullptr);
    j["method"] = to_string(m);
    if (loc) {
      Json r;
      r["delta"] = Json::array();
      for (int b : loc->delta) r["delta"].push_back(b + 1);
      r["delta_prime"] = Json::array();
      for (int b : loc->delta_prime) r["delta_prime"].push_back(b + 1);
      j["region"] = r;
    } else {
      j["region"] = nullptr;
    }
    Json w = Json::array();
    for (const auto& x : witnesses) w.push_back(Json{{"rep", x.rep}, {"inertia", to_json(x.inertia)}});
    j["witnesses"] = w;
    if (o.dump_operators) {
      Json a = Json::array();
      for (const auto& op : ops) a.push_back(operator_json(op));
      j["operators"] = a;
    }
    emit(j);
  } else {
    std::cout << rs.cartan.name() << " chi=" << to_string(chi) << " dominant=" << to_string(dom) << "\n";
    std::cout << "hermitian=" << hermitian << " reducible=" << reducible << " unitary=" << unitary
              << " closed_form=" << (closed ? (*closed ? "1" : "0") : "n/a") << "\n";
    if (loc)
      std::cout << "region delta=" << indices_text(loc->delta) << " delta'=" << indices_text(loc->delta_prime) << "\n";
    else
      std::cout << "region none (on a hyperplane <beta,chi> = 1)\n";
    for (const auto& x : witnesses)
      std::cout << "  " << x.rep << " inertia " << x.inertia.positive << "/" << x.inertia.negative << "/"
                << x.inertia.zero << "\n";
    for (const auto& op : ops) std::cout << operator_json(op).dump() << "\n";
  }
  return kOk;
}

OrbitTables tables_or_throw(const Options& o) { return load_tables(o.tables); }

int cmd_orbit_check(const Options& o) {
  OrbitTables t = tables_or_throw(o);
  if (o.type.empty() || o.orbit.empty()) throw UsageError("orbit-check needs --type and --orbit");
  const OrbitRecord* rec = t.find(o.type, o.orbit);
  if (!rec) throw UsageError("no orbit '" + o.orbit + "' in the " + o.type + " table");
  Vec nu = parse_rational_list(o.nu);
  if (nu.size() != rec->slot_count())
    throw UsageError(rec->name() + " takes " + std::to_string(rec->slot_count()) + " parameters");
  Membership m = cs_membership(*rec, nu);
  if (json_output(o))
    emit(membership_json(*rec, nu, m));
  else
    std::cout << membership_text(*rec, nu, m);
  return kOk;
}

int cmd_regions(const Options& o) {
  RootSystem rs = RootSystem::build(cartan_of(o));
  Arrangement a = build_regions(rs, hermitian_slice(rs), o.threads);
  if (json_output(o)) {
    Json j;
    j["root_system"] = root_system_json(rs);
    j["dropped"] = a.dropped;
    Json r = Json::array();
    for (const auto& x : a.regions) r.push_back(region_json(x));
    j["regions"] = r;
    emit(j);
  } else {
    for (const auto& x : a.regions)
      std::cout << "delta=" << indices_text(x.delta) << " delta'=" << indices_text(x.delta_prime)
                << " walls=" << indices_text(x.zero_walls) << (x.bounded ? "" : " unbounded")
                << " x=" << to_string(x.x) << "\n";
    std::cout << rs.cartan.name() << " regions=" << a.regions.size() << " dropped=" << a.dropped << "\n";
  }
  return kOk;
}

int cmd_audit(const Options& o) {
  OrbitTables t = tables_or_throw(o);
  AuditReport a = consistency_audit(t);
  if (json_output(o))
    emit(audit_json(a));
  else
    std::cout << audit_text(a);
  return a.ok() ? kOk : kMismatch;
}

struct SweepSpec {
  std::string type;
  Method method;
};

int cmd_verify_tables(const Options& o) {
  std::vector<SweepSpec> sweeps = {{"B2", Method::Regular}, {"B3", Method::Regular}, {"C2", Method::Regular},
                                   {"C3", Method::Regular}, {"D4", Method::Regular}, {"G2", Method::Regular},
                                   {"F4", Method::Relevant}, {"E6", Method::Relevant}};
  if (o.include_slow) {
    sweeps.push_back({"E7", Method::Relevant});
    if (o.slow == "all" || o.slow == "E8" || o.slow == "e8") sweeps.push_back({"E8", Method::Relevant});
  }
  bool ok = true;
  Json results = Json::array();
  for (const auto& s : sweeps) {
    RootSystem rs = RootSystem::build(CartanType::parse(s.type));
    bool slow = rs.cartan.family == 'E' && rs.cartan.rank >= 7;
    ZeroCS z = run_classification(rs, s.method, o.threads, slow);
    CrossReport c = cross_validate(z, rs);
    bool pass = c.ok();
    std::string detail;
    if (rs.cartan.family == 'E') pass = conditions_bijective(rs, z, nullptr, &detail) && pass;
    ok = ok && pass;
    if (json_output(o)) {
      Json j = cross_json(c);
      j["ok"] = pass;
      if (!detail.empty()) j["conditions"] = detail;
      results.push_back(j);
    } else {
      std::string line = cross_text(c);
      if (!pass && c.ok()) line = "FAIL" + line.substr(4);
      std::cout << line;
      if (!detail.empty()) std::cout << "  " << detail << "\n";
    }
  }
  AuditReport audit;
  std::string table_error;
  try {
    audit = consistency_audit(tables_or_throw(o));
  } catch (const TableError& e) {
    table_error = e.what();
  }
  bool audit_ok = table_error.empty() && audit.ok();
  ok = ok && audit_ok;
  if (json_output(o)) {
    Json j;
    j["sweeps"] = results;
    j["tables"] = table_error.empty() ? audit_json(audit) : Json{{"ok", false}, {"error", table_error}};
    j["ok"] = ok;
    emit(j);
  } else {
    if (table_error.empty())
      std::cout << audit_text(audit);
    else
      std::cout << "FAIL tables: " << table_error << "\n";
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitarity of spherical principal series for graded affine Hecke algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  };
  auto typed = [&](CLI::App* c) {
    c->add_option("--type", o.type, "Cartan type such as G2, F4, E8, or a family letter with --rank");
    c->add_option("--rank", o.rank, "Rank when --type is a bare family letter");
    c->add_option("--method", o.method, "regular, relevant or auto")
        ->check(CLI::IsMember({"regular", "relevant", "auto"}));
  };

  auto* zero = app.add_subcommand("zero-cs", "Classify every region of the (hermitian) dominant chamber");
  common(zero);
  typed(zero);

  auto* check = app.add_subcommand(
      "check",
      "Test one parameter. G2: --param nu1,nu2 are <alpha_1,chi>, <alpha_2,chi> with alpha_1 short. "
      "F4, B, C, D, E: ambient coordinates. A_n: n+1 ambient coordinates, or n with the last one "
      "completed to make the sum zero. The parameter is conjugated into the dominant chamber.");
  common(check);
  typed(check);
  check->add_option("--param", o.param, "Comma separated rationals p/q")->required();
  check->add_flag("--dump-operators", o.dump_operators, "Print the long intertwining operators");

  auto* orbit = app.add_subcommand("orbit-check", "Complementary series membership for an E6/E7/E8 orbit");
  common(orbit);
  orbit->add_option("--type", o.type, "Ambient type: E6, E7 or E8")->required();
  orbit->add_option("--orbit", o.orbit, "Bala-Carter label, e.g. A4+A2+A1")->required();
  orbit->add_option("--nu", o.nu, "Comma separated parameter values");
  orbit->add_option("--tables", o.tables, "Orbit tables file");

  auto* regions = app.add_subcommand("regions", "List the regions of the (hermitian) dominant chamber");
  common(regions);
  regions->add_option("--type", o.type, "Cartan type");
  regions->add_option("--rank", o.rank, "Rank when --type is a bare family letter");

  auto* verify = app.add_subcommand("verify-tables", "Cross-validate closed forms and audit the orbit tables");
  common(verify);
  verify->add_option("--tables", o.tables, "Orbit tables file");
  verify->add_option("--include-slow", o.slow, "Add the E7 sweep; with the value 'all' also E8")
      ->expected(0, 1)
      ->default_str("E7");

  auto* audit = app.add_subcommand("audit", "Consistency audit of the orbit tables");
  common(audit);
  audit->add_option("--tables", o.tables, "Orbit tables file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  o.include_slow = verify->count("--include-slow") > 0;

  try {
    if (*zero) return cmd_zero_cs(o);
    if (*check) return cmd_check(o);
    if (*orbit) return cmd_orbit_check(o);
    if (*regions) return cmd_regions(o);
    if (*verify) return cmd_verify_tables(o);
    if (*audit) return cmd_audit(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (use --method relevant)\n";
    return kUsage;
  } catch (const TableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
