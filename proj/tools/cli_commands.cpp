#include "cli_commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <variant>
#include <vector>

#include "weberdex/errors.hpp"
#include "weberdex/identities.hpp"
#include "weberdex/kernel.hpp"
#include "weberdex/transforms.hpp"
#include "weberdex/wedge.hpp"

namespace weberdex::cli {

namespace {

enum class Kind { String, Number, Integer, Bool, Numbers };

const std::map<std::string, Kind>& common_keys() {
  static const std::map<std::string, Kind> k = {{"command", Kind::String},
                                                {"out", Kind::String},
                                                {"format", Kind::String},
                                                {"only", Kind::String},
                                                {"seed_fixtures", Kind::Bool}};
  return k;
}

const std::map<std::string, std::map<std::string, Kind>>& command_keys() {
  static const std::map<std::string, std::map<std::string, Kind>> k = {
      {"kernel",
       {{"alpha", Kind::Number}, {"x", Kind::Numbers}, {"tau", Kind::Numbers}, {"route", Kind::String},
        {"abscissa", Kind::Number}}},
      {"transform",
       {{"action", Kind::String},
        {"alpha", Kind::Number},
        {"x", Kind::Numbers},
        {"tau_max", Kind::Number},
        {"tau_step", Kind::Number},
        {"abscissa", Kind::Number}}},
      {"verify", {{"s", Kind::Numbers}, {"param", Kind::Number}}},
      {"bvp",
       {{"alpha", Kind::Number},
        {"beta", Kind::Number},
        {"r_min", Kind::Number},
        {"r_max", Kind::Number},
        {"nr", Kind::Integer},
        {"ntheta", Kind::Integer},
        {"theta", Kind::Numbers},
        {"audit_out", Kind::String}}},
  };
  return k;
}

bool kind_matches(const json& v, Kind k) {
  switch (k) {
    case Kind::String: return v.is_string();
    case Kind::Number: return v.is_number();
    case Kind::Integer: return v.is_number_integer();
    case Kind::Bool: return v.is_boolean();
    case Kind::Numbers:
      return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number(); });
  }
  return false;
}

double num(const RunConfig& cfg, const std::string& key, double def) {
  return cfg.has(key) ? cfg.values.at(key).get<double>() : def;
}

std::vector<double> nums(const RunConfig& cfg, const std::string& key, std::vector<double> def) {
  return cfg.has(key) ? cfg.values.at(key).get<std::vector<double>>() : def;
}

std::string str(const RunConfig& cfg, const std::string& key, const std::string& def) {
  return cfg.has(key) ? cfg.values.at(key).get<std::string>() : def;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// A cell is a number, a label, or empty (no estimate available).
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
          if (std::holds_alternative<double>(r[i])) o[columns[i]] = std::get<double>(r[i]);
          else if (std::holds_alternative<std::string>(r[i])) o[columns[i]] = std::get<std::string>(r[i]);
          else o[columns[i]] = nullptr;
        }
        arr.push_back(std::move(o));
      }
      os << arr.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ',';
        if (std::holds_alternative<double>(r[i])) os << fmt17(std::get<double>(r[i]));
        else if (std::holds_alternative<std::string>(r[i])) os << std::get<std::string>(r[i]);
      }
      os << '\n';
    }
  }
};

std::string today_utc() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", &tm);
  return buf;
}

// provenance stamp written next to a regenerated fixture
void write_provenance(const RunConfig& cfg, const Output& out, const std::string& oracle, double tolerance) {
  if (!cfg.has("seed_fixtures") || !cfg.values.at("seed_fixtures").get<bool>()) return;
  json stamp = {{"command", cfg.command()},
                {"oracle", oracle},
                {"tolerance", tolerance},
                {"date", today_utc()},
                {"config", cfg.values}};
  stamp["config"].erase("seed_fixtures");
  std::ofstream f(out.path() + ".provenance.json");
  if (!f) throw ConfigError("cannot write " + out.path() + ".provenance.json");
  f << stamp.dump(2) << '\n';
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const StripError*>(&e)) return "StripError";
  if (dynamic_cast<const ConstraintError*>(&e)) return "ConstraintError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
  if (dynamic_cast<const NearZeroTau*>(&e)) return "NearZeroTau";
  if (dynamic_cast<const StencilError*>(&e)) return "StencilError";
  if (dynamic_cast<const TailError*>(&e)) return "TailError";
  if (dynamic_cast<const ConvergenceError*>(&e)) return "ConvergenceError";
  if (dynamic_cast<const DerivativeError*>(&e)) return "DerivativeError";
  if (dynamic_cast<const ConfigError*>(&e)) return "ConfigError";
  return "Error";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConvergenceError*>(&e)) return kVerifyFailed;
  if (dynamic_cast<const Error*>(&e) || dynamic_cast<const ConfigError*>(&e) ||
      dynamic_cast<const json::exception*>(&e)) {
    return kBadInput;
  }
  return kVerifyFailed;
}

json report_json(const IdentityReport& r) {
  return {{"family", r.family},   {"name", r.name},       {"lhs_re", r.lhs.real()}, {"lhs_im", r.lhs.imag()},
          {"rhs_re", r.rhs.real()}, {"rhs_im", r.rhs.imag()}, {"abs_err", r.abs_err},   {"rel_err", r.rel_err},
          {"abs_tol", r.abs_tol}, {"rel_tol", r.rel_tol}, {"passed", r.passed},     {"note", r.note}};
}

const std::vector<double> kStdX = {0.5, 1.0, 2.0, 5.0};
const std::vector<double> kStdTau = {0.3, 0.6, 1.3, 2.0};

}  // namespace

// ---------------------------------------------------------------------------

std::string RunConfig::command() const {
  if (!has("command")) throw ConfigError("no command given (use a subcommand or a \"command\" key)");
  return values.at("command").get<std::string>();
}

std::string RunConfig::format() const { return values.value("format", std::string("csv")); }

void RunConfig::validate() const {
  if (!values.is_object()) throw ConfigError("config must be a flat JSON object");
  const std::string cmd = command();
  auto it = command_keys().find(cmd);
  if (it == command_keys().end()) throw ConfigError("unknown command '" + cmd + "'");
  for (const auto& [key, v] : values.items()) {
    Kind k;
    if (auto c = common_keys().find(key); c != common_keys().end()) k = c->second;
    else if (auto m = it->second.find(key); m != it->second.end()) k = m->second;
    else throw ConfigError("unknown key '" + key + "' for command " + cmd);
    if (!kind_matches(v, k)) throw ConfigError("key '" + key + "' has the wrong type");
  }
  const std::string f = format();
  if (f != "csv" && f != "json") throw ConfigError("format must be csv or json");
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config " + path);
  RunConfig cfg;
  try {
    cfg.values = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  if (!cfg.values.is_object()) throw ConfigError("config must be a flat JSON object");
  for (const auto& [key, v] : cfg.values.items()) {
    if (v.is_object()) throw ConfigError("config must be flat; '" + key + "' is an object");
  }
  return cfg;
}

Output::Output(const RunConfig& cfg) {
  if (cfg.has("out")) {
    path_ = cfg.values.at("out").get<std::string>();
    file_ = std::make_unique<std::ofstream>(path_);
    if (!*file_) throw ConfigError("cannot write " + path_);
    os_ = file_.get();
  } else {
    if (cfg.has("seed_fixtures") && cfg.values.at("seed_fixtures").get<bool>()) {
      throw ConfigError("--seed-fixtures needs --out");
    }
    os_ = &std::cout;
  }
}

std::ostream& Output::stream() { return *os_; }

// ---------------------------------------------------------------------------

int cmd_kernel(const RunConfig& cfg) {
  const KernelOrder order(num(cfg, "alpha", 0.25));
  const auto xs = nums(cfg, "x", kStdX);
  const auto taus = nums(cfg, "tau", kStdTau);
  const std::string route = str(cfg, "route", "all");
  if (route != "direct" && route != "mb" && route != "anger" && route != "all") {
    throw ConfigError("route must be direct, mb, anger or all");
  }
  const ContourLine line(num(cfg, "abscissa", default_mb_line(order).abscissa));
  if (!order.mb_strip().contains(line.abscissa) && route != "direct" && route != "anger") {
    throw StripError("kernel: abscissa outside the strip (max(-alpha,0), 1/2)");
  }
  if (route == "anger") order.require_anger();
  for (double x : xs) KernelPoint(x, 0.0);

  struct Point {
    double x, tau;
  };
  std::vector<Point> pts;
  for (double x : xs) {
    for (double t : taus) pts.push_back({x, t});
  }
  std::vector<std::vector<std::vector<Cell>>> rows(pts.size());
  std::vector<char> bad(pts.size(), 0);
  parallel_for(pts.size(), [&](std::size_t i) {
    const KernelPoint p(pts[i].x, pts[i].tau);
    auto& out = rows[i];
    auto row = [&](const std::string& r, double v, Cell est) { out.push_back({p.x, p.tau, r, v, est}); };
    if (route == "direct") {
      row("direct", weber_kernel_direct(order, p), {});
    } else if (route == "anger") {
      row("anger", weber_kernel_anger(order, p), {});
    } else {
      MBResult mb = weber_kernel_mb_ex(order, p, line);
      row("mb", mb.value.real(), mb.error_estimate);
      if (route == "all") {
        const double m = mb.value.real();
        if (std::abs(p.tau) >= kTauMin) {
          double d = weber_kernel_direct(order, p);
          row("direct", d, {});
          double tol = 1e-8 * (1.0 + std::abs(m));
          row("direct-mb", d - m, tol);
          if (std::abs(d - m) > tol) bad[i] = 1;
        }
        if (order.anger_ok()) {
          double a = weber_kernel_anger(order, p);
          row("anger", a, {});
          double tol = 1e-6 * (1.0 + std::abs(m));
          row("anger-mb", a - m, tol);
          if (std::abs(a - m) > tol) bad[i] = 1;
        }
      }
    }
  });

  Table t;
  t.columns = {"x", "tau", "route", "value", "err_est"};
  for (auto& r : rows) {
    for (auto& row : r) t.rows.push_back(std::move(row));
  }
  Output out(cfg);
  t.write(out.stream(), cfg.format());
  write_provenance(cfg, out, "weber_kernel_mb (trapezoid, step halving) with direct/anger cross-routes", 1e-8);
  bool failed = std::any_of(bad.begin(), bad.end(), [](char b) { return b != 0; });
  if (failed) std::cerr << "kernel: route deltas exceed tolerance\n";
  return failed ? kVerifyFailed : kOk;
}

int cmd_transform(const RunConfig& cfg) {
  const std::string action = str(cfg, "action", "roundtrip-f");
  static const std::set<std::string> actions = {"forward-f", "forward-g",   "invert-f",
                                                "invert-g",  "roundtrip-f", "roundtrip-g"};
  if (!actions.count(action)) {
    throw ConfigError("action must be one of forward-f, forward-g, invert-f, invert-g, roundtrip-f, roundtrip-g");
  }
  const KernelOrder order(num(cfg, "alpha", 0.5));
  const bool f_side = action.back() == 'f';
  const auto xs = nums(cfg, "x", f_side ? kStdX : std::vector<double>{0.5, 1.0, 2.0});
  const double tau_max = num(cfg, "tau_max", 8.0);
  const double tau_step = num(cfg, "tau_step", 0.05);
  const ContourLine line(num(cfg, "abscissa", 0.25));
  if (!(tau_step > 0.0) || !(tau_max > 0.0)) throw DomainError("tau_max and tau_step must be positive");

  // fixtures: f(x) = e^{-x} on the half line, g(tau) = tau^2 e^{-tau^2} on the real line
  const auto f = SampledFunction::callable([](double x) { return std::exp(-x); });
  const auto g = SampledFunction::callable([](double t) { return t * t * std::exp(-t * t); }, DomainKind::RealLine);

  if (action == "invert-f" || action == "roundtrip-f") {
    if (!(order.alpha > 0.0)) throw ConstraintError("F inversion requires alpha > 0");
    if (!order.tail_strip().contains(line.abscissa)) throw StripError("invert-f: abscissa outside the tail strip");
  }

  Table t;
  Output out(cfg);
  int rc = kOk;
  double tol = 0.0;
  std::string oracle;
  if (action == "forward-f") {
    TransformTable Ff = tabulate_forward_f(order, f, uniform_grid(0.0, tau_max, tau_step));
    t.columns = {"tau", "value"};
    for (std::size_t i = 0; i < Ff.grid.size(); ++i) t.rows.push_back({Ff.grid[i], Ff.values[i]});
    oracle = "forward_f (kernel series, tanh-sinh/exp-sinh)";
    tol = 1e-10;
  } else if (action == "forward-g") {
    GTransform G(order, g);
    std::vector<double> v(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) { v[i] = G(xs[i]); });
    t.columns = {"x", "value"};
    for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], v[i]});
    oracle = "forward_g (Gauss panels in tau)";
    tol = 1e-10;
  } else if (f_side) {
    TransformTable Ff = tabulate_forward_f(order, f, uniform_grid(0.0, tau_max, tau_step));
    std::vector<double> v(xs.size()), fd(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      v[i] = invert_f(order, Ff, xs[i], line);
      fd[i] = invert_f_fd(order, Ff, xs[i]);
    });
    tol = 1e-3;
    oracle = "invert_f o forward_f";
    if (action == "invert-f") {
      t.columns = {"x", "value", "fd_value"};
      for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], v[i], fd[i]});
    } else {
      t.columns = {"x", "value", "exact", "rel_err"};
      for (std::size_t i = 0; i < xs.size(); ++i) {
        double ex = std::exp(-xs[i]);
        double rel = std::abs(v[i] - ex) / ex;
        t.rows.push_back({xs[i], v[i], ex, rel});
        if (!(rel <= tol)) rc = kVerifyFailed;
      }
    }
  } else {
    GTransform G(order, g);
    const auto Gg = SampledFunction::callable([&G](double x) { return G(x); });
    std::vector<double> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = invert_g(order, Gg, xs[i]);
    tol = 1e-2;
    oracle = "invert_g o forward_g";
    if (action == "invert-g") {
      t.columns = {"x", "value"};
      for (std::size_t i = 0; i < xs.size(); ++i) t.rows.push_back({xs[i], v[i]});
    } else {
      t.columns = {"x", "value", "exact", "rel_err"};
      for (std::size_t i = 0; i < xs.size(); ++i) {
        double ex = g(xs[i]);
        double rel = ex != 0.0 ? std::abs(v[i] - ex) / std::abs(ex) : std::abs(v[i]);
        t.rows.push_back({xs[i], v[i], ex, rel});
        if (!(rel <= tol)) rc = kVerifyFailed;
      }
    }
  }
  t.write(out.stream(), cfg.format());
  write_provenance(cfg, out, oracle, tol);
  if (rc != kOk) std::cerr << "transform: " << action << " relative error above " << tol << "\n";
  return rc;
}

namespace {

// One identity check at a user-chosen point: s from the config, param the second argument.
IdentityReport custom_check(const std::string& family, ComplexValue s, double param) {
  if (family == "gamma-cosine") return check_gamma_cosine_pair(s, param);
  if (family == "gamma-cosine-reciprocal") return check_gamma_cosine_reciprocal(s, param);
  if (family == "sine-gamma") return check_sine_gamma_pair(s, param);
  if (family == "sine-gamma-reciprocal") return check_sine_gamma_reciprocal(s, param);
  if (family == "sinh-gamma") return check_sinh_gamma_integral(s);
  if (family == "cosh-gamma") return check_cosh_gamma_integral(s);
  throw ConfigError("family '" + family + "' takes no s parameter");
}

std::vector<IdentityReport> ode_sweep() {
  struct P {
    double a, x, t;
  };
  std::vector<P> pts;
  for (double a : {-0.3, 0.25, 0.4}) {
    for (double x : kStdX) {
      for (double t : kStdTau) pts.push_back({a, x, t});
    }
  }
  std::vector<IdentityReport> out(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    OdeResidual r = kernel_ode_residual_ex(KernelOrder(pts[i].a), KernelPoint(pts[i].x, pts[i].t), 1e-2);
    char name[96];
    std::snprintf(name, sizeof name, "ode-residual alpha=%g x=%g tau=%g h=0.01", pts[i].a, pts[i].x, pts[i].t);
    IdentityReport rep = make_report(name, r.residual, 0.0, 0.0, 1e-3 * r.scale);
    rep.family = "ode-residual";
    out[i] = rep;
  });
  return out;
}

bool family_selected(const std::string& family, const std::string& only) {
  return only.empty() || family == only || family.rfind(only + "-", 0) == 0;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
  const std::string only = str(cfg, "only", "");
  std::vector<std::string> families = identity_families();
  families.push_back("ode-residual");
  if (!only.empty() && std::none_of(families.begin(), families.end(),
                                    [&](const std::string& f) { return family_selected(f, only); })) {
    throw ConfigError("no identity family matches '" + only + "'");
  }
  Output out(cfg);
  std::ostream& os = out.stream();

  if (cfg.has("s")) {
    auto sv = cfg.values.at("s").get<std::vector<double>>();
    if (sv.empty() || sv.size() > 2) throw ConfigError("s takes one or two numbers (re[, im])");
    if (only.empty()) throw ConfigError("s needs --only naming a single family");
    const ComplexValue s(sv[0], sv.size() > 1 ? sv[1] : 0.0);
    try {
      IdentityReport r = custom_check(only, s, num(cfg, "param", 1.0));
      os << report_json(r).dump() << '\n';
      return r.passed ? kOk : kVerifyFailed;
    } catch (const Error& e) {
      os << json{{"family", only}, {"error", error_kind(e)}, {"message", e.what()}, {"passed", false}}.dump() << '\n';
      return exit_code_for(e);
    }
  }

  std::vector<IdentityReport> reports;
  bool any_identity = std::any_of(families.begin(), families.end() - 1,
                                  [&](const std::string& f) { return family_selected(f, only); });
  if (any_identity) reports = run_identity_suite(only);
  if (family_selected("ode-residual", only)) {
    auto ode = ode_sweep();
    reports.insert(reports.end(), ode.begin(), ode.end());
  }
  bool ok = true;
  for (const auto& r : reports) {
    os << report_json(r).dump() << '\n';
    ok = ok && r.passed;
  }
  write_provenance(cfg, out, "identity suite and ODE residual sweep", 1e-6);
  return ok ? kOk : kVerifyFailed;
}

int cmd_bvp(const RunConfig& cfg) {
  WedgeProblem prob = default_wedge_problem();
  prob.alpha = num(cfg, "alpha", prob.alpha);
  prob.beta = num(cfg, "beta", prob.beta);
  prob.validate();

  const double r_min = num(cfg, "r_min", 0.5);
  const double r_max = num(cfg, "r_max", 5.0);
  const long nr = cfg.has("nr") ? cfg.values.at("nr").get<long>() : 11;
  if (!(r_min > 0.0) || !(r_max > r_min) || nr < 2) throw DomainError("bvp: need 0 < r_min < r_max and nr >= 2");
  std::vector<double> rg(nr);
  for (long i = 0; i < nr; ++i) rg[i] = r_min + (r_max - r_min) * i / (nr - 1);
  std::vector<double> tg;
  if (cfg.has("theta")) {
    tg = cfg.values.at("theta").get<std::vector<double>>();
  } else {
    const long nt = cfg.has("ntheta") ? cfg.values.at("ntheta").get<long>() : 11;
    if (nt < 2) throw DomainError("bvp: ntheta must be at least 2");
    tg.resize(nt);
    for (long j = 0; j < nt; ++j) tg[j] = prob.beta * j / (nt - 1);
    tg.back() = prob.beta;
  }

  WedgeField field = wedge_field(prob, rg, tg);

  Table t;
  t.columns = {"r", "theta", "u"};
  for (std::size_t i = 0; i < rg.size(); ++i) {
    for (std::size_t j = 0; j < tg.size(); ++j) t.rows.push_back({rg[i], tg[j], field.at(i, j)});
  }

  // audits
  std::vector<json> audits;
  bool ok = true;
  IdentityReport b = boundary_audit(prob, field);
  json bj = {{"audit", "boundary"},        {"max_abs_u_theta0", b.abs_err}, {"abs_tol", b.abs_tol},
             {"max_rel_edge_error", b.rel_err}, {"rel_tol", b.rel_tol},         {"passed", b.passed}};
  if (!b.note.empty()) {
    bj["skipped"] = true;
    bj["warning"] = b.note;
    std::cerr << "bvp: boundary audit incomplete: " << b.note << "\n";
  } else {
    ok = ok && b.passed;
  }
  audits.push_back(bj);

  json pj = {{"audit", "pde-residual"}, {"tol", 1e-2}};
  try {
    double worst = 0.0;
    std::size_t nodes = 0;
    for (std::size_t i = 2; i + 2 < rg.size(); ++i) {
      for (std::size_t j = 2; j + 2 < tg.size(); ++j) {
        PdeResidual r = pde_residual_ex(prob, field, i, j);
        worst = std::max(worst, r.scale > 0.0 ? std::abs(r.residual) / r.scale : 0.0);
        ++nodes;
      }
    }
    if (nodes == 0) throw StencilError("grid too small for the interior stencil");
    pj["max_rel_residual"] = worst;
    pj["nodes"] = nodes;
    pj["passed"] = worst <= 1e-2;
    ok = ok && worst <= 1e-2;
  } catch (const StencilError& e) {
    pj["skipped"] = true;
    pj["warning"] = e.what();
    std::cerr << "bvp: residual audit skipped: " << e.what() << "\n";
  }
  audits.push_back(pj);
  for (const auto& w : field.warnings) std::cerr << "bvp: " << w << "\n";

  Output out(cfg);
  if (cfg.format() == "json") {
    json doc = json::object();
    std::ostringstream field_json;
    t.write(field_json, "json");
    doc["field"] = json::parse(field_json.str());
    doc["audits"] = audits;
    out.stream() << doc.dump() << '\n';
  } else {
    t.write(out.stream(), "csv");
    std::ofstream audit_file;
    std::ostream* as = &std::cerr;
    if (cfg.has("audit_out")) {
      audit_file.open(cfg.values.at("audit_out").get<std::string>());
      if (!audit_file) throw ConfigError("cannot write audit_out");
      as = &audit_file;
    }
    for (const auto& a : audits) *as << a.dump() << '\n';
  }
  write_provenance(cfg, out, "wedge_solution (Gauss panels in tau, kernel series)", 1e-6);
  return ok ? kOk : kVerifyFailed;
}

int run(const RunConfig& cfg) {
  try {
    cfg.validate();
    const std::string cmd = cfg.command();
    if (cmd == "kernel") return cmd_kernel(cfg);
    if (cmd == "transform") return cmd_transform(cfg);
    if (cmd == "verify") return cmd_verify(cfg);
    return cmd_bvp(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << error_kind(e) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace weberdex::cli
