#include "wsdirac/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <set>
#include <sstream>
#include <variant>

#include "wsdirac/bound_states.hpp"
#include "wsdirac/errors.hpp"
#include "wsdirac/oracle.hpp"
#include "wsdirac/scattering.hpp"
#include "wsdirac/supercriticality.hpp"

#ifndef WSDIRAC_VERSION
#define WSDIRAC_VERSION "0.0.0"
#endif

namespace wsdirac::cli {
namespace {

using nlohmann::json;
using Parameters = std::map<std::string, std::string>;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kKnownKeys = {"m0",    "m1",   "v0",     "alpha",    "len_l",
                                          "energy", "grid", "tol",    "range",    "window",
                                          "variable", "suite", "mu_branch"};

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// ---------------------------------------------------------------- parameters

Parameters base_defaults() {
  return {{"m0", "0.4"}, {"m1", "0"}, {"v0", "1.2"}, {"alpha", "5"}, {"len_l", "10"},
          {"mu_branch", "decaying"}};
}

Parameters preset_values(const std::string& name) {
  const Parameters barrier = {{"m0", "0.4"}, {"m1", "0.01"}, {"v0", "1.2"}, {"alpha", "5"},
                              {"len_l", "10"}};
  const Parameters well = {{"m0", "0.5"}, {"v0", "1"}, {"alpha", "10"}, {"len_l", "5"}};
  if (name == "fig1" || name == "fig3") return barrier;
  if (name == "fig2" || name == "fig4") {
    Parameters p = barrier;
    p["energy"] = "0.8";
    return p;
  }
  if (name == "fig5" || name == "fig6") {
    Parameters p = well;
    p["m1"] = name == "fig5" ? "0.1" : "0";
    return p;
  }
  throw UsageError("unknown preset '" + name + "' (expected fig1..fig6)");
}

void merge(Parameters& into, const Parameters& from) {
  for (const auto& [k, v] : from) into[k] = v;
}

double get_double(const Parameters& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter '" + key + "'");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) {
    throw UsageError("parameter '" + key + "' is not a number: '" + it->second + "'");
  }
  return v;
}

int get_int(const Parameters& p, const std::string& key) {
  const double v = get_double(p, key);
  if (v != std::floor(v) || v < 1.0 || v > 1e8) {
    throw UsageError("parameter '" + key + "' must be a positive integer");
  }
  return static_cast<int>(v);
}

std::pair<double, double> get_range(const Parameters& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw UsageError("missing parameter '" + key + "'");
  const auto colon = it->second.find(':');
  if (colon == std::string::npos) throw UsageError("'" + key + "' must look like lo:hi");
  Parameters parts = {{"lo", it->second.substr(0, colon)}, {"hi", it->second.substr(colon + 1)}};
  const double lo = get_double(parts, "lo");
  const double hi = get_double(parts, "hi");
  if (!(hi > lo)) throw UsageError("'" + key + "' needs lo < hi");
  return {lo, hi};
}

PhysicalConfig physics(const Parameters& p) {
  PhysicalConfig cfg;
  cfg.m0 = get_double(p, "m0");
  cfg.m1 = get_double(p, "m1");
  cfg.v0 = get_double(p, "v0");
  cfg.alpha = get_double(p, "alpha");
  cfg.half_width = get_double(p, "len_l");
  return cfg;
}

MuBranch branch(const Parameters& p) {
  const std::string& b = p.at("mu_branch");
  if (b == "decaying") return MuBranch::Decaying;
  if (b == "printed") return MuBranch::AsPrinted;
  throw UsageError("mu_branch must be 'decaying' or 'printed'");
}

std::optional<double> optional_tol(const Parameters& p) {
  if (!p.count("tol")) return std::nullopt;
  const double t = get_double(p, "tol");
  if (!(t > 0.0)) throw UsageError("tol must be positive");
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// key=value text, or a manifest (bare or embedded in a JSON output).
Parameters read_config(const std::string& path) {
  const std::string text = read_file(path);
  Parameters p;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw UsageError("config '" + path + "': " + e.what());
    }
    if (j.contains("manifest")) j = j["manifest"];
    if (!j.contains("parameters") || !j["parameters"].is_object()) {
      throw UsageError("config '" + path + "': JSON config needs a 'parameters' object");
    }
    for (const auto& [k, v] : j["parameters"].items()) {
      if (v.is_number_integer()) {
        p[k] = std::to_string(v.get<std::int64_t>());
      } else if (v.is_number()) {
        p[k] = format_number(v.get<double>());
      } else if (v.is_string()) {
        p[k] = v.get<std::string>();
      } else {
        throw UsageError("config '" + path + "': bad value for '" + k + "'");
      }
    }
  } else {
    try {
      p = parse_key_values(text);
    } catch (const std::invalid_argument& e) {
      throw UsageError("config '" + path + "': " + e.what());
    }
  }
  for (const auto& [k, v] : p) {
    if (!kKnownKeys.count(k)) throw UsageError("config '" + path + "': unknown key '" + k + "'");
  }
  return p;
}

// ---------------------------------------------------------------- tables

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) return format_number(*d);
  if (const std::int64_t* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::string to_csv(const Table& t) {
  std::string s;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) s += ',';
    s += t.columns[i];
  }
  s += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += cell_text(row[i]);
    }
    s += '\n';
  }
  return s;
}

json to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const Cell& c : row) {
      std::visit([&](const auto& v) { r.push_back(v); }, c);
    }
    rows.push_back(std::move(r));
  }
  return {{"name", t.name}, {"columns", t.columns}, {"rows", rows}};
}

double transmission_or_nan(const SweepPoint& p) { return p.is_hole() ? kNaN : p.result->transmission; }
double reflection_or_nan(const SweepPoint& p) { return p.is_hole() ? kNaN : p.result->reflection; }

// ---------------------------------------------------------------- commands

struct CommandOutput {
  std::vector<Table> tables;  // first is the main output, the rest are sidecars
  bool check_failed = false;
};

const std::vector<double> kAlphaFamily = {2.0, 5.0, 10.0};
const std::vector<double> kLengthFamily = {5.0, 10.0, 15.0};

CommandOutput figure_scattering(const std::string& id, const Parameters& p) {
  const PhysicalConfig cfg = physics(p);
  const auto [lo, hi] = get_range(p, "range");
  const int n = get_int(p, "grid");
  Table t;
  t.name = id;

  if (id == "fig1" || id == "fig2") {
    const bool energy_axis = id == "fig1";
    const SweepVariable var = energy_axis ? SweepVariable::Energy : SweepVariable::V0;
    const double energy = energy_axis ? 0.0 : get_double(p, "energy");
    PhysicalConfig constant = cfg;
    constant.m1 = 0.0;
    const auto c = sweep(constant, energy, var, lo, hi, n);
    const auto d = sweep(cfg, energy, var, lo, hi, n);
    if (energy_axis) {
      t.columns = {"e", "t_const", "r_const", "t_pdm", "r_pdm"};
      for (std::size_t i = 0; i < c.size(); ++i) {
        t.rows.push_back({c[i].parameter, transmission_or_nan(c[i]), reflection_or_nan(c[i]),
                          transmission_or_nan(d[i]), reflection_or_nan(d[i])});
      }
    } else {
      t.columns = {"v0", "t_const", "t_pdm"};
      for (std::size_t i = 0; i < c.size(); ++i) {
        t.rows.push_back({c[i].parameter, transmission_or_nan(c[i]), transmission_or_nan(d[i])});
      }
    }
    return {{t}};
  }

  // fig3 / fig4: families in alpha and in L
  const bool energy_axis = id == "fig3";
  const SweepVariable var = energy_axis ? SweepVariable::Energy : SweepVariable::V0;
  const double energy = energy_axis ? 0.0 : get_double(p, "energy");
  t.columns = {"panel", "value", energy_axis ? "e" : "v0", "t"};
  const auto add_panel = [&](const std::string& panel, SweepVariable family,
                             const std::vector<double>& values) {
    for (double v : values) {
      for (const SweepPoint& s : sweep(with_parameter(cfg, family, v), energy, var, lo, hi, n)) {
        t.rows.push_back({panel, v, s.parameter, transmission_or_nan(s)});
      }
    }
  };
  add_panel("alpha", SweepVariable::Alpha, kAlphaFamily);
  add_panel("len_l", SweepVariable::HalfWidth, kLengthFamily);
  return {{t}};
}

Table roots_table(const BoundStateSpectrum& spectrum) {
  Table r{"roots", {"n", "e", "residual"}, {}};
  for (std::size_t i = 0; i < spectrum.energies.size(); ++i) {
    r.rows.push_back({static_cast<std::int64_t>(i), spectrum.energies[i], spectrum.residuals[i]});
  }
  return r;
}

BoundStateSpectrum spectrum_for(const Parameters& p) {
  BoundStateOptions opt;
  opt.n_grid = get_int(p, "grid");
  opt.tol = optional_tol(p);
  opt.branch = branch(p);
  return find_bound_states(physics(p), opt);
}

CommandOutput figure_bound(const std::string& id, const Parameters& p) {
  const PhysicalConfig cfg = physics(p);
  const MuBranch b = branch(p);
  const int n = get_int(p, "grid");
  const auto [lo, hi] = bound_state_window(cfg);
  Table t{id, {"e", "re_f", "im_f"}, {}};
  const double h = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    const double e = lo + h * (i + 0.5);
    Complex f(kNaN, kNaN);
    try {
      f = eigen_condition(cfg, e, b);
    } catch (const Error&) {
    }
    t.rows.push_back({e, f.real(), f.imag()});
  }
  return {{t, roots_table(spectrum_for(p))}};
}

SweepVariable sweep_variable(const std::string& name) {
  if (name == "energy") return SweepVariable::Energy;
  if (name == "v0") return SweepVariable::V0;
  if (name == "alpha") return SweepVariable::Alpha;
  if (name == "len_l") return SweepVariable::HalfWidth;
  throw UsageError("variable must be one of energy, v0, alpha, len_l");
}

CommandOutput command_sweep(const Parameters& p) {
  const std::string name = p.at("variable");
  const SweepVariable var = sweep_variable(name);
  const auto [lo, hi] = get_range(p, "range");
  const double energy = get_double(p, "energy");
  Table t{"sweep", {name == "energy" ? "e" : name, "t", "r", "unitarity_defect", "evanescent"}, {}};
  for (const SweepPoint& s : sweep(physics(p), energy, var, lo, hi, get_int(p, "grid"))) {
    if (s.is_hole()) {
      t.rows.push_back({s.parameter, kNaN, kNaN, kNaN, std::int64_t{0}});
    } else {
      t.rows.push_back({s.parameter, s.result->transmission, s.result->reflection,
                        s.result->unitarity_defect, std::int64_t{s.result->evanescent ? 1 : 0}});
    }
  }
  return {{t}};
}

CommandOutput command_bound(const Parameters& p) {
  Table t = roots_table(spectrum_for(p));
  t.name = "bound";
  return {{t}};
}

CommandOutput command_resonances(const Parameters& p) {
  const auto [lo, hi] = get_range(p, "window");
  ResonanceOptions opt;
  opt.tol = optional_tol(p).value_or(opt.tol);
  Table t{"resonances", {"e", "t", "residual"}, {}};
  for (const Resonance& r : resonances(physics(p), lo, hi, opt)) {
    t.rows.push_back({r.energy, r.transmission, r.residual});
  }
  return {{t}};
}

struct CheckRow {
  std::string suite;
  std::string quantity;
  double value;
  double tolerance;
};

std::vector<CheckRow> check_unitarity(const PhysicalConfig& cfg, int n, double tol) {
  const double lo = cfg.m0 + 0.001;
  const double hi = 3.0 * cfg.m0;
  double worst = 0.0;
  int holes = 0;
  for (int i = 1; i <= n; ++i) {
    const double e = lo + (hi - lo) * i / n;
    try {
      worst = std::max(worst, std::abs(reflection_transmission(cfg, e).unitarity_defect));
    } catch (const Error&) {
      ++holes;
    }
  }
  return {{"unitarity", "max_abs_defect", worst, tol},
          {"unitarity", "holes", static_cast<double>(holes), 0.0}};
}

std::vector<CheckRow> check_oracle(const PhysicalConfig& cfg, double tol) {
  const double lo = cfg.m0 + 0.05;
  const double hi = 3.0 * cfg.m0;
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double e = lo + (hi - lo) * (i + 0.5) / 10.0;
    const double analytic = reflection_transmission(cfg, e).transmission;
    const double numeric = integrate_scattering(cfg, e).transmission;
    worst = std::max(worst, std::abs(analytic - numeric));
  }
  return {{"oracle", "max_abs_transmission_difference", worst, tol}};
}

std::vector<CheckRow> check_bound(const Parameters& p, double tol) {
  const BoundStateSpectrum spectrum = spectrum_for(p);
  const std::vector<double> shot = shooting_bound_states(physics(p), get_int(p, "grid"));
  double worst = 0.0;
  for (double e : spectrum.energies) {
    double nearest = std::numeric_limits<double>::infinity();
    for (double s : shot) nearest = std::min(nearest, std::abs(e - s));
    worst = std::max(worst, nearest);
  }
  const double count_gap =
      std::abs(static_cast<double>(spectrum.energies.size()) - static_cast<double>(shot.size()));
  return {{"bound", "max_root_distance", worst, tol}, {"bound", "count_difference", count_gap, 0.0}};
}

std::vector<CheckRow> check_supercritical(const PhysicalConfig& cfg, double tol) {
  std::vector<CheckRow> rows;
  for (const LowMomentumReport& r : verify_equivalence(cfg)) {
    const std::string tag = r.sign == EnergySign::Plus ? "plus" : "minus";
    const double relative = r.difference / std::max(1.0, std::abs(r.resonance_value));
    rows.push_back({"supercritical", "relative_difference_" + tag, relative, tol});
    rows.push_back({"supercritical", "identity_violations_" + tag,
                    r.parameter_identity_ok ? 0.0 : 1.0, 0.0});
  }
  return rows;
}

CommandOutput command_check(const Parameters& p) {
  const std::string suite = p.at("suite");
  const PhysicalConfig cfg = physics(p);
  const std::optional<double> tol = optional_tol(p);
  const bool all = suite == "all";
  if (!all && suite != "unitarity" && suite != "oracle" && suite != "bound" &&
      suite != "supercritical") {
    throw UsageError("suite must be one of all, unitarity, oracle, bound, supercritical");
  }
  std::vector<CheckRow> rows;
  const auto append = [&](std::vector<CheckRow> more) {
    rows.insert(rows.end(), more.begin(), more.end());
  };
  if (all || suite == "unitarity") append(check_unitarity(cfg, get_int(p, "grid"), tol.value_or(1e-8)));
  if (all || suite == "oracle") append(check_oracle(cfg, tol.value_or(1e-4)));
  if (all || suite == "bound") append(check_bound(p, tol.value_or(1e-6)));
  if (all || suite == "supercritical") append(check_supercritical(cfg, tol.value_or(1e-10)));

  CommandOutput out;
  Table t{"check", {"suite", "quantity", "value", "tolerance", "pass"}, {}};
  for (const CheckRow& r : rows) {
    const bool pass = r.value <= r.tolerance;
    out.check_failed = out.check_failed || !pass;
    t.rows.push_back({r.suite, r.quantity, r.value, r.tolerance, std::int64_t{pass ? 1 : 0}});
  }
  out.tables.push_back(std::move(t));
  return out;
}

// ---------------------------------------------------------------- output

json parameter_json(const std::string& v) {
  std::size_t used = 0;
  try {
    const long long i = std::stoll(v, &used);
    if (used == v.size()) return i;
  } catch (const std::exception&) {
  }
  try {
    const double d = std::stod(v, &used);
    if (used == v.size() && std::isfinite(d)) return d;
  } catch (const std::exception&) {
  }
  return v;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << content;
  if (!f) throw std::runtime_error("write failed for '" + path + "'");
}

struct RunContext {
  std::string command;
  std::string preset;
  Parameters parameters;
  std::vector<std::string> warnings;
  std::vector<std::string> arguments;
  std::string format = "csv";
  std::string out_path;
  std::chrono::steady_clock::time_point start;
};

json manifest(const RunContext& ctx, const std::vector<std::string>& outputs) {
  json params = json::object();
  for (const auto& [k, v] : ctx.parameters) params[k] = parameter_json(v);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - ctx.start).count();
  return {{"command", ctx.command},
          {"preset", ctx.preset},
          {"parameters", params},
          {"format", ctx.format},
          {"tool_version", WSDIRAC_VERSION},
          {"arguments", ctx.arguments},
          {"outputs", outputs},
          {"warnings", ctx.warnings},
          {"wall_clock_seconds", seconds}};
}

void emit(const RunContext& ctx, const CommandOutput& result, std::ostream& out, std::ostream& err) {
  const bool as_json = ctx.format == "json";
  const std::string ext = as_json ? ".json" : ".csv";

  if (ctx.out_path.empty()) {
    if (as_json) {
      json series = json::array();
      for (const Table& t : result.tables) series.push_back(to_json(t));
      out << json{{"manifest", manifest(ctx, {"-"})}, {"series", series}}.dump(2) << '\n';
      return;
    }
    out << to_csv(result.tables.front());
    if (result.tables.size() > 1) {
      err << "note: sidecar tables are only written with --out\n";
    }
    err << manifest(ctx, {"-"}).dump() << '\n';
    return;
  }

  std::vector<std::string> paths = {ctx.out_path};
  for (std::size_t i = 1; i < result.tables.size(); ++i) {
    paths.push_back(ctx.out_path + "." + result.tables[i].name + ext);
  }
  const std::string manifest_path = ctx.out_path + ".manifest.json";
  std::vector<std::string> listed = paths;
  listed.push_back(manifest_path);
  const json m = manifest(ctx, listed);

  for (std::size_t i = 0; i < result.tables.size(); ++i) {
    const Table& t = result.tables[i];
    if (!as_json) {
      write_file(paths[i], to_csv(t));
    } else if (i == 0) {
      json series = json::array();
      for (const Table& s : result.tables) series.push_back(to_json(s));
      write_file(paths[i], json{{"manifest", m}, {"series", series}}.dump(2) + "\n");
    } else {
      write_file(paths[i], json{{"manifest", m}, {"series", json::array({to_json(t)})}}.dump(2) + "\n");
    }
  }
  write_file(manifest_path, m.dump(2) + "\n");
}

// Command-level defaults, below presets in precedence.
Parameters command_defaults(const std::string& command, const std::string& figure) {
  Parameters p = base_defaults();
  if (command == "figure") {
    if (figure == "fig1" || figure == "fig3") merge(p, {{"range", "0:1.2"}, {"grid", "1201"}});
    if (figure == "fig2" || figure == "fig4") merge(p, {{"range", "0.005:3"}, {"grid", "600"}});
    if (figure == "fig5" || figure == "fig6") merge(p, {{"grid", "2000"}});
  } else if (command == "sweep") {
    merge(p, {{"variable", "energy"}, {"energy", "0.8"}, {"grid", "1201"}});
  } else if (command == "bound" || command == "check") {
    merge(p, {{"grid", "2000"}});
    if (command == "check") p["suite"] = "all";
  }
  return p;
}

// Defaults that depend on other resolved values.
void fill_derived(const std::string& command, Parameters& p) {
  if (command == "sweep" && !p.count("range")) {
    const std::string& v = p.at("variable");
    p["range"] = v == "energy" ? "0:1.2" : v == "v0" ? "0.005:3" : v == "alpha" ? "1:10" : "1:20";
  }
  if (command == "resonances" && !p.count("window")) {
    const double m0 = get_double(p, "m0");
    p["window"] = format_number(m0) + ":" + format_number(3.0 * m0);
  }
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  const auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(number) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '-', '_');
    if (key.empty()) throw std::invalid_argument("line " + std::to_string(number) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunContext ctx;
  ctx.start = std::chrono::steady_clock::now();
  ctx.arguments = args;

  CLI::App app{"Dirac scattering and bound states in a Woods-Saxon potential", "wsdirac"};
  app.set_version_flag("--version", WSDIRAC_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  // flag name -> parameter key
  const std::vector<std::pair<std::string, std::string>> numeric_flags = {
      {"--m0", "m0"},         {"--m1", "m1"},       {"--v0", "v0"},
      {"--alpha", "alpha"},   {"--len-l", "len_l"}, {"--energy", "energy"},
      {"--grid", "grid"},     {"--tol", "tol"}};
  std::map<std::string, std::string> raw;
  std::vector<std::pair<CLI::Option*, std::string>> options;
  for (const auto& [flag, key] : numeric_flags) {
    options.emplace_back(app.add_option(flag, raw[key])->check(CLI::Number), key);
  }
  options.emplace_back(app.add_option("--range", raw["range"], "lo:hi of the swept variable"),
                       "range");
  options.emplace_back(app.add_option("--window", raw["window"], "lo:hi energy window"), "window");
  options.emplace_back(app.add_option("--variable", raw["variable"], "swept variable")
                           ->transform(CLI::Transformer({{"len-l", "len_l"}}))
                           ->check(CLI::IsMember({"energy", "v0", "alpha", "len_l"})),
                       "variable");
  options.emplace_back(
      app.add_option("--suite", raw["suite"])
          ->check(CLI::IsMember({"all", "unitarity", "oracle", "bound", "supercritical"})),
      "suite");
  options.emplace_back(app.add_option("--mu-branch", raw["mu_branch"], "well branch of mu")
                           ->check(CLI::IsMember({"decaying", "printed"})),
                       "mu_branch");
  std::string preset;
  std::string config_path;
  app.add_option("--preset", preset, "fig1..fig6 parameter set")
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}));
  app.add_option("--config", config_path, "key=value file or a run manifest");
  app.add_option("--format", ctx.format)->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", ctx.out_path, "output file (stdout if omitted)");

  std::string figure_id;
  CLI::App* figure = app.add_subcommand("figure", "data series of one figure");
  figure->add_option("id", figure_id)
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "fig5", "fig6"}));
  app.add_subcommand("sweep", "R and T along one parameter");
  app.add_subcommand("bound", "bound-state energies of the well");
  app.add_subcommand("resonances", "transmission resonances in an energy window");
  app.add_subcommand("check", "closed form versus numerical integration");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  ctx.command = app.get_subcommands().front()->get_name();

  try {
    if (ctx.command == "figure") {
      if (!preset.empty() && preset != figure_id) {
        throw UsageError("figure " + figure_id + " conflicts with --preset " + preset);
      }
      preset = figure_id;
    }
    ctx.preset = preset;
    Parameters p = command_defaults(ctx.command, figure_id);
    if (!preset.empty()) merge(p, preset_values(preset));
    if (!config_path.empty()) merge(p, read_config(config_path));
    for (const auto& [opt, key] : options) {
      if (opt->count() > 0) p[key] = raw[key];
    }
    fill_derived(ctx.command, p);
    ctx.parameters = p;

    ctx.warnings = validate(physics(p));
    for (const std::string& w : ctx.warnings) err << "warning: " << w << '\n';

    CommandOutput result;
    if (ctx.command == "figure") {
      result = figure_id == "fig5" || figure_id == "fig6" ? figure_bound(figure_id, p)
                                                          : figure_scattering(figure_id, p);
    } else if (ctx.command == "sweep") {
      result = command_sweep(p);
    } else if (ctx.command == "bound") {
      result = command_bound(p);
    } else if (ctx.command == "resonances") {
      result = command_resonances(p);
    } else {
      result = command_check(p);
    }
    emit(ctx, result, out, err);
    return result.check_failed ? kExitCheckFailed : kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ThresholdError& e) {
    err << "threshold error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const PoleError& e) {
    err << "pole error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DegenerateParameters& e) {
    err << "degenerate parameters: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnexpected;
  }
}

}  // namespace wsdirac::cli
