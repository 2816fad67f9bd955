/*
 * Copyright (c) 2026 hsentropy developers
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hsentropy/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsentropy/admissibility.hpp"
#include "hsentropy/entropy.hpp"
#include "hsentropy/errors.hpp"
#include "hsentropy/explorer.hpp"
#include "hsentropy/gas.hpp"

namespace hsentropy::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

// 17 significant digits: enough for exact double round trips.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Cell {
  std::variant<std::monostate, double, long long, bool, std::string> v;

  Cell() = default;
  Cell(double x) : v(x) {}
  Cell(int x) : v(static_cast<long long>(x)) {}
  Cell(long long x) : v(x) {}
  Cell(bool x) : v(x) {}
  Cell(const char* s) : v(std::string(s)) {}
  Cell(std::string s) : v(std::move(s)) {}
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_meta(const std::string& key, const std::string& value) {
    meta.emplace_back(key, value);
  }
};

std::string cell_to_csv(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c.v)) return "";
  if (const auto* d = std::get_if<double>(&c.v)) return fmt(*d);
  if (const auto* i = std::get_if<long long>(&c.v)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c.v)) return *b ? "1" : "0";
  return std::get<std::string>(c.v);
}

void write_csv(std::ostream& os, const Table& t) {
  os << "# hsentropy " << kVersion << "\n";
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    os << (i ? "," : "") << t.columns[i];
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << cell_to_csv(row[i]);
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json j;
  j["meta"]["tool"] = "hsentropy";
  j["meta"]["version"] = kVersion;
  for (const auto& [k, v] : t.meta) j["meta"][k] = v;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json jr;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& c = row[i];
      if (std::holds_alternative<std::monostate>(c.v)) {
        jr[t.columns[i]] = nullptr;
      } else if (const auto* d = std::get_if<double>(&c.v)) {
        jr[t.columns[i]] = *d;
      } else if (const auto* iv = std::get_if<long long>(&c.v)) {
        jr[t.columns[i]] = *iv;
      } else if (const auto* b = std::get_if<bool>(&c.v)) {
        jr[t.columns[i]] = *b;
      } else {
        jr[t.columns[i]] = std::get<std::string>(c.v);
      }
    }
    j["rows"].push_back(std::move(jr));
  }
  os << j.dump(2) << "\n";
}

int emit(const Table& t, const std::string& out_path, const std::string& format) {
  std::ostringstream body;
  if (format == "json") {
    write_json(body, t);
  } else {
    write_csv(body, t);
  }
  if (out_path.empty()) {
    std::cout << body.str();
    return std::cout ? kExitOk : kExitIo;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return kExitIo;
  }
  os << body.str();
  os.flush();
  if (!os) {
    std::cerr << "error: write failed: " << out_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  std::vector<double> g;
  if (step <= 0.0) throw CLI::ValidationError("grid step must be positive");
  for (int i = 0;; ++i) {
    const double x = lo + i * step;
    if (x > hi + 1e-12 * std::max(1.0, std::abs(hi))) break;
    g.push_back(x);
  }
  if (g.empty()) throw CLI::ValidationError("empty grid");
  return g;
}

std::string join_grid_spec(double lo, double hi, double step) {
  return "min=" + fmt(lo) + " max=" + fmt(hi) + " step=" + fmt(step);
}

// Shared per-command option bundle (delta list, grids, output).
struct RunConfig {
  std::vector<double> deltas;
  std::string out_path;
  std::string format = "csv";
  double mach_min = 0.0, mach_max = 1.75, mach_step = 0.01;
  double t_min = 0.1, t_max = 3.0, t_step = 0.05;
  double p_min = 1e-3, p_max = 7.0;
  int p_points = 400;
  SearchBox box;
};

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--out", cfg.out_path, "Output file (default: stdout)");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// The --config flag is handled before CLI11 parsing: the flat key=value file
// expands to ordinary long options, skipping any key the command line already
// carries, so explicit flags always win.
struct ConfigExpansion {
  std::vector<std::string> args;
  int error = kExitOk;
};

ConfigExpansion expand_config(int argc, const char* const* argv) {
  ConfigExpansion out;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config") {
      if (i + 1 >= argc) {
        std::cerr << "error: --config requires a file path\n";
        out.error = kExitUsage;
        return out;
      }
      config_path = argv[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    } else {
      out.args.push_back(a);
    }
  }
  if (config_path.empty()) return out;

  std::ifstream is(config_path);
  if (!is) {
    std::cerr << "error: cannot open config file: " << config_path << "\n";
    out.error = kExitIo;
    return out;
  }
  const std::vector<std::string> user_args = out.args;
  auto given = [&](const std::string& key) {
    const std::string flag = "--" + key;
    for (const std::string& a : user_args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    }
    return false;
  };
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: " << config_path << ":" << lineno
                << ": expected key=value\n";
      out.error = kExitUsage;
      return out;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      std::cerr << "error: " << config_path << ":" << lineno << ": empty key\n";
      out.error = kExitUsage;
      return out;
    }
    if (!given(key)) {
      out.args.push_back("--" + key);
      out.args.push_back(value);
    }
  }
  return out;
}

void add_delta_option(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--delta", cfg.deltas,
                  "Internal degrees of freedom (repeatable)")
      ->required()
      ->check(CLI::NonNegativeNumber);
}

std::string delta_list_string(const std::vector<double>& deltas) {
  std::string s;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) s += " ";
    s += fmt(deltas[i]);
  }
  return s;
}

// ---------------------------------------------------------------- lambda --

struct StateArgs {
  double delta = 0.0;
  double p = 1.0;
  double t = 1.0;
  double mach = 0.0;
};

void add_state_options(CLI::App* cmd, StateArgs& a) {
  cmd->add_option("--delta", a.delta, "Internal degrees of freedom")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--p", a.p, "Pressure ratio p_inf/p_0")->required();
  cmd->add_option("--T", a.t, "Temperature ratio T_inf/T_0")->required();
  cmd->add_option("--mach", a.mach, "Mach number at infinity")->required();
}

int run_lambda(const StateArgs& a, const std::string& form_name,
               const std::string& out_path, const std::string& format) {
  const GasParams gas = GasParams::from_delta(a.delta);
  const FarFieldState state{a.p, a.t, a.mach};
  LambdaForm form = LambdaForm::checked;
  if (form_name == "direct") form = LambdaForm::direct;
  if (form_name == "recast") form = LambdaForm::recast;

  const LambdaBreakdown b = lambda(state, gas, form);

  Table t;
  t.add_meta("command", "lambda");
  t.add_meta("form", form_name);
  t.columns = {"delta", "p", "T", "mach", "form", "value", "boundary_term",
               "far_field_term", "min_flux_term", "upsilon", "s"};
  t.rows.push_back({a.delta, a.p, a.t, a.mach, to_string(b.form), b.value,
                    b.boundary_term, b.far_field_term, b.min_flux_term,
                    b.upsilon, b.s});
  return emit(t, out_path, format);
}

// ------------------------------------------------------------ admissible --

int run_admissible(const StateArgs& a, const std::string& out_path,
                   const std::string& format) {
  const GasParams gas = GasParams::from_delta(a.delta);
  const FarFieldState state{a.p, a.t, a.mach};
  const AdmissibilityReport r = check_all(state, gas);

  Table t;
  t.add_meta("command", "admissible");
  t.add_meta("delta", fmt(a.delta));
  t.add_meta("state", "p=" + fmt(a.p) + " T=" + fmt(a.t) + " mach=" + fmt(a.mach));
  t.add_meta("regime", to_string(r.regime.regime));
  t.add_meta("k_plus", std::to_string(r.regime.k_plus));
  t.add_meta("l_zero", std::to_string(r.regime.l_zero));
  t.add_meta("free_parameters", r.regime.free_parameters
                                    ? std::to_string(*r.regime.free_parameters)
                                    : std::string("unset"));
  t.add_meta("admissible", r.admissible ? "1" : "0");
  if (r.evaporation && !r.evaporation->energy_forms_agree) {
    t.add_meta("warning", "energy condition margin and moment sign disagree");
  }

  t.columns = {"condition", "applicable", "satisfied", "margin"};
  auto row = [&](const char* name, const std::optional<ConditionResult>& c) {
    if (c) {
      t.rows.push_back({name, true, c->satisfied, c->margin});
    } else {
      t.rows.push_back({name, false, Cell{}, Cell{}});
    }
  };
  row("overall", r.overall);
  row("evap_flux", r.evaporation ? std::optional(r.evaporation->flux) : std::nullopt);
  row("evap_energy", r.evaporation ? std::optional(r.evaporation->energy) : std::nullopt);
  row("evap_pressure",
      r.evaporation ? std::optional(r.evaporation->pressure) : std::nullopt);
  row("condensation", r.condensation);
  row("stationary", r.stationary);
  return emit(t, out_path, format);
}

// -------------------------------------------------------------- classify --

int run_classify(const std::vector<double>& machs, const std::string& out_path,
                 const std::string& format) {
  Table t;
  t.add_meta("command", "classify");
  t.columns = {"mach", "regime", "k_plus", "l_zero", "free_parameters"};
  for (double m : machs) {
    const RegimeReport r = classify_regime(m);
    t.rows.push_back({m, to_string(r.regime), r.k_plus, r.l_zero,
                      r.free_parameters ? Cell{*r.free_parameters} : Cell{}});
  }
  return emit(t, out_path, format);
}

// ------------------------------------------------------- curves/surfaces --

int run_evaporation_curve(const RunConfig& cfg) {
  const std::vector<double> grid = make_grid(cfg.mach_min, cfg.mach_max, cfg.mach_step);
  Table t;
  t.add_meta("command", "evaporation-curve");
  t.add_meta("delta", delta_list_string(cfg.deltas));
  t.add_meta("mach-grid", join_grid_spec(cfg.mach_min, cfg.mach_max, cfg.mach_step));
  t.add_meta("search-box", "p=[" + fmt(cfg.box.p_min) + "," + fmt(cfg.box.p_max) +
                               "] T=[" + fmt(cfg.box.t_min) + "," +
                               fmt(cfg.box.t_max) + "]");
  t.columns = {"delta", "mach", "p_sharp", "T_sharp", "lambda_max"};
  for (double d : cfg.deltas) {
    const GasParams gas = GasParams::from_delta(d);
    std::vector<double> rejected;
    const auto curve = evaporation_curve(gas, grid, cfg.box, &rejected);
    for (const auto& cp : curve) {
      t.rows.push_back({d, cp.mach, cp.p_sharp, cp.t_sharp, cp.lambda_max});
    }
    if (!rejected.empty()) {
      std::string s = fmt(rejected.front());
      for (std::size_t i = 1; i < rejected.size(); ++i) s += " " + fmt(rejected[i]);
      t.add_meta("rejected-mach delta=" + fmt(d), s);
    }
  }
  return emit(t, cfg.out_path, cfg.format);
}

int run_condensation_surface(const RunConfig& cfg) {
  const std::vector<double> tg = make_grid(cfg.t_min, cfg.t_max, cfg.t_step);
  const std::vector<double> mg = make_grid(cfg.mach_min, cfg.mach_max, cfg.mach_step);
  for (double m : mg) {
    if (!(m < 0.0)) throw CLI::ValidationError("condensation-surface requires mach < 0");
  }
  const PBounds pb{cfg.p_min, cfg.p_max};
  Table t;
  t.add_meta("command", "condensation-surface");
  t.add_meta("delta", delta_list_string(cfg.deltas));
  t.add_meta("T-grid", join_grid_spec(cfg.t_min, cfg.t_max, cfg.t_step));
  t.add_meta("mach-grid", join_grid_spec(cfg.mach_min, cfg.mach_max, cfg.mach_step));
  t.add_meta("p-range", "[" + fmt(cfg.p_min) + "," + fmt(cfg.p_max) + "]");
  t.columns = {"delta", "T", "mach", "p_star", "lambda_max", "boundary_flag"};
  for (double d : cfg.deltas) {
    const GasParams gas = GasParams::from_delta(d);
    std::vector<std::pair<double, double>> missing;
    const auto surf = condensation_surface(gas, tg, mg, pb, &missing);
    for (const auto& s : surf) {
      t.rows.push_back(
          {d, s.temperature, s.mach, s.p_star, s.lambda_max, s.boundary_flag});
    }
    if (!missing.empty()) {
      std::string s = "count=" + std::to_string(missing.size());
      for (const auto& [mt, mm] : missing) {
        s += " (" + fmt(mt) + "," + fmt(mm) + ")";
      }
      t.add_meta("infeasible-cells delta=" + fmt(d), s);
    }
  }
  return emit(t, cfg.out_path, cfg.format);
}

int run_boundary_surface(const RunConfig& cfg) {
  const std::vector<double> tg = make_grid(cfg.t_min, cfg.t_max, cfg.t_step);
  const std::vector<double> mg = make_grid(cfg.mach_min, cfg.mach_max, cfg.mach_step);
  const PBounds pb{cfg.p_min, cfg.p_max};
  Table t;
  t.add_meta("command", "boundary-surface");
  t.add_meta("delta", delta_list_string(cfg.deltas));
  t.add_meta("T-grid", join_grid_spec(cfg.t_min, cfg.t_max, cfg.t_step));
  t.add_meta("mach-grid", join_grid_spec(cfg.mach_min, cfg.mach_max, cfg.mach_step));
  t.add_meta("p-range", "[" + fmt(cfg.p_min) + "," + fmt(cfg.p_max) +
                            "] points=" + std::to_string(cfg.p_points));
  t.columns = {"delta", "T", "mach", "p_lower", "p_upper"};
  for (double d : cfg.deltas) {
    const GasParams gas = GasParams::from_delta(d);
    const auto samples = boundary_surface(gas, tg, mg, pb, cfg.p_points);
    std::size_t truncated = 0;
    for (const auto& s : samples) {
      t.rows.push_back({d, s.temperature, s.mach, s.p_lower, s.p_upper});
      if (s.lower_truncated || s.upper_truncated) ++truncated;
    }
    if (truncated > 0) {
      t.add_meta("truncated-intervals delta=" + fmt(d), std::to_string(truncated));
    }
  }
  return emit(t, cfg.out_path, cfg.format);
}

int run_max_mach(const RunConfig& cfg) {
  Table t;
  t.add_meta("command", "max-mach");
  t.add_meta("delta", delta_list_string(cfg.deltas));
  t.columns = {"delta", "max_mach"};
  for (double d : cfg.deltas) {
    const GasParams gas = GasParams::from_delta(d);
    t.rows.push_back({d, max_positive_mach(gas, cfg.box)});
  }
  return emit(t, cfg.out_path, cfg.format);
}

// --------------------------------------------------------------- compare --

struct ParsedTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  int column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return static_cast<int>(i);
    }
    return -1;
  }
};

ParsedTable parse_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::ios_base::failure("cannot open " + path);
  ParsedTable t;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    if (!have_header) {
      t.columns = cells;
      have_header = true;
    } else {
      t.rows.push_back(cells);
    }
  }
  return t;
}

double parse_number(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

int run_compare(const std::string& reference_path, const std::string& computed_path,
                const std::vector<std::string>& keys, const std::string& value_col,
                const std::string& ref_value_col, double join_tol,
                const std::string& out_path, const std::string& format) {
  ParsedTable ref, comp;
  try {
    ref = parse_csv(reference_path);
    comp = parse_csv(computed_path);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  std::vector<int> ref_key_idx, comp_key_idx;
  for (const auto& k : keys) {
    const int ri = ref.column_index(k);
    const int ci = comp.column_index(k);
    if (ri < 0 || ci < 0) {
      std::cerr << "error: join key '" << k << "' missing from input\n";
      return kExitNumerical;
    }
    ref_key_idx.push_back(ri);
    comp_key_idx.push_back(ci);
  }
  const int cv = comp.column_index(value_col);
  const int rv = ref.column_index(ref_value_col);
  if (cv < 0 || rv < 0) {
    std::cerr << "error: value column missing (computed '" << value_col
              << "', reference '" << ref_value_col << "')\n";
    return kExitNumerical;
  }
  if (ref.rows.empty() || comp.rows.empty()) {
    std::cerr << "error: empty join (no data rows)\n";
    return kExitNumerical;
  }

  Table t;
  t.add_meta("command", "compare");
  t.add_meta("reference", reference_path);
  t.add_meta("computed", computed_path);
  t.columns.clear();
  for (const auto& k : keys) t.columns.push_back(k);
  t.columns.insert(t.columns.end(),
                   {"reference", "computed", "residual", "key_distance", "beyond_tol"});

  double sum_sq = 0.0, max_abs = 0.0;
  std::size_t n = 0;
  try {
    for (const auto& crow : comp.rows) {
      // nearest reference row in the max-metric over the join keys
      double best_dist = std::numeric_limits<double>::infinity();
      const std::vector<std::string>* best = nullptr;
      for (const auto& rrow : ref.rows) {
        double dist = 0.0;
        for (std::size_t k = 0; k < keys.size(); ++k) {
          dist = std::max(dist, std::abs(parse_number(crow[comp_key_idx[k]]) -
                                         parse_number(rrow[ref_key_idx[k]])));
        }
        if (dist < best_dist) {
          best_dist = dist;
          best = &rrow;
        }
      }
      if (best == nullptr) continue;
      const double computed = parse_number(crow[cv]);
      const double reference = parse_number((*best)[rv]);
      const double residual = computed - reference;
      sum_sq += residual * residual;
      max_abs = std::max(max_abs, std::abs(residual));
      ++n;
      std::vector<Cell> row;
      for (std::size_t k = 0; k < keys.size(); ++k) {
        row.emplace_back(parse_number(crow[comp_key_idx[k]]));
      }
      row.emplace_back(reference);
      row.emplace_back(computed);
      row.emplace_back(residual);
      row.emplace_back(best_dist);
      row.emplace_back(best_dist > join_tol);
      t.rows.push_back(std::move(row));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: malformed numeric data: " << e.what() << "\n";
    return kExitNumerical;
  }
  if (n == 0) {
    std::cerr << "error: empty join\n";
    return kExitNumerical;
  }
  t.add_meta("n_points", std::to_string(n));
  t.add_meta("rms_deviation", fmt(std::sqrt(sum_sq / n)));
  t.add_meta("max_deviation", fmt(max_abs));
  return emit(t, out_path, format);
}

}  // namespace

int run(int argc, const char* const* argv) {
  const ConfigExpansion expanded = expand_config(argc, argv);
  if (expanded.error != kExitOk) return expanded.error;

  CLI::App app{"Entropy-bound toolkit for polyatomic half-space evaporation/condensation flows"};
  app.require_subcommand(1);
  app.footer("Every subcommand accepts --config <file> with flat key=value lines;\n"
             "explicit flags override config values.");

  // lambda
  StateArgs lambda_args;
  std::string lambda_form = "checked";
  std::string lambda_out, lambda_fmt = "csv";
  auto* cmd_lambda = app.add_subcommand("lambda", "Evaluate the entropy-production bound");
  add_state_options(cmd_lambda, lambda_args);
  cmd_lambda->add_option("--form", lambda_form, "Formulation")
      ->check(CLI::IsMember({"direct", "recast", "checked"}))
      ->capture_default_str();
  cmd_lambda->add_option("--out", lambda_out, "Output file");
  cmd_lambda->add_option("--format", lambda_fmt, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // admissible
  StateArgs adm_args;
  std::string adm_out, adm_fmt = "csv";
  auto* cmd_adm = app.add_subcommand("admissible", "Check the necessary conditions");
  add_state_options(cmd_adm, adm_args);
  cmd_adm->add_option("--out", adm_out, "Output file");
  cmd_adm->add_option("--format", adm_fmt, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // classify
  std::vector<double> classify_machs;
  std::string cls_out, cls_fmt = "csv";
  auto* cmd_cls = app.add_subcommand("classify", "Classify the flow regime");
  cmd_cls->add_option("--mach", classify_machs, "Mach number (repeatable)")->required();
  cmd_cls->add_option("--out", cls_out, "Output file");
  cmd_cls->add_option("--format", cls_fmt, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // evaporation-curve
  RunConfig evap;
  evap.box = SearchBox{};
  auto* cmd_evap = app.add_subcommand("evaporation-curve",
                                      "Maximal-entropy-production curve p#(M), T#(M)");
  add_delta_option(cmd_evap, evap);
  cmd_evap->add_option("--mach-min", evap.mach_min)->capture_default_str();
  cmd_evap->add_option("--mach-max", evap.mach_max)->capture_default_str();
  cmd_evap->add_option("--mach-step", evap.mach_step)->capture_default_str();
  cmd_evap->add_option("--p-min", evap.box.p_min)->capture_default_str();
  cmd_evap->add_option("--p-max", evap.box.p_max)->capture_default_str();
  cmd_evap->add_option("--T-min", evap.box.t_min)->capture_default_str();
  cmd_evap->add_option("--T-max", evap.box.t_max)->capture_default_str();
  add_output_options(cmd_evap, evap);

  // condensation-surface
  RunConfig cond;
  cond.mach_min = -2.5;
  cond.mach_max = -0.01;
  auto* cmd_cond = app.add_subcommand("condensation-surface",
                                      "Maximal-entropy-production surface p*(T, M)");
  add_delta_option(cmd_cond, cond);
  cmd_cond->add_option("--T-min", cond.t_min)->capture_default_str();
  cmd_cond->add_option("--T-max", cond.t_max)->capture_default_str();
  cmd_cond->add_option("--T-step", cond.t_step)->capture_default_str();
  cmd_cond->add_option("--mach-min", cond.mach_min)->capture_default_str();
  cmd_cond->add_option("--mach-max", cond.mach_max)->capture_default_str();
  cmd_cond->add_option("--mach-step", cond.mach_step)->capture_default_str();
  cmd_cond->add_option("--p-min", cond.p_min)->capture_default_str();
  cmd_cond->add_option("--p-max", cond.p_max)->capture_default_str();
  add_output_options(cmd_cond, cond);

  // boundary-surface
  RunConfig bnd;
  bnd.mach_min = -2.5;
  bnd.mach_max = 1.75;
  bnd.mach_step = 0.05;
  auto* cmd_bnd = app.add_subcommand("boundary-surface",
                                     "Zero-level intervals of the entropy bound");
  add_delta_option(cmd_bnd, bnd);
  cmd_bnd->add_option("--T-min", bnd.t_min)->capture_default_str();
  cmd_bnd->add_option("--T-max", bnd.t_max)->capture_default_str();
  cmd_bnd->add_option("--T-step", bnd.t_step)->capture_default_str();
  cmd_bnd->add_option("--mach-min", bnd.mach_min)->capture_default_str();
  cmd_bnd->add_option("--mach-max", bnd.mach_max)->capture_default_str();
  cmd_bnd->add_option("--mach-step", bnd.mach_step)->capture_default_str();
  cmd_bnd->add_option("--p-min", bnd.p_min)->capture_default_str();
  cmd_bnd->add_option("--p-max", bnd.p_max)->capture_default_str();
  cmd_bnd->add_option("--p-points", bnd.p_points)->capture_default_str();
  add_output_options(cmd_bnd, bnd);

  // max-mach
  RunConfig mm;
  auto* cmd_mm = app.add_subcommand("max-mach",
                                    "Largest Mach number with positive entropy production");
  add_delta_option(cmd_mm, mm);
  cmd_mm->add_option("--p-min", mm.box.p_min)->capture_default_str();
  cmd_mm->add_option("--p-max", mm.box.p_max)->capture_default_str();
  cmd_mm->add_option("--T-min", mm.box.t_min)->capture_default_str();
  cmd_mm->add_option("--T-max", mm.box.t_max)->capture_default_str();
  add_output_options(cmd_mm, mm);

  // compare
  std::string cmp_reference, cmp_computed, cmp_value, cmp_ref_value = "p";
  std::vector<std::string> cmp_keys = {"mach"};
  double cmp_tol = 1e-6;
  std::string cmp_out, cmp_fmt = "csv";
  auto* cmd_cmp = app.add_subcommand("compare",
                                     "Compare a computed dataset against reference data");
  cmd_cmp->add_option("--reference", cmp_reference, "Reference CSV")->required();
  cmd_cmp->add_option("--computed", cmp_computed, "Computed CSV")->required();
  cmd_cmp->add_option("--key", cmp_keys, "Join key column (repeatable)")
      ->capture_default_str();
  cmd_cmp->add_option("--value", cmp_value, "Value column in the computed file")
      ->required();
  cmd_cmp->add_option("--ref-value", cmp_ref_value, "Value column in the reference file")
      ->capture_default_str();
  cmd_cmp->add_option("--join-tol", cmp_tol, "Key distance flag threshold")
      ->capture_default_str();
  cmd_cmp->add_option("--out", cmp_out, "Output file");
  cmd_cmp->add_option("--format", cmp_fmt, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  std::vector<const char*> parse_argv;
  parse_argv.push_back(argc > 0 ? argv[0] : "hsentropy");
  for (const std::string& a : expanded.args) parse_argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(parse_argv.size()), parse_argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_lambda->parsed()) {
      return run_lambda(lambda_args, lambda_form, lambda_out, lambda_fmt);
    }
    if (cmd_adm->parsed()) return run_admissible(adm_args, adm_out, adm_fmt);
    if (cmd_cls->parsed()) return run_classify(classify_machs, cls_out, cls_fmt);
    if (cmd_evap->parsed()) return run_evaporation_curve(evap);
    if (cmd_cond->parsed()) return run_condensation_surface(cond);
    if (cmd_bnd->parsed()) return run_boundary_surface(bnd);
    if (cmd_mm->parsed()) return run_max_mach(mm);
    if (cmd_cmp->parsed()) {
      return run_compare(cmp_reference, cmp_computed, cmp_keys, cmp_value,
                         cmp_ref_value, cmp_tol, cmp_out, cmp_fmt);
    }
  } catch (const InfeasibleError& e) {
    std::cerr << "error: infeasible state (" << to_string(e.reason()) << "): "
              << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hsentropy::cli
