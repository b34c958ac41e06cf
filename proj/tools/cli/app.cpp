#include "app.hpp"

#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "emit.hpp"
#include "rdi/errors.hpp"
#include "rdi/scenarios.hpp"
#include "rdi/units.hpp"

namespace rdi::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string config_path;
  std::string scenario;
  std::string out_dir;
  std::string grid;
  std::vector<std::string> tolerances;
  std::uint64_t seed = kDefaultSeed;
};

int fail(std::ostream& out, std::ostream& err, ExitCode code, const std::string& kind, const std::string& message,
         const std::string& field = {}) {
  json e = {{"error", {{"kind", kind}, {"message", message}}}, {"exit_code", static_cast<int>(code)}};
  if (!field.empty()) e["error"]["field"] = field;
  out << dump_json(e, -1);
  err << "error: " << message << '\n';
  return code;
}

std::string resolve_out_dir(const Options& o, const std::string& from_config) {
  if (!o.out_dir.empty()) return o.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return from_config;
}

Tolerances parse_overrides(const std::vector<std::string>& items) {
  Tolerances t;
  for (const auto& item : items) {
    const auto [law, value] = parse_tolerance(item);
    t[law] = value;
  }
  return t;
}

void print_summary(std::ostream& out, const ResidualReport& r) {
  for (const auto& e : r.entries) {
    char line[160];
    std::snprintf(line, sizeof line, "%-24s max=%.3e tol=%.1e %s\n", e.law.c_str(), e.max_residual, e.tolerance,
                  e.pass ? "PASS" : "FAIL");
    out << line;
  }
  out << (r.all_pass() ? "ALL PASS" : "FAIL") << ' ' << r.scenario << '\n';
}

int command_run(const Options& o, std::ostream& out) {
  ScenarioConfig cfg;
  try {
    cfg = load_config(o.config_path);
  } catch (const ConfigError&) {
    throw;
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what(), "document");
  }
  if (!o.grid.empty()) cfg.grid = parse_grid(o.grid);
  for (const auto& [law, value] : parse_overrides(o.tolerances)) cfg.tolerances[law] = value;
  const std::string dir = resolve_out_dir(o, cfg.output_directory.empty() ? "rdi-output/" + cfg.name : cfg.output_directory);

  const ScaledParameters scaled = nondimensionalize(cfg);
  const Scenario s = build_scenario(cfg);
  const GridSpec grid = default_grid(s, cfg.grid.nt, cfg.grid.nx, cfg.grid.ny);
  const ResidualReport report = run_verification(s, grid, cfg.tolerances, o.seed);

  OutputBundle bundle{std::filesystem::path(dir)};
  bundle.write("density.csv", density_csv(s, grid));
  bundle.write("fields.csv", fields_csv(s, grid));
  json record = parameter_record(cfg, scaled);
  const int stride = std::max(1, cfg.trajectory_steps / 2000);
  if (s.family == FamilyKind::planar) {
    const Trajectory center = classical_trajectory(s, {0.0, 0.0}, cfg.trajectory_steps);
    const Trajectory offset = classical_trajectory(s, {0.5 * s.width, 0.0}, cfg.trajectory_steps);
    bundle.write("trajectory_center.csv", trajectory_csv(center, stride));
    bundle.write("trajectory_offset.csv", trajectory_csv(offset, stride));
    const LarmorEstimate l = larmor_estimate(center);
    record["larmor"] = {{"radiated_per_period_mc2", l.radiated},
                        {"kinetic_mc2", l.kinetic},
                        {"radiated_per_period_J", l.radiated_joule},
                        {"kinetic_J", l.kinetic_joule},
                        {"ratio", l.ratio()}};
  }
  bundle.write("center_path.csv", trajectory_csv(center_path(s, 256)));
  bundle.write("report.json", dump_json(report_to_json(report)));
  bundle.write("parameters.json", dump_json(record));
  bundle.write_manifest({{"scenario", cfg.name},
                         {"family", family_name(cfg.family)},
                         {"seed", o.seed},
                         {"all_pass", report.all_pass()},
                         {"notes", record["notes"]},
                         {"units",
                          {{"t", "s"},
                           {"x,y,z", "m"},
                           {"density", "scaled |psi|^2"},
                           {"E,B", "scaled eE, eB in m^2 c^3/hbar, m^2 c^2/hbar"},
                           {"v", "v/c"}}}});
  print_summary(out, report);
  out << "wrote " << bundle.files().size() + 1 << " files to " << bundle.directory().string() << '\n';
  return report.all_pass() ? kPass : kPhysicsFail;
}

int command_verify(const Options& o, std::ostream& out) {
  const Scenario s = make_scenario(o.scenario);
  GridConfig g;
  if (!o.grid.empty()) g = parse_grid(o.grid);
  const GridSpec grid = default_grid(s, g.nt, g.nx, g.ny);
  const ResidualReport report = run_verification(s, grid, parse_overrides(o.tolerances), o.seed);
  const json j = report_to_json(report);
  out << dump_json(j);
  const std::string dir = resolve_out_dir(o, "");
  if (!dir.empty()) {
    OutputBundle bundle{std::filesystem::path(dir)};
    bundle.write("report.json", dump_json(j));
    bundle.write_manifest({{"scenario", s.name}, {"family", family_name(s.family)}, {"seed", o.seed}});
  }
  return report.all_pass() ? kPass : kPhysicsFail;
}

int command_list(std::ostream& out) {
  for (const auto& name : scenario_names()) {
    const Scenario s = make_scenario(name);
    out << name << '\t' << family_name(s.family) << '\t' << s.description << '\n';
  }
  out << "redmond-circle-fig2\tredmond\talias of redmond-fig2\n";
  return kPass;
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relativistic dynamical inversion: scenario runner and verifier", "rdi"};
  app.require_subcommand(1);
  Options o;
  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--out", o.out_dir, "output directory (overrides $" + std::string(kOutDirEnv) + ")");
    sub->add_option("--grid", o.grid, "grid as NTxNXxNY, e.g. 7x7x7");
    sub->add_option("--tol", o.tolerances, "tolerance override law=value (repeatable)");
    sub->add_option("--seed", o.seed, "seed for the randomized sweep");
  };
  CLI::App* run = app.add_subcommand("run", "run a scenario config and write all artifacts");
  run->add_option("config", o.config_path, "YAML config")->required();
  add_common(run);
  CLI::App* verify = app.add_subcommand("verify", "verify a registered scenario");
  verify->add_option("scenario", o.scenario, "scenario name")->required();
  add_common(verify);
  CLI::App* list = app.add_subcommand("list-scenarios", "list registered scenarios");
  CLI::App* schema = app.add_subcommand("schema", "print the config JSON Schema");

  std::vector<const char*> argv;
  argv.push_back("rdi");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kConfigFail, "usage", e.what());
  }

  try {
    if (*schema) {
      out << dump_json(config_schema());
      return kPass;
    }
    if (*list) return command_list(out);
    if (*run) return command_run(o, out);
    if (*verify) return command_verify(o, out);
  } catch (const ConfigError& e) {
    return fail(out, err, kConfigFail, "config", e.what(), e.field);
  } catch (const ArgumentError& e) {
    return fail(out, err, kConfigFail, "config", e.what());
  } catch (const DomainError& e) {
    return fail(out, err, kConfigFail, "config", e.what());
  } catch (const IoError& e) {
    return fail(out, err, kIoFail, "io", e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(out, err, kIoFail, "io", e.what());
  } catch (const std::exception& e) {
    return fail(out, err, kPhysicsFail, "evaluation", e.what());
  }
  return fail(out, err, kConfigFail, "usage", "no subcommand given");
}

}  // namespace rdi::cli
