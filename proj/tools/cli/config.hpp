#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdi/scenarios.hpp"

namespace rdi::cli {

// Physical inputs exactly as written in the config, SI only.
struct SiParameters {
  double magnetic_field_T = 0.0;
  double a1_m = 0.0;
  double a2_m = 0.0;
  double omega_rad_per_s = 0.0;
  double a0_T = 0.0;
  double wavelength_m = 0.0;
  double bagrov_a = 0.0;       // dimensionless
  double kappa_per_m2 = 0.0;
  double pz_amplitude = 0.0;   // in units of m c
  std::optional<double> intensity_W_per_cm2;
  std::optional<double> stated_omega_rad_per_s;
};

struct GridConfig {
  int nt = 7;
  int nx = 7;
  int ny = 7;
};

struct ScenarioConfig {
  std::string name;
  FamilyKind family = FamilyKind::planar;
  SiParameters si;
  GridConfig grid;
  std::string output_directory;
  Tolerances tolerances;
  int trajectory_steps = 20000;
};

// Dimensionless groups and their scaled-unit consequences.
struct ScaledParameters {
  FamilyKind family = FamilyKind::planar;
  double omega = 0.0;  // 1 / mu
  double mu = 0.0;     // m c^2 / (hbar omega)
  double b = 0.0;      // e B / (m omega)
  double eB = 0.0;
  double beta1 = 0.0, beta2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
  double a0_tilde = 0.0;  // e a0 / (m omega)
  double a0 = 0.0;
  double bagrov_a = 0.0;
  double kappa = 0.0;
  double pz_amplitude = 0.0;
};

// Published schema (JSON Schema 2020-12) for the sectioned config document.
const nlohmann::json& config_schema();

// Checks a document against the subset of JSON Schema used by config_schema();
// throws ConfigError naming the offending path.
void validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema);

nlohmann::json yaml_file_to_json(const std::string& path);
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::string& path);

ScaledParameters nondimensionalize(const ScenarioConfig& c);
// Inverse map; recovers the SI inputs from the scaled record.
SiParameters dimensionalize(const ScaledParameters& p);

Scenario build_scenario(const ScenarioConfig& c);

// Derived quantities and inconsistency flags worth recording next to the data.
nlohmann::json parameter_record(const ScenarioConfig& c, const ScaledParameters& p);

// "7x7x7" -> grid; throws ConfigError.
GridConfig parse_grid(const std::string& text);
// "law=value" -> entry; throws ConfigError.
std::pair<std::string, double> parse_tolerance(const std::string& text);

}  // namespace rdi::cli
