#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdi/report.hpp"
#include "rdi/scenarios.hpp"
#include "rdi/verify.hpp"

namespace rdi::cli {

// Every double is written as %.17g so that output is bit-exact and parses back
// to the same value.
std::string format_double(double v);
std::string dump_json(const nlohmann::json& j, int indent = 2);

nlohmann::json report_to_json(const ResidualReport& r);

std::string sha256_hex(const std::string& bytes);

// Collects files written into one output directory and their hashes.
class OutputBundle {
 public:
  explicit OutputBundle(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }

  // Writes (or overwrites) a file relative to the bundle directory; throws IoError.
  void write(const std::string& name, const std::string& content);

  // manifest.json: every file with its SHA-256 and size, the constants table
  // and any extra records.
  void write_manifest(const nlohmann::json& extra);

  const std::vector<std::string>& files() const { return names_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> names_;
  std::vector<std::string> hashes_;
  std::vector<std::size_t> sizes_;
};

// The CSV sections below write SI time (s) and positions (m). Densities and
// fields stay in scaled units; velocities are written as v/c.
std::string density_csv(const Scenario& s, const GridSpec& grid);
std::string fields_csv(const Scenario& s, const GridSpec& grid);
std::string trajectory_csv(const Trajectory& traj, int stride = 1);

}  // namespace rdi::cli
