#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rdi/field.hpp"
#include "rdi/report.hpp"
#include "rdi/solutions.hpp"
#include "rdi/verify.hpp"

namespace rdi {

enum class FamilyKind { planar, redmond, bagrov, volkov };

std::string family_name(FamilyKind f);
FamilyKind parse_family(const std::string& name);

// A fully specified solution instance in scaled units together with
// everything the verification laws need.
struct Scenario {
  std::string name;
  FamilyKind family = FamilyKind::planar;
  std::string description;

  std::optional<EllipseParams> ellipse;
  std::optional<VolkovFamilySpec> volkov;  // gauge already resolved
  std::optional<CircleParams> circle;
  std::optional<double> bagrov_a;

  SpinorField spinor;
  ColumnField column;
  PotentialField potential;
  EMField fields;

  double period = 0.0;
  double width = 0.0;      // Gaussian width 1/sqrt(eB) of the density
  bool quadrature = false;  // numerically integrated shifts or gauge
  bool larmor_gate = false;

  // Packet center (x, y) at lab time t on the plane z = 0.
  std::array<double, 2> center(double t) const;
  // Maps a packet-frame grid point (t, X, Y, z) to lab coordinates.
  Point<double> lab_point(const Point<double>& packet) const;
};

Scenario ellipse_scenario(const std::string& name, const EllipseParams& p);
Scenario redmond_scenario(const std::string& name, const CircleParams& p);
Scenario bagrov_scenario(const std::string& name, const BagrovParams& p);
Scenario inhomogeneous_scenario(const std::string& name, const InhomogeneousParams& p);

// Registered names, in listing order.
std::vector<std::string> scenario_names();
// Accepts the registered names and their aliases; unknown names raise ArgumentError.
Scenario make_scenario(const std::string& name);

using Tolerances = std::map<std::string, double>;

Tolerances default_tolerances(const Scenario& s);

// nt x nx x ny x 1 grid over one period and +-3 widths around the packet center.
GridSpec default_grid(const Scenario& s, int nt = 7, int nx = 7, int ny = 7);

// The classical point particle launched at the packet center (plus an
// optional offset) in the hbar -> 0 fields, over one period.
Trajectory classical_trajectory(const Scenario& s, std::array<double, 2> offset = {0.0, 0.0}, int steps = 20000);

// Packet-center path of a Volkov-family scenario sampled at n + 1 times.
Trajectory center_path(const Scenario& s, int n = 256);

// Maximum relative deviation of the semi-axes of a closed orbit from
// (a1, a2) and the return-to-start distance relative to max(a1, a2).
struct OrbitCheck {
  double semi_axis_error = 0.0;
  double closure_error = 0.0;
};
OrbitCheck check_orbit(const Trajectory& traj, double a1, double a2);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Overrides replace defaults; an override naming a law the scenario does not
// evaluate is a configuration error. The seed drives the random_* laws, which
// repeat the Dirac and inversion checks at 100 uniformly drawn grid-box points.
ResidualReport run_verification(const Scenario& s, const GridSpec& grid, const Tolerances& overrides = {},
                                std::uint64_t seed = kDefaultSeed);
ResidualReport run_verification(const std::string& name, const GridSpec& grid, const Tolerances& overrides = {},
                                std::uint64_t seed = kDefaultSeed);

}  // namespace rdi
