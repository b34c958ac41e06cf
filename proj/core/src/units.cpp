#include "rdi/units.hpp"

#include <numbers>

namespace rdi::units {

std::vector<std::pair<std::string, double>> constant_table() {
  return {
      {"speed_of_light_m_per_s", codata::c},
      {"reduced_planck_J_s", codata::hbar},
      {"elementary_charge_C", codata::e},
      {"electron_mass_kg", codata::m_e},
      {"vacuum_permittivity_F_per_m", codata::epsilon0},
      {"fine_structure_constant", codata::alpha},
      {"length_unit_m", length_unit},
      {"time_unit_s", time_unit},
      {"energy_unit_J", energy_unit},
      {"field_unit_T", tesla_unit},
  };
}

double laser_omega(double wavelength_m) { return 2.0 * std::numbers::pi * codata::c / wavelength_m; }

double cyclotron_omega(double tesla) { return codata::e * tesla / codata::m_e; }

}  // namespace rdi::units
