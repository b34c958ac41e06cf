#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rdi::units {

// CODATA 2018.
namespace codata {
inline constexpr double c = 299792458.0;                   // m/s (exact)
inline constexpr double hbar = 1.054571817e-34;            // J s (exact)
inline constexpr double e = 1.602176634e-19;               // C (exact)
inline constexpr double m_e = 9.1093837015e-31;            // kg
inline constexpr double epsilon0 = 8.8541878128e-12;       // F/m
inline constexpr double alpha = 7.2973525693e-3;           // fine-structure constant
}  // namespace codata

// Named constant table written into every manifest.
std::vector<std::pair<std::string, double>> constant_table();

// Compton units: length hbar/(m c), time hbar/(m c^2), energy m c^2.
inline constexpr double length_unit = codata::hbar / (codata::m_e * codata::c);
inline constexpr double time_unit = codata::hbar / (codata::m_e * codata::c * codata::c);
inline constexpr double energy_unit = codata::m_e * codata::c * codata::c;
// Tesla corresponding to eB = 1 in scaled units.
inline constexpr double tesla_unit = codata::m_e * codata::m_e * codata::c * codata::c / (codata::e * codata::hbar);

inline double length_to_scaled(double metres) { return metres / length_unit; }
inline double length_to_si(double scaled) { return scaled * length_unit; }
inline double time_to_scaled(double seconds) { return seconds / time_unit; }
inline double time_to_si(double scaled) { return scaled * time_unit; }
inline double rate_to_scaled(double per_second) { return per_second * time_unit; }
inline double rate_to_si(double scaled) { return scaled / time_unit; }
inline double field_to_scaled(double tesla) { return tesla / tesla_unit; }
inline double field_to_si(double scaled) { return scaled * tesla_unit; }

// Laser angular frequency 2 pi c / lambda.
double laser_omega(double wavelength_m);
// Cyclotron frequency eB/m in 1/s.
double cyclotron_omega(double tesla);

}  // namespace rdi::units
