#pragma once

#include <array>
#include <functional>
#include <vector>

#include "rdi/errors.hpp"
#include "rdi/field.hpp"
#include "rdi/report.hpp"

namespace rdi {

// F^{mu nu} with E_k = F^{k0} and B_1 = -F^{23} (cyclic), contravariant
// indices, scaled units.
struct FieldTensorSample {
  std::array<std::array<double, 4>, 4> F{};

  std::array<double, 3> E() const { return {F[1][0], F[2][0], F[3][0]}; }
  std::array<double, 3> B() const { return {-F[2][3], -F[3][1], -F[1][2]}; }
};

template <class T>
std::array<std::array<T, 4>, 4> field_tensor_components(const PotentialField& A, const Point<T>& x) {
  std::array<std::array<T, 4>, 4> d{};  // d[mu][nu] = d_mu A^nu
  for (int mu = 0; mu < 4; ++mu) {
    const FourVector<T> t = partial(A, x, mu);
    for (int nu = 0; nu < 4; ++nu) d[mu][nu] = t[nu];
  }
  // Raising the derivative index flips the spatial signs.
  const auto up = [&d](int mu, int nu) { return mu == 0 ? d[mu][nu] : -d[mu][nu]; };
  std::array<std::array<T, 4>, 4> F{};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu + 1; nu < 4; ++nu) {
      F[mu][nu] = up(mu, nu) - up(nu, mu);
      F[nu][mu] = -F[mu][nu];
    }
  return F;
}

template <class T>
EMSample<T> fields_from_tensor(const std::array<std::array<T, 4>, 4>& F, const SpacetimePoint<T>& x) {
  EMSample<T> s;
  s.position = x;
  s.E = {F[1][0], F[2][0], F[3][0]};
  s.B = {-F[2][3], -F[3][1], -F[1][2]};
  return s;
}

FieldTensorSample field_tensor(const PotentialField& A, const Point<double>& x);
FieldTensorSample tensor_from_fields(const EMSample<double>& s);

// E and B derived from a potential, usable wherever an EMField is expected.
EMField fields_from_potential(PotentialField A);

// One Maxwell law evaluated at a point: the signed sum and the sum of the
// magnitudes of the derivative terms that make it up.
struct LawTerms {
  double value = 0.0;
  double magnitude = 0.0;
};

struct MaxwellSample {
  LawTerms rho_e;                // div E
  std::array<LawTerms, 3> J;     // curl B - d_t E (mu0 J, scaled)
  LawTerms div_B;                // must vanish
  std::array<LawTerms, 3> faraday;  // curl E + d_t B, must vanish
  double derivative_scale = 0.0;    // largest |d_mu E_k| or |d_mu B_k|
};

MaxwellSample maxwell_sources(const EMField& F, const Point<double>& x);

// |value| / magnitude, except that a law whose terms are all negligible
// against the local derivative scale is measured against that scale instead.
double law_residual(const LawTerms& t, double derivative_scale);

struct TrajectorySample {
  double t = 0.0;
  std::array<double, 3> x{};
  std::array<double, 3> v{};
  double gamma = 1.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
};

struct ParticleState {
  double t = 0.0;
  std::array<double, 3> x{};
  std::array<double, 3> v{};
};

using FieldSampler = std::function<EMSample<double>(const Point<double>&)>;

// Boris-type split step for d(gamma v)/dt = q (E + v x B) in scaled units with
// the charge already folded into the fields: half drift, half E kick, B
// rotation, half E kick, half drift.
Trajectory lorentz_push(const ParticleState& start, const FieldSampler& fields, double dt, int steps);

struct LarmorEstimate {
  double radiated = 0.0;  // m c^2 units, over the trajectory's time span
  double kinetic = 0.0;   // mean (gamma - 1) over the samples
  double radiated_joule = 0.0;
  double kinetic_joule = 0.0;
  double ratio() const { return kinetic > 0.0 ? radiated / kinetic : 0.0; }
};

// Lienard power (2/3) alpha gamma^6 (a^2 - |v x a|^2) integrated over the
// samples; the caller pushes exactly the span of interest (one period).
LarmorEstimate larmor_estimate(const Trajectory& traj);

}  // namespace rdi
