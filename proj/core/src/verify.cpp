#include "rdi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdi/units.hpp"

namespace rdi {
namespace {

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

LawTerms combine(std::initializer_list<double> terms) {
  LawTerms t;
  for (double v : terms) {
    t.value += v;
    t.magnitude += std::fabs(v);
  }
  return t;
}

double gamma_of_u(const Vec3& u) { return std::sqrt(1.0 + dot(u, u)); }

Vec3 velocity_of_u(const Vec3& u) {
  const double g = gamma_of_u(u);
  return {u[0] / g, u[1] / g, u[2] / g};
}

TrajectorySample sample_of(double t, const Vec3& x, const Vec3& u) {
  return {t, x, velocity_of_u(u), gamma_of_u(u)};
}

}  // namespace

FieldTensorSample field_tensor(const PotentialField& A, const Point<double>& x) {
  return {field_tensor_components(A, x)};
}

FieldTensorSample tensor_from_fields(const EMSample<double>& s) {
  FieldTensorSample f;
  for (int k = 0; k < 3; ++k) {
    f.F[k + 1][0] = s.E[k];
    f.F[0][k + 1] = -s.E[k];
  }
  f.F[2][3] = -s.B[0];
  f.F[3][2] = s.B[0];
  f.F[3][1] = -s.B[1];
  f.F[1][3] = s.B[1];
  f.F[1][2] = -s.B[2];
  f.F[2][1] = s.B[2];
  return f;
}

EMField fields_from_potential(PotentialField A) {
  return EMField([A = std::move(A)](const auto& x) { return fields_from_tensor(field_tensor_components(A, x), x); });
}

MaxwellSample maxwell_sources(const EMField& F, const Point<double>& x) {
  // dE[mu][k] = d_mu E_k, likewise for B.
  std::array<Vec3, 4> dE{}, dB{};
  for (int mu = 0; mu < 4; ++mu) {
    const EMSample<double> t = tangent(F(seed_point(x, mu)));
    dE[mu] = t.E;
    dB[mu] = t.B;
  }
  MaxwellSample m;
  m.rho_e = combine({dE[1][0], dE[2][1], dE[3][2]});
  m.J[0] = combine({dB[2][2], -dB[3][1], -dE[0][0]});
  m.J[1] = combine({dB[3][0], -dB[1][2], -dE[0][1]});
  m.J[2] = combine({dB[1][1], -dB[2][0], -dE[0][2]});
  m.div_B = combine({dB[1][0], dB[2][1], dB[3][2]});
  m.faraday[0] = combine({dE[2][2], -dE[3][1], dB[0][0]});
  m.faraday[1] = combine({dE[3][0], -dE[1][2], dB[0][1]});
  m.faraday[2] = combine({dE[1][1], -dE[2][0], dB[0][2]});
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < 3; ++k)
      m.derivative_scale = std::max({m.derivative_scale, std::fabs(dE[mu][k]), std::fabs(dB[mu][k])});
  return m;
}

double law_residual(const LawTerms& t, double derivative_scale) {
  constexpr double negligible = 1e-12;
  if (t.magnitude > negligible * derivative_scale && t.magnitude > 0.0) return std::fabs(t.value) / t.magnitude;
  if (derivative_scale > 0.0) return std::fabs(t.value) / derivative_scale;
  return std::fabs(t.value);
}

Trajectory lorentz_push(const ParticleState& start, const FieldSampler& fields, double dt, int steps) {
  if (!(dt > 0.0) || steps < 0) throw ArgumentError("lorentz_push needs dt > 0 and steps >= 0");
  const double v2 = dot(start.v, start.v);
  if (!(v2 < 1.0)) throw DomainError("initial speed must be below c");
  const double g0 = 1.0 / std::sqrt(1.0 - v2);
  Vec3 u{g0 * start.v[0], g0 * start.v[1], g0 * start.v[2]};
  Vec3 x = start.x;
  double t = start.t;

  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(steps) + 1);
  traj.samples.push_back(sample_of(t, x, u));
  for (int n = 0; n < steps; ++n) {
    Vec3 v = velocity_of_u(u);
    Vec3 xh{x[0] + 0.5 * dt * v[0], x[1] + 0.5 * dt * v[1], x[2] + 0.5 * dt * v[2]};
    const EMSample<double> f = fields(Point<double>(t + 0.5 * dt, xh[0], xh[1], xh[2]));

    Vec3 um{u[0] + 0.5 * dt * f.E[0], u[1] + 0.5 * dt * f.E[1], u[2] + 0.5 * dt * f.E[2]};
    const double gm = gamma_of_u(um);
    const Vec3 tv{0.5 * dt * f.B[0] / gm, 0.5 * dt * f.B[1] / gm, 0.5 * dt * f.B[2] / gm};
    const double t2 = dot(tv, tv);
    if (2.0 * std::sqrt(t2) > std::numbers::pi / 4.0)
      throw ConfigError("time step too large: magnetic rotation angle per step exceeds pi/4", "dt");
    const Vec3 c1 = cross(um, tv);
    const Vec3 up{um[0] + c1[0], um[1] + c1[1], um[2] + c1[2]};
    const double s = 2.0 / (1.0 + t2);
    const Vec3 c2 = cross(up, tv);
    const Vec3 ur{um[0] + s * c2[0], um[1] + s * c2[1], um[2] + s * c2[2]};
    u = {ur[0] + 0.5 * dt * f.E[0], ur[1] + 0.5 * dt * f.E[1], ur[2] + 0.5 * dt * f.E[2]};

    v = velocity_of_u(u);
    x = {xh[0] + 0.5 * dt * v[0], xh[1] + 0.5 * dt * v[1], xh[2] + 0.5 * dt * v[2]};
    t = start.t + (n + 1) * dt;
    traj.samples.push_back(sample_of(t, x, u));
  }
  return traj;
}

LarmorEstimate larmor_estimate(const Trajectory& traj) {
  LarmorEstimate out;
  const auto& s = traj.samples;
  const std::size_t n = s.size();
  if (n < 3) return out;
  std::vector<double> power(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i == 0 ? 0 : i - 1;
    const std::size_t hi = i + 1 == n ? n - 1 : i + 1;
    const double h = s[hi].t - s[lo].t;
    Vec3 a{};
    for (int k = 0; k < 3; ++k) a[k] = (s[hi].v[k] - s[lo].v[k]) / h;
    const Vec3 va = cross(s[i].v, a);
    const double g2 = s[i].gamma * s[i].gamma;
    power[i] = (2.0 / 3.0) * units::codata::alpha * g2 * g2 * g2 * (dot(a, a) - dot(va, va));
  }
  double kinetic = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) out.radiated += 0.5 * (power[i] + power[i + 1]) * (s[i + 1].t - s[i].t);
    // gamma - 1 without cancellation.
    const double u2 = dot(s[i].v, s[i].v) * s[i].gamma * s[i].gamma;
    kinetic += u2 / (s[i].gamma + 1.0);
  }
  out.kinetic = kinetic / static_cast<double>(n);
  out.radiated_joule = out.radiated * units::energy_unit;
  out.kinetic_joule = out.kinetic * units::energy_unit;
  return out;
}

}  // namespace rdi
