#pragma once

#include <array>
#include <cmath>
#include <string>

#include "rdi/field.hpp"
#include "rdi/quadrature.hpp"
#include "rdi/sta.hpp"

// Closed-form families in scaled units c = hbar = m = 1. Every function that
// takes a Point<T> works for plain doubles and for nested duals; the depth a
// family supports is bounded by the depth of its free functions (D4).
namespace rdi {

const ComplexMatrix4<double>& spin_down_rotor();

// ---- planar transport family -----------------------------------------

struct PlanarTransportSpec {
  RealFunction f;   // x-trajectory
  RealFunction g;   // y-trajectory
  PlaneFunction G;  // envelope exponent shape, density ~ exp(-eB G / 2)
  double eB = 1.0;
};

template <class T>
struct PlanarVelocity {
  T fp, gp, gamma;
};

template <class T>
PlanarVelocity<T> planar_velocity(const PlanarTransportSpec& s, const T& t) {
  using std::sqrt;
  const T fp = ad::derivative(s.f, t);
  const T gp = ad::derivative(s.g, t);
  const T u2 = fp * fp + gp * gp;
  if (!(ad::value_of(u2) < 1.0))
    throw DomainError("superluminal trajectory at t = " + std::to_string(ad::value_of(t)) +
                      " (speed^2 = " + std::to_string(ad::value_of(u2)) + ")");
  return {fp, gp, 1.0 / sqrt(1.0 - u2)};
}

// Psi_b = sqrt(rho') B(gamma f', gamma g', 0) R, rho' = exp(-eB G(x',y')/2)/gamma.
template <class T>
ComplexMatrix4<T> planar_spinor_matrix(const PlanarTransportSpec& s, const Point<T>& x) {
  using std::exp;
  using std::sqrt;
  const T& t = x[0];
  const auto v = planar_velocity(s, t);
  const T xp = x[1] - s.f(t);
  const T yp = x[2] - s.g(t);
  const T root_rho = exp(-0.25 * s.eB * s.G(xp, yp)) / sqrt(v.gamma);
  return (boost(std::array<T, 3>{v.gamma * v.fp, v.gamma * v.gp, T(0.0)}) * spin_down_rotor()) * root_rho;
}

// The column sqrt(rho'/2) (0, sqrt(1+gamma), gamma (f' - i g')/sqrt(1+gamma), 0).
template <class T>
DiracColumn<T> planar_spinor(const PlanarTransportSpec& s, const Point<T>& x) {
  using std::exp;
  using std::sqrt;
  const T& t = x[0];
  const auto v = planar_velocity(s, t);
  const T xp = x[1] - s.f(t);
  const T yp = x[2] - s.g(t);
  const T rho = exp(-0.5 * s.eB * s.G(xp, yp)) / v.gamma;
  const T a = sqrt(0.5 * rho);
  const T k = sqrt(1.0 + v.gamma);
  DiracColumn<T> psi;
  psi[1] = Complex<T>(a * k, T(0.0));
  psi[2] = Complex<T>(a * v.gamma * v.fp / k, -(a * v.gamma * v.gp / k));
  return psi;
}

// eA^mu of the planar family with rho = rho'.
template <class T>
FourVector<T> planar_potential(const PlanarTransportSpec& s, const Point<T>& x) {
  using std::log;
  using U = ad::Dual<T>;
  const T& t = x[0];
  const auto lnrho = [&s](const auto& tt, const auto& xx, const auto& yy) {
    const auto v = planar_velocity(s, tt);
    return -0.5 * s.eB * s.G(xx - s.f(tt), yy - s.g(tt)) - log(v.gamma);
  };
  const T dt_ln = lnrho(ad::seed(t), U(x[1]), U(x[2])).d;
  const T dx_ln = lnrho(U(t), ad::seed(x[1]), U(x[2])).d;
  const T dy_ln = lnrho(U(t), U(x[1]), ad::seed(x[2])).d;

  const auto v = planar_velocity(s, t);
  const T v1 = v.gamma * v.fp;
  const T v2 = v.gamma * v.gp;
  const auto vel = [&s](const auto& tt) {
    const auto w = planar_velocity(s, tt);
    return std::array{w.gamma * w.fp, w.gamma * w.gp};
  };
  const auto dv = vel(ad::seed(t));
  const T v1p = dv[0].d;
  const T v2p = dv[1].d;

  const T fpp = ad::second_derivative(s.f, t);
  const T gpp = ad::second_derivative(s.g, t);
  const T den = v.fp * v.fp + v.gp * v.gp;
  // d/dt arctan(g'/f'); at rest the direction is undefined and the term is 0.
  const T dphase = ad::value_of(den) > 0.0 ? (v.fp * gpp - v.gp * fpp) / den : T(0.0);

  FourVector<T> a;
  a.kind = VectorKind::potential;
  a[0] = 0.5 * ((1.0 - v.gamma) * dphase + v2 * dx_ln - v1 * dy_ln) - v.gamma;
  a[1] = -0.5 * (v.gamma * dy_ln + v2 * dt_ln + v2p) - v1;
  a[2] = 0.5 * (v.gamma * dx_ln + v1 * dt_ln + v1p) - v2;
  a[3] = T(0.0);
  return a;
}

SpinorField planar_spinor_field(PlanarTransportSpec spec);
ColumnField planar_column_field(PlanarTransportSpec spec);
PotentialField planar_potential_field(PlanarTransportSpec spec);

// ---- elliptical Gaussian instance ------------------------------------

struct EllipseParams {
  double a1 = 0.0;
  double a2 = 0.0;
  double eB = 1.0;
  double omega = 1.0;

  // beta_i = a_i omega, b = eB/omega, mu = 1/omega in Compton units.
  static EllipseParams from_groups(double beta1, double beta2, double b, double mu);
  double max_speed() const { return omega * std::fmax(std::fabs(a1), std::fabs(a2)); }
  double period() const;
};

PlanarTransportSpec ellipse_spec(const EllipseParams& p);

// Trajectory derivatives up to third order for the structured field formula.
template <class T>
struct TrajectoryJet {
  T f0, f1, f2, f3;
  T g0, g1, g2, g3;
};

template <class T>
TrajectoryJet<T> ellipse_jet(const EllipseParams& p, const T& t) {
  using std::cos;
  using std::sin;
  const T c = cos(p.omega * t);
  const T s = sin(p.omega * t);
  const double w = p.omega;
  return {p.a1 * c,          -(p.a1 * w) * s,     -(p.a1 * w * w) * c, (p.a1 * w * w * w) * s,
          p.a2 * s,          (p.a2 * w) * c,      -(p.a2 * w * w) * s, -(p.a2 * w * w * w) * c};
}

// Exact E and B of the planar family for G = x^2 + y^2, written in packet
// coordinates x' = x - f, y' = y - g. hbar multiplies the purely quantum
// terms; hbar = 0 gives the classical-limit field.
template <class T>
EMSample<T> planar_quadratic_fields(const TrajectoryJet<T>& j, const Point<T>& x, double eB, double hbar) {
  using std::sqrt;
  const T xp = x[1] - j.f0;
  const T yp = x[2] - j.g0;
  const T u2 = j.f1 * j.f1 + j.g1 * j.g1;
  if (!(ad::value_of(u2) < 1.0)) throw DomainError("superluminal trajectory in field evaluation");
  const T gm = 1.0 / sqrt(1.0 - u2);
  const T w = j.f1 * j.f2 + j.g1 * j.g2;
  const T wp = j.f2 * j.f2 + j.f1 * j.f3 + j.g2 * j.g2 + j.g1 * j.g3;
  const T g2 = gm * gm;
  const T gp = g2 * gm * w;
  const T gpp = 3.0 * g2 * g2 * gm * w * w + g2 * gm * wp;

  const T v1 = gm * j.f1, v2 = gm * j.g1;
  const T v1p = gp * j.f1 + gm * j.f2, v2p = gp * j.g1 + gm * j.g2;
  const T v1pp = gpp * j.f1 + 2.0 * gp * j.f2 + gm * j.f3;
  const T v2pp = gpp * j.g1 + 2.0 * gp * j.g2 + gm * j.g3;
  const T L = g2 * w;  // gamma'/gamma
  const T Lp = 2.0 * gm * gp * w + g2 * wp;
  const T q = xp * j.f1 + yp * j.g1;
  const T qp = xp * j.f2 + yp * j.g2 - u2;

  EMSample<T> out;
  out.position = x;
  out.E[0] = eB * gm * j.g1 - 0.5 * eB * gp * yp + 0.5 * eB * (qp * v2 + q * v2p) -
             0.5 * hbar * (Lp * v2 + L * v2p) + 0.5 * hbar * v2pp + v1p;
  out.E[1] = -(eB * gm * j.f1) + 0.5 * eB * gp * xp - 0.5 * eB * (qp * v1 + q * v1p) +
             0.5 * hbar * (Lp * v1 + L * v1p) - 0.5 * hbar * v1pp + v2p;
  out.E[2] = T(0.0);
  out.B[0] = T(0.0);
  out.B[1] = T(0.0);
  out.B[2] = -0.5 * eB * (gm + 1.0 / gm);
  return out;
}

template <class T>
EMSample<T> ellipse_fields(const EllipseParams& p, const Point<T>& x, double hbar = 1.0) {
  if (!(p.max_speed() < 1.0)) throw DomainError("superluminal ellipse: omega * max(a1, a2) >= c");
  return planar_quadratic_fields(ellipse_jet(p, x[0]), x, p.eB, hbar);
}

enum class EllipseLimit { nonrel, relativistic, classical };

EllipseLimit parse_ellipse_limit(const std::string& name);

template <class T>
EMSample<T> ellipse_limit_fields(EllipseLimit kind, const EllipseParams& p, const Point<T>& x) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  EMSample<T> out;
  out.position = x;
  const double w = p.omega;
  const T c = cos(w * x[0]);
  const T s = sin(w * x[0]);
  switch (kind) {
    case EllipseLimit::nonrel:
      out.E[0] = (w * (p.a2 * p.eB - p.a1 * w)) * c;
      out.E[1] = (w * (p.a1 * p.eB - p.a2 * w)) * s;
      out.B[2] = T(-p.eB);
      return out;
    case EllipseLimit::relativistic: {
      const double d = p.a1 * p.a1 - p.a2 * p.a2;
      if (d == 0.0) throw DomainError("relativistic ellipse limit is undefined for a1 = a2");
      const T u2 = (w * w) * (p.a1 * p.a1 * s * s + p.a2 * p.a2 * c * c);
      const T gm = 1.0 / sqrt(1.0 - u2);
      out.E[0] = (p.eB * w) * gm * (p.a2 * c - (p.a2 * p.a1 / (2.0 * d)) * x[1]);
      out.E[1] = (p.eB * w) * gm * (p.a1 * s + (p.a1 * p.a2 / (2.0 * d)) * x[2]);
      out.B[2] = -0.5 * p.eB * gm;
      return out;
    }
    case EllipseLimit::classical:
      return ellipse_fields(p, x, 0.0);
  }
  return out;
}

// ---- generalized Volkov family ----------------------------------------

struct VolkovFamilySpec {
  RealFunction f1, f2;  // plane-wave profiles of xi
  RealFunction pz;      // longitudinal momentum profile
  PlaneFunction G;
  PhaseFunction phi;  // empty: the gauge with eA^0 = 0
  double omega = 1.0;
  double eB = 1.0;
  // Closed-form coordinate shifts x' - x and y' - y as functions of xi; when
  // empty they are integrated numerically.
  RealFunction shift_x, shift_y;
  quad::Options quadrature{};
};

template <class T>
T volkov_p0(const T& pz) {
  using std::sqrt;
  return sqrt(1.0 + pz * pz);
}

template <class T>
T volkov_xi(const VolkovFamilySpec& s, const Point<T>& x) {
  return s.omega * (x[0] - x[3]);
}

// int_0^xi (pz + p0) f_i'(phi) / omega^2 dphi, i = 1, 2, by quadrature.
template <class T>
std::array<T, 2> volkov_shift_quadrature(const VolkovFamilySpec& s, const T& xi) {
  const double w2 = s.omega * s.omega;
  const auto hx = [&s, w2](const T& phi) {
    const T pz = s.pz(phi);
    return (pz + volkov_p0(pz)) * ad::derivative(s.f1, phi) / w2;
  };
  const auto hy = [&s, w2](const T& phi) {
    const T pz = s.pz(phi);
    return (pz + volkov_p0(pz)) * ad::derivative(s.f2, phi) / w2;
  };
  return {quad::integrate_from_zero(hx, xi, s.quadrature), quad::integrate_from_zero(hy, xi, s.quadrature)};
}

template <class T>
std::array<T, 2> volkov_shift(const VolkovFamilySpec& s, const T& xi) {
  if (s.shift_x && s.shift_y) return {s.shift_x(xi), s.shift_y(xi)};
  return volkov_shift_quadrature(s, xi);
}

// The integrand d Phi / d xi of the eA^0 = 0 gauge at (xi, x, y).
template <class T>
T volkov_gauge_rate(const VolkovFamilySpec& s, const T& xi, const T& x, const T& y) {
  const T pz = s.pz(xi);
  const T p0 = volkov_p0(pz);
  const T f1p = ad::derivative(s.f1, xi);
  const T f2p = ad::derivative(s.f2, xi);
  const auto sh = volkov_shift(s, xi);
  const T xp = x + sh[0];
  const T yp = y + sh[1];
  const T gx = partial_x(s.G, xp, yp);
  const T gy = partial_y(s.G, xp, yp);
  const double w = s.omega;
  return ((pz + p0) * (f1p * f1p + f2p * f2p) / (2.0 * w * w) + p0 +
          (pz + p0) * (s.eB / (4.0 * w)) * (f1p * gy - f2p * gx)) /
         w;
}

// Phi for the eA^0 = 0 gauge, integrated in xi from 0.
PhaseFunction volkov_default_phase(const VolkovFamilySpec& spec);

// Returns spec with phi filled in by the default gauge when it is empty.
VolkovFamilySpec resolve_gauge(VolkovFamilySpec spec);

// Psi_T = sqrt(pz+p0) (1 - kA/(2 omega (p0-pz))) B_z(pz) exp(-eB G(x',y')/4) R exp(-gamma2 gamma1 Phi).
// spec.phi must be set (see resolve_gauge).
template <class T>
ComplexMatrix4<T> volkov_spinor_matrix(const VolkovFamilySpec& s, const Point<T>& x) {
  using std::exp;
  using std::sqrt;
  const T xi = volkov_xi(s, x);
  const T pz = s.pz(xi);
  const T p0 = volkov_p0(pz);
  if (!(ad::value_of(p0 - pz) > 0.0)) throw DomainError("p0 - pz must be positive");
  const auto sh = volkov_shift(s, xi);
  const T xp = x[1] + sh[0];
  const T yp = x[2] + sh[1];
  const T f1p = ad::derivative(s.f1, xi);
  const T f2p = ad::derivative(s.f2, xi);
  const ComplexMatrix4<T> nb = null_bivector_exp(f1p, f2p, T(-0.5 / s.omega) / (p0 - pz));
  const T amp = sqrt(pz + p0) * exp(-0.25 * s.eB * s.G(xp, yp));
  const ComplexMatrix4<T> bz = boost(std::array<T, 3>{T(0.0), T(0.0), pz});
  return ((nb * bz) * spin_down_rotor()) * exp_gamma21(-s.phi(xi, x[1], x[2])) * amp;
}

// The four-component column as displayed for this family.
template <class T>
DiracColumn<T> volkov_spinor(const VolkovFamilySpec& s, const Point<T>& x) {
  using std::exp;
  using std::sqrt;
  const T xi = volkov_xi(s, x);
  const T pz = s.pz(xi);
  const T p0 = volkov_p0(pz);
  if (!(ad::value_of(p0 - pz) > 0.0)) throw DomainError("p0 - pz must be positive");
  const auto sh = volkov_shift(s, xi);
  const T xp = x[1] + sh[0];
  const T yp = x[2] + sh[1];
  const T f1p = ad::derivative(s.f1, xi);
  const T f2p = ad::derivative(s.f2, xi);
  const T root = sqrt(1.0 + p0);
  const T amp = sqrt(pz + p0) * exp(-0.25 * s.eB * s.G(xp, yp));
  const Complex<T> pref = expi(-s.phi(xi, x[1], x[2])) * amp;
  const T k = -(1.0 - pz + p0) / (2.0 * std::sqrt(2.0) * s.omega * root * (p0 - pz));
  const Complex<T> c1(k * f1p, -(k * f2p));
  DiracColumn<T> psi;
  psi[0] = pref * c1;
  psi[1] = pref * (root / std::sqrt(2.0));
  psi[2] = pref * c1;
  psi[3] = pref * (-pz / (std::sqrt(2.0) * root));
  return psi;
}

// eA^mu of the family, including the Phi partials and G gradients.
template <class T>
FourVector<T> volkov_potential(const VolkovFamilySpec& s, const Point<T>& x) {
  using U = ad::Dual<T>;
  const T xi = volkov_xi(s, x);
  const T pz = s.pz(xi);
  const T p0 = volkov_p0(pz);
  if (!(ad::value_of(p0 - pz) > 0.0)) throw DomainError("p0 - pz must be positive");
  const auto sh = volkov_shift(s, xi);
  const T xp = x[1] + sh[0];
  const T yp = x[2] + sh[1];
  const T f1p = ad::derivative(s.f1, xi);
  const T f2p = ad::derivative(s.f2, xi);
  const T gx = partial_x(s.G, xp, yp);
  const T gy = partial_y(s.G, xp, yp);
  const T phi_xi = s.phi(ad::seed(xi), U(x[1]), U(x[2])).d;
  const T phi_x = s.phi(U(xi), ad::seed(x[1]), U(x[2])).d;
  const T phi_y = s.phi(U(xi), U(x[1]), ad::seed(x[2])).d;
  const double w = s.omega;
  FourVector<T> a;
  a.kind = VectorKind::potential;
  a[0] = w * phi_xi - (pz + p0) * (f1p * f1p + f2p * f2p) / (2.0 * w * w) - p0 -
         (pz + p0) * (s.eB / (4.0 * w)) * (f1p * gy - f2p * gx);
  a[1] = 0.5 * (0.5 * s.eB * gy - 2.0 * phi_x) + f1p / w;
  a[2] = -0.5 * (0.5 * s.eB * gx + 2.0 * phi_y) + f2p / w;
  a[3] = a[0] - pz + p0;
  return a;
}

// E and B of the family with the Laplacian-of-G terms.
template <class T>
EMSample<T> volkov_fields(const VolkovFamilySpec& s, const Point<T>& x) {
  using U = ad::Dual<T>;
  const T xi = volkov_xi(s, x);
  const T pz = s.pz(xi);
  const T p0 = volkov_p0(pz);
  if (!(ad::value_of(p0 - pz) > 0.0)) throw DomainError("p0 - pz must be positive");
  const auto sh = volkov_shift(s, xi);
  const T xp = x[1] + sh[0];
  const T yp = x[2] + sh[1];
  const auto gx = [&s](const U& a, const U& b) { return partial_x(s.G, a, b); };
  const auto gy = [&s](const U& a, const U& b) { return partial_y(s.G, a, b); };
  const T lap = gx(ad::seed(xp), U(yp)).d + gy(U(xp), ad::seed(yp)).d;
  const T f1p = ad::derivative(s.f1, xi);
  const T f2p = ad::derivative(s.f2, xi);
  const T f1pp = ad::second_derivative(s.f1, xi);
  const T f2pp = ad::second_derivative(s.f2, xi);
  const T pzp = ad::derivative(s.pz, xi);
  const T drift = (s.eB / (4.0 * s.omega)) * (pz + p0) * lap;
  EMSample<T> out;
  out.position = x;
  out.B[0] = -(drift * f1p) + f2pp;
  out.B[1] = -(drift * f2p) - f1pp;
  out.B[2] = -0.25 * s.eB * lap;
  out.E[0] = out.B[1];
  out.E[1] = -out.B[0];
  out.E[2] = s.omega * pzp * (1.0 - pz / p0);
  return out;
}

struct Sources {
  double rho_e = 0.0;
  std::array<double, 3> J{};  // mu0 J in scaled units
};

// Closed-form charge and current densities generating volkov_fields.
Sources volkov_sources(const VolkovFamilySpec& spec, const Point<double>& x);

SpinorField volkov_spinor_field(VolkovFamilySpec spec);
ColumnField volkov_column_field(VolkovFamilySpec spec);
PotentialField volkov_potential_field(VolkovFamilySpec spec);
EMField volkov_field(VolkovFamilySpec spec);

// ---- named Volkov-family instances ------------------------------------

// f1 = a0 (cos xi - 1), f2 = -a0 sin xi, G = x^2 + y^2, pz = 0.
struct CircleParams {
  double a0 = 0.0;  // amplitude of f_i in scaled units (a0~ * omega)
  double eB = 1.0;
  double omega = 1.0;

  // a0~ = e a0 / (m omega), b = eB/omega, mu = 1/omega.
  static CircleParams from_groups(double a0_tilde, double b, double mu);
  double radius() const { return a0 / (omega * omega); }
};

// With closed-form shifts and the explicit eA^0 = 0 phase of this instance.
VolkovFamilySpec circle_spec(const CircleParams& p);

struct Observables {
  FourVector<double> current;
  FourVector<double> spin;
};

// Closed-form Dirac current and spin density of the circular instance.
Observables appendixD_observables(const CircleParams& p, const Point<double>& x);

// pz(xi) = -xi (2a + xi) / (2a (a + xi)).
template <class T>
T bagrov_pz_t(const T& xi, double a) {
  return -(xi * (2.0 * a + xi)) / ((2.0 * a) * (a + xi));
}
double bagrov_pz(double xi, double a);

// Residual of pz'^2 - p0^2 (p0 - pz) pz'' = 0 relative to its largest term.
double bagrov_ode_residual(double xi, double a);

// Circular drive with the source-free longitudinal momentum profile; shifts
// and the gauge are computed numerically.
struct BagrovParams {
  CircleParams circle;
  double a = 1.0;
};
VolkovFamilySpec bagrov_spec(const BagrovParams& p);

// Circular drive with an inhomogeneous envelope G = x^2 + y^2 + kappa (x^4 + y^4)
// and pz = pz_amplitude sin(xi): the general, sourced member of the family.
struct InhomogeneousParams {
  CircleParams circle;
  double kappa = 0.1;
  double pz_amplitude = 0.2;
};
VolkovFamilySpec inhomogeneous_spec(const InhomogeneousParams& p);

}  // namespace rdi
