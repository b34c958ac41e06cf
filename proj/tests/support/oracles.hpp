#pragma once

// Test-side reference implementations. They are written independently of the
// library: plain doubles, hand-derived derivatives, Eigen for matrix algebra.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "rdi/rdi.hpp"
#include "rdi/solutions.hpp"

namespace oracle {

using Mat = Eigen::Matrix<std::complex<double>, 4, 4>;
using cd = std::complex<double>;

inline constexpr std::uint64_t kSeed = 0x5eed'2024'0917ULL;

// Contravariant Dirac-representation gamma matrices.
inline Mat gamma_upper(int mu) {
  const cd i(0.0, 1.0);
  Eigen::Matrix2cd s;
  switch (mu) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -i, i, 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: break;
  }
  Mat g = Mat::Zero();
  if (mu == 0) {
    g.diagonal() << 1, 1, -1, -1;
  } else {
    g.block<2, 2>(0, 2) = s;
    g.block<2, 2>(2, 0) = -s;
  }
  return g;
}

inline Mat gamma_lower(int mu) { return mu == 0 ? gamma_upper(0) : Mat(-gamma_upper(mu)); }

inline Mat to_eigen(const rdi::ComplexMatrix4<double>& m) {
  Mat r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = cd(m(i, j).re, m(i, j).im);
  return r;
}

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

// ---- ellipse transport: closed-form potential ---------------------------

// f = a1 cos(w t), g = a2 sin(w t), density exp(-eB (x'^2 + y'^2)/2)/gamma.
inline std::array<double, 4> ellipse_potential(const rdi::EllipseParams& p, double t, double x, double y) {
  const double w = p.omega;
  const double c = std::cos(w * t), s = std::sin(w * t);
  const double f = p.a1 * c, g = p.a2 * s;
  const double fp = -p.a1 * w * s, gp = p.a2 * w * c;
  const double fpp = -p.a1 * w * w * c, gpp = -p.a2 * w * w * s;
  const double u2 = fp * fp + gp * gp;
  const double gam = 1.0 / std::sqrt(1.0 - u2);
  const double gam_dot = gam * gam * gam * (fp * fpp + gp * gpp);
  const double xp = x - f, yp = y - g;
  const double dx_ln = -p.eB * xp;
  const double dy_ln = -p.eB * yp;
  const double dt_ln = p.eB * (xp * fp + yp * gp) - gam_dot / gam;
  const double v1 = gam * fp, v2 = gam * gp;
  const double v1_dot = gam_dot * fp + gam * fpp;
  const double v2_dot = gam_dot * gp + gam * gpp;
  const double dphase = u2 > 0.0 ? (fp * gpp - gp * fpp) / u2 : 0.0;
  return {0.5 * ((1.0 - gam) * dphase + v2 * dx_ln - v1 * dy_ln) - gam,
          -0.5 * (gam * dy_ln + v2 * dt_ln + v2_dot) - v1,
          0.5 * (gam * dx_ln + v1 * dt_ln + v1_dot) - v2,
          0.0};
}

inline double ellipse_gamma(const rdi::EllipseParams& p, double t) {
  const double fp = -p.a1 * p.omega * std::sin(p.omega * t);
  const double gp = p.a2 * p.omega * std::cos(p.omega * t);
  return 1.0 / std::sqrt(1.0 - fp * fp - gp * gp);
}

// ---- circular Redmond instance: closed-form potential --------------------

// f1 = a0 (cos xi - 1), f2 = -a0 sin xi, G = x^2 + y^2, pz = 0, with the
// phase that removes eA^0.
inline std::array<double, 4> redmond_potential(const rdi::CircleParams& p, double t, double x, double y,
                                               double z) {
  const double w = p.omega, a0 = p.a0, eB = p.eB;
  const double xi = w * (t - z);
  const double c = std::cos(xi), s = std::sin(xi);
  const double f1p = -a0 * s, f2p = -a0 * c;
  const double xp = x + a0 * (c - 1.0) / (w * w);
  const double yp = y - a0 * s / (w * w);
  const double w4 = w * w * w * w;
  const double phi_xi = (a0 * a0 * (eB + w) + 2.0 * w * w * w + a0 * eB * (w * w * (x * c - y * s) - a0 * c)) /
                        (2.0 * w4);
  const double phi_x = a0 * eB * s / (2.0 * w * w);
  const double phi_y = a0 * eB * c / (2.0 * w * w);
  const double a_0 = -(f1p * f1p + f2p * f2p) / (2.0 * w * w) + w * phi_xi - 1.0 -
                     eB * (yp * f1p - xp * f2p) / (2.0 * w);
  return {a_0, -phi_x + f1p / w + 0.5 * eB * yp, -phi_y + f2p / w - 0.5 * eB * xp, a_0 + 1.0};
}

// ---- Bagrov profile ------------------------------------------------------

// pz = -(u^2 - a^2)/(2 a u) with u = a + xi.
struct BagrovJet {
  double pz, d1, d2;
};
inline BagrovJet bagrov_jet(double xi, double a) {
  const double u = a + xi;
  return {-(u * u - a * a) / (2.0 * a * u), -1.0 / (2.0 * a) - a / (2.0 * u * u), a / (u * u * u)};
}

// ---- generalized Volkov sources for the quartic envelope ------------------

// G = x^2 + y^2 + kappa (x^4 + y^4), pz = amp sin xi, circular drive. The
// coordinate shift is integrated with composite Simpson on 4000 panels.
struct SourceOracle {
  double rho_e;
  std::array<double, 3> J;
};

inline SourceOracle inhomogeneous_sources(const rdi::InhomogeneousParams& ip, double t, double x, double y,
                                          double z) {
  const auto& c = ip.circle;
  const double w = c.omega, a0 = c.a0, eB = c.eB, k = ip.kappa, amp = ip.pz_amplitude;
  const double xi = w * (t - z);
  const auto pz = [&](double q) { return amp * std::sin(q); };
  const auto p0 = [&](double q) { return std::sqrt(1.0 + pz(q) * pz(q)); };
  const auto f1p = [&](double q) { return -a0 * std::sin(q); };
  const auto f2p = [&](double q) { return -a0 * std::cos(q); };
  const int n = 4000;
  const double h = xi / n;
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double q = i * h;
    const double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sx += wgt * (pz(q) + p0(q)) * f1p(q);
    sy += wgt * (pz(q) + p0(q)) * f2p(q);
  }
  const double xp = x + sx * h / 3.0 / (w * w);
  const double yp = y + sy * h / 3.0 / (w * w);
  const double P = pz(xi), P0 = p0(xi);
  const double Pd = amp * std::cos(xi), Pdd = -amp * std::sin(xi);
  const double dx_lap = 24.0 * k * xp;
  const double dy_lap = 24.0 * k * yp;
  const double rho = (4.0 * w * w * w * Pd * Pd / (P0 * P0 * P0) - 4.0 * w * w * w * Pdd * (1.0 - P / P0) +
                      eB * (P0 + P) * (f1p(xi) * dy_lap - f2p(xi) * dx_lap)) /
                     (4.0 * w);
  return {rho, {-0.25 * eB * dy_lap, 0.25 * eB * dx_lap, rho}};
}

// ---- free plane waves --------------------------------------------------------

// Psi = R0 * exp(gamma2 gamma1 phase) with phase = -/+ p.x for the positive /
// negative energy branch; R0 carries the boost, a rotor, density and (for
// the negative branch) the pseudoscalar factor I.
struct PlaneWave {
  std::array<double, 3> u{};
  std::array<double, 3> theta{};
  double rho = 1.0;
  bool negative = false;

  template <class T>
  rdi::ComplexMatrix4<T> operator()(const rdi::Point<T>& x) const {
    const double e = std::sqrt(1.0 + u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    const T px = x[0] * e - x[1] * u[0] - x[2] * u[1] - x[3] * u[2];
    rdi::ComplexMatrix4<double> r0 = rdi::boost(u) * rdi::rotor(theta) * std::sqrt(rho);
    if (negative) r0 = r0 * rdi::pseudoscalar();
    return r0 * rdi::exp_gamma21(negative ? px : T(-px));
  }
};

// ---- random helpers ------------------------------------------------------------

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * std::generate_canonical<double, 53>(rng);
}

inline std::array<double, 3> random_vec3(std::mt19937_64& rng, double scale) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline rdi::DiracColumn<double> random_column(std::mt19937_64& rng) {
  rdi::DiracColumn<double> c;
  for (int i = 0; i < 4; ++i) c[i] = rdi::Complex<double>(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return c;
}

}  // namespace oracle
