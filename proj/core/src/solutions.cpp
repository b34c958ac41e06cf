#include "rdi/solutions.hpp"

#include <algorithm>
#include <numbers>

namespace rdi {
namespace {

template <class P>
using scalar_t = typename std::decay_t<P>::value_type;

const PlaneFunction& quadratic_envelope() {
  static const PlaneFunction g([](const auto& x, const auto& y) { return x * x + y * y; });
  return g;
}

}  // namespace

const ComplexMatrix4<double>& spin_down_rotor() {
  static const ComplexMatrix4<double> r = [] {
    ComplexMatrix4<double> m;
    m(0, 1) = Complex<double>(-1.0);
    m(1, 0) = Complex<double>(1.0);
    m(2, 3) = Complex<double>(-1.0);
    m(3, 2) = Complex<double>(1.0);
    return m;
  }();
  return r;
}

SpinorField planar_spinor_field(PlanarTransportSpec spec) {
  return SpinorField([spec = std::move(spec)](const auto& x) {
    return MatrixSpinor<scalar_t<decltype(x)>>{planar_spinor_matrix(spec, x)};
  });
}

ColumnField planar_column_field(PlanarTransportSpec spec) {
  return ColumnField([spec = std::move(spec)](const auto& x) { return planar_spinor(spec, x); });
}

PotentialField planar_potential_field(PlanarTransportSpec spec) {
  return PotentialField([spec = std::move(spec)](const auto& x) { return planar_potential(spec, x); });
}

EllipseParams EllipseParams::from_groups(double beta1, double beta2, double b, double mu) {
  return {beta1 * mu, beta2 * mu, b / mu, 1.0 / mu};
}

double EllipseParams::period() const { return 2.0 * std::numbers::pi / omega; }

PlanarTransportSpec ellipse_spec(const EllipseParams& p) {
  if (!(p.max_speed() < 1.0)) throw DomainError("superluminal ellipse: omega * max(a1, a2) >= c");
  PlanarTransportSpec s;
  s.f = RealFunction([p](const auto& t) {
    using std::cos;
    return p.a1 * cos(p.omega * t);
  });
  s.g = RealFunction([p](const auto& t) {
    using std::sin;
    return p.a2 * sin(p.omega * t);
  });
  s.G = quadratic_envelope();
  s.eB = p.eB;
  return s;
}

EllipseLimit parse_ellipse_limit(const std::string& name) {
  if (name == "nonrel") return EllipseLimit::nonrel;
  if (name == "relativistic") return EllipseLimit::relativistic;
  if (name == "classical") return EllipseLimit::classical;
  throw ArgumentError("unknown ellipse limit: " + name);
}

PhaseFunction volkov_default_phase(const VolkovFamilySpec& spec) {
  return PhaseFunction([s = spec](const auto& xi, const auto& x, const auto& y) {
    using T = std::decay_t<decltype(xi)>;
    const auto rate = [&](const T& phi) { return volkov_gauge_rate(s, phi, x, y); };
    return quad::integrate_from_zero(rate, xi, s.quadrature);
  });
}

VolkovFamilySpec resolve_gauge(VolkovFamilySpec spec) {
  if (!spec.phi) spec.phi = volkov_default_phase(spec);
  return spec;
}

Sources volkov_sources(const VolkovFamilySpec& s, const Point<double>& x) {
  using U = ad::Dual<double>;
  const double xi = volkov_xi(s, x);
  const double pz = s.pz(xi);
  const double p0 = volkov_p0(pz);
  if (!(p0 - pz > 0.0)) throw DomainError("p0 - pz must be positive");
  const auto sh = volkov_shift(s, xi);
  const double xp = x[1] + sh[0];
  const double yp = x[2] + sh[1];
  const auto lap = [&s](const auto& a, const auto& b) {
    using V = std::decay_t<decltype(a)>;
    using W = ad::Dual<V>;
    const auto gx = [&s](const W& p, const W& q) { return partial_x(s.G, p, q); };
    const auto gy = [&s](const W& p, const W& q) { return partial_y(s.G, p, q); };
    return gx(ad::seed(a), W(b)).d + gy(W(a), ad::seed(b)).d;
  };
  const double lap_x = lap(ad::seed(xp), U(yp)).d;
  const double lap_y = lap(U(xp), ad::seed(yp)).d;
  const double f1p = ad::derivative(s.f1, xi);
  const double f2p = ad::derivative(s.f2, xi);
  const double pzp = ad::derivative(s.pz, xi);
  const double pzpp = ad::second_derivative(s.pz, xi);
  const double w = s.omega;
  Sources out;
  out.rho_e = (4.0 * w * w * w * pzp * pzp / (p0 * p0 * p0) - 4.0 * w * w * w * pzpp * (1.0 - pz / p0) +
               s.eB * (p0 + pz) * (f1p * lap_y - f2p * lap_x)) /
              (4.0 * w);
  out.J = {-0.25 * s.eB * lap_y, 0.25 * s.eB * lap_x, out.rho_e};
  return out;
}

SpinorField volkov_spinor_field(VolkovFamilySpec spec) {
  return SpinorField([s = resolve_gauge(std::move(spec))](const auto& x) {
    return MatrixSpinor<scalar_t<decltype(x)>>{volkov_spinor_matrix(s, x)};
  });
}

ColumnField volkov_column_field(VolkovFamilySpec spec) {
  return ColumnField([s = resolve_gauge(std::move(spec))](const auto& x) { return volkov_spinor(s, x); });
}

PotentialField volkov_potential_field(VolkovFamilySpec spec) {
  return PotentialField([s = resolve_gauge(std::move(spec))](const auto& x) { return volkov_potential(s, x); });
}

EMField volkov_field(VolkovFamilySpec spec) {
  return EMField([s = std::move(spec)](const auto& x) { return volkov_fields(s, x); });
}

CircleParams CircleParams::from_groups(double a0_tilde, double b, double mu) {
  const double w = 1.0 / mu;
  return {a0_tilde * w, b * w, w};
}

VolkovFamilySpec circle_spec(const CircleParams& p) {
  VolkovFamilySpec s;
  s.f1 = RealFunction([p](const auto& xi) {
    using std::cos;
    return p.a0 * (cos(xi) - 1.0);
  });
  s.f2 = RealFunction([p](const auto& xi) {
    using std::sin;
    return -(p.a0 * sin(xi));
  });
  s.pz = RealFunction([](const auto& xi) { return 0.0 * xi; });
  s.G = quadratic_envelope();
  s.omega = p.omega;
  s.eB = p.eB;
  const double w2 = p.omega * p.omega;
  s.shift_x = RealFunction([p, w2](const auto& xi) {
    using std::cos;
    return (p.a0 / w2) * (cos(xi) - 1.0);
  });
  s.shift_y = RealFunction([p, w2](const auto& xi) {
    using std::sin;
    return -(p.a0 / w2) * sin(xi);
  });
  s.phi = PhaseFunction([p](const auto& xi, const auto& x, const auto& y) {
    using std::cos;
    using std::sin;
    const double w = p.omega;
    const double a0 = p.a0;
    return (xi * (a0 * a0 * (p.eB + w) + 2.0 * w * w * w) +
            (a0 * p.eB) * ((w * w) * (x * sin(xi) + y * cos(xi)) - a0 * sin(xi))) /
           (2.0 * w * w * w * w);
  });
  return s;
}

Observables appendixD_observables(const CircleParams& p, const Point<double>& x) {
  const double w = p.omega;
  const double a0 = p.a0;
  const double xi = w * (x[0] - x[3]);
  const double u = a0 * (std::cos(xi) - 1.0) + x[1] * w * w;
  const double v = -a0 * std::sin(xi) + x[2] * w * w;
  const double e = std::exp(-p.eB * (u * u + v * v) / (2.0 * w * w * w * w));
  const double h = a0 * a0 / (2.0 * w * w);
  Observables o;
  o.current.kind = VectorKind::current;
  o.current.c = {e * (1.0 + h), e * a0 * std::sin(xi) / w, e * a0 * std::cos(xi) / w, e * h};
  o.spin.kind = VectorKind::spin;
  o.spin.c = {e * h, e * a0 * std::sin(xi) / w, e * a0 * std::cos(xi) / w, e * (h - 1.0)};
  return o;
}

double bagrov_pz(double xi, double a) {
  if (a == 0.0) throw DomainError("bagrov: a must be nonzero");
  if (xi == -a) throw DomainError("bagrov: xi = -a is a pole");
  if (a * xi < 0.0) throw DomainError("bagrov: xi must have the sign of a");
  return bagrov_pz_t(xi, a);
}

double bagrov_ode_residual(double xi, double a) {
  bagrov_pz(xi, a);
  const auto pz = [a](const auto& x) { return bagrov_pz_t(x, a); };
  const double p = pz(xi);
  const double p0 = std::sqrt(1.0 + p * p);
  const double d1 = ad::derivative(pz, xi);
  const double d2 = ad::second_derivative(pz, xi);
  const double t1 = d1 * d1;
  const double t2 = p0 * p0 * (p0 - p) * d2;
  const double scale = std::max({std::fabs(t1), std::fabs(t2), 1e-300});
  return std::fabs(t1 - t2) / scale;
}

VolkovFamilySpec bagrov_spec(const BagrovParams& bp) {
  VolkovFamilySpec s = circle_spec(bp.circle);
  const double a = bp.a;
  if (a == 0.0) throw DomainError("bagrov: a must be nonzero");
  s.pz = RealFunction([a](const auto& xi) { return bagrov_pz_t(xi, a); });
  s.shift_x = {};
  s.shift_y = {};
  s.phi = {};
  return s;
}

VolkovFamilySpec inhomogeneous_spec(const InhomogeneousParams& ip) {
  VolkovFamilySpec s = circle_spec(ip.circle);
  const double kappa = ip.kappa;
  const double amp = ip.pz_amplitude;
  s.G = PlaneFunction([kappa](const auto& x, const auto& y) {
    const auto x2 = x * x;
    const auto y2 = y * y;
    return x2 + y2 + kappa * (x2 * x2 + y2 * y2);
  });
  s.pz = RealFunction([amp](const auto& xi) {
    using std::sin;
    return amp * sin(xi);
  });
  s.shift_x = {};
  s.shift_y = {};
  s.phi = {};
  return s;
}

}  // namespace rdi
