#include "rdi/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rdi/errors.hpp"
#include "rdi/rdi.hpp"
#include "rdi/units.hpp"

namespace rdi {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double relative_diff(const FourVector<double>& a, const FourVector<double>& b) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 4; ++i) {
    num = std::max(num, std::fabs(a[i] - b[i]));
    den = std::max(den, std::fabs(b[i]));
  }
  return den > 0.0 ? num / den : num;
}

double relative_diff(const EMSample<double>& a, const EMSample<double>& b) {
  double num = 0.0, den = 0.0;
  for (int k = 0; k < 3; ++k) {
    num = std::max({num, std::fabs(a.E[k] - b.E[k]), std::fabs(a.B[k] - b.B[k])});
    den = std::max({den, std::fabs(b.E[k]), std::fabs(b.B[k])});
  }
  return den > 0.0 ? num / den : num;
}

double column_diff(const DiracColumn<double>& a, const DiracColumn<double>& b) {
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 4; ++i) {
    num = std::max(num, abs(a[i] - b[i]));
    den = std::max(den, abs(b[i]));
  }
  return den > 0.0 ? num / den : num;
}

double density(const DiracColumn<double>& psi) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += norm2(psi[i]);
  return s;
}

// An offset particle only retraces the center orbit when its cyclotron
// motion about the center decouples from the drive, i.e. at low speed.
bool nonrelativistic(const Scenario& s) { return s.ellipse && s.ellipse->max_speed() < 0.1; }

}  // namespace

std::string family_name(FamilyKind f) {
  switch (f) {
    case FamilyKind::planar: return "planar";
    case FamilyKind::redmond: return "redmond";
    case FamilyKind::bagrov: return "bagrov";
    case FamilyKind::volkov: return "volkov";
  }
  return "planar";
}

FamilyKind parse_family(const std::string& name) {
  if (name == "planar") return FamilyKind::planar;
  if (name == "redmond") return FamilyKind::redmond;
  if (name == "bagrov") return FamilyKind::bagrov;
  if (name == "volkov") return FamilyKind::volkov;
  throw ArgumentError("unknown family: " + name);
}

std::array<double, 2> Scenario::center(double t) const {
  if (family == FamilyKind::planar) {
    const double w = ellipse->omega;
    return {ellipse->a1 * std::cos(w * t), ellipse->a2 * std::sin(w * t)};
  }
  const auto sh = volkov_shift(*volkov, volkov->omega * t);
  return {-sh[0], -sh[1]};
}

Point<double> Scenario::lab_point(const Point<double>& p) const {
  const auto c = center(p[0]);
  return Point<double>(p[0], c[0] + p[1], c[1] + p[2], p[3]);
}

Scenario ellipse_scenario(const std::string& name, const EllipseParams& p) {
  const PlanarTransportSpec spec = ellipse_spec(p);
  Scenario s;
  s.name = name;
  s.family = FamilyKind::planar;
  s.description = "planar transport along an ellipse in a uniform magnetic field";
  s.ellipse = p;
  s.spinor = planar_spinor_field(spec);
  s.column = planar_column_field(spec);
  s.potential = planar_potential_field(spec);
  s.fields = EMField([p](const auto& x) { return ellipse_fields(p, x); });
  s.period = p.period();
  s.width = 1.0 / std::sqrt(p.eB);
  return s;
}

namespace {

Scenario volkov_common(const std::string& name, FamilyKind family, VolkovFamilySpec spec, const CircleParams& c) {
  Scenario s;
  s.name = name;
  s.family = family;
  s.quadrature = !(spec.shift_x && spec.shift_y) || !spec.phi;
  spec = resolve_gauge(std::move(spec));
  s.volkov = spec;
  s.circle = c;
  s.spinor = volkov_spinor_field(spec);
  s.column = volkov_column_field(spec);
  s.potential = volkov_potential_field(spec);
  s.fields = volkov_field(spec);
  s.period = kTwoPi / spec.omega;
  s.width = 1.0 / std::sqrt(spec.eB);
  return s;
}

}  // namespace

Scenario redmond_scenario(const std::string& name, const CircleParams& p) {
  Scenario s = volkov_common(name, FamilyKind::redmond, circle_spec(p), p);
  s.description = "circularly polarized plane wave with a uniform longitudinal magnetic field";
  return s;
}

Scenario bagrov_scenario(const std::string& name, const BagrovParams& p) {
  Scenario s = volkov_common(name, FamilyKind::bagrov, bagrov_spec(p), p.circle);
  s.bagrov_a = p.a;
  s.description = "circular drive with the source-free longitudinal momentum profile";
  return s;
}

Scenario inhomogeneous_scenario(const std::string& name, const InhomogeneousParams& p) {
  Scenario s = volkov_common(name, FamilyKind::volkov, inhomogeneous_spec(p), p.circle);
  s.description = "circular drive with a quartic envelope and oscillating longitudinal momentum";
  return s;
}

std::vector<std::string> scenario_names() {
  return {"ellipse-fig1", "ellipse-relativistic", "redmond-fig2", "bagrov-sourcefree", "volkov-inhomogeneous"};
}

Scenario make_scenario(const std::string& name) {
  if (name == "ellipse-fig1") {
    EllipseParams p;
    p.a1 = units::length_to_scaled(1e-6);
    p.a2 = units::length_to_scaled(2e-6);
    p.eB = units::field_to_scaled(0.35);
    p.omega = units::rate_to_scaled(0.5e9);
    Scenario s = ellipse_scenario(name, p);
    s.larmor_gate = true;
    return s;
  }
  if (name == "ellipse-relativistic") return ellipse_scenario(name, EllipseParams::from_groups(0.3, 0.5, 1.2, 2.0));
  if (name == "redmond-fig2" || name == "redmond-circle-fig2") {
    CircleParams p;
    p.a0 = units::field_to_scaled(3.24);
    p.eB = units::field_to_scaled(0.13);
    p.omega = units::rate_to_scaled(units::laser_omega(800e-9));
    return redmond_scenario("redmond-fig2", p);
  }
  if (name == "bagrov-sourcefree") {
    BagrovParams p;
    p.circle = CircleParams::from_groups(0.4, 0.9, 1.0 / 0.7);
    p.a = 2.0;
    return bagrov_scenario(name, p);
  }
  if (name == "volkov-inhomogeneous") {
    InhomogeneousParams p;
    p.circle = CircleParams::from_groups(0.4, 0.9, 1.0 / 0.7);
    p.kappa = 0.05;
    p.pz_amplitude = 0.2;
    return inhomogeneous_scenario(name, p);
  }
  throw ArgumentError("unknown scenario: " + name);
}

Tolerances default_tolerances(const Scenario& s) {
  const double exact = s.quadrature ? 1e-5 : 1e-8;
  Tolerances t{
      {"dirac_residual", exact},
      {"reality", 1e-10},
      {"inversion_consistency", exact},
      {"column_consistency", 1e-10},
      {"potential_fields", exact},
      {"faraday", 1e-9},
      {"no_monopole", 1e-9},
      {"current_conservation", exact},
      {"superluminality", 1.0},
      {"random_dirac_residual", exact},
      {"random_inversion", exact},
  };
  if (s.family == FamilyKind::planar) {
    t["charge_free"] = 1e-9;
    t["shape_preservation"] = 1e-10;
    t["classical_orbit"] = 1e-2;
    if (nonrelativistic(s)) t["orbit_closure"] = 2e-2;
    if (s.larmor_gate) t["larmor_ratio"] = 1e-9;
  } else {
    t["source_consistency"] = 1e-8;
  }
  if (s.family == FamilyKind::redmond || s.family == FamilyKind::bagrov) t["source_free"] = 1e-9;
  if (s.family == FamilyKind::redmond) t["observables"] = 1e-8;
  if (s.family == FamilyKind::bagrov) {
    t["bagrov_ode"] = 1e-10;
    t["bagrov_ez"] = 1e-10;
  }
  return t;
}

GridSpec default_grid(const Scenario& s, int nt, int nx, int ny) {
  if (nt < 1 || nx < 1 || ny < 1) throw ConfigError("grid dimensions must be positive", "grid");
  GridSpec g;
  g.axes[0] = {0.0, s.period, nt};
  g.axes[1] = {-3.0 * s.width, 3.0 * s.width, nx};
  g.axes[2] = {-3.0 * s.width, 3.0 * s.width, ny};
  g.axes[3] = {0.0, 0.0, 1};
  return g;
}

Trajectory classical_trajectory(const Scenario& s, std::array<double, 2> offset, int steps) {
  if (s.family != FamilyKind::planar) throw ArgumentError("classical trajectories are defined for planar scenarios");
  if (steps < 1) throw ConfigError("trajectory steps must be positive", "steps");
  const EllipseParams p = *s.ellipse;
  ParticleState start;
  start.x = {p.a1 + offset[0], offset[1], 0.0};
  start.v = {0.0, p.a2 * p.omega, 0.0};
  const FieldSampler f = [p](const Point<double>& x) { return ellipse_limit_fields(EllipseLimit::classical, p, x); };
  return lorentz_push(start, f, s.period / steps, steps);
}

Trajectory center_path(const Scenario& s, int n) {
  if (n < 1) throw ConfigError("path samples must be positive", "steps");
  Trajectory traj;
  for (int i = 0; i <= n; ++i) {
    const double t = s.period * i / n;
    TrajectorySample smp;
    smp.t = t;
    if (s.family == FamilyKind::planar) {
      const auto& p = *s.ellipse;
      const double w = p.omega;
      smp.x = {p.a1 * std::cos(w * t), p.a2 * std::sin(w * t), 0.0};
      smp.v = {-p.a1 * w * std::sin(w * t), p.a2 * w * std::cos(w * t), 0.0};
    } else {
      const auto& v = *s.volkov;
      const double xi = v.omega * t;
      const auto sh = volkov_shift(v, xi);
      const auto dsh = volkov_shift(v, ad::seed(xi));
      smp.x = {-sh[0], -sh[1], 0.0};
      smp.v = {-v.omega * dsh[0].d, -v.omega * dsh[1].d, 0.0};
    }
    const double v2 = smp.v[0] * smp.v[0] + smp.v[1] * smp.v[1];
    if (!(v2 < 1.0)) throw DomainError("superluminal packet-center velocity");
    smp.gamma = 1.0 / std::sqrt(1.0 - v2);
    traj.samples.push_back(smp);
  }
  return traj;
}

OrbitCheck check_orbit(const Trajectory& traj, double a1, double a2) {
  OrbitCheck out;
  if (traj.samples.empty()) return out;
  double xlo = traj.samples.front().x[0], xhi = xlo;
  double ylo = traj.samples.front().x[1], yhi = ylo;
  for (const auto& s : traj.samples) {
    xlo = std::min(xlo, s.x[0]);
    xhi = std::max(xhi, s.x[0]);
    ylo = std::min(ylo, s.x[1]);
    yhi = std::max(yhi, s.x[1]);
  }
  const double s1 = 0.5 * (xhi - xlo);
  const double s2 = 0.5 * (yhi - ylo);
  out.semi_axis_error = std::max(std::fabs(s1 - a1) / a1, std::fabs(s2 - a2) / a2);
  const auto& first = traj.samples.front().x;
  const auto& last = traj.samples.back().x;
  out.closure_error = std::hypot(last[0] - first[0], last[1] - first[1]) / std::max(a1, a2);
  return out;
}

ResidualReport run_verification(const std::string& name, const GridSpec& grid, const Tolerances& overrides,
                                std::uint64_t seed) {
  return run_verification(make_scenario(name), grid, overrides, seed);
}

ResidualReport run_verification(const Scenario& s, const GridSpec& grid, const Tolerances& overrides,
                                std::uint64_t seed) {
  Tolerances tol = default_tolerances(s);
  for (const auto& [law, value] : overrides) {
    if (!tol.count(law)) throw ConfigError("no law named '" + law + "' for scenario " + s.name, "tol");
    if (!(value > 0.0)) throw ConfigError("tolerance for '" + law + "' must be positive", "tol");
    tol[law] = value;
  }

  const std::size_t n = grid.size();
  const auto lab = [&](std::size_t i) { return s.lab_point(grid.point(i)); };

  ResidualReport report;
  report.scenario = s.name;
  const auto add = [&](const std::string& law, const std::vector<double>& r) {
    report.entries.push_back(summarize(law, r, tol.at(law)));
  };

  add("dirac_residual", parallel_map(n, [&](std::size_t i) { return dirac_residual(s.column, s.potential, lab(i)); }));

  std::vector<double> residue(n), consistency(n);
  {
    // One inversion per point feeds two laws.
    std::vector<Inversion> inv(n);
    parallel_map(n, [&](std::size_t i) {
      inv[i] = invert_potential(s.spinor, lab(i));
      return 0.0;
    });
    for (std::size_t i = 0; i < n; ++i) {
      const FourVector<double> closed = s.potential(lab(i));
      double scale = 0.0;
      for (int k = 0; k < 4; ++k) scale = std::max(scale, std::fabs(closed[k]));
      residue[i] = inv[i].imaginary_residue / std::max(scale, 1.0);
      consistency[i] = relative_diff(inv[i].potential, closed);
    }
  }
  add("reality", residue);
  add("inversion_consistency", consistency);

  add("column_consistency", parallel_map(n, [&](std::size_t i) {
        const Point<double> x = lab(i);
        return column_diff(hestenes_extract(s.spinor(x)), s.column(x));
      }));

  const EMField derived = fields_from_potential(s.potential);
  add("potential_fields", parallel_map(n, [&](std::size_t i) {
        const Point<double> x = lab(i);
        return relative_diff(derived(x), s.fields(x));
      }));

  std::vector<MaxwellSample> mx(n);
  parallel_map(n, [&](std::size_t i) {
    mx[i] = maxwell_sources(s.fields, lab(i));
    return 0.0;
  });
  std::vector<double> faraday(n), monopole(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = mx[i].derivative_scale;
    faraday[i] = std::max({law_residual(mx[i].faraday[0], d), law_residual(mx[i].faraday[1], d),
                           law_residual(mx[i].faraday[2], d)});
    monopole[i] = law_residual(mx[i].div_B, d);
  }
  add("faraday", faraday);
  add("no_monopole", monopole);

  add("current_conservation",
      parallel_map(n, [&](std::size_t i) { return current_conservation_residual(s.column, lab(i)); }));

  {
    std::mt19937_64 rng(seed);
    std::vector<Point<double>> pts(100);
    for (auto& pt : pts) {
      Point<double> q;
      for (int k = 0; k < 4; ++k) {
        const GridAxis& a = grid.axes[k];
        q[k] = a.lo + (a.hi - a.lo) * std::generate_canonical<double, 53>(rng);
      }
      pt = s.lab_point(q);
    }
    add("random_dirac_residual",
        parallel_map(pts.size(), [&](std::size_t i) { return dirac_residual(s.column, s.potential, pts[i]); }));
    add("random_inversion", parallel_map(pts.size(), [&](std::size_t i) {
          const Inversion inv = invert_potential(s.spinor, pts[i]);
          return std::max(relative_diff(inv.potential, s.potential(pts[i])), inv.imaginary_residue);
        }));
  }

  if (s.family == FamilyKind::planar) {
    const EllipseParams& p = *s.ellipse;
    std::vector<double> charge(n);
    for (std::size_t i = 0; i < n; ++i) charge[i] = law_residual(mx[i].rho_e, mx[i].derivative_scale);
    add("charge_free", charge);

    std::vector<double> speed;
    for (int k = 0; k < grid.axes[0].n; ++k) {
      const double t = grid.axes[0].at(k);
      speed.push_back(p.omega * std::hypot(p.a1 * std::sin(p.omega * t), p.a2 * std::cos(p.omega * t)));
    }
    add("superluminality", speed);

    // Density at 16 times, normalized to its value at the packet center.
    std::vector<double> shape;
    const auto normalized = [&](double t, double X, double Y) {
      const double peak = density(s.column(s.lab_point(Point<double>(t, 0.0, 0.0, 0.0))));
      return density(s.column(s.lab_point(Point<double>(t, X, Y, 0.0)))) / peak;
    };
    for (int k = 1; k < 16; ++k) {
      const double t = s.period * k / 16.0;
      for (int ix = 0; ix < grid.axes[1].n; ++ix)
        for (int iy = 0; iy < grid.axes[2].n; ++iy) {
          const double X = grid.axes[1].at(ix), Y = grid.axes[2].at(iy);
          shape.push_back(std::fabs(normalized(t, X, Y) - normalized(0.0, X, Y)));
        }
    }
    add("shape_preservation", shape);

    const Trajectory center = classical_trajectory(s);
    const OrbitCheck oc = check_orbit(center, p.a1, p.a2);
    add("classical_orbit", {oc.semi_axis_error});
    if (tol.count("orbit_closure")) {
      const Trajectory offset = classical_trajectory(s, {0.5 * s.width, 0.0});
      add("orbit_closure", {check_orbit(offset, p.a1, p.a2).closure_error});
    }
    if (s.larmor_gate) add("larmor_ratio", {larmor_estimate(center).ratio()});
  } else {
    std::vector<double> consistency_src(n), speed(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Point<double> x = lab(i);
      const Sources closed = volkov_sources(*s.volkov, x);
      const MaxwellSample& m = mx[i];
      const double got[4] = {m.rho_e.value, m.J[0].value, m.J[1].value, m.J[2].value};
      const double want[4] = {closed.rho_e, closed.J[0], closed.J[1], closed.J[2]};
      double num = 0.0, den = 0.0;
      for (int k = 0; k < 4; ++k) {
        num = std::max(num, std::fabs(got[k] - want[k]));
        den = std::max(den, std::fabs(want[k]));
      }
      den = std::max(den, m.derivative_scale);
      consistency_src[i] = den > 0.0 ? num / den : num;
      const FourVector<double> j = dirac_current(s.column(x));
      speed[i] = std::sqrt(j[1] * j[1] + j[2] * j[2] + j[3] * j[3]) / j[0];
    }
    add("source_consistency", consistency_src);
    add("superluminality", speed);
  }

  if (s.family == FamilyKind::redmond || s.family == FamilyKind::bagrov) {
    std::vector<double> free(n);
    for (std::size_t i = 0; i < n; ++i) {
      const MaxwellSample& m = mx[i];
      const double d = m.derivative_scale;
      free[i] = std::max({law_residual(m.rho_e, d), law_residual(m.J[0], d), law_residual(m.J[1], d),
                          law_residual(m.J[2], d)});
    }
    add("source_free", free);
  }

  if (s.family == FamilyKind::redmond) {
    add("observables", parallel_map(n, [&](std::size_t i) {
          const Point<double> x = lab(i);
          const DiracColumn<double> psi = s.column(x);
          const Observables o = appendixD_observables(*s.circle, x);
          return std::max(relative_diff(dirac_current(psi), o.current), relative_diff(spin_density(psi), o.spin));
        }));
  }

  if (s.family == FamilyKind::bagrov) {
    const double a = *s.bagrov_a;
    std::vector<double> ode, ez;
    for (int k = 1; k <= 100; ++k) {
      const double xi = (a > 0.0 ? 1.0 : -1.0) * kTwoPi * k / 100.0;
      ode.push_back(bagrov_ode_residual(xi, a));
    }
    const double expected = -s.volkov->omega / a;
    for (std::size_t i = 0; i < n; ++i) ez.push_back(std::fabs(s.fields(lab(i)).E[2] - expected) / std::fabs(expected));
    add("bagrov_ode", ode);
    add("bagrov_ez", ez);
  }
  return report;
}

}  // namespace rdi
