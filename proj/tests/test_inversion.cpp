#include <gtest/gtest.h>

#include <random>

#include "rdi/rdi.hpp"
#include "rdi/scenarios.hpp"
#include "rdi/solutions.hpp"
#include "rdi/units.hpp"
#include "support/oracles.hpp"

using namespace rdi;

namespace {

double relative_error(const FourVector<double>& got, const std::array<double, 4>& expect) {
  double diff = 0.0, scale = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    diff = std::max(diff, std::fabs(got[mu] - expect[mu]));
    scale = std::max(scale, std::fabs(expect[mu]));
  }
  return diff / scale;
}

// Uniform point in the packet-frame box of a scenario, mapped to the lab.
Point<double> random_point(std::mt19937_64& rng, const Scenario& s) {
  const Point<double> packet(oracle::uniform(rng, 0.0, s.period), oracle::uniform(rng, -3 * s.width, 3 * s.width),
                             oracle::uniform(rng, -3 * s.width, 3 * s.width), 0.0);
  return s.lab_point(packet);
}

}  // namespace

TEST(Inversion, EllipseMatchesClosedFormPotential) {
  std::mt19937_64 rng(oracle::kSeed);
  for (const char* name : {"ellipse-fig1", "ellipse-relativistic"}) {
    const Scenario s = make_scenario(name);
    const EllipseParams& p = *s.ellipse;
    double worst = 0.0, residue = 0.0;
    for (int i = 0; i < 100; ++i) {
      const auto x = random_point(rng, s);
      const Inversion inv = invert_potential(s.spinor, x);
      worst = std::max(worst, relative_error(inv.potential, oracle::ellipse_potential(p, x[0], x[1], x[2])));
      worst = std::max(worst, relative_error(s.potential(x), oracle::ellipse_potential(p, x[0], x[1], x[2])));
      residue = std::max(residue, inv.imaginary_residue);
    }
    EXPECT_LT(worst, 1e-8) << name;
    EXPECT_LT(residue, 1e-10) << name;
  }
}

TEST(Inversion, RedmondMatchesClosedFormPotential) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  const Scenario s = make_scenario("redmond-fig2");
  const CircleParams& p = *s.circle;
  double worst = 0.0, residue = 0.0;
  for (int i = 0; i < 100; ++i) {
    auto x = random_point(rng, s);
    x[3] = oracle::uniform(rng, -1.0, 1.0) / p.omega;
    const Inversion inv = invert_potential(s.spinor, x);
    const auto expect = oracle::redmond_potential(p, x[0], x[1], x[2], x[3]);
    worst = std::max(worst, relative_error(inv.potential, expect));
    residue = std::max(residue, inv.imaginary_residue);
    // The phase is chosen so that eA^0 vanishes.
    EXPECT_NEAR(expect[0], 0.0, 1e-9);
  }
  EXPECT_LT(worst, 1e-8);
  EXPECT_LT(residue, 1e-10);
}

TEST(Inversion, FreeElectronNeedsNoPotential) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  for (bool negative : {false, true}) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      oracle::PlaneWave w;
      w.u = oracle::random_vec3(rng, 2.0);
      w.theta = oracle::random_vec3(rng, 3.0);
      w.rho = oracle::uniform(rng, 0.2, 3.0);
      w.negative = negative;
      const SpinorField field([w](const auto& x) {
        using T = typename std::decay_t<decltype(x)>::value_type;
        return MatrixSpinor<T>{w(x)};
      });
      const Point<double> x(oracle::uniform(rng, -5, 5), oracle::uniform(rng, -5, 5), oracle::uniform(rng, -5, 5),
                            oracle::uniform(rng, -5, 5));
      const Inversion inv = invert_potential(field, x);
      for (int mu = 0; mu < 4; ++mu) worst = std::max(worst, std::fabs(inv.potential[mu]));
    }
    EXPECT_LT(worst, 1e-12) << (negative ? "negative" : "positive") << " energy";
  }
}

TEST(Inversion, WrongMassSignIsDetected) {
  // With the rest-mass term of the other branch, a plane wave needs eA = 2p.
  oracle::PlaneWave w;
  w.u = {0.3, -0.2, 0.5};
  const SpinorField field([w](const auto& x) {
    using T = typename std::decay_t<decltype(x)>::value_type;
    return MatrixSpinor<T>{w(x)};
  });
  const Inversion inv = invert_potential(field, Point<double>(0.1, 0.2, 0.3, 0.4), -1.0);
  const double e = std::sqrt(1.0 + 0.09 + 0.04 + 0.25);
  EXPECT_NEAR(inv.potential[0], 2.0 * e, 1e-12);
  EXPECT_NEAR(inv.potential[1], 0.6, 1e-12);
}

TEST(DiracResidual, ClosedFormPairsSolveTheEquation) {
  for (const char* name : {"ellipse-fig1", "ellipse-relativistic", "redmond-fig2"}) {
    const Scenario s = make_scenario(name);
    const GridSpec grid = default_grid(s);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      worst = std::max(worst, dirac_residual(s.column, s.potential, s.lab_point(grid.point(i))));
    EXPECT_LT(worst, 1e-8) << name;
  }
}

TEST(DiracResidual, FiniteDifferencesAgreeAndDetectAWrongPotential) {
  const Scenario s = make_scenario("ellipse-relativistic");
  const Point<double> x = s.lab_point(Point<double>(0.3 * s.period, 0.5 * s.width, -0.4 * s.width, 0.0));
  EXPECT_LT(dirac_residual_fd(s.column, s.potential, x, 1e-3 * s.width), 1e-5);
  const PotentialField shifted([a = s.potential](const auto& y) {
    auto v = a(y);
    v[1] += 1e-3;
    return v;
  });
  EXPECT_GT(dirac_residual(s.column, shifted, x), 1e-4);
}

TEST(Observables, CurrentAndSpinMatchClosedForm) {
  std::mt19937_64 rng(oracle::kSeed + 3);
  const Scenario s = make_scenario("redmond-fig2");
  for (int i = 0; i < 50; ++i) {
    auto x = random_point(rng, s);
    const auto psi = s.column(x);
    const Observables o = appendixD_observables(*s.circle, x);
    const auto j = dirac_current(psi);
    const auto sp = spin_density(psi);
    const double scale = std::fabs(o.current[0]) + 1e-300;
    for (int mu = 0; mu < 4; ++mu) {
      EXPECT_NEAR(j[mu], o.current[mu], 1e-10 * scale) << mu;
      EXPECT_NEAR(sp[mu], o.spin[mu], 1e-10 * scale) << mu;
    }
  }
}

TEST(Observables, ColumnAndMatrixFormsAgree) {
  std::mt19937_64 rng(oracle::kSeed + 4);
  for (int i = 0; i < 1000; ++i) {
    const auto psi = oracle::random_column(rng);
    const auto m = hestenes_embed(psi);
    const auto j1 = dirac_current(psi);
    const auto j2 = dirac_current_matrix(m);
    const auto s1 = spin_density(psi);
    const auto s2 = spin_density_matrix(m);
    for (int mu = 0; mu < 4; ++mu) {
      ASSERT_NEAR(j1[mu], j2[mu], 1e-12);
      ASSERT_NEAR(s1[mu], s2[mu], 1e-12);
    }
    // J is future timelike or null and orthogonal to s.
    ASSERT_GE(j1[0], 0.0);
    ASSERT_NEAR(j1[0] * s1[0] - j1[1] * s1[1] - j1[2] * s1[2] - j1[3] * s1[3], 0.0, 1e-12);
  }
}

TEST(Conservation, CurrentAndSpinDivergence) {
  for (const char* name : {"ellipse-fig1", "redmond-fig2"}) {
    const Scenario s = make_scenario(name);
    const GridSpec grid = default_grid(s, 3, 3, 3);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto x = s.lab_point(grid.point(i));
      EXPECT_LT(current_conservation_residual(s.column, x), 1e-8) << name;
      EXPECT_LT(spin_divergence_residual(s.spinor, x), 1e-8) << name;
    }
  }
}

TEST(Solutions, SuperluminalEllipseIsRejected) {
  EXPECT_THROW(ellipse_spec(EllipseParams{1.0, 2.0, 1.0, 0.6}), DomainError);
}

TEST(Solutions, NonPositiveDensityIsRejected) {
  SpinorParameterization p;
  p.rho = ScalarField([](const auto& x) { return 0.0 * x[0]; });
  p.velocity = Vec3Field([](const auto& x) {
    using T = std::decay_t<decltype(x[0])>;
    return std::array<T, 3>{T(0.0), T(0.0), T(0.0)};
  });
  p.theta = p.velocity;
  p.beta = ScalarField([](const auto& x) { return 0.0 * x[0]; });
  const SpinorField f = build_spinor(p);
  EXPECT_THROW(f(Point<double>(0, 0, 0, 0)), DomainError);
}

TEST(Bagrov, ProfileSolvesSourceFreeCondition) {
  for (double a : {0.5, 2.0, 7.0}) {
    for (int i = 1; i <= 100; ++i) {
      const double xi = a * 3.0 * i / 100.0;
      EXPECT_LT(bagrov_ode_residual(xi, a), 1e-10);
      const auto jet = oracle::bagrov_jet(xi, a);
      EXPECT_NEAR(bagrov_pz(xi, a), jet.pz, 1e-14 * (1 + std::fabs(jet.pz)));
      const double p0 = std::sqrt(1.0 + jet.pz * jet.pz);
      const double ode = jet.d1 * jet.d1 - p0 * p0 * (p0 - jet.pz) * jet.d2;
      EXPECT_LT(std::fabs(ode) / (jet.d1 * jet.d1), 1e-10);
    }
  }
  EXPECT_THROW(bagrov_pz(-0.5, 1.0), DomainError);
  EXPECT_THROW(bagrov_pz(1.0, 0.0), DomainError);
}

TEST(Bagrov, LongitudinalFieldIsConstant) {
  const Scenario s = make_scenario("bagrov-sourcefree");
  const double a = *s.bagrov_a;
  const double w = s.circle->omega;
  std::mt19937_64 rng(oracle::kSeed + 5);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_point(rng, s);
    const auto f = s.fields(x);
    EXPECT_NEAR(f.E[2], -w / a, 1e-10 * w / a);
  }
}

TEST(Volkov, SourcesMatchIndependentClosedForm) {
  const Scenario s = make_scenario("volkov-inhomogeneous");
  const InhomogeneousParams ip{*s.circle, 0.05, 0.2};
  std::mt19937_64 rng(oracle::kSeed + 6);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_point(rng, s);
    const auto ref = oracle::inhomogeneous_sources(ip, x[0], x[1], x[2], x[3]);
    const Sources lib = volkov_sources(*s.volkov, x);
    const MaxwellSample m = maxwell_sources(s.fields, x);
    const double scale = std::max({std::fabs(ref.rho_e), std::fabs(ref.J[0]), std::fabs(ref.J[1])});
    EXPECT_NEAR(lib.rho_e, ref.rho_e, 1e-8 * scale);
    EXPECT_NEAR(m.rho_e.value, ref.rho_e, 1e-6 * scale);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(lib.J[k], ref.J[k], 1e-8 * scale) << k;
      EXPECT_NEAR(m.J[k].value, ref.J[k], 1e-6 * scale) << k;
    }
  }
}

TEST(Units, CodataAndFigureOneGroups) {
  EXPECT_EQ(units::codata::c, 299792458.0);
  EXPECT_EQ(units::codata::e, 1.602176634e-19);
  EXPECT_NEAR(units::codata::alpha, 7.2973525693e-3, 1e-13);
  // beta = a omega / c for a = 1 um and omega = 0.5 / ns.
  const EllipseParams& p = *make_scenario("ellipse-fig1").ellipse;
  EXPECT_NEAR(p.a1 * p.omega, 1e-6 * 0.5e9 / 299792458.0, 1e-18);
  EXPECT_NEAR(p.a2 * p.omega, 2e-6 * 0.5e9 / 299792458.0, 1e-18);
}
