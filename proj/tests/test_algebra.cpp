#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include <Eigen/Geometry>
#include <unsupported/Eigen/MatrixFunctions>

#include "rdi/quadrature.hpp"
#include "rdi/sta.hpp"
#include "support/oracles.hpp"

using namespace rdi;
using oracle::Mat;
using oracle::to_eigen;

namespace {

constexpr int kCases = 1000;
constexpr double kTol = 1e-12;

ComplexMatrix4<double> identity() { return ComplexMatrix4<double>::identity(); }

// sqrt(rho) B(u) R(theta) exp(I beta/2): the general invertible even element.
ComplexMatrix4<double> random_even(std::mt19937_64& rng) {
  const auto u = oracle::random_vec3(rng, 2.0);
  const auto th = oracle::random_vec3(rng, 3.0);
  const double beta = oracle::uniform(rng, -3.0, 3.0);
  const double rho = oracle::uniform(rng, 0.1, 4.0);
  return boost(u) * rotor(th) * exp_pseudoscalar(0.5 * beta) * std::sqrt(rho);
}

}  // namespace

TEST(GammaMatrices, MatchDiracRepresentation) {
  for (int mu = 0; mu < 4; ++mu) {
    EXPECT_LT(oracle::max_diff(to_eigen(gamma_upper(mu)), oracle::gamma_upper(mu)), kTol) << mu;
    EXPECT_LT(oracle::max_diff(to_eigen(gamma(mu)), oracle::gamma_lower(mu)), kTol) << mu;
  }
}

TEST(GammaMatrices, CliffordRelations) {
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const Mat anti = to_eigen(gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu));
      const Mat expect = 2.0 * metric(mu, nu) * Mat::Identity();
      EXPECT_LT(oracle::max_diff(anti, expect), kTol) << mu << nu;
    }
  const Mat i5 = to_eigen(pseudoscalar());
  EXPECT_LT(oracle::max_diff(i5 * i5, -Mat::Identity()), kTol);
  for (int mu = 0; mu < 4; ++mu) EXPECT_LT(oracle::max_diff(i5 * to_eigen(gamma(mu)), -to_eigen(gamma(mu)) * i5), kTol);
  const Mat g5 = to_eigen(gamma5());
  EXPECT_LT(oracle::max_diff(g5 * g5, Mat::Identity()), kTol);
  EXPECT_LT(oracle::max_diff(to_eigen(gamma21()) * to_eigen(gamma21()), -Mat::Identity()), kTol);
}

TEST(GammaMatrices, UnknownIndexThrows) {
  EXPECT_THROW(gamma(4), ArgumentError);
  EXPECT_THROW(gamma("q"), ArgumentError);
}

TEST(AlgebraProperty, SlashSquaresToMinkowskiNorm) {
  std::mt19937_64 rng(oracle::kSeed);
  for (int i = 0; i < kCases; ++i) {
    FourVector<double> v;
    for (int mu = 0; mu < 4; ++mu) v[mu] = oracle::uniform(rng, -3, 3);
    const Mat s = to_eigen(slash(v));
    ASSERT_LT(oracle::max_diff(s * s, v.minkowski_square() * Mat::Identity()), 1e-11) << i;
  }
}

TEST(AlgebraProperty, ReversionIsAntiAutomorphism) {
  std::mt19937_64 rng(oracle::kSeed + 1);
  for (int mu = 0; mu < 4; ++mu) EXPECT_LT(max_abs_diff(tilde(gamma(mu)), gamma(mu)), kTol);
  for (int i = 0; i < kCases; ++i) {
    const auto a = random_even(rng);
    const auto b = random_even(rng);
    ASSERT_LT(max_abs_diff(tilde(a * b), tilde(b) * tilde(a)), 1e-10) << i;
    ASSERT_LT(max_abs_diff(tilde(tilde(a)), a), kTol) << i;
  }
}

TEST(AlgebraProperty, HestenesRoundTrip) {
  std::mt19937_64 rng(oracle::kSeed + 2);
  const ComplexMatrix4<double> i5 = pseudoscalar();
  for (int i = 0; i < kCases; ++i) {
    const auto psi = oracle::random_column(rng);
    const auto m = hestenes_embed(psi);
    const auto back = hestenes_extract(m);
    for (int k = 0; k < 4; ++k) {
      ASSERT_EQ(back[k].re, psi[k].re);
      ASSERT_EQ(back[k].im, psi[k].im);
    }
    // i psi corresponds to right multiplication by gamma2 gamma1.
    DiracColumn<double> ipsi;
    for (int k = 0; k < 4; ++k) ipsi[k] = Complex<double>(-psi[k].im, psi[k].re);
    ASSERT_LT(max_abs_diff(hestenes_embed(ipsi).value, m.value * gamma21()), kTol) << i;
    // An even element commutes with the pseudoscalar, and Psi tilde(Psi) = s + pI.
    ASSERT_LT(max_abs_diff(m.value * i5, i5 * m.value), kTol) << i;
    ASSERT_LT(scalar_pseudoscalar(m.value * tilde(m.value)).off_subspace, 1e-12) << i;
  }
}

TEST(AlgebraProperty, BoostGroupLaws) {
  std::mt19937_64 rng(oracle::kSeed + 3);
  for (int i = 0; i < kCases; ++i) {
    const auto u = oracle::random_vec3(rng, 3.0);
    const auto b = boost(u);
    ASSERT_LT(max_abs_diff(b * tilde(b), identity()), 1e-11) << i;
    // B gamma0 tilde(B) is the unit four-velocity (sqrt(1+u^2), u).
    const auto v = vector_components(b * gamma(0) * tilde(b)).vector;
    const double e = std::sqrt(1.0 + u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    ASSERT_NEAR(v[0], e, 1e-11 * e);
    for (int k = 0; k < 3; ++k) ASSERT_NEAR(v[k + 1], u[k], 1e-11 * e);
    // Collinear boosts compose by adding rapidities.
    const double r1 = oracle::uniform(rng, -1.5, 1.5);
    const double r2 = oracle::uniform(rng, -1.5, 1.5);
    const double n = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    const auto along = [&](double rap) {
      const double s = std::sinh(rap) / n;
      return std::array<double, 3>{u[0] * s, u[1] * s, u[2] * s};
    };
    ASSERT_LT(max_abs_diff(boost(along(r1)) * boost(along(r2)), boost(along(r1 + r2))), 1e-10) << i;
  }
}

TEST(AlgebraProperty, RotorGroupLawsAgainstEigenRotation) {
  std::mt19937_64 rng(oracle::kSeed + 4);
  for (int i = 0; i < kCases; ++i) {
    const auto th = oracle::random_vec3(rng, 3.0);
    const auto r = rotor(th);
    ASSERT_LT(max_abs_diff(r * tilde(r), identity()), 1e-12) << i;
    ASSERT_LT(max_abs_diff(r * rotor(std::array<double, 3>{-th[0], -th[1], -th[2]}), identity()), 1e-12) << i;
    // Same-axis rotors compose additively.
    const double s = oracle::uniform(rng, -1.0, 1.0);
    const std::array<double, 3> part{th[0] * s, th[1] * s, th[2] * s};
    const std::array<double, 3> rest{th[0] * (1 - s), th[1] * (1 - s), th[2] * (1 - s)};
    ASSERT_LT(max_abs_diff(rotor(part) * rotor(rest), r), 1e-12) << i;
    // R x-slash R~ rotates the spatial vector by |theta| about theta.
    const Eigen::Vector3d axis(th[0], th[1], th[2]);
    const Eigen::AngleAxisd aa(axis.norm(), axis.normalized());
    const Eigen::Vector3d x(oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1));
    const Eigen::Vector3d expect = aa * x;
    FourVector<double> xv;
    xv.c = {0.0, x[0], x[1], x[2]};
    const auto rotated = vector_components(r * slash(xv) * tilde(r)).vector;
    for (int k = 0; k < 3; ++k) ASSERT_NEAR(rotated[k + 1], expect[k], 1e-12) << i;
    ASSERT_NEAR(rotated[0], 0.0, 1e-12);
  }
}

TEST(AlgebraProperty, RotorSmallAngleBranchIsContinuous) {
  for (double r : {1e-4, 9.99e-4, 1.001e-3, 1e-2}) {
    const std::array<double, 3> th{r, 0.0, 0.0};
    const Mat got = to_eigen(rotor(th));
    const Mat expect = std::cos(0.5 * r) * Mat::Identity() - std::sin(0.5 * r) * to_eigen(pseudo_alpha(1));
    EXPECT_LT(oracle::max_diff(got, expect), 1e-15) << r;
  }
}

TEST(AlgebraProperty, NullBivectorIsNilpotent) {
  std::mt19937_64 rng(oracle::kSeed + 5);
  for (int i = 0; i < kCases; ++i) {
    const double f1 = oracle::uniform(rng, -5, 5);
    const double f2 = oracle::uniform(rng, -5, 5);
    const double sc = oracle::uniform(rng, -2, 2);
    const auto n = null_bivector(f1, f2, sc);
    const double size = frobenius_norm(n);
    ASSERT_LT(frobenius_norm(n * n), 1e-12 * (1.0 + size * size)) << i;
    // exp(N) = 1 + N, so exp(N) exp(-N) = 1, and the truncated series is exact.
    const auto e = null_bivector_exp(f1, f2, sc);
    ASSERT_LT(max_abs_diff(e * null_bivector_exp(f1, f2, -sc), identity()), 1e-12 * (1.0 + size * size)) << i;
    const Mat series = to_eigen(n).exp();
    ASSERT_LT(oracle::max_diff(to_eigen(e), series), 1e-10 * (1.0 + size)) << i;
  }
}

TEST(AlgebraProperty, SpinorInverseMatchesEigen) {
  std::mt19937_64 rng(oracle::kSeed + 6);
  for (int i = 0; i < kCases; ++i) {
    const auto psi = random_even(rng);
    const Mat inv = to_eigen(spinor_inverse(psi));
    const Mat ref = to_eigen(psi).inverse();
    ASSERT_LT(oracle::max_diff(inv, ref), 1e-10 * (1.0 + ref.cwiseAbs().maxCoeff())) << i;
  }
  EXPECT_THROW(spinor_inverse(ComplexMatrix4<double>::zero()), SingularityError);
}

TEST(AlgebraProperty, ExponentialsMatchMatrixExp) {
  std::mt19937_64 rng(oracle::kSeed + 7);
  for (int i = 0; i < kCases; ++i) {
    const double a = oracle::uniform(rng, -6, 6);
    const Mat ei = (a * to_eigen(pseudoscalar())).exp();
    ASSERT_LT(oracle::max_diff(to_eigen(exp_pseudoscalar(a)), ei), 1e-12) << i;
    const Mat eg = (a * to_eigen(gamma21())).exp();
    ASSERT_LT(oracle::max_diff(to_eigen(exp_gamma21(a)), eg), 1e-12) << i;
  }
}

TEST(AlgebraProperty, VectorComponentsInvertSlash) {
  std::mt19937_64 rng(oracle::kSeed + 8);
  for (int i = 0; i < kCases; ++i) {
    FourVector<double> v;
    for (int mu = 0; mu < 4; ++mu) v[mu] = oracle::uniform(rng, -4, 4);
    const auto parts = vector_components(slash(v));
    for (int mu = 0; mu < 4; ++mu) ASSERT_NEAR(parts.vector[mu], v[mu], 1e-13);
    ASSERT_LT(parts.imaginary_residue, 1e-15);
  }
}

// ---- forward-mode duals ------------------------------------------------

TEST(Dual, FirstAndSecondDerivatives) {
  std::mt19937_64 rng(oracle::kSeed + 9);
  const auto f = [](const auto& x) {
    using std::exp;
    using std::sin;
    return sin(x * x) * exp(0.5 * x);
  };
  for (int i = 0; i < kCases; ++i) {
    const double x = oracle::uniform(rng, -2, 2);
    const double d1 = std::exp(0.5 * x) * (2 * x * std::cos(x * x) + 0.5 * std::sin(x * x));
    const double d2 = std::exp(0.5 * x) * ((0.25 - 4 * x * x) * std::sin(x * x) + (2.0 + 2 * x) * std::cos(x * x));
    ASSERT_NEAR(ad::derivative(f, x), d1, 1e-12 * (1 + std::fabs(d1)));
    ASSERT_NEAR(ad::second_derivative(f, x), d2, 1e-11 * (1 + std::fabs(d2)));
  }
}

TEST(Dual, ThirdDerivativeAndElementaryFunctions) {
  const auto f = [](const auto& x) {
    using std::atan;
    using std::log;
    using std::sqrt;
    return atan(x) + log(1.0 + x * x) + sqrt(2.0 + x);
  };
  const double x = 0.7;
  const double d3 = 2 * (3 * x * x - 1) / std::pow(1 + x * x, 3) + 4 * x * (x * x - 3) / std::pow(1 + x * x, 3) +
                    0.375 * std::pow(2 + x, -2.5);
  EXPECT_NEAR(ad::third_derivative(f, x), d3, 1e-12);
  static_assert(ad::depth<ad::D4>::value == 4);
}

TEST(Dual, MixedPartialsCommute) {
  const auto g = [](const auto& x, const auto& y) {
    using std::cos;
    return x * x * y + cos(x * y);
  };
  using ad::D1;
  using ad::D2;
  const double x = 0.3, y = -1.1;
  const D2 xy = g(D2(D1(x, 1.0), D1(0.0, 0.0)), D2(D1(y, 0.0), D1(1.0, 0.0)));
  const double expect = 2 * x - std::sin(x * y) - x * y * std::cos(x * y);
  EXPECT_NEAR(xy.d.d, expect, 1e-14);
  const D2 yx = g(D2(D1(x, 0.0), D1(1.0, 0.0)), D2(D1(y, 1.0), D1(0.0, 0.0)));
  EXPECT_NEAR(yx.d.d, expect, 1e-14);
}

// ---- adaptive quadrature ------------------------------------------------

TEST(Quadrature, KnownIntegrals) {
  const auto sine = [](double x) { return std::sin(x); };
  EXPECT_NEAR(quad::integrate<double>(sine, 0.0, std::numbers::pi), 2.0, 1e-13);
  const auto peak = [](double x) { return 1.0 / (1e-4 + x * x); };
  const double exact = 2.0 * std::atan(1.0 / 1e-2) / 1e-2;
  EXPECT_NEAR(quad::integrate<double>(peak, -1.0, 1.0, {1e-12, 400}), exact, 1e-9 * exact);
  EXPECT_EQ(quad::integrate<double>(sine, 1.0, 1.0), 0.0);
}

TEST(Quadrature, DualUpperLimitDifferentiatesToIntegrand) {
  const auto h = [](const auto& phi) {
    using std::cos;
    return cos(phi) * cos(phi);
  };
  for (double upper : {0.3, 1.7, 4.0}) {
    const ad::D1 r = quad::integrate_from_zero(h, ad::seed(upper));
    EXPECT_NEAR(r.v, 0.5 * upper + 0.25 * std::sin(2 * upper), 1e-13);
    EXPECT_NEAR(r.d, std::cos(upper) * std::cos(upper), 1e-12);
  }
}
