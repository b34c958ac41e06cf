#pragma once

#include <cmath>

#include "rdi/field.hpp"
#include "rdi/report.hpp"
#include "rdi/sta.hpp"

namespace rdi {

// Local Lorentz data of a spinor: Psi = sqrt(rho) B(v) R(theta) exp(I beta/2).
struct SpinorParameterization {
  ScalarField rho;
  Vec3Field velocity;
  Vec3Field theta;
  ScalarField beta;
};

SpinorField build_spinor(SpinorParameterization p);

template <class T>
ComplexMatrix4<T> build_spinor_matrix(const SpinorParameterization& p, const Point<T>& x) {
  using std::sqrt;
  const T rho = p.rho(x);
  if (!(ad::value_of(rho) > 0.0))
    throw DomainError("spinor density must be positive, got " + std::to_string(ad::value_of(rho)));
  return (boost(p.velocity(x)) * rotor(p.theta(x))) * exp_pseudoscalar(p.beta(x) * 0.5) * sqrt(rho);
}

struct Inversion {
  FourVector<double> potential;
  double imaginary_residue = 0.0;
};

// eA-slash = d-slash(Psi) gamma2 gamma1 Psi^-1 - m Psi gamma0 Psi^-1 at x,
// with the partials taken by forward-mode duals. Works for T up to D2.
template <class T>
VectorParts<T> invert_potential_at(const SpinorField& field, const Point<T>& x, double m_scaled) {
  ComplexMatrix4<T> psi;
  ComplexMatrix4<T> dslash;
  for (int mu = 0; mu < 4; ++mu) {
    const MatrixSpinor<ad::Dual<T>> s = field(seed_point(x, mu));
    if (mu == 0) psi = primal(s.value);
    dslash += gamma_upper(mu) * tangent(s.value);
  }
  const ComplexMatrix4<T> inv = spinor_inverse(psi);
  const ComplexMatrix4<T> ea = dslash * gamma21() * inv - (psi * gamma(0)) * inv * m_scaled;
  VectorParts<T> parts = vector_components(ea);
  parts.vector.kind = VectorKind::potential;
  return parts;
}

Inversion invert_potential(const SpinorField& field, const Point<double>& x, double m_scaled = 1.0);

// The inverted potential as a field in its own right (D0..D1 arguments; D2
// would need the spinor at D3, which every shipped field provides).
PotentialField inverted_potential(SpinorField field, double m_scaled = 1.0);

// ||i gamma^mu d_mu psi - A^mu gamma_mu psi - m psi|| / max(||m psi||, floor).
double dirac_residual(const ColumnField& psi, const PotentialField& A, const Point<double>& x,
                      double m_scaled = 1.0, double floor = 1e-300);

// Same residual with central differences of step h in every coordinate.
double dirac_residual_fd(const ColumnField& psi, const PotentialField& A, const Point<double>& x,
                         double h, double m_scaled = 1.0, double floor = 1e-300);

ColumnField column_of(SpinorField field);

// Samples the imaginary residue of the inversion over a grid.
ResidualReport attainability_check(const SpinorField& field, const GridSpec& grid,
                                   double tolerance = 1e-10, double m_scaled = 1.0);

// J^mu = psi^dagger gamma^0 gamma^mu psi (contravariant).
template <class T>
FourVector<T> dirac_current(const DiracColumn<T>& psi) {
  FourVector<T> j;
  j.kind = VectorKind::current;
  for (int mu = 0; mu < 4; ++mu) {
    const DiracColumn<T> g = (gamma(0) * gamma_upper(mu)) * psi;
    T s(0.0);
    for (int i = 0; i < 4; ++i) s += psi[i].re * g[i].re + psi[i].im * g[i].im;
    j[mu] = s;
  }
  return j;
}

// s^mu = psi^dagger gamma5 gamma^0 gamma^mu psi with gamma5 = i gamma^0 gamma^1 gamma^2 gamma^3.
template <class T>
FourVector<T> spin_density(const DiracColumn<T>& psi) {
  FourVector<T> s;
  s.kind = VectorKind::spin;
  for (int mu = 0; mu < 4; ++mu) {
    const DiracColumn<T> g = (gamma5() * gamma(0) * gamma_upper(mu)) * psi;
    T acc(0.0);
    for (int i = 0; i < 4; ++i) acc += psi[i].re * g[i].re + psi[i].im * g[i].im;
    s[mu] = acc;
  }
  return s;
}

// Matrix forms Tr(Psi gamma0 tilde(Psi) gamma^mu)/4 and Tr(Psi gamma3 tilde(Psi) gamma^mu)/4.
FourVector<double> dirac_current_matrix(const MatrixSpinor<double>& psi);
FourVector<double> spin_density_matrix(const MatrixSpinor<double>& psi);

// |d_mu J^mu| divided by the sum of the magnitudes of the four terms plus the
// rest-mass rate m J^0, the same scale the Dirac residual is measured against.
double current_conservation_residual(const ColumnField& psi, const Point<double>& x, double m_scaled = 1.0);

// The same relative measure for d_mu(rho s^mu)/2 + m rho sin(beta), with
// rho e^{I beta} = Psi tilde(Psi).
double spin_divergence_residual(const SpinorField& psi, const Point<double>& x, double m_scaled = 1.0);

}  // namespace rdi
