#include "rdi/rdi.hpp"

#include <algorithm>
#include <cmath>

namespace rdi {
namespace {

double column_norm(const DiracColumn<double>& v) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += norm2(v[i]);
  return std::sqrt(s);
}

DiracColumn<double> dirac_operator_residual(const DiracColumn<double>& psi,
                                            const std::array<DiracColumn<double>, 4>& dpsi,
                                            const FourVector<double>& a, double m) {
  DiracColumn<double> r;
  for (int mu = 0; mu < 4; ++mu) {
    const DiracColumn<double> g = gamma_upper(mu) * dpsi[mu];
    for (int i = 0; i < 4; ++i) r[i] += Complex<double>(-g[i].im, g[i].re);
  }
  const DiracColumn<double> ap = slash(a) * psi;
  for (int i = 0; i < 4; ++i) r[i] -= ap[i] + psi[i] * m;
  return r;
}

// |sum| / (sum|terms| + m J^0); when the terms themselves are negligible
// against the local derivative scale (e.g. at a symmetry point) that scale is
// used instead.
double relative_sum(const std::array<double, 5>& terms, double derivative_scale, double rest_rate) {
  double total = 0.0, scale = rest_rate;
  for (double t : terms) {
    total += t;
    scale += std::fabs(t);
  }
  if (scale > 1e-12 * derivative_scale && scale > 0.0) return std::fabs(total) / scale;
  return derivative_scale > 0.0 ? std::fabs(total) / derivative_scale : 0.0;
}

FourVector<double> trace_components(const ComplexMatrix4<double>& m) {
  FourVector<double> v;
  for (int mu = 0; mu < 4; ++mu) v[mu] = trace(m * gamma_upper(mu)).re * 0.25;
  return v;
}

}  // namespace

SpinorField build_spinor(SpinorParameterization p) {
  return SpinorField([p](const auto& x) {
    return MatrixSpinor<typename std::decay_t<decltype(x)>::value_type>{build_spinor_matrix(p, x)};
  });
}

Inversion invert_potential(const SpinorField& field, const Point<double>& x, double m_scaled) {
  const auto parts = invert_potential_at(field, x, m_scaled);
  return {parts.vector, parts.imaginary_residue};
}

PotentialField inverted_potential(SpinorField field, double m_scaled) {
  return PotentialField([field = std::move(field), m_scaled](const auto& x) {
    return invert_potential_at(field, x, m_scaled).vector;
  });
}

ColumnField column_of(SpinorField field) {
  return ColumnField([field = std::move(field)](const auto& x) { return hestenes_extract(field(x)); });
}

double dirac_residual(const ColumnField& psi, const PotentialField& A, const Point<double>& x,
                      double m_scaled, double floor) {
  DiracColumn<double> v;
  std::array<DiracColumn<double>, 4> d;
  for (int mu = 0; mu < 4; ++mu) {
    const auto s = psi(seed_point(x, mu));
    if (mu == 0) v = primal(s);
    d[mu] = tangent(s);
  }
  const auto r = dirac_operator_residual(v, d, A(x), m_scaled);
  return column_norm(r) / std::max(column_norm(v) * std::fabs(m_scaled), floor);
}

double dirac_residual_fd(const ColumnField& psi, const PotentialField& A, const Point<double>& x, double h,
                         double m_scaled, double floor) {
  const DiracColumn<double> v = psi(x);
  std::array<DiracColumn<double>, 4> d;
  for (int mu = 0; mu < 4; ++mu) {
    Point<double> xp = x, xm = x;
    xp[mu] += h;
    xm[mu] -= h;
    const auto fp = psi(xp);
    const auto fm = psi(xm);
    for (int i = 0; i < 4; ++i) d[mu][i] = (fp[i] - fm[i]) * (0.5 / h);
  }
  const auto r = dirac_operator_residual(v, d, A(x), m_scaled);
  return column_norm(r) / std::max(column_norm(v) * std::fabs(m_scaled), floor);
}

ResidualReport attainability_check(const SpinorField& field, const GridSpec& grid, double tolerance,
                                   double m_scaled) {
  const auto residue = parallel_map(grid.size(), [&](std::size_t i) {
    return invert_potential(field, grid.point(i), m_scaled).imaginary_residue;
  });
  ResidualReport report;
  report.scenario = "attainability";
  report.entries.push_back(summarize("reality", residue, tolerance));
  return report;
}

FourVector<double> dirac_current_matrix(const MatrixSpinor<double>& psi) {
  auto v = trace_components(psi.value * gamma(0) * tilde(psi.value));
  v.kind = VectorKind::current;
  return v;
}

FourVector<double> spin_density_matrix(const MatrixSpinor<double>& psi) {
  auto v = trace_components(psi.value * gamma(3) * tilde(psi.value));
  v.kind = VectorKind::spin;
  return v;
}

double current_conservation_residual(const ColumnField& psi, const Point<double>& x, double m_scaled) {
  double total = 0.0, scale = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const double t = dirac_current(psi(seed_point(x, mu)))[mu].d;
    total += t;
    scale += std::fabs(t);
  }
  // The rest-mass phase rotation leaves epsilon * m * J^0 of noise in d_t J^0.
  scale += std::fabs(m_scaled) * dirac_current(psi(x))[0];
  return scale > 0.0 ? std::fabs(total) / scale : 0.0;
}

double spin_divergence_residual(const SpinorField& psi, const Point<double>& x, double m_scaled) {
  std::array<double, 5> terms{};
  double d = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    const auto ds = spin_density(hestenes_extract(psi(seed_point(x, mu))));
    terms[mu] = 0.5 * ds[mu].d;
    for (int nu = 0; nu < 4; ++nu) d = std::max(d, 0.5 * std::fabs(ds[nu].d));
  }
  const auto m = psi(x).value;
  terms[4] = m_scaled * scalar_pseudoscalar(m * tilde(m)).p;
  return relative_sum(terms, d, std::fabs(m_scaled) * dirac_current(hestenes_extract(psi(x)))[0]);
}

}  // namespace rdi
