#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "rdi/complex.hpp"
#include "rdi/dual.hpp"
#include "rdi/errors.hpp"

namespace rdi {

template <class T>
struct ComplexMatrix4 {
  // Row-major.
  std::array<Complex<T>, 16> e{};

  constexpr Complex<T>& operator()(int r, int c) { return e[4 * r + c]; }
  constexpr const Complex<T>& operator()(int r, int c) const { return e[4 * r + c]; }

  static constexpr ComplexMatrix4 identity() {
    ComplexMatrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = Complex<T>(T(1.0), T(0.0));
    return m;
  }
  static constexpr ComplexMatrix4 zero() { return {}; }

  constexpr ComplexMatrix4& operator+=(const ComplexMatrix4& o) {
    for (int i = 0; i < 16; ++i) e[i] += o.e[i];
    return *this;
  }
  constexpr ComplexMatrix4& operator-=(const ComplexMatrix4& o) {
    for (int i = 0; i < 16; ++i) e[i] -= o.e[i];
    return *this;
  }
};

template <class T>
struct DiracColumn {
  std::array<Complex<T>, 4> c{};
  constexpr Complex<T>& operator[](int i) { return c[i]; }
  constexpr const Complex<T>& operator[](int i) const { return c[i]; }
};

template <class T>
struct MatrixSpinor {
  ComplexMatrix4<T> value;
};

enum class VectorKind { generic, position, velocity, potential, current, spin };

// Contravariant components (v^0, v^1, v^2, v^3), signature (+,-,-,-).
template <class T>
struct FourVector {
  std::array<T, 4> c{};
  VectorKind kind = VectorKind::generic;

  constexpr T& operator[](int i) { return c[i]; }
  constexpr const T& operator[](int i) const { return c[i]; }
  constexpr T minkowski_square() const {
    return c[0] * c[0] - c[1] * c[1] - c[2] * c[2] - c[3] * c[3];
  }
};

// (ct, x, y, z) in scaled units, so the first entry is plain t.
template <class T>
struct SpacetimePoint {
  std::array<T, 4> x{};
  constexpr T& operator[](int i) { return x[i]; }
  constexpr const T& operator[](int i) const { return x[i]; }
  constexpr const T& t() const { return x[0]; }
};

// ---- matrix arithmetic -------------------------------------------------

template <class T>
constexpr ComplexMatrix4<T> operator+(ComplexMatrix4<T> a, const ComplexMatrix4<T>& b) {
  return a += b;
}
template <class T>
constexpr ComplexMatrix4<T> operator-(ComplexMatrix4<T> a, const ComplexMatrix4<T>& b) {
  return a -= b;
}
template <class T>
constexpr ComplexMatrix4<T> operator-(ComplexMatrix4<T> a) {
  for (auto& x : a.e) x = -x;
  return a;
}
template <class T>
constexpr ComplexMatrix4<T> operator*(const ComplexMatrix4<T>& a, const ComplexMatrix4<T>& b) {
  ComplexMatrix4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex<T>& aik = a(i, k);
      for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}
template <class T>
constexpr ComplexMatrix4<T> operator*(ComplexMatrix4<T> a, const Complex<T>& s) {
  for (auto& x : a.e) x *= s;
  return a;
}
template <class T>
constexpr ComplexMatrix4<T> operator*(const Complex<T>& s, const ComplexMatrix4<T>& a) {
  return a * s;
}
template <class T>
constexpr ComplexMatrix4<T> operator*(ComplexMatrix4<T> a, const T& s) {
  for (auto& x : a.e) x *= s;
  return a;
}
template <class T>
constexpr ComplexMatrix4<T> operator*(const T& s, const ComplexMatrix4<T>& a) {
  return a * s;
}
template <class T>
  requires(!std::is_same_v<T, double>)
constexpr ComplexMatrix4<T> operator*(ComplexMatrix4<T> a, double s) {
  return a * T(s);
}

namespace detail {
template <class T>
constexpr Complex<T> mixed_mul(const Complex<double>& a, const Complex<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
}  // namespace detail

// Constant (double) matrix times a dual-valued one; skips the structural zeros
// of the gamma matrices, which is most of the cost in the inversion.
template <class T>
  requires(!std::is_same_v<T, double>)
constexpr ComplexMatrix4<T> operator*(const ComplexMatrix4<double>& a, const ComplexMatrix4<T>& b) {
  ComplexMatrix4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex<double>& aik = a(i, k);
      if (aik.re == 0.0 && aik.im == 0.0) continue;
      for (int j = 0; j < 4; ++j) r(i, j) += detail::mixed_mul(aik, b(k, j));
    }
  return r;
}
template <class T>
  requires(!std::is_same_v<T, double>)
constexpr ComplexMatrix4<T> operator*(const ComplexMatrix4<T>& a, const ComplexMatrix4<double>& b) {
  ComplexMatrix4<T> r;
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) {
      const Complex<double>& bkj = b(k, j);
      if (bkj.re == 0.0 && bkj.im == 0.0) continue;
      for (int i = 0; i < 4; ++i) r(i, j) += detail::mixed_mul(bkj, a(i, k));
    }
  return r;
}

// Embeds a constant matrix into a dual-valued scalar type.
template <class T>
constexpr ComplexMatrix4<T> lift(const ComplexMatrix4<double>& a) {
  if constexpr (std::is_same_v<T, double>) {
    return a;
  } else {
    ComplexMatrix4<T> r;
    for (int i = 0; i < 16; ++i) r.e[i] = Complex<T>(T(a.e[i].re), T(a.e[i].im));
    return r;
  }
}

// s * K for constant K and variable real s.
template <class T>
constexpr ComplexMatrix4<T> scaled(const ComplexMatrix4<double>& k, const T& s) {
  ComplexMatrix4<T> r;
  for (int i = 0; i < 16; ++i)
    if (k.e[i].re != 0.0 || k.e[i].im != 0.0) r.e[i] = Complex<T>(s * k.e[i].re, s * k.e[i].im);
  return r;
}

template <class T>
constexpr ComplexMatrix4<T> dagger(const ComplexMatrix4<T>& a) {
  ComplexMatrix4<T> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = conj(a(j, i));
  return r;
}

template <class T>
constexpr Complex<T> trace(const ComplexMatrix4<T>& a) {
  return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

template <class T>
DiracColumn<T> operator*(const ComplexMatrix4<T>& a, const DiracColumn<T>& v) {
  DiracColumn<T> r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) r[i] += a(i, k) * v[k];
  return r;
}
template <class T>
  requires(!std::is_same_v<T, double>)
DiracColumn<T> operator*(const ComplexMatrix4<double>& a, const DiracColumn<T>& v) {
  DiracColumn<T> r;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex<double>& aik = a(i, k);
      if (aik.re == 0.0 && aik.im == 0.0) continue;
      r[i] += detail::mixed_mul(aik, v[k]);
    }
  return r;
}

template <class T>
double max_abs_diff(const ComplexMatrix4<T>& a, const ComplexMatrix4<T>& b) {
  double m = 0.0;
  for (int i = 0; i < 16; ++i) {
    const Complex<double> d = value_of(a.e[i] - b.e[i]);
    m = std::fmax(m, std::hypot(d.re, d.im));
  }
  return m;
}

double frobenius_norm(const ComplexMatrix4<double>& a);

// ---- Dirac-representation constants -------------------------------------

// Lower-index gamma_mu for mu = 0..3.
const ComplexMatrix4<double>& gamma(int mu);
// Accepts "0".."3", "i5" (pseudoscalar gamma0 gamma1 gamma2 gamma3) and
// "gamma5" (the Hermitian i*gamma^0 gamma^1 gamma^2 gamma^3).
ComplexMatrix4<double> gamma(std::string_view name);
// gamma^mu = g^{mu nu} gamma_nu.
const ComplexMatrix4<double>& gamma_upper(int mu);
// alpha_k = gamma_k gamma_0 for k = 1..3; alpha(0) is the identity.
const ComplexMatrix4<double>& alpha(int k);
// The unit pseudoscalar gamma0 gamma1 gamma2 gamma3 (squares to -1).
const ComplexMatrix4<double>& pseudoscalar();
const ComplexMatrix4<double>& gamma5();
// gamma_2 gamma_1, the spin bivector acting as the imaginary unit on spinors.
const ComplexMatrix4<double>& gamma21();
// pseudoscalar * alpha_k, k = 1..3.
const ComplexMatrix4<double>& pseudo_alpha(int k);
double metric(int mu, int nu);

// ---- spacetime-algebra operations ------------------------------------

// v^mu gamma_mu.
template <class T>
ComplexMatrix4<T> slash(const FourVector<T>& v) {
  ComplexMatrix4<T> r;
  for (int mu = 0; mu < 4; ++mu) r += scaled(gamma(mu), v[mu]);
  return r;
}

template <class T>
ComplexMatrix4<T> tilde(const ComplexMatrix4<T>& m) {
  // gamma0 is diagonal (1,1,-1,-1): conjugation just flips the off-diagonal blocks.
  ComplexMatrix4<T> r = dagger(m);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if ((i < 2) != (j < 2)) r(i, j) = -r(i, j);
  return r;
}

template <class T>
MatrixSpinor<T> hestenes_embed(const DiracColumn<T>& p) {
  const auto& a = p[0];
  const auto& b = p[1];
  const auto& c = p[2];
  const auto& d = p[3];
  MatrixSpinor<T> s;
  auto& m = s.value;
  m(0, 0) = a, m(1, 0) = b, m(2, 0) = c, m(3, 0) = d;
  m(0, 1) = -conj(b), m(1, 1) = conj(a), m(2, 1) = conj(d), m(3, 1) = -conj(c);
  m(0, 2) = c, m(1, 2) = d, m(2, 2) = a, m(3, 2) = b;
  m(0, 3) = conj(d), m(1, 3) = -conj(c), m(2, 3) = -conj(b), m(3, 3) = conj(a);
  return s;
}

template <class T>
DiracColumn<T> hestenes_extract(const MatrixSpinor<T>& s) {
  DiracColumn<T> p;
  for (int i = 0; i < 4; ++i) p[i] = s.value(i, 0);
  return p;
}

// (v^mu alpha_mu + 1)/sqrt(2(1+v0)) with v0 = sqrt(1+|v|^2).
template <class T>
ComplexMatrix4<T> boost(const std::array<T, 3>& v) {
  using std::sqrt;
  const T v0 = sqrt(1.0 + v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  const T n = 1.0 / sqrt(2.0 * (1.0 + v0));
  ComplexMatrix4<T> r = scaled(alpha(0), (1.0 + v0) * n);
  for (int k = 0; k < 3; ++k) r += scaled(alpha(k + 1), v[k] * n);
  return r;
}

// exp(-pseudoscalar theta^k alpha_k / 2) in closed half-angle form. Near
// theta = 0 the even Taylor series in |theta|^2 keeps derivatives finite.
template <class T>
ComplexMatrix4<T> rotor(const std::array<T, 3>& theta) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const T r2 = theta[0] * theta[0] + theta[1] * theta[1] + theta[2] * theta[2];
  T c, s;  // cos(r/2) and sin(r/2)/r
  if (ad::value_of(r2) < 1e-6) {
    c = 1.0 - r2 * (1.0 / 8.0 - r2 * (1.0 / 384.0 - r2 / 46080.0));
    s = 0.5 - r2 * (1.0 / 48.0 - r2 * (1.0 / 3840.0 - r2 / 645120.0));
  } else {
    const T r = sqrt(r2);
    c = cos(0.5 * r);
    s = sin(0.5 * r) / r;
  }
  ComplexMatrix4<T> m = scaled(alpha(0), c);
  for (int k = 0; k < 3; ++k) m -= scaled(pseudo_alpha(k + 1), theta[k] * s);
  return m;
}

// The bivector f1p(alpha1 + I alpha2) + f2p(alpha2 - I alpha1), scaled.
template <class T>
ComplexMatrix4<T> null_bivector(const T& f1p, const T& f2p, const T& scale) {
  ComplexMatrix4<T> b = scaled(alpha(1), f1p) + scaled(pseudo_alpha(2), f1p);
  b += scaled(alpha(2), f2p);
  b -= scaled(pseudo_alpha(1), f2p);
  return b * scale;
}

// exp of a null bivector truncates after the linear term.
template <class T>
ComplexMatrix4<T> null_bivector_exp(const T& f1p, const T& f2p, const T& scale) {
  return lift<T>(ComplexMatrix4<double>::identity()) + null_bivector(f1p, f2p, scale);
}

// cos(a) + I sin(a).
template <class T>
ComplexMatrix4<T> exp_pseudoscalar(const T& a) {
  using std::cos;
  using std::sin;
  return scaled(alpha(0), cos(a)) + scaled(pseudoscalar(), sin(a));
}

// cos(a) + gamma2 gamma1 sin(a); acts on the first column as e^{i a}.
template <class T>
ComplexMatrix4<T> exp_gamma21(const T& a) {
  using std::cos;
  using std::sin;
  return scaled(alpha(0), cos(a)) + scaled(gamma21(), sin(a));
}

template <class T>
struct VectorParts {
  FourVector<T> vector;
  double imaginary_residue = 0.0;
};

// Contravariant components M^mu = Tr(M gamma^mu)/4 and the largest imaginary
// part encountered.
template <class T>
VectorParts<T> vector_components(const ComplexMatrix4<T>& m) {
  VectorParts<T> out;
  for (int mu = 0; mu < 4; ++mu) {
    const Complex<T> tr = trace(m * gamma_upper(mu));
    out.vector[mu] = tr.re * 0.25;
    out.imaginary_residue = std::fmax(out.imaginary_residue, std::fabs(ad::value_of(tr.im)) * 0.25);
  }
  return out;
}

// Psi tilde(Psi) = s + p I for even-grade Psi; returns (s, p) and the largest
// component outside that two-dimensional subspace.
template <class T>
struct ScalarPseudoscalar {
  T s{};
  T p{};
  double off_subspace = 0.0;
};

template <class T>
ScalarPseudoscalar<T> scalar_pseudoscalar(const ComplexMatrix4<T>& m) {
  ScalarPseudoscalar<T> out;
  out.s = trace(m).re * 0.25;
  out.p = -(trace(m * pseudoscalar()).re * 0.25);
  const ComplexMatrix4<T> rest = m - scaled(alpha(0), out.s) - scaled(pseudoscalar(), out.p);
  for (const auto& x : rest.e) {
    const Complex<double> v = value_of(x);
    out.off_subspace = std::fmax(out.off_subspace, std::hypot(v.re, v.im));
  }
  return out;
}

// Inverse of an invertible even multivector via tilde: Psi^-1 = tilde(Psi)(s - pI)/(s^2+p^2).
template <class T>
ComplexMatrix4<T> spinor_inverse(const ComplexMatrix4<T>& psi, double singular_below = 1e-300) {
  const ComplexMatrix4<T> t = tilde(psi);
  const auto sp = scalar_pseudoscalar(psi * t);
  const T n2 = sp.s * sp.s + sp.p * sp.p;
  const double mag = std::sqrt(ad::value_of(n2));
  if (!(mag >= singular_below))
    throw SingularityError("spinor is not invertible: |Psi tilde(Psi)| too small", mag);
  const T inv = 1.0 / n2;
  return t * (scaled(alpha(0), sp.s * inv) - scaled(pseudoscalar(), sp.p * inv));
}

}  // namespace rdi
