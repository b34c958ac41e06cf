#pragma once

#include <cmath>

#include "rdi/dual.hpp"

namespace rdi {

// std::complex<T> is unspecified for non-floating T, so dual-valued complex
// arithmetic gets its own minimal type.
template <class T>
struct Complex {
  T re{};
  T im{};

  constexpr Complex() = default;
  constexpr Complex(const T& r, const T& i) : re(r), im(i) {}
  constexpr Complex(double r)
    requires(!std::is_same_v<T, double>)
      : re(r), im(0.0) {}
  constexpr Complex(const T& r) : re(r), im(0.0) {}

  constexpr Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  constexpr Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  constexpr Complex& operator*=(const Complex& o) {
    const T r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  constexpr Complex& operator*=(const T& s) {
    re *= s;
    im *= s;
    return *this;
  }
};

template <class T>
constexpr Complex<T> operator+(Complex<T> a, const Complex<T>& b) {
  return a += b;
}
template <class T>
constexpr Complex<T> operator-(Complex<T> a, const Complex<T>& b) {
  return a -= b;
}
template <class T>
constexpr Complex<T> operator-(const Complex<T>& a) {
  return {-a.re, -a.im};
}
template <class T>
constexpr Complex<T> operator*(Complex<T> a, const Complex<T>& b) {
  return a *= b;
}
template <class T>
constexpr Complex<T> operator*(Complex<T> a, const T& s) {
  return a *= s;
}
template <class T>
constexpr Complex<T> operator*(const T& s, Complex<T> a) {
  return a *= s;
}
template <class T>
  requires(!std::is_same_v<T, double>)
constexpr Complex<T> operator*(Complex<T> a, double s) {
  a.re *= s;
  a.im *= s;
  return a;
}
template <class T>
  requires(!std::is_same_v<T, double>)
constexpr Complex<T> operator*(double s, Complex<T> a) {
  a.re *= s;
  a.im *= s;
  return a;
}
template <class T>
constexpr Complex<T> operator/(const Complex<T>& a, const T& s) {
  const T inv = T(1.0) / s;
  return {a.re * inv, a.im * inv};
}
template <class T>
constexpr Complex<T> operator/(const Complex<T>& a, const Complex<T>& b) {
  const T inv = T(1.0) / (b.re * b.re + b.im * b.im);
  return {(a.re * b.re + a.im * b.im) * inv, (a.im * b.re - a.re * b.im) * inv};
}

template <class T>
constexpr Complex<T> conj(const Complex<T>& a) {
  return {a.re, -a.im};
}
template <class T>
constexpr T norm2(const Complex<T>& a) {
  return a.re * a.re + a.im * a.im;
}
inline double abs(const Complex<double>& a) { return std::hypot(a.re, a.im); }

// e^{i phase}
template <class T>
Complex<T> expi(const T& phase) {
  using std::cos;
  using std::sin;
  return {cos(phase), sin(phase)};
}

template <class T>
constexpr Complex<T> imag_unit() {
  return {T(0.0), T(1.0)};
}

// Drops all derivative parts.
template <class T>
constexpr Complex<double> value_of(const Complex<T>& a) {
  return {ad::value_of(a.re), ad::value_of(a.im)};
}

// Derivative part of a first-order dual complex.
template <class T>
constexpr Complex<T> deriv_of(const Complex<ad::Dual<T>>& a) {
  return {a.re.d, a.im.d};
}
template <class T>
constexpr Complex<T> primal_of(const Complex<ad::Dual<T>>& a) {
  return {a.re.v, a.im.v};
}

}  // namespace rdi
