#pragma once

#include <cmath>
#include <type_traits>

namespace rdi::ad {

// Forward-mode dual number v + d*eps with eps^2 = 0. Nesting Dual<Dual<double>>
// gives mixed second derivatives; every operation is written once for any
// inner type so the nesting depth is only limited by compile time.
template <class T>
struct Dual {
  T v{};
  T d{};

  constexpr Dual() = default;
  constexpr Dual(const T& value, const T& deriv) : v(value), d(deriv) {}
  template <class U>
    requires std::is_arithmetic_v<U>
  constexpr Dual(U x) : v(static_cast<double>(x)), d(0.0) {}
  constexpr Dual(const T& x)
    requires(!std::is_arithmetic_v<T>)
      : v(x), d(0.0) {}

  constexpr Dual& operator+=(const Dual& o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  constexpr Dual& operator-=(const Dual& o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  constexpr Dual& operator*=(const Dual& o) {
    d = d * o.v + v * o.d;
    v *= o.v;
    return *this;
  }
  constexpr Dual& operator/=(const Dual& o) {
    const T inv = T(1.0) / o.v;
    v *= inv;
    d = (d - v * o.d) * inv;
    return *this;
  }
  constexpr Dual& operator*=(double s) {
    v *= s;
    d *= s;
    return *this;
  }
  constexpr Dual& operator/=(double s) { return *this *= (1.0 / s); }
  constexpr Dual& operator+=(double s) {
    v += s;
    return *this;
  }
  constexpr Dual& operator-=(double s) {
    v -= s;
    return *this;
  }
};

template <class T>
struct is_dual : std::false_type {};
template <class T>
struct is_dual<Dual<T>> : std::true_type {};

template <class T>
inline constexpr bool is_dual_v = is_dual<T>::value;

template <class T>
struct depth : std::integral_constant<int, 0> {};
template <class T>
struct depth<Dual<T>> : std::integral_constant<int, 1 + depth<T>::value> {};

// Innermost real value of any nesting.
constexpr double value_of(double x) { return x; }
template <class T>
constexpr double value_of(const Dual<T>& x) {
  return value_of(x.v);
}

template <class T>
constexpr Dual<T> operator+(const Dual<T>& a) {
  return a;
}
template <class T>
constexpr Dual<T> operator-(const Dual<T>& a) {
  return {-a.v, -a.d};
}
template <class T>
constexpr Dual<T> operator+(Dual<T> a, const Dual<T>& b) {
  return a += b;
}
template <class T>
constexpr Dual<T> operator-(Dual<T> a, const Dual<T>& b) {
  return a -= b;
}
template <class T>
constexpr Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}
template <class T>
constexpr Dual<T> operator/(Dual<T> a, const Dual<T>& b) {
  return a /= b;
}

template <class T>
constexpr Dual<T> operator+(Dual<T> a, double s) {
  return a += s;
}
template <class T>
constexpr Dual<T> operator+(double s, Dual<T> a) {
  return a += s;
}
template <class T>
constexpr Dual<T> operator-(Dual<T> a, double s) {
  return a -= s;
}
template <class T>
constexpr Dual<T> operator-(double s, const Dual<T>& a) {
  return {s - a.v, -a.d};
}
template <class T>
constexpr Dual<T> operator*(Dual<T> a, double s) {
  return a *= s;
}
template <class T>
constexpr Dual<T> operator*(double s, Dual<T> a) {
  return a *= s;
}
template <class T>
constexpr Dual<T> operator/(Dual<T> a, double s) {
  return a /= s;
}
template <class T>
constexpr Dual<T> operator/(double s, const Dual<T>& a) {
  const T inv = T(1.0) / a.v;
  return {s * inv, -s * a.d * inv * inv};
}

// Comparisons look only at the innermost value; they drive branches, never
// derivatives.
template <class T>
constexpr bool operator<(const Dual<T>& a, const Dual<T>& b) {
  return value_of(a) < value_of(b);
}
template <class T>
constexpr bool operator>(const Dual<T>& a, const Dual<T>& b) {
  return value_of(a) > value_of(b);
}
template <class T>
constexpr bool operator<(const Dual<T>& a, double b) {
  return value_of(a) < b;
}
template <class T>
constexpr bool operator>(const Dual<T>& a, double b) {
  return value_of(a) > b;
}
template <class T>
constexpr bool operator<=(const Dual<T>& a, double b) {
  return value_of(a) <= b;
}
template <class T>
constexpr bool operator>=(const Dual<T>& a, double b) {
  return value_of(a) >= b;
}
template <class T>
constexpr bool operator<(double a, const Dual<T>& b) {
  return a < value_of(b);
}
template <class T>
constexpr bool operator>(double a, const Dual<T>& b) {
  return a > value_of(b);
}

using std::atan;
using std::atan2;
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  const T s = sqrt(a.v);
  return {s, a.d / (2.0 * s)};
}
template <class T>
Dual<T> exp(const Dual<T>& a) {
  const T e = exp(a.v);
  return {e, a.d * e};
}
template <class T>
Dual<T> log(const Dual<T>& a) {
  return {log(a.v), a.d / a.v};
}
template <class T>
Dual<T> sin(const Dual<T>& a) {
  return {sin(a.v), a.d * cos(a.v)};
}
template <class T>
Dual<T> cos(const Dual<T>& a) {
  return {cos(a.v), -(a.d * sin(a.v))};
}
template <class T>
Dual<T> atan(const Dual<T>& a) {
  return {atan(a.v), a.d / (1.0 + a.v * a.v)};
}
template <class T>
Dual<T> atan2(const Dual<T>& y, const Dual<T>& x) {
  return {atan2(y.v, x.v), (x.v * y.d - y.v * x.d) / (x.v * x.v + y.v * y.v)};
}
template <class T>
Dual<T> pow(const Dual<T>& a, double p) {
  using std::pow;
  const T pm1 = pow(a.v, p - 1.0);
  return {pm1 * a.v, p * pm1 * a.d};
}
template <class T>
Dual<T> abs(const Dual<T>& a) {
  return value_of(a) < 0.0 ? -a : a;
}

template <class T>
constexpr T square(const T& x) {
  return x * x;
}

// Seeds a variable for differentiation: the returned dual carries unit
// derivative along this argument.
template <class T>
constexpr Dual<T> seed(const T& x) {
  return Dual<T>(x, T(1.0));
}

// d/dx f(x) for a generic callable f.
template <class F, class T>
T derivative(const F& f, const T& x) {
  return f(seed(x)).d;
}

template <class F, class T>
T second_derivative(const F& f, const T& x) {
  return derivative([&f](const auto& s) { return derivative(f, s); }, x);
}

template <class F, class T>
T third_derivative(const F& f, const T& x) {
  return derivative([&f](const auto& s) { return second_derivative(f, s); }, x);
}

using D0 = double;
using D1 = Dual<D0>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;

}  // namespace rdi::ad
