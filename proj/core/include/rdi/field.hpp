#pragma once

#include <array>
#include <functional>
#include <tuple>
#include <utility>

#include "rdi/dual.hpp"
#include "rdi/sta.hpp"

namespace rdi {

template <class... Ts>
struct ScalarList {};

using Depth0 = ScalarList<ad::D0>;
using UpTo1 = ScalarList<ad::D0, ad::D1>;
using UpTo2 = ScalarList<ad::D0, ad::D1, ad::D2>;
using UpTo3 = ScalarList<ad::D0, ad::D1, ad::D2, ad::D3>;
using UpTo4 = ScalarList<ad::D0, ad::D1, ad::D2, ad::D3, ad::D4>;

// A pure callable stored once per scalar type, so one generic lambda can be
// passed around at run time and still be evaluated with nested dual numbers.
template <template <class> class Sig, class List>
class Erased;

template <template <class> class Sig, class... Ts>
class Erased<Sig, ScalarList<Ts...>> {
 public:
  Erased() = default;
  template <class F>
    requires(!std::is_same_v<std::decay_t<F>, Erased>)
  Erased(F f) : fns_(std::function<Sig<Ts>>(f)...) {}

  template <class T>
  const std::function<Sig<T>>& at() const {
    return std::get<std::function<Sig<T>>>(fns_);
  }

  template <class First, class... Rest>
  decltype(auto) operator()(const First& a, const Rest&... rest) const {
    return at<scalar_of<First>>()(a, rest...);
  }

  explicit operator bool() const { return static_cast<bool>(std::get<0>(fns_)); }

 private:
  template <class A>
  struct scalar_of_impl {
    using type = A;
  };
  template <class A>
    requires requires { typename A::value_type; }
  struct scalar_of_impl<A> {
    using type = typename A::value_type;
  };
  template <class A>
  using scalar_of = typename scalar_of_impl<A>::type;

  std::tuple<std::function<Sig<Ts>>...> fns_;
};

// ---- signatures --------------------------------------------------------

template <class T>
using RealSig = T(const T&);
template <class T>
using PlaneSig = T(const T&, const T&);
template <class T>
using PhaseSig = T(const T&, const T&, const T&);

// Scalar point values carry their scalar type as value_type so that
// Erased::operator() can dispatch on them.
template <class T>
struct Point : SpacetimePoint<T> {
  using value_type = T;
  Point() = default;
  Point(const SpacetimePoint<T>& p) : SpacetimePoint<T>(p) {}
  Point(T t, T x, T y, T z) : SpacetimePoint<T>{{t, x, y, z}} {}
};

template <class T>
struct EMSample {
  std::array<T, 3> E{};
  std::array<T, 3> B{};
  SpacetimePoint<T> position{};
};

template <class T>
using SpinorSig = MatrixSpinor<T>(const Point<T>&);
template <class T>
using ColumnSig = DiracColumn<T>(const Point<T>&);
template <class T>
using PotentialSig = FourVector<T>(const Point<T>&);
template <class T>
using EMSig = EMSample<T>(const Point<T>&);
template <class T>
using ScalarFieldSig = T(const Point<T>&);
template <class T>
using Vec3FieldSig = std::array<T, 3>(const Point<T>&);

// f(t); the fourth dual level lets D1 callers take third derivatives.
using RealFunction = Erased<RealSig, UpTo4>;
// G(x', y').
using PlaneFunction = Erased<PlaneSig, UpTo4>;
// Phi(xi, x, y).
using PhaseFunction = Erased<PhaseSig, UpTo3>;

using SpinorField = Erased<SpinorSig, UpTo3>;
using ColumnField = Erased<ColumnSig, UpTo2>;
using PotentialField = Erased<PotentialSig, UpTo2>;
using EMField = Erased<EMSig, UpTo1>;
using ScalarField = Erased<ScalarFieldSig, UpTo3>;
using Vec3Field = Erased<Vec3FieldSig, UpTo3>;

// ---- points and partial derivatives ----------------------------------

template <class T>
Point<T> make_point(const T& t, const T& x, const T& y, const T& z) {
  return Point<T>(t, x, y, z);
}

// Lifts p to the next dual level with a unit seed along coordinate mu.
template <class T>
Point<ad::Dual<T>> seed_point(const Point<T>& p, int mu) {
  Point<ad::Dual<T>> q;
  for (int i = 0; i < 4; ++i) q[i] = ad::Dual<T>(p[i], T(i == mu ? 1.0 : 0.0));
  return q;
}

template <class T>
Point<ad::Dual<T>> lift_point(const Point<T>& p) {
  Point<ad::Dual<T>> q;
  for (int i = 0; i < 4; ++i) q[i] = ad::Dual<T>(p[i], T(0.0));
  return q;
}

inline Point<double> value_point(const Point<double>& p) { return p; }
template <class T>
Point<double> value_point(const Point<T>& p) {
  return Point<double>(ad::value_of(p[0]), ad::value_of(p[1]), ad::value_of(p[2]),
                       ad::value_of(p[3]));
}

// Primal and tangent parts of dual-valued composite results.
template <class T>
ComplexMatrix4<T> primal(const ComplexMatrix4<ad::Dual<T>>& m) {
  ComplexMatrix4<T> r;
  for (int i = 0; i < 16; ++i) r.e[i] = primal_of(m.e[i]);
  return r;
}
template <class T>
ComplexMatrix4<T> tangent(const ComplexMatrix4<ad::Dual<T>>& m) {
  ComplexMatrix4<T> r;
  for (int i = 0; i < 16; ++i) r.e[i] = deriv_of(m.e[i]);
  return r;
}
template <class T>
DiracColumn<T> primal(const DiracColumn<ad::Dual<T>>& v) {
  DiracColumn<T> r;
  for (int i = 0; i < 4; ++i) r[i] = primal_of(v[i]);
  return r;
}
template <class T>
DiracColumn<T> tangent(const DiracColumn<ad::Dual<T>>& v) {
  DiracColumn<T> r;
  for (int i = 0; i < 4; ++i) r[i] = deriv_of(v[i]);
  return r;
}
template <class T>
FourVector<T> primal(const FourVector<ad::Dual<T>>& v) {
  FourVector<T> r;
  r.kind = v.kind;
  for (int i = 0; i < 4; ++i) r[i] = v[i].v;
  return r;
}
template <class T>
FourVector<T> tangent(const FourVector<ad::Dual<T>>& v) {
  FourVector<T> r;
  r.kind = v.kind;
  for (int i = 0; i < 4; ++i) r[i] = v[i].d;
  return r;
}

template <class T>
EMSample<T> primal(const EMSample<ad::Dual<T>>& s) {
  EMSample<T> r;
  for (int k = 0; k < 3; ++k) {
    r.E[k] = s.E[k].v;
    r.B[k] = s.B[k].v;
  }
  for (int i = 0; i < 4; ++i) r.position[i] = s.position[i].v;
  return r;
}
template <class T>
EMSample<T> tangent(const EMSample<ad::Dual<T>>& s) {
  EMSample<T> r;
  for (int k = 0; k < 3; ++k) {
    r.E[k] = s.E[k].d;
    r.B[k] = s.B[k].d;
  }
  for (int i = 0; i < 4; ++i) r.position[i] = s.position[i].v;
  return r;
}

// d/dx^mu of a callable on points, evaluated at p.
template <class F, class T>
auto partial(const F& f, const Point<T>& p, int mu) {
  return tangent(f(seed_point(p, mu)));
}

// Partial derivatives of a two-argument function.
template <class F, class T>
T partial_x(const F& g, const T& x, const T& y) {
  return g(ad::seed(x), ad::Dual<T>(y, T(0.0))).d;
}
template <class F, class T>
T partial_y(const F& g, const T& x, const T& y) {
  return g(ad::Dual<T>(x, T(0.0)), ad::seed(y)).d;
}

}  // namespace rdi
