#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "rdi/dual.hpp"

namespace rdi::quad {

struct Options {
  double rel_tol = 1e-12;
  int max_intervals = 200;
};

namespace detail {

inline constexpr std::array<double, 8> xgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes.
inline constexpr std::array<double, 4> wg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Piece {
  double a, b;
  T kronrod;
  double error;  // |K15 - G7| on innermost values
  double l1;
};

template <class T, class F>
Piece<T> rule(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T k = fc * wgk[7];
  double g = ad::value_of(fc) * wg[3];
  double l1 = std::fabs(ad::value_of(fc)) * wgk[7];
  for (int j = 0; j < 7; ++j) {
    const T f1 = f(c - h * xgk[j]);
    const T f2 = f(c + h * xgk[j]);
    k += (f1 + f2) * wgk[j];
    const double v1 = ad::value_of(f1);
    const double v2 = ad::value_of(f2);
    l1 += (std::fabs(v1) + std::fabs(v2)) * wgk[j];
    if (j % 2 == 1) g += (v1 + v2) * wg[j / 2];
  }
  k *= h;
  return {a, b, k, std::fabs(ad::value_of(k) - g * h), l1 * std::fabs(h)};
}

}  // namespace detail

// Adaptive Gauss-Kronrod (7/15) quadrature of a real or dual-valued integrand.
// Refinement decisions use only innermost values, so the derivative parts are
// the exact derivatives of the same discrete rule.
template <class T, class F>
T integrate(const F& f, double a, double b, const Options& opt = {}) {
  if (a == b) return T(0.0);
  std::vector<detail::Piece<T>> pieces{detail::rule<T>(f, a, b)};
  for (;;) {
    double err = 0.0, l1 = 0.0;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      err += pieces[i].error;
      l1 += pieces[i].l1;
      if (pieces[i].error > pieces[worst].error) worst = i;
    }
    if (err <= opt.rel_tol * l1 || static_cast<int>(pieces.size()) >= opt.max_intervals) break;
    const auto w = pieces[worst];
    const double mid = 0.5 * (w.a + w.b);
    pieces[worst] = detail::rule<T>(f, w.a, mid);
    pieces.push_back(detail::rule<T>(f, mid, w.b));
  }
  // Sum in interval order so the result does not depend on refinement history.
  std::sort(pieces.begin(), pieces.end(), [](const auto& p, const auto& q) { return p.a < q.a; });
  T total(0.0);
  for (const auto& p : pieces) total += p.kronrod;
  return total;
}

// int_0^upper h(phi) dphi for a possibly dual-valued upper limit, written as
// upper * int_0^1 h(upper s) ds.
template <class T, class H>
T integrate_from_zero(const H& h, const T& upper, const Options& opt = {}) {
  const auto g = [&](double s) -> T { return h(upper * s) * upper; };
  return integrate<T>(g, 0.0, 1.0, opt);
}

}  // namespace rdi::quad
