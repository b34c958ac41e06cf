#include "rdi/sta.hpp"

#include <string>

namespace rdi {
namespace {

using M = ComplexMatrix4<double>;
using C = Complex<double>;

// 2x2 blocks (a b; c d) assembled into a 4x4 matrix.
M blocks(const std::array<C, 4>& a, const std::array<C, 4>& b, const std::array<C, 4>& c,
         const std::array<C, 4>& d) {
  M m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      m(i, j) = a[2 * i + j];
      m(i, j + 2) = b[2 * i + j];
      m(i + 2, j) = c[2 * i + j];
      m(i + 2, j + 2) = d[2 * i + j];
    }
  return m;
}

std::array<C, 4> neg(std::array<C, 4> s) {
  for (auto& x : s) x = -x;
  return s;
}

struct Tables {
  std::array<M, 4> lower, upper, alpha, pseudo_alpha;
  M i5, g5, g21;

  Tables() {
    const std::array<C, 4> id{C(1.0), C(0.0), C(0.0), C(1.0)};
    const std::array<C, 4> zero{};
    const std::array<std::array<C, 4>, 3> sigma{{
        {C(0.0), C(1.0), C(1.0), C(0.0)},
        {C(0.0), C(0.0, -1.0), C(0.0, 1.0), C(0.0)},
        {C(1.0), C(0.0), C(0.0), C(-1.0)},
    }};
    lower[0] = blocks(id, zero, zero, neg(id));
    for (int k = 0; k < 3; ++k) lower[k + 1] = blocks(zero, neg(sigma[k]), sigma[k], zero);
    upper[0] = lower[0];
    for (int k = 1; k < 4; ++k) upper[k] = -lower[k];
    alpha[0] = M::identity();
    for (int k = 1; k < 4; ++k) alpha[k] = lower[k] * lower[0];
    i5 = lower[0] * lower[1] * lower[2] * lower[3];
    g5 = i5 * C(0.0, -1.0);  // i gamma^0 gamma^1 gamma^2 gamma^3 = -i gamma_0 gamma_1 gamma_2 gamma_3
    g21 = lower[2] * lower[1];
    pseudo_alpha[0] = i5;
    for (int k = 1; k < 4; ++k) pseudo_alpha[k] = i5 * alpha[k];
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

int check_index(int mu, int lo) {
  if (mu < lo || mu > 3) throw ArgumentError("gamma index out of range: " + std::to_string(mu));
  return mu;
}

}  // namespace

const M& gamma(int mu) { return tables().lower[check_index(mu, 0)]; }

M gamma(std::string_view name) {
  if (name.size() == 1 && name[0] >= '0' && name[0] <= '3') return gamma(name[0] - '0');
  if (name == "i5") return tables().i5;
  if (name == "gamma5") return tables().g5;
  throw ArgumentError("unknown gamma index: " + std::string(name));
}

const M& gamma_upper(int mu) { return tables().upper[check_index(mu, 0)]; }
const M& alpha(int k) { return tables().alpha[check_index(k, 0)]; }
const M& pseudoscalar() { return tables().i5; }
const M& gamma5() { return tables().g5; }
const M& gamma21() { return tables().g21; }
const M& pseudo_alpha(int k) { return tables().pseudo_alpha[check_index(k, 0)]; }

double metric(int mu, int nu) {
  check_index(mu, 0);
  check_index(nu, 0);
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

double frobenius_norm(const M& a) {
  double s = 0.0;
  for (const auto& x : a.e) s += norm2(x);
  return std::sqrt(s);
}

}  // namespace rdi
