#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "rdi/field.hpp"

namespace rdi {

struct LawEntry {
  std::string law;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::size_t points = 0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ResidualReport {
  std::string scenario;
  std::vector<LawEntry> entries;

  bool all_pass() const;
  const LawEntry* find(const std::string& law) const;
};

// Non-finite residuals are recorded as the largest double so that the pass
// flag stays recomputable as max < tolerance.
LawEntry summarize(const std::string& law, const std::vector<double>& residuals, double tolerance);

struct GridAxis {
  double lo = 0.0;
  double hi = 0.0;
  int n = 1;
  double at(int i) const { return n <= 1 ? lo : lo + (hi - lo) * i / (n - 1); }
};

// Tensor-product grid over (t, x, y, z).
struct GridSpec {
  std::array<GridAxis, 4> axes;

  std::size_t size() const;
  Point<double> point(std::size_t index) const;
};

// Evaluates fn(i) for i in [0, n) on worker threads; results land in index
// order, so any later reduction is independent of scheduling.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& fn);

}  // namespace rdi
