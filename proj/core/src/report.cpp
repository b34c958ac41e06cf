#include "rdi/report.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace rdi {

bool ResidualReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const LawEntry& e) { return e.pass; });
}

const LawEntry* ResidualReport::find(const std::string& law) const {
  for (const auto& e : entries)
    if (e.law == law) return &e;
  return nullptr;
}

LawEntry summarize(const std::string& law, const std::vector<double>& residuals, double tolerance) {
  LawEntry e;
  e.law = law;
  e.tolerance = tolerance;
  e.points = residuals.size();
  double sum = 0.0;
  for (double r : residuals) {
    const double v = std::isfinite(r) ? std::fabs(r) : std::numeric_limits<double>::max();
    e.max_residual = std::max(e.max_residual, v);
    sum += v;
  }
  e.mean_residual = residuals.empty() ? 0.0 : sum / static_cast<double>(residuals.size());
  e.pass = e.max_residual < tolerance;
  return e;
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= static_cast<std::size_t>(std::max(a.n, 1));
  return n;
}

Point<double> GridSpec::point(std::size_t index) const {
  Point<double> p;
  for (int k = 3; k >= 0; --k) {
    const auto n = static_cast<std::size_t>(std::max(axes[k].n, 1));
    p[k] = axes[k].at(static_cast<int>(index % n));
    index /= n;
  }
  return p;
}

std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& fn) {
  std::vector<double> out(n);
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace rdi
