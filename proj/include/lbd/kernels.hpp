#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lbd::kernels {

// Execution policy of the numeric kernels. Parallel uses OpenMP over
// fixed-size blocks and combines block partials in index order, so results
// do not depend on the thread count. Serial is the plain single-loop
// reference kept for testing and benchmarking.
enum class Exec { Serial, Parallel };

// Block length of the parallel reductions/scans (doubles per block).
inline constexpr std::size_t kBlock = 2048;

namespace serial {
double sum(std::span<const double> v);
double max_value(std::span<const double> v);
double log_sum_exp(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
void inclusive_prefix_sum(std::span<const double> in, std::span<double> out);
}  // namespace serial

double sum(std::span<const double> v, Exec exec = Exec::Parallel);
double max_value(std::span<const double> v, Exec exec = Exec::Parallel);
double log_sum_exp(std::span<const double> v, Exec exec = Exec::Parallel);
double dot(std::span<const double> a, std::span<const double> b,
           Exec exec = Exec::Parallel);
void inclusive_prefix_sum(std::span<const double> in, std::span<double> out,
                          Exec exec = Exec::Parallel);

// Compensated (Kahan) summation; used where the result feeds a tolerance
// much tighter than n*eps.
double kahan_sum(std::span<const double> v);

// Blocked sum of f(0), ..., f(n-1). Same determinism guarantee as sum().
template <class F>
double sum_indexed(std::size_t n, F&& f, Exec exec = Exec::Parallel) {
  if (n == 0) return 0.0;
  if (exec == Exec::Serial) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += f(i);
    return s;
  }
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

// Blocked max of f(0), ..., f(n-1); n must be positive.
template <class F>
double max_indexed(std::size_t n, F&& f, Exec exec = Exec::Parallel) {
  if (exec == Exec::Serial || n < 2 * kBlock) {
    double m = f(0);
    for (std::size_t i = 1; i < n; ++i) {
      const double x = f(i);
      if (x > m) m = x;
    }
    return m;
  }
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double m = f(lo);
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double x = f(i);
      if (x > m) m = x;
    }
    partial[static_cast<std::size_t>(b)] = m;
  }
  double m = partial[0];
  for (double p : partial)
    if (p > m) m = p;
  return m;
}

// Blocked elementwise fill: out[i] = f(i).
template <class F>
void map_indexed(std::span<double> out, F&& f, Exec exec = Exec::Parallel) {
  const long long n = static_cast<long long>(out.size());
  if (exec == Exec::Serial) {
    for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
    return;
  }
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(i);
}

}  // namespace lbd::kernels
