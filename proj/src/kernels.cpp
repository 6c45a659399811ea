#include "lbd/kernels.hpp"

#include <cmath>

namespace lbd::kernels {

namespace serial {

double sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

double max_value(std::span<const double> v) {
  double m = v[0];
  for (double x : v)
    if (x > m) m = x;
  return m;
}

double log_sum_exp(std::span<const double> v) {
  const double m = max_value(v);
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void inclusive_prefix_sum(std::span<const double> in, std::span<double> out) {
  double run = 0.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    run += in[i];
    out[i] = run;
  }
}

}  // namespace serial

double sum(std::span<const double> v, Exec exec) {
  if (exec == Exec::Serial) return serial::sum(v);
  return sum_indexed(v.size(), [&](std::size_t i) { return v[i]; });
}

double max_value(std::span<const double> v, Exec exec) {
  if (exec == Exec::Serial) return serial::max_value(v);
  return max_indexed(v.size(), [&](std::size_t i) { return v[i]; });
}

double log_sum_exp(std::span<const double> v, Exec exec) {
  if (exec == Exec::Serial) return serial::log_sum_exp(v);
  const double m = max_value(v, exec);
  const double s =
      sum_indexed(v.size(), [&](std::size_t i) { return std::exp(v[i] - m); });
  return m + std::log(s);
}

double dot(std::span<const double> a, std::span<const double> b, Exec exec) {
  if (exec == Exec::Serial) return serial::dot(a, b);
  return sum_indexed(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

void inclusive_prefix_sum(std::span<const double> in, std::span<double> out,
                          Exec exec) {
  if (exec == Exec::Serial || in.size() < 2 * kBlock) {
    serial::inclusive_prefix_sum(in, out);
    return;
  }
  const std::size_t n = in.size();
  const std::size_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<double> block_total(nblocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += in[i];
    block_total[static_cast<std::size_t>(b)] = s;
  }
  // Exclusive offsets, accumulated in block order.
  std::vector<double> offset(nblocks);
  double run = 0.0;
  for (std::size_t b = 0; b < nblocks; ++b) {
    offset[b] = run;
    run += block_total[b];
  }
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double s = offset[static_cast<std::size_t>(b)];
    for (std::size_t i = lo; i < hi; ++i) {
      s += in[i];
      out[i] = s;
    }
  }
}

double kahan_sum(std::span<const double> v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace lbd::kernels
