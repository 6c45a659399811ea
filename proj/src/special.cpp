#include "lbd/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lbd {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny =
    std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 600;

// Series for P(z, x), valid and fast for x < z + 1.
double gamma_p_series(double z, double x) {
  double ap = z;
  double term = 1.0 / z;
  double sum = term;
  for (int n = 0; n < kMaxIter; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps)
      return sum * std::exp(z * std::log(x) - x - log_gamma(z));
  }
  throw std::runtime_error("regularized_gamma_p: series did not converge");
}

// Modified Lentz continued fraction for Q(z, x), valid for x >= z + 1.
double gamma_q_contfrac(double z, double x) {
  double b = x + 1.0 - z;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -i * (i - z);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps)
      return std::exp(z * std::log(x) - x - log_gamma(z)) * h;
  }
  throw std::runtime_error(
      "regularized_gamma_p: continued fraction did not converge");
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_contfrac(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw std::runtime_error("regularized_beta: continued fraction did not converge");
}

}  // namespace

double log_gamma(double x) {
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,
      14.1360979747417471,     -0.491913816097620199,
      0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3,
      -0.210264441724104883e-3, 0.217439618115212643e-3,
      -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  if (!(x > 0.0))
    throw std::invalid_argument("log_gamma: argument must be positive");
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double regularized_gamma_p(double z, double x) {
  if (!(z > 0.0) || std::isnan(x))
    throw std::invalid_argument("regularized_gamma_p: requires z > 0");
  if (x < 0.0)
    throw std::invalid_argument("regularized_gamma_p: requires x >= 0");
  if (x == 0.0) return 0.0;
  if (x < z + 1.0) return gamma_p_series(z, x);
  return 1.0 - gamma_q_contfrac(z, x);
}

double lower_incomplete_gamma(double z, double x) {
  return regularized_gamma_p(z, x) * std::exp(log_gamma(z));
}

double regularized_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("regularized_beta: requires a > 0, b > 0");
  if (std::isnan(x) || x < 0.0 || x > 1.0)
    throw std::invalid_argument("regularized_beta: requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(ln_front) * beta_contfrac(a, b, x) / a;
  return 1.0 - std::exp(ln_front) * beta_contfrac(b, a, 1.0 - x) / b;
}

}  // namespace lbd
