#pragma once

namespace lbd {

// log Gamma(x) for x > 0 (Lanczos approximation, ~1e-15 relative).
double log_gamma(double x);

// Regularized lower incomplete gamma P(z, x) in [0, 1]; z > 0, x >= 0.
// Power series for x < z+1, continued fraction for the complement otherwise.
double regularized_gamma_p(double z, double x);

// Unnormalized lower incomplete gamma: integral of s^(z-1) e^(-s) over (0, x).
double lower_incomplete_gamma(double z, double x);

// Regularized incomplete beta I_x(a, b) in [0, 1]; a, b > 0, x in [0, 1].
double regularized_beta(double a, double b, double x);

}  // namespace lbd
