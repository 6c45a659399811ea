#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lbd {

enum class ModelId { M1, M2, M3 };

const char* to_string(ModelId id);
ModelId model_from_string(const std::string& name);

// Physical constants of the adsorption-desorption kinetics: forward rate d1,
// target concentration x, backward rate d2, noise amplitude C.
struct PhysicalParams {
  double d1;
  double x;
  double d2;
  double C;

  PhysicalParams(double d1_, double x_, double d2_, double C_)
      : d1(d1_), x(x_), d2(d2_), C(C_) {
    if (!(std::isfinite(d1) && d1 > 0.0) || !(std::isfinite(x) && x > 0.0) ||
        !(std::isfinite(d2) && d2 > 0.0) || !(std::isfinite(C) && C > 0.0)) {
      throw std::invalid_argument(
          "PhysicalParams: d1, x, d2, C must all be finite and positive");
    }
  }
};

struct RateConstants {
  double c1;
  double c2;
  double c3;
};

// c1 = d1*x, c2 = d2, c3 = C*d1*x/2.
RateConstants map_physical_params(const PhysicalParams& p);

// Immutable description of a finite birth-death chain on {0,...,N} with
// linear adsorption/desorption rates plus a model-specific noise term that
// vanishes at the state-space boundary.
//
// c3 == 0 is admitted as a degenerate case (pure linear chain, stationary law
// Binomial(N, c1/(c1+c2))); the derived constants a and b are then undefined.
class ModelSpec {
 public:
  ModelSpec(ModelId model, double c1, double c2, double c3, int n)
      : model_(model), c1_(c1), c2_(c2), c3_(c3), n_(n) {
    if (!(std::isfinite(c1) && c1 > 0.0) || !(std::isfinite(c2) && c2 > 0.0) ||
        !(std::isfinite(c3) && c3 >= 0.0)) {
      throw std::invalid_argument(
          "ModelSpec: requires c1 > 0, c2 > 0, c3 >= 0");
    }
    if (n < 1) throw std::invalid_argument("ModelSpec: requires N >= 1");
  }

  ModelId model() const { return model_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }
  double c3() const { return c3_; }
  int N() const { return n_; }

  // a = c1/c3 and b = (c1+c2)/c3 satisfy b > a > 0 whenever c3 > 0.
  double a() const {
    require_noise();
    return c1_ / c3_;
  }
  double b() const {
    require_noise();
    return (c1_ + c2_) / c3_;
  }

  // Noise term of the rate functions; zero at both ends of the state space.
  double noise_term(int k) const {
    check_state(k);
    const double nd = static_cast<double>(n_);
    const double kd = static_cast<double>(k);
    switch (model_) {
      case ModelId::M1:
        return k < n_ ? c3_ * nd * kd : 0.0;
      case ModelId::M2:
        return k > 0 ? c3_ * nd * (nd - kd) : 0.0;
      case ModelId::M3:
        return c3_ * kd * (nd - kd);
    }
    return 0.0;  // unreachable
  }

  double birth_rate(int k) const {
    check_state(k);
    return c1_ * static_cast<double>(n_ - k) + noise_term(k);
  }

  double death_rate(int k) const {
    check_state(k);
    return c2_ * static_cast<double>(k) + noise_term(k);
  }

 private:
  void check_state(int k) const {
    if (k < 0 || k > n_)
      throw std::out_of_range("ModelSpec: state index outside {0,...,N}");
  }
  void require_noise() const {
    if (c3_ == 0.0)
      throw std::domain_error("ModelSpec: a and b are undefined for c3 == 0");
  }

  ModelId model_;
  double c1_, c2_, c3_;
  int n_;
};

}  // namespace lbd
