#include "lbd/model.hpp"

namespace lbd {

const char* to_string(ModelId id) {
  switch (id) {
    case ModelId::M1: return "M1";
    case ModelId::M2: return "M2";
    case ModelId::M3: return "M3";
  }
  return "?";
}

ModelId model_from_string(const std::string& name) {
  if (name == "M1" || name == "m1") return ModelId::M1;
  if (name == "M2" || name == "m2") return ModelId::M2;
  if (name == "M3" || name == "m3") return ModelId::M3;
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected M1, M2 or M3)");
}

RateConstants map_physical_params(const PhysicalParams& p) {
  return RateConstants{p.d1 * p.x, p.d2, p.C * p.d1 * p.x / 2.0};
}

}  // namespace lbd
