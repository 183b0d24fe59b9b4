#include "lplde/model.hpp"

#include <cmath>
#include <string>

#include "lplde/errors.hpp"

namespace lplde {

void ModelSpec::validate() const {
  if (!std::isfinite(omega) || !std::isfinite(mu) || !std::isfinite(amplitude) ||
      !std::isfinite(lambda)) {
    throw InvalidModel("model parameters must be finite");
  }
  if (omega <= 0.0) throw InvalidModel("omega must be positive");
  if (amplitude <= 0.0) throw InvalidModel("amplitude must be positive");
  if (lambda < 0.0) throw InvalidModel("lambda must be non-negative");
  if (order < 0 || order > kMaxOrder) {
    throw InvalidModel("order must lie in [0, " + std::to_string(kMaxOrder) + "], got " +
                       std::to_string(order));
  }
}

std::string_view to_string(MethodTag tag) {
  switch (tag) {
    case MethodTag::LP: return "LP";
    case MethodTag::LPLDE_PMS: return "LPLDE_PMS";
    case MethodTag::LPLDE_FIXED_LAMBDA: return "LPLDE_FIXED_LAMBDA";
  }
  return "?";
}

}  // namespace lplde
