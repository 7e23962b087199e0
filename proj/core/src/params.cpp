#include "safefollow/params.hpp"

#include <cmath>

#include "safefollow/errors.hpp"

namespace safefollow {

void FilterParams::validate() const {
  if (!(std::isfinite(d_min) && d_min > 0.0))
    throw ValidationError("d_min must be > 0");
  if (!(std::isfinite(alpha) && alpha > 0.0))
    throw ValidationError("alpha must be > 0");
  if (!(std::isfinite(v_max) && v_max > 0.0))
    throw ValidationError("v_max must be > 0");
}

}  // namespace safefollow
