#include "safefollow/vec3.hpp"

#include <ostream>
#include <string>

#include "safefollow/errors.hpp"

namespace safefollow {

DegenerateSeparation::DegenerateSeparation(double separation)
    : std::runtime_error("degenerate separation between vehicles: " +
                         std::to_string(separation) + " m"),
      separation_(separation) {}

double distance(const Vec3& a, const Vec3& b) { return norm(b - a); }

Vec3 unit_toward(const Vec3& from, const Vec3& to) {
  const Vec3 delta = to - from;
  const double len = norm(delta);
  if (!(len > kEpsilonSeparation)) throw DegenerateSeparation(len);
  return delta / len;
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

}  // namespace safefollow
