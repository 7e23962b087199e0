#pragma once

#include <cmath>
#include <iosfwd>

namespace safefollow {

// Separation below which follower/target geometry is treated as degenerate.
inline constexpr double kEpsilonSeparation = 1e-6;

/// Position (m) or velocity (m/s) in a fixed world frame.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(const Vec3& a, double s) {
    return {a.x / s, a.y / s, a.z / s};
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;

  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double norm(const Vec3& v) { return std::hypot(v.x, v.y, v.z); }

constexpr double max_abs_component(const Vec3& v) {
  const double ax = v.x < 0 ? -v.x : v.x;
  const double ay = v.y < 0 ? -v.y : v.y;
  const double az = v.z < 0 ? -v.z : v.z;
  return ax > ay ? (ax > az ? ax : az) : (ay > az ? ay : az);
}

/// Euclidean distance between two points (the inter-vehicle distance lambda).
double distance(const Vec3& a, const Vec3& b);

/// Unit vector pointing from `from` to `to`.
/// Throws DegenerateSeparation when the points are closer than
/// kEpsilonSeparation.
Vec3 unit_toward(const Vec3& from, const Vec3& to);

std::ostream& operator<<(std::ostream& os, const Vec3& v);

}  // namespace safefollow
