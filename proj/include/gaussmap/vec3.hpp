#pragma once

#include <cmath>
#include <string>

#include "gaussmap/error.hpp"

namespace gaussmap {

// Degeneracy threshold for all geometric predicates (antipodality,
// coplanarity, point-on-great-circle). Inputs violating a predicate within
// this tolerance are rejected, never silently perturbed; callers own
// perturbation.
inline constexpr double kEpsGen = 1e-9;

// Absolute tolerance for angle comparisons.
inline constexpr double kEpsAngle = 1e-9;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// Scalar triple product <a, b x c>.
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

inline double norm2(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm2(v)); }

inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }

// A point on the unit sphere S^2. Construction normalizes; the squared norm
// is 1 within 1e-12 afterwards.
class UnitVec {
 public:
  UnitVec() : v_(0.0, 0.0, 1.0) {}

  explicit UnitVec(const Vec3& v) {
    double n = norm(v);
    require(n > kEpsGen, ErrorCode::InvalidInput,
            "cannot normalize near-zero vector");
    v_ = v / n;
  }

  UnitVec(double x, double y, double z) : UnitVec(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double x() const { return v_.x; }
  double y() const { return v_.y; }
  double z() const { return v_.z; }

  UnitVec operator-() const { return UnitVec(AlreadyUnit{}, -v_); }

 private:
  struct AlreadyUnit {};
  UnitVec(AlreadyUnit, const Vec3& v) : v_(v) {}

  Vec3 v_;
};

inline double dot(const UnitVec& a, const UnitVec& b) {
  return dot(a.vec(), b.vec());
}
inline double dot(const UnitVec& a, const Vec3& b) { return dot(a.vec(), b); }
inline double dot(const Vec3& a, const UnitVec& b) { return dot(a, b.vec()); }
inline Vec3 cross(const UnitVec& a, const UnitVec& b) {
  return cross(a.vec(), b.vec());
}

// Robust angle between unit vectors, in [0, pi].
inline double angle_between(const UnitVec& a, const UnitVec& b) {
  return std::atan2(norm(cross(a.vec(), b.vec())), dot(a, b));
}

inline bool nearly_equal(const UnitVec& a, const UnitVec& b, double tol) {
  return dist(a.vec(), b.vec()) <= tol;
}

inline bool nearly_antipodal(const UnitVec& a, const UnitVec& b, double tol) {
  return dist(a.vec(), (-b).vec()) <= tol;
}

// Tangent direction at base point p toward target q (component of q
// orthogonal to p, normalized). Requires q not within eps of +-p.
UnitVec tangent_toward(const UnitVec& p, const UnitVec& q);

// Deterministic orthonormal frame (e1, e2) spanning the plane orthogonal
// to p, with e2 = p x e1.
void orthonormal_frame(const UnitVec& p, Vec3& e1, Vec3& e2);

// Rotation of v by angle around a unit axis (Rodrigues).
Vec3 rotate_about(const Vec3& v, const UnitVec& axis, double angle);
inline UnitVec rotate_about(const UnitVec& v, const UnitVec& axis,
                            double angle) {
  return UnitVec(rotate_about(v.vec(), axis, angle));
}

}  // namespace gaussmap
