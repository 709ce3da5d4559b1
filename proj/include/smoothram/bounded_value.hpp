#pragma once

#include "smoothram/rational.hpp"

namespace smoothram {

/// A real number enclosed as center +- radius, both exact rationals.
/// radius == 0 means the value is known exactly.
struct BoundedValue {
  Rational center;
  Rational radius;

  static BoundedValue exact(Rational value) { return {std::move(value), Rational(0)}; }

  bool is_exact() const { return radius == 0; }
  Rational lower() const { return center - radius; }
  Rational upper() const { return center + radius; }
  /// Upper bound on the absolute value of the enclosed real.
  Rational magnitude() const { return abs(center) + radius; }

  bool operator==(const BoundedValue&) const = default;

  bool contains(const Rational& x) const { return abs(x - center) <= radius; }
  bool intersects(const BoundedValue& other) const {
    return abs(center - other.center) <= radius + other.radius;
  }
  /// True when every point of this interval lies inside `outer`.
  bool inside(const BoundedValue& outer) const {
    return abs(center - outer.center) + radius <= outer.radius;
  }
};

inline BoundedValue operator+(const BoundedValue& a, const BoundedValue& b) {
  return {a.center + b.center, a.radius + b.radius};
}

inline BoundedValue operator-(const BoundedValue& a, const BoundedValue& b) {
  return {a.center - b.center, a.radius + b.radius};
}

inline BoundedValue operator-(const BoundedValue& a) { return {-a.center, a.radius}; }

inline BoundedValue operator*(const BoundedValue& a, const Rational& s) {
  return {a.center * s, a.radius * abs(s)};
}

inline BoundedValue operator*(const Rational& s, const BoundedValue& a) { return a * s; }

inline BoundedValue operator*(const BoundedValue& a, const BoundedValue& b) {
  return {a.center * b.center,
          abs(a.center) * b.radius + abs(b.center) * a.radius + a.radius * b.radius};
}

inline BoundedValue& operator+=(BoundedValue& a, const BoundedValue& b) {
  a.center += b.center;
  a.radius += b.radius;
  return a;
}

}  // namespace smoothram
