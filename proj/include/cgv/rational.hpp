#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace cgv {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational; throws InputError.
Rational parse_rational(std::string_view text);
/// Canonical "p" or "p/q" form.
std::string format_rational(const Rational& r);

struct Vec3 {
  Rational x, y, z;

  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Rational& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Rational dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline bool is_zero(const Vec3& a) { return sgn(a.x) == 0 && sgn(a.y) == 0 && sgn(a.z) == 0; }
inline Vec3 midpoint(const Vec3& a, const Vec3& b) { return Rational(1, 2) * (a + b); }

std::string to_string(const Vec3& v);

}  // namespace cgv
