#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>

#include "fgre/rational.hpp"

namespace fgre {

/// a + b i + c j + d k with ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1.
struct Quaternion {
  Rational a, b, c, d;

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }

  Rational norm() const { return a * a + b * b + c * c + d * d; }
  Quaternion conj() const { return {a, -b, -c, -d}; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
  std::array<Rational, 4> coords() const { return {a, b, c, d}; }

  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  friend Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  /// Lexicographic on (a, b, c, d).
  friend std::strong_ordering operator<=>(const Quaternion& x, const Quaternion& y);

  /// Compact label such as "-1", "i", "-k" or "(-1+i+j+k)/2".
  std::string label() const;
  std::size_t hash() const;
};

struct QuaternionHash {
  std::size_t operator()(const Quaternion& q) const { return q.hash(); }
};

}  // namespace fgre
