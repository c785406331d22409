#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fgre/rational.hpp"

namespace fgre {

/// Element of Q(zeta), zeta = exp(i*pi/12), stored in the power basis
/// 1, zeta, ..., zeta^7 and reduced modulo x^8 - x^4 + 1 after every product,
/// so two scalars are equal iff their coordinates are.
class CycScalar {
 public:
  static constexpr int kDegree = 8;
  static constexpr int kConductor = 24;

  CycScalar() = default;
  CycScalar(long value);  // NOLINT(google-explicit-constructor)
  CycScalar(const Rational& value);  // NOLINT(google-explicit-constructor)

  static CycScalar from_coords(const std::array<Rational, kDegree>& coords);
  /// zeta^k for any integer k.
  static CycScalar zeta_power(int k);

  const Rational& coord(int k) const { return coords_[k]; }
  const std::array<Rational, kDegree>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// All coordinates have denominator 1 (an element of Z[zeta]).
  bool is_integral() const;
  /// Throws Error(kInvalidInput) unless is_rational().
  Rational to_rational() const;

  /// The automorphism zeta -> zeta^k; k must be coprime to 24.
  CycScalar galois(int k) const;
  CycScalar conj() const { return galois(kConductor - 1); }
  /// Throws Error(kDivisionByZero) for zero.
  CycScalar inverse() const;

  /// Approximate value for display only.
  std::complex<double> to_complex() const;

  CycScalar& operator+=(const CycScalar& rhs);
  CycScalar& operator-=(const CycScalar& rhs);
  CycScalar& operator*=(const CycScalar& rhs);
  CycScalar& operator/=(const CycScalar& rhs) { return *this *= rhs.inverse(); }

  friend CycScalar operator+(CycScalar lhs, const CycScalar& rhs) { return lhs += rhs; }
  friend CycScalar operator-(CycScalar lhs, const CycScalar& rhs) { return lhs -= rhs; }
  friend CycScalar operator*(const CycScalar& lhs, const CycScalar& rhs);
  friend CycScalar operator/(CycScalar lhs, const CycScalar& rhs) { return lhs /= rhs; }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& lhs, const CycScalar& rhs) { return lhs.coords_ == rhs.coords_; }
  /// Lexicographic on coordinates; a total order used only for canonical sorting.
  friend std::strong_ordering operator<=>(const CycScalar& lhs, const CycScalar& rhs);

  std::size_t hash() const;

  /// Short human form: rationals as "p/q", known constants as "w", "-wb", "i",
  /// "sqrt3", ... and everything else as a polynomial in z.
  std::string pretty() const;
  /// Same as pretty() but with unicode symbols (ω, ω̄, √3).
  std::string pretty_unicode() const;

 private:
  std::array<Rational, kDegree> coords_{};
};

const CycScalar& cyc_i();
const CycScalar& cyc_omega();
const CycScalar& cyc_sqrt2();
const CycScalar& cyc_sqrt3();

/// Primitive n-th root of unity zeta^(24/n); n must divide 24.
CycScalar root_of_unity(int n);

inline bool is_zero(const CycScalar& x) { return x.is_zero(); }
inline CycScalar field_inverse(const CycScalar& x) { return x.inverse(); }
inline Rational field_inverse(const Rational& x) { return 1 / x; }

struct CycScalarHash {
  std::size_t operator()(const CycScalar& x) const { return x.hash(); }
};

/// Dense row-major matrix over Q(zeta24).
class CycMatrix {
 public:
  CycMatrix() = default;
  CycMatrix(std::size_t rows, std::size_t cols);
  CycMatrix(std::size_t rows, std::size_t cols, std::vector<CycScalar> entries);
  CycMatrix(std::initializer_list<std::initializer_list<CycScalar>> rows);

  static CycMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  CycScalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const CycScalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<CycScalar>& entries() const { return entries_; }

  CycMatrix transpose() const;
  CycScalar trace() const;
  bool is_zero() const;

  CycMatrix& operator+=(const CycMatrix& rhs);
  CycMatrix& operator-=(const CycMatrix& rhs);
  CycMatrix& operator*=(const CycScalar& s);
  friend CycMatrix operator+(CycMatrix lhs, const CycMatrix& rhs) { return lhs += rhs; }
  friend CycMatrix operator-(CycMatrix lhs, const CycMatrix& rhs) { return lhs -= rhs; }
  friend CycMatrix operator*(CycMatrix lhs, const CycScalar& s) { return lhs *= s; }
  friend CycMatrix operator*(const CycScalar& s, CycMatrix rhs) { return rhs *= s; }
  friend CycMatrix operator*(const CycMatrix& lhs, const CycMatrix& rhs);
  CycMatrix operator-() const;

  friend bool operator==(const CycMatrix& lhs, const CycMatrix& rhs) = default;
  /// Shape first, then entries lexicographically.
  friend bool operator<(const CycMatrix& lhs, const CycMatrix& rhs);

  std::size_t hash() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<CycScalar> entries_;
};

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& m) const { return m.hash(); }
};

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);
/// Each entry x = a + b*i (a, b in the real subfield) becomes the block
/// [[a, -b], [b, a]].
CycMatrix realify(const CycMatrix& m);

std::size_t matrix_rank(const CycMatrix& m);
/// Exact solution of m * x = rhs, or nullopt when the system is inconsistent.
std::optional<CycMatrix> matrix_solve(const CycMatrix& m, const CycMatrix& rhs);
/// Basis of the right kernel as the columns of the returned matrix.
CycMatrix matrix_kernel(const CycMatrix& m);
/// Throws Error(kNotInvertible) for singular or non-square input.
CycMatrix matrix_inverse(const CycMatrix& m);

}  // namespace fgre
