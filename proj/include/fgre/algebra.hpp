#pragma once

#include <array>
#include <string>
#include <vector>

#include "fgre/character.hpp"
#include "fgre/cyclotomic.hpp"
#include "fgre/group.hpp"

namespace fgre {

/// Coefficient ring of a group-algebra element. Ordered so that the join of two
/// rings is the larger one.
enum class Ring { kInt, kRat, kCyc };

std::string to_string(Ring r);
Ring parse_ring(const std::string& text);

/// Element of the group algebra: one coefficient per group element in the
/// group's canonical order. Coefficients are stored as cyclotomic scalars and
/// the ring tag restricts what they may be.
class AlgebraElement {
 public:
  AlgebraElement(GroupPtr group, Ring ring, std::vector<CycScalar> coeffs);

  static AlgebraElement zero(GroupPtr group, Ring ring = Ring::kInt);
  static AlgebraElement identity(GroupPtr group, Ring ring = Ring::kInt);
  static AlgebraElement basis(GroupPtr group, std::size_t element, Ring ring = Ring::kInt);
  /// The basis element of a quaternion group element; kUnknownName if absent.
  static AlgebraElement of(GroupPtr group, const Quaternion& q);

  const GroupPtr& group() const { return group_; }
  Ring ring() const { return ring_; }
  const std::vector<CycScalar>& coeffs() const { return coeffs_; }
  const CycScalar& coeff(std::size_t element) const { return coeffs_.at(element); }
  bool is_zero() const;
  bool has_integer_coefficients() const;
  /// The smallest ring holding the coefficients.
  Ring minimal_ring() const;
  /// Same coefficients tagged with `ring`; kInvalidInput if they do not fit.
  AlgebraElement with_ring(Ring ring) const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const CycScalar& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const CycScalar& c) { return c * a; }
  AlgebraElement operator-() const;

  /// Equality of coefficients; the ring tag is ignored.
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// e.g. "1/3*1 - 1/6*(-1+i+j+k)/2"
  std::string to_string() const;

 private:
  void check_same_group(const AlgebraElement& o) const;

  GroupPtr group_;
  Ring ring_;
  std::vector<CycScalar> coeffs_;
};

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b);

/// Primitive central idempotents, one per row of the table, in row order. For a
/// real table each one is the sum over the row's complex constituents.
std::vector<AlgebraElement> central_idempotents(const CharacterTable& table);

struct IdempotentReport {
  bool idempotent = false;
  bool central = false;
};

IdempotentReport verify_idempotent(const AlgebraElement& a);

/// Rank of x -> a x on the group algebra. Throws kNotIdempotent unless a*a = a.
std::size_t block_dimension(const AlgebraElement& a);

/// All idempotents of QG for abelian G: sums of the primitive idempotents of the
/// rational blocks (Galois orbits of characters). Ordered by bitmask over the
/// blocks, starting with 0.
std::vector<AlgebraElement> enumerate_idempotents_commutative(GroupPtr g);

/// The members of enumerate_idempotents_commutative with integer coefficients.
std::vector<AlgebraElement> integral_idempotent_check(GroupPtr g);

/// Sum of the elements of order 3 in 2T, written w+iw+jw+kw+v-iv-jv-kv.
AlgebraElement order_three_sum(GroupPtr two_t);

struct NamedIdempotent {
  std::string block;  // "R", "C", "M3(R)", "H", "M2(C)"
  AlgebraElement element;
};

/// The five block idempotents of Q2T given as closed products, e.g.
/// (e+i^2)(3e-i-j-k)/8, in the order R, C, M3(R), H, M2(C).
std::vector<NamedIdempotent> tetrahedral_idempotents(GroupPtr two_t);

/// The boson and fermion projections (e+i^2)/2 and (e-i^2)/2.
AlgebraElement boson_projection(GroupPtr g);
AlgebraElement fermion_projection(GroupPtr g);

struct QuantumNumbers {
  Rational charge;        // (lambda_j - lambda_i)/2
  Rational weak_isospin;  // lambda_j/2
};

QuantumNumbers quantum_numbers(int lambda_i, int lambda_j);

/// Coordinates of a Q8 algebra element in the basis 1a,1b,1c,1d,t,x,y,z.
/// `raw` is against the unscaled vectors (1a = sum of all elements, t = 1-(-1));
/// `normalized` is against 1a/8,...,1d/8 and t/2,...,z/2.
struct Q8Decomposition {
  static constexpr std::array<const char*, 8> kNames = {"1a", "1b", "1c", "1d", "t", "x", "y", "z"};
  std::array<CycScalar, 8> raw;
  std::array<CycScalar, 8> normalized;
  std::array<QuantumNumbers, 4> charges;  // for 1a..1d
};

/// The eight unscaled basis vectors, in the order of Q8Decomposition::kNames.
std::array<AlgebraElement, 8> q8_basis(GroupPtr q8);

/// Throws kWrongGroup unless the element lives in Q8.
Q8Decomposition q8_decompose(const AlgebraElement& a);
AlgebraElement q8_reconstruct(GroupPtr q8, const std::array<CycScalar, 8>& raw);

}  // namespace fgre
