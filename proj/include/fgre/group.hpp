#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fgre/cyclotomic.hpp"
#include "fgre/quaternion.hpp"

namespace fgre {

/// Images of 0..n-1. Composition (p * q)[x] = p[q[x]].
using Permutation = std::vector<std::uint32_t>;

/// What an element "is", when the group was built from something concrete.
/// Groups read from a bare Cayley table carry std::monostate.
using Payload = std::variant<std::monostate, Quaternion, Permutation, CycMatrix>;

inline constexpr std::size_t kDefaultClosureCap = 10000;

struct ConjugacyClass {
  std::size_t representative = 0;  // smallest element index in the class
  std::size_t size = 0;
  std::size_t element_order = 0;
  std::vector<std::size_t> members;  // ascending
};

/// A finite group stored as a full Cayley table over canonically ordered
/// elements: identity at index 0, then by (element order, payload), where
/// quaternions compare by their (a,b,c,d) tuple and permutations
/// lexicographically. Immutable after construction.
class FiniteGroup {
 public:
  /// Builds and canonicalizes from a table in arbitrary order. Validates the
  /// group axioms exhaustively; throws Error(kInvalidInput) on failure.
  /// `generators` index into the input order; empty means "pick a small set".
  static FiniteGroup from_table(std::string name, const std::vector<std::vector<std::size_t>>& table,
                                std::vector<std::string> labels, std::vector<Payload> payloads,
                                std::vector<std::size_t> generators = {},
                                std::vector<std::string> generator_names = {});

  const std::string& name() const { return name_; }
  std::size_t order() const { return labels_.size(); }
  std::size_t identity() const { return 0; }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long n) const;
  std::size_t element_order(std::size_t a) const { return element_order_[a]; }
  std::size_t exponent() const;
  bool is_abelian() const;

  const std::string& label(std::size_t a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Payload& payload(std::size_t a) const { return payloads_[a]; }
  std::optional<std::size_t> find_label(const std::string& label) const;
  std::optional<std::size_t> find_quaternion(const Quaternion& q) const;

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t a) const { return class_of_[a]; }

  const std::vector<std::size_t>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }

 private:
  FiniteGroup() = default;
  void compute_classes();

  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Payload> payloads_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> generators_;
  std::vector<std::string> generator_names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closure under quaternion multiplication. Throws kInvalidInput for a zero
/// generator and kCapExceeded when more than `cap` elements appear.
FiniteGroup group_from_quaternions(std::string name, const std::vector<Quaternion>& generators,
                                   std::size_t cap = kDefaultClosureCap,
                                   std::vector<std::string> generator_names = {});

/// Closure under composition of permutations of {0..n-1}.
FiniteGroup group_from_permutations(std::string name, const std::vector<Permutation>& generators,
                                    std::size_t cap = kDefaultClosureCap);

/// Closure under matrix multiplication, returned as an abstract group.
FiniteGroup group_from_matrices(std::string name, const std::vector<CycMatrix>& generators,
                                std::size_t cap = kDefaultClosureCap);

/// Group given by an explicit multiplication table (any element order).
/// `generators` index rows of the input table; empty picks them greedily.
FiniteGroup group_from_cayley(std::string name, const std::vector<std::vector<std::size_t>>& table,
                              std::vector<std::string> labels = {}, std::vector<std::size_t> generators = {});

/// Parses "(0 1 2)(3 4)" cycle notation on `degree` points.
Permutation parse_cycles(const std::string& text, std::size_t degree);

/// Class sizes and element orders in canonical class order.
struct ClassProfile {
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> orders;
  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};
ClassProfile class_profile(const FiniteGroup& g);

std::vector<std::size_t> center(const FiniteGroup& g);

/// Checks the group axioms on the stored table; used by tests and file ingestion.
bool satisfies_group_axioms(const FiniteGroup& g);

struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<std::size_t> images;

  bool verify() const;
};

struct Automorphism {
  std::vector<std::size_t> images;
  bool inner = false;
};

struct AutomorphismGroup {
  /// Aut(G) as a permutation group on G's element indices.
  std::shared_ptr<const FiniteGroup> group;
  /// automorphisms[k] is the map carried by element k of `group`.
  std::vector<Automorphism> automorphisms;
  std::size_t inner_count = 0;

  /// element order -> number of automorphisms of that order
  std::map<std::size_t, std::size_t> order_census() const;
};

/// All automorphisms by backtracking over generator images; refuses order > 64.
AutomorphismGroup automorphism_group(const FiniteGroup& g);

struct MatrixClosure {
  std::size_t order = 0;
  std::vector<CycMatrix> elements;  // breadth-first discovery order, identity first
};

/// Multiplicative closure of invertible square matrices with exact equality.
/// Throws kNotInvertible for a singular generator, kCapExceeded past `cap`.
MatrixClosure matrix_group_closure(const std::vector<CycMatrix>& generators,
                                   std::size_t cap = kDefaultClosureCap, bool keep_elements = true);

std::size_t largest_prime_factor(std::size_t n);

}  // namespace fgre
