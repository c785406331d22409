#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fgre/cyclotomic.hpp"
#include "fgre/group.hpp"

namespace fgre {

/// A class function. Values are indexed by the group's conjugacy classes in
/// canonical order, for complex and real tables alike; a real table only
/// shows fewer columns.
struct Character {
  std::vector<CycScalar> values;
  /// Frobenius-Schur type of the (complex constituent of the) row: 1 real,
  /// 0 complex, -1 quaternionic.
  int indicator = 1;
  std::string label;

  const CycScalar& degree() const { return values.front(); }
  /// Degree as a machine integer; throws if it is not a positive integer.
  long dimension() const;
};

enum class TableField { kComplex, kReal };

/// One column of a displayed table: a conjugacy class, or for real tables the
/// union of a class with its inverse class.
struct TableColumn {
  std::size_t representative = 0;
  std::size_t size = 0;
  std::size_t element_order = 0;
  std::vector<std::size_t> classes;  // group class indices merged into this column
};

struct CharacterTable {
  GroupPtr group;
  TableField field = TableField::kComplex;
  std::vector<TableColumn> columns;
  std::vector<Character> rows;

  /// Value of row r at displayed column c.
  const CycScalar& value(std::size_t r, std::size_t c) const { return rows[r].values[columns[c].classes.front()]; }
  std::optional<std::size_t> find_label(const std::string& label) const;
};

/// Hermitian inner product (1/|G|) sum_g a(g) conj(b(g)).
CycScalar inner_product(const FiniteGroup& g, const Character& a, const Character& b);

/// Dixon's modular method. Throws kUnsupportedExponent when the exponent does
/// not divide 24 and kInternalInconsistency if the lifted table is not orthogonal.
CharacterTable complex_character_table(GroupPtr g);

/// The prime used for g: smallest p = 1 mod exponent with p > 2 sqrt|G|.
long dixon_prime(const FiniteGroup& g);

/// (1/|G|) sum_g chi(g^2), by enumeration over elements.
int fs_indicator(const FiniteGroup& g, const Character& chi);

/// Real irreducibles: chi (type 1), chi + conj(chi) (type 0), 2 chi (type -1);
/// columns are classes merged with their inverse classes.
CharacterTable real_character_table(const CharacterTable& complex_table);

/// Exact row and column orthogonality of a complex table.
bool check_orthogonality(const CharacterTable& table);

struct TensorDecomposition {
  std::vector<long> multiplicities;  // one per row of the table used

  /// Multiset in compact form, e.g. "13" or "4H4C4C"; labels concatenated.
  std::string compact(const CharacterTable& table) const;
  friend bool operator==(const TensorDecomposition&, const TensorDecomposition&) = default;
};

/// Pointwise product decomposed against the table's rows. Throws
/// kNotAClassFunction when a multiplicity is not a non-negative integer.
TensorDecomposition tensor_decompose(const Character& a, const Character& b, const CharacterTable& table);
/// Decomposition of a single character.
TensorDecomposition decompose(const Character& chi, const CharacterTable& table);

Character pointwise_product(const Character& a, const Character& b);
Character character_sum(const Character& a, const Character& b);

enum class DivisionType { kReal, kComplex, kQuaternion };

struct WedderburnBlock {
  std::size_t matrix_size = 0;
  DivisionType division = DivisionType::kReal;
  std::size_t real_dimension = 0;
  friend bool operator==(const WedderburnBlock&, const WedderburnBlock&) = default;
};

struct WedderburnStructure {
  TableField field = TableField::kReal;
  std::vector<WedderburnBlock> blocks;

  std::size_t total_real_dimension() const;
  /// e.g. "4R + H" or "R + C + H + M2(C) + M3(R)".
  std::string format() const;
};

WedderburnStructure real_wedderburn(GroupPtr g);
WedderburnStructure complex_wedderburn(GroupPtr g);
WedderburnStructure real_wedderburn(const CharacterTable& complex_table);
WedderburnStructure complex_wedderburn(const CharacterTable& complex_table);

std::string block_name(const WedderburnBlock& block);

}  // namespace fgre
