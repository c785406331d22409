#include "fgre/character.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "fgre/error.hpp"

namespace fgre {

namespace {

using i64 = long long;

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 pow_mod(i64 base, i64 exp, i64 p) {
  i64 result = 1;
  base = mod(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

i64 inv_mod(i64 a, i64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 n = p - 1;
  for (i64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) factors.push_back(n);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors) ok = ok && pow_mod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
  return 1;  // p = 2
}

using VecP = std::vector<i64>;

/// Basis of the kernel of an r x m matrix over F_p (given column-wise).
std::vector<VecP> kernel_mod_p(std::vector<VecP> rows, std::size_t m, i64 p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < rows.size(); ++col) {
    std::size_t pick = row;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[row], rows[pick]);
    const i64 s = inv_mod(rows[row][col], p);
    for (auto& x : rows[row]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      const i64 f = rows[r][col];
      for (std::size_t c = 0; c < m; ++c) rows[r][c] = mod(rows[r][c] - f * rows[row][c], p);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<VecP> basis;
  for (std::size_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    VecP v(m, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-rows[r][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct ClassData {
  std::size_t r = 0;
  std::vector<i64> sizes;
  std::vector<std::size_t> inverse_class;
};

ClassData class_data(const FiniteGroup& g) {
  ClassData d;
  d.r = g.classes().size();
  for (const auto& c : g.classes()) {
    d.sizes.push_back(static_cast<i64>(c.size));
    d.inverse_class.push_back(g.class_of(g.inverse(c.representative)));
  }
  return d;
}

/// (M_j)[i][k] = #{x in C_j : x^-1 z_k in C_i}, z_k the representative of C_k.
std::vector<std::vector<i64>> class_matrix(const FiniteGroup& g, std::size_t j, i64 p) {
  const std::size_t r = g.classes().size();
  std::vector<std::vector<i64>> m(r, std::vector<i64>(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = g.classes()[k].representative;
    for (auto x : g.classes()[j].members) {
      const std::size_t i = g.class_of(g.mul(g.inverse(x), z));
      m[i][k] = (m[i][k] + 1) % p;
    }
  }
  return m;
}

/// Splits the space spanned by `basis` (vectors in F_p^r) into eigenspaces of m.
std::vector<std::vector<VecP>> split_space(const std::vector<VecP>& basis, const std::vector<std::vector<i64>>& m,
                                           i64 p) {
  const std::size_t r = m.size();
  const std::size_t dim = basis.size();
  if (dim == 1) return {basis};
  // image of the basis under m
  std::vector<VecP> image(dim, VecP(r, 0));
  for (std::size_t t = 0; t < dim; ++t) {
    for (std::size_t a = 0; a < r; ++a) {
      i64 s = 0;
      for (std::size_t b = 0; b < r; ++b) s = (s + m[a][b] * basis[t][b]) % p;
      image[t][a] = s;
    }
  }
  std::vector<std::vector<VecP>> parts;
  std::size_t found = 0;
  for (i64 lambda = 0; lambda < p && found < dim; ++lambda) {
    // rows of (M - lambda) B as an r x dim matrix
    std::vector<VecP> rows(r, VecP(dim, 0));
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t t = 0; t < dim; ++t) rows[a][t] = mod(image[t][a] - lambda * basis[t][a], p);
    }
    const auto coeffs = kernel_mod_p(rows, dim, p);
    if (coeffs.empty()) continue;
    std::vector<VecP> part;
    for (const auto& x : coeffs) {
      VecP v(r, 0);
      for (std::size_t t = 0; t < dim; ++t) {
        if (x[t] == 0) continue;
        for (std::size_t a = 0; a < r; ++a) v[a] = (v[a] + x[t] * basis[t][a]) % p;
      }
      part.push_back(std::move(v));
    }
    found += part.size();
    parts.push_back(std::move(part));
  }
  if (found != dim) throw Error(ErrorKind::kInternalInconsistency, "class matrix is not diagonalizable mod p");
  return parts;
}

std::string type_letter(int indicator) {
  switch (indicator) {
    case 1: return "R";
    case 0: return "C";
    default: return "H";
  }
}

void assign_labels(std::vector<Character>& rows, bool use_type_letters) {
  std::map<long, std::vector<std::size_t>> by_degree;
  for (std::size_t k = 0; k < rows.size(); ++k) by_degree[rows[k].dimension()].push_back(k);
  for (const auto& [degree, members] : by_degree) {
    const std::string base = std::to_string(degree);
    if (members.size() == 1) {
      rows[members[0]].label = base;
      continue;
    }
    bool distinct_types = use_type_letters;
    for (std::size_t a = 0; a < members.size() && distinct_types; ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (rows[members[a]].indicator == rows[members[b]].indicator) distinct_types = false;
      }
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      rows[members[a]].label =
          base + (distinct_types ? type_letter(rows[members[a]].indicator) : std::string(1, static_cast<char>('a' + a)));
    }
  }
}

void sort_rows(std::vector<Character>& rows, const std::vector<TableColumn>& columns) {
  std::sort(rows.begin(), rows.end(), [&](const Character& a, const Character& b) {
    if (a.dimension() != b.dimension()) return a.dimension() < b.dimension();
    const auto trivial = [](const Character& c) {
      return std::all_of(c.values.begin(), c.values.end(), [](const CycScalar& v) { return v == CycScalar(1L); });
    };
    if (trivial(a) != trivial(b)) return trivial(a);
    if (a.indicator != b.indicator) return a.indicator < b.indicator;
    for (const auto& col : columns) {
      const auto& x = a.values[col.classes.front()];
      const auto& y = b.values[col.classes.front()];
      if (x != y) return y < x;
    }
    return false;
  });
}

Rational schur_norm(int indicator) { return indicator == 1 ? 1 : (indicator == 0 ? 2 : 4); }

}  // namespace

long Character::dimension() const {
  const Rational d = degree().to_rational();
  if (!is_integer(d) || sgn(d) <= 0) throw Error(ErrorKind::kInvalidInput, "degree is not a positive integer");
  return d.get_num().get_si();
}

std::optional<std::size_t> CharacterTable::find_label(const std::string& label) const {
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].label == label) return k;
  }
  return std::nullopt;
}

CycScalar inner_product(const FiniteGroup& g, const Character& a, const Character& b) {
  if (a.values.size() != g.classes().size() || b.values.size() != g.classes().size()) {
    throw Error(ErrorKind::kNotAClassFunction, "character does not match the group's classes");
  }
  CycScalar sum;
  for (std::size_t k = 0; k < g.classes().size(); ++k) {
    sum += CycScalar(static_cast<long>(g.classes()[k].size)) * a.values[k] * b.values[k].conj();
  }
  return sum * CycScalar(Rational(1, static_cast<long>(g.order())));
}

long dixon_prime(const FiniteGroup& g) {
  const long e = static_cast<long>(g.exponent());
  const double bound = 2.0 * std::sqrt(static_cast<double>(g.order()));
  for (long p = e + 1;; p += e) {
    if (static_cast<double>(p) > bound && is_prime(p)) return p;
  }
}

CharacterTable complex_character_table(GroupPtr group) {
  const FiniteGroup& g = *group;
  const long exponent = static_cast<long>(g.exponent());
  if (CycScalar::kConductor % exponent != 0) {
    throw Error(ErrorKind::kUnsupportedExponent,
                "group exponent " + std::to_string(exponent) + " does not divide 24");
  }
  const i64 p = dixon_prime(g);
  const ClassData cd = class_data(g);
  const std::size_t r = cd.r;
  const i64 n = static_cast<i64>(g.order());

  std::vector<std::vector<VecP>> spaces;
  {
    std::vector<VecP> full;
    for (std::size_t k = 0; k < r; ++k) {
      VecP v(r, 0);
      v[k] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 1; j < r; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; })) break;
    const auto m = class_matrix(g, j, p);
    std::vector<std::vector<VecP>> next;
    for (const auto& s : spaces) {
      for (auto& part : split_space(s, m, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) {
    throw Error(ErrorKind::kInternalInconsistency, "simultaneous eigenspaces are not one-dimensional");
  }

  const i64 z = pow_mod(primitive_root(p), (p - 1) / exponent, p);  // image of exp(2 pi i / exponent)
  const long max_degree = static_cast<long>(std::sqrt(static_cast<double>(n)));

  CharacterTable table;
  table.group = group;
  table.field = TableField::kComplex;
  for (std::size_t k = 0; k < r; ++k) {
    const auto& c = g.classes()[k];
    table.columns.push_back({c.representative, c.size, c.element_order, {k}});
  }

  for (const auto& space : spaces) {
    VecP v = space.front();
    if (v[0] == 0) throw Error(ErrorKind::kInternalInconsistency, "eigenvector vanishes at the identity");
    const i64 s0 = inv_mod(v[0], p);
    for (auto& x : v) x = x * s0 % p;
    i64 norm = 0;
    for (std::size_t k = 0; k < r; ++k) norm = (norm + v[k] * v[cd.inverse_class[k]] % p * inv_mod(cd.sizes[k], p)) % p;
    if (norm == 0) throw Error(ErrorKind::kInternalInconsistency, "degenerate central character");
    const i64 target = mod(n % p * inv_mod(norm, p), p);
    long degree = 0;
    for (long d = 1; d <= max_degree; ++d) {
      if ((static_cast<i64>(d) * d) % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorKind::kInternalInconsistency, "no degree matches the central character");

    VecP theta(r);
    for (std::size_t k = 0; k < r; ++k) theta[k] = v[k] * degree % p * inv_mod(cd.sizes[k], p) % p;

    Character chi;
    chi.values.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t rep = g.classes()[k].representative;
      const long o = static_cast<long>(g.element_order(rep));
      const i64 zo = pow_mod(z, exponent / o, p);
      std::vector<i64> power_values(o);
      for (long j = 0; j < o; ++j) power_values[j] = theta[g.class_of(g.power(rep, j))];
      const i64 inv_o = inv_mod(o, p);
      CycScalar value;
      const CycScalar eps = root_of_unity(static_cast<int>(o));
      CycScalar eps_power(1L);
      for (long l = 0; l < o; ++l) {
        i64 m = 0;
        for (long j = 0; j < o; ++j) m = (m + power_values[j] * pow_mod(zo, mod(-j * l, o), p)) % p;
        m = m * inv_o % p;
        if (m > degree) throw Error(ErrorKind::kInternalInconsistency, "eigenvalue multiplicity out of range");
        if (m != 0) value += CycScalar(static_cast<long>(m)) * eps_power;
        eps_power *= eps;
      }
      chi.values[k] = value;
    }
    table.rows.push_back(std::move(chi));
  }

  for (auto& row : table.rows) row.indicator = fs_indicator(g, row);
  sort_rows(table.rows, table.columns);
  assign_labels(table.rows, false);
  if (!check_orthogonality(table)) {
    throw Error(ErrorKind::kInternalInconsistency, "lifted character table fails orthogonality");
  }
  return table;
}

int fs_indicator(const FiniteGroup& g, const Character& chi) {
  CycScalar sum;
  for (std::size_t x = 0; x < g.order(); ++x) sum += chi.values[g.class_of(g.mul(x, x))];
  sum *= CycScalar(Rational(1, static_cast<long>(g.order())));
  if (sum == CycScalar(1L)) return 1;
  if (sum.is_zero()) return 0;
  if (sum == CycScalar(-1L)) return -1;
  throw Error(ErrorKind::kNotAClassFunction, "indicator " + sum.pretty() + " is not in {-1, 0, 1}");
}

CharacterTable real_character_table(const CharacterTable& complex_table) {
  const FiniteGroup& g = *complex_table.group;
  CharacterTable out;
  out.group = complex_table.group;
  out.field = TableField::kReal;

  std::vector<bool> used(g.classes().size(), false);
  for (std::size_t k = 0; k < g.classes().size(); ++k) {
    if (used[k]) continue;
    const std::size_t kinv = g.class_of(g.inverse(g.classes()[k].representative));
    TableColumn col;
    col.classes = {std::min(k, kinv), std::max(k, kinv)};
    if (kinv == k) col.classes.pop_back();
    for (auto c : col.classes) {
      used[c] = true;
      col.size += g.classes()[c].size;
    }
    col.representative = std::min(g.classes()[k].representative, g.classes()[kinv].representative);
    col.element_order = g.classes()[k].element_order;
    // the smaller representative's class goes first so value() reads it
    if (g.classes()[col.classes.front()].representative != col.representative) {
      std::reverse(col.classes.begin(), col.classes.end());
    }
    out.columns.push_back(std::move(col));
  }
  std::sort(out.columns.begin(), out.columns.end(), [](const TableColumn& a, const TableColumn& b) {
    const auto key = [](const TableColumn& c) {
      return std::tuple(largest_prime_factor(c.element_order), c.element_order, c.size, c.representative);
    };
    return key(a) < key(b);
  });

  const auto& rows = complex_table.rows;
  std::vector<bool> done(rows.size(), false);
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (done[a]) continue;
    done[a] = true;
    Character psi;
    psi.indicator = rows[a].indicator;
    if (rows[a].indicator == 1) {
      psi.values = rows[a].values;
    } else if (rows[a].indicator == -1) {
      for (const auto& v : rows[a].values) psi.values.push_back(CycScalar(2L) * v);
    } else {
      std::optional<std::size_t> partner;
      for (std::size_t b = 0; b < rows.size() && !partner; ++b) {
        if (done[b]) continue;
        bool match = true;
        for (std::size_t k = 0; k < rows[a].values.size() && match; ++k) {
          match = rows[b].values[k] == rows[a].values[k].conj();
        }
        if (match) partner = b;
      }
      if (!partner) throw Error(ErrorKind::kInternalInconsistency, "complex character without conjugate partner");
      done[*partner] = true;
      for (std::size_t k = 0; k < rows[a].values.size(); ++k) psi.values.push_back(rows[a].values[k] + rows[*partner].values[k]);
    }
    out.rows.push_back(std::move(psi));
  }
  sort_rows(out.rows, out.columns);
  assign_labels(out.rows, true);
  return out;
}

bool check_orthogonality(const CharacterTable& table) {
  const FiniteGroup& g = *table.group;
  for (std::size_t a = 0; a < table.rows.size(); ++a) {
    for (std::size_t b = 0; b < table.rows.size(); ++b) {
      const CycScalar ip = inner_product(g, table.rows[a], table.rows[b]);
      const Rational expected =
          a != b ? Rational(0) : (table.field == TableField::kComplex ? Rational(1) : schur_norm(table.rows[a].indicator));
      if (ip != CycScalar(expected)) return false;
    }
  }
  if (table.field == TableField::kReal) return true;
  if (table.rows.size() != g.classes().size()) return false;
  for (std::size_t c = 0; c < g.classes().size(); ++c) {
    for (std::size_t d = 0; d < g.classes().size(); ++d) {
      CycScalar sum;
      for (const auto& row : table.rows) sum += row.values[c] * row.values[d].conj();
      const CycScalar expected =
          c == d ? CycScalar(Rational(static_cast<long>(g.order())) / static_cast<long>(g.classes()[c].size)) : CycScalar();
      if (sum != expected) return false;
    }
  }
  return true;
}

Character pointwise_product(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) throw Error(ErrorKind::kNotAClassFunction, "characters of different groups");
  Character out;
  for (std::size_t k = 0; k < a.values.size(); ++k) out.values.push_back(a.values[k] * b.values[k]);
  return out;
}

Character character_sum(const Character& a, const Character& b) {
  if (a.values.size() != b.values.size()) throw Error(ErrorKind::kNotAClassFunction, "characters of different groups");
  Character out;
  for (std::size_t k = 0; k < a.values.size(); ++k) out.values.push_back(a.values[k] + b.values[k]);
  return out;
}

TensorDecomposition decompose(const Character& chi, const CharacterTable& table) {
  const FiniteGroup& g = *table.group;
  TensorDecomposition out;
  for (const auto& row : table.rows) {
    const CycScalar norm = table.field == TableField::kComplex ? CycScalar(1L) : CycScalar(schur_norm(row.indicator));
    const CycScalar m = inner_product(g, chi, row) / norm;
    if (!m.is_rational() || !is_integer(m.coord(0)) || sgn(m.coord(0)) < 0) {
      throw Error(ErrorKind::kNotAClassFunction,
                  "multiplicity " + m.pretty() + " of " + row.label + " is not a non-negative integer");
    }
    out.multiplicities.push_back(m.coord(0).get_num().get_si());
  }
  return out;
}

TensorDecomposition tensor_decompose(const Character& a, const Character& b, const CharacterTable& table) {
  return decompose(pointwise_product(a, b), table);
}

std::string TensorDecomposition::compact(const CharacterTable& table) const {
  std::string out;
  for (std::size_t k = 0; k < multiplicities.size(); ++k) {
    for (long m = 0; m < multiplicities[k]; ++m) out += table.rows[k].label;
  }
  return out;
}

std::size_t WedderburnStructure::total_real_dimension() const {
  std::size_t sum = 0;
  for (const auto& b : blocks) sum += b.real_dimension;
  return sum;
}

std::string block_name(const WedderburnBlock& block) {
  const char* letter = block.division == DivisionType::kReal ? "R" : (block.division == DivisionType::kComplex ? "C" : "H");
  if (block.matrix_size == 1) return letter;
  return "M" + std::to_string(block.matrix_size) + "(" + letter + ")";
}

std::string WedderburnStructure::format() const {
  std::string out;
  for (std::size_t k = 0; k < blocks.size();) {
    std::size_t run = 1;
    while (k + run < blocks.size() && blocks[k + run] == blocks[k]) ++run;
    if (!out.empty()) out += " + ";
    if (run > 1) out += std::to_string(run);
    out += block_name(blocks[k]);
    k += run;
  }
  return out;
}

WedderburnStructure real_wedderburn(const CharacterTable& complex_table) {
  WedderburnStructure out;
  out.field = TableField::kReal;
  const auto real_table = real_character_table(complex_table);
  for (const auto& row : real_table.rows) {
    // complex constituent degree
    const std::size_t d = static_cast<std::size_t>(row.dimension()) / (row.indicator == 1 ? 1 : 2);
    WedderburnBlock b;
    if (row.indicator == 1) {
      b = {d, DivisionType::kReal, d * d};
    } else if (row.indicator == 0) {
      b = {d, DivisionType::kComplex, 2 * d * d};
    } else {
      b = {d / 2, DivisionType::kQuaternion, d * d};
    }
    out.blocks.push_back(b);
  }
  std::sort(out.blocks.begin(), out.blocks.end(), [](const WedderburnBlock& a, const WedderburnBlock& b) {
    return std::tuple(a.real_dimension, a.division, a.matrix_size) < std::tuple(b.real_dimension, b.division, b.matrix_size);
  });
  return out;
}

WedderburnStructure complex_wedderburn(const CharacterTable& complex_table) {
  WedderburnStructure out;
  out.field = TableField::kComplex;
  for (const auto& row : complex_table.rows) {
    const auto d = static_cast<std::size_t>(row.dimension());
    out.blocks.push_back({d, DivisionType::kComplex, 2 * d * d});
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const WedderburnBlock& a, const WedderburnBlock& b) { return a.matrix_size < b.matrix_size; });
  return out;
}

WedderburnStructure real_wedderburn(GroupPtr g) { return real_wedderburn(complex_character_table(std::move(g))); }

WedderburnStructure complex_wedderburn(GroupPtr g) { return complex_wedderburn(complex_character_table(std::move(g))); }

}  // namespace fgre
