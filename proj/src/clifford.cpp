#include "fgre/clifford.hpp"

#include "fgre/error.hpp"
#include "fgre/linalg.hpp"

namespace fgre {

CycMatrix LROperator::apply(const CycMatrix& x) const { return left * x * right; }

LROperator lr_operator(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
    throw Error(ErrorKind::kInvalidInput, "left and right factors must be 2x2");
  }
  return {a, b, kronecker(a, b.transpose())};
}

LROperator compose(const LROperator& outer, const LROperator& inner) {
  return lr_operator(outer.left * inner.left, inner.right * outer.right);
}

LROperator scale(const CycScalar& c, const LROperator& op) { return lr_operator(c * op.left, op.right); }

CycMatrix pauli(int k) {
  const CycScalar i = cyc_i();
  switch (k) {
    case 0: return CycMatrix::identity(2);
    case 1: return CycMatrix(2, 2, {0L, 1L, 1L, 0L});
    case 2: return CycMatrix(2, 2, {0L, -i, i, 0L});
    case 3: return CycMatrix(2, 2, {1L, 0L, 0L, -1L});
    default: throw Error(ErrorKind::kInvalidInput, "no Pauli matrix " + std::to_string(k));
  }
}

GammaSet default_gammas() {
  const CycMatrix is2 = cyc_i() * pauli(2);
  return {{lr_operator(pauli(0), pauli(1)), lr_operator(pauli(1), is2), lr_operator(pauli(2), is2),
           lr_operator(pauli(3), is2)}};
}

std::string CliffordSignature::format() const {
  std::string out = "(";
  for (std::size_t k = 0; k < squares.size(); ++k) {
    if (k) out += ",";
    out += squares[k] > 0 ? "+" : "-";
  }
  return out + ")";
}

CliffordSignature clifford_verify(const GammaSet& gs) {
  CliffordSignature sig;
  const std::size_t n = gs.gammas.size();
  for (std::size_t a = 0; a < n; ++a) {
    const CycMatrix& ga = gs.gammas[a].realized;
    const CycMatrix id = CycMatrix::identity(ga.rows());
    const CycMatrix sq = ga * ga;
    if (sq == id) {
      sig.squares.push_back(1);
    } else if (sq == -id) {
      sig.squares.push_back(-1);
    } else {
      throw Error(ErrorKind::kNotClifford,
                  "gamma" + std::to_string(a) + " squared is not +1 or -1 (pair " + std::to_string(a) + "," +
                      std::to_string(a) + ")");
    }
    for (std::size_t b = 0; b < a; ++b) {
      const CycMatrix& gb = gs.gammas[b].realized;
      if (!(ga * gb + gb * ga).is_zero()) {
        throw Error(ErrorKind::kNotClifford, "gamma" + std::to_string(b) + " and gamma" + std::to_string(a) +
                                                 " do not anticommute (pair " + std::to_string(b) + "," +
                                                 std::to_string(a) + ")");
      }
    }
  }
  return sig;
}

FiniteGroup operator_group(const std::string& name, const std::vector<LROperator>& generators, std::size_t cap) {
  std::vector<CycMatrix> mats;
  for (const auto& op : generators) mats.push_back(op.realized);
  return group_from_matrices(name, mats, cap);
}

FiniteGroup right_mult_group(const GammaSet& gs) {
  if (gs.gammas.size() != 4) throw Error(ErrorKind::kInvalidInput, "expected four gammas");
  const auto& g = gs.gammas;
  const LROperator a = scale(cyc_i(), g[0]);
  const LROperator b = scale(cyc_i(), compose(g[1], compose(g[2], g[3])));
  return operator_group("right", {a, b});
}

namespace {

std::vector<Rational> expand(const CycMatrix& m) {
  std::vector<Rational> out;
  out.reserve(m.rows() * m.cols() * CycScalar::kDegree);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (int k = 0; k < CycScalar::kDegree; ++k) out.push_back(m(r, c).coord(k));
    }
  }
  return out;
}

/// Grows `basis` (and `span`) to the commutator closure.
void close_under_brackets(std::vector<CycMatrix>& basis, linalg::SpanBuilder<Rational>& span) {
  for (std::size_t b = 1; b < basis.size(); ++b) {
    for (std::size_t a = 0; a < b; ++a) {
      CycMatrix bracket = basis[a] * basis[b] - basis[b] * basis[a];
      if (span.add(expand(bracket))) basis.push_back(std::move(bracket));
    }
  }
}

std::vector<CycMatrix> closure_basis(const std::vector<CycMatrix>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators.front().rows();
  linalg::SpanBuilder<Rational> span(n * n * CycScalar::kDegree);
  std::vector<CycMatrix> basis;
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::kInvalidInput, "generators of different sizes");
    if (span.add(expand(g))) basis.push_back(g);
  }
  close_under_brackets(basis, span);
  return basis;
}

}  // namespace

std::size_t lie_closure_dim(const std::vector<CycMatrix>& generators) { return closure_basis(generators).size(); }

std::size_t joint_closure_dim(const std::vector<CycMatrix>& a, const std::vector<CycMatrix>& b) {
  auto basis = closure_basis(a);
  const auto other = closure_basis(b);
  basis.insert(basis.end(), other.begin(), other.end());
  if (basis.empty()) return 0;
  const std::size_t n = basis.front().rows();
  linalg::SpanBuilder<Rational> span(n * n * CycScalar::kDegree);
  for (const auto& m : basis) span.add(expand(m));
  return span.size();
}

std::vector<CycMatrix> gamma_products(const GammaSet& gs) {
  const std::size_t n = gs.gammas.size();
  if (n == 0) return {};
  const std::size_t dim = gs.gammas.front().realized.rows();
  std::vector<CycMatrix> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    CycMatrix m = CycMatrix::identity(dim);
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) m = m * gs.gammas[k].realized;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::size_t gamma_product_rank(const GammaSet& gs) {
  const auto products = gamma_products(gs);
  if (products.empty()) return 0;
  const std::size_t entries = products.front().rows() * products.front().cols();
  linalg::Rows<CycScalar> rows;
  for (const auto& m : products) {
    std::vector<CycScalar> row;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows), entries);
}

}  // namespace fgre
