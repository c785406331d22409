#include "fgre/algebra.hpp"

#include <algorithm>
#include <numeric>

#include "fgre/builtins.hpp"
#include "fgre/error.hpp"
#include "fgre/linalg.hpp"

namespace fgre {

namespace {

bool is_q8(const FiniteGroup& g) {
  if (g.order() != 8) return false;
  const Quaternion one = Quaternion::one();
  for (const auto& q : {one, Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k()}) {
    if (!g.find_quaternion(q) || !g.find_quaternion(-q)) return false;
  }
  return true;
}

Ring ring_of(const CycScalar& c) {
  if (!c.is_rational()) return Ring::kCyc;
  return is_integer(c.to_rational()) ? Ring::kInt : Ring::kRat;
}

}  // namespace

std::string to_string(Ring r) {
  switch (r) {
    case Ring::kInt: return "int";
    case Ring::kRat: return "rat";
    case Ring::kCyc: return "cyc";
  }
  return "?";
}

Ring parse_ring(const std::string& text) {
  if (text == "int") return Ring::kInt;
  if (text == "rat") return Ring::kRat;
  if (text == "cyc") return Ring::kCyc;
  throw Error(ErrorKind::kInvalidInput, "unknown ring '" + text + "'");
}

AlgebraElement::AlgebraElement(GroupPtr group, Ring ring, std::vector<CycScalar> coeffs)
    : group_(std::move(group)), ring_(ring), coeffs_(std::move(coeffs)) {
  if (!group_) throw Error(ErrorKind::kInvalidInput, "algebra element without a group");
  if (coeffs_.size() != group_->order()) {
    throw Error(ErrorKind::kInvalidInput, "expected " + std::to_string(group_->order()) + " coefficients, got " +
                                              std::to_string(coeffs_.size()));
  }
  if (minimal_ring() > ring_) {
    throw Error(ErrorKind::kInvalidInput, "coefficients do not lie in the ring " + fgre::to_string(ring_));
  }
}

AlgebraElement AlgebraElement::zero(GroupPtr group, Ring ring) {
  const std::size_t n = group->order();
  return AlgebraElement(std::move(group), ring, std::vector<CycScalar>(n));
}

AlgebraElement AlgebraElement::identity(GroupPtr group, Ring ring) { return basis(std::move(group), 0, ring); }

AlgebraElement AlgebraElement::basis(GroupPtr group, std::size_t element, Ring ring) {
  auto out = zero(std::move(group), ring);
  out.coeffs_.at(element) = CycScalar(1L);
  return out;
}

AlgebraElement AlgebraElement::of(GroupPtr group, const Quaternion& q) {
  const auto idx = group->find_quaternion(q);
  if (!idx) throw Error(ErrorKind::kUnknownName, "element " + q.label() + " is not in " + group->name());
  return basis(std::move(group), *idx);
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycScalar& c) { return c.is_zero(); });
}

bool AlgebraElement::has_integer_coefficients() const { return minimal_ring() == Ring::kInt; }

Ring AlgebraElement::minimal_ring() const {
  Ring r = Ring::kInt;
  for (const auto& c : coeffs_) r = std::max(r, ring_of(c));
  return r;
}

AlgebraElement AlgebraElement::with_ring(Ring ring) const { return AlgebraElement(group_, ring, coeffs_); }

void AlgebraElement::check_same_group(const AlgebraElement& o) const {
  if (group_ != o.group_ && !(group_->name() == o.group_->name() && group_->order() == o.group_->order())) {
    throw Error(ErrorKind::kWrongGroup, "elements of " + group_->name() + " and " + o.group_->name());
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_same_group(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  ring_ = std::max(ring_, o.ring_);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  check_same_group(o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  ring_ = std::max(ring_, o.ring_);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return algebra_mul(a, b); }

AlgebraElement operator*(const CycScalar& c, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (auto& x : out.coeffs_) x *= c;
  out.ring_ = std::max(a.ring_, ring_of(c));
  return out;
}

AlgebraElement AlgebraElement::operator-() const { return CycScalar(-1L) * *this; }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.group_->order() == b.group_->order() && a.coeffs_ == b.coeffs_;
}

std::string AlgebraElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const CycScalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    bool negative = false;
    std::string coef;
    if (c.is_rational()) {
      Rational r = c.to_rational();
      negative = sgn(r) < 0;
      if (negative) r = -r;
      if (r != 1) coef = format_rational(r) + "*";
    } else {
      coef = "(" + c.pretty() + ")*";
    }
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef + group_->label(k);
  }
  return out.empty() ? "0" : out;
}

AlgebraElement algebra_mul(const AlgebraElement& a, const AlgebraElement& b) {
  const FiniteGroup& g = *a.group();
  if (a.group() != b.group() && (g.name() != b.group()->name() || g.order() != b.group()->order())) {
    throw Error(ErrorKind::kWrongGroup, "elements of " + g.name() + " and " + b.group()->name());
  }
  std::vector<CycScalar> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (a.coeff(x).is_zero()) continue;
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (b.coeff(y).is_zero()) continue;
      out[g.mul(x, y)] += a.coeff(x) * b.coeff(y);
    }
  }
  return AlgebraElement(a.group(), std::max(a.ring(), b.ring()), std::move(out));
}

std::vector<AlgebraElement> central_idempotents(const CharacterTable& table) {
  const FiniteGroup& g = *table.group;
  const CycScalar inv_order(Rational(1) / static_cast<long>(g.order()));
  std::vector<AlgebraElement> out;
  for (const auto& row : table.rows) {
    // psi(1) / (|G| <psi,psi>) sum_g conj(psi(g)) g
    const CycScalar norm = inner_product(g, row, row);
    const CycScalar scale = row.degree() * inv_order / norm;
    std::vector<CycScalar> coeffs(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) coeffs[x] = scale * row.values[g.class_of(x)].conj();
    AlgebraElement e(table.group, Ring::kCyc, std::move(coeffs));
    out.push_back(e.with_ring(std::max(Ring::kRat, e.minimal_ring())));
  }
  return out;
}

IdempotentReport verify_idempotent(const AlgebraElement& a) {
  IdempotentReport report;
  report.idempotent = algebra_mul(a, a) == a;
  // central iff the coefficients are constant on conjugacy classes
  const FiniteGroup& g = *a.group();
  report.central = true;
  for (std::size_t x = 0; x < g.order() && report.central; ++x) {
    const auto& rep = g.classes()[g.class_of(x)].representative;
    report.central = a.coeff(x) == a.coeff(rep);
  }
  return report;
}

std::size_t block_dimension(const AlgebraElement& a) {
  if (!verify_idempotent(a).idempotent) {
    throw Error(ErrorKind::kNotIdempotent, "element is not idempotent: " + a.to_string());
  }
  const FiniteGroup& g = *a.group();
  const std::size_t n = g.order();
  // columns a*g for every basis element g
  if (a.minimal_ring() != Ring::kCyc) {
    linalg::Rows<Rational> m(n, std::vector<Rational>(n));
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!a.coeff(x).is_zero()) m[g.mul(x, y)][y] += a.coeff(x).to_rational();
      }
    }
    return linalg::rank(std::move(m), n);
  }
  linalg::Rows<CycScalar> m(n, std::vector<CycScalar>(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) m[g.mul(x, y)][y] += a.coeff(x);
  }
  return linalg::rank(std::move(m), n);
}

std::vector<AlgebraElement> enumerate_idempotents_commutative(GroupPtr g) {
  if (!g->is_abelian()) throw Error(ErrorKind::kNotAbelian, g->name() + " is not abelian");
  const auto table = complex_character_table(g);
  const auto primitive = central_idempotents(table);
  // rational blocks: orbits of the rows under the Galois group of Q(zeta_24)
  std::vector<int> block_of(table.rows.size(), -1);
  int blocks = 0;
  for (std::size_t a = 0; a < table.rows.size(); ++a) {
    if (block_of[a] >= 0) continue;
    for (int k = 1; k < CycScalar::kConductor; ++k) {
      if (std::gcd(k, CycScalar::kConductor) != 1) continue;
      std::vector<CycScalar> image;
      for (const auto& v : table.rows[a].values) image.push_back(v.galois(k));
      for (std::size_t b = 0; b < table.rows.size(); ++b) {
        if (table.rows[b].values == image) block_of[b] = blocks;
      }
    }
    ++blocks;
  }
  std::vector<AlgebraElement> block_idempotents(blocks, AlgebraElement::zero(g, Ring::kRat));
  for (std::size_t a = 0; a < table.rows.size(); ++a) block_idempotents[block_of[a]] += primitive[a];
  if (blocks > 20) throw Error(ErrorKind::kCapExceeded, "too many rational blocks to enumerate");
  std::vector<AlgebraElement> out;
  for (unsigned long mask = 0; mask < (1UL << blocks); ++mask) {
    AlgebraElement e = AlgebraElement::zero(g, Ring::kRat);
    for (int b = 0; b < blocks; ++b) {
      if (mask & (1UL << b)) e += block_idempotents[b];
    }
    out.push_back(e.with_ring(std::max(Ring::kRat, e.minimal_ring())));
  }
  return out;
}

std::vector<AlgebraElement> integral_idempotent_check(GroupPtr g) {
  std::vector<AlgebraElement> out;
  for (auto& e : enumerate_idempotents_commutative(std::move(g))) {
    if (e.has_integer_coefficients()) out.push_back(e.with_ring(Ring::kInt));
  }
  return out;
}

namespace {

AlgebraElement q(const GroupPtr& g, const Quaternion& x) { return AlgebraElement::of(g, x).with_ring(Ring::kRat); }

CycScalar frac(long num, long den) { return CycScalar(Rational(num) / den); }

}  // namespace

AlgebraElement order_three_sum(GroupPtr g) {
  const Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
  const Quaternion w = quaternion_w(), v = quaternion_v();
  return q(g, w) + q(g, i * w) + q(g, j * w) + q(g, k * w) + q(g, v) + q(g, -i * v) + q(g, -j * v) + q(g, -k * v);
}

AlgebraElement boson_projection(GroupPtr g) {
  const Quaternion i = Quaternion::unit_i();
  return frac(1, 2) * (q(g, Quaternion::one()) + q(g, i * i));
}

AlgebraElement fermion_projection(GroupPtr g) {
  const Quaternion i = Quaternion::unit_i();
  return frac(1, 2) * (q(g, Quaternion::one()) - q(g, i * i));
}

std::vector<NamedIdempotent> tetrahedral_idempotents(GroupPtr g) {
  const Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
  const auto e = q(g, Quaternion::one());
  const auto ii = q(g, i * i);
  const auto s = order_three_sum(g);
  const auto wv = q(g, quaternion_w()) + q(g, quaternion_v());
  const auto ij = (e + ii) * (e + q(g, i)) * (e + q(g, j));
  return {
      {"R", frac(1, 24) * (ij * (e + wv))},
      {"C", frac(1, 24) * (ij * (CycScalar(2L) * e - wv))},
      {"M3(R)", frac(1, 8) * ((e + ii) * (CycScalar(3L) * e - q(g, i) - q(g, j) - q(g, k)))},
      {"H", frac(1, 12) * ((e - ii) * (CycScalar(2L) * e - s))},
      {"M2(C)", frac(1, 12) * ((e - ii) * (CycScalar(4L) * e + s))},
  };
}

QuantumNumbers quantum_numbers(int lambda_i, int lambda_j) {
  return {Rational(lambda_j - lambda_i) / 2, Rational(lambda_j) / 2};
}

std::array<AlgebraElement, 8> q8_basis(GroupPtr g) {
  if (!is_q8(*g)) throw Error(ErrorKind::kWrongGroup, g->name() + " is not Q8");
  const Quaternion one = Quaternion::one(), i = Quaternion::unit_i(), j = Quaternion::unit_j(),
                   k = Quaternion::unit_k();
  const auto pair_sum = [&](const Quaternion& x) { return q(g, x) + q(g, -x); };
  const auto pair_diff = [&](const Quaternion& x) { return q(g, x) - q(g, -x); };
  const auto signed_sum = [&](int si, int sj, int sk) {
    return pair_sum(one) + CycScalar(static_cast<long>(si)) * pair_sum(i) +
           CycScalar(static_cast<long>(sj)) * pair_sum(j) + CycScalar(static_cast<long>(sk)) * pair_sum(k);
  };
  return {signed_sum(1, 1, 1),  signed_sum(1, -1, -1), signed_sum(-1, 1, -1), signed_sum(-1, -1, 1),
          pair_diff(one),       pair_diff(i),          pair_diff(j),          pair_diff(k)};
}

Q8Decomposition q8_decompose(const AlgebraElement& a) {
  const GroupPtr& g = a.group();
  const auto basis = q8_basis(g);
  CycMatrix m(8, 8), rhs(8, 1);
  for (std::size_t b = 0; b < 8; ++b) {
    for (std::size_t x = 0; x < 8; ++x) m(x, b) = basis[b].coeff(x);
  }
  for (std::size_t x = 0; x < 8; ++x) rhs(x, 0) = a.coeff(x);
  const auto sol = matrix_solve(m, rhs);
  if (!sol) throw Error(ErrorKind::kInternalInconsistency, "Q8 basis is singular");
  Q8Decomposition out;
  const std::size_t i = *g->find_quaternion(Quaternion::unit_i());
  const std::size_t j = *g->find_quaternion(Quaternion::unit_j());
  for (std::size_t b = 0; b < 8; ++b) {
    out.raw[b] = (*sol)(b, 0);
    out.normalized[b] = out.raw[b] * CycScalar(b < 4 ? 8L : 2L);
  }
  for (std::size_t b = 0; b < 4; ++b) {
    const int li = basis[b].coeff(i) == CycScalar(1L) ? 1 : -1;
    const int lj = basis[b].coeff(j) == CycScalar(1L) ? 1 : -1;
    out.charges[b] = quantum_numbers(li, lj);
  }
  return out;
}

AlgebraElement q8_reconstruct(GroupPtr g, const std::array<CycScalar, 8>& raw) {
  const auto basis = q8_basis(g);
  AlgebraElement out = AlgebraElement::zero(g, Ring::kRat);
  for (std::size_t b = 0; b < 8; ++b) out += raw[b] * basis[b];
  return out.with_ring(std::max(Ring::kRat, out.minimal_ring()));
}

}  // namespace fgre
