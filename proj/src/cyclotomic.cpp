#include "fgre/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "fgre/error.hpp"
#include "fgre/linalg.hpp"

namespace fgre {

namespace {

constexpr int kN = CycScalar::kDegree;
constexpr int kM = CycScalar::kConductor;

// Coordinates of zeta^m, m = 0..23, as small integers.
using PowerTable = std::array<std::array<int, kN>, kM>;

PowerTable make_power_table() {
  PowerTable table{};
  table[0][0] = 1;
  for (int m = 1; m < kM; ++m) {
    // multiply the previous power by zeta, folding zeta^8 = zeta^4 - 1
    const auto& prev = table[m - 1];
    const int carry = prev[kN - 1];
    for (int k = kN - 1; k > 0; --k) table[m][k] = prev[k - 1];
    table[m][0] = -carry;
    table[m][4] += carry;
  }
  return table;
}

const PowerTable& power_table() {
  static const PowerTable table = make_power_table();
  return table;
}

int mod24(long k) {
  long r = k % kM;
  return static_cast<int>(r < 0 ? r + kM : r);
}

struct NamedConstant {
  const char* ascii;
  const char* unicode;
  CycScalar value;
};

const std::vector<NamedConstant>& named_constants() {
  static const std::vector<NamedConstant> table = [] {
    std::vector<NamedConstant> t;
    t.push_back({"w", "ω", cyc_omega()});
    t.push_back({"wb", "ω̄", cyc_omega().conj()});
    t.push_back({"i", "i", cyc_i()});
    t.push_back({"sqrt3", "√3", cyc_sqrt3()});
    t.push_back({"sqrt2", "√2", cyc_sqrt2()});
    t.push_back({"i*sqrt3", "i√3", cyc_i() * cyc_sqrt3()});
    t.push_back({"i*sqrt2", "i√2", cyc_i() * cyc_sqrt2()});
    t.push_back({"sqrt6", "√6", cyc_sqrt2() * cyc_sqrt3()});
    return t;
  }();
  return table;
}

std::string scaled(const Rational& q, const std::string& name) {
  if (q == 1) return name;
  if (q == -1) return "-" + name;
  return format_rational(q) + "*" + name;
}

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out.empty() ? "0" : out;
}

std::string pretty_impl(const CycScalar& x, bool unicode) {
  if (x.is_rational()) return format_rational(x.coord(0));
  // prefer a plain multiple of one constant, then rational + multiple
  for (const auto& c : named_constants()) {
    int k = 1;
    while (k < kN && is_zero(c.value.coord(k))) ++k;
    if (k == kN || is_zero(x.coord(k))) continue;
    const Rational b = x.coord(k) / c.value.coord(k);
    if (x == CycScalar(b) * c.value) return scaled(b, unicode ? c.unicode : c.ascii);
  }
  for (const auto& c : named_constants()) {
    int k = 1;
    while (k < kN && is_zero(c.value.coord(k))) ++k;
    if (k == kN || is_zero(x.coord(k))) continue;
    const Rational b = x.coord(k) / c.value.coord(k);
    const CycScalar rest = x - CycScalar(b) * c.value;
    if (!rest.is_rational()) continue;
    const std::string name = unicode ? c.unicode : c.ascii;
    std::vector<std::string> terms;
    if (!is_zero(rest.coord(0))) terms.push_back(format_rational(rest.coord(0)));
    terms.push_back(scaled(b, name));
    return join_terms(terms);
  }
  std::vector<std::string> terms;
  for (int k = 0; k < kN; ++k) {
    if (is_zero(x.coord(k))) continue;
    if (k == 0) {
      terms.push_back(format_rational(x.coord(k)));
    } else {
      terms.push_back(scaled(x.coord(k), k == 1 ? std::string("z") : "z^" + std::to_string(k)));
    }
  }
  return join_terms(terms);
}

}  // namespace

CycScalar::CycScalar(long value) { coords_[0] = value; }

CycScalar::CycScalar(const Rational& value) { coords_[0] = value; }

CycScalar CycScalar::from_coords(const std::array<Rational, kDegree>& coords) {
  CycScalar out;
  out.coords_ = coords;
  for (auto& c : out.coords_) c.canonicalize();
  return out;
}

CycScalar CycScalar::zeta_power(int k) {
  const auto& row = power_table()[mod24(k)];
  CycScalar out;
  for (int j = 0; j < kN; ++j) out.coords_[j] = row[j];
  return out;
}

bool CycScalar::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycScalar::is_rational() const {
  for (int k = 1; k < kN; ++k) {
    if (sgn(coords_[k]) != 0) return false;
  }
  return true;
}

bool CycScalar::is_integral() const {
  for (const auto& c : coords_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

Rational CycScalar::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::kInvalidInput, "scalar " + pretty() + " is not rational");
  return coords_[0];
}

CycScalar CycScalar::galois(int k) const {
  if (std::gcd(mod24(k), kM) != 1) {
    throw Error(ErrorKind::kInvalidInput, "galois exponent must be coprime to 24");
  }
  const auto& table = power_table();
  CycScalar out;
  for (int j = 0; j < kN; ++j) {
    if (sgn(coords_[j]) == 0) continue;
    const auto& row = table[mod24(static_cast<long>(j) * k)];
    for (int m = 0; m < kN; ++m) {
      if (row[m] != 0) out.coords_[m] += coords_[j] * row[m];
    }
  }
  return out;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::kDivisionByZero, "inverse of zero");
  if (is_rational()) return CycScalar(Rational(1 / coords_[0]));
  // a^-1 = (product of the other conjugates) / norm(a)
  CycScalar others(1L);
  for (int k : {5, 7, 11, 13, 17, 19, 23}) others *= galois(k);
  const CycScalar norm = *this * others;
  return others * CycScalar(Rational(1 / norm.to_rational()));
}

std::complex<double> CycScalar::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  for (int k = 0; k < kN; ++k) {
    const double angle = std::numbers::pi * k / 12.0;
    z += coords_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
  for (int k = 0; k < kN; ++k) {
    if (sgn(rhs.coords_[k]) != 0) coords_[k] += rhs.coords_[k];
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
  for (int k = 0; k < kN; ++k) {
    if (sgn(rhs.coords_[k]) != 0) coords_[k] -= rhs.coords_[k];
  }
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
  *this = *this * rhs;
  return *this;
}

CycScalar operator*(const CycScalar& lhs, const CycScalar& rhs) {
  CycScalar out;
  if (rhs.is_rational()) {
    if (sgn(rhs.coords_[0]) == 0) return out;
    for (int k = 0; k < kN; ++k) {
      if (sgn(lhs.coords_[k]) != 0) out.coords_[k] = lhs.coords_[k] * rhs.coords_[0];
    }
    return out;
  }
  if (lhs.is_rational()) return rhs * lhs;
  std::array<Rational, 2 * kN - 1> poly{};
  for (int a = 0; a < kN; ++a) {
    if (sgn(lhs.coords_[a]) == 0) continue;
    for (int b = 0; b < kN; ++b) {
      if (sgn(rhs.coords_[b]) == 0) continue;
      poly[a + b] += lhs.coords_[a] * rhs.coords_[b];
    }
  }
  // x^8 = x^4 - 1
  for (int k = 2 * kN - 2; k >= kN; --k) {
    if (sgn(poly[k]) == 0) continue;
    poly[k - 4] += poly[k];
    poly[k - 8] -= poly[k];
  }
  for (int k = 0; k < kN; ++k) out.coords_[k] = std::move(poly[k]);
  return out;
}

CycScalar CycScalar::operator-() const {
  CycScalar out;
  for (int k = 0; k < kN; ++k) out.coords_[k] = -coords_[k];
  return out;
}

std::strong_ordering operator<=>(const CycScalar& lhs, const CycScalar& rhs) {
  for (int k = 0; k < kN; ++k) {
    const int c = cmp(lhs.coords_[k], rhs.coords_[k]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t CycScalar::hash() const {
  std::size_t h = 0;
  for (const auto& c : coords_) h = h * 1000003 ^ hash_value(c);
  return h;
}

std::string CycScalar::pretty() const { return pretty_impl(*this, false); }

std::string CycScalar::pretty_unicode() const { return pretty_impl(*this, true); }

const CycScalar& cyc_i() {
  static const CycScalar value = CycScalar::zeta_power(6);
  return value;
}

const CycScalar& cyc_omega() {
  static const CycScalar value = CycScalar::zeta_power(8);
  return value;
}

const CycScalar& cyc_sqrt2() {
  static const CycScalar value = CycScalar::zeta_power(3) + CycScalar::zeta_power(-3);
  return value;
}

const CycScalar& cyc_sqrt3() {
  static const CycScalar value = CycScalar::zeta_power(2) + CycScalar::zeta_power(-2);
  return value;
}

CycScalar root_of_unity(int n) {
  if (n <= 0 || kM % n != 0) throw Error(ErrorKind::kInvalidInput, "root order must divide 24");
  return CycScalar::zeta_power(kM / n);
}

// ---------------------------------------------------------------- CycMatrix

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

CycMatrix::CycMatrix(std::size_t rows, std::size_t cols, std::vector<CycScalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::kInvalidInput, "matrix entry count does not match its shape");
  }
}

CycMatrix::CycMatrix(std::initializer_list<std::initializer_list<CycScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::kInvalidInput, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

CycMatrix CycMatrix::identity(std::size_t n) {
  CycMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = CycScalar(1L);
  return m;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

CycScalar CycMatrix::trace() const {
  CycScalar sum;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) sum += (*this)(k, k);
  return sum;
}

bool CycMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

CycMatrix& CycMatrix::operator+=(const CycMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::kInvalidInput, "shape mismatch in +");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

CycMatrix& CycMatrix::operator-=(const CycMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error(ErrorKind::kInvalidInput, "shape mismatch in -");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

CycMatrix& CycMatrix::operator*=(const CycScalar& s) {
  for (auto& e : entries_) {
    if (!e.is_zero()) e = e * s;
  }
  return *this;
}

CycMatrix operator*(const CycMatrix& lhs, const CycMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorKind::kInvalidInput, "shape mismatch in *");
  CycMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const CycScalar& a = lhs(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        const CycScalar& b = rhs(k, c);
        if (!b.is_zero()) out(r, c) += a * b;
      }
    }
  }
  return out;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

bool operator<(const CycMatrix& lhs, const CycMatrix& rhs) {
  if (lhs.rows_ != rhs.rows_) return lhs.rows_ < rhs.rows_;
  if (lhs.cols_ != rhs.cols_) return lhs.cols_ < rhs.cols_;
  return std::lexicographical_compare(lhs.entries_.begin(), lhs.entries_.end(), rhs.entries_.begin(),
                                      rhs.entries_.end());
}

std::size_t CycMatrix::hash() const {
  std::size_t h = rows_ * 131 + cols_;
  for (const auto& e : entries_) h = h * 1099511628211ULL ^ e.hash();
  return h;
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

CycMatrix realify(const CycMatrix& m) {
  const CycScalar half(Rational(1, 2));
  const CycScalar minus_half_i = -(half * cyc_i());
  CycMatrix out(2 * m.rows(), 2 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const CycScalar& x = m(r, c);
      const CycScalar re = half * (x + x.conj());
      const CycScalar im = minus_half_i * (x - x.conj());
      out(2 * r, 2 * c) = re;
      out(2 * r, 2 * c + 1) = -im;
      out(2 * r + 1, 2 * c) = im;
      out(2 * r + 1, 2 * c + 1) = re;
    }
  }
  return out;
}

namespace {

linalg::Rows<CycScalar> to_rows(const CycMatrix& m) {
  linalg::Rows<CycScalar> rows(m.rows(), std::vector<CycScalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  }
  return rows;
}

}  // namespace

std::size_t matrix_rank(const CycMatrix& m) { return linalg::rank(to_rows(m), m.cols()); }

std::optional<CycMatrix> matrix_solve(const CycMatrix& m, const CycMatrix& rhs) {
  if (m.rows() != rhs.rows()) throw Error(ErrorKind::kInvalidInput, "matrix_solve: row count mismatch");
  const std::size_t n = m.cols();
  auto rows = to_rows(m);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) rows[r].push_back(rhs(r, c));
  }
  const auto pivots = linalg::row_reduce(rows, n + rhs.cols());
  CycMatrix x(n, rhs.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) return std::nullopt;
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(pivots[r], c) = rows[r][n + c];
  }
  return x;
}

CycMatrix matrix_kernel(const CycMatrix& m) {
  const auto basis = linalg::kernel(to_rows(m), m.cols());
  CycMatrix out(m.cols(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t r = 0; r < m.cols(); ++r) out(r, k) = basis[k][r];
  }
  return out;
}

CycMatrix matrix_inverse(const CycMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::kNotInvertible, "non-square matrix");
  auto x = matrix_solve(m, CycMatrix::identity(m.rows()));
  if (!x || matrix_rank(m) != m.rows()) throw Error(ErrorKind::kNotInvertible, "singular matrix");
  return *x;
}

}  // namespace fgre
