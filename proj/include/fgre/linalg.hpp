#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fgre::linalg {

template <class F>
using Rows = std::vector<std::vector<F>>;

/// In-place reduced row echelon form over an exact field. F needs +, -, *,
/// is_zero(F) and field_inverse(F). Returns the pivot column of each nonzero row.
template <class F>
std::vector<std::size_t> row_reduce(Rows<F>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && is_zero(m[pick][col])) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const F scale = field_inverse(m[row][col]);
    for (std::size_t c = col; c < ncols; ++c) {
      if (!is_zero(m[row][c])) m[row][c] = m[row][c] * scale;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || is_zero(m[r][col])) continue;
      const F factor = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        if (!is_zero(m[row][c])) m[r][c] = m[r][c] - factor * m[row][c];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Rows<F> m, std::size_t ncols) {
  return row_reduce(m, ncols).size();
}

/// Kernel basis vectors of length ncols.
template <class F>
std::vector<std::vector<F>> kernel(Rows<F> m, std::size_t ncols) {
  const auto pivots = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(ncols, F(0));
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!is_zero(m[r][free])) v[pivots[r]] = F(0) - m[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Incrementally maintained echelon basis of a subspace; used for span growth.
template <class F>
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Adds v if it is independent of the current span; returns whether it was added.
  bool add(std::vector<F> v) {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      const F& coeff = v[pivots_[r]];
      if (is_zero(coeff)) continue;
      const F factor = coeff;
      for (std::size_t c = pivots_[r]; c < dim_; ++c) {
        if (!is_zero(basis_[r][c])) v[c] = v[c] - factor * basis_[r][c];
      }
    }
    std::size_t pivot = 0;
    while (pivot < dim_ && is_zero(v[pivot])) ++pivot;
    if (pivot == dim_) return false;
    const F scale = field_inverse(v[pivot]);
    for (std::size_t c = pivot; c < dim_; ++c) {
      if (!is_zero(v[c])) v[c] = v[c] * scale;
    }
    // keep earlier rows reduced against the new pivot
    for (auto& row : basis_) {
      if (is_zero(row[pivot])) continue;
      const F factor = row[pivot];
      for (std::size_t c = pivot; c < dim_; ++c) {
        if (!is_zero(v[c])) row[c] = row[c] - factor * v[c];
      }
    }
    basis_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t size() const { return basis_.size(); }

 private:
  std::size_t dim_;
  Rows<F> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fgre::linalg
