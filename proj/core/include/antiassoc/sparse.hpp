#pragma once

#include <cstddef>
#include <map>

#include "antiassoc/rational.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// Sparse row: column -> nonzero coefficient.
using SparseRow = std::map<std::size_t, Rational>;

/// Incremental Gaussian elimination on sparse rows. Each stored row has its
/// least column as pivot with coefficient 1 (semi-echelon form).
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t cols) : cols_(cols) {}

  /// Reduces the row against the stored pivots; keeps it if something is
  /// left. Returns true when the rank grew.
  bool insert(SparseRow row);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return pivots_.size() == cols_; }
  bool is_pivot(std::size_t col) const { return pivots_.contains(col); }
  const std::map<std::size_t, SparseRow>& rows() const { return pivots_; }

  /// Null space of the stored rows (vectors v with row . v = 0 for every row).
  Subspace kernel() const;
  /// Row space as a canonical subspace.
  Subspace row_space() const;

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace antiassoc
