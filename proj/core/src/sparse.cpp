#include "antiassoc/sparse.hpp"

#include <vector>

#include "antiassoc/errors.hpp"

namespace antiassoc {

bool SparseEchelon::insert(SparseRow row) {
  std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
  while (!row.empty()) {
    const auto [lead, coef] = *row.begin();
    if (lead >= cols_) throw InputError("sparse row column out of range");
    auto pivot = pivots_.find(lead);
    if (pivot == pivots_.end()) {
      const Rational inv = 1 / coef;
      for (auto& [col, value] : row) value *= inv;
      pivots_.emplace(lead, std::move(row));
      return true;
    }
    const Rational factor = coef;
    for (const auto& [col, value] : pivot->second) {
      auto& slot = row[col];
      slot -= factor * value;
      if (sgn(slot) == 0) row.erase(col);
    }
  }
  return false;
}

Subspace SparseEchelon::kernel() const {
  // Back-substitute into reduced form: a pivot column may only appear in
  // rows whose pivot is smaller, so sweep pivots from the right.
  std::map<std::size_t, SparseRow> reduced = pivots_;
  for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
    const std::size_t col = it->first;
    const SparseRow& source = it->second;
    for (auto other = reduced.begin(); other->first != col; ++other) {
      auto hit = other->second.find(col);
      if (hit == other->second.end()) continue;
      const Rational factor = hit->second;
      for (const auto& [c, value] : source) {
        auto& slot = other->second[c];
        slot -= factor * value;
        if (sgn(slot) == 0) other->second.erase(c);
      }
    }
  }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (reduced.contains(free)) continue;
    Vector v(cols_);
    v[free] = 1;
    for (const auto& [pivot, row] : reduced) {
      if (auto hit = row.find(free); hit != row.end()) v[pivot] = -hit->second;
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols_, basis);
}

Subspace SparseEchelon::row_space() const {
  std::vector<Vector> rows;
  for (const auto& [pivot, row] : pivots_) {
    Vector v(cols_);
    for (const auto& [c, value] : row) v[c] = value;
    rows.push_back(std::move(v));
  }
  return Subspace::span(cols_, rows);
}

}  // namespace antiassoc
