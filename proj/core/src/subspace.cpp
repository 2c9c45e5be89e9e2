#include "antiassoc/subspace.hpp"

#include "antiassoc/errors.hpp"

namespace antiassoc {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw InputError("subspace ambient dimension mismatch: " + std::to_string(a.ambient_dim()) +
                     " vs " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::full(std::size_t ambient) {
  return row_space(Matrix::identity(ambient));
}

Subspace Subspace::span(std::size_t ambient, std::span<const Vector> vectors) {
  Matrix m(vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) throw InputError("vector length does not match ambient dimension");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
  }
  return row_space(m);
}

Subspace Subspace::row_space(const Matrix& m) {
  auto reduced = rref(m);
  Subspace s(m.cols());
  s.pivots_ = reduced.pivots;
  s.basis_.reserve(reduced.rank);
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    auto row = reduced.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = out[pivots_[i]];
    if (sgn(c) != 0) add_scaled(out, -c, basis_[i]);
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return antiassoc::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

Matrix Subspace::as_matrix() const { return Matrix::from_rows(basis_, ambient_); }

Subspace kernel_basis(const Matrix& m) {
  const auto reduced = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : reduced.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < reduced.rank; ++r) v[reduced.pivots[r]] = -reduced.reduced(r, free);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace annihilator(const Subspace& s) { return kernel_basis(s.as_matrix()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), all);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

}  // namespace antiassoc
