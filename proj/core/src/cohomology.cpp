#include "antiassoc/cohomology.hpp"

#include <algorithm>

#include "antiassoc/errors.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/sparse.hpp"

namespace antiassoc {

namespace {

void require_endo(const Algebra& a, const Endo& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) throw InputError("endomorphism size does not match the algebra");
}

void require_cochain(const Algebra& a, const MultilinearMap& m, std::size_t arity) {
  if (m.arity() != arity || m.dim() != a.dim()) {
    throw InputError("expected a " + std::to_string(arity) + "-linear map on a space of dimension " +
                     std::to_string(a.dim()));
  }
}

// Linear combination of signed vectors.
struct Acc {
  Vector v;
  explicit Acc(std::size_t n) : v(n) {}
  Acc& plus(const Vector& w) {
    add_scaled(v, 1, w);
    return *this;
  }
  Acc& minus(const Vector& w) {
    add_scaled(v, -1, w);
    return *this;
  }
};

}  // namespace

MultilinearMap delta1(const Algebra& a, const Endo& f) {
  require_endo(a, f);
  const std::size_t n = a.dim();
  return tabulate(2, n, [&](const std::vector<std::size_t>& i) {
    const Vector x = unit_vector(n, i[0]);
    const Vector y = unit_vector(n, i[1]);
    return Acc(n)
        .plus(a.multiply(x, f.apply(y)))
        .minus(f.apply(a.product(i[0], i[1])))
        .plus(a.multiply(f.apply(x), y))
        .v;
  });
}

MultilinearMap delta2(const Algebra& a, const MultilinearMap& phi) {
  require_cochain(a, phi, 2);
  const std::size_t n = a.dim();
  return tabulate(3, n, [&](const std::vector<std::size_t>& i) {
    const Vector x = unit_vector(n, i[0]);
    const Vector y = unit_vector(n, i[1]);
    const Vector z = unit_vector(n, i[2]);
    return Acc(n)
        .plus(a.multiply(x, phi(y, z)))
        .plus(phi(a.product(i[0], i[1]), z))
        .plus(phi(x, a.product(i[1], i[2])))
        .plus(a.multiply(phi(x, y), z))
        .v;
  });
}

namespace {

Vector delta3_component(const Algebra& a, const MultilinearMap& g, std::size_t component, const Vector& x,
                        const Vector& y, const Vector& z, const Vector& t, const Vector& u) {
  const std::size_t n = a.dim();
  auto m = [&a](const Vector& p, const Vector& q) { return a.multiply(p, q); };
  auto G = [&g](const Vector& p, const Vector& q, const Vector& r) { return g.apply({p, q, r}); };
  const Vector xy = m(x, y);
  const Vector yz = m(y, z);
  const Vector zt = m(z, t);
  const Vector tu = m(t, u);
  switch (component) {
    case 1:
      return Acc(n)
          .plus(m(x, G(y, z, tu)))
          .minus(G(x, y, m(z, tu)))
          .plus(m(xy, G(z, t, u)))
          .minus(G(xy, zt, u))
          .plus(m(G(xy, z, t), u))
          .minus(G(m(xy, z), t, u))
          .plus(m(G(x, y, z), tu))
          .minus(G(x, yz, tu))
          .v;
    case 2:
      return Acc(n)
          .plus(G(m(xy, z), t, u))
          .minus(m(G(xy, z, t), u))
          .plus(m(G(x, y, zt), u))
          .minus(G(x, m(y, zt), u))
          .plus(m(x, G(y, zt, u)))
          .minus(G(x, y, m(zt, u)))
          .plus(m(xy, G(z, t, u)))
          .minus(G(xy, z, tu))
          .v;
    case 3:
      return Acc(n)
          .plus(G(x, yz, tu))
          .minus(m(x, G(yz, t, u)))
          .plus(G(x, m(yz, t), u))
          .minus(m(x, m(G(y, z, t), u)))
          .plus(m(G(x, y, zt), u))
          .minus(m(G(xy, z, t), u))
          .plus(m(m(G(x, y, z), t), u))
          .minus(G(m(x, yz), t, u))
          .v;
    default:
      return Acc(n)
          .plus(G(xy, zt, u))
          .minus(G(x, y, m(zt, u)))
          .plus(m(x, G(y, zt, u)))
          .minus(G(x, m(y, zt), u))
          .plus(m(m(x, G(y, z, t)), u))
          .minus(m(G(x, yz, t), u))
          .plus(m(m(G(x, y, z), t), u))
          .minus(m(G(xy, z, t), u))
          .v;
  }
}

Degree4Cochain delta3_impl(const Algebra& a, const MultilinearMap& g, bool symmetrize) {
  const std::size_t n = a.dim();
  std::vector<std::array<std::size_t, 4>> orders;
  std::array<std::size_t, 4> p{0, 1, 2, 3};
  if (symmetrize) {
    do orders.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  } else {
    orders.push_back(p);
  }
  Degree4Cochain out;
  for (std::size_t c = 0; c < 4; ++c) {
    out[c] = tabulate(5, n, [&](const std::vector<std::size_t>& i) {
      std::array<Vector, 5> args;
      for (std::size_t k = 0; k < 5; ++k) args[k] = unit_vector(n, i[k]);
      Vector sum(n);
      for (const auto& o : orders) {
        add_scaled(sum, 1,
                   delta3_component(a, g, c + 1, args[o[0]], args[o[1]], args[o[2]], args[o[3]], args[4]));
      }
      return sum;
    });
  }
  return out;
}

}  // namespace

Degree4Cochain delta3(const Algebra& a, const MultilinearMap& g) {
  require_cochain(a, g, 3);
  return delta3_impl(a, g, false);
}

MultilinearMap jj_delta1(const Algebra& a, const Endo& f) {
  MultilinearMap d = delta1(a, f);
  d *= -1;
  return d;
}

MultilinearMap jj_delta2(const Algebra& a, const MultilinearMap& phi) {
  require_cochain(a, phi, 2);
  if (!check_identity(a, IdentityKind::Commutative).holds) {
    throw DomainError("the Jacobi-Jordan differential needs a commutative algebra");
  }
  if (!phi.is_symmetric()) throw DomainError("Jacobi-Jordan 2-cochains must be symmetric");
  const std::size_t n = a.dim();
  return tabulate(3, n, [&](const std::vector<std::size_t>& i) {
    Vector out(n);
    for (std::size_t r = 0; r < 3; ++r) {
      const std::size_t p = i[r], q = i[(r + 1) % 3], s = i[(r + 2) % 3];
      add_scaled(out, 1, a.multiply(unit_vector(n, p), phi.value(std::array{q, s})));
      add_scaled(out, 1, phi(unit_vector(n, p), a.product(q, s)));
    }
    return out;
  });
}

Degree4Cochain jj_delta3(const Algebra& a, const MultilinearMap& psi) {
  require_cochain(a, psi, 3);
  if (!psi.is_symmetric()) throw DomainError("Jacobi-Jordan 3-cochains must be symmetric");
  return delta3_impl(a, psi, true);
}

namespace {

// Kernel and image of a linear map given by the images of a domain basis.
struct LinearData {
  Subspace kernel;  // in the ambient of the domain basis
  Subspace image;
};

LinearData analyze(std::size_t ambient, const std::vector<Vector>& domain_basis, const std::vector<Vector>& images,
                   std::size_t target_dim) {
  const std::size_t k = domain_basis.size();
  SparseEchelon img(target_dim);
  for (const auto& v : images) {
    SparseRow row;
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) != 0) row.emplace(c, v[c]);
    }
    if (!row.empty()) img.insert(std::move(row));
  }
  std::vector<SparseRow> transposed(target_dim);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t c = 0; c < target_dim; ++c) {
      if (sgn(images[j][c]) != 0) transposed[c].emplace(j, images[j][c]);
    }
  }
  SparseEchelon eq(k);
  for (auto& row : transposed) {
    if (!row.empty()) eq.insert(std::move(row));
  }
  std::vector<Vector> kernel;
  const Subspace null_space = eq.kernel();
  for (const auto& coeffs : null_space.basis()) {
    Vector v(ambient);
    for (std::size_t j = 0; j < k; ++j) {
      if (sgn(coeffs[j]) != 0) add_scaled(v, coeffs[j], domain_basis[j]);
    }
    kernel.push_back(std::move(v));
  }
  return {Subspace::span(ambient, kernel), img.row_space()};
}

std::vector<Vector> standard_basis(std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(unit_vector(dim, i));
  return out;
}

// Symmetric multilinear maps of the given arity, flattened.
std::vector<Vector> symmetric_basis(std::size_t arity, std::size_t n) {
  MultilinearMap shape(arity, n);
  std::vector<Vector> out;
  for (std::size_t flat = 0; flat < shape.size(); ++flat) {
    auto idx = shape.indices(flat);
    if (!std::is_sorted(idx.begin(), idx.end())) continue;
    for (std::size_t k = 0; k < n; ++k) {
      MultilinearMap m(arity, n);
      std::sort(idx.begin(), idx.end());
      do m.value(idx)[k] = 1;
      while (std::next_permutation(idx.begin(), idx.end()));
      out.push_back(m.flatten());
    }
  }
  return out;
}

template <typename D1, typename D2>
CohomologyDims cohomology_dims(const Algebra& a, const std::vector<Vector>& c2_basis, std::size_t c3_dim,
                               D1&& d1, D2&& d2) {
  const std::size_t n = a.dim();
  if (n > kMaxCohomologyDim) {
    throw InputError("cohomology dimensions are limited to algebras of dimension <= " +
                     std::to_string(kMaxCohomologyDim));
  }
  const std::size_t c1 = n * n, c2 = n * n * n;
  const auto c1_basis = standard_basis(c1);
  std::vector<Vector> im1;
  for (const auto& f : c1_basis) im1.push_back(d1(unflatten(f, n)).flatten());
  std::vector<Vector> im2;
  for (const auto& phi : c2_basis) im2.push_back(d2(MultilinearMap::unflatten(2, n, phi)).flatten());

  const LinearData first = analyze(c1, c1_basis, im1, c2);
  const LinearData second = analyze(c2, c2_basis, im2, n * n * n * n);
  CohomologyDims d;
  d.cocycles1 = first.kernel;
  d.cocycles2 = second.kernel;
  d.coboundaries2 = first.image;
  d.h1 = first.kernel.dim();
  d.image_in_kernel = second.kernel.contains(first.image);
  d.h2 = second.kernel.dim() >= first.image.dim() ? second.kernel.dim() - first.image.dim() : 0;
  d.z3 = c3_dim - second.image.dim();
  return d;
}

}  // namespace

CohomologyDims standard_cohomology_dims(const Algebra& a) {
  const std::size_t n = a.dim();
  return cohomology_dims(
      a, standard_basis(n * n * n), n * n * n * n, [&a](const Endo& f) { return delta1(a, f); },
      [&a](const MultilinearMap& phi) { return delta2(a, phi); });
}

CohomologyDims jj_cohomology_dims(const Algebra& a) {
  if (!check_identity(a, IdentityKind::Commutative).holds) {
    throw DomainError("the Jacobi-Jordan complex needs a commutative algebra");
  }
  const std::size_t n = a.dim();
  const std::size_t sym3 = symmetric_basis(3, n).size();
  return cohomology_dims(
      a, symmetric_basis(2, n), sym3, [&a](const Endo& f) { return jj_delta1(a, f); },
      [&a](const MultilinearMap& phi) { return jj_delta2(a, phi); });
}

ComplexCheck check_delta3_delta2(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n > kMaxComplexCheckDim) {
    throw InputError("the delta3 o delta2 check is limited to algebras of dimension <= " +
                     std::to_string(kMaxComplexCheckDim));
  }
  ComplexCheck check;
  const auto basis = standard_basis(n * n * n);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Degree4Cochain d = delta3(a, delta2(a, MultilinearMap::unflatten(2, n, basis[b])));
    ++check.cochains_tested;
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t flat = 0; flat < d[c].size(); ++flat) {
        if (is_zero(d[c].at(flat))) continue;
        check.holds = false;
        ++check.nonzero_values[c];
        if (check.defects.size() < kMaxReportedDefects) {
          check.defects.push_back({b, c + 1, d[c].indices(flat), d[c].at(flat)});
        }
      }
    }
  }
  return check;
}

}  // namespace antiassoc
