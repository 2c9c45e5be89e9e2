#include "antiassoc/deformation.hpp"

#include <array>

#include "antiassoc/errors.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/sparse.hpp"

namespace antiassoc {

namespace {

void require_bilinear(const MultilinearMap& m, std::size_t n, const char* what) {
  if (m.arity() != 2 || m.dim() != n) {
    throw InputError(std::string(what) + " must be bilinear on a space of dimension " + std::to_string(n));
  }
}

constexpr std::array<std::array<std::size_t, 3>, 6> kPermutations3{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

std::vector<MultilinearMap> deformation_residuals(const Algebra& mu0, const std::vector<MultilinearMap>& phis,
                                                  std::size_t order) {
  const std::size_t n = mu0.dim();
  if (!check_identity(mu0, IdentityKind::AntiAssociative).holds) {
    throw DomainError("the base multiplication is not anti-associative");
  }
  for (const auto& phi : phis) require_bilinear(phi, n, "every phi");

  std::vector<MultilinearMap> all{MultilinearMap::from_algebra(mu0)};
  all.insert(all.end(), phis.begin(), phis.end());

  std::vector<MultilinearMap> residuals;
  for (std::size_t k = 1; k <= order; ++k) {
    residuals.push_back(tabulate(3, n, [&](const std::vector<std::size_t>& idx) {
      const Vector a = unit_vector(n, idx[0]);
      const Vector b = unit_vector(n, idx[1]);
      const Vector c = unit_vector(n, idx[2]);
      Vector out(n);
      for (std::size_t i = 0; i <= k; ++i) {
        const std::size_t j = k - i;
        if (i >= all.size() || j >= all.size()) continue;
        add_scaled(out, 1, all[i](all[j](a, b), c));
        add_scaled(out, 1, all[i](a, all[j](b, c)));
      }
      return out;
    }));
  }
  return residuals;
}

MultilinearMap coboundary_cochain(const Algebra& a, const Endo& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n || f.cols() != n) throw InputError("endomorphism size does not match the algebra");
  return tabulate(2, n, [&](const std::vector<std::size_t>& idx) {
    const Vector x = unit_vector(n, idx[0]);
    const Vector y = unit_vector(n, idx[1]);
    Vector out = f.apply(a.product(idx[0], idx[1]));
    add_scaled(out, -1, a.multiply(f.apply(x), y));
    add_scaled(out, -1, a.multiply(x, f.apply(y)));
    return out;
  });
}

Subspace first_order_deformations(const Algebra& mu0, bool symmetric) {
  const std::size_t n = mu0.dim();
  auto var = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  SparseEchelon system(n * n * n);
  for (std::size_t a = 0; a < n && !system.full(); ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const Vector& ab = mu0.product(a, b);
        const Vector& bc = mu0.product(b, c);
        for (std::size_t r = 0; r < n; ++r) {
          SparseRow row;
          auto add = [&row](std::size_t col, const Rational& coef) {
            if (sgn(coef) == 0) return;
            Rational& slot = row[col];
            slot += coef;
            if (sgn(slot) == 0) row.erase(col);
          };
          for (std::size_t s = 0; s < n; ++s) {
            add(var(a, s, r), bc[s]);                      // phi(a, bc)
            add(var(b, c, s), mu0.product(a, s)[r]);       // a phi(b, c)
            add(var(s, c, r), ab[s]);                      // phi(ab, c)
            add(var(a, b, s), mu0.product(s, c)[r]);       // phi(a, b) c
          }
          if (!row.empty()) system.insert(std::move(row));
        }
      }
    }
  }
  if (symmetric) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) system.insert({{var(i, j, k), 1}, {var(j, i, k), -1}});
      }
    }
  }
  return system.kernel();
}

MultilinearMap symmetrized_second_order_defect(const MultilinearMap& phi) {
  if (phi.arity() != 2) throw InputError("phi must be bilinear");
  const std::size_t n = phi.dim();
  return tabulate(3, n, [&](const std::vector<std::size_t>& idx) {
    Vector out(n);
    for (const auto& p : kPermutations3) {
      const Vector x = unit_vector(n, idx[p[0]]);
      const Vector y = unit_vector(n, idx[p[1]]);
      const Vector z = unit_vector(n, idx[p[2]]);
      add_scaled(out, 1, phi(x, phi(y, z)));
      add_scaled(out, 1, phi(phi(x, y), z));
    }
    return out;
  });
}

AntiPoissonTriple classical_limit(const Algebra& mu0, const MultilinearMap& phi1) {
  const std::size_t n = mu0.dim();
  require_bilinear(phi1, n, "phi1");
  if (!check_identity(mu0, IdentityKind::AntiCommutative).holds) {
    throw DomainError("the classical limit needs an anti-commutative base multiplication");
  }
  const auto residuals = deformation_residuals(mu0, {phi1}, 1);
  if (!residuals.front().is_zero()) throw DomainError("phi1 does not satisfy the first-order condition");
  const std::array<std::size_t, 2> swap{1, 0};
  return {n, MultilinearMap::from_algebra(mu0), phi1 + phi1.permuted(swap)};
}

}  // namespace antiassoc
