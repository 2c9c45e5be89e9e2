#include "antiassoc/operators.hpp"

#include <array>

#include "antiassoc/errors.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/sparse.hpp"

namespace antiassoc {

namespace {

void require_square_pair(const Endo& f, const Endo& g) {
  if (f.rows() != f.cols() || g.rows() != g.cols() || f.rows() != g.rows()) {
    throw InputError("endomorphisms must be square of the same size");
  }
}

// Solution space of the conditions
//   c_prod f(e_i e_j) + c_left e_i f(e_j) + c_right f(e_i) e_j = 0
// for every basis pair, one system per triple of coefficients.
Subspace solve_conditions(const Algebra& a, const std::vector<std::array<int, 3>>& systems) {
  const std::size_t n = a.dim();
  SparseEchelon echelon(n * n);
  auto unknown = [n](std::size_t r, std::size_t k) { return r * n + k; };
  for (const auto& [c_prod, c_left, c_right] : systems) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n; ++r) {
          SparseRow row;
          if (c_prod != 0) {
            const Vector& p = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
              if (sgn(p[k]) != 0) row[unknown(r, k)] += c_prod * p[k];
            }
          }
          for (std::size_t s = 0; s < n; ++s) {
            if (c_left != 0) {
              const Rational& c = a.product(i, s)[r];
              if (sgn(c) != 0) row[unknown(s, j)] += c_left * c;
            }
            if (c_right != 0) {
              const Rational& c = a.product(s, j)[r];
              if (sgn(c) != 0) row[unknown(s, i)] += c_right * c;
            }
          }
          echelon.insert(std::move(row));
        }
      }
    }
  }
  return echelon.kernel();
}

std::vector<Vector> generators(const Algebra& a) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector e = unit_vector(a.dim(), i);
    gens.push_back(flatten(left_mult(a, e)));
    gens.push_back(flatten(right_mult(a, e)));
  }
  return gens;
}

template <typename Op>
Subspace products(const std::vector<Vector>& left, const std::vector<Vector>& right, std::size_t n,
                  Op op) {
  std::vector<Vector> out;
  for (const auto& x : left) {
    for (const auto& y : right) {
      Vector v = flatten(op(unflatten(x, n), unflatten(y, n)));
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  }
  return Subspace::span(n * n, out);
}

}  // namespace

Endo left_mult(const Algebra& a, std::span<const Rational> x) {
  const std::size_t n = a.dim();
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(a.multiply(x, unit_vector(n, j)));
  return Matrix::from_columns(columns, n);
}

Endo right_mult(const Algebra& a, std::span<const Rational> x) {
  const std::size_t n = a.dim();
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < n; ++j) columns.push_back(a.multiply(unit_vector(n, j), x));
  return Matrix::from_columns(columns, n);
}

Endo inner_anti_derivation(const Algebra& a, std::span<const Rational> x) {
  return left_mult(a, x) + right_mult(a, x);
}

Endo symmetric_product(const Endo& f, const Endo& g) {
  require_square_pair(f, g);
  return f * g + g * f;
}

Endo commutator(const Endo& f, const Endo& g) {
  require_square_pair(f, g);
  return f * g - g * f;
}

Vector flatten(const Endo& f) { return f.entries(); }

Endo unflatten(std::span<const Rational> v, std::size_t n) {
  if (v.size() != n * n) throw InputError("flattened endomorphism has wrong length");
  Endo f(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) f(r, c) = v[r * n + c];
  return f;
}

std::vector<Endo> endo_basis(const Subspace& s, std::size_t n) {
  std::vector<Endo> out;
  for (const auto& v : s.basis()) out.push_back(unflatten(v, n));
  return out;
}

Subspace derivation_space(const Algebra& a) { return solve_conditions(a, {{1, -1, -1}}); }

Subspace anti_derivation_space(const Algebra& a) { return solve_conditions(a, {{1, 1, 1}}); }

Subspace derivation_anti_derivation_intersection(const Algebra& a) {
  return solve_conditions(a, {{1, 0, 0}, {0, 1, 1}});
}

Subspace inner_anti_derivations(const Algebra& a) {
  const auto report = check_identity(a, IdentityKind::AntiAssociative);
  if (!report.holds) {
    throw DomainError("inner anti-derivations require an anti-associative algebra");
  }
  std::vector<Vector> maps;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    maps.push_back(flatten(inner_anti_derivation(a, unit_vector(a.dim(), i))));
  }
  return Subspace::span(a.dim() * a.dim(), maps);
}

OperatorAlgebraReport multiplication_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto gens = generators(a);
  auto compose = [](const Matrix& f, const Matrix& g) { return f * g; };

  Subspace closure = Subspace::span(n * n, gens);
  for (std::size_t step = 0; step < n * n + 1; ++step) {
    Subspace next = subspace_sum(closure, products(gens, closure.basis(), n, compose));
    if (next == closure) break;
    closure = std::move(next);
  }

  OperatorAlgebraReport report;
  report.dim = closure.dim();
  report.span = closure;
  // M^k = G M^(k-1): words of length at least k in the generators.
  Subspace power = closure;
  std::size_t k = 1;
  while (!power.is_zero()) {
    Subspace next = products(gens, power.basis(), n, compose);
    ++k;
    if (k == 2) report.derived_dim = next.dim();
    if (next == power) {
      power = std::move(next);
      break;
    }
    power = std::move(next);
  }
  if (power.is_zero()) report.nilindex = k;
  return report;
}

OperatorAlgebraReport lie_multiplication_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto gens = generators(a);
  auto bracket = [](const Matrix& f, const Matrix& g) { return commutator(f, g); };

  Subspace closure = Subspace::span(n * n, gens);
  for (std::size_t step = 0; step < n * n + 1; ++step) {
    Subspace next = subspace_sum(closure, products(gens, closure.basis(), n, bracket));
    if (next == closure) break;
    closure = std::move(next);
  }

  OperatorAlgebraReport report;
  report.dim = closure.dim();
  report.span = closure;
  // Lower central series C^1 = L, C^(k+1) = [L, C^k].
  std::vector<Subspace> series{closure};
  while (!series.back().is_zero()) {
    Subspace next = products(closure.basis(), series.back().basis(), n, bracket);
    const bool stable = next == series.back();
    series.push_back(std::move(next));
    if (stable) break;
  }
  if (series.back().is_zero()) report.nilindex = series.size();
  report.derived_dim = series.size() > 1 ? series[1].dim() : 0;
  if (series.size() >= 3) {
    report.two_step_nilpotent = series[2].is_zero();
  } else {
    report.two_step_nilpotent = series.back().is_zero();
  }
  return report;
}

}  // namespace antiassoc
