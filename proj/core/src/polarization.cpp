#include "antiassoc/polarization.hpp"

#include <algorithm>

#include "antiassoc/errors.hpp"

namespace antiassoc {

Polarization polarize(const Algebra& a) {
  const std::size_t n = a.dim();
  Polarization p{MultilinearMap(2, n), MultilinearMap(2, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector sum = a.product(i, j);
      Vector diff = a.product(i, j);
      add_scaled(sum, 1, a.product(j, i));
      add_scaled(diff, -1, a.product(j, i));
      p.rho.at(i * n + j) = std::move(sum);
      p.psi.at(i * n + j) = std::move(diff);
    }
  }
  return p;
}

Algebra depolarize(const MultilinearMap& rho, const MultilinearMap& psi) {
  if (rho.arity() != 2 || psi.arity() != 2 || rho.dim() != psi.dim()) {
    throw InputError("depolarization needs two bilinear maps of the same dimension");
  }
  if (!rho.is_symmetric()) throw DomainError("rho must be symmetric");
  if (!psi.is_antisymmetric()) throw DomainError("psi must be antisymmetric");
  MultilinearMap mu = rho + psi;
  mu *= Rational(1, 2);
  return mu.to_algebra();
}

std::vector<NamedIdentityReport> check_polarization_identities(const Algebra& a) {
  if (!check_identity(a, IdentityKind::AntiAssociative).holds) {
    throw DomainError("polarization identities are stated for anti-associative algebras");
  }
  auto dot = [&a](const Vector& x, const Vector& y) {
    Vector out = a.multiply(x, y);
    add_scaled(out, 1, a.multiply(y, x));
    return out;
  };
  auto br = [&a](const Vector& x, const Vector& y) {
    Vector out = a.multiply(x, y);
    add_scaled(out, -1, a.multiply(y, x));
    return out;
  };
  auto sum = [](std::initializer_list<std::pair<int, Vector>> terms) {
    Vector out(terms.begin()->second.size());
    for (const auto& [c, v] : terms) add_scaled(out, c, v);
    return out;
  };

  struct Entry {
    const char* name;
    const char* formula;
    TrilinearDefect defect;
  };
  const std::vector<Entry> entries{
      {"equivalence", "-y.(z.x) + x.[y,z] + z.[x,y] + [x,y.z] - [z,x.y] + [x,[y,z]] - [z,[x,y]] = 0",
       [&](const Vector& x, const Vector& y, const Vector& z) {
         return sum({{-1, dot(y, dot(z, x))},
                     {1, dot(x, br(y, z))},
                     {1, dot(z, br(x, y))},
                     {1, br(x, dot(y, z))},
                     {-1, br(z, dot(x, y))},
                     {1, br(x, br(y, z))},
                     {-1, br(z, br(x, y))}});
       }},
      {"cyclic-bracket", "[x,y.z] + [y,z.x] + [z,x.y] = 0",
       [&](const Vector& x, const Vector& y, const Vector& z) {
         return sum({{1, br(x, dot(y, z))}, {1, br(y, dot(z, x))}, {1, br(z, dot(x, y))}});
       }},
      {"double-bracket", "[x,[y,z]] - 2[y,[z,x]] + [z,[x,y]] = x.(y.z) - z.(x.y)",
       [&](const Vector& x, const Vector& y, const Vector& z) {
         return sum({{1, br(x, br(y, z))},
                     {-2, br(y, br(z, x))},
                     {1, br(z, br(x, y))},
                     {-1, dot(x, dot(y, z))},
                     {1, dot(z, dot(x, y))}});
       }},
      {"mixed", "x.[y,z] + [y,z.x] + [x.y,z] = 0",
       [&](const Vector& x, const Vector& y, const Vector& z) {
         return sum({{1, dot(x, br(y, z))}, {1, br(y, dot(z, x))}, {1, br(dot(x, y), z)}});
       }},
  };

  std::vector<NamedIdentityReport> out;
  for (const auto& e : entries) {
    out.push_back({e.name, e.formula, check_on_basis_triples(a.dim(), e.defect, e.formula)});
  }
  return out;
}

Vector anti_leibniz_defect(const MultilinearMap& psi, const MultilinearMap& rho, const Vector& x,
                           const Vector& y, const Vector& z) {
  Vector out = rho(psi(x, y), z);
  add_scaled(out, 1, psi(x, rho(y, z)));
  add_scaled(out, 1, psi(rho(x, z), y));
  return out;
}

Vector anti_leibniz_product_form(const Algebra& mu0, const MultilinearMap& rho, const Vector& x,
                                 const Vector& y, const Vector& z) {
  Vector out = rho(mu0.multiply(x, y), z);
  add_scaled(out, 1, mu0.multiply(x, rho(y, z)));
  add_scaled(out, 1, mu0.multiply(rho(x, z), y));
  return out;
}

IdentityReport check_anti_poisson(const AntiPoissonTriple& t) {
  if (t.psi.arity() != 2 || t.rho.arity() != 2 || t.psi.dim() != t.space_dim ||
      t.rho.dim() != t.space_dim) {
    throw InputError("anti-Poisson triple needs two bilinear maps on the same space");
  }
  if (!t.psi.is_antisymmetric()) throw DomainError("psi must be antisymmetric");
  if (!t.rho.is_symmetric()) throw DomainError("rho must be symmetric");
  IdentityReport jj = check_identity(t.rho.to_algebra(), IdentityKind::JacobiJordan);
  if (!jj.holds) {
    jj.witness->clause = "rho: " + jj.witness->clause;
    return jj;
  }
  return check_on_basis_triples(
      t.space_dim,
      [&t](const Vector& x, const Vector& y, const Vector& z) { return anti_leibniz_defect(t.psi, t.rho, x, y, z); },
      "rho(psi(x,y),z) + psi(x,rho(y,z)) + psi(rho(x,z),y)");
}

JordanExtension jj_extension(const Algebra& a, const Endo& f) {
  const std::size_t n = a.dim();
  if (f.rows() != n || f.cols() != n) throw InputError("endomorphism size does not match the algebra");
  if (!check_identity(a, IdentityKind::JacobiJordan).holds) {
    throw DomainError("the one-dimensional extension needs a Jacobi-Jordan algebra");
  }
  StructureTable table(n + 1, std::vector<Vector>(n + 1, Vector(n + 1)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) table[i][j][k] = a.product(i, j)[k];
    }
    for (std::size_t k = 0; k < n; ++k) {
      table[i][n][k] = f(k, i);
      table[n][i][k] = f(k, i);
    }
  }
  auto names = a.basis_names();
  std::string extra = "X";
  while (std::find(names.begin(), names.end(), extra) != names.end()) extra += "'";
  names.push_back(extra);

  JordanExtension ext{Algebra(std::move(names), std::move(table)), false, {}};
  ext.anti_derivation = anti_derivation_space(a).contains(flatten(f));
  ext.jacobi_jordan = check_identity(ext.algebra, IdentityKind::JacobiJordan);
  return ext;
}

}  // namespace antiassoc
