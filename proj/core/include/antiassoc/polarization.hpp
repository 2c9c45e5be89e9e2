#pragma once

#include <string>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/identities.hpp"
#include "antiassoc/multilinear.hpp"
#include "antiassoc/operators.hpp"

namespace antiassoc {

struct Polarization {
  MultilinearMap rho;  // xy + yx
  MultilinearMap psi;  // xy - yx
};

Polarization polarize(const Algebra& a);

/// mu = (rho + psi) / 2. Throws DomainError unless rho is symmetric and psi
/// antisymmetric, InputError on shape mismatch.
Algebra depolarize(const MultilinearMap& rho, const MultilinearMap& psi);

struct NamedIdentityReport {
  std::string name;
  std::string formula;  // x.y = xy + yx, [x,y] = xy - yx
  IdentityReport report;
};

/// The four identities relating x.y and [x,y] on an anti-associative algebra:
///   "equivalence":   -y.(z.x) + x.[y,z] + z.[x,y] + [x,y.z] - [z,x.y] + [x,[y,z]] - [z,[x,y]] = 0
///   "cyclic-bracket": [x,y.z] + [y,z.x] + [z,x.y] = 0
///   "double-bracket": [x,[y,z]] - 2[y,[z,x]] + [z,[x,y]] = x.(y.z) - z.(x.y)
///   "mixed":          x.[y,z] + [y,z.x] + [x.y,z] = 0
/// Each is evaluated as printed; a failing one carries its witness.
/// Throws DomainError unless a is anti-associative.
std::vector<NamedIdentityReport> check_polarization_identities(const Algebra& a);

struct AntiPoissonTriple {
  std::size_t space_dim = 0;
  MultilinearMap psi;  // antisymmetric
  MultilinearMap rho;  // symmetric, Jacobi-Jordan when valid
};

/// rho(psi(x,y),z) + psi(x,rho(y,z)) + psi(rho(x,z),y)
Vector anti_leibniz_defect(const MultilinearMap& psi, const MultilinearMap& rho, const Vector& x,
                           const Vector& y, const Vector& z);

/// Holds iff rho is Jacobi-Jordan and the anti-Leibniz defect vanishes on all
/// basis triples. Throws DomainError on symmetry violations.
IdentityReport check_anti_poisson(const AntiPoissonTriple& t);

/// rho(xy,z) + x rho(y,z) + rho(x,z) y, with xy the product of mu0.
Vector anti_leibniz_product_form(const Algebra& mu0, const MultilinearMap& rho, const Vector& x,
                                 const Vector& y, const Vector& z);

struct JordanExtension {
  Algebra algebra;               // A + K X, X the last basis vector
  bool anti_derivation = false;  // whether f was an anti-derivation of A
  IdentityReport jacobi_jordan;  // re-check of the extended product
};

/// Extends a Jacobi-Jordan algebra by one vector X with x X = X x = f(x) and
/// X X = 0, then re-checks the Jacobi-Jordan identity. The extension is
/// Jacobi-Jordan exactly when f is an anti-derivation with f^2 = 0.
/// Throws DomainError unless a is Jacobi-Jordan.
JordanExtension jj_extension(const Algebra& a, const Endo& f);

}  // namespace antiassoc
