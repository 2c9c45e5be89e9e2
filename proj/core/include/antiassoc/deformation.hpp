#pragma once

#include <cstddef>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/multilinear.hpp"
#include "antiassoc/operators.hpp"
#include "antiassoc/polarization.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// Residuals of mu_t = mu0 + t phi_1 + t^2 phi_2 + ... up to the given order:
///   R_k(a,b,c) = sum_{i+j=k} phi_i(phi_j(a,b),c) + phi_i(a,phi_j(b,c))
/// with phi_0 = mu0 and phi_i = 0 past the end of phis. mu_t is
/// anti-associative mod t^(order+1) iff R_1..R_order all vanish.
/// Throws DomainError unless mu0 is anti-associative, InputError when a phi
/// is not bilinear on the same space.
std::vector<MultilinearMap> deformation_residuals(const Algebra& mu0, const std::vector<MultilinearMap>& phis,
                                                  std::size_t order);

/// phi_f(a,b) = f(ab) - f(a)b - a f(b)
MultilinearMap coboundary_cochain(const Algebra& a, const Endo& f);

/// Bilinear maps phi with R_1 = 0, flattened in MultilinearMap order
/// (ambient dimension n^3). With symmetric = true only symmetric phi.
Subspace first_order_deformations(const Algebra& mu0, bool symmetric);

/// sum over all six argument orders of phi(x,phi(y,z)) + phi(phi(x,y),z).
/// Vanishes iff phi is Jacobi-Jordan admissible.
MultilinearMap symmetrized_second_order_defect(const MultilinearMap& phi);

/// (psi = mu0, rho = phi1(x,y) + phi1(y,x)). Throws DomainError unless mu0
/// is anti-commutative and anti-associative and (mu0, phi1) satisfies R_1 = 0.
AntiPoissonTriple classical_limit(const Algebra& mu0, const MultilinearMap& phi1);

}  // namespace antiassoc
