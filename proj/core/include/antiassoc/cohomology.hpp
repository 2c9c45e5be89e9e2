#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/multilinear.hpp"
#include "antiassoc/operators.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// delta1(f)(x,y) = x f(y) - f(xy) + f(x) y
MultilinearMap delta1(const Algebra& a, const Endo& f);
/// delta2(phi)(x,y,z) = x phi(y,z) + phi(xy,z) + phi(x,yz) + phi(x,y) z
MultilinearMap delta2(const Algebra& a, const MultilinearMap& phi);

/// Four 5-linear components.
using Degree4Cochain = std::array<MultilinearMap, 4>;

/// The degree-3 differential of the minimal-model complex, each component
/// transcribed term by term (g trilinear, arguments x,y,z,t,u):
///   1: x g(y,z,tu) - g(x,y,z(tu)) + (xy) g(z,t,u) - g(xy,zt,u)
///      + g(xy,z,t) u - g((xy)z,t,u) + g(x,y,z)(tu) - g(x,yz,tu)
///   2: g((xy)z,t,u) - g(xy,z,t) u + g(x,y,zt) u - g(x,y(zt),u)
///      + x g(y,zt,u) - g(x,y,(zt)u) + (xy) g(z,t,u) - g(xy,z,tu)
///   3: g(x,yz,tu) - x g(yz,t,u) + g(x,(yz)t,u) - x(g(y,z,t) u)
///      + g(x,y,zt) u - g(xy,z,t) u + (g(x,y,z) t) u - g(x(yz),t,u)
///   4: g(xy,zt,u) - g(x,y,(zt)u) + x g(y,zt,u) - g(x,y(zt),u)
///      + (x g(y,z,t)) u - g(x,yz,t) u + (g(x,y,z) t) u - g(xy,z,t) u
Degree4Cochain delta3(const Algebra& a, const MultilinearMap& g);

/// Jacobi-Jordan complex.
/// jj_delta1(f)(x,y) = f(xy) - x f(y) - f(x) y  (= -delta1)
MultilinearMap jj_delta1(const Algebra& a, const Endo& f);
/// jj_delta2(phi)(x1,x2,x3) = sum over cyclic (i,j,k) of x_i phi(x_j,x_k) + phi(x_i, x_j x_k).
/// Throws DomainError unless a is commutative and phi symmetric.
MultilinearMap jj_delta2(const Algebra& a, const MultilinearMap& phi);
/// Each delta3 component summed over the 24 orders of its first four
/// arguments. Throws DomainError unless psi is symmetric.
Degree4Cochain jj_delta3(const Algebra& a, const MultilinearMap& psi);

struct CohomologyDims {
  std::size_t h1 = 0;  // dim ker d1
  std::size_t h2 = 0;  // dim ker d2 - dim im d1
  std::size_t z3 = 0;  // dim C3 - dim im d2
  bool image_in_kernel = false;  // im d1 inside ker d2; h2 meaningless otherwise
  Subspace cocycles1;  // flattened endomorphisms (n^2)
  Subspace cocycles2;  // flattened bilinear maps (n^3)
  Subspace coboundaries2;
};

constexpr std::size_t kMaxCohomologyDim = 8;

/// Standard complex C1 -> C2 -> C3 -> 0. Throws InputError past kMaxCohomologyDim.
CohomologyDims standard_cohomology_dims(const Algebra& a);
/// Jacobi-Jordan complex Hom(A,A) -> Sym^2 -> Sym^3 with jj_delta1, jj_delta2.
/// Throws DomainError unless a is commutative.
CohomologyDims jj_cohomology_dims(const Algebra& a);

struct ComplexDefect {
  std::size_t cochain = 0;    // flat index of the basis bilinear map phi
  std::size_t component = 0;  // 1-based
  std::vector<std::size_t> indices;
  Vector value;
};

struct ComplexCheck {
  bool holds = true;
  std::size_t cochains_tested = 0;
  std::array<std::size_t, 4> nonzero_values{};  // per component, over all tested cochains
  std::vector<ComplexDefect> defects;           // first few nonzero values
};

constexpr std::size_t kMaxComplexCheckDim = 4;
constexpr std::size_t kMaxReportedDefects = 16;

/// Evaluates delta3(delta2(phi)) for every basis bilinear map phi and
/// collects nonzero components. Throws InputError past kMaxComplexCheckDim.
ComplexCheck check_delta3_delta2(const Algebra& a);

}  // namespace antiassoc
