#include "antiassoc/identities.hpp"

#include <array>

#include "antiassoc/errors.hpp"

namespace antiassoc {

namespace {

struct KindInfo {
  IdentityKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {IdentityKind::AntiAssociative, "anti-associative"},
    {IdentityKind::Associative, "associative"},
    {IdentityKind::Commutative, "commutative"},
    {IdentityKind::AntiCommutative, "anti-commutative"},
    {IdentityKind::JacobiJordan, "jacobi-jordan"},
    {IdentityKind::WeaklyAssociative, "weakly-associative"},
    {IdentityKind::WeaklyAntiAssociative, "weakly-anti-associative"},
    {IdentityKind::JJAdmissible, "jj-admissible"},
    {IdentityKind::Lie, "lie"},
}};

using V = std::span<const Rational>;

// xy - yx or xy + yx
Vector binary_clause(const Algebra& a, V x, V y, int sign) {
  Vector out = a.multiply(x, y);
  add_scaled(out, sign, a.multiply(y, x));
  return out;
}

// x(yz) + y(zx) + z(xy)
Vector jacobi_sum(const Algebra& a, V x, V y, V z) {
  Vector out = a.multiply(x, a.multiply(y, z));
  add_scaled(out, 1, a.multiply(y, a.multiply(z, x)));
  add_scaled(out, 1, a.multiply(z, a.multiply(x, y)));
  return out;
}

Vector ternary_defect(const Algebra& a, IdentityKind kind, V x, V y, V z) {
  switch (kind) {
    case IdentityKind::AntiAssociative:
      return anti_associator(a, x, y, z);
    case IdentityKind::Associative:
      return associator(a, x, y, z);
    case IdentityKind::JacobiJordan:
    case IdentityKind::Lie:
      return jacobi_sum(a, x, y, z);
    case IdentityKind::WeaklyAssociative: {
      // x(yz) + y(zx) + z(yx)
      Vector out = a.multiply(x, a.multiply(y, z));
      add_scaled(out, 1, a.multiply(y, a.multiply(z, x)));
      add_scaled(out, 1, a.multiply(z, a.multiply(y, x)));
      return out;
    }
    case IdentityKind::WeaklyAntiAssociative: {
      Vector out = anti_associator(a, x, y, z);
      add_scaled(out, 1, anti_associator(a, y, x, z));
      add_scaled(out, 1, anti_associator(a, y, z, x));
      return out;
    }
    case IdentityKind::JJAdmissible: {
      Vector out = anti_associator(a, x, y, z);
      add_scaled(out, 1, anti_associator(a, x, z, y));
      add_scaled(out, 1, anti_associator(a, y, x, z));
      add_scaled(out, 1, anti_associator(a, y, z, x));
      add_scaled(out, 1, anti_associator(a, z, x, y));
      add_scaled(out, 1, anti_associator(a, z, y, x));
      return out;
    }
    case IdentityKind::Commutative:
    case IdentityKind::AntiCommutative:
      break;
  }
  throw Error("identity has no ternary clause");
}

// Binary clause attached to a kind: -1 for commutativity, +1 for
// anticommutativity, 0 when there is none.
int binary_sign(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::Commutative:
    case IdentityKind::JacobiJordan:
      return -1;
    case IdentityKind::AntiCommutative:
    case IdentityKind::Lie:
      return 1;
    default:
      return 0;
  }
}

bool has_ternary(IdentityKind kind) {
  return kind != IdentityKind::Commutative && kind != IdentityKind::AntiCommutative;
}

}  // namespace

std::string_view identity_name(IdentityKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  throw Error("unknown identity kind");
}

IdentityKind parse_identity_kind(std::string_view name) {
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  throw InputError("unknown identity \"" + std::string(name) + "\"");
}

Vector identity_defect(const Algebra& a, IdentityKind kind, std::span<const Rational> x,
                       std::span<const Rational> y, std::span<const Rational> z) {
  if (has_ternary(kind)) return ternary_defect(a, kind, x, y, z);
  return binary_clause(a, x, y, binary_sign(kind));
}

IdentityReport check_identity(const Algebra& a, IdentityKind kind) {
  const std::size_t n = a.dim();
  std::vector<Vector> basis;
  basis.reserve(n);
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));

  IdentityReport report;
  if (const int sign = binary_sign(kind); sign != 0) {
    const char* clause = sign < 0 ? "xy - yx" : "xy + yx";
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector d = binary_clause(a, basis[i], basis[j], sign);
        if (!is_zero(d)) {
          report.holds = false;
          report.witness = IdentityWitness{{i, j}, std::move(d), clause};
          return report;
        }
      }
    }
  }
  if (!has_ternary(kind)) return report;

  std::string clause;
  switch (kind) {
    case IdentityKind::AntiAssociative: clause = "x(yz) + (xy)z"; break;
    case IdentityKind::Associative: clause = "(xy)z - x(yz)"; break;
    case IdentityKind::JacobiJordan:
    case IdentityKind::Lie: clause = "x(yz) + y(zx) + z(xy)"; break;
    case IdentityKind::WeaklyAssociative: clause = "x(yz) + y(zx) + z(yx)"; break;
    case IdentityKind::WeaklyAntiAssociative:
      clause = "A(x,y,z) + A(y,x,z) + A(y,z,x), A(x,y,z) = x(yz) + (xy)z";
      break;
    case IdentityKind::JJAdmissible:
      clause = "sum over permutations of x(yz) + (xy)z";
      break;
    default: break;
  }
  return check_on_basis_triples(
      n, [&](const Vector& x, const Vector& y, const Vector& z) { return ternary_defect(a, kind, x, y, z); },
      clause);
}

IdentityReport check_on_basis_triples(std::size_t n, const TrilinearDefect& defect,
                                      const std::string& clause) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  IdentityReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector d = defect(basis[i], basis[j], basis[k]);
        if (!is_zero(d)) {
          report.holds = false;
          report.witness = IdentityWitness{{i, j, k}, std::move(d), clause};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace antiassoc
