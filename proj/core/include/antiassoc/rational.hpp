#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antiassoc {

/// Exact rational number. mpq_class keeps values in lowest terms with a
/// positive denominator as long as every construction goes through
/// canonicalize(); the helpers below do.
using Rational = mpq_class;

/// Dense coordinate vector over Q.
using Vector = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading '-', q > 0). Throws InputError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

bool is_zero(std::span<const Rational> v);

/// target += scale * v
void add_scaled(std::span<Rational> target, const Rational& scale,
                std::span<const Rational> v);

/// Lexicographically first nonzero index, or v.size() if v is zero.
std::size_t first_nonzero(std::span<const Rational> v);

std::string format_vector(std::span<const Rational> v);

}  // namespace antiassoc
