#include "antiassoc/rational.hpp"

#include <cctype>

#include "antiassoc/errors.hpp"

namespace antiassoc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw InputError("malformed rational: \"" + std::string(text) + "\"");
  }
  Rational value;
  value.get_num() = mpz_class(std::string(num), 10);
  if (slash == std::string_view::npos) {
    value.get_den() = 1;
  } else {
    value.get_den() = mpz_class(std::string(den), 10);
    if (value.get_den() == 0) {
      throw InputError("zero denominator in rational: \"" + std::string(text) + "\"");
    }
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& value) {
  // mpq get_str already prints integers without "/1".
  return value.get_str();
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

void add_scaled(std::span<Rational> target, const Rational& scale,
                std::span<const Rational> v) {
  if (target.size() != v.size()) throw InputError("vector length mismatch");
  if (sgn(scale) == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) target[i] += scale * v[i];
  }
}

std::size_t first_nonzero(std::span<const Rational> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

std::string format_vector(std::span<const Rational> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + "]";
}

}  // namespace antiassoc
