#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "antiassoc/rational.hpp"

namespace antiassoc {

/// Truncated power series without constant term: coeffs[i] is the
/// coefficient of t^(i+1), known up to t^order().
struct PowerSeries {
  std::vector<Rational> coeffs;

  std::size_t order() const { return coeffs.size(); }
  /// Coefficient of t^k (k >= 1); zero past the truncation.
  Rational coefficient(std::size_t k) const;
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;
};

/// f(g(t)) truncated at min(order(f), order(g)).
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// h with g(h(t)) = t up to t^order. Throws DomainError when the linear
/// coefficient of g is zero, InputError when order exceeds g's truncation.
PowerSeries series_inverse(const PowerSeries& g, std::size_t order);

/// sum_{n=1}^{order} (-1)^n dims[n-1] / n! t^n; missing dims count as zero.
PowerSeries generating_series(const std::vector<std::size_t>& dims, std::size_t order);

/// "-t + t^2 - 7/144 t^6"
std::string format_series(const PowerSeries& s);

/// Comma-separated rationals, first one the coefficient of t. InputError.
PowerSeries parse_series(const std::string& text);

}  // namespace antiassoc
