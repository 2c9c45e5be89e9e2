#include "antiassoc/power_series.hpp"

#include <sstream>

#include "antiassoc/errors.hpp"

namespace antiassoc {

Rational PowerSeries::coefficient(std::size_t k) const {
  if (k == 0 || k > coeffs.size()) return 0;
  return coeffs[k - 1];
}

namespace {

// Product of two truncated series (zero constant terms), indices by power.
std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t order) {
  std::vector<Rational> out(order + 1);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// f(g) with f, g given by power (index 0 = constant term), up to order.
std::vector<Rational> compose_dense(const PowerSeries& f, const std::vector<Rational>& g, std::size_t order) {
  std::vector<Rational> out(order + 1);
  std::vector<Rational> power(order + 1);
  power[0] = 1;
  for (std::size_t k = 1; k <= order && k <= f.order(); ++k) {
    power = multiply(power, g, order);
    const Rational& c = f.coeffs[k - 1];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i <= order; ++i) out[i] += c * power[i];
  }
  return out;
}

std::vector<Rational> dense(const PowerSeries& s, std::size_t order) {
  std::vector<Rational> out(order + 1);
  for (std::size_t k = 1; k <= order && k <= s.order(); ++k) out[k] = s.coeffs[k - 1];
  return out;
}

}  // namespace

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  const std::size_t order = std::min(f.order(), g.order());
  const auto d = compose_dense(f, dense(g, order), order);
  return {std::vector<Rational>(d.begin() + 1, d.end())};
}

PowerSeries series_inverse(const PowerSeries& g, std::size_t order) {
  if (order > g.order()) throw InputError("inversion order exceeds the truncation of the series");
  if (order == 0) return {};
  const Rational g1 = g.coeffs[0];
  if (sgn(g1) == 0) throw DomainError("series with zero linear coefficient has no compositional inverse");
  std::vector<Rational> h(order + 1);
  h[1] = 1 / g1;
  for (std::size_t k = 2; k <= order; ++k) {
    // with h_k = 0, g(h) = t + c t^k + ...; setting h_k = -c/g1 clears it
    const auto partial = compose_dense(g, h, k);
    h[k] = -partial[k] / g1;
  }
  return {std::vector<Rational>(h.begin() + 1, h.end())};
}

PowerSeries generating_series(const std::vector<std::size_t>& dims, std::size_t order) {
  PowerSeries s;
  mpz_class factorial = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    factorial *= n;
    const mpz_class dim = n <= dims.size() ? mpz_class(static_cast<unsigned long>(dims[n - 1])) : mpz_class(0);
    Rational c(dim, factorial);
    c.canonicalize();
    if (n % 2 == 1) c = -c;
    s.coeffs.push_back(c);
  }
  return s;
}

std::string format_series(const PowerSeries& s) {
  std::string out;
  for (std::size_t k = 1; k <= s.order(); ++k) {
    const Rational& c = s.coeffs[k - 1];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1) out += format_rational(magnitude) + " ";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

PowerSeries parse_series(const std::string& text) {
  PowerSeries s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw InputError("empty coefficient in series '" + text + "'");
    s.coeffs.push_back(parse_rational(item.substr(first, last - first + 1)));
  }
  if (s.coeffs.empty()) throw InputError("series needs at least one coefficient");
  return s;
}

}  // namespace antiassoc
