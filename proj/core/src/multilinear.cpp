#include "antiassoc/multilinear.hpp"

#include <algorithm>
#include <numeric>

#include "antiassoc/algebra_io.hpp"
#include "antiassoc/errors.hpp"

namespace antiassoc {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dim)
    : arity_(arity), dim_(dim), values_(power(dim, arity), Vector(dim)) {}

MultilinearMap::MultilinearMap(std::size_t arity, std::size_t dim, std::vector<Vector> values)
    : arity_(arity), dim_(dim), values_(std::move(values)) {
  if (values_.size() != power(dim, arity)) throw InputError("multilinear map has wrong number of values");
  for (const auto& v : values_) {
    if (v.size() != dim) throw InputError("multilinear map value has wrong length");
  }
}

MultilinearMap MultilinearMap::from_algebra(const Algebra& a) {
  MultilinearMap m(2, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m.values_[i * a.dim() + j] = a.product(i, j);
  return m;
}

Algebra MultilinearMap::to_algebra() const {
  if (arity_ != 2) throw InputError("only bilinear maps define an algebra");
  StructureTable table(dim_, std::vector<Vector>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) table[i][j] = values_[i * dim_ + j];
  return Algebra(std::move(table));
}

std::size_t MultilinearMap::flat_index(std::span<const std::size_t> indices) const {
  if (indices.size() != arity_) throw InputError("wrong number of indices for multilinear map");
  std::size_t flat = 0;
  for (auto i : indices) {
    if (i >= dim_) throw InputError("basis index out of range");
    flat = flat * dim_ + i;
  }
  return flat;
}

std::vector<std::size_t> MultilinearMap::indices(std::size_t flat) const {
  std::vector<std::size_t> idx(arity_);
  for (std::size_t p = arity_; p-- > 0;) {
    idx[p] = flat % dim_;
    flat /= dim_;
  }
  return idx;
}

Vector MultilinearMap::apply(const std::vector<Vector>& args) const {
  if (args.size() != arity_) throw InputError("wrong number of arguments for multilinear map");
  std::vector<std::vector<std::size_t>> support(arity_);
  for (std::size_t p = 0; p < arity_; ++p) {
    if (args[p].size() != dim_) throw InputError("argument length does not match map dimension");
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(args[p][i]) != 0) support[p].push_back(i);
    }
    if (support[p].empty()) return Vector(dim_);
  }
  Vector out(dim_);
  std::vector<std::size_t> pick(arity_, 0);
  while (true) {
    Rational coef = 1;
    std::size_t flat = 0;
    for (std::size_t p = 0; p < arity_; ++p) {
      const std::size_t i = support[p][pick[p]];
      coef *= args[p][i];
      flat = flat * dim_ + i;
    }
    add_scaled(out, coef, values_[flat]);
    std::size_t p = arity_;
    while (p > 0 && ++pick[p - 1] == support[p - 1].size()) pick[--p] = 0;
    if (p == 0) break;
  }
  return out;
}

Vector MultilinearMap::operator()(std::span<const Rational> x, std::span<const Rational> y) const {
  return apply({Vector(x.begin(), x.end()), Vector(y.begin(), y.end())});
}

bool MultilinearMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return antiassoc::is_zero(v); });
}

namespace {

bool invariant_under_transpositions(const MultilinearMap& m, int sign) {
  const std::size_t n = m.arity();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[p], perm[p + 1]);
    MultilinearMap swapped = m.permuted(perm);
    if (sign < 0) swapped *= -1;
    if (!(swapped == m)) return false;
  }
  return true;
}

}  // namespace

bool MultilinearMap::is_symmetric() const { return invariant_under_transpositions(*this, 1); }
bool MultilinearMap::is_antisymmetric() const { return invariant_under_transpositions(*this, -1); }

MultilinearMap MultilinearMap::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != arity_) throw InputError("permutation length does not match arity");
  MultilinearMap out(arity_, dim_);
  std::vector<std::size_t> source(arity_);
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    const auto idx = indices(flat);
    for (std::size_t p = 0; p < arity_; ++p) source[p] = idx[perm[p]];
    out.values_[flat] = values_[flat_index(source)];
  }
  return out;
}

MultilinearMap& MultilinearMap::operator+=(const MultilinearMap& other) {
  if (arity_ != other.arity_ || dim_ != other.dim_) throw InputError("multilinear map shape mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) add_scaled(values_[i], 1, other.values_[i]);
  return *this;
}

MultilinearMap& MultilinearMap::operator-=(const MultilinearMap& other) {
  if (arity_ != other.arity_ || dim_ != other.dim_) throw InputError("multilinear map shape mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) add_scaled(values_[i], -1, other.values_[i]);
  return *this;
}

MultilinearMap& MultilinearMap::operator*=(const Rational& scale) {
  for (auto& v : values_)
    for (auto& x : v) x *= scale;
  return *this;
}

Vector MultilinearMap::flatten() const {
  Vector out;
  out.reserve(values_.size() * dim_);
  for (const auto& v : values_) out.insert(out.end(), v.begin(), v.end());
  return out;
}

MultilinearMap MultilinearMap::unflatten(std::size_t arity, std::size_t dim, std::span<const Rational> v) {
  const std::size_t count = power(dim, arity);
  if (v.size() != count * dim) throw InputError("flattened multilinear map has wrong length");
  std::vector<Vector> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i].assign(v.begin() + i * dim, v.begin() + (i + 1) * dim);
  return MultilinearMap(arity, dim, std::move(values));
}

nlohmann::json multilinear_to_json(const MultilinearMap& m) {
  auto rec = [&m](auto&& self, std::size_t depth, std::size_t prefix) -> nlohmann::json {
    if (depth == m.arity()) return vector_to_json(m.at(prefix));
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) arr.push_back(self(self, depth + 1, prefix * m.dim() + i));
    return arr;
  };
  return {{"arity", m.arity()}, {"dim", m.dim()}, {"coeffs", rec(rec, 0, 0)}};
}

MultilinearMap multilinear_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("dim") || !j.contains("coeffs") ||
      !j["arity"].is_number_unsigned() || !j["dim"].is_number_unsigned()) {
    throw InputError("multilinear map needs unsigned \"arity\", \"dim\" and nested \"coeffs\"");
  }
  const auto arity = j["arity"].get<std::size_t>();
  const auto dim = j["dim"].get<std::size_t>();
  if (arity == 0 || arity > 6) throw InputError("multilinear map arity must be between 1 and 6");
  std::vector<Vector> values;
  auto rec = [&](auto&& self, const nlohmann::json& node, std::size_t depth) -> void {
    if (depth == arity) {
      Vector v = vector_from_json(node);
      if (v.size() != dim) throw InputError("multilinear map value has wrong length");
      values.push_back(std::move(v));
      return;
    }
    if (!node.is_array() || node.size() != dim) throw InputError("multilinear map coeffs have wrong shape");
    for (const auto& child : node) self(self, child, depth + 1);
  };
  rec(rec, j["coeffs"], 0);
  return MultilinearMap(arity, dim, std::move(values));
}

MultilinearMap load_multilinear(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return multilinear_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": invalid JSON: " + e.what());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace antiassoc
