#include "antiassoc/homology.hpp"

#include <algorithm>
#include <functional>

#include "antiassoc/errors.hpp"

namespace antiassoc {

std::string convention_name(SignConvention c) {
  return c == SignConvention::Symmetric ? "symmetric" : "twisted";
}

SignConvention parse_convention(const std::string& s) {
  if (s == "symmetric") return SignConvention::Symmetric;
  if (s == "twisted" || s == "paper") return SignConvention::Twisted;
  throw InputError("unknown sign convention '" + s + "' (expected symmetric or twisted)");
}

namespace {

// Sign of the permutation that sorts w, or 0 when w has a repeated letter.
int sorting_sign(Word& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    for (std::size_t j = i; j > 0 && w[j - 1] > w[j]; --j) {
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == w[i - 1]) return 0;
  }
  return sign;
}

bool twisted_active(std::size_t letters) { return letters >= 2; }

}  // namespace

std::pair<std::size_t, int> ChainSpace::locate(Word w) const {
  int sign = 1;
  const std::size_t k = w.size();
  if (convention == SignConvention::Twisted && twisted_active(k)) {
    if (k % 2 == 1) return {0, 0};
    sign = sorting_sign(w);
    if (sign == 0) return {0, 0};
  } else {
    std::sort(w.begin(), w.end());
  }
  auto it = index.find(w);
  if (it == index.end()) return {0, 0};
  return {it->second, sign};
}

ChainSpace chain_space(const Algebra& a, std::size_t q, SignConvention conv) {
  if (q > kMaxChainDegree) {
    throw InputError("chain spaces are available for degree <= " + std::to_string(kMaxChainDegree));
  }
  ChainSpace c;
  c.degree = q;
  c.convention = conv;
  const std::size_t k = q + 1;
  const std::size_t n = a.dim();
  const bool twisted = conv == SignConvention::Twisted && twisted_active(k);
  if (twisted && k % 2 == 1) return c;

  Word w;
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (w.size() == k) {
      c.index.emplace(w, c.words.size());
      c.words.push_back(w);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      w.push_back(i);
      extend(twisted ? i + 1 : i);
      w.pop_back();
    }
  };
  extend(0);
  return c;
}

std::string format_word(const Algebra& a, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += "^";
    out += a.basis_names().at(w[i]);
  }
  return out;
}

namespace {

// Terms of b_q as (first factor position, second factor position, rest).
// Each term is (a_i a_j) ^ rest.
struct BoundaryTerm {
  std::size_t left;
  std::size_t right;
  std::vector<std::size_t> rest;
};

const std::vector<BoundaryTerm>& boundary_terms(std::size_t q) {
  static const std::vector<std::vector<BoundaryTerm>> terms{
      {},
      {{0, 1, {}}, {1, 0, {}}},
      {{0, 1, {2}}, {1, 2, {0}}, {2, 0, {1}}},
      {{0, 1, {2, 3}}, {1, 2, {3, 0}}, {2, 3, {0, 1}}, {3, 0, {1, 2}}},
  };
  return terms.at(q);
}

void check_boundary_degree(std::size_t q) {
  if (q < 1 || q > kMaxChainDegree) {
    throw InputError("boundary maps are available for degrees 1.." + std::to_string(kMaxChainDegree));
  }
}

Vector boundary_impl(const Algebra& a, std::size_t q, const ChainSpace& target, const Word& w) {
  Vector out(q == 1 ? a.dim() : target.dim());
  for (const auto& t : boundary_terms(q)) {
    const Vector& prod = a.product(w[t.left], w[t.right]);
    if (q == 1) {
      add_scaled(out, 1, prod);
      continue;
    }
    for (std::size_t s = 0; s < prod.size(); ++s) {
      if (sgn(prod[s]) == 0) continue;
      Word image{s};
      for (std::size_t r : t.rest) image.push_back(w[r]);
      auto [idx, sign] = target.locate(std::move(image));
      if (sign != 0) out[idx] += sign * prod[s];
    }
  }
  return out;
}

}  // namespace

Vector boundary_of_word(const Algebra& a, std::size_t q, SignConvention conv, const Word& w) {
  check_boundary_degree(q);
  if (w.size() != q + 1) throw InputError("word length does not match the degree");
  for (std::size_t i : w) {
    if (i >= a.dim()) throw InputError("word letter out of range");
  }
  return boundary_impl(a, q, chain_space(a, q - 1, conv), w);
}

Matrix boundary(const Algebra& a, std::size_t q, SignConvention conv) {
  check_boundary_degree(q);
  const ChainSpace source = chain_space(a, q, conv);
  const ChainSpace target = chain_space(a, q - 1, conv);
  const std::size_t rows = q == 1 ? a.dim() : target.dim();
  std::vector<Vector> cols;
  cols.reserve(source.dim());
  for (const Word& w : source.words) cols.push_back(boundary_impl(a, q, target, w));
  return Matrix::from_columns(cols, rows);
}

HomologyReport homology(const Algebra& a, std::size_t q, SignConvention conv) {
  if (q + 1 > kMaxChainDegree) {
    throw InputError("homology is available for degrees 0.." + std::to_string(kMaxChainDegree - 1));
  }
  HomologyReport r;
  r.degree = q;
  const ChainSpace c = chain_space(a, q, conv);
  const std::size_t chain_dim = q == 0 ? a.dim() : c.dim();
  r.chain_dim = chain_dim;
  if (q == 0) {
    r.kernel = Subspace::full(chain_dim);
  } else {
    r.kernel = kernel_basis(boundary(a, q, conv));
  }
  r.image = image(boundary(a, q + 1, conv));
  r.dim_ker = r.kernel.dim();
  r.dim_im = r.image.dim();
  r.image_in_kernel = r.kernel.contains(r.image);
  if (r.image_in_kernel) r.homology_dim = r.dim_ker - r.dim_im;
  return r;
}

}  // namespace antiassoc
