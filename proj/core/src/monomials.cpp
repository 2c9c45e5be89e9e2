#include "antiassoc/monomials.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "antiassoc/errors.hpp"

namespace antiassoc {

std::string_view symmetry_name(GeneratorSymmetry s) {
  switch (s) {
    case GeneratorSymmetry::None: return "none";
    case GeneratorSymmetry::Commutative: return "commutative";
    case GeneratorSymmetry::AntiCommutative: return "anticommutative";
  }
  return "none";
}

GeneratorSymmetry parse_symmetry(std::string_view name) {
  if (name == "none") return GeneratorSymmetry::None;
  if (name == "commutative") return GeneratorSymmetry::Commutative;
  if (name == "anticommutative" || name == "anti-commutative") {
    return GeneratorSymmetry::AntiCommutative;
  }
  throw InputError("unknown generator symmetry \"" + std::string(name) + "\"");
}

namespace tree {

std::string leaf(unsigned label) {
  if (label >= 26) throw InputError("tree labels are limited to 26");
  return std::string(1, static_cast<char>('a' + label));
}

std::string node(std::string_view left, std::string_view right) {
  std::string out;
  out.reserve(1 + left.size() + right.size());
  out += '*';
  out += left;
  out += right;
  return out;
}

bool is_leaf(std::string_view code) { return code.size() == 1 && code[0] != '*'; }

std::pair<std::string_view, std::string_view> children(std::string_view code) {
  std::size_t need = 1;
  std::size_t i = 1;
  while (need > 0) {
    if (i >= code.size()) throw Error("malformed tree code");
    need = code[i] == '*' ? need + 1 : need - 1;
    ++i;
  }
  return {code.substr(1, i - 1), code.substr(i)};
}

std::size_t leaf_count(std::string_view code) {
  return static_cast<std::size_t>(std::count_if(code.begin(), code.end(), [](char c) { return c != '*'; }));
}

unsigned min_label(std::string_view code) {
  unsigned best = 26;
  for (char c : code) {
    if (c != '*') best = std::min(best, static_cast<unsigned>(c - 'a'));
  }
  return best;
}

std::vector<unsigned> label_counts(std::string_view code, std::size_t labels) {
  std::vector<unsigned> counts(labels, 0);
  for (char c : code) {
    if (c == '*') continue;
    const auto l = static_cast<std::size_t>(c - 'a');
    if (l >= labels) throw InputError("tree label out of range");
    ++counts[l];
  }
  return counts;
}

std::pair<std::string, int> canonical(std::string_view code, GeneratorSymmetry symmetry) {
  if (is_leaf(code)) return {std::string(code), 1};
  auto [l, r] = children(code);
  auto [lc, ls] = canonical(l, symmetry);
  auto [rc, rs] = canonical(r, symmetry);
  int sign = ls * rs;
  if (sign == 0) return {node(lc, rc), 0};
  if (symmetry == GeneratorSymmetry::None) return {node(lc, rc), sign};
  const auto lkey = std::make_pair(min_label(lc), std::string_view(lc));
  const auto rkey = std::make_pair(min_label(rc), std::string_view(rc));
  if (lkey == rkey) {
    if (symmetry == GeneratorSymmetry::AntiCommutative) sign = 0;
    return {node(lc, rc), sign};
  }
  if (rkey < lkey) {
    if (symmetry == GeneratorSymmetry::AntiCommutative) sign = -sign;
    return {node(rc, lc), sign};
  }
  return {node(lc, rc), sign};
}

std::string substitute(std::string_view code, const std::vector<std::string>& substitutions) {
  std::string out;
  for (char c : code) {
    if (c == '*') {
      out += '*';
    } else {
      const auto l = static_cast<std::size_t>(c - 'a');
      if (l >= substitutions.size()) throw Error("substitution missing for a tree label");
      out += substitutions[l];
    }
  }
  return out;
}

std::string format(std::string_view code, char letter) {
  if (is_leaf(code)) return letter + std::to_string(code[0] - 'a' + 1);
  auto [l, r] = children(code);
  auto part = [letter](std::string_view c) {
    return is_leaf(c) ? format(c, letter) : "(" + format(c, letter) + ")";
  };
  return part(l) + part(r);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_ += c;
    }
  }

  std::string run() {
    std::string out = product();
    if (pos_ != text_.size()) fail();
    return out;
  }

 private:
  [[noreturn]] void fail() const { throw InputError("cannot parse tree monomial \"" + text_ + "\""); }

  bool at_atom() const { return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == '('); }

  std::string product() {
    std::string a = atom();
    if (!at_atom()) return a;
    std::string b = atom();
    if (at_atom()) fail();  // three factors without parentheses are ambiguous
    return node(a, b);
  }

  std::string atom() {
    if (pos_ >= text_.size()) fail();
    if (text_[pos_] == '(') {
      ++pos_;
      std::string inner = product();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail();
      ++pos_;
      return inner;
    }
    if (text_[pos_] != 'x') fail();
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail();
    const int label = std::stoi(text_.substr(start, pos_ - start));
    if (label < 1 || label > 26) fail();
    return leaf(static_cast<unsigned>(label - 1));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string parse(std::string_view text) { return Parser(text).run(); }

}  // namespace tree

TreePolynomial canonical(const TreePolynomial& p, GeneratorSymmetry symmetry) {
  TreePolynomial out;
  for (const auto& [code, coef] : p) {
    auto [c, s] = tree::canonical(code, symmetry);
    if (s == 0 || sgn(coef) == 0) continue;
    out[c] += s * coef;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::string format(const TreePolynomial& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [code, coef] : p) {
    const bool negative = sgn(coef) < 0;
    const Rational magnitude = abs(coef);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += format_rational(magnitude) + " ";
    out += tree::format(code);
    first = false;
  }
  return out;
}

TreePolynomial parse_polynomial(std::string_view text) {
  TreePolynomial out;
  const std::string all(text);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < all.size() && std::isspace(static_cast<unsigned char>(all[pos]))) ++pos;
  };
  bool first = true;
  skip();
  if (pos == all.size()) throw InputError("empty polynomial");
  while (pos < all.size()) {
    int sign = 1;
    if (all[pos] == '+' || all[pos] == '-') {
      sign = all[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw InputError("expected '+' or '-' in '" + all + "'");
    }
    Rational coef = 1;
    if (pos < all.size() && std::isdigit(static_cast<unsigned char>(all[pos]))) {
      const std::size_t start = pos;
      while (pos < all.size() && (std::isdigit(static_cast<unsigned char>(all[pos])) || all[pos] == '/')) ++pos;
      coef = parse_rational(all.substr(start, pos - start));
      skip();
      if (pos < all.size() && all[pos] == '*') {
        ++pos;
        skip();
      }
    }
    const std::size_t start = pos;
    while (pos < all.size() && all[pos] != '+' && all[pos] != '-') ++pos;
    std::string word = all.substr(start, pos - start);
    while (!word.empty() && std::isspace(static_cast<unsigned char>(word.back()))) word.pop_back();
    out[tree::parse(word)] += sign * coef;
    first = false;
    skip();
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

std::vector<Multidegree> multidegrees(std::size_t p, std::size_t d) {
  std::vector<Multidegree> out;
  if (p == 0) return out;
  Multidegree current(p, 0);
  auto rec = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
    if (slot + 1 == p) {
      current[slot] = static_cast<std::uint8_t>(remaining);
      out.push_back(current);
      return;
    }
    for (std::size_t k = remaining + 1; k-- > 0;) {
      current[slot] = static_cast<std::uint8_t>(k);
      self(self, slot + 1, remaining - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Multidegree, Multidegree>> splittings(const Multidegree& alpha) {
  std::vector<std::pair<Multidegree, Multidegree>> out;
  Multidegree beta(alpha.size(), 0);
  auto rec = [&](auto&& self, std::size_t slot) -> void {
    if (slot == alpha.size()) {
      const bool zero = std::all_of(beta.begin(), beta.end(), [](auto v) { return v == 0; });
      if (zero || beta == alpha) return;
      Multidegree gamma(alpha.size());
      for (std::size_t i = 0; i < alpha.size(); ++i) gamma[i] = alpha[i] - beta[i];
      out.emplace_back(beta, std::move(gamma));
      return;
    }
    for (std::uint8_t k = 0; k <= alpha[slot]; ++k) {
      beta[slot] = k;
      self(self, slot + 1);
    }
    beta[slot] = 0;
  };
  rec(rec, 0);
  return out;
}

namespace {

std::size_t total(const Multidegree& alpha) {
  std::size_t t = 0;
  for (auto v : alpha) t += v;
  return t;
}

// Ordered k-tuples of nonzero multidegrees adding up to alpha.
void compositions(const Multidegree& alpha, std::size_t k, std::vector<Multidegree>& prefix,
                  std::vector<std::vector<Multidegree>>& out) {
  if (k == 1) {
    if (total(alpha) == 0) return;
    prefix.push_back(alpha);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (auto& [beta, gamma] : splittings(alpha)) {
    prefix.push_back(beta);
    compositions(gamma, k - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

MonomialEngine::MonomialEngine(GeneratorSymmetry symmetry, std::vector<TreePolynomial> relations)
    : symmetry_(symmetry) {
  for (auto& r : relations) {
    std::size_t arity = 0;
    for (const auto& [code, coef] : r) {
      const std::size_t n = tree::leaf_count(code);
      if (arity == 0) arity = n;
      if (n != arity) throw InputError("relation terms have different arities");
      const auto counts = tree::label_counts(code, n);
      if (std::any_of(counts.begin(), counts.end(), [](unsigned c) { return c != 1; })) {
        throw InputError("relation term " + tree::format(code) + " is not multilinear");
      }
    }
    auto canon = canonical(r, symmetry_);
    if (canon.empty()) continue;
    relations_.push_back(std::move(canon));
    relation_arity_.push_back(arity);
  }
}

MonomialEngine::Component& MonomialEngine::component(const Multidegree& alpha) {
  if (auto it = components_.find(alpha); it != components_.end()) return it->second;
  std::set<std::string> codes;
  const std::size_t t = total(alpha);
  if (t == 1) {
    const auto label = static_cast<unsigned>(std::find(alpha.begin(), alpha.end(), 1) - alpha.begin());
    codes.insert(tree::leaf(label));
  } else if (t > 1) {
    for (const auto& [beta, gamma] : splittings(alpha)) {
      // copies: recursive calls may insert into components_
      const std::vector<std::string> left = component(beta).monomials;
      const std::vector<std::string>& right = component(gamma).monomials;
      for (const auto& l : left) {
        for (const auto& r : right) {
          auto [c, s] = tree::canonical(tree::node(l, r), symmetry_);
          if (s != 0) codes.insert(std::move(c));
        }
      }
    }
  }
  Component c;
  c.monomials.assign(codes.begin(), codes.end());
  c.ideal = SparseEchelon(c.monomials.size());
  for (std::size_t i = 0; i < c.monomials.size(); ++i) c.index.emplace(c.monomials[i], i);
  return components_.emplace(alpha, std::move(c)).first->second;
}

const std::vector<std::string>& MonomialEngine::monomials(const Multidegree& alpha) {
  return component(alpha).monomials;
}

SparseRow MonomialEngine::to_row(const Component& c,
                                                      const TreePolynomial& p) const {
  SparseRow row;
  for (const auto& [code, coef] : canonical(p, symmetry_)) {
    auto it = c.index.find(code);
    if (it == c.index.end()) throw Error("monomial outside its component: " + tree::format(code));
    row.emplace(it->second, coef);
  }
  return row;
}

MonomialEngine::Component& MonomialEngine::ideal(const Multidegree& alpha) {
  Component& c = component(alpha);
  if (c.ideal_done) return c;
  auto saturated = [&] { return c.ideal.full(); };

  if (!saturated()) {
    for (const auto& [beta, gamma] : splittings(alpha)) {
      Component& lower = ideal(beta);
      if (lower.ideal.rank() == 0) continue;
      const std::vector<std::string> lower_monos = lower.monomials;
      const std::vector<std::string> factors = component(gamma).monomials;
      for (const auto& [pivot, row] : lower.ideal.rows()) {
        for (const auto& m : factors) {
          TreePolynomial right;
          TreePolynomial left;
          for (const auto& [idx, val] : row) {
            right[tree::node(lower_monos[idx], m)] += val;
            if (symmetry_ == GeneratorSymmetry::None) left[tree::node(m, lower_monos[idx])] += val;
          }
          c.ideal.insert(to_row(c, right));
          if (symmetry_ == GeneratorSymmetry::None) c.ideal.insert(to_row(c, left));
          if (saturated()) break;
        }
        if (saturated()) break;
      }
      if (saturated()) break;
    }
  }

  for (std::size_t r = 0; r < relations_.size() && !saturated(); ++r) {
    const std::size_t k = relation_arity_[r];
    if (total(alpha) < k) continue;
    std::vector<std::vector<Multidegree>> parts;
    std::vector<Multidegree> prefix;
    compositions(alpha, k, prefix, parts);
    for (const auto& degrees : parts) {
      std::vector<const std::vector<std::string>*> choices;
      for (const auto& d : degrees) choices.push_back(&component(d).monomials);
      if (std::any_of(choices.begin(), choices.end(), [](auto* v) { return v->empty(); })) continue;
      std::vector<std::size_t> pick(k, 0);
      std::vector<std::string> subs(k);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) subs[i] = (*choices[i])[pick[i]];
        TreePolynomial instance;
        for (const auto& [code, coef] : relations_[r]) instance[tree::substitute(code, subs)] += coef;
        c.ideal.insert(to_row(c, instance));
        if (saturated()) break;
        std::size_t i = 0;
        while (i < k && ++pick[i] == choices[i]->size()) pick[i++] = 0;
        if (i == k) break;
      }
      if (saturated()) break;
    }
  }
  c.ideal_done = true;
  return c;
}

std::size_t MonomialEngine::ideal_dim(const Multidegree& alpha) { return ideal(alpha).ideal.rank(); }

std::size_t MonomialEngine::quotient_dim(const Multidegree& alpha) {
  const Component& c = ideal(alpha);
  return c.monomials.size() - c.ideal.rank();
}

std::vector<std::string> MonomialEngine::quotient_basis(const Multidegree& alpha) {
  const Component& c = ideal(alpha);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < c.monomials.size(); ++i) {
    if (!c.ideal.is_pivot(i)) out.push_back(c.monomials[i]);
  }
  return out;
}

}  // namespace antiassoc
