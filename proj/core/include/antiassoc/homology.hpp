#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/matrix.hpp"
#include "antiassoc/subspace.hpp"

namespace antiassoc {

/// How permuting the letters of a word a_1 ^ ... ^ a_k acts.
///   Symmetric: trivially (words are multisets).
///   Twisted:   by (-1)^k sign(sigma), for k >= 2. For odd k the identity
///              permutation already forces every word to zero.
enum class SignConvention { Symmetric, Twisted };

std::string convention_name(SignConvention c);
/// "symmetric" or "twisted" (a second spelling of twisted is also accepted). InputError otherwise.
SignConvention parse_convention(const std::string& s);

using Word = std::vector<std::size_t>;

/// C_q: words of q+1 letters modulo the convention. Basis words are sorted.
struct ChainSpace {
  std::size_t degree = 0;
  SignConvention convention = SignConvention::Symmetric;
  std::vector<Word> words;
  std::map<Word, std::size_t> index;

  std::size_t dim() const { return words.size(); }
  /// Basis index and sign of an arbitrary word; sign 0 when the word is zero.
  std::pair<std::size_t, int> locate(Word w) const;
};

constexpr std::size_t kMaxChainDegree = 3;

/// Throws InputError for q > kMaxChainDegree.
ChainSpace chain_space(const Algebra& a, std::size_t q, SignConvention conv);

std::string format_word(const Algebra& a, const Word& w);

/// b_q applied to one (not necessarily sorted) word, in the basis of C_{q-1}:
///   b_1(a1^a2)       = a1a2 + a2a1
///   b_2(a1^a2^a3)    = a1a2^a3 + a2a3^a1 + a3a1^a2
///   b_3(a1^a2^a3^a4) = a1a2^a3^a4 + a2a3^a4^a1 + a3a4^a1^a2 + a4a1^a2^a3
Vector boundary_of_word(const Algebra& a, std::size_t q, SignConvention conv, const Word& w);

/// Matrix of b_q : C_q -> C_{q-1} on sorted basis words (column per word).
/// Throws InputError unless 1 <= q <= kMaxChainDegree.
Matrix boundary(const Algebra& a, std::size_t q, SignConvention conv);

struct HomologyReport {
  std::size_t degree = 0;
  std::size_t chain_dim = 0;
  std::size_t dim_ker = 0;  // ker b_q (all of C_0 for q = 0)
  std::size_t dim_im = 0;   // im b_{q+1}
  bool image_in_kernel = false;
  /// dim ker - dim im; nullopt when the containment fails.
  std::optional<std::size_t> homology_dim;
  Subspace kernel;
  Subspace image;
};

/// Throws InputError unless q + 1 <= kMaxChainDegree.
HomologyReport homology(const Algebra& a, std::size_t q, SignConvention conv);

}  // namespace antiassoc
