#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dcw/word.hpp"

namespace dcw {

/// Chen-Fox-Lyndon factorization: factors are Lyndon words under `order`,
/// non-increasing, and concatenate back to the source word.
struct LyndonFactorization {
  std::vector<Word> factors;
  std::vector<std::size_t> boundaries;  // start index of each factor
  LetterOrder order = LetterOrder::zero_first;

  std::size_t size() const noexcept { return factors.size(); }
  /// One past the last symbol of factor i.
  std::size_t end_of(std::size_t i) const { return boundaries[i] + factors[i].size(); }
};

bool is_lyndon(const Word& w, LetterOrder order = LetterOrder::zero_first);

/// Duval's algorithm, linear time. The empty word has no factors.
LyndonFactorization lyndon_factorization(const Word& w, LetterOrder order = LetterOrder::zero_first);

/// Standard factorization (u, v) of a Lyndon word (order 0 < 1), v being the
/// lexicographically least proper suffix. Throws ContractError unless w is
/// Lyndon with |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

}  // namespace dcw
