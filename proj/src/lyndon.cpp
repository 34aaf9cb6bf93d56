#include "dcw/lyndon.hpp"

#include <cassert>

#include "dcw/errors.hpp"

namespace dcw {

namespace {

int rank(Symbol s, LetterOrder order) { return order == LetterOrder::zero_first ? s : 1 - s; }

#ifndef NDEBUG
// Longest proper suffix that is itself Lyndon; must coincide with the least
// proper suffix.
bool agrees_with_longest_lyndon_suffix(const Word& w, std::size_t split) {
  for (std::size_t start = 1; start < w.size(); ++start) {
    if (is_lyndon(w.slice(start))) return start == split;
  }
  return false;
}
#endif

}  // namespace

LyndonFactorization lyndon_factorization(const Word& w, LetterOrder order) {
  LyndonFactorization result;
  result.order = order;
  const std::size_t n = w.size();
  std::size_t start = 0;
  while (start < n) {
    // w[start..j) is a prefix of (w[start..start+period))^*; k trails j by
    // one period.
    std::size_t k = start;
    std::size_t j = start + 1;
    while (j < n) {
      const int lhs = rank(w[k], order);
      const int rhs = rank(w[j], order);
      if (lhs > rhs) break;
      k = lhs < rhs ? start : k + 1;
      ++j;
    }
    const std::size_t period = j - k;
    while (start <= k) {
      result.factors.push_back(w.slice(start, period));
      result.boundaries.push_back(start);
      start += period;
    }
  }
  return result;
}

bool is_lyndon(const Word& w, LetterOrder order) {
  if (w.empty()) return false;
  const auto f = lyndon_factorization(w, order);
  return f.size() == 1;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w)) {
    throw ContractError("standard factorization needs a Lyndon word of length >= 2, got \"" + w.str() + "\"");
  }
  // The least suffix of w[1..] is the last factor of its Lyndon factorization.
  const Word tail = w.slice(1);
  const auto f = lyndon_factorization(tail);
  const std::size_t split = 1 + f.boundaries.back();
  assert(agrees_with_longest_lyndon_suffix(w, split));
  return {w.prefix(split), w.slice(split)};
}

}  // namespace dcw
