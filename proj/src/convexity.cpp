#include "dcw/convexity.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "dcw/christoffel.hpp"

namespace dcw {

namespace {

bool is_good_factor(const Word& factor, Direction direction) {
  return direction == Direction::upward ? is_primitive_lower_christoffel(factor)
                                        : is_primitive_upper_christoffel(factor);
}

LetterOrder order_for(Direction direction) {
  return direction == Direction::upward ? LetterOrder::zero_first : LetterOrder::one_first;
}

std::vector<Word> sorted_unique(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

// Every non-primitive Christoffel word of length n that uses both letters.
std::vector<Word> nonprimitive_christoffel_words(std::size_t n) {
  std::vector<Word> out;
  for (std::uint64_t a = 1; a < n; ++a) {
    const ParikhVector p{a, n - a};
    if (std::gcd(p.zeros, p.ones) == 1) continue;
    out.push_back(christoffel_lower(p));
    out.push_back(christoffel_upper(p));
  }
  return out;
}

}  // namespace

bool is_balanced(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + w[i];
  for (std::size_t len = 2; len < n; ++len) {
    std::size_t lo = prefix[len];
    std::size_t hi = lo;
    for (std::size_t start = 1; start + len <= n; ++start) {
      const std::size_t ones = prefix[start + len] - prefix[start];
      lo = std::min(lo, ones);
      hi = std::max(hi, ones);
      if (hi - lo > 1) return false;
    }
  }
  return true;
}

ConvexityReport is_digitally_convex(const Word& w, Direction direction) {
  ConvexityReport report;
  report.direction = direction;
  const auto f = lyndon_factorization(w, order_for(direction));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_good_factor(f.factors[i], direction)) {
      report.convex = false;
      report.witness = Witness{f.boundaries[i], f.end_of(i), f.factors[i]};
      break;
    }
  }
  return report;
}

bool is_upward_convex(const Word& w) {
  const auto f = lyndon_factorization(w, LetterOrder::zero_first);
  return std::all_of(f.factors.begin(), f.factors.end(), is_primitive_lower_christoffel);
}

bool is_downward_convex(const Word& w) {
  const auto f = lyndon_factorization(w, LetterOrder::one_first);
  return std::all_of(f.factors.begin(), f.factors.end(), is_primitive_upper_christoffel);
}

std::vector<Word> mfw_of_word(const Word& w, std::size_t max_len) {
  std::unordered_set<Word> factors;
  std::vector<Word> inner;  // candidates for v, |v| <= max_len - 2
  factors.insert(Word());
  inner.emplace_back();
  for (std::size_t start = 0; start < w.size(); ++start) {
    for (std::size_t len = 1; len <= max_len && start + len <= w.size(); ++len) {
      auto [it, fresh] = factors.insert(w.slice(start, len));
      if (fresh && len + 2 <= max_len) inner.push_back(*it);
    }
  }

  std::vector<Word> out;
  const Word letters[2] = {Word("0"), Word("1")};
  if (max_len >= 1) {
    for (const Word& letter : letters) {
      if (!factors.contains(letter)) out.push_back(letter);
    }
  }
  for (const Word& v : inner) {
    if (v.size() + 2 > max_len) continue;
    for (const Word& x : letters) {
      const Word xv = x + v;
      if (!factors.contains(xv)) continue;
      for (const Word& y : letters) {
        if (factors.contains(v + y) && !factors.contains(xv + y)) out.push_back(xv + y);
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Word> mfw_balanced(std::size_t n) {
  std::vector<Word> out;
  if (n < 2) return out;
  for (const Word& c : nonprimitive_christoffel_words(n)) {
    // yvx from xvy: exchange the first and last letters.
    out.push_back(c.suffix(1) + c.slice(1, n - 2) + c.prefix(1));
  }
  return sorted_unique(std::move(out));
}

std::vector<Word> mfw_dc(std::size_t n, MfwConstruction construction) {
  std::vector<Word> out;
  if (n < 2) return out;
  if (construction == MfwConstruction::complement) {
    for (const Word& c : nonprimitive_christoffel_words(n)) {
      if (c.front() == 1 && c.back() == 0) out.push_back(Word("0") + c.slice(1, n - 2) + Word("1"));
    }
    return sorted_unique(std::move(out));
  }
  // |u(uv)^k v| = (k + 1)·|uv|, so |uv| ranges over proper divisors m >= 2 of n.
  for (std::size_t m = 2; 2 * m <= n; ++m) {
    if (n % m != 0) continue;
    const std::size_t k = n / m - 1;
    for (std::uint64_t a = 1; a < m; ++a) {
      const ParikhVector p{a, m - a};
      if (std::gcd(p.zeros, p.ones) != 1) continue;
      const Word w = christoffel_lower(p);
      const auto [u, v] = standard_factorization(w);
      out.push_back(u + w.power(k) + v);
    }
  }
  return sorted_unique(std::move(out));
}

}  // namespace dcw
