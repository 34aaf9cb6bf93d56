#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcw {

using Symbol = std::uint8_t;

/// Which letter is smaller when comparing words lexicographically.
enum class LetterOrder { zero_first, one_first };

/// Finite binary word. Symbols are kept as the characters '0'/'1', so the
/// textual form is available without conversion and short words live in the
/// small-string buffer. Default ordering is lexicographic with 0 < 1 and a
/// proper prefix before its extensions.
class Word {
 public:
  static constexpr std::size_t npos = std::string::npos;

  Word() = default;

  /// Parses a '0'/'1' string; throws ParseError on any other character.
  explicit Word(std::string_view text);

  /// x^n for a single letter x.
  static Word letter_power(Symbol letter, std::size_t n);

  std::size_t size() const noexcept { return text_.size(); }
  bool empty() const noexcept { return text_.empty(); }

  Symbol operator[](std::size_t i) const noexcept { return static_cast<Symbol>(text_[i] - '0'); }
  Symbol front() const noexcept { return (*this)[0]; }
  Symbol back() const noexcept { return (*this)[size() - 1]; }

  /// Factor starting at `pos` of at most `len` symbols.
  Word slice(std::size_t pos, std::size_t len = npos) const;
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix(std::size_t len) const { return slice(size() - len, len); }

  std::size_t count(Symbol letter) const noexcept;

  void push_back(Symbol s) { text_.push_back(static_cast<char>('0' + s)); }
  Word& operator+=(const Word& other) {
    text_ += other.text_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  /// This word concatenated `k` times.
  Word power(std::size_t k) const;

  /// Copy with the symbols at `i` and `i + 1` exchanged.
  Word swapped(std::size_t i) const;

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.text_ <=> b.text_;
  }

 private:
  std::string text_;
};

/// Number of 0s and 1s.
struct ParikhVector {
  std::uint64_t zeros = 0;
  std::uint64_t ones = 0;

  std::uint64_t length() const noexcept { return zeros + ones; }
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

/// Exact rational slope ones/zeros; zeros == 0 encodes infinity.
class Slope {
 public:
  /// Throws ContractError for (0, 0).
  Slope(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const noexcept { return numerator_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  bool is_infinite() const noexcept { return denominator_ == 0; }

  /// Compared by cross-multiplication; 2/4 and 1/2 are equal.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);
  friend bool operator==(const Slope& a, const Slope& b) { return (a <=> b) == 0; }

 private:
  std::uint64_t numerator_;
  std::uint64_t denominator_;
};

Word parse_word(std::string_view text);
ParikhVector parikh(const Word& w);
/// Throws UndefinedSlopeError for the empty word.
Slope slope(const Word& w);

Word reverse(const Word& w);
Word complement(const Word& w);

std::weak_ordering lex_compare(const Word& u, const Word& v, LetterOrder order);

/// All periods 1 <= p <= |w|, ascending. |w| is always included.
std::vector<std::size_t> periods_of(const Word& w);
/// True when w[i] == w[i + p] wherever both are defined; vacuous for p >= |w|.
bool has_period(const Word& w, std::size_t p);
std::size_t smallest_period(const Word& w);

bool is_primitive(const Word& w);
bool is_unbordered(const Word& w);
bool is_palindrome(const Word& w);
bool is_conjugate(const Word& u, const Word& v);

/// Split w = p1 * p2 into two palindromes with p1 nonempty and as short as
/// possible. For primitive words this split is the unique one.
std::optional<std::pair<Word, Word>> two_palindrome_factorization(const Word& w);

std::string to_string(const ParikhVector& p);
std::string to_string(const Slope& s);

}  // namespace dcw

template <>
struct std::hash<dcw::Word> {
  std::size_t operator()(const dcw::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
