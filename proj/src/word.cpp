#include "dcw/word.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcw/errors.hpp"

namespace dcw {

namespace {

// KMP failure function: border[i] is the length of the longest proper border
// of s[0..i].
std::vector<std::size_t> border_table(std::string_view s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return border;
}

std::vector<std::size_t> border_table(const Word& w) { return border_table(std::string_view(w.str())); }

// is_pal[i] tells whether the length-i prefix of w is a palindrome. Those
// prefixes are exactly the borders of w#w^R.
std::vector<bool> palindromic_prefixes(const Word& w) {
  const std::string joined = w.str() + '#' + reverse(w).str();
  const auto border = border_table(joined);
  std::vector<bool> is_pal(w.size() + 1, false);
  is_pal[0] = true;
  for (std::size_t b = border.back(); b > 0; b = border[b - 1]) is_pal[b] = true;
  return is_pal;
}

int rank(Symbol s, LetterOrder order) { return order == LetterOrder::zero_first ? s : 1 - s; }

}  // namespace

Word::Word(std::string_view text) : text_(text) {
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] != '0' && text_[i] != '1') throw ParseError(i + 1, text_[i]);
  }
}

Word Word::letter_power(Symbol letter, std::size_t n) {
  Word w;
  w.text_.assign(n, static_cast<char>('0' + letter));
  return w;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  Word w;
  w.text_ = text_.substr(pos, len);
  return w;
}

std::size_t Word::count(Symbol letter) const noexcept {
  return static_cast<std::size_t>(std::count(text_.begin(), text_.end(), static_cast<char>('0' + letter)));
}

Word Word::power(std::size_t k) const {
  Word w;
  w.text_.reserve(text_.size() * k);
  for (std::size_t i = 0; i < k; ++i) w.text_ += text_;
  return w;
}

Word Word::swapped(std::size_t i) const {
  Word w = *this;
  std::swap(w.text_[i], w.text_[i + 1]);
  return w;
}

Slope::Slope(std::uint64_t numerator, std::uint64_t denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (numerator == 0 && denominator == 0) throw ContractError("slope (0,0) is not defined");
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  using wide = boost::multiprecision::uint128_t;
  const wide lhs = wide(a.numerator_) * b.denominator_;
  const wide rhs = wide(b.numerator_) * a.denominator_;
  if (lhs < rhs) return std::strong_ordering::less;
  return lhs == rhs ? std::strong_ordering::equal : std::strong_ordering::greater;
}

Word parse_word(std::string_view text) { return Word(text); }

ParikhVector parikh(const Word& w) {
  const std::uint64_t ones = w.count(1);
  return {w.size() - ones, ones};
}

Slope slope(const Word& w) {
  if (w.empty()) throw UndefinedSlopeError();
  const ParikhVector p = parikh(w);
  return Slope(p.ones, p.zeros);
}

Word reverse(const Word& w) {
  Word r;
  for (std::size_t i = w.size(); i-- > 0;) r.push_back(w[i]);
  return r;
}

Word complement(const Word& w) {
  Word c;
  for (std::size_t i = 0; i < w.size(); ++i) c.push_back(1 - w[i]);
  return c;
}

std::weak_ordering lex_compare(const Word& u, const Word& v, LetterOrder order) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) return rank(u[i], order) <=> rank(v[i], order);
  }
  return u.size() <=> v.size();
}

std::vector<std::size_t> periods_of(const Word& w) {
  std::vector<std::size_t> periods;
  if (w.empty()) return periods;
  const auto border = border_table(w);
  // Walking the border chain from the longest border gives the periods in
  // increasing order.
  for (std::size_t b = border.back(); b > 0; b = border[b - 1]) periods.push_back(w.size() - b);
  periods.push_back(w.size());
  return periods;
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) return false;
  for (std::size_t i = 0; i + p < w.size(); ++i) {
    if (w[i] != w[i + p]) return false;
  }
  return true;
}

std::size_t smallest_period(const Word& w) {
  if (w.empty()) return 0;
  return w.size() - border_table(w).back();
}

bool is_primitive(const Word& w) {
  const std::size_t p = smallest_period(w);
  return !(p < w.size() && w.size() % p == 0);
}

bool is_unbordered(const Word& w) { return smallest_period(w) == w.size(); }

bool is_palindrome(const Word& w) {
  for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j) {
    if (w[i] != w[j - 1]) return false;
  }
  return true;
}

bool is_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  return (u.str() + u.str()).find(v.str()) != std::string::npos;
}

std::optional<std::pair<Word, Word>> two_palindrome_factorization(const Word& w) {
  if (w.empty()) return std::nullopt;
  const auto pal_prefix = palindromic_prefixes(w);
  // Palindromic suffixes of w are the reversals of palindromic prefixes of w^R.
  const auto pal_suffix = palindromic_prefixes(reverse(w));
  const std::size_t n = w.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (pal_prefix[i] && pal_suffix[n - i]) return std::make_pair(w.prefix(i), w.slice(i));
  }
  return std::nullopt;
}

std::string to_string(const ParikhVector& p) {
  return "(" + std::to_string(p.zeros) + "," + std::to_string(p.ones) + ")";
}

std::string to_string(const Slope& s) {
  if (s.is_infinite()) return "inf";
  return std::to_string(s.numerator()) + "/" + std::to_string(s.denominator());
}

}  // namespace dcw
