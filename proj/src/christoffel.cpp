#include "dcw/christoffel.hpp"

#include <cassert>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcw/errors.hpp"
#include "dcw/lyndon.hpp"

namespace dcw {

namespace {

// Greedy walk below the segment (0,0)-(a,b): from (x,y) step up iff the
// point (x, y+1) is not above the segment, i.e. (y+1)·a <= x·b.
Word greedy_lower_path(std::uint64_t a, std::uint64_t b) {
  using wide = boost::multiprecision::uint128_t;
  Word w;
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  while (x < a || y < b) {
    if (y < b && wide(y + 1) * a <= wide(x) * b) {
      w.push_back(1);
      ++y;
    } else {
      w.push_back(0);
      ++x;
    }
  }
  return w;
}

void require_coprime_positive(ParikhVector p, const char* what) {
  if (p.zeros == 0 || p.ones == 0 || std::gcd(p.zeros, p.ones) != 1) {
    throw ContractError(std::string(what) + " needs coprime positive components, got " + to_string(p));
  }
}

// Modular inverse of value modulo m (m >= 2, gcd(value, m) = 1), in [1, m-1].
std::uint64_t inverse_mod(std::uint64_t value, std::uint64_t m) {
  using boost::multiprecision::int128_t;
  int128_t old_r = static_cast<int128_t>(value % m);
  int128_t r = m;
  int128_t old_s = 1;
  int128_t s = 0;
  while (r != 0) {
    const int128_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  int128_t inv = old_s % static_cast<int128_t>(m);
  if (inv <= 0) inv += m;
  return inv.convert_to<std::uint64_t>();
}

bool is_letter_power(const Word& w) { return w.count(0) == w.size() || w.count(1) == w.size(); }

}  // namespace

LatticePoint endpoint(const Word& prefix) {
  const ParikhVector p = parikh(prefix);
  return {p.zeros, p.ones};
}

Word christoffel_lower(ParikhVector p) {
  if (p.zeros == 0 && p.ones == 0) throw ContractError("Christoffel word of (0,0) is not defined");
  const std::uint64_t d = std::gcd(p.zeros, p.ones);
  return greedy_lower_path(p.zeros / d, p.ones / d).power(d);
}

Word christoffel_upper(ParikhVector p) { return reverse(christoffel_lower(p)); }

bool is_primitive_lower_christoffel(const Word& w) {
  if (w.empty()) return false;
  const ParikhVector p = parikh(w);
  return std::gcd(p.zeros, p.ones) == 1 && w == christoffel_lower(p);
}

bool is_primitive_upper_christoffel(const Word& w) {
  if (w.empty()) return false;
  const ParikhVector p = parikh(w);
  return std::gcd(p.zeros, p.ones) == 1 && w == christoffel_upper(p);
}

ChristoffelClass classify_christoffel(const Word& w) {
  if (w.empty()) return {};
  if (w.size() == 1) return {ChristoffelKind::both, w, 1};
  if (is_letter_power(w)) return {ChristoffelKind::both, w.prefix(1), w.size()};
  if (is_primitive_lower_christoffel(w)) return {ChristoffelKind::primitive_lower, w, 1};
  if (is_primitive_upper_christoffel(w)) return {ChristoffelKind::primitive_upper, w, 1};

  const std::size_t period = smallest_period(w);
  if (period < w.size() && w.size() % period == 0) {
    Word root = w.prefix(period);
    if (is_primitive_lower_christoffel(root) || is_primitive_upper_christoffel(root)) {
      return {ChristoffelKind::power_of_primitive, std::move(root), w.size() / period};
    }
  }
  return {};
}

Word central_word(ParikhVector p) {
  require_coprime_positive(p, "central word");
  const Word w = christoffel_lower(p);
  return w.slice(1, w.size() - 2);
}

bool is_central(const Word& w) {
  const std::size_t n = w.size();
  bool central = false;
  // Periods larger than |w| hold vacuously, so p = n + 1 is also a candidate.
  auto candidates = periods_of(w);
  candidates.push_back(n + 1);
  for (std::size_t p : candidates) {
    if (p > n + 1) continue;
    const std::size_t q = n + 2 - p;
    if (has_period(w, q) && std::gcd(p, q) == 1) {
      central = true;
      break;
    }
  }
  assert(central == is_primitive_lower_christoffel(Word("0") + w + Word("1")));
  return central;
}

CentralDecomposition central_decomposition(const Word& central) {
  if (!is_central(central)) throw ContractError("\"" + central.str() + "\" is not a central word");
  CentralDecomposition d;
  d.central = central;
  if (is_letter_power(central)) {
    d.degenerate = true;
    return d;
  }
  // 0C1 = 0Q1 · 0P1 is the standard factorization.
  const auto [u, v] = standard_factorization(Word("0") + central + Word("1"));
  d.right_pal = u.slice(1, u.size() - 2);
  d.left_pal = v.slice(1, v.size() - 2);
  assert(*d.left_pal + Word("01") + *d.right_pal == central);
  assert(*d.right_pal + Word("10") + *d.left_pal == central);
  return d;
}

ChristoffelFactorizations factorizations(const Word& w) {
  if (w.size() < 2 || !is_primitive_lower_christoffel(w)) {
    throw ContractError("\"" + w.str() + "\" is not a primitive lower Christoffel word of length >= 2");
  }
  ChristoffelFactorizations f;
  f.standard = standard_factorization(w);
  auto pal = two_palindrome_factorization(w);
  assert(pal.has_value());
  f.palindromic = std::move(*pal);
  f.points.s_point = endpoint(f.standard.first);
  f.points.s_prime_point = endpoint(f.palindromic.first);
  return f;
}

std::pair<std::uint64_t, std::uint64_t> central_periods(ParikhVector p) {
  require_coprime_positive(p, "central periods");
  const std::uint64_t m = p.zeros + p.ones;
  return {inverse_mod(p.zeros, m), inverse_mod(p.ones, m)};
}

}  // namespace dcw
