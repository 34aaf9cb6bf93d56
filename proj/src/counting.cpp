#include "dcw/counting.hpp"

#include <stdexcept>
#include <string>

#include "dcw/errors.hpp"

namespace dcw {

namespace {

// |DC_0(0..n_max)| through the Euler transform of phi:
//   n·c(n) = sum_{k=1..n} (sum_{d|k} d·phi(d)) · c(n-k).
std::vector<BigInt> dc0_values(std::size_t n_max) {
  const auto phi = totient_table(n_max);
  std::vector<BigInt> weight(n_max + 1);
  for (std::size_t d = 1; d <= n_max; ++d) {
    const BigInt term = BigInt(d) * phi[d];
    for (std::size_t k = d; k <= n_max; k += d) weight[k] += term;
  }
  std::vector<BigInt> c(n_max + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += weight[k] * c[n - k];
    if (sum % n != 0) throw std::logic_error("Euler transform division is inexact at n = " + std::to_string(n));
    c[n] = sum / n;
  }
  return c;
}

}  // namespace

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw ContractError("totient(0) is not defined");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> totient_table(std::size_t n_max) {
  std::vector<std::uint64_t> phi(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) phi[i] = i;
  for (std::size_t p = 2; p <= n_max; ++p) {
    if (phi[p] != p) continue;  // composite
    for (std::size_t m = p; m <= n_max; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

BigInt count_dc0(std::size_t n) { return dc0_values(n).back(); }

BigInt count_dc(std::size_t n) {
  BigInt total = 0;
  for (const BigInt& v : dc0_values(n)) total += v;
  return total;
}

BigInt count_balanced(std::size_t n) {
  const auto phi = totient_table(n);
  BigInt total = 1;
  for (std::size_t k = 1; k <= n; ++k) total += BigInt(n - k + 1) * phi[k];
  return total;
}

BigInt count_mfw_dc(std::size_t n) {
  if (n < 2) return 0;
  return BigInt(n - 1 - totient(n));
}

CountTable count_table(CountKind kind, std::size_t n_max) {
  CountTable table;
  table.kind = kind;
  switch (kind) {
    case CountKind::dc0:
      table.values = dc0_values(n_max);
      break;
    case CountKind::dc: {
      BigInt running = 0;
      for (const BigInt& v : dc0_values(n_max)) {
        running += v;
        table.values.push_back(running);
      }
      break;
    }
    case CountKind::balanced:
      for (std::size_t n = 0; n <= n_max; ++n) table.values.push_back(count_balanced(n));
      break;
    case CountKind::mfw_dc:
      for (std::size_t n = 0; n <= n_max; ++n) table.values.push_back(count_mfw_dc(n));
      break;
  }
  return table;
}

CountKind parse_count_kind(std::string_view name) {
  if (name == "dc0") return CountKind::dc0;
  if (name == "dc") return CountKind::dc;
  if (name == "balanced") return CountKind::balanced;
  if (name == "mfw-dc") return CountKind::mfw_dc;
  throw ContractError("unknown count kind \"" + std::string(name) + "\"");
}

std::string_view to_string(CountKind kind) {
  switch (kind) {
    case CountKind::dc0:
      return "dc0";
    case CountKind::dc:
      return "dc";
    case CountKind::balanced:
      return "balanced";
    case CountKind::mfw_dc:
      return "mfw-dc";
  }
  return "";
}

Word fibonacci_word(std::size_t len) {
  // Iterate 0 -> 01, 1 -> 0 from "0"; each image extends the previous one.
  Word w("0");
  while (w.size() < len) {
    Word next;
    for (std::size_t i = 0; i < w.size(); ++i) {
      next.push_back(0);
      if (w[i] == 0) next.push_back(1);
    }
    w = std::move(next);
  }
  return w.prefix(len);
}

Word lyndon_fib(std::size_t i) {
  if (i == 0) throw ContractError("lyndon_fib is indexed from 1");
  std::vector<Word> l{Word(), Word("1"), Word("0")};
  for (std::size_t n = 3; n <= i; ++n) {
    // Odd n = 2m+1: l_{2m} l_{2m-1}; even n = 2m+2: l_{2m} l_{2m+1}.
    l.push_back(n % 2 == 1 ? l[n - 1] + l[n - 2] : l[n - 2] + l[n - 1]);
  }
  return l[i];
}

std::uint64_t fibonacci_number(std::size_t n) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t next = a + b;
    if (next < b) throw std::overflow_error("Fibonacci number overflows 64 bits");
    a = b;
    b = next;
  }
  return a;
}

}  // namespace dcw
