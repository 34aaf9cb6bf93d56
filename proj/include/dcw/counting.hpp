#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcw/word.hpp"

namespace dcw {

using BigInt = boost::multiprecision::cpp_int;

enum class CountKind {
  dc0,       // digitally convex words starting with 0 (OEIS A061255)
  dc,        // all digitally convex words
  balanced,  // balanced words
  mfw_dc,    // minimal forbidden words of the digitally convex language
};

/// values[n] for n = 0..n_max.
struct CountTable {
  CountKind kind = CountKind::dc0;
  std::vector<BigInt> values;
};

/// Euler's totient; throws ContractError for n = 0.
std::uint64_t totient(std::uint64_t n);
/// phi(0..n_max) by sieve; entry 0 is 0.
std::vector<std::uint64_t> totient_table(std::size_t n_max);

BigInt count_dc0(std::size_t n);
BigInt count_dc(std::size_t n);
BigInt count_balanced(std::size_t n);
/// n - 1 - phi(n) for n >= 2, zero below.
BigInt count_mfw_dc(std::size_t n);

CountTable count_table(CountKind kind, std::size_t n_max);

/// Parses "dc0", "dc", "balanced", "mfw-dc"; throws ContractError otherwise.
CountKind parse_count_kind(std::string_view name);
std::string_view to_string(CountKind kind);

/// Prefix of length `len` of the Fibonacci word 0100101001001...
Word fibonacci_word(std::size_t len);
/// l_1 = 1, l_2 = 0, l_{2n+1} = l_{2n} l_{2n-1}, l_{2n+2} = l_{2n} l_{2n+1}.
Word lyndon_fib(std::size_t i);
/// F_1 = F_2 = 1.
std::uint64_t fibonacci_number(std::size_t n);

}  // namespace dcw
