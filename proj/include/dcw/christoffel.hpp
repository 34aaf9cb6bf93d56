#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "dcw/word.hpp"

namespace dcw {

/// Lattice point reached after reading a prefix: x counts 0s, y counts 1s.
struct LatticePoint {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint endpoint(const Word& prefix);

/// Lower Christoffel word w_{a,b}: the lattice path from (0,0) to (a,b)
/// closest to the segment from below. Non-coprime vectors give the
/// corresponding power of the primitive word. Throws ContractError on (0,0).
Word christoffel_lower(ParikhVector p);
/// Upper Christoffel word W_{a,b}, the reversal of w_{a,b}.
Word christoffel_upper(ParikhVector p);

enum class ChristoffelKind {
  primitive_lower,
  primitive_upper,
  both,  // a single letter or a power of one
  power_of_primitive,
  not_christoffel,
};

struct ChristoffelClass {
  ChristoffelKind kind = ChristoffelKind::not_christoffel;
  std::optional<Word> root;  // primitive root, absent for not_christoffel
  std::size_t exponent = 0;
};

ChristoffelClass classify_christoffel(const Word& w);
bool is_primitive_lower_christoffel(const Word& w);
bool is_primitive_upper_christoffel(const Word& w);

/// C with w_{a,b} = 0C1. Requires a, b >= 1 coprime.
Word central_word(ParikhVector p);

/// True when w has coprime periods p, q with |w| = p + q - 2. The empty word
/// is central (periods 1 and 1).
bool is_central(const Word& w);

/// C = P01Q = Q10P with palindromes P, Q; letter powers are degenerate and
/// carry no P, Q.
struct CentralDecomposition {
  Word central;
  std::optional<Word> left_pal;   // P
  std::optional<Word> right_pal;  // Q
  bool degenerate = false;
};

/// Throws ContractError for non-central input.
CentralDecomposition central_decomposition(const Word& central);

struct FactorizationPoints {
  LatticePoint s_point;        // split of the standard factorization
  LatticePoint s_prime_point;  // split of the palindromic factorization
};

struct ChristoffelFactorizations {
  std::pair<Word, Word> standard;
  std::pair<Word, Word> palindromic;
  FactorizationPoints points;
};

/// Both factorizations of a primitive lower Christoffel word of length >= 2.
ChristoffelFactorizations factorizations(const Word& w);

/// Multiplicative inverses of a and b modulo a + b, each in [1, a + b - 1]
/// (both 1 when a + b = 2). Requires a, b >= 1 coprime.
std::pair<std::uint64_t, std::uint64_t> central_periods(ParikhVector p);

}  // namespace dcw
