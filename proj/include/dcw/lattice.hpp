#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dcw/word.hpp"

namespace dcw {

/// prefix_ones[i] = number of 1s among the first i + 1 symbols.
struct DominanceProfile {
  std::vector<std::size_t> prefix_ones;
  friend bool operator==(const DominanceProfile&, const DominanceProfile&) = default;
};

DominanceProfile dominance_profile(const Word& w);
/// Inverse of dominance_profile; throws ContractError if a step is not 0 or 1.
Word word_from_profile(const DominanceProfile& profile);

/// u ⊑ v: every prefix of v has at least as many 1s as the same prefix of u.
/// Throws ContractError when the lengths differ.
bool dominance_le(const Word& u, const Word& v);

/// Pointwise min / max of the profiles. Both words must share a Parikh vector.
Word meet(const Word& u, const Word& v);
Word join(const Word& u, const Word& v);

enum class SiteKind { deflation, inflation };

/// A convexity-preserving swap. `position` is the zero-based index of the
/// first symbol of the swapped pair ("10" for deflation, "01" for inflation).
/// `factor_index` is the Lyndon factor holding the pair (inflation) or the
/// factor ending at the boundary (deflation).
struct Site {
  SiteKind kind = SiteKind::deflation;
  std::size_t position = 0;
  std::size_t factor_index = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Deflation sites of an upward digitally convex word, by position. These are
/// the boundaries between distinct consecutive Christoffel blocks of the
/// Lyndon factorization (equal factors are grouped into one power).
std::vector<Site> deflation_sites(const Word& w);
/// Swaps the "10" at `site`; throws ContractError unless it is a deflation site of w.
Word deflate(const Word& w, const Site& site);

/// Inflation sites of an upward digitally convex word, by position. Candidates
/// are the palindromic split points of the Lyndon factors of length >= 2, each
/// confirmed by a full convexity check of the swapped word.
std::vector<Site> inflation_sites(const Word& w);
/// Swaps the "01" at `site`; throws ContractError unless it is an inflation site of w.
Word inflate(const Word& w, const Site& site);

/// w, then repeated deflation at the leftmost site, ending at w_{a,b}.
std::vector<Word> deflation_chain(const Word& w);
/// w, then repeated inflation at the leftmost site, ending at 1^b 0^a.
std::vector<Word> inflation_chain(const Word& w);

enum class Closure {
  inflation,  // from w_{a,b}
  deflation,  // from 1^b 0^a
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// All upward digitally convex words with Parikh vector p, sorted, computed by
/// breadth-first closure. Throws ResourceCapError when a + b > cap and
/// ContractError for (0,0).
std::vector<Word> enumerate_dc(ParikhVector p, Closure closure = Closure::inflation,
                               std::size_t cap = kDefaultEnumerationCap);

using Edge = std::pair<Word, Word>;

struct CoverRelations {
  std::vector<Edge> inflation;  // (u, inflate(u, s)) for every site s
  std::vector<Edge> dominance;  // covers of ⊑ restricted to DC_{a,b}
};

/// Both edge sets over DC_{a,b}, sorted.
CoverRelations cover_relations(ParikhVector p, std::size_t cap = kDefaultEnumerationCap);

}  // namespace dcw
