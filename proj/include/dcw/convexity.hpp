#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dcw/lyndon.hpp"
#include "dcw/word.hpp"

namespace dcw {

enum class Direction { upward, downward };

/// Occurrence w[start, end) of the first Lyndon factor that is not a
/// primitive Christoffel word.
struct Witness {
  std::size_t start = 0;
  std::size_t end = 0;
  Word factor;
};

/// Outcome of a convexity check in one direction; `witness` is set exactly
/// when `convex` is false.
struct ConvexityReport {
  Direction direction = Direction::upward;
  bool convex = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return convex; }
};

/// For every length, 1-counts of equal-length factors differ by at most one.
bool is_balanced(const Word& w);

/// Upward: every Lyndon factor (order 0 < 1) is a primitive lower Christoffel
/// word. Downward: every Lyndon factor under 1 < 0 is a primitive upper one.
ConvexityReport is_digitally_convex(const Word& w, Direction direction = Direction::upward);

/// Same decision as is_digitally_convex, without building a report.
bool is_upward_convex(const Word& w);
bool is_downward_convex(const Word& w);

/// Minimal forbidden words of the factor language of w, of length <= max_len,
/// sorted.
std::vector<Word> mfw_of_word(const Word& w, std::size_t max_len);

/// Length-n minimal forbidden words of the balanced language: yvx for every
/// non-primitive Christoffel word xvy with {x, y} = {0, 1}. Sorted.
std::vector<Word> mfw_balanced(std::size_t n);

enum class MfwConstruction {
  complement,  // 0w1 with 1w0 a non-primitive Christoffel word
  provencal,   // u(uv)^k v over standard factorizations (u, v), k >= 1
};

/// Length-n minimal forbidden words of the digitally convex language. Sorted;
/// empty for n < 2.
std::vector<Word> mfw_dc(std::size_t n, MfwConstruction construction = MfwConstruction::complement);

}  // namespace dcw
