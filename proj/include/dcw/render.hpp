#pragma once

#include <string>
#include <string_view>

#include "dcw/word.hpp"

namespace dcw {

enum class RenderFormat { ascii, svg };

struct RenderMarks {
  bool s_point = false;        // standard factorization split
  bool s_prime_point = false;  // palindromic factorization split
  bool boundaries = false;     // Lyndon factor boundaries
};

struct RenderSpec {
  Word word;
  bool show_segment = false;
  RenderMarks marks;
  RenderFormat format = RenderFormat::ascii;
  unsigned cell_size = 24;
};

/// Comma-separated subset of {S, S', boundaries}; throws ContractError on
/// unknown entries.
RenderMarks parse_marks(std::string_view list);

/// Draws the lattice path of the word.
///
/// ASCII: one text row per height level, top row first. '_' is a 0-step, '|'
/// a 1-step and '.' an unvisited grid point; marks replace the grid point
/// with 'S' (standard split), '*' (palindromic split) or '+' (factor
/// boundary). The segment is not drawn in ASCII.
///
/// SVG: origin at the bottom left with y growing upward; grid, path polyline,
/// optional dashed segment and labelled mark circles. Output depends only on
/// the spec.
///
/// Throws ContractError when S or S' is requested for a word that is not a
/// primitive lower Christoffel word of length >= 2.
std::string render(const RenderSpec& spec);

}  // namespace dcw
