#include "dcw/render.hpp"

#include <sstream>
#include <vector>

#include "dcw/christoffel.hpp"
#include "dcw/errors.hpp"
#include "dcw/lyndon.hpp"

namespace dcw {

namespace {

struct Mark {
  LatticePoint at;
  char ascii;
  const char* label;
  const char* color;
};

std::vector<Mark> collect_marks(const RenderSpec& spec) {
  std::vector<Mark> marks;
  if (spec.marks.boundaries) {
    const auto f = lyndon_factorization(spec.word);
    for (std::size_t i = 1; i < f.size(); ++i) {
      marks.push_back({endpoint(spec.word.prefix(f.boundaries[i])), '+', "", "#1f5fbf"});
    }
  }
  if (spec.marks.s_point || spec.marks.s_prime_point) {
    const auto f = factorizations(spec.word);  // validates the word
    if (spec.marks.s_point) marks.push_back({f.points.s_point, 'S', "S", "#c0392b"});
    if (spec.marks.s_prime_point) marks.push_back({f.points.s_prime_point, '*', "S′", "#27ae60"});
  }
  return marks;
}

std::string render_ascii(const RenderSpec& spec, const std::vector<Mark>& marks) {
  const ParikhVector p = parikh(spec.word);
  const std::size_t width = 2 * p.zeros + 1;
  // rows[y] is the band between heights y and y + 1; printed top first.
  std::vector<std::string> rows(p.ones + 1);
  for (auto& row : rows) {
    row.assign(width, ' ');
    for (std::size_t c = 0; c < width; c += 2) row[c] = '.';
  }
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < spec.word.size(); ++i) {
    if (spec.word[i] == 0) {
      rows[y][2 * x + 1] = '_';
      ++x;
    } else {
      rows[y][2 * x] = '|';
      ++y;
    }
  }
  for (const Mark& m : marks) rows[m.at.y][2 * m.at.x] = m.ascii;

  std::string out;
  for (std::size_t r = rows.size(); r-- > 0;) {
    out += rows[r];
    out += '\n';
  }
  return out;
}

std::string render_svg(const RenderSpec& spec, const std::vector<Mark>& marks) {
  const ParikhVector p = parikh(spec.word);
  const std::uint64_t cell = spec.cell_size;
  const auto px = [&](std::uint64_t x) { return cell * (x + 1); };
  const auto py = [&](std::uint64_t y) { return cell * (p.ones + 1 - y); };
  const std::uint64_t width = cell * (p.zeros + 2);
  const std::uint64_t height = cell * (p.ones + 2);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  svg << "  <g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
  for (std::uint64_t x = 0; x <= p.zeros; ++x) {
    svg << "    <line x1=\"" << px(x) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x) << "\" y2=\"" << py(p.ones)
        << "\"/>\n";
  }
  for (std::uint64_t y = 0; y <= p.ones; ++y) {
    svg << "    <line x1=\"" << px(0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(p.zeros) << "\" y2=\"" << py(y)
        << "\"/>\n";
  }
  svg << "  </g>\n";
  if (spec.show_segment) {
    svg << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(p.zeros) << "\" y2=\"" << py(p.ones)
        << "\" stroke=\"#7f7f7f\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
  }
  svg << "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"3\" stroke-linejoin=\"round\" points=\""
      << px(0) << ',' << py(0);
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  for (std::size_t i = 0; i < spec.word.size(); ++i) {
    spec.word[i] == 0 ? ++x : ++y;
    svg << ' ' << px(x) << ',' << py(y);
  }
  svg << "\"/>\n";
  for (const Mark& m : marks) {
    svg << "  <circle cx=\"" << px(m.at.x) << "\" cy=\"" << py(m.at.y) << "\" r=\"" << (cell / 5 + 1)
        << "\" fill=\"" << m.color << "\"/>\n";
    if (*m.label != '\0') {
      svg << "  <text x=\"" << px(m.at.x) + cell / 4 << "\" y=\"" << py(m.at.y) + cell / 2
          << "\" font-family=\"sans-serif\" font-size=\"" << cell / 2 + 2 << "\" fill=\"" << m.color << "\">"
          << m.label << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

RenderMarks parse_marks(std::string_view list) {
  RenderMarks marks;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
    if (item == "S") {
      marks.s_point = true;
    } else if (item == "S'" || item == "S′") {
      marks.s_prime_point = true;
    } else if (item == "boundaries" || item == "factor-boundaries") {
      marks.boundaries = true;
    } else if (!item.empty()) {
      throw ContractError("unknown mark \"" + std::string(item) + "\" (expected S, S', boundaries)");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return marks;
}

std::string render(const RenderSpec& spec) {
  if (spec.cell_size == 0) throw ContractError("cell size must be positive");
  const auto marks = collect_marks(spec);
  return spec.format == RenderFormat::ascii ? render_ascii(spec, marks) : render_svg(spec, marks);
}

}  // namespace dcw
