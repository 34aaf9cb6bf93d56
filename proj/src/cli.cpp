#include "dcw/cli.hpp"

#include <algorithm>
#include <charconv>
#include <optional>

#include "CLI11.hpp"
#include "dcw/christoffel.hpp"
#include "dcw/convexity.hpp"
#include "dcw/counting.hpp"
#include "dcw/errors.hpp"
#include "dcw/lattice.hpp"
#include "dcw/lyndon.hpp"
#include "dcw/render.hpp"
#include "dcw/serialize.hpp"

namespace dcw::cli {

namespace {

using nlohmann::json;

const std::string kDot = "·";

struct Options {
  std::string format = "text";
  std::string order = "01";
  std::size_t cap = kDefaultEnumerationCap;

  // christoffel
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  bool upper = false;
  bool central = false;

  // check
  bool check_balanced = false;
  bool check_up = false;
  bool check_down = false;
  bool check_lyndon = false;
  bool check_central = false;
  bool check_christoffel = false;

  // factorize / render / mfw
  std::string word;
  std::string mode = "lyndon";
  std::string marks;
  bool segment = false;
  unsigned cell = 24;
  std::optional<std::size_t> max_len;
  std::optional<std::size_t> mfw_dc_len;
  std::optional<std::size_t> mfw_bal_len;
  std::string construction = "complement";

  // lattice
  std::vector<std::string> lattice_args;
  std::string closure = "inflation";
  std::optional<std::size_t> site;

  // count
  std::string kind;
  std::size_t n_max = 0;
};

LetterOrder parse_order(const std::string& order) {
  return order == "10" ? LetterOrder::one_first : LetterOrder::zero_first;
}

std::string join_words(const std::vector<Word>& words, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += sep;
    out += words[i].str();
  }
  return out;
}

std::optional<std::uint64_t> parse_number(const std::string& text) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string kind_name(ChristoffelKind kind) {
  switch (kind) {
    case ChristoffelKind::primitive_lower:
      return "primitive-lower";
    case ChristoffelKind::primitive_upper:
      return "primitive-upper";
    case ChristoffelKind::both:
      return "both";
    case ChristoffelKind::power_of_primitive:
      return "power-of-primitive";
    case ChristoffelKind::not_christoffel:
      return "not-christoffel";
  }
  return "";
}

json witness_json(const ConvexityReport& r) { return r.witness ? json(*r.witness) : json(nullptr); }

std::string convexity_text(const ConvexityReport& r) {
  if (r.convex) return "true";
  return "false (witness " + r.witness->factor.str() + " at [" + std::to_string(r.witness->start) + "," +
         std::to_string(r.witness->end) + "))";
}

int cmd_christoffel(const Options& o, std::ostream& out) {
  const ParikhVector p{o.a, o.b};
  Word w;
  std::string variant = "lower";
  if (o.central) {
    variant = "central";
    w = central_word(p);
  } else if (o.upper) {
    variant = "upper";
    w = christoffel_upper(p);
  } else {
    w = christoffel_lower(p);
  }
  if (o.format == "json") {
    out << json{{"parikh", p}, {"variant", variant}, {"word", w}}.dump() << '\n';
  } else {
    out << w.str() << '\n';
  }
  return kSuccess;
}

int cmd_check(Options o, std::ostream& out) {
  const Word w(o.word);
  if (!(o.check_balanced || o.check_up || o.check_down || o.check_lyndon || o.check_central || o.check_christoffel)) {
    o.check_balanced = o.check_up = o.check_down = o.check_lyndon = o.check_central = o.check_christoffel = true;
  }
  bool all = true;
  const auto up = is_digitally_convex(w, Direction::upward);
  json j{{"word", w},
         {"parikh", parikh(w)},
         {"factors", lyndon_factorization(w)},
         {"convex_up", up.convex},
         {"witness", witness_json(up)}};
  std::vector<std::string> lines;

  if (o.check_balanced) {
    const bool v = is_balanced(w);
    all = all && v;
    j["balanced"] = v;
    lines.push_back(std::string("balanced: ") + (v ? "true" : "false"));
  }
  if (o.check_up) {
    all = all && up.convex;
    lines.push_back("convex-up: " + convexity_text(up));
  }
  if (o.check_down) {
    const auto down = is_digitally_convex(w, Direction::downward);
    all = all && down.convex;
    j["convex_down"] = down.convex;
    j["convex_down_witness"] = witness_json(down);
    lines.push_back("convex-down: " + convexity_text(down));
  }
  if (o.check_lyndon) {
    const bool v = is_lyndon(w, parse_order(o.order));
    all = all && v;
    j["lyndon"] = v;
    lines.push_back(std::string("lyndon: ") + (v ? "true" : "false"));
  }
  if (o.check_central) {
    const bool v = is_central(w);
    all = all && v;
    j["central"] = v;
    lines.push_back(std::string("central: ") + (v ? "true" : "false"));
  }
  if (o.check_christoffel) {
    const auto c = classify_christoffel(w);
    const bool v = c.kind != ChristoffelKind::not_christoffel;
    all = all && v;
    j["christoffel"] = kind_name(c.kind);
    std::string line = "christoffel: " + kind_name(c.kind);
    if (c.kind == ChristoffelKind::power_of_primitive) {
      j["root"] = *c.root;
      j["exponent"] = c.exponent;
      line += " (root " + c.root->str() + ", exponent " + std::to_string(c.exponent) + ")";
    }
    lines.push_back(line);
  }

  if (o.format == "json") {
    out << j.dump() << '\n';
  } else {
    for (const auto& line : lines) out << line << '\n';
  }
  return all ? kSuccess : kCheckFailed;
}

int cmd_factorize(const Options& o, std::ostream& out) {
  const Word w(o.word);
  std::vector<Word> factors;
  if (o.mode == "lyndon" || o.mode == "lyndon-rev") {
    const LetterOrder order = o.mode == "lyndon-rev" ? LetterOrder::one_first : parse_order(o.order);
    factors = lyndon_factorization(w, order).factors;
  } else if (o.mode == "standard") {
    auto [u, v] = standard_factorization(w);
    factors = {u, v};
  } else {
    auto pal = two_palindrome_factorization(w);
    if (!pal) throw ContractError("\"" + w.str() + "\" is not a product of two palindromes");
    factors = {pal->first, pal->second};
  }
  if (o.format == "json") {
    out << json{{"word", w}, {"mode", o.mode}, {"factors", factors}}.dump() << '\n';
  } else {
    out << join_words(factors, kDot) << '\n';
  }
  return kSuccess;
}

json edges_json(const std::vector<Edge>& edges) {
  auto arr = json::array();
  for (const auto& [from, to] : edges) arr.push_back(json::array({from, to}));
  return arr;
}

int cmd_lattice(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& args = o.lattice_args;
  const bool as_json = o.format == "json";

  if (args.size() >= 3 && parse_number(args[0]) && parse_number(args[1])) {
    const ParikhVector p{*parse_number(args[0]), *parse_number(args[1])};
    const std::string& action = args[2];
    if (action == "enumerate") {
      const auto words = enumerate_dc(p, o.closure == "deflation" ? Closure::deflation : Closure::inflation, o.cap);
      if (as_json) {
        out << json{{"parikh", p}, {"words", words}}.dump() << '\n';
      } else {
        out << join_words(words, " ") << '\n';
      }
      return kSuccess;
    }
    if (action == "covers") {
      const auto rel = cover_relations(p, o.cap);
      const bool equal = rel.inflation == rel.dominance;
      if (as_json) {
        out << json{{"parikh", p},
                    {"inflation", edges_json(rel.inflation)},
                    {"dominance", edges_json(rel.dominance)},
                    {"equal", equal}}
                   .dump()
            << '\n';
      } else {
        for (const auto& [from, to] : rel.inflation) out << from.str() << " -> " << to.str() << '\n';
      }
      if (!equal) {
        err << "warning: inflation edges differ from dominance covers\n";
        return kCheckFailed;
      }
      return kSuccess;
    }
    throw CLI::ValidationError("lattice", "unknown action \"" + action + "\" (expected enumerate or covers)");
  }

  if (args.empty()) throw CLI::ValidationError("lattice", "missing action");
  const std::string& action = args[0];
  const auto expect_words = [&](std::size_t n) {
    if (args.size() != n + 1) {
      throw CLI::ValidationError("lattice", action + " takes " + std::to_string(n) + " word argument(s)");
    }
  };

  if (action == "meet" || action == "join") {
    expect_words(2);
    const Word u(args[1]);
    const Word v(args[2]);
    const Word r = action == "meet" ? meet(u, v) : join(u, v);
    const bool convex = is_upward_convex(r);
    if (as_json) {
      out << json{{"word", r}, {"convex_up", convex}, {"factors", lyndon_factorization(r)}}.dump() << '\n';
    } else {
      out << r.str() << '\n';
    }
    if (!convex) err << "warning: " << r.str() << " is not digitally convex\n";
    return kSuccess;
  }
  if (action == "inflate" || action == "deflate") {
    expect_words(1);
    const Word w(args[1]);
    const bool inflating = action == "inflate";
    if (o.site) {
      const Site site{inflating ? SiteKind::inflation : SiteKind::deflation, *o.site, 0};
      const Word r = inflating ? inflate(w, site) : deflate(w, site);
      if (as_json) {
        out << json{{"word", r}}.dump() << '\n';
      } else {
        out << r.str() << '\n';
      }
      return kSuccess;
    }
    const auto sites = inflating ? inflation_sites(w) : deflation_sites(w);
    if (as_json) {
      auto arr = json::array();
      for (const Site& s : sites) arr.push_back(json{{"site", s}, {"result", w.swapped(s.position)}});
      out << json{{"word", w}, {"sites", arr}}.dump() << '\n';
    } else {
      for (const Site& s : sites) out << s.position << ' ' << w.swapped(s.position).str() << '\n';
    }
    return kSuccess;
  }
  if (action == "chain-up" || action == "chain-down") {
    expect_words(1);
    const Word w(args[1]);
    const auto chain = action == "chain-up" ? inflation_chain(w) : deflation_chain(w);
    if (as_json) {
      out << json(chain).dump() << '\n';
    } else {
      out << join_words(chain, " ") << '\n';
    }
    return kSuccess;
  }
  throw CLI::ValidationError("lattice", "unknown action \"" + action + "\"");
}

int cmd_count(const Options& o, std::ostream& out) {
  const CountTable table = count_table(parse_count_kind(o.kind), o.n_max);
  if (o.format == "json") {
    out << json(table).dump() << '\n';
  } else {
    for (std::size_t n = 0; n < table.values.size(); ++n) out << n << ' ' << table.values[n] << '\n';
  }
  return kSuccess;
}

int cmd_render(const Options& o, std::ostream& out) {
  RenderSpec spec;
  spec.word = Word(o.word);
  spec.show_segment = o.segment;
  spec.marks = parse_marks(o.marks);
  spec.format = o.format == "svg" ? RenderFormat::svg : RenderFormat::ascii;
  spec.cell_size = o.cell;
  out << render(spec);
  return kSuccess;
}

int cmd_mfw(const Options& o, std::ostream& out) {
  std::vector<Word> words;
  if (o.mfw_dc_len) {
    words = mfw_dc(*o.mfw_dc_len,
                   o.construction == "provencal" ? MfwConstruction::provencal : MfwConstruction::complement);
  } else if (o.mfw_bal_len) {
    words = mfw_balanced(*o.mfw_bal_len);
  } else {
    const Word w(o.word);
    words = mfw_of_word(w, o.max_len.value_or(w.size() + 1));
  }
  if (o.format == "json") {
    out << json(words).dump() << '\n';
  } else {
    out << join_words(words, " ") << '\n';
  }
  return kSuccess;
}

void add_format(CLI::App* cmd, Options& o, std::vector<std::string> allowed) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Digitally convex binary words: Christoffel words, Lyndon factorizations, lattices", "dcw"};
  app.require_subcommand(1);

  auto* christoffel = app.add_subcommand("christoffel", "Print the Christoffel word with Parikh vector (a,b)");
  christoffel->add_option("a", o.a, "Number of 0s")->required();
  christoffel->add_option("b", o.b, "Number of 1s")->required();
  christoffel->add_flag("--upper", o.upper, "Upper Christoffel word");
  christoffel->add_flag("--central", o.central, "Central word C of w_{a,b} = 0C1");
  add_format(christoffel, o, {"text", "json"});

  auto* check = app.add_subcommand("check", "Test word properties; exit 1 if any requested check fails");
  check->add_option("word", o.word, "Binary word")->required();
  check->add_flag("--balanced", o.check_balanced);
  check->add_flag("--convex-up", o.check_up);
  check->add_flag("--convex-down", o.check_down);
  check->add_flag("--lyndon", o.check_lyndon);
  check->add_flag("--central", o.check_central);
  check->add_flag("--christoffel", o.check_christoffel);
  check->add_option("--order", o.order, "Letter order for --lyndon")->check(CLI::IsMember({"01", "10"}));
  add_format(check, o, {"text", "json"});

  auto* factorize = app.add_subcommand("factorize", "Lyndon, standard or palindromic factorization");
  factorize->add_option("word", o.word, "Binary word")->required();
  factorize->add_option("--mode", o.mode)->check(CLI::IsMember({"lyndon", "lyndon-rev", "standard", "palindromic"}));
  factorize->add_option("--order", o.order, "Letter order for lyndon mode")->check(CLI::IsMember({"01", "10"}));
  add_format(factorize, o, {"text", "json"});

  auto* lattice = app.add_subcommand(
      "lattice",
      "a b {enumerate|covers} | {meet|join} u v | {inflate|deflate|chain-up|chain-down} w");
  lattice->add_option("args", o.lattice_args)->required();
  lattice->add_option("--cap", o.cap, "Largest a+b accepted by enumerate/covers");
  lattice->add_option("--closure", o.closure, "Enumeration start")->check(CLI::IsMember({"inflation", "deflation"}));
  lattice->add_option("--site", o.site, "Zero-based position of the pair to swap");
  add_format(lattice, o, {"text", "json"});

  auto* count = app.add_subcommand("count", "Exact counting tables for n = 0..n_max");
  count->add_option("kind", o.kind)->required()->check(CLI::IsMember({"dc0", "dc", "balanced", "mfw-dc"}));
  count->add_option("n_max", o.n_max)->required();
  add_format(count, o, {"text", "json"});

  auto* render_cmd = app.add_subcommand("render", "Draw the lattice path of a word");
  render_cmd->add_option("word", o.word, "Binary word")->required();
  render_cmd->add_flag("--segment", o.segment, "Draw the segment from (0,0) to (a,b) (SVG)");
  render_cmd->add_option("--marks", o.marks, "Comma-separated subset of S,S',boundaries");
  render_cmd->add_option("--cell", o.cell, "SVG pixels per unit")->check(CLI::PositiveNumber);
  o.format = "ascii";
  add_format(render_cmd, o, {"ascii", "text", "svg"});

  auto* mfw = app.add_subcommand("mfw", "Minimal forbidden words of a word, or of the DC / balanced languages");
  mfw->add_option("word", o.word, "Binary word");
  mfw->add_option("--max-len", o.max_len, "Longest forbidden word reported (default |w|+1)");
  mfw->add_option("--dc", o.mfw_dc_len, "Length-n minimal forbidden words of the digitally convex words");
  mfw->add_option("--balanced", o.mfw_bal_len, "Length-n minimal forbidden words of the balanced words");
  mfw->add_option("--construction", o.construction)->check(CLI::IsMember({"complement", "provencal"}));
  add_format(mfw, o, {"text", "json"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  // render defaults to ascii; the text commands default to text.
  if (!render_cmd->parsed() && o.format == "ascii") o.format = "text";

  try {
    if (christoffel->parsed()) return cmd_christoffel(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (factorize->parsed()) return cmd_factorize(o, out);
    if (lattice->parsed()) return cmd_lattice(o, out, err);
    if (count->parsed()) return cmd_count(o, out);
    if (render_cmd->parsed()) return cmd_render(o, out);
    if (mfw->parsed()) return cmd_mfw(o, out);
  } catch (const ResourceCapError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {  // ParseError, ContractError
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace dcw::cli
