#include "dcw/serialize.hpp"

#include "dcw/errors.hpp"

namespace dcw {

void to_json(nlohmann::json& j, const Word& w) { j = w.str(); }
void from_json(const nlohmann::json& j, Word& w) { w = Word(j.get<std::string>()); }

void to_json(nlohmann::json& j, const ParikhVector& p) { j = nlohmann::json::array({p.zeros, p.ones}); }
void from_json(const nlohmann::json& j, ParikhVector& p) {
  p.zeros = j.at(0).get<std::uint64_t>();
  p.ones = j.at(1).get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const LyndonFactorization& f) { j = f.factors; }

void to_json(nlohmann::json& j, const Witness& w) {
  j = nlohmann::json{{"start", w.start}, {"end", w.end}, {"factor", w.factor}};
}
void from_json(const nlohmann::json& j, Witness& w) {
  j.at("start").get_to(w.start);
  j.at("end").get_to(w.end);
  j.at("factor").get_to(w.factor);
}

void to_json(nlohmann::json& j, const Site& s) {
  j = nlohmann::json{{"kind", s.kind == SiteKind::deflation ? "deflation" : "inflation"},
                     {"position", s.position},
                     {"factor_index", s.factor_index}};
}
void from_json(const nlohmann::json& j, Site& s) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "deflation" && kind != "inflation") throw ContractError("unknown site kind \"" + kind + "\"");
  s.kind = kind == "deflation" ? SiteKind::deflation : SiteKind::inflation;
  j.at("position").get_to(s.position);
  j.at("factor_index").get_to(s.factor_index);
}

void to_json(nlohmann::json& j, const CountTable& t) {
  auto values = nlohmann::json::array();
  for (const BigInt& v : t.values) values.push_back(v.str());
  j = nlohmann::json{{"kind", std::string(to_string(t.kind))}, {"values", std::move(values)}};
  if (t.kind == CountKind::dc0) j["oeis"] = "A061255";
}
void from_json(const nlohmann::json& j, CountTable& t) {
  t.kind = parse_count_kind(j.at("kind").get<std::string>());
  t.values.clear();
  for (const auto& v : j.at("values")) t.values.emplace_back(v.get<std::string>());
}

}  // namespace dcw
