#pragma once

#include "json.hpp"

#include "dcw/convexity.hpp"
#include "dcw/counting.hpp"
#include "dcw/lattice.hpp"
#include "dcw/lyndon.hpp"
#include "dcw/word.hpp"

// JSON forms used by the CLI. Words are '0'/'1' strings, Parikh vectors
// [a, b], factorizations string arrays, edges [from, to] pairs and counts
// decimal strings (values outgrow 64 bits).
namespace dcw {

void to_json(nlohmann::json& j, const Word& w);
void from_json(const nlohmann::json& j, Word& w);

void to_json(nlohmann::json& j, const ParikhVector& p);
void from_json(const nlohmann::json& j, ParikhVector& p);

void to_json(nlohmann::json& j, const LyndonFactorization& f);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);

void to_json(nlohmann::json& j, const Site& s);
void from_json(const nlohmann::json& j, Site& s);

void to_json(nlohmann::json& j, const CountTable& t);
void from_json(const nlohmann::json& j, CountTable& t);

}  // namespace dcw
