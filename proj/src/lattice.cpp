#include "dcw/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_set>

#include "dcw/christoffel.hpp"
#include "dcw/convexity.hpp"
#include "dcw/errors.hpp"
#include "dcw/lyndon.hpp"

namespace dcw {

namespace {

void require_convex(const Word& w, const char* what) {
  if (!is_upward_convex(w)) {
    throw ContractError(std::string(what) + " needs a digitally convex word, got \"" + w.str() + "\"");
  }
}

void require_same_parikh(const Word& u, const Word& v) {
  if (u.size() != v.size() || parikh(u) != parikh(v)) {
    throw ContractError("meet/join need words with the same Parikh vector: \"" + u.str() + "\", \"" + v.str() +
                        "\"");
  }
}

bool profile_le(const DominanceProfile& u, const DominanceProfile& v) {
  for (std::size_t i = 0; i < u.prefix_ones.size(); ++i) {
    if (u.prefix_ones[i] > v.prefix_ones[i]) return false;
  }
  return true;
}

template <typename Pick>
Word combine(const Word& u, const Word& v, Pick pick) {
  require_same_parikh(u, v);
  const auto pu = dominance_profile(u);
  const auto pv = dominance_profile(v);
  DominanceProfile out;
  out.prefix_ones.resize(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out.prefix_ones[i] = pick(pu.prefix_ones[i], pv.prefix_ones[i]);
  return word_from_profile(out);
}

std::vector<Site> deflation_sites_unchecked(const Word& w) {
  std::vector<Site> sites;
  const auto f = lyndon_factorization(w);
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    const Word& left = f.factors[i];
    const Word& right = f.factors[i + 1];
    if (left != right && left.back() == 1 && right.front() == 0) {
      sites.push_back({SiteKind::deflation, f.end_of(i) - 1, i});
      assert(is_upward_convex(w.swapped(f.end_of(i) - 1)));
    }
  }
  return sites;
}

std::vector<Site> inflation_sites_unchecked(const Word& w) {
  std::vector<Site> sites;
  const auto f = lyndon_factorization(w);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Word& factor = f.factors[i];
    if (factor.size() < 2) continue;
    const auto pal = two_palindrome_factorization(factor);
    assert(pal.has_value());
    const std::size_t position = f.boundaries[i] + pal->first.size() - 1;
    assert(w[position] == 0 && w[position + 1] == 1);
    if (is_upward_convex(w.swapped(position))) sites.push_back({SiteKind::inflation, position, i});
  }
  return sites;
}

bool contains_position(const std::vector<Site>& sites, const Site& site) {
  return std::any_of(sites.begin(), sites.end(),
                     [&](const Site& s) { return s.kind == site.kind && s.position == site.position; });
}

void check_cap(ParikhVector p, std::size_t cap) {
  if (p.length() > cap) {
    throw ResourceCapError("a + b = " + std::to_string(p.length()) + " exceeds the enumeration cap " +
                           std::to_string(cap) + " (raise it with --cap)");
  }
}

}  // namespace

DominanceProfile dominance_profile(const Word& w) {
  DominanceProfile p;
  p.prefix_ones.reserve(w.size());
  std::size_t ones = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    ones += w[i];
    p.prefix_ones.push_back(ones);
  }
  return p;
}

Word word_from_profile(const DominanceProfile& profile) {
  Word w;
  std::size_t previous = 0;
  for (std::size_t value : profile.prefix_ones) {
    if (value != previous && value != previous + 1) throw ContractError("profile steps must be 0 or 1");
    w.push_back(static_cast<Symbol>(value - previous));
    previous = value;
  }
  return w;
}

bool dominance_le(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw ContractError("dominance order compares words of equal length");
  return profile_le(dominance_profile(u), dominance_profile(v));
}

Word meet(const Word& u, const Word& v) {
  return combine(u, v, [](std::size_t a, std::size_t b) { return std::min(a, b); });
}

Word join(const Word& u, const Word& v) {
  return combine(u, v, [](std::size_t a, std::size_t b) { return std::max(a, b); });
}

std::vector<Site> deflation_sites(const Word& w) {
  require_convex(w, "deflation_sites");
  return deflation_sites_unchecked(w);
}

Word deflate(const Word& w, const Site& site) {
  if (site.kind != SiteKind::deflation || !contains_position(deflation_sites(w), site)) {
    throw ContractError("position " + std::to_string(site.position) + " is not a deflation site of \"" + w.str() +
                        "\"");
  }
  return w.swapped(site.position);
}

std::vector<Site> inflation_sites(const Word& w) {
  require_convex(w, "inflation_sites");
  return inflation_sites_unchecked(w);
}

Word inflate(const Word& w, const Site& site) {
  if (site.kind != SiteKind::inflation || !contains_position(inflation_sites(w), site)) {
    throw ContractError("position " + std::to_string(site.position) + " is not an inflation site of \"" + w.str() +
                        "\"");
  }
  return w.swapped(site.position);
}

std::vector<Word> deflation_chain(const Word& w) {
  require_convex(w, "deflation_chain");
  std::vector<Word> chain{w};
  for (auto sites = deflation_sites_unchecked(w); !sites.empty(); sites = deflation_sites_unchecked(chain.back())) {
    chain.push_back(chain.back().swapped(sites.front().position));
  }
  return chain;
}

std::vector<Word> inflation_chain(const Word& w) {
  require_convex(w, "inflation_chain");
  std::vector<Word> chain{w};
  for (auto sites = inflation_sites_unchecked(w); !sites.empty(); sites = inflation_sites_unchecked(chain.back())) {
    chain.push_back(chain.back().swapped(sites.front().position));
  }
  return chain;
}

std::vector<Word> enumerate_dc(ParikhVector p, Closure closure, std::size_t cap) {
  if (p.length() == 0) throw ContractError("enumerate_dc needs a nonzero Parikh vector");
  check_cap(p, cap);
  const Word start = closure == Closure::inflation
                         ? christoffel_lower(p)
                         : Word::letter_power(1, p.ones) + Word::letter_power(0, p.zeros);
  std::unordered_set<Word> seen{start};
  std::deque<Word> frontier{start};
  while (!frontier.empty()) {
    const Word current = std::move(frontier.front());
    frontier.pop_front();
    const auto sites =
        closure == Closure::inflation ? inflation_sites_unchecked(current) : deflation_sites_unchecked(current);
    for (const Site& site : sites) {
      Word next = current.swapped(site.position);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

CoverRelations cover_relations(ParikhVector p, std::size_t cap) {
  const auto words = enumerate_dc(p, Closure::inflation, cap);
  CoverRelations rel;
  for (const Word& u : words) {
    for (const Site& site : inflation_sites_unchecked(u)) rel.inflation.emplace_back(u, u.swapped(site.position));
  }

  const std::size_t n = words.size();
  std::vector<DominanceProfile> profiles;
  profiles.reserve(n);
  for (const Word& w : words) profiles.push_back(dominance_profile(w));
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) below[i][j] = i != j && profile_le(profiles[i], profiles[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) covered = !(below[i][k] && below[k][j]);
      if (covered) rel.dominance.emplace_back(words[i], words[j]);
    }
  }

  std::sort(rel.inflation.begin(), rel.inflation.end());
  std::sort(rel.dominance.begin(), rel.dominance.end());
  return rel;
}

}  // namespace dcw
