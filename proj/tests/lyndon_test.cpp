#include "dcw/lyndon.hpp"

#include <gtest/gtest.h>

#include <random>

#include "dcw/errors.hpp"
#include "oracles.hpp"

namespace dcw {
namespace {

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const Word& w : words) out.push_back(w.str());
  return out;
}

TEST(IsLyndon, Examples) {
  EXPECT_TRUE(is_lyndon(Word("001")));
  EXPECT_TRUE(is_lyndon(Word("0011")));
  EXPECT_FALSE(is_lyndon(Word("1010")));
  EXPECT_FALSE(is_lyndon(Word("")));
  EXPECT_TRUE(is_lyndon(Word("1")));
  EXPECT_TRUE(is_lyndon(Word("110"), LetterOrder::one_first));
  EXPECT_FALSE(is_lyndon(Word("001"), LetterOrder::one_first));
}

TEST(IsLyndon, AgreesWithRotationOracle) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const Word& w : oracle::all_words(n)) {
      for (LetterOrder order : {LetterOrder::zero_first, LetterOrder::one_first}) {
        ASSERT_EQ(is_lyndon(w, order), oracle::lyndon(w, order)) << w.str();
      }
    }
  }
}

TEST(Factorization, Examples) {
  EXPECT_EQ(strings(lyndon_factorization(Word("0101001001")).factors),
            (std::vector<std::string>{"01", "01", "001", "001"}));
  EXPECT_EQ(strings(lyndon_factorization(Word("1100")).factors), (std::vector<std::string>{"1", "1", "0", "0"}));
  EXPECT_EQ(strings(lyndon_factorization(Word("0101001001"), LetterOrder::one_first).factors),
            (std::vector<std::string>{"0", "10100100", "1"}));
  EXPECT_EQ(lyndon_factorization(Word("")).size(), 0u);
}

TEST(Factorization, BoundariesAndOrder) {
  const auto f = lyndon_factorization(Word("0101001001"));
  EXPECT_EQ(f.boundaries, (std::vector<std::size_t>{0, 2, 4, 7}));
  EXPECT_EQ(f.end_of(3), 10u);
  EXPECT_EQ(f.order, LetterOrder::zero_first);
}

TEST(Factorization, MatchesMergingOracleAndIsUnique) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (const Word& w : oracle::all_words(n)) {
      for (LetterOrder order : {LetterOrder::zero_first, LetterOrder::one_first}) {
        const auto f = lyndon_factorization(w, order);
        ASSERT_EQ(f.factors, oracle::lyndon_factors_by_merging(w, order)) << w.str();
        Word joined;
        for (std::size_t i = 0; i < f.size(); ++i) {
          ASSERT_EQ(f.boundaries[i], joined.size());
          joined += f.factors[i];
        }
        ASSERT_EQ(joined, w);
      }
      if (n <= 10) ASSERT_EQ(oracle::count_lyndon_splittings(w), 1u) << w.str();
    }
  }
}

TEST(Factorization, LongRandomWords) {
  std::mt19937_64 rng(20261017);
  for (int trial = 0; trial < 200; ++trial) {
    std::string s(200 + rng() % 300, '0');
    for (char& c : s) c = rng() % 3 == 0 ? '1' : '0';
    const Word w(s);
    const auto f = lyndon_factorization(w);
    Word joined;
    for (std::size_t i = 0; i < f.size(); ++i) {
      ASSERT_TRUE(is_lyndon(f.factors[i]));
      if (i > 0) ASSERT_GE(f.factors[i - 1], f.factors[i]);
      joined += f.factors[i];
    }
    ASSERT_EQ(joined, w);
  }
}

TEST(Standard, Examples) {
  EXPECT_EQ(standard_factorization(Word("00100100101")), std::make_pair(Word("001"), Word("00100101")));
  EXPECT_EQ(standard_factorization(Word("01")), std::make_pair(Word("0"), Word("1")));
  EXPECT_EQ(standard_factorization(Word("00011")), std::make_pair(Word("0"), Word("0011")));
}

TEST(Standard, Errors) {
  EXPECT_THROW(standard_factorization(Word("0")), ContractError);
  EXPECT_THROW(standard_factorization(Word("10")), ContractError);
  EXPECT_THROW(standard_factorization(Word("0101")), ContractError);
}

TEST(Standard, SuffixIsLeastAndBothPartsLyndon) {
  for (std::size_t n = 2; n <= 16; ++n) {
    for (const Word& w : oracle::all_words(n)) {
      if (!oracle::lyndon(w)) continue;
      const auto [u, v] = standard_factorization(w);
      ASSERT_EQ(u + v, w);
      ASSERT_EQ(v, oracle::least_proper_suffix(w)) << w.str();
      ASSERT_TRUE(oracle::lyndon(u) && oracle::lyndon(v)) << w.str();
      ASSERT_LT(u, v);
    }
  }
}

}  // namespace
}  // namespace dcw
