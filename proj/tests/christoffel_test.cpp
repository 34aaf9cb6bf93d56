#include "dcw/christoffel.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "dcw/errors.hpp"
#include "dcw/lyndon.hpp"
#include "oracles.hpp"

namespace dcw {
namespace {

// Lower mechanical word: the prefix of length i holds floor(i*b/(a+b)) ones.
Word mechanical_lower(std::size_t a, std::size_t b) {
  const std::size_t n = a + b;
  std::string s;
  for (std::size_t i = 1; i <= n; ++i) s += (i * b / n - (i - 1) * b / n) ? '1' : '0';
  return Word(s);
}

TEST(Christoffel, Examples) {
  EXPECT_EQ(christoffel_lower({7, 4}), Word("00100100101"));
  EXPECT_EQ(christoffel_upper({7, 4}), Word("10100100100"));
  EXPECT_EQ(christoffel_lower({3, 0}), Word("000"));
  EXPECT_EQ(christoffel_upper({3, 0}), Word("000"));
  EXPECT_EQ(christoffel_lower({0, 2}), Word("11"));
  EXPECT_EQ(christoffel_lower({6, 4}), Word("0010100101"));
  EXPECT_EQ(christoffel_lower({3, 2}), Word("00101"));
  EXPECT_THROW(christoffel_lower({0, 0}), ContractError);
  EXPECT_THROW(christoffel_upper({0, 0}), ContractError);
}

TEST(Christoffel, MatchesMechanicalAndBalancedLyndonOracles) {
  for (std::size_t a = 0; a <= 20; ++a) {
    for (std::size_t b = 0; a + b <= 20; ++b) {
      if (a + b == 0) continue;
      const Word w = christoffel_lower({a, b});
      ASSERT_EQ(w, mechanical_lower(a, b)) << a << "," << b;
      ASSERT_EQ(christoffel_upper({a, b}), reverse(w));
      ASSERT_EQ(parikh(w), (ParikhVector{a, b}));
      if (std::gcd(a, b) == 1 && a + b <= 14) {
        ASSERT_EQ(w, oracle::balanced_lyndon(a, b)) << a << "," << b;
      }
    }
  }
}

TEST(Endpoint, WalksThePath) {
  EXPECT_EQ(endpoint(Word("001")), (LatticePoint{2, 1}));
  EXPECT_EQ(endpoint(Word("")), (LatticePoint{0, 0}));
}

TEST(Classify, Examples) {
  auto c = classify_christoffel(Word("00100100101"));
  EXPECT_EQ(c.kind, ChristoffelKind::primitive_lower);
  EXPECT_EQ(c.exponent, 1u);

  c = classify_christoffel(Word("100100"));
  EXPECT_EQ(c.kind, ChristoffelKind::power_of_primitive);
  ASSERT_TRUE(c.root);
  EXPECT_EQ(*c.root, Word("100"));
  EXPECT_EQ(c.exponent, 2u);

  c = classify_christoffel(Word("0011"));
  EXPECT_EQ(c.kind, ChristoffelKind::not_christoffel);
  EXPECT_FALSE(c.root);

  EXPECT_EQ(classify_christoffel(Word("10100100100")).kind, ChristoffelKind::primitive_upper);
  EXPECT_EQ(classify_christoffel(Word("0")).kind, ChristoffelKind::both);
  c = classify_christoffel(Word("111"));
  EXPECT_EQ(c.kind, ChristoffelKind::both);
  EXPECT_EQ(*c.root, Word("1"));
  EXPECT_EQ(c.exponent, 3u);
}

TEST(Classify, PrimitiveLowerIffBalancedLyndon) {
  for (std::size_t n = 1; n <= 14; ++n) {
    for (const Word& w : oracle::all_words(n)) {
      const bool lower = oracle::balanced(w) && oracle::lyndon(w);
      const bool upper = oracle::balanced(w) && oracle::lyndon(w, LetterOrder::one_first);
      ASSERT_EQ(is_primitive_lower_christoffel(w), lower) << w.str();
      ASSERT_EQ(is_primitive_upper_christoffel(w), upper) << w.str();
      const auto c = classify_christoffel(w);
      if (n == 1) {
        ASSERT_EQ(c.kind, ChristoffelKind::both);
      } else if (lower) {
        ASSERT_EQ(c.kind, ChristoffelKind::primitive_lower);
      } else if (upper) {
        ASSERT_EQ(c.kind, ChristoffelKind::primitive_upper);
      } else if (c.kind == ChristoffelKind::power_of_primitive || c.kind == ChristoffelKind::both) {
        ASSERT_TRUE(c.root);
        ASSERT_EQ(c.root->power(c.exponent), w);
        ASSERT_GE(c.exponent, 2u);
      } else {
        ASSERT_EQ(c.kind, ChristoffelKind::not_christoffel) << w.str();
        const auto p = parikh(w);
        ASSERT_NE(w, christoffel_lower(p));
        ASSERT_NE(w, christoffel_upper(p));
      }
    }
  }
}

TEST(Central, Examples) {
  EXPECT_EQ(central_word({7, 4}), Word("010010010"));
  EXPECT_EQ(central_word({1, 1}), Word(""));
  EXPECT_EQ(central_word({2, 1}), Word("0"));
  EXPECT_THROW(central_word({4, 2}), ContractError);
  EXPECT_THROW(central_word({3, 0}), ContractError);

  EXPECT_TRUE(is_central(Word("010010")));
  EXPECT_TRUE(is_central(Word("010010010")));
  EXPECT_FALSE(is_central(Word("0011")));
  EXPECT_TRUE(is_central(Word("")));
  EXPECT_TRUE(is_central(Word("000")));
}

TEST(Central, IffZeroCOneIsChristoffel) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const Word& w : oracle::all_words(n)) {
      const Word framed = Word("0") + w + Word("1");
      const bool expected = oracle::balanced(framed) && oracle::lyndon(framed);
      ASSERT_EQ(is_central(w), expected) << w.str();
    }
  }
}

TEST(CentralDecomposition, Examples) {
  auto d = central_decomposition(Word("010010"));
  ASSERT_FALSE(d.degenerate);
  EXPECT_EQ(*d.left_pal, Word("010"));
  EXPECT_EQ(*d.right_pal, Word("0"));

  d = central_decomposition(Word("000"));
  EXPECT_TRUE(d.degenerate);
  EXPECT_FALSE(d.left_pal);

  d = central_decomposition(Word("010010010"));
  EXPECT_EQ(*d.left_pal, Word("010010"));
  EXPECT_EQ(*d.right_pal, Word("0"));

  EXPECT_THROW(central_decomposition(Word("0011")), ContractError);
}

TEST(CentralDecomposition, BothEquationsHold) {
  for (std::size_t n = 2; n <= 16; ++n) {
    for (const Word& c : oracle::all_words(n)) {
      if (!is_central(c)) continue;
      const auto d = central_decomposition(c);
      if (d.degenerate) {
        ASSERT_TRUE(c.count(0) == 0 || c.count(1) == 0);
        continue;
      }
      const Word& p = *d.left_pal;
      const Word& q = *d.right_pal;
      ASSERT_TRUE(is_palindrome(p) && is_palindrome(q));
      ASSERT_EQ(p + Word("01") + q, c);
      ASSERT_EQ(q + Word("10") + p, c);
    }
  }
}

TEST(Factorizations, Examples) {
  auto f = factorizations(Word("00100100101"));
  EXPECT_EQ(f.standard, std::make_pair(Word("001"), Word("00100101")));
  EXPECT_EQ(f.palindromic, std::make_pair(Word("00100100"), Word("101")));
  EXPECT_EQ(f.points.s_point, (LatticePoint{2, 1}));
  EXPECT_EQ(f.points.s_prime_point, (LatticePoint{6, 2}));

  f = factorizations(Word("0001"));
  EXPECT_EQ(f.standard, std::make_pair(Word("0"), Word("001")));
  EXPECT_EQ(f.palindromic, std::make_pair(Word("000"), Word("1")));

  f = factorizations(Word("01"));
  EXPECT_EQ(f.standard, std::make_pair(Word("0"), Word("1")));
  EXPECT_EQ(f.palindromic, std::make_pair(Word("0"), Word("1")));

  EXPECT_THROW(factorizations(Word("0011")), ContractError);
  EXPECT_THROW(factorizations(Word("0")), ContractError);
}

// S is the path point closest to the segment and S' the farthest, measured
// by |b*x - a*y| over interior path points.
TEST(Factorizations, PointsAreClosestAndFarthest) {
  for (std::size_t a = 1; a <= 25; ++a) {
    for (std::size_t b = 1; a + b <= 30; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Word w = christoffel_lower({a, b});
      const auto f = factorizations(w);
      ASSERT_EQ(f.standard.first + f.standard.second, w);
      ASSERT_EQ(f.palindromic.first + f.palindromic.second, w);
      ASSERT_EQ(f.standard, standard_factorization(w));
      ASSERT_TRUE(is_palindrome(f.palindromic.first) && is_palindrome(f.palindromic.second));
      std::int64_t lo = INT64_MAX;
      std::int64_t hi = -1;
      std::size_t lo_at = 0;
      std::size_t hi_at = 0;
      for (std::size_t i = 1; i < w.size(); ++i) {
        const auto pt = endpoint(w.prefix(i));
        const std::int64_t d = static_cast<std::int64_t>(b * pt.x) - static_cast<std::int64_t>(a * pt.y);
        if (d < lo) lo = d, lo_at = i;
        if (d > hi) hi = d, hi_at = i;
      }
      ASSERT_EQ(f.standard.first.size(), lo_at) << a << "," << b;
      ASSERT_EQ(f.palindromic.first.size(), hi_at) << a << "," << b;
      ASSERT_EQ(f.points.s_point, endpoint(f.standard.first));
      ASSERT_EQ(f.points.s_prime_point, endpoint(f.palindromic.first));
    }
  }
}

TEST(CentralPeriods, Examples) {
  EXPECT_EQ(central_periods({7, 4}), std::make_pair(std::uint64_t{8}, std::uint64_t{3}));
  EXPECT_EQ(central_periods({1, 1}), std::make_pair(std::uint64_t{1}, std::uint64_t{1}));
  EXPECT_EQ(central_periods({2, 1}), std::make_pair(std::uint64_t{2}, std::uint64_t{1}));
  EXPECT_THROW(central_periods({4, 2}), ContractError);
}

TEST(CentralPeriods, AreInversesAndPeriodsOfC) {
  for (std::uint64_t a = 1; a <= 30; ++a) {
    for (std::uint64_t b = 1; a + b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto [ia, ib] = central_periods({a, b});
      const std::uint64_t n = a + b;
      ASSERT_EQ(a * ia % n, 1 % n);
      ASSERT_EQ(b * ib % n, 1 % n);
      const Word c = central_word({a, b});
      if (c.size() >= 2) {
        ASSERT_TRUE(has_period(c, ia));
        ASSERT_TRUE(has_period(c, ib));
        ASSERT_EQ(ia + ib, c.size() + 2);
      }
    }
  }
}

}  // namespace
}  // namespace dcw
