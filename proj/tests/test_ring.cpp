#include <random>

#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace fcc;
using testutil::W;

TEST(HomWeight, SymbolValues) {
  const auto s3 = RingParams::make(3);
  EXPECT_EQ(hom_weight_symbol(0, s3), 0);
  EXPECT_EQ(hom_weight_symbol(2, RingParams::make(2)), 2);
  EXPECT_EQ(hom_weight_symbol(3, s3), 1);
  EXPECT_EQ(hom_weight_symbol(4, s3), 2);
}

TEST(HomWeight, MatchesOracleForSmallRings) {
  for (int s = 1; s <= 4; ++s) {
    const auto p = RingParams::make(s);
    for (Symbol a = 0; a < p.modulus(); ++a) EXPECT_EQ(hom_weight_symbol(a, p), oracle::weight(static_cast<int>(a), s)) << s << " " << a;
  }
}

TEST(HomWeight, LeeOnZ4) {
  for (Symbol a = 0; a < 4; ++a) EXPECT_EQ(hom_weight_symbol(a, RingParams::make(2)), oracle::lee_z4(static_cast<int>(a)));
}

TEST(HomWeight, BinaryRingIsTwiceHamming) {
  EXPECT_EQ(hom_weight_symbol(1, RingParams::make(1)), 2);
  EXPECT_EQ(hom_weight(W(1, {1, 0, 1})), 4);
}

TEST(HomWeight, OutOfRangeSymbolRejected) {
  try {
    hom_weight_symbol(4, RingParams::make(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
  EXPECT_THROW(W(2, {1, 4}), Error);
  EXPECT_THROW(RingParams::make(0), Error);
}

TEST(HomWeight, Words) {
  EXPECT_EQ(hom_weight(W(2, {0, 0, 0})), 0);
  EXPECT_EQ(hom_weight(W(2, {2, 2, 0})), 4);
  EXPECT_EQ(hom_weight(W(2, {1, 2, 3})), 4);
}

TEST(HomDistance, Examples) {
  EXPECT_EQ(hom_distance(W(2, {1, 3, 2}), W(2, {1, 3, 2})), 0);
  EXPECT_EQ(hom_distance(W(2, {2, 0, 0}), W(2, {0, 2, 0})), 4);
  EXPECT_EQ(hom_distance(W(2, {1}), W(2, {3})), 2);
}

TEST(HomDistance, ShapeMismatch) {
  try {
    hom_distance(W(2, {1}), W(2, {1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Shape);
  }
  EXPECT_THROW(hom_distance(W(2, {1}), W(3, {1})), Error);
}

TEST(HomDistance, LeeOnZ4Exhaustive) {
  for (std::size_t k = 1; k <= 2; ++k) {
    const auto words = all_words(RingParams::make(2), k);
    for (const auto& x : words)
      for (const auto& y : words) {
        int lee = 0;
        for (std::size_t i = 0; i < k; ++i) lee += oracle::lee_z4((static_cast<int>(x[i]) - static_cast<int>(y[i]) + 4) % 4);
        EXPECT_EQ(hom_distance(x, y), lee);
      }
  }
}

TEST(HomDistance, MetricAxiomsRandom) {
  std::mt19937 rng(7);
  for (int s = 1; s <= 4; ++s) {
    const auto p = RingParams::make(s);
    std::uniform_int_distribution<Symbol> sym(0, p.mask());
    const auto draw = [&](std::size_t n) {
      std::vector<Symbol> v(n);
      for (auto& a : v) a = sym(rng);
      return Word(p, v);
    };
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + trial % 6;
      const Word x = draw(n), y = draw(n), z = draw(n), v = draw(n);
      EXPECT_EQ(hom_distance(x, y), hom_distance(y, x));
      EXPECT_EQ(hom_distance(x, y) == 0, x == y);
      EXPECT_LE(hom_distance(x, z), hom_distance(x, y) + hom_distance(y, z));
      EXPECT_EQ(hom_distance(x + v, y + v), hom_distance(x, y));
      EXPECT_EQ(hom_distance(x, y), oracle::distance(testutil::vec(x), testutil::vec(y), s));
      EXPECT_LE(hom_weight(x), 2 * static_cast<int>(n));
    }
  }
}

TEST(HomWeight, TotalOverSpace) {
  for (int s = 1; s <= 4; ++s)
    for (std::size_t k = 1; static_cast<int>(k) * s <= 8; ++k) {
      long total = 0;
      for (const auto& x : all_words(RingParams::make(s), k)) total += hom_weight(x);
      EXPECT_EQ(total, static_cast<long>(k) * (1L << (s * static_cast<int>(k))));
    }
}

TEST(WordIndex, RoundTripAndOrder) {
  const auto p = RingParams::make(3);
  Word prev;
  for (std::uint64_t i = 0; i < space_size(p, 3); ++i) {
    const Word w = word_at(p, 3, i);
    EXPECT_EQ(word_index(w), i);
    if (i > 0) EXPECT_LT(prev, w);
    prev = w;
  }
}

TEST(Word, Arithmetic) {
  const Word x = W(2, {1, 3, 2}), y = W(2, {3, 3, 1});
  EXPECT_EQ(x + y, W(2, {0, 2, 3}));
  EXPECT_EQ(x - y, W(2, {2, 0, 1}));
  EXPECT_EQ(-x, W(2, {3, 1, 2}));
  EXPECT_EQ(x.scaled(2), W(2, {2, 2, 0}));
  EXPECT_EQ(x.concat(y).size(), 6u);
  EXPECT_EQ(x.concat(y).slice(3, 3), y);
  EXPECT_EQ(x.to_string(), "(1,3,2)");
}

TEST(PackedSpace, AgreesWithWordArithmetic) {
  std::mt19937 rng(11);
  for (int s = 1; s <= 4; ++s)
    for (std::size_t n = 1; static_cast<int>(n) * s <= 16; ++n) {
      const auto p = RingParams::make(s);
      const detail::PackedSpace space(p, n);
      std::uniform_int_distribution<std::uint64_t> pick(0, space_size(p, n) - 1);
      for (int trial = 0; trial < 50; ++trial) {
        const std::uint64_t a = pick(rng), b = pick(rng);
        const Word wa = word_at(p, n, a), wb = word_at(p, n, b);
        EXPECT_EQ(word_at(p, n, space.add(a, b)), wa + wb);
        EXPECT_EQ(word_at(p, n, space.sub(a, b)), wa - wb);
        EXPECT_EQ(space.weight(a), hom_weight(wa));
      }
    }
}

TEST(Matrix, ApplyAndLeftApply) {
  const Matrix g = Matrix::from_rows(RingParams::make(2), {{2, 2, 0}, {0, 2, 2}});
  EXPECT_EQ(g.left_apply(W(2, {1, 0})), W(2, {2, 2, 0}));
  EXPECT_EQ(g.left_apply(W(2, {1, 1})), W(2, {2, 0, 2}));
  EXPECT_EQ(g.apply(W(2, {1, 1, 1})), W(2, {0, 0}));
  EXPECT_THROW(g.apply(W(2, {1, 1})), Error);
}

TEST(MinDistance, Examples) {
  const auto p = RingParams::make(2);
  EXPECT_EQ(min_distance(Code(p, {W(2, {0, 0, 0}), W(2, {2, 2, 0}), W(2, {0, 2, 2}), W(2, {2, 0, 2})})), 4);
  EXPECT_EQ(min_distance(Code(p, {W(2, {2, 0, 0}), W(2, {0, 2, 0}), W(2, {0, 0, 2})})), 4);
  EXPECT_EQ(min_distance(Code(p, {W(2, {0}), W(2, {1})})), 1);
}

TEST(MinDistance, Errors) {
  const auto p = RingParams::make(2);
  EXPECT_THROW(Code(p, {W(2, {1}), W(2, {1})}), Error);
  EXPECT_THROW(Code(p, {W(2, {1}), W(2, {1, 0})}), Error);
  EXPECT_THROW(min_distance(Code(p, {W(2, {1})})), Error);
}

TEST(Ball, Examples) {
  EXPECT_EQ(ball(W(2, {1, 2}), 0), std::vector<Word>{W(2, {1, 2})});
  EXPECT_EQ(ball(W(2, {0}), 1), (std::vector<Word>{W(2, {0}), W(2, {1}), W(2, {3})}));
  const auto b8 = ball(W(3, {0}), 1);
  EXPECT_EQ(b8.size(), 7u);
  EXPECT_EQ(std::find(b8.begin(), b8.end(), W(3, {4})), b8.end());
}

TEST(Sphere, Examples) {
  EXPECT_EQ(sphere(W(2, {3, 1}), 0), std::vector<Word>{W(2, {3, 1})});
  EXPECT_EQ(sphere(W(2, {0, 0}), 1), (std::vector<Word>{W(2, {0, 1}), W(2, {0, 3}), W(2, {1, 0}), W(2, {3, 0})}));
}

TEST(Ball, MatchesOracleAndSpheres) {
  std::mt19937 rng(3);
  for (int s = 1; s <= 3; ++s)
    for (int n = 1; n * s <= 6; ++n) {
      const auto p = RingParams::make(s);
      std::uniform_int_distribution<std::uint64_t> pick(0, space_size(p, static_cast<std::size_t>(n)) - 1);
      for (int trial = 0; trial < 5; ++trial) {
        const Word c = word_at(p, static_cast<std::size_t>(n), pick(rng));
        for (int rho = 0; rho <= 2 * n; ++rho) {
          const auto got = ball(c, rho);
          std::vector<oracle::Vec> got_v;
          for (const auto& w : got) got_v.push_back(testutil::vec(w));
          EXPECT_EQ(got_v, oracle::ball(testutil::vec(c), rho, s));
          std::vector<Word> shells;
          for (int i = 0; i <= rho; ++i)
            for (auto& w : sphere(c, i)) shells.push_back(w);
          std::sort(shells.begin(), shells.end());
          EXPECT_EQ(shells, got);
        }
      }
    }
}

TEST(Ball, CapExceeded) {
  EnumLimits small;
  small.max_word_bits = 8;
  try {
    ball(Word(RingParams::make(2), std::vector<Symbol>(5, 0)), 1, small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
  EXPECT_THROW(ball(W(2, {0}), -1), Error);
}
