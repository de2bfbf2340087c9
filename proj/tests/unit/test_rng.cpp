#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "lpball/rng.hpp"

namespace {

using lpball::philox4x32;
using lpball::RandomStream;

TEST(Philox, KnownAnswerZero) {
  const auto out = philox4x32({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out[0], 0x6627e8d5u);
  EXPECT_EQ(out[1], 0xe169c58du);
  EXPECT_EQ(out[2], 0xbc57ac4cu);
  EXPECT_EQ(out[3], 0x9b00dbd8u);
}

TEST(Philox, KnownAnswerPi) {
  const auto out = philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                              {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out[0], 0xd16cfe09u);
  EXPECT_EQ(out[1], 0x94fdccebu);
  EXPECT_EQ(out[2], 0x5001e420u);
  EXPECT_EQ(out[3], 0x24126ea1u);
}

TEST(Philox, KnownAnswerOnes) {
  const auto out = philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                              {0xffffffff, 0xffffffff});
  EXPECT_EQ(out[0], 0x408f276du);
  EXPECT_EQ(out[1], 0x41c83b0eu);
  EXPECT_EQ(out[2], 0xa20bc7c6u);
  EXPECT_EQ(out[3], 0x6d5451fdu);
}

// The stream is the block function applied to consecutive counters, however
// many blocks a refill computes.
TEST(RandomStream, MatchesBlockFunction) {
  const std::uint64_t seed = 0x1234567890abcdefull;
  const std::uint64_t id = 42;
  RandomStream stream(seed, id);
  for (std::uint32_t block = 0; block < 11; ++block) {
    const auto out = philox4x32({block, 0, static_cast<std::uint32_t>(id), 0},
                                {static_cast<std::uint32_t>(seed),
                                 static_cast<std::uint32_t>(seed >> 32)});
    EXPECT_EQ(stream(), (std::uint64_t{out[1]} << 32) | out[0]);
    EXPECT_EQ(stream(), (std::uint64_t{out[3]} << 32) | out[2]);
  }
}

TEST(RandomStream, DeterministicAndDistinct) {
  RandomStream a(7, 3);
  RandomStream b(7, 3);
  RandomStream c(7, 4);
  RandomStream d(8, 3);
  int same_c = 0;
  int same_d = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto va = a();
    EXPECT_EQ(va, b());
    same_c += va == c();
    same_d += va == d();
  }
  EXPECT_EQ(same_c, 0);
  EXPECT_EQ(same_d, 0);
}

TEST(RandomStream, UniformInOpenInterval) {
  RandomStream s(1, 0);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // mean within 5 standard errors of 1/2
  EXPECT_NEAR(sum / n, 0.5, 5.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST(DeriveSeed, TagsSeparate) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::uint64_t tag = 0; tag < 50; ++tag) seen.insert(lpball::derive_seed(seed, tag));
  }
  EXPECT_EQ(seen.size(), 2500u);
}

}  // namespace
