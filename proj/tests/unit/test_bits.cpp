#include <random>

#include <gtest/gtest.h>

#include <flatlab/bits.hpp>
#include <flatlab/error.hpp>
#include <flatlab/parallel.hpp>

using namespace flatlab;

TEST(Bits, DotAndParity) {
  EXPECT_EQ(dot(0b1011, 0b0110), 1U);
  EXPECT_EQ(dot(0b1011, 0b1001), 0U);
  EXPECT_EQ(parity(0), 0U);
  EXPECT_EQ(parity(0x8000000000000001ULL), 0U);
  EXPECT_EQ(parity(7), 1U);
}

TEST(BitMatrix, IdentityApply) {
  auto id = BitMatrix::identity(5);
  for (std::uint32_t x = 0; x < 32; ++x) EXPECT_EQ(id.apply(x), x);
  EXPECT_EQ(id.rank(), 5U);
}

TEST(BitMatrix, PermutationMovesBits) {
  auto p = BitMatrix::permutation({2, 3, 0, 1});
  EXPECT_EQ(p.apply(0b0001), 0b0100U);
  EXPECT_EQ(p.apply(0b0010), 0b1000U);
  EXPECT_EQ(p.apply(0b1100), 0b0011U);
}

TEST(BitMatrix, RandomInvertibleRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto a = BitMatrix::random_invertible(6, rng);
    ASSERT_TRUE(a.invertible());
    auto inv = a.inverse();
    EXPECT_EQ(a * inv, BitMatrix::identity(6));
    for (std::uint32_t x = 0; x < 64; ++x) EXPECT_EQ(inv.apply(a.apply(x)), x);
  }
}

TEST(BitMatrix, SingularInverseThrows) {
  auto z = BitMatrix::zero(3, 3);
  EXPECT_EQ(z.rank(), 0U);
  try {
    (void)z.inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularMatrix);
  }
}

TEST(BitMatrix, ProductMatchesComposition) {
  std::mt19937_64 rng(3);
  auto a = BitMatrix::random(4, 5, rng);
  auto b = BitMatrix::random(5, 3, rng);
  auto ab = a * b;
  for (std::uint32_t x = 0; x < 8; ++x) EXPECT_EQ(ab.apply(x), a.apply(b.apply(x)));
}

TEST(Parallel, ChunksCoverRangeOnce) {
  const unsigned saved = worker_count();
  set_worker_count(4);
  std::vector<int> hits(1000, 0);
  parallel_for(0, hits.size(), [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
    for (auto i = lo; i < hi; ++i) ++hits[i];
  });
  for (int h : hits) EXPECT_EQ(h, 1);
  set_worker_count(saved);
}

TEST(Errors, KindsMapToExitClasses) {
  EXPECT_EQ(kind_of(Errc::ParseError), ErrorKind::Input);
  EXPECT_EQ(kind_of(Errc::DimensionTooLarge), ErrorKind::Scale);
  EXPECT_EQ(kind_of(Errc::NonIntegerResult), ErrorKind::Internal);
  EXPECT_EQ(to_string(Errc::NotBent), "NotBent");
}
