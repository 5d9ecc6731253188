#include <gtest/gtest.h>

#include <flatlab/flats.hpp>
#include <flatlab/spectra.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace flatlab;

namespace {

void expect_table(const VectorialFunc& f, const std::vector<std::uint32_t>& expect) {
  ASSERT_EQ(f.size(), expect.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) ASSERT_EQ(f(x), expect[x]) << x;
}

}  // namespace

TEST(Fixtures, UnivariateFilesMatchOracle) {
  expect_table(fixtures::gold5(), oracle::univariate(0x25, 5, {{0U, 3}}));
  expect_table(fixtures::gold6(), oracle::univariate(0x5B, 6, {{0U, 3}}));
  expect_table(fixtures::dillon_sextic(),
               oracle::univariate(0x5B, 6, {{0U, 3}, {11U, 5}, {13U, 9}, {0U, 17}, {11U, 33}, {0U, 48}}));
  expect_table(fixtures::kim(), oracle::univariate(0x5B, 6, {{0U, 3}, {0U, 10}, {1U, 24}}));
}

TEST(Fixtures, Bent42Coordinates) {
  const auto& f = fixtures::bent42();
  for (std::uint32_t x = 0; x < 16; ++x) {
    const unsigned x1 = x & 1, x2 = x >> 1 & 1, x3 = x >> 2 & 1, x4 = x >> 3 & 1;
    const unsigned lo = (x1 & x2) ^ (x3 & x4);
    const unsigned hi = (x1 & x2) ^ (x1 & x4) ^ (x2 & x3);
    ASSERT_EQ(f(x), lo | hi << 1);
  }
}

// A fixture that is not given in closed form is accepted only if it is an
// APN quadratic function with the expected nonvanishing-flat statistics.
TEST(Fixtures, KimProvenanceGate) {
  const auto& k = fixtures::kim();
  EXPECT_TRUE(is_apn(k));
  EXPECT_EQ(degree(k), 2U);
  auto fam = enumerate_flats(k);
  unsigned nine = 0, thirteen = 0;
  for (std::uint32_t v = 1; v < 64; ++v) {
    auto r = summarize(fam.nonvanishing(v)).regular_degree();
    ASSERT_TRUE(r.has_value());
    nine += *r == 9;
    thirteen += *r == 13;
  }
  EXPECT_EQ(nine, 42U);
  EXPECT_EQ(thirteen, 21U);
}

TEST(Fixtures, DillonPermutationGate) {
  const auto& g = fixtures::dillon_perm();
  EXPECT_TRUE(is_apn(g));
  std::vector<bool> seen(64);
  for (std::uint32_t x = 0; x < 64; ++x) seen[g(x)] = true;
  EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 64);
  auto kim_walsh = extended_walsh_multiset(WalshTable(fixtures::kim()));
  auto abs_ms = [](const Multiset& ms) {
    Multiset out;
    for (auto [v, c] : ms) out[v < 0 ? -v : v] += c;
    return out;
  };
  EXPECT_EQ(abs_ms(extended_walsh_multiset(WalshTable(g))), abs_ms(kim_walsh));
  auto fam = enumerate_flats(g);
  unsigned thirteen = 0;
  for (std::uint32_t v = 1; v < 64; ++v) thirteen += summarize(fam.nonvanishing(v)).regular_degree() == 13U;
  EXPECT_EQ(thirteen, 7U);
}
