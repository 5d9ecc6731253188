#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include <flatlab/error.hpp>
#include <flatlab/field.hpp>

#include "oracles.hpp"

using namespace flatlab;

namespace {

const std::vector<std::pair<unsigned, std::uint32_t>> kFields = {
    {2, 0x7}, {3, 0xB}, {4, 0x13}, {4, 0x1F}, {5, 0x25}, {6, 0x5B}, {7, 0x83}, {8, 0x11B}};

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Field, Irreducibility) {
  EXPECT_TRUE(is_irreducible(0x7));
  EXPECT_TRUE(is_irreducible(0x5B));
  EXPECT_TRUE(is_irreducible(0x1F));
  EXPECT_FALSE(is_irreducible(0x5));   // (x+1)^2
  EXPECT_FALSE(is_irreducible(0x59));  // divisible by x+1
  EXPECT_FALSE(is_irreducible(0x15));  // (x^2+x+1)^2
}

TEST(Field, SexticIsPrimitive) {
  Field f(6, 0x5B);
  EXPECT_TRUE(f.x_is_primitive());
  EXPECT_EQ(f.multiplicative_order(2), 63U);
}

TEST(Field, QuadraticIsPrimitive) { EXPECT_TRUE(Field(2, 0x7).x_is_primitive()); }

TEST(Field, PentanomialQuarticIsNotPrimitive) {
  Field f(4, 0x1F);
  EXPECT_FALSE(f.x_is_primitive());
  EXPECT_EQ(f.multiplicative_order(2), 5U);
  EXPECT_EQ(f.multiplicative_order(f.generator()), 15U);
}

TEST(Field, ConstructorErrors) {
  EXPECT_EQ(code_of([] { Field(6, 0x59); }), Errc::ReduciblePolynomial);
  EXPECT_EQ(code_of([] { Field(5, 0x5B); }), Errc::DegreeMismatch);
  EXPECT_EQ(code_of([] { Field(6, 0x5A); }), Errc::DegreeMismatch);
  EXPECT_EQ(code_of([] { Field(17, 0x2000B); }), Errc::DegreeMismatch);
}

TEST(Field, MultiplicationMatchesShiftAndAdd) {
  for (auto [n, poly] : kFields) {
    Field f(n, poly);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        ASSERT_EQ(f.mul(a, b), oracle::gf_mul(a, b, poly, n)) << n << " " << a << " " << b;
      }
    }
  }
}

TEST(Field, LagrangeExhaustive) {
  for (auto [n, poly] : kFields) {
    Field f(n, poly);
    for (std::uint32_t e = 1; e < f.order(); ++e) ASSERT_EQ(f.pow(e, f.order() - 1), 1U);
  }
}

TEST(Field, FrobeniusAdditivity) {
  for (auto [n, poly] : kFields) {
    if (n > 6) continue;
    Field f(n, poly);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        ASSERT_EQ(f.pow(a ^ b, 2), f.pow(a, 2) ^ f.pow(b, 2));
      }
    }
  }
}

TEST(Field, InverseAndLog) {
  Field f(8, 0x11B);
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
    EXPECT_EQ(f.antilog(f.log(a)), a);
  }
}

TEST(Univariate, CoprimeExponentsArePermutations) {
  for (auto [n, poly] : kFields) {
    Field f(n, poly);
    const std::uint32_t q1 = f.order() - 1;
    for (std::uint64_t d = 1; d < q1; ++d) {
      if (std::gcd<std::uint64_t>(d, q1) != 1) continue;
      const UnivariateTerm t = UnivariateTerm::monomial(d);
      auto table = univariate_to_table(f, std::span(&t, 1));
      std::set<std::uint32_t> values(table.table().begin(), table.table().end());
      ASSERT_EQ(values.size(), f.order()) << n << " x^" << d;
    }
  }
}

TEST(Univariate, GoldFixedPoints) {
  Field f(5, 0x25);
  const UnivariateTerm t = UnivariateTerm::monomial(3);
  auto g = univariate_to_table(f, std::span(&t, 1));
  EXPECT_EQ(g(0), 0U);
  EXPECT_EQ(g(1), 1U);
  EXPECT_EQ(g.n(), 5U);
  EXPECT_EQ(g.m(), 5U);
}

TEST(Univariate, IdentityMonomial) {
  Field f(6, 0x5B);
  const UnivariateTerm t = UnivariateTerm::monomial(1);
  auto id = univariate_to_table(f, std::span(&t, 1));
  for (std::uint32_t x = 0; x < 64; ++x) EXPECT_EQ(id(x), x);
}

TEST(Univariate, MatchesOracleWithCoefficients) {
  Field f(6, 0x5B);
  std::vector<UnivariateTerm> terms = {UnivariateTerm::monomial(3), UnivariateTerm::scaled(11, 5),
                                       UnivariateTerm::scaled(13, 9), {std::nullopt, 7}};
  auto table = univariate_to_table(f, terms);
  auto expect = oracle::univariate(0x5B, 6, {{0U, 3}, {11U, 5}, {13U, 9}, {std::nullopt, 7}});
  EXPECT_TRUE(std::equal(expect.begin(), expect.end(), table.table().begin()));
}

TEST(Univariate, ZeroExponentIsOne) {
  Field f(4, 0x13);
  const UnivariateTerm t = UnivariateTerm::monomial(0);
  auto one = univariate_to_table(f, std::span(&t, 1));
  for (std::uint32_t x = 0; x < 16; ++x) EXPECT_EQ(one(x), 1U);
}

TEST(Univariate, ExponentOutOfRange) {
  Field f(4, 0x13);
  const UnivariateTerm t = UnivariateTerm::monomial(16);
  EXPECT_EQ(code_of([&] { univariate_to_table(f, std::span(&t, 1)); }), Errc::ExponentOutOfRange);
}
