#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include <flatlab/designs.hpp>
#include <flatlab/error.hpp>
#include <flatlab/flats.hpp>
#include <flatlab/spectra.hpp>

#include "builders.hpp"
#include "compare.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace flatlab;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

std::uint64_t choose(std::uint64_t n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Checks replication and block-count identities for a verified 2-design.
void expect_two_design_identities(const IncidenceStructure& s, std::uint64_t lambda) {
  const std::uint64_t v = s.points();
  const std::uint64_t k = s.block_size();
  auto r = is_t_design(s, 1);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * (k - 1), lambda * (v - 1));
  EXPECT_EQ(s.block_count() * choose(k, 2), lambda * choose(v, 2));
  EXPECT_EQ(s.block_count() * k, *r * v);
}

std::vector<std::uint32_t> random_perm(std::uint32_t v, std::mt19937_64& rng) {
  std::vector<std::uint32_t> p(v);
  std::iota(p.begin(), p.end(), 0U);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(TDesign, VfOfF4) {
  auto vf = vanishing_flats(fixtures::f4());
  EXPECT_EQ(is_t_design(vf, 1), 15U);
  EXPECT_EQ(is_t_design(vf, 2), 3U);
  EXPECT_FALSE(is_t_design(vf, 3).has_value());
  expect_two_design_identities(vf, 3);
  auto r = design_report(vf);
  EXPECT_EQ(r.t, 2U);
  EXPECT_EQ(r.lambda, 3U);
  EXPECT_EQ(r.r, 15U);
  EXPECT_EQ(r.b, 60U);
  EXPECT_TRUE(r.is_design(2, 3));
}

TEST(TDesign, EmptyIsTrivialDesign) {
  IncidenceStructure empty(64, 4);
  for (unsigned t = 1; t <= 3; ++t) EXPECT_EQ(is_t_design(empty, t), 0U);
}

TEST(TDesign, MatchesOracle) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 30; ++i) {
    auto f = VectorialFunc::random(4, 1 + i % 3, rng);
    auto fam = enumerate_flats(f);
    for (unsigned t = 1; t <= 2; ++t) {
      ASSERT_EQ(is_t_design(fam.vf, t), oracle::design_lambda(support::block_set(fam.vf), 16, t));
    }
  }
}

TEST(TDesign, Arguments) {
  auto vf = vanishing_flats(fixtures::f4());
  EXPECT_EQ(code_of([&] { is_t_design(vf, 0); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([&] { is_t_design(vf, 5); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([&] { is_t_design(vf, 4); }), Errc::TooLarge);
  IncidenceStructure big(kMaxTripleCoveragePoints * 2, 4, {0, 1, 2, 3});
  EXPECT_EQ(code_of([&] { is_t_design(big, 3); }), Errc::TooLarge);
  auto r = design_report(big);
  EXPECT_EQ(r.t, 0U);
}

TEST(Union, LambdaAdds) {
  auto fam = enumerate_flats(fixtures::f4());
  auto u = union_disjoint(fam.vf, fam.nonvanishing(1));
  EXPECT_EQ(u.block_count(), 140U);
  EXPECT_EQ(is_t_design(u, 2), 7U);
  EXPECT_EQ(is_t_design(u, 3), 1U);
  EXPECT_EQ(u, sqs(4));
  EXPECT_EQ(code_of([&] { union_disjoint(fam.vf, fam.vf); }), Errc::OverlappingBlocks);
  EXPECT_EQ(code_of([&] { union_disjoint(fam.vf, IncidenceStructure(32, 4)); }), Errc::MismatchedPoints);
}

TEST(Partition, Verification) {
  auto fam = enumerate_flats(fixtures::f4());
  EXPECT_TRUE(verify_partition(sqs(4), {fam.vf, fam.nonvanishing(1)}));
  EXPECT_FALSE(verify_partition(sqs(4), {fam.vf}));
  EXPECT_FALSE(verify_partition(sqs(4), {fam.vf, fam.vf, fam.nonvanishing(1)}));
}

TEST(ExtensionPartition, F4ToBent42) {
  auto rep = verify_extension_partition(fixtures::f4(), {fixtures::bent42()});
  ASSERT_EQ(rep.levels.size(), 1U);
  EXPECT_EQ(rep.levels[0].d.block_count(), 40U);
  EXPECT_EQ(rep.levels[0].lambda, 2U);
  EXPECT_EQ(rep.levels[0].expected_blocks, 40U);
  EXPECT_EQ(is_t_design(rep.levels[0].d, 2), 2U);
  expect_two_design_identities(rep.levels[0].d, 2);
}

TEST(ExtensionPartition, TrivialChain) {
  auto rep = verify_extension_partition(fixtures::f4(), {});
  EXPECT_TRUE(rep.levels.empty());
}

TEST(ExtensionPartition, Failures) {
  auto not_bent = concat(fixtures::f4(), affine_boolean(4, 1, 0));
  EXPECT_EQ(code_of([&] { verify_extension_partition(fixtures::f4(), {not_bent}); }), Errc::NotBentInChain);
  auto swapped = concat(complement_project(fixtures::bent42(), 1), fixtures::f4());
  EXPECT_EQ(code_of([&] { verify_extension_partition(fixtures::f4(), {swapped}); }), Errc::InvalidArgument);
}

TEST(ExtensionPartition, SixVariableChain) {
  auto full = builders::field_product(3, 0xB);
  auto f1 = builders::truncate(full, 1);
  auto rep = verify_extension_partition(f1, {builders::truncate(full, 2), full});
  ASSERT_EQ(rep.levels.size(), 2U);
  EXPECT_EQ(rep.levels[0].lambda, 8U);
  EXPECT_EQ(rep.levels[1].lambda, 4U);
}

TEST(Translation, F4) {
  auto d = translation_design(fixtures::f4());
  EXPECT_EQ(d.block_size(), 6U);
  EXPECT_EQ(d.block_count(), 16U);
  EXPECT_EQ(is_t_design(d, 2), 2U);
  expect_two_design_identities(d, 2);
  auto c = translation_design(fixtures::f4() ^ VectorialFunc::constant(4, 1, 1));
  EXPECT_EQ(c.block_size(), 10U);
  EXPECT_EQ(is_t_design(c, 2), 6U);
  EXPECT_FALSE(is_t_design(translation_design(affine_boolean(4, 1, 0)), 2).has_value());
  EXPECT_EQ(code_of([] { translation_design(VectorialFunc::constant(4, 1, 0)); }), Errc::EmptySupport);
}

TEST(Translation, TwoDesignIffBent) {
  std::mt19937_64 rng(20);
  std::vector<VectorialFunc> inputs = {fixtures::f4(), component(fixtures::bent42(), 2),
                                       component(fixtures::bent42(), 3), builders::random_mm(3, rng)};
  for (int i = 0; i < 100; ++i) inputs.push_back(VectorialFunc::random_of_degree(4, 1, 2 + i % 3, rng));
  unsigned bent = 0;
  for (const auto& f : inputs) {
    if (f == VectorialFunc::constant(f.n(), 1, 0)) continue;
    const bool b = is_bent(f);
    bent += b;
    ASSERT_EQ(is_t_design(translation_design(f), 2).has_value(), b);
  }
  EXPECT_GT(bent, 10U);
}

TEST(Addition, BothConstructionsAgree) {
  std::mt19937_64 rng(30);
  std::vector<VectorialFunc> bents = {fixtures::f4(), component(fixtures::bent42(), 2),
                                      component(fixtures::bent42(), 3), builders::random_mm(3, rng),
                                      builders::random_mm(3, rng),
                                      component(builders::field_product(3, 0xB), 5)};
  auto gold = analyze(fixtures::gold6());
  for (std::uint32_t b = 1; b < 64; ++b) {
    if (gold.plateau_profile[b - 1] == 0U) {
      bents.push_back(component(fixtures::gold6(), b));
      break;
    }
  }
  for (const auto& f : bents) {
    auto direct = addition_design(f);
    ASSERT_EQ(direct, addition_design_via_dual(f));
    ASSERT_TRUE(is_t_design(direct, 2).has_value());
  }
  auto d = addition_design(fixtures::f4());
  EXPECT_EQ(d.block_size(), 6U);
  EXPECT_EQ(d.block_count(), 16U);
  EXPECT_EQ(is_t_design(d, 2), 2U);
  EXPECT_EQ(code_of([] { addition_design_via_dual(affine_boolean(4, 3, 0)); }), Errc::NotBent);
}

TEST(Rds, Examples) {
  auto a = rds_check(fixtures::f4());
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.lambda, 8U);
  auto b = rds_check(fixtures::bent42());
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.lambda, 4U);
  auto c = rds_check(fixtures::gold6());
  EXPECT_FALSE(c.holds);
  EXPECT_TRUE(c.forbidden_subgroup_avoided);
}

TEST(Rds, IffBent) {
  std::mt19937_64 rng(40);
  for (int i = 0; i < 200; ++i) {
    auto f = VectorialFunc::random_of_degree(4, 1 + i % 2, 2 + i % 2, rng);
    ASSERT_EQ(rds_check(f).holds, is_bent(f));
  }
}

TEST(Isomorphism, RelabelingGivesYes) {
  std::mt19937_64 rng(50);
  for (const char* name : {"f4", "bent42", "gold5"}) {
    auto fam = enumerate_flats(fixtures::get(name));
    for (const auto& [v, s] : fam.nf) {
      auto perm = random_perm(s.points(), rng);
      auto t = s.relabeled(perm);
      auto res = isomorphic(s, t);
      ASSERT_EQ(res.verdict, IsoVerdict::Yes) << name;
      EXPECT_EQ(s.relabeled(res.mapping), t);
      break;
    }
  }
}

TEST(Isomorphism, FingerprintSeparates) {
  auto fam = enumerate_flats(fixtures::f4());
  EXPECT_EQ(isomorphic(fam.vf, fam.nonvanishing(1)).verdict, IsoVerdict::No);
  EXPECT_EQ(code_of([&] { isomorphic(fam.vf, IncidenceStructure(32, 4)); }), Errc::ShapeMismatch);
}

TEST(Isomorphism, BudgetExhaustion) {
  std::mt19937_64 rng(60);
  auto s = enumerate_flats(fixtures::gold5()).nonvanishing(1);
  auto t = s.relabeled(random_perm(32, rng));
  auto res = isomorphic(s, t, 1);
  EXPECT_EQ(res.verdict, IsoVerdict::Unknown);
  EXPECT_TRUE(res.mapping.empty());
}

TEST(Fingerprint, InvariantUnderRelabeling) {
  std::mt19937_64 rng(70);
  auto s = vanishing_flats(fixtures::bent42());
  EXPECT_EQ(fingerprint(s), fingerprint(s.relabeled(random_perm(16, rng))));
  auto fp = fingerprint(s);
  EXPECT_TRUE(fp.pair_coverage.has_value());
  EXPECT_TRUE(fp.intersections.has_value());
}
