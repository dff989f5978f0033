#include "bohrlab/setlab.hpp"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "bohrlab/errors.hpp"
#include "oracle.hpp"

namespace bohrlab {
namespace {

Elem E(std::initializer_list<std::uint64_t> c) { return Elem{c}; }

TEST(SumsetTest, Examples) {
  const GroupSpec z8 = GroupSpec::cyclic(8);
  const auto evens = GroupSubset::from_indices(z8, {0, 2, 4, 6});
  EXPECT_EQ(sumset_ABmB(evens, evens), evens);

  const auto a = GroupSubset::from_indices(z8, {0});
  const auto b = GroupSubset::from_indices(z8, {0, 1});
  EXPECT_EQ(sumset_ABmB(a, b).indices(), (std::vector<Index>{0, 1, 7}));
  EXPECT_EQ(difference_set(b).indices(), (std::vector<Index>{0, 1, 7}));

  const GroupSpec z5 = GroupSpec::cyclic(5);
  const auto p = GroupSubset::from_indices(z5, {1});
  const auto q = GroupSubset::from_indices(z5, {0, 2});
  EXPECT_EQ(sumset_ABmB(p, q).indices(), (std::vector<Index>{1, 3, 4}));

  EXPECT_EQ(sumset_ABmB(GroupSubset::empty(z8), evens), GroupSubset::empty(z8));
}

TEST(SumsetTest, CapAndShape) {
  const GroupSpec big = GroupSpec::cyclic(1 << 17);
  const auto a = GroupSubset::from_indices(big, {0});
  EXPECT_THROW(sumset_ABmB(a, a), CapacityError);
  EXPECT_NO_THROW(sumset_ABmB(a, a, 1 << 17));
  EXPECT_THROW(sumset_ABmB(GroupSubset::full(GroupSpec::cyclic(4)),
                           GroupSubset::full(GroupSpec::cyclic(8))),
               ShapeError);
}

TEST(SumsetTest, MatchesRepresentationCounts) {
  std::uint64_t seed = 10;
  for (const char* spec : {"9", "16", "4x3", "2x2x3", "30"}) {
    const GroupSpec g = GroupSpec::parse(spec);
    for (int rep = 0; rep < 10; ++rep) {
      const auto abits = oracle::random_bits(g.order(), 0.2, ++seed);
      const auto bbits = oracle::random_bits(g.order(), 0.2, ++seed);
      const auto counts = oracle::representation_counts(g.factors(), abits, bbits);
      const auto s = sumset_ABmB(GroupSubset(g, abits), GroupSubset(g, bbits));
      for (Index z = 0; z < g.order(); ++z) ASSERT_EQ(s.contains(z), counts[z] > 0);
    }
  }
}

TEST(SumsetTest, ContainsANonEmptyB) {
  const GroupSpec g = GroupSpec::parse("6x7");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto a = random_subset(g, 0.2, seed);
    const auto b = random_subset(g, 0.1, seed + 100);
    EXPECT_TRUE(a.is_subset_of(sumset_ABmB(a, b)));
  }
}

TEST(SumsetTest, SubgroupIsClosed) {
  const GroupSpec g = GroupSpec::parse("12x8");
  const auto h = structured_subset(g, SubgroupParams{{3, 4}});
  EXPECT_EQ(h.size(), 8u);
  EXPECT_EQ(sumset_ABmB(h, h), h);
}

// supp(f*g*g_-) equals A + B - B for indicators: every positive value is at
// least 1/N^2, far above the transform error.
TEST(SumsetTest, SupportOfTripleConvolution) {
  std::uint64_t seed = 500;
  for (std::uint64_t n : {8u, 16u, 32u, 64u, 128u, 256u}) {
    const GroupSpec g = GroupSpec::cyclic(n);
    const double threshold = 1.0 / (2.0 * static_cast<double>(n * n));
    for (int rep = 0; rep < 10; ++rep) {
      const auto a = random_subset(g, 0.1, ++seed);
      const auto b = random_subset(g, 0.1, ++seed);
      const DensityFn h = triple_convolve(a.indicator(), b.indicator());
      const auto s = sumset_ABmB(a, b);
      for (Index z = 0; z < n; ++z) ASSERT_EQ(h[z] > threshold, s.contains(z)) << n << " " << z;
    }
  }
}

TEST(GroupSubsetTest, Basics) {
  const GroupSpec g = GroupSpec::parse("2x3");
  const auto s = GroupSubset::from_elems(g, {E({1, 2}), E({0, 1})});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.density(), 2.0 / 6);
  EXPECT_EQ(s.indices(), (std::vector<Index>{1, 5}));
  EXPECT_TRUE(s.contains(E({1, 2})));
  EXPECT_TRUE(s.is_subset_of(GroupSubset::full(g)));
  EXPECT_FALSE(GroupSubset::full(g).is_subset_of(s));
  const DensityFn ind = s.indicator();
  EXPECT_EQ(std::vector<double>(ind.values().begin(), ind.values().end()),
            (std::vector<double>{0, 1, 0, 0, 0, 1}));
  EXPECT_THROW(GroupSubset(g, std::vector<bool>(5)), ShapeError);
  EXPECT_THROW(GroupSubset::from_indices(g, {6}), ShapeError);
}

TEST(SeedTest, DeriveSeedIsOrderSensitiveAndStable) {
  EXPECT_EQ(derive_seed(1, {2, 3}), derive_seed(1, {2, 3}));
  EXPECT_NE(derive_seed(1, {2, 3}), derive_seed(1, {3, 2}));
  EXPECT_NE(derive_seed(1, {2}), derive_seed(2, {2}));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, {i}));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(unit_uniform(0), 0.0);
  EXPECT_LT(unit_uniform(~0ull), 1.0);
}

TEST(RandomSubsetTest, Examples) {
  const GroupSpec z8 = GroupSpec::cyclic(8);
  EXPECT_EQ(random_subset(z8, 1.0, 0), GroupSubset::full(z8));

  const GroupSpec z256 = GroupSpec::cyclic(256);
  const auto s = random_subset(z256, 0.25, 7);
  EXPECT_EQ(s, random_subset(z256, 0.25, 7));
  EXPECT_NEAR(s.density(), 0.25, 5 * std::sqrt(0.25 * 0.75 / 256));
  EXPECT_NE(s, random_subset(z256, 0.25, 8));
}

TEST(RandomSubsetTest, Errors) {
  const GroupSpec z8 = GroupSpec::cyclic(8);
  EXPECT_THROW(random_subset(z8, 0.0, 1), DomainError);
  EXPECT_THROW(random_subset(z8, 1.5, 1), DomainError);
  EXPECT_THROW(random_subset(z8, -0.1, 1), DomainError);
  // On Z_2 at density 1e-6 nearly every draw is empty.
  EXPECT_THROW(random_subset(GroupSpec::cyclic(2), 1e-6, 1, 4), RetryExhausted);
}

TEST(RandomSubsetTest, DensityBandOverSeeds) {
  for (std::uint64_t n : {64u, 1024u}) {
    const GroupSpec g = GroupSpec::cyclic(n);
    for (double delta : {0.1, 0.3, 0.5}) {
      const double band = 5 * std::sqrt(delta * (1 - delta) / static_cast<double>(n));
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_subset(g, delta, seed);
        EXPECT_LE(std::abs(s.density() - delta), band);
        EXPECT_GT(s.size(), 0u);
      }
    }
  }
}

TEST(StructuredSubsetTest, Kinds) {
  const GroupSpec z12 = GroupSpec::cyclic(12);
  EXPECT_EQ(structured_subset(z12, SubgroupParams{{4}}).indices(), (std::vector<Index>{0, 4, 8}));
  EXPECT_EQ(structured_subset(z12, ProgressionParams{E({10}), E({5}), 4}).indices(),
            (std::vector<Index>{1, 3, 8, 10}));
  const BohrSpec b(z12, {Char{{1}}}, 0.1, RadiusForm::torus_norm);
  EXPECT_EQ(structured_subset(z12, BohrSetParams{b}).indices(), (std::vector<Index>{0, 1, 11}));
  EXPECT_EQ(structured_subset(z12, UnionShiftParams{{E({0}), E({1})}, {E({0}), E({6})}}).indices(),
            (std::vector<Index>{0, 1, 6, 7}));
}

TEST(StructuredSubsetTest, Errors) {
  const GroupSpec z12 = GroupSpec::cyclic(12);
  EXPECT_THROW(structured_subset(z12, SubgroupParams{{5}}), DomainError);
  EXPECT_THROW(structured_subset(z12, SubgroupParams{{0}}), DomainError);
  EXPECT_THROW(structured_subset(z12, SubgroupParams{{2, 2}}), DomainError);
  EXPECT_THROW(structured_subset(z12, ProgressionParams{E({0}), E({1}), 0}), DomainError);
}

}  // namespace
}  // namespace bohrlab
