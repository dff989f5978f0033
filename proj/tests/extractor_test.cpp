#include "bohrlab/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "bohrlab/errors.hpp"
#include "bohrlab/setlab.hpp"
#include "oracle.hpp"

namespace bohrlab {
namespace {

const GroupSpec kZ8 = GroupSpec::cyclic(8);

Elem E(std::initializer_list<std::uint64_t> c) { return Elem{c}; }
Char C(std::initializer_list<std::uint64_t> c) { return Char{c}; }

DensityFn evens8() { return DensityFn(kZ8, {1, 0, 1, 0, 1, 0, 1, 0}); }

DensityFn indicator(const GroupSpec& g, const std::vector<bool>& bits) {
  std::vector<double> v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) v[i] = bits[i] ? 1.0 : 0.0;
  return DensityFn(g, std::move(v));
}

TEST(BohrFromTrigPolyTest, Examples) {
  const TrigPoly p(kZ8, {{C({4}), 1.0}});
  const BohrSpec u = bohr_from_trigpoly(p, E({0}), 1.0);
  EXPECT_EQ(u.form(), RadiusForm::character_distance);
  EXPECT_EQ(u.radius(), 1.0);
  EXPECT_EQ(u.center(), E({0}));
  const auto members = bohr_enumerate(u);
  EXPECT_EQ(members, (std::vector<Elem>{E({0}), E({2}), E({4}), E({6})}));
  for (const Elem& x : members) EXPECT_GT(p.evaluate(x).real(), 0.0);

  const TrigPoly one(kZ8, {{C({0}), 1.0}});
  EXPECT_EQ(bohr_enumerate(bohr_from_trigpoly(one, E({5}), 1.0)).size(), 8u);
}

TEST(BohrFromTrigPolyTest, Errors) {
  const TrigPoly big(kZ8, {{C({1}), 2.0}});
  EXPECT_THROW(bohr_from_trigpoly(big, E({0}), 1.0), PreconditionError);
  const TrigPoly p(kZ8, {{C({4}), 1.0}});
  EXPECT_THROW(bohr_from_trigpoly(p, E({0}), 0.0), DomainError);
  EXPECT_THROW(bohr_from_trigpoly(p, E({1}), 0.5), PreconditionError);
}

TEST(BohrFromTrigPolyTest, PositiveOnNeighborhood) {
  // Random bounded polynomials: Re p stays positive on a + U.
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (std::uint64_t n : {16u, 45u, 128u}) {
    const GroupSpec g = GroupSpec::cyclic(n);
    std::uniform_int_distribution<Index> pick(0, n - 1);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<TrigTerm> terms;
      for (int i = 0; i < 4; ++i) {
        std::complex<double> c(u(rng), u(rng));
        if (std::abs(c) > 1.0) c *= 0.999 / std::abs(c);
        terms.push_back({g.char_at(pick(rng)), c});
      }
      const TrigPoly p(g, terms, 1.5);
      const Elem a = g.elem_at(pick(rng));
      const double c = p.evaluate(a).real();
      if (c <= 0.0) continue;
      const BohrSpec b = bohr_from_trigpoly(p, a, c);
      const auto mask = bohr_member_mask(b);
      for (Index x = 0; x < n; ++x) {
        if (mask[x]) ASSERT_GT(p.evaluate(g.add(g.index_of(a), x)).real(), 0.0);
      }
    }
  }
}

TEST(NormalizeMeansTest, Examples) {
  const auto same = normalize_means(evens8(), evens8());
  EXPECT_EQ(same.delta, 0.5);
  EXPECT_EQ(same.f_scale, 1.0);
  EXPECT_EQ(same.g_scale, 1.0);

  const auto scaled = normalize_means(DensityFn::constant(kZ8, 1.0), evens8());
  EXPECT_EQ(scaled.delta, 0.5);
  EXPECT_EQ(scaled.f_scale, 0.5);
  for (Index z = 0; z < 8; ++z) EXPECT_EQ(scaled.f[z], 0.5);
  EXPECT_DOUBLE_EQ(scaled.f.mean(), scaled.g.mean());

  EXPECT_THROW(normalize_means(DensityFn::constant(kZ8, 0.0), evens8()), EmptyInputError);
  EXPECT_THROW(normalize_means(DensityFn::constant(kZ8, 1.2), evens8()), DomainError);
}

TEST(LargeSpectrumTest, Examples) {
  EXPECT_EQ(large_spectrum(evens8(), 1.0 / 32), (std::vector<Char>{C({0}), C({4})}));
  EXPECT_EQ(large_spectrum(DensityFn::constant(kZ8, 1.0), 0.25), (std::vector<Char>{C({0})}));
  EXPECT_TRUE(large_spectrum(evens8(), 1.01).empty());
  EXPECT_THROW(large_spectrum(evens8(), 0.0), DomainError);
}

TEST(LargeSpectrumTest, MonotoneInThreshold) {
  const GroupSpec g = GroupSpec::cyclic(200);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Spectrum s = dft(DensityFn(g, oracle::random_table(200, seed)));
    double t = 1e-4;
    auto prev = large_spectrum(s, t);
    for (int step = 0; step < 12; ++step) {
      t *= 2.0;
      const auto next = large_spectrum(s, t);
      ASSERT_TRUE(std::includes(prev.begin(), prev.end(), next.begin(), next.end()));
      prev = next;
    }
  }
}

TEST(FindWitnessTest, Examples) {
  const DensityFn h = triple_convolve(evens8(), evens8());
  const Witness w = find_witness(h, evens8());
  EXPECT_EQ(w.a0, E({0}));
  EXPECT_NEAR(w.h_at_a0, 0.25, 1e-15);

  const DensityFn one = DensityFn::constant(GroupSpec::parse("4x3"), 1.0);
  const Witness w1 = find_witness(triple_convolve(one, one), one);
  EXPECT_EQ(w1.a0, E({0, 0}));
  EXPECT_NEAR(w1.h_at_a0, 1.0, 1e-14);

  std::vector<double> pm(8, 0.0);
  pm[0] = 1.0;
  const DensityFn point(kZ8, pm);
  const Witness wp = find_witness(DensityFn(kZ8, {0.9, 1, 1, 1, 1, 1, 1, 1}), point);
  EXPECT_EQ(wp.a0, E({0}));
}

TEST(FindWitnessTest, Errors) {
  EXPECT_THROW(find_witness(evens8(), DensityFn::constant(kZ8, 0.0)), EmptyInputError);
  // h far below mean(f)^4 cannot come out of the pipeline.
  EXPECT_THROW(find_witness(DensityFn::constant(kZ8, 1e-6), evens8()), InvariantBreach);
}

TEST(RemainderTest, Examples) {
  const auto s1 = large_spectrum(evens8(), 1.0 / 32);
  EXPECT_NEAR(remainder_bound_check(evens8(), evens8(), s1), 0.0, 1e-15);
  const DensityFn one = DensityFn::constant(kZ8, 1.0);
  EXPECT_NEAR(remainder_bound_check(one, one, {C({0})}), 0.0, 1e-15);
}

TEST(RemainderTest, RandomDensityPointThree) {
  const GroupSpec g = GroupSpec::cyclic(64);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const GroupSubset a = random_subset(g, 0.3, seed);
    const GroupSubset b = random_subset(g, 0.3, seed + 1000);
    const auto np = normalize_means(a.indicator(), b.indicator());
    const auto s1 = large_spectrum(np.f, 0.25 * std::pow(np.delta, 3));
    const double r = remainder_bound_check(np.f, np.g, s1);
    // Direct evaluation of the tail sum at every x.
    const Spectrum hh = triple_spectrum(dft(np.f), dft(np.g));
    std::vector<bool> in(64, false);
    for (const Char& t : s1) in[g.index_of(t)] = true;
    double direct = 0.0;
    for (Index x = 0; x < 64; ++x) {
      std::complex<double> acc{};
      for (Index t = 0; t < 64; ++t) {
        if (!in[t]) acc += hh[t] * oracle::chi({64}, {t}, {x});
      }
      direct = std::max(direct, std::abs(acc));
    }
    EXPECT_NEAR(r, direct, 1e-12);
    EXPECT_LE(r, 0.25 * std::pow(np.delta, 4) + kBoundSlack);
  }
}

TEST(RemainderTest, BreachWhenThresholdIgnored) {
  // With S1 empty the tail is all of h, which exceeds delta^4/4.
  EXPECT_THROW(remainder_bound_check(evens8(), evens8(), {}), InvariantBreach);
}

TEST(ExtractTest, WorkedExampleZ8) {
  const Certificate cert = extract(evens8(), evens8());
  EXPECT_EQ(cert.delta, 0.5);
  EXPECT_EQ(cert.a0, E({0}));
  EXPECT_EQ(cert.s1, (std::vector<Char>{C({0}), C({4})}));
  EXPECT_EQ(cert.k, 2u);
  EXPECT_NEAR(cert.c, 15.0 / 64, 1e-15);
  EXPECT_NEAR(cert.h_at_a0, 0.25, 1e-15);
  EXPECT_NEAR(cert.bohr_char_form.radius(), 15.0 / 128, 1e-15);
  EXPECT_NEAR(cert.bohr_torus_form.radius(), 15.0 / (256 * std::numbers::pi), 1e-16);
  EXPECT_EQ(bohr_enumerate(cert.bohr_char_form),
            (std::vector<Elem>{E({0}), E({2}), E({4}), E({6})}));
  EXPECT_TRUE(cert.bounds.all());
}

TEST(ExtractTest, ConstantInputs) {
  for (const char* spec : {"1", "8", "4x3", "2x2x2"}) {
    const GroupSpec g = GroupSpec::parse(spec);
    const DensityFn one = DensityFn::constant(g, 1.0);
    const Certificate cert = extract(one, one);
    EXPECT_EQ(cert.k, 1u);
    EXPECT_EQ(cert.s1, (std::vector<Char>{g.char_at(0)}));
    EXPECT_NEAR(cert.c, 0.75, 1e-14);
    EXPECT_EQ(bohr_enumerate(cert.bohr_char_form).size(), g.order());
  }
}

TEST(ExtractTest, UnequalMeansAreNormalized) {
  const Certificate cert = extract(evens8(), DensityFn::constant(kZ8, 1.0));
  EXPECT_EQ(cert.delta, 0.5);
  EXPECT_EQ(cert.f_scale, 1.0);
  EXPECT_EQ(cert.g_scale, 0.5);
  const DensityFn h = triple_convolve(evens8(), DensityFn::constant(kZ8, 0.5));
  EXPECT_FALSE(find_containment_violation(cert, h).has_value());
}

TEST(ExtractTest, Errors) {
  EXPECT_THROW(extract(DensityFn::constant(kZ8, 0.0), evens8()), EmptyInputError);
  EXPECT_THROW(extract(DensityFn::constant(kZ8, 2.0), evens8()), DomainError);
  EXPECT_THROW(extract(evens8(), DensityFn::constant(GroupSpec::cyclic(4), 1.0)), ShapeError);
}

TEST(ExtractTest, SoundnessAndBoundsOnRandomSets) {
  std::uint64_t seed = 1;
  for (double delta : {0.1, 0.2, 0.3, 0.5}) {
    for (std::uint64_t n : {16u, 64u, 100u, 256u, 1024u}) {
      const GroupSpec g = GroupSpec::cyclic(n);
      for (int rep = 0; rep < 3; ++rep) {
        const GroupSubset a = random_subset(g, delta, ++seed);
        const GroupSubset b = random_subset(g, delta, ++seed);
        ExtractOptions opts;
        opts.check_containment = false;
        const Certificate cert = extract(a.indicator(), b.indicator(), opts);
        const double d = cert.delta;
        EXPECT_LE(static_cast<double>(cert.k), 16.0 / std::pow(d, 5));
        EXPECT_GE(cert.h_at_a0, std::pow(d, 4) - kBoundSlack);
        EXPECT_GE(cert.c, 0.5 * std::pow(d, 4) - kBoundSlack);
        EXPECT_GE(cert.bohr_torus_form.radius(),
                  std::pow(d, 9) / (64 * std::numbers::pi) - 1e-12);
        EXPECT_TRUE(a.contains(cert.a0));
        // Pointwise against h from direct spatial sums.
        const auto np = normalize_means(a.indicator(), b.indicator());
        const DensityFn h = triple_convolve(np.f, np.g, TransformPath::definitional);
        EXPECT_FALSE(find_containment_violation(cert, h).has_value()) << n << " " << delta;
      }
    }
  }
}

TEST(ExtractTest, StructuredProductGroups) {
  const GroupSpec g = GroupSpec::parse("6x10");
  const GroupSubset a = structured_subset(g, SubgroupParams{{2, 5}});
  const GroupSubset b = structured_subset(
      g, UnionShiftParams{{E({0, 0}), E({1, 1})}, {E({0, 0}), E({3, 0}), E({0, 7})}});
  const Certificate cert = extract(a.indicator(), b.indicator());
  EXPECT_TRUE(cert.bounds.all());
  EXPECT_TRUE(a.contains(cert.a0));
}

TEST(ExtractTest, Deterministic) {
  const GroupSpec g = GroupSpec::parse("16x12");
  const GroupSubset a = random_subset(g, 0.3, 91);
  const GroupSubset b = random_subset(g, 0.25, 92);
  const Certificate c1 = extract(a.indicator(), b.indicator());
  const Certificate c2 = extract(a.indicator(), b.indicator());
  EXPECT_EQ(c1, c2);
}

Index argmax_on_support(const DensityFn& h, const DensityFn& f) {
  double best = -1;
  Index arg = 0;
  for (Index z = 0; z < h.values().size(); ++z) {
    if (f[z] > 0 && h[z] > best * (1 + 1e-11)) {
      best = h[z];
      arg = z;
    }
  }
  return arg;
}

TEST(ExtractTest, ArgmaxInvariantUnderCommonScaling) {
  std::uint64_t seed = 300;
  for (std::uint64_t n : {32u, 128u, 240u}) {
    const GroupSpec g = GroupSpec::cyclic(n);
    for (int rep = 0; rep < 5; ++rep) {
      const DensityFn f = indicator(g, oracle::random_bits(n, 0.3, ++seed));
      const DensityFn b = indicator(g, oracle::random_bits(n, 0.3, ++seed));
      if (f.mean() == 0.0 || b.mean() == 0.0) continue;
      const DensityFn base = triple_convolve(f, b);
      for (double lambda : {0.5, 0.8}) {
        const DensityFn scaled = triple_convolve(f.scaled(lambda), b.scaled(lambda));
        for (Index z = 0; z < n; ++z) {
          ASSERT_NEAR(scaled[z], std::pow(lambda, 3) * base[z], 1e-12);
        }
        EXPECT_EQ(argmax_on_support(scaled, f), argmax_on_support(base, f));
      }
    }
  }
}

TEST(ExtractTest, FaultInjectionChangesTheCertificate) {
  const GroupSpec g = GroupSpec::cyclic(64);
  const GroupSubset a = random_subset(g, 0.4, 5);
  const GroupSubset b = random_subset(g, 0.4, 6);
  const Certificate clean = extract(a.indicator(), b.indicator());
  ExtractOptions opts;
  opts.fault = SpectrumFault{clean.s1.size() > 1 ? g.index_of(clean.s1[1]) : 1,
                             {0.02 * std::pow(clean.delta, 4), 0.0}};
  const Certificate dirty = extract(a.indicator(), b.indicator(), opts);
  EXPECT_NE(clean, dirty);
}

TEST(ExtractTest, DefinitionalPathAgrees) {
  const GroupSpec g = GroupSpec::parse("5x12");
  const GroupSubset a = random_subset(g, 0.35, 15);
  const GroupSubset b = random_subset(g, 0.3, 16);
  ExtractOptions slow;
  slow.path = TransformPath::definitional;
  const Certificate c1 = extract(a.indicator(), b.indicator());
  const Certificate c2 = extract(a.indicator(), b.indicator(), slow);
  EXPECT_EQ(c1.a0, c2.a0);
  EXPECT_EQ(c1.s1, c2.s1);
  EXPECT_NEAR(c1.c, c2.c, 1e-12);
}

}  // namespace
}  // namespace bohrlab
