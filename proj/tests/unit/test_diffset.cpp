#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nps/diffset.hpp"
#include "oracle.hpp"

using namespace nps;

namespace {

DiffSet random_set(std::mt19937& rng, int n, int m, double rate) {
  std::bernoulli_distribution pick(rate);
  std::vector<GroupElem> e;
  for (int h = 0; h < n; ++h)
    for (int p = 0; p < m; ++p)
      if (pick(rng)) e.push_back({h, p});
  return DiffSet(n, m, e);
}

PdpdsParams measured(const DiffSet& r, int ell) {
  auto v = verify_lpdpds(r, ell);
  if (auto* f = std::get_if<BucketFailure>(&v)) ADD_FAILURE() << f->to_string();
  return std::get<PdpdsParams>(v);
}

const char* kTernary = "z,1,1,1,z,1,2,2,1";

}  // namespace

TEST(DiffSet, ConstructionNormalizes) {
  DiffSet r(5, 3, {{7, -1}, {0, 0}, {1, 2}});
  EXPECT_EQ(r.elements(), (std::vector<GroupElem>{{0, 0}, {1, 2}, {2, 2}}));
  EXPECT_TRUE(r.contains({2, 2}));
  EXPECT_FALSE(r.contains({2, 1}));
  EXPECT_THROW(DiffSet(5, 3, {{0, 0}, {5, 3}}), std::invalid_argument);
  EXPECT_EQ(r.translate({1, 1}).elements(), (std::vector<GroupElem>{{1, 1}, {2, 0}, {3, 0}}));
  EXPECT_EQ(r.scale(2).elements(), (std::vector<GroupElem>{{0, 0}, {2, 1}, {4, 1}}));
}

TEST(DiffSet, DifferenceTableMatchesBruteForce) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9, m = 1 + trial % 5;
    const auto r = random_set(rng, n, m, 0.4);
    const auto table = difference_table(r);
    const auto want = oracle::differences(n, m, r.elements());
    Int total = 0;
    for (int h = 0; h < n; ++h)
      for (int p = 0; p < m; ++p) {
        auto it = want.find({h, p});
        ASSERT_EQ(table.count({h, p}), it == want.end() ? 0 : it->second);
        total += table.count({h, p});
      }
    EXPECT_EQ(table.total(), total);
    EXPECT_EQ(total, static_cast<Int>(r.size() * (r.size() - (r.size() > 0 ? 1 : 0))));
  }
}

TEST(DiffSet, VerifierAgreesWithBruteForceBuckets) {
  std::mt19937 rng(3);
  int successes = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + trial % 8, m = 2 + trial % 3;
    // Sparse one-per-column sets hit PDPDS parameters often enough to matter.
    std::uniform_int_distribution<int> pe(0, m - 1);
    std::bernoulli_distribution gap(0.25);
    std::vector<GroupElem> e;
    for (int h = 0; h < n; ++h)
      if (!gap(rng)) e.push_back({h, pe(rng)});
    const DiffSet r(n, m, e);
    const int ell = 1 + trial % (n - 1);
    const auto want = oracle::pdpds_constants(n, m, ell, r.elements());
    const auto got = verify_lpdpds(r, ell);
    ASSERT_EQ(want.has_value(), std::holds_alternative<PdpdsParams>(got));
    if (!want) {
      const auto& f = std::get<BucketFailure>(got);
      EXPECT_NE(f.first_count, f.second_count);
      EXPECT_EQ(bucket_of(f.first, n, std::min(ell, n - ell)), f.bucket);
      EXPECT_EQ(bucket_of(f.second, n, std::min(ell, n - ell)), f.bucket);
      const auto d = oracle::differences(n, m, r.elements());
      auto count = [&](GroupElem x) { auto it = d.find({x.h, x.p}); return it == d.end() ? 0LL : it->second; };
      EXPECT_EQ(count(f.first), f.first_count);
      EXPECT_EQ(count(f.second), f.second_count);
      continue;
    }
    ++successes;
    const auto& p = std::get<PdpdsParams>(got);
    EXPECT_EQ(p.ell, std::min(ell, n - ell));
    EXPECT_EQ((std::array<long long, 5>{p.lambda1, p.lambda2, p.lambda3, p.mu1, p.mu2}), *want);
    EXPECT_TRUE(is_lpdpds(r, p));
    EXPECT_TRUE(verify_group_ring_identity(r, p));
  }
  EXPECT_GT(successes, 20);
}

TEST(DiffSet, TernaryGolden) {
  const auto r = seq_to_diffset(AlmostSequence::parse(kTernary, 3));
  const auto p = measured(r, 4);
  EXPECT_EQ(p.to_string(), "4-(9,3,7,3,0,2,1,2)");
  EXPECT_EQ(PdpdsParams::parse("4-(9,3,7,3,0,2,1,2)"), p);
  EXPECT_TRUE(verify_group_ring_identity(r, p));
  auto wrong = p;
  wrong.mu2 = 1;
  EXPECT_FALSE(verify_group_ring_identity(r, wrong));
  EXPECT_FALSE(is_lpdpds(r, wrong));
  EXPECT_EQ(special_case_of(p), DesignKind::ProperPdpds);
  EXPECT_TRUE(std::holds_alternative<BucketFailure>(verify_lpdpds(r, 1)));
  EXPECT_THROW(verify_lpdpds(r, 9), std::invalid_argument);
}

TEST(DiffSet, BinaryExampleLambdaOneIsTwo) {
  const auto r = seq_to_diffset(AlmostSequence::parse("z,0,0,z,1,0,1,1,0,1", 2));
  const auto p = measured(r, 3);
  EXPECT_EQ(p.to_string(), "3-(10,2,8,2,0,5,4,2)");
  EXPECT_FALSE(is_lpdpds(r, PdpdsParams::parse("3-(10,2,8,4,0,5,4,2)")));
  EXPECT_EQ(nps_params(8, 2, 3, -2, 3, 10), p);
}

TEST(DiffSet, ParamsTextRoundTrip) {
  const auto p = PdpdsParams::parse("2-(7,7,12,5,7,5,2,1)");
  EXPECT_EQ(p.ell, 2);
  EXPECT_EQ(p.k, 12);
  EXPECT_EQ(p.lambda2, 7);
  EXPECT_EQ(PdpdsParams::parse(p.to_string()), p);
  EXPECT_THROW(PdpdsParams::parse("2-(7,7,12)"), std::invalid_argument);
  EXPECT_THROW(PdpdsParams::parse("garbage"), std::invalid_argument);
}

TEST(CrossConstruction, WorkedInstances) {
  const auto a = construct_prop5(7, 5, 3);
  EXPECT_FALSE(a.is_dpds);
  EXPECT_EQ(a.set.size(), 12u);
  EXPECT_EQ(measured(a.set, 2).to_string(), "2-(7,7,12,5,7,5,2,1)");
  EXPECT_EQ(a.expected.to_string(), "2-(7,7,12,5,7,5,2,1)");

  const auto b = construct_prop5(5, 2, 2);
  EXPECT_TRUE(b.is_dpds);
  EXPECT_TRUE(is_lpdpds(b.set, b.expected));
  for (int ell = 1; ell < 5; ++ell) {
    const auto p = measured(b.set, ell);
    EXPECT_EQ(p.k, 8);
    EXPECT_EQ(p.lambda1, 3);
    EXPECT_EQ(p.lambda2, 3);
    EXPECT_EQ(p.lambda3, 3);
    EXPECT_EQ(p.mu1, 2);
    EXPECT_EQ(p.mu2, 2);
    EXPECT_EQ(special_case_of(p), DesignKind::DirectProductDifferenceSet);
  }
}

TEST(CrossConstruction, ClaimedTupleHoldsAwayFromHalfPeriod) {
  for (int n = 3; n <= 30; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto inst = construct_prop5(n, a, b);
        const int ell = static_cast<int>(mod(a - b, n));
        if (2 * ell == n) continue;
        ASSERT_TRUE(is_lpdpds(inst.set, inst.expected)) << n << ' ' << a << ' ' << b;
        ASSERT_TRUE(verify_group_ring_identity(inst.set, inst.expected));
      }
}

TEST(CrossConstruction, HalfPeriodShiftHasNoEllMixedDifferences) {
  for (int n = 4; n <= 30; n += 2) {
    const auto inst = construct_prop5(n, n / 2, 0);
    const auto p = measured(inst.set, n / 2);
    EXPECT_EQ(p.mu2, 0) << n;
    EXPECT_EQ(p.lambda1, n - 2);
    EXPECT_EQ(p.lambda3, n - 2);
    EXPECT_EQ(p.mu1, 2);
    EXPECT_FALSE(is_lpdpds(inst.set, inst.expected)) << n;
  }
}

TEST(DiffSet, SequenceRoundTrip) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2 + trial % 4, n = 1 + trial % 12;
    std::uniform_int_distribution<int> e(-1, m - 1);
    std::vector<Symbol> s;
    for (int i = 0; i < n; ++i) {
      const int x = e(rng);
      s.push_back(x < 0 ? Symbol::zero() : Symbol::exp(x));
    }
    const AlmostSequence seq(m, s);
    EXPECT_EQ(diffset_to_seq(seq_to_diffset(seq)), seq);
  }
  EXPECT_THROW(diffset_to_seq(DiffSet(3, 2, {{0, 0}, {0, 1}})), std::invalid_argument);
}

// Classification and set verification describe the same objects.
TEST(Duality, RandomTwoZeroSequences) {
  std::mt19937 rng(20240607);
  int nps_count = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = std::vector<int>{2, 3, 5}[static_cast<std::size_t>(trial % 3)];
    const int n = 4 + static_cast<int>(rng() % 12);
    std::uniform_int_distribution<int> pos(1, n - 1), e(0, m - 1);
    const int d = pos(rng);
    std::vector<Symbol> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = (i == 0 || i == d) ? Symbol::zero() : Symbol::exp(e(rng));
    const AlmostSequence seq(m, s);
    const auto r = seq_to_diffset(seq);
    ASSERT_EQ(diffset_to_seq(r), seq);

    const auto spec = oracle::spectrum(seq);
    std::set<long long> at_d, elsewhere;
    bool integral = true;
    for (int t = 1; t < n; ++t) {
      auto v = oracle::as_integer(spec[static_cast<std::size_t>(t - 1)]);
      if (!v) {
        integral = false;
        break;
      }
      (t == d || t == n - d ? at_d : elsewhere).insert(*v);
    }
    const bool two_valued_at_d = integral && at_d.size() == 1 && elsewhere.size() <= 1;
    const auto verdict = verify_lpdpds(r, d);
    ASSERT_EQ(two_valued_at_d, std::holds_alternative<PdpdsParams>(verdict)) << seq.to_string();
    if (!two_valued_at_d) continue;
    ++nps_count;
    const Int g1 = *at_d.begin();
    const Int g2 = elsewhere.empty() ? g1 : *elsewhere.begin();
    const auto expected = nps_params(n - 2, m, g1, g2, d, n);
    ASSERT_TRUE(expected.has_value()) << seq.to_string();
    const auto got = std::get<PdpdsParams>(verdict);
    if (elsewhere.empty()) {
      // No generic shifts: lambda1 and mu1 are unconstrained.
      EXPECT_EQ(got.lambda3, expected->lambda3);
      EXPECT_EQ(got.mu2, expected->mu2);
    } else {
      EXPECT_EQ(got, *expected) << seq.to_string();
    }
    const auto c = classify(seq);
    EXPECT_TRUE(c.is_nps()) << seq.to_string();
  }
  EXPECT_GT(nps_count, 10);
}

TEST(Identities, ColumnSumsOfWorkedInstance) {
  const auto inst = construct_prop5(7, 5, 3);
  const auto rep = verify_si_identities(inst.set, inst.expected);
  EXPECT_TRUE(rep.ok);
  EXPECT_EQ(rep.sum_squares, 42);
  ASSERT_EQ(rep.shifted_products.size(), 3u);
  for (Int v : rep.shifted_products) EXPECT_EQ(v, 17);
  EXPECT_EQ(6 * 17 + 42, 12 * 12);
}

TEST(Identities, HoldOnEveryVerifiedSet) {
  std::vector<std::pair<DiffSet, int>> corpus;
  for (int n = 3; n <= 12; ++n)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b) corpus.emplace_back(construct_prop5(n, a, b).set, static_cast<int>(mod(a - b, n)));
  corpus.emplace_back(seq_to_diffset(AlmostSequence::parse(kTernary, 3)), 4);
  corpus.emplace_back(seq_to_diffset(AlmostSequence::parse("z,0,0,z,1,0,1,1,0,1", 2)), 3);
  corpus.emplace_back(seq_to_diffset(AlmostSequence::parse("z,2,2,0,1,z,1,0,2,2", 3)), 5);
  for (const auto& [r, ell] : corpus) {
    const auto p = measured(r, ell);
    const auto rep = verify_si_identities(r, p);
    EXPECT_TRUE(rep.ok) << p.to_string() << (rep.violations.empty() ? "" : rep.violations.front());
  }
}

TEST(Identities, DetectWrongParameters) {
  const auto r = seq_to_diffset(AlmostSequence::parse(kTernary, 3));
  auto p = measured(r, 4);
  p.lambda1 += 1;
  EXPECT_FALSE(verify_si_identities(r, p).ok);
}

TEST(NonexistenceBound, MatchesFloatingPoint) {
  for (Int m : {3, 5, 7})
    for (Int k1 = 0; k1 < 15; ++k1)
      for (Int k2 = 0; k2 < 15; ++k2) {
        const double rad = static_cast<double>(m * m * k1 * k1 - 4 * m * k1 + 8 * m * k2);
        const auto t = nonexistence_bound(m, k1, k2);
        if (rad < 0) {
          EXPECT_FALSE(t.has_value());
          continue;
        }
        ASSERT_TRUE(t.has_value());
        EXPECT_EQ(*t, static_cast<Int>(std::floor((-static_cast<double>(m * k1) - 4 + std::sqrt(rad)) / 2)));
      }
}

TEST(Feasibility, KnownCases) {
  EXPECT_TRUE(feasible(7, 3, 0, 2).feasible);
  EXPECT_FALSE(feasible(7, 3, 0, 1).feasible);  // 7 - 1 - 2 is not divisible by 3
  for (Int n = 4; n < 60; ++n)
    for (Int g1 = -n; g1 <= n; ++g1) {
      const auto f = feasible(n, 3, g1, -3);
      EXPECT_FALSE(f.feasible) << n << ' ' << g1;
    }
}

TEST(Buckets, SizesPartitionTheGroup) {
  for (int n = 3; n <= 12; ++n)
    for (int m = 1; m <= 5; ++m)
      for (int ell = 1; 2 * ell <= n; ++ell) {
        const auto s = bucket_sizes(n, m, ell);
        EXPECT_EQ(s[1] + s[2] + s[3] + s[4] + s[5], static_cast<Int>(n) * m - 1);
        std::array<Int, 6> counted{};
        for (int h = 0; h < n; ++h)
          for (int p = 0; p < m; ++p)
            if (h || p) ++counted[static_cast<std::size_t>(bucket_of({h, p}, n, ell))];
        EXPECT_EQ(counted, s);
      }
}

TEST(DesignKinds, Degenerations) {
  PdpdsParams ds{1, 7, 1, 3, 1, 1, 1, 1, 1};
  EXPECT_EQ(special_case_of(ds), DesignKind::DifferenceSet);
  PdpdsParams rds{1, 4, 2, 4, 1, 0, 1, 1, 1};
  EXPECT_EQ(special_case_of(rds), DesignKind::RelativeDifferenceSet);
  EXPECT_EQ(special_case_of(construct_prop5(5, 2, 2).expected), DesignKind::DirectProductDifferenceSet);
  EXPECT_EQ(special_case_of(construct_prop5(7, 5, 3).expected), DesignKind::ProperPdpds);
}
