#include "agmon/proof_trace.hpp"

#include <gtest/gtest.h>

#include "agmon/constants.hpp"
#include "support/oracles.hpp"

namespace agmon {
namespace {

TEST(AxisSet, Basics) {
  const auto s = AxisSet::of({3, 1});
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.axes(), (std::vector<int>{1, 3}));
  EXPECT_EQ(s.operator_string(), "D3 D1");
  EXPECT_EQ(AxisSet().operator_string(), "1");
  EXPECT_EQ(s.with(2), AxisSet::of({1, 2, 3}));
  EXPECT_THROW((void)AxisSet::of({0}), DomainError);
  EXPECT_THROW((void)AxisSet::of({kMaxTraceDimension + 1}), DomainError);
}

TEST(ExpandChain, OneDimension) {
  const auto terms = expand_chain(1);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].branch, Branch::Differenced);
  EXPECT_EQ(terms[0].axes, AxisSet::of({1}));
  EXPECT_EQ(terms[1].branch, Branch::Plain);
  EXPECT_EQ(terms[1].axes, AxisSet());
}

TEST(ExpandChain, TwoDimensions) {
  const auto terms = expand_chain(2);
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0].axes, AxisSet::of({1}));
  EXPECT_EQ(terms[1].axes, AxisSet::of({1, 2}));
  EXPECT_EQ(terms[2].axes, AxisSet());
  EXPECT_EQ(terms[3].axes, AxisSet::of({2}));
  EXPECT_EQ(terms[1].order(), 2);
}

TEST(ExpandChain, FiveDimensionsOrdering) {
  const auto terms = expand_chain(5);
  ASSERT_EQ(terms.size(), 32u);
  EXPECT_EQ(terms[0].axes, AxisSet::of({1}));
  EXPECT_EQ(terms[1].axes, AxisSet::of({1, 2}));
  EXPECT_EQ(terms[2].axes, AxisSet::of({1, 2, 3}));
  EXPECT_EQ(terms[15].axes, AxisSet::of({1, 5}));
  EXPECT_EQ(terms[16].axes, AxisSet());
  for (std::size_t i = 0; i < 16; ++i) {
    EXPECT_EQ(terms[i].branch, Branch::Differenced);
    EXPECT_TRUE(terms[i].axes.contains(1));
    EXPECT_EQ(terms[i + 16].branch, Branch::Plain);
    EXPECT_FALSE(terms[i + 16].axes.contains(1));
    EXPECT_EQ(terms[i + 16].axes.with(1), terms[i].axes);
  }
}

TEST(ExpandChain, RejectsBadDimension) {
  EXPECT_THROW((void)expand_chain(0), DomainError);
  EXPECT_THROW((void)expand_chain(kMaxTraceDimension + 1), DomainError);
}

TEST(Histograms, MatchBitmaskOracleAndPascal) {
  for (int d = 2; d <= 12; ++d) {
    const auto terms = expand_chain(d);
    const auto diff = order_histogram(terms, Branch::Differenced);
    const auto plain = order_histogram(terms, Branch::Plain);
    const auto diff_oracle = oracle::subset_order_counts(d, true);
    const auto plain_oracle = oracle::subset_order_counts(d, false);
    for (int t = 0; t <= d; ++t) {
      const auto lookup = [t](const std::map<int, std::uint64_t>& h) {
        auto it = h.find(t);
        return it == h.end() ? std::uint64_t{0} : it->second;
      };
      EXPECT_EQ(lookup(diff), diff_oracle[static_cast<std::size_t>(t)]) << d << " " << t;
      EXPECT_EQ(lookup(plain), plain_oracle[static_cast<std::size_t>(t)]) << d << " " << t;
    }
    for (const auto& [t, n] : diff) EXPECT_EQ(BigInt(n), omega_count(d, t, Branch::Differenced));
    for (const auto& [t, n] : plain) EXPECT_EQ(BigInt(n), omega_count(d, t, Branch::Plain));
  }
}

TEST(Histograms, NextDimensionRecurrence) {
  for (int d = 1; d < 12; ++d) {
    for (auto branch : {Branch::Differenced, Branch::Plain}) {
      const auto now = order_histogram(expand_chain(d), branch);
      const auto next = order_histogram(expand_chain(d + 1), branch);
      EXPECT_EQ(next_dimension_histogram(now), next) << d;
    }
  }
}

TEST(ReductionCost, HandValues) {
  const ProofTerm d21{Branch::Differenced, AxisSet::of({1, 2})};
  EXPECT_EQ(reduction_cost(d21, ReductionTarget::FirstDifference), 1);
  EXPECT_EQ(reduction_cost(d21, ReductionTarget::Identity), 2);
  const ProofTerm identity{Branch::Plain, AxisSet()};
  EXPECT_EQ(reduction_cost(identity, ReductionTarget::Identity), 0);
  const ProofTerm d2{Branch::Plain, AxisSet::of({2})};
  EXPECT_EQ(reduction_cost(d2, ReductionTarget::Identity), 1);
  EXPECT_THROW((void)reduction_cost(d2, ReductionTarget::FirstDifference), DomainError);
}

TEST(TotalKappa, HandValues) {
  EXPECT_EQ(total_kappa(ReductionPlan{2, 2, {0, 1}}), 2);
  EXPECT_EQ(total_kappa(ReductionPlan{2, 1, {0}}), 3);
  EXPECT_EQ(total_kappa(ReductionPlan{2, 1, {1}}), 3);
  EXPECT_EQ(total_kappa(ReductionPlan{1, 1, {0}}), 0);
}

TEST(TotalKappa, RandomPlansAgreeWithClosedForm) {
  Rng rng(123);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(total_kappa(random_plan(4, 3, rng)), 29);
  for (int d = 1; d <= 10; ++d) {
    const auto terms = expand_chain(d);
    for (std::int64_t p = 1; p <= (std::int64_t{1} << (d - 1)); p += (d > 6 ? 37 : 1)) {
      const auto expected = static_cast<std::int64_t>(kappa_log2({d, p}));
      EXPECT_EQ(total_kappa(terms, canonical_plan(d, p)), expected);
      for (int r = 0; r < 3; ++r) EXPECT_EQ(total_kappa(terms, random_plan(d, p, rng)), expected);
    }
  }
}

TEST(TotalKappa, EveryPlanAgreesForSmallDimensions) {
  for (int d = 1; d <= 4; ++d) {
    for (std::int64_t p = 1; p <= (std::int64_t{1} << (d - 1)); ++p) {
      BigInt visited = 0;
      for_each_plan(d, p, [&](const ReductionPlan& plan) {
        EXPECT_EQ(total_kappa(plan), static_cast<std::int64_t>(kappa_log2({d, p})));
        ++visited;
        return true;
      });
      EXPECT_EQ(visited, plan_count(d, p));
    }
  }
}

TEST(ForEachPlan, StopsEarly) {
  int seen = 0;
  for_each_plan(4, 2, [&](const ReductionPlan&) { return ++seen < 5; });
  EXPECT_EQ(seen, 5);
}

TEST(Plans, Validation) {
  EXPECT_THROW(validate(ReductionPlan{3, 2, {0}}), DomainError);
  EXPECT_THROW(validate(ReductionPlan{3, 2, {1, 1}}), DomainError);
  EXPECT_THROW(validate(ReductionPlan{3, 2, {0, 4}}), DomainError);
  EXPECT_THROW(validate(ReductionPlan{3, 5, {0, 1, 2, 3, 4}}), DomainError);
  EXPECT_NO_THROW(validate(ReductionPlan{3, 2, {3, 0}}));
  EXPECT_THROW((void)total_kappa(expand_chain(2), ReductionPlan{3, 1, {0}}), DomainError);
}

TEST(Plans, RandomPlansAreDeterministicAndValid) {
  Rng a(77);
  Rng b(77);
  for (int i = 0; i < 20; ++i) {
    const auto pa = random_plan(6, 9, a);
    const auto pb = random_plan(6, 9, b);
    EXPECT_EQ(pa.chosen, pb.chosen);
    EXPECT_NO_THROW(validate(pa));
  }
}

TEST(SumIdentity, HoldsEnumeratedAndBeyond) {
  for (int d = 1; d <= 16; ++d) EXPECT_TRUE(verify_sum_identity(d)) << d;
  EXPECT_TRUE(verify_sum_identity(kMaxTraceDimension + 5));
  EXPECT_THROW((void)verify_sum_identity(0), DomainError);
}

TEST(SumIdentity, OrderSumOracle) {
  for (int d = 1; d <= 12; ++d) {
    std::uint64_t sum = 0;
    for (const auto& term : expand_chain(d)) sum += static_cast<std::uint64_t>(term.order());
    EXPECT_EQ(sum, static_cast<std::uint64_t>(d) << (d - 1));
  }
}

}  // namespace
}  // namespace agmon
