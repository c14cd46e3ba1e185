#include "agmon/extremal.hpp"

#include <cmath>

#include <gtest/gtest.h>

namespace agmon {
namespace {

SearchConfig small_config(int d, std::int64_t p, Coord extent, std::uint64_t seed) {
  SearchConfig cfg = SearchConfig::defaults(d, p);
  cfg.box_shape.assign(static_cast<std::size_t>(d), extent);
  cfg.restarts = 3;
  cfg.iters = 400;
  cfg.seed = seed;
  return cfg;
}

TEST(Ratio, DeltaValues) {
  EXPECT_NEAR(ratio(LatticeSeq::delta_at_origin(1), 1), std::pow(2.0, -0.25), 1e-15);
  EXPECT_NEAR(ratio(LatticeSeq::delta_at_origin(2), 2), std::pow(2.0, -0.75), 1e-15);
  EXPECT_THROW((void)ratio(LatticeSeq::zeros(SupportBox::at_origin({4})), 1), DomainError);
}

TEST(Ratio, ScaleInvariant) {
  const LatticeSeq s(1, SupportBox::at_origin({4}), {0.5, -1.0, 2.0, 0.25});
  EXPECT_NEAR(ratio(s.scaled(1e5), 1), ratio(s, 1), 1e-14);
  EXPECT_NEAR(ratio(s.scaled(-3.0), 1), ratio(s, 1), 1e-14);
}

TEST(Normalized, UnitNorm) {
  const LatticeSeq s(1, SupportBox::at_origin({3}), {3.0, 0.0, 4.0});
  EXPECT_NEAR(l2_norm(normalized(s)), 1.0, 1e-15);
  EXPECT_NEAR(normalized(s).values()[0], 0.6, 1e-15);
  EXPECT_THROW((void)normalized(LatticeSeq::zeros(SupportBox::at_origin({2}))), DomainError);
}

TEST(LocalStep, ZeroStepOnlyRenormalises) {
  const LatticeSeq s(1, SupportBox::at_origin({3}), {3.0, 0.0, 4.0});
  Rng rng(1);
  const auto out = local_step(s, 0.0, rng);
  EXPECT_EQ(out.box(), s.box());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(out.values()[i], s.values()[i] / 5.0, 1e-15);
}

TEST(LocalStep, StaysOnUnitSphereAndChangesOneEntry) {
  Rng rng(3);
  auto s = normalized(LatticeSeq(2, SupportBox::centered({5, 5}), std::vector<double>(25, 1.0)));
  for (int i = 0; i < 100; ++i) {
    const auto next = local_step(s, 0.1, rng);
    EXPECT_NEAR(l2_norm(next), 1.0, 1e-14);
    // Up to the common rescaling, exactly one entry moves.
    std::vector<double> r(25);
    for (std::size_t k = 0; k < 25; ++k) r[k] = next.values()[k] / s.values()[k];
    const bool first_common = std::fabs(r[0] - r[1]) < 1e-12 || std::fabs(r[0] - r[2]) < 1e-12;
    const double common = first_common ? r[0] : r[1];
    int moved = 0;
    for (double x : r) moved += std::fabs(x - common) > 1e-12 ? 1 : 0;
    EXPECT_LE(moved, 1);
    s = next;
  }
}

TEST(CoordinateAscent, RatioNeverDecreases) {
  Rng rng(11);
  CoordinateAscent ascent(LatticeSeq::delta_at_origin(1).embedded_in(SupportBox::centered({9})), 1,
                          0.25);
  double last = ascent.ratio();
  int accepted = 0;
  for (int i = 0; i < 2000; ++i) {
    if (ascent.advance(rng)) {
      ++accepted;
      EXPECT_GT(ascent.ratio(), last);
    } else {
      EXPECT_EQ(ascent.ratio(), last);
    }
    last = ascent.ratio();
    EXPECT_GE(ascent.step(), CoordinateAscent::kMinStep);
    EXPECT_LE(ascent.ratio(), 1.0 + kDefaultTolerance);
  }
  EXPECT_EQ(ascent.accepted(), accepted);
  EXPECT_GE(ascent.max_evaluated_ratio(), ascent.ratio());
  EXPECT_NEAR(last, ratio(ascent.current(), 1), 1e-15);
}

TEST(CoordinateAscent, StepDecaysAfterPatience) {
  // A delta on a one-cell box can never improve: every proposal is the same delta.
  Rng rng(5);
  CoordinateAscent ascent(LatticeSeq::delta_at_origin(1), 1, 0.5);
  for (int i = 0; i < CoordinateAscent::kPatience; ++i) EXPECT_FALSE(ascent.advance(rng));
  EXPECT_EQ(ascent.step(), 0.25);
  for (int i = 0; i < 100 * CoordinateAscent::kPatience; ++i) (void)ascent.advance(rng);
  EXPECT_EQ(ascent.step(), CoordinateAscent::kMinStep);
}

TEST(Search, DeterministicInSeed) {
  const auto cfg = small_config(2, 1, 7, 42);
  const auto a = search(cfg);
  const auto b = search(cfg);
  EXPECT_EQ(a.best_ratio, b.best_ratio);
  EXPECT_EQ(a.history, b.history);
  EXPECT_EQ(a.accepted, b.accepted);
  EXPECT_EQ(a.best_seq, b.best_seq);
  EXPECT_EQ(a.best_restart, b.best_restart);
}

TEST(Search, BeatsDeltaBaselineAndRespectsBound) {
  for (int d = 1; d <= 2; ++d) {
    for (std::int64_t p = 1; p <= (std::int64_t{1} << (d - 1)); ++p) {
      const auto result = search(small_config(d, p, 9, 7));
      EXPECT_GE(result.best_ratio, ratio(LatticeSeq::delta_at_origin(static_cast<std::size_t>(d)), p));
      EXPECT_LE(result.max_evaluated_ratio, 1.0 + kDefaultTolerance);
      EXPECT_GE(result.max_evaluated_ratio, result.best_ratio);
      EXPECT_NEAR(ratio(result.best_seq, p), result.best_ratio, 1e-15);
      EXPECT_NEAR(l2_norm(result.best_seq), 1.0, 1e-12);
      EXPECT_EQ(result.best_seq.box(), SupportBox::centered(std::vector<Coord>(d, 9)));
      ASSERT_EQ(result.history.size(), 3u);
      EXPECT_EQ(result.history[static_cast<std::size_t>(result.best_restart)], result.best_ratio);
    }
  }
}

TEST(Search, LargerBoxNeverLosesCandidates) {
  // Zero-padding into a larger box leaves every norm unchanged, so the
  // supremum over the larger box is at least the small-box result.
  const auto small = search(small_config(2, 2, 5, 3));
  const auto padded = small.best_seq.embedded_in(SupportBox::centered({9, 9}));
  EXPECT_EQ(ratio(padded, 2), small.best_ratio);
}

TEST(Search, RestartStarts) {
  const auto cfg = small_config(2, 1, 5, 0);
  Rng rng(0);
  const auto delta = restart_start(cfg, 0, rng);
  EXPECT_EQ(delta.at(std::vector<Coord>{0, 0}), 1.0);
  EXPECT_EQ(l2_norm(delta), 1.0);
  const auto bump = restart_start(cfg, 1, rng);
  EXPECT_NEAR(l2_norm(bump), 1.0, 1e-15);
  EXPECT_GT(bump.at(std::vector<Coord>{0, 0}), bump.at(std::vector<Coord>{2, 2}));
  EXPECT_EQ(bump.at(std::vector<Coord>{1, 0}), bump.at(std::vector<Coord>{-1, 0}));
}

TEST(Search, RejectsBadConfigurations) {
  auto cfg = small_config(2, 1, 5, 0);
  cfg.restarts = 0;
  EXPECT_THROW((void)search(cfg), DomainError);
  cfg = small_config(2, 3, 5, 0);
  EXPECT_THROW((void)search(cfg), DomainError);
  cfg = small_config(2, 1, 5, 0);
  cfg.box_shape = {5};
  EXPECT_THROW((void)search(cfg), DomainError);
  cfg = small_config(2, 1, 5, 0);
  cfg.step_init = 0.0;
  EXPECT_THROW((void)search(cfg), DomainError);
}

}  // namespace
}  // namespace agmon
