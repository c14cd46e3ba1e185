#pragma once

// Evaluates both sides of the lattice inequalities on concrete sequences and
// runs randomized soundness suites over them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "agmon/lattice.hpp"
#include "agmon/random.hpp"

namespace agmon {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kAbsoluteFloor = 1e-300;

struct CheckReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool satisfied = true;
  double tolerance = kDefaultTolerance;
};

/// satisfied <=> lhs <= rhs * (1 + tolerance) + 1e-300; ratio is lhs / rhs
/// and 0 when both sides vanish.
[[nodiscard]] CheckReport make_report(double lhs, double rhs, double tolerance);

/// ||f||_inf^2 <= ||f|| * ||D f|| on Z.
[[nodiscard]] CheckReport check_agmon_1d(const LatticeSeq& seq,
                                         double tolerance = kDefaultTolerance);

/// sup over z_{k+1} of [f]_k <= [D_{k+1} f]_{k+1}^(1/2) * [f]_{k+1}^(1/2),
/// checked at every point of the trailing d-k-1 coordinates. The report
/// carries the point with the largest ratio. k is 0-based: 0 <= k < d.
[[nodiscard]] CheckReport check_agmon_cauchy(const LatticeSeq& seq, std::size_t k,
                                             double tolerance = kDefaultTolerance);

/// ||D_i f|| <= 2 ||f||.
[[nodiscard]] CheckReport check_diff_bound(const LatticeSeq& seq, int axis,
                                           double tolerance = kDefaultTolerance);

/// ||f||_inf <= mu(p,d) ||grad_D f||^(p/2^d) ||f||^(1-p/2^d).
[[nodiscard]] CheckReport check_main(const LatticeSeq& seq, std::int64_t p,
                                     double tolerance = kDefaultTolerance);

enum class CopsonMode { WholeAxis, HalfAxis };

/// ||D f||^2 <= C ||f|| ||D^2 f|| with C = 1 on Z and C = 2 on the half-axis
/// n >= 0, where every norm is restricted to n >= 0.
[[nodiscard]] CheckReport check_copson(const LatticeSeq& seq, CopsonMode mode,
                                       double tolerance = kDefaultTolerance);

enum class Inequality { Main, AgmonCauchy, DiffBound, Agmon1d, Copson, CopsonHalf };

[[nodiscard]] std::string_view to_string(Inequality which);
/// Parses the CLI names main, agmon-cauchy, diff-bound, agmon1d, copson,
/// copson-half. Throws DomainError on anything else.
[[nodiscard]] Inequality parse_inequality(std::string_view name);
[[nodiscard]] bool requires_one_dimension(Inequality which);

/// Worst report of `which` on `seq`: a single report for main, agmon1d and
/// copson, the maximum ratio over all k or all axes otherwise.
[[nodiscard]] CheckReport check(Inequality which, const LatticeSeq& seq, std::int64_t p,
                                double tolerance = kDefaultTolerance);

enum class Distribution { UniformSigned, Gaussian, Sparse };

[[nodiscard]] std::string_view to_string(Distribution dist);
[[nodiscard]] Distribution parse_distribution(std::string_view name);

/// Random sequence on the box [0, shape): uniform on [-1, 1], unit gaussian,
/// or gaussian values on roughly 10% of the cells.
[[nodiscard]] LatticeSeq random_sequence(const std::vector<Coord>& shape, Distribution dist,
                                         Rng& rng);

struct SuiteConfig {
  int d = 1;
  std::int64_t p = 1;
  std::size_t count = 1000;
  std::vector<Coord> box_shape;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::Gaussian;
  double tolerance = kDefaultTolerance;
};

void validate(const SuiteConfig& cfg);

/// Seed of trial `index`; the trial's sequence is
/// random_sequence(box_shape, distribution, Rng(trial_seed(cfg, index))).
[[nodiscard]] std::uint64_t trial_seed(const SuiteConfig& cfg, std::size_t index);
[[nodiscard]] LatticeSeq trial_sequence(const SuiteConfig& cfg, std::size_t index);

struct SuiteSummary {
  Inequality inequality = Inequality::Main;
  int d = 1;
  std::int64_t p = 1;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_ratio = 0.0;
  std::size_t worst_trial = 0;
  std::uint64_t worst_trial_seed = 0;
  std::vector<std::size_t> failed_trials;
  std::optional<LatticeSeq> worst_sequence;
};

/// Deterministic in cfg.seed; trials may run in parallel. The worst trial is
/// the one with the largest ratio, ties going to the lowest index.
[[nodiscard]] SuiteSummary run_suite(const SuiteConfig& cfg, Inequality which);

}  // namespace agmon
