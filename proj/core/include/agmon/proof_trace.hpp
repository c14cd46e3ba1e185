#pragma once

// Replays the bookkeeping behind kappa(p, d).
//
// Applying the one-axis Agmon-Cauchy step along axes 1, ..., d splits the sup
// norm into 2^d norm terms ||D_S f||, one per subset S of axes: half of them
// (the Differenced branch) contain axis 1, half do not (the Plain branch).
// Each term is then reduced with ||D_i g|| <= 2 ||g|| down to either ||D_1 f||
// or ||f||, paying one factor of two per eliminated operator. Summing those
// costs over a reduction plan gives log2 kappa(p, d) without using the closed
// form, which makes it an independent check of the constants module.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "agmon/constants.hpp"
#include "agmon/random.hpp"

namespace agmon {

inline constexpr int kMaxTraceDimension = 20;

/// Set of axes 1..kMaxTraceDimension as a bitmask (bit a-1 for axis a).
class AxisSet {
 public:
  AxisSet() = default;
  static AxisSet of(std::initializer_list<int> axes);

  [[nodiscard]] bool contains(int axis) const { return (bits_ >> (axis - 1)) & 1U; }
  [[nodiscard]] AxisSet with(int axis) const;
  [[nodiscard]] int size() const;
  /// Axes in increasing order.
  [[nodiscard]] std::vector<int> axes() const;
  /// "D3 D2 D1" style operator string; "1" for the empty set.
  [[nodiscard]] std::string operator_string() const;

  friend bool operator==(AxisSet, AxisSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

struct ProofTerm {
  Branch branch = Branch::Plain;
  AxisSet axes;
  [[nodiscard]] int order() const { return axes.size(); }
};

enum class ReductionTarget { FirstDifference, Identity };

/// Which Differenced terms (by index into the Differenced half of
/// expand_chain(d)) are reduced to ||D_1 f||. Everything else goes to ||f||.
struct ReductionPlan {
  int d = 1;
  std::int64_t p = 1;
  std::vector<std::size_t> chosen;
};

/// All 2^d terms: the Differenced branch first, then the Plain branch, each
/// ordered by the lexicographic order of S \ {1} as a sorted axis list.
[[nodiscard]] std::vector<ProofTerm> expand_chain(int d);

/// Count of terms per order within one branch.
[[nodiscard]] std::map<int, std::uint64_t> order_histogram(const std::vector<ProofTerm>& terms,
                                                           Branch branch);

/// Histogram at dimension d+1 from the one at d: each order-t term of the
/// branch spawns one term of order t and one of order t+1.
[[nodiscard]] std::map<int, std::uint64_t> next_dimension_histogram(
    const std::map<int, std::uint64_t>& histogram);

/// log2 of the factor paid to reduce `term` to the target norm: order - 1
/// for a Differenced term kept at ||D_1 f||, order otherwise.
[[nodiscard]] int reduction_cost(const ProofTerm& term, ReductionTarget target);

void validate(const ReductionPlan& plan);

/// The plan that keeps the first p Differenced terms.
[[nodiscard]] ReductionPlan canonical_plan(int d, std::int64_t p);

/// Uniformly random plan for (d, p).
[[nodiscard]] ReductionPlan random_plan(int d, std::int64_t p, Rng& rng);

/// Number of admissible plans, C(2^(d-1), p).
[[nodiscard]] BigInt plan_count(int d, std::int64_t p);

/// Calls visit(plan) for every admissible plan in lexicographic order of the
/// chosen index lists. Stops early when visit returns false.
void for_each_plan(int d, std::int64_t p, const std::function<bool(const ReductionPlan&)>& visit);

/// Sum of reduction costs over all terms under `plan`.
[[nodiscard]] std::int64_t total_kappa(const ReductionPlan& plan);
/// Same, reusing an existing expansion of dimension plan.d.
[[nodiscard]] std::int64_t total_kappa(const std::vector<ProofTerm>& terms,
                                       const ReductionPlan& plan);

/// Sum of all term orders equals d * 2^(d-1). Enumerates terms up to
/// kMaxTraceDimension and falls back to binomial counts beyond that.
[[nodiscard]] bool verify_sum_identity(int d);

}  // namespace agmon
