#include "agmon/proof_trace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "agmon/lattice.hpp"

namespace agmon {
namespace {

void require_trace_dimension(int d) {
  if (d < 1 || d > kMaxTraceDimension) {
    throw DomainError("trace dimension d = " + std::to_string(d) + " out of range 1.." +
                      std::to_string(kMaxTraceDimension));
  }
}

void require_plan_p(int d, std::int64_t p) {
  require_trace_dimension(d);
  const std::int64_t half = std::int64_t{1} << (d - 1);
  if (p < 1 || p > half) {
    throw DomainError("p = " + std::to_string(p) + " out of range 1.." + std::to_string(half) +
                      " for d = " + std::to_string(d));
  }
}

// Subsets of {first, ..., d} in lexicographic order, each prefixed by `base`.
void collect_subsets(AxisSet base, int first, int d, std::vector<AxisSet>& out) {
  out.push_back(base);
  for (int a = first; a <= d; ++a) collect_subsets(base.with(a), a + 1, d, out);
}

}  // namespace

AxisSet AxisSet::of(std::initializer_list<int> axes) {
  AxisSet s;
  for (int a : axes) s = s.with(a);
  return s;
}

AxisSet AxisSet::with(int axis) const {
  if (axis < 1 || axis > kMaxTraceDimension) {
    throw DomainError("axis " + std::to_string(axis) + " out of range for a proof term");
  }
  AxisSet s = *this;
  s.bits_ |= std::uint32_t{1} << (axis - 1);
  return s;
}

int AxisSet::size() const { return std::popcount(bits_); }

std::vector<int> AxisSet::axes() const {
  std::vector<int> out;
  for (int a = 1; a <= kMaxTraceDimension; ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

std::string AxisSet::operator_string() const {
  if (bits_ == 0) return "1";
  std::string out;
  const auto list = axes();
  for (auto it = list.rbegin(); it != list.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += "D" + std::to_string(*it);
  }
  return out;
}

std::vector<ProofTerm> expand_chain(int d) {
  require_trace_dimension(d);
  std::vector<AxisSet> rest;
  rest.reserve(std::size_t{1} << (d - 1));
  collect_subsets(AxisSet{}, 2, d, rest);

  std::vector<ProofTerm> terms;
  terms.reserve(2 * rest.size());
  for (AxisSet s : rest) terms.push_back({Branch::Differenced, s.with(1)});
  for (AxisSet s : rest) terms.push_back({Branch::Plain, s});
  return terms;
}

std::map<int, std::uint64_t> order_histogram(const std::vector<ProofTerm>& terms,
                                             Branch branch) {
  std::map<int, std::uint64_t> hist;
  for (const auto& t : terms) {
    if (t.branch == branch) ++hist[t.order()];
  }
  return hist;
}

std::map<int, std::uint64_t> next_dimension_histogram(
    const std::map<int, std::uint64_t>& histogram) {
  std::map<int, std::uint64_t> next;
  for (const auto& [order, count] : histogram) {
    next[order] += count;
    next[order + 1] += count;
  }
  return next;
}

int reduction_cost(const ProofTerm& term, ReductionTarget target) {
  if (target == ReductionTarget::FirstDifference) {
    if (term.branch != Branch::Differenced) {
      throw DomainError("a term without D1 cannot be reduced to ||D1 f||");
    }
    return term.order() - 1;
  }
  return term.order();
}

void validate(const ReductionPlan& plan) {
  require_plan_p(plan.d, plan.p);
  if (static_cast<std::int64_t>(plan.chosen.size()) != plan.p) {
    throw DomainError("plan chooses " + std::to_string(plan.chosen.size()) +
                      " terms, expected p = " + std::to_string(plan.p));
  }
  const std::size_t half = std::size_t{1} << (plan.d - 1);
  std::vector<std::size_t> sorted = plan.chosen;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("plan chooses the same term twice");
  }
  if (!sorted.empty() && sorted.back() >= half) {
    throw DomainError("plan index " + std::to_string(sorted.back()) +
                      " is not a term of the differenced branch");
  }
}

ReductionPlan canonical_plan(int d, std::int64_t p) {
  require_plan_p(d, p);
  ReductionPlan plan{d, p, std::vector<std::size_t>(static_cast<std::size_t>(p))};
  std::iota(plan.chosen.begin(), plan.chosen.end(), std::size_t{0});
  return plan;
}

ReductionPlan random_plan(int d, std::int64_t p, Rng& rng) {
  require_plan_p(d, p);
  std::vector<std::size_t> pool(std::size_t{1} << (d - 1));
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  const auto take = static_cast<std::size_t>(p);
  for (std::size_t i = 0; i < take; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());
  return {d, p, std::move(pool)};
}

BigInt plan_count(int d, std::int64_t p) {
  require_plan_p(d, p);
  return binomial(std::int64_t{1} << (d - 1), p);
}

void for_each_plan(int d, std::int64_t p, const std::function<bool(const ReductionPlan&)>& visit) {
  ReductionPlan plan = canonical_plan(d, p);
  const std::size_t n = std::size_t{1} << (d - 1);
  const auto k = static_cast<std::size_t>(p);
  while (true) {
    if (!visit(plan)) return;
    // Advance to the next k-combination of {0, ..., n-1}.
    std::size_t i = k;
    while (i > 0 && plan.chosen[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++plan.chosen[i - 1];
    for (std::size_t j = i; j < k; ++j) plan.chosen[j] = plan.chosen[j - 1] + 1;
  }
}

std::int64_t total_kappa(const std::vector<ProofTerm>& terms, const ReductionPlan& plan) {
  validate(plan);
  const std::size_t half = std::size_t{1} << (plan.d - 1);
  if (terms.size() != 2 * half) {
    throw DomainError("expansion does not match the plan dimension");
  }
  std::vector<char> keep(half, 0);
  for (std::size_t index : plan.chosen) keep[index] = 1;

  std::int64_t total = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool to_first = i < half && keep[i];
    total += reduction_cost(terms[i],
                            to_first ? ReductionTarget::FirstDifference : ReductionTarget::Identity);
  }
  return total;
}

std::int64_t total_kappa(const ReductionPlan& plan) {
  validate(plan);
  return total_kappa(expand_chain(plan.d), plan);
}

bool verify_sum_identity(int d) {
  if (d < 1) throw DomainError("dimension d = " + std::to_string(d) + " must be >= 1");
  BigInt total = 0;
  if (d <= kMaxTraceDimension) {
    for (const auto& t : expand_chain(d)) total += t.order();
  } else {
    for (Branch b : {Branch::Differenced, Branch::Plain}) {
      for (int i = min_order(b); i <= max_order(d, b); ++i) total += BigInt(i) * omega_count(d, i, b);
    }
  }
  return total == BigInt(d) * pow2(d - 1);
}

}  // namespace agmon
