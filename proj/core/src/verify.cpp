#include "agmon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "agmon/constants.hpp"
#include "agmon/summation.hpp"

namespace agmon {
namespace {

void require_dim(const LatticeSeq& seq, std::size_t d, const char* what) {
  if (seq.dim() != d) {
    throw DomainError(std::string(what) + " needs a " + std::to_string(d) +
                      "-dimensional sequence, got d = " + std::to_string(seq.dim()));
  }
}

// l2 norm of a 1-D sequence restricted to indices n >= 0.
double half_axis_norm(const LatticeSeq& seq) {
  CompensatedSum sum;
  const auto values = seq.values();
  const Coord start = seq.box().offset[0];
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (start + static_cast<Coord>(j) >= 0) sum.add(values[j] * values[j]);
  }
  return std::sqrt(sum.value());
}

CheckReport worse(const CheckReport& a, const CheckReport& b) {
  CheckReport out = b.ratio > a.ratio ? b : a;
  out.satisfied = a.satisfied && b.satisfied;
  return out;
}

}  // namespace

CheckReport make_report(double lhs, double rhs, double tolerance) {
  CheckReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tolerance;
  if (lhs == 0.0 && rhs == 0.0) {
    r.ratio = 0.0;
  } else if (rhs == 0.0) {
    r.ratio = std::numeric_limits<double>::infinity();
  } else {
    r.ratio = lhs / rhs;
  }
  r.satisfied = lhs <= rhs * (1.0 + tolerance) + kAbsoluteFloor;
  return r;
}

CheckReport check_agmon_1d(const LatticeSeq& seq, double tolerance) {
  require_dim(seq, 1, "1-D Agmon check");
  const double sup = linf_norm(seq);
  const double rhs = l2_norm(seq) * std::sqrt(partial_difference_sq_norm(seq, 1));
  return make_report(sup * sup, rhs, tolerance);
}

CheckReport check_agmon_cauchy(const LatticeSeq& seq, std::size_t k, double tolerance) {
  const std::size_t d = seq.dim();
  if (k >= d) {
    throw DomainError("Agmon-Cauchy order k = " + std::to_string(k) + " out of range 0.." +
                      (d == 0 ? std::string("(none)") : std::to_string(d - 1)));
  }
  const LatticeSeq inner = bracket(seq, k);
  const LatticeSeq outer = bracket(seq, k + 1);
  const LatticeSeq outer_diff = bracket(partial_difference(seq, static_cast<int>(k + 1)), k + 1);

  // inner is laid out as (z_{k+1}, trailing); the trailing block is shared by
  // outer and outer_diff because D_{k+1} only grows axis k+1.
  const auto line = static_cast<std::size_t>(seq.box().shape[k]);
  const std::size_t trailing = outer.size();
  const auto inner_values = inner.values();
  const auto outer_values = outer.values();
  const auto diff_values = outer_diff.values();

  CheckReport worst;
  bool first = true;
  for (std::size_t t = 0; t < trailing; ++t) {
    double sup = 0.0;
    for (std::size_t j = 0; j < line; ++j) sup = std::max(sup, inner_values[j * trailing + t]);
    const double rhs = std::sqrt(diff_values[t]) * std::sqrt(outer_values[t]);
    const CheckReport here = make_report(sup, rhs, tolerance);
    worst = first ? here : worse(worst, here);
    first = false;
  }
  return worst;
}

CheckReport check_diff_bound(const LatticeSeq& seq, int axis, double tolerance) {
  const double lhs = std::sqrt(partial_difference_sq_norm(seq, axis));
  return make_report(lhs, 2.0 * l2_norm(seq), tolerance);
}

CheckReport check_main(const LatticeSeq& seq, std::int64_t p, double tolerance) {
  if (seq.dim() == 0) throw DomainError("main inequality needs d >= 1");
  const int d = static_cast<int>(seq.dim());
  const ConstantSpec spec{d, p};
  const double constant = mu(spec).approx;
  const double levels = std::exp2(static_cast<double>(d));
  const double weight = static_cast<double>(p) / levels;
  const double grad = gradient_sq_norm(seq);
  const double norm = l2_norm(seq);
  const double rhs = constant * std::pow(grad, weight / 2.0) * std::pow(norm, 1.0 - weight);
  return make_report(linf_norm(seq), rhs, tolerance);
}

CheckReport check_copson(const LatticeSeq& seq, CopsonMode mode, double tolerance) {
  require_dim(seq, 1, "Copson check");
  const LatticeSeq first = partial_difference(seq, 1);
  const LatticeSeq second = partial_difference(first, 1);
  if (mode == CopsonMode::WholeAxis) {
    const double lhs = l2_norm_squared(first);
    return make_report(lhs, l2_norm(seq) * l2_norm(second), tolerance);
  }
  const auto values = seq.values();
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] != 0.0 && seq.box().offset[0] + static_cast<Coord>(j) < 0) {
      throw DomainError("half-axis Copson check needs support in n >= 0, found a nonzero at n = " +
                        std::to_string(seq.box().offset[0] + static_cast<Coord>(j)));
    }
  }
  const double d1 = half_axis_norm(first);
  return make_report(d1 * d1, 2.0 * half_axis_norm(seq) * half_axis_norm(second), tolerance);
}

std::string_view to_string(Inequality which) {
  switch (which) {
    case Inequality::Main: return "main";
    case Inequality::AgmonCauchy: return "agmon-cauchy";
    case Inequality::DiffBound: return "diff-bound";
    case Inequality::Agmon1d: return "agmon1d";
    case Inequality::Copson: return "copson";
    case Inequality::CopsonHalf: return "copson-half";
  }
  return "unknown";
}

Inequality parse_inequality(std::string_view name) {
  for (auto which : {Inequality::Main, Inequality::AgmonCauchy, Inequality::DiffBound,
                     Inequality::Agmon1d, Inequality::Copson, Inequality::CopsonHalf}) {
    if (to_string(which) == name) return which;
  }
  throw DomainError("unknown inequality '" + std::string(name) +
                    "' (expected main, agmon-cauchy, diff-bound, agmon1d, copson, copson-half)");
}

bool requires_one_dimension(Inequality which) {
  return which == Inequality::Agmon1d || which == Inequality::Copson ||
         which == Inequality::CopsonHalf;
}

CheckReport check(Inequality which, const LatticeSeq& seq, std::int64_t p, double tolerance) {
  switch (which) {
    case Inequality::Main:
      return check_main(seq, p, tolerance);
    case Inequality::AgmonCauchy: {
      if (seq.dim() == 0) throw DomainError("Agmon-Cauchy check needs d >= 1");
      CheckReport worst = check_agmon_cauchy(seq, 0, tolerance);
      for (std::size_t k = 1; k < seq.dim(); ++k) {
        worst = worse(worst, check_agmon_cauchy(seq, k, tolerance));
      }
      return worst;
    }
    case Inequality::DiffBound: {
      if (seq.dim() == 0) throw DomainError("difference bound needs d >= 1");
      CheckReport worst = check_diff_bound(seq, 1, tolerance);
      for (std::size_t a = 2; a <= seq.dim(); ++a) {
        worst = worse(worst, check_diff_bound(seq, static_cast<int>(a), tolerance));
      }
      return worst;
    }
    case Inequality::Agmon1d:
      return check_agmon_1d(seq, tolerance);
    case Inequality::Copson:
      return check_copson(seq, CopsonMode::WholeAxis, tolerance);
    case Inequality::CopsonHalf:
      return check_copson(seq, CopsonMode::HalfAxis, tolerance);
  }
  throw DomainError("unknown inequality selector");
}

std::string_view to_string(Distribution dist) {
  switch (dist) {
    case Distribution::UniformSigned: return "uniform-signed";
    case Distribution::Gaussian: return "gaussian";
    case Distribution::Sparse: return "sparse";
  }
  return "unknown";
}

Distribution parse_distribution(std::string_view name) {
  for (auto dist : {Distribution::UniformSigned, Distribution::Gaussian, Distribution::Sparse}) {
    if (to_string(dist) == name) return dist;
  }
  throw DomainError("unknown distribution '" + std::string(name) +
                    "' (expected uniform-signed, gaussian, sparse)");
}

LatticeSeq random_sequence(const std::vector<Coord>& shape, Distribution dist, Rng& rng) {
  SupportBox box = SupportBox::at_origin(shape);
  std::vector<double> values(box.volume());
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (double& v : values) {
    switch (dist) {
      case Distribution::UniformSigned:
        v = uniform(rng);
        break;
      case Distribution::Gaussian:
        v = gaussian(rng);
        break;
      case Distribution::Sparse:
        v = unit(rng) < 0.1 ? gaussian(rng) : 0.0;
        break;
    }
  }
  return LatticeSeq(shape.size(), std::move(box), std::move(values));
}

void validate(const SuiteConfig& cfg) {
  validate(ConstantSpec{cfg.d, cfg.p});
  if (cfg.count < 1) throw DomainError("suite needs count >= 1");
  if (cfg.box_shape.size() != static_cast<std::size_t>(cfg.d)) {
    throw DomainError("box shape has " + std::to_string(cfg.box_shape.size()) +
                      " extents, expected d = " + std::to_string(cfg.d));
  }
  for (std::size_t a = 0; a < cfg.box_shape.size(); ++a) {
    if (cfg.box_shape[a] < 1) {
      throw DomainError("box extent along axis " + std::to_string(a + 1) + " must be >= 1");
    }
  }
  if (!(cfg.tolerance >= 0.0)) throw DomainError("tolerance must be >= 0");
}

std::uint64_t trial_seed(const SuiteConfig& cfg, std::size_t index) {
  return derive_seed(cfg.seed, index);
}

LatticeSeq trial_sequence(const SuiteConfig& cfg, std::size_t index) {
  Rng rng(trial_seed(cfg, index));
  return random_sequence(cfg.box_shape, cfg.distribution, rng);
}

SuiteSummary run_suite(const SuiteConfig& cfg, Inequality which) {
  validate(cfg);
  if (requires_one_dimension(which) && cfg.d != 1) {
    throw DomainError(std::string(to_string(which)) + " is only defined for d = 1");
  }
  std::vector<double> ratios(cfg.count);
  std::vector<char> passed(cfg.count);
  parallel_for(cfg.count, [&](std::size_t i) {
    const CheckReport r = check(which, trial_sequence(cfg, i), cfg.p, cfg.tolerance);
    ratios[i] = r.ratio;
    passed[i] = r.satisfied ? 1 : 0;
  });

  SuiteSummary summary;
  summary.inequality = which;
  summary.d = cfg.d;
  summary.p = cfg.p;
  summary.trials = cfg.count;
  summary.worst_ratio = ratios[0];
  for (std::size_t i = 0; i < cfg.count; ++i) {
    if (!passed[i]) {
      ++summary.failures;
      summary.failed_trials.push_back(i);
    }
    if (ratios[i] > summary.worst_ratio) {
      summary.worst_ratio = ratios[i];
      summary.worst_trial = i;
    }
  }
  summary.worst_trial_seed = trial_seed(cfg, summary.worst_trial);
  summary.worst_sequence = trial_sequence(cfg, summary.worst_trial);
  return summary;
}

}  // namespace agmon
