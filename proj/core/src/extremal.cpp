#include "agmon/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "agmon/constants.hpp"

namespace agmon {

SearchConfig SearchConfig::defaults(int d, std::int64_t p) {
  SearchConfig cfg;
  cfg.d = d;
  cfg.p = p;
  cfg.box_shape.assign(static_cast<std::size_t>(std::max(d, 0)), 21);
  return cfg;
}

void validate(const SearchConfig& cfg) {
  validate(ConstantSpec{cfg.d, cfg.p});
  if (cfg.box_shape.size() != static_cast<std::size_t>(cfg.d)) {
    throw DomainError("box shape has " + std::to_string(cfg.box_shape.size()) +
                      " extents, expected d = " + std::to_string(cfg.d));
  }
  for (std::size_t a = 0; a < cfg.box_shape.size(); ++a) {
    if (cfg.box_shape[a] < 1) {
      throw DomainError("box extent along axis " + std::to_string(a + 1) + " must be >= 1");
    }
  }
  if (cfg.restarts < 1) throw DomainError("search needs restarts >= 1");
  if (cfg.iters < 1) throw DomainError("search needs iters >= 1");
  if (!(cfg.step_init > 0.0) || !std::isfinite(cfg.step_init)) {
    throw DomainError("initial step must be positive and finite");
  }
  if (!(cfg.tolerance >= 0.0)) throw DomainError("tolerance must be >= 0");
}

double ratio(const LatticeSeq& seq, std::int64_t p) {
  if (seq.is_zero()) throw DomainError("ratio is undefined for the zero sequence");
  return check_main(seq, p).ratio;
}

LatticeSeq normalized(const LatticeSeq& seq) {
  const double norm = l2_norm(seq);
  if (norm == 0.0) throw DomainError("cannot normalise the zero sequence");
  return seq.scaled(1.0 / norm);
}

LatticeSeq local_step(const LatticeSeq& seq, double step, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, seq.size() - 1);
  std::normal_distribution<double> gaussian(0.0, 1.0);
  const std::size_t index = pick(rng);
  const double kick = step * gaussian(rng);
  std::vector<double> values(seq.values().begin(), seq.values().end());
  values[index] += kick;
  return normalized(LatticeSeq(seq.dim(), seq.box(), std::move(values)));
}

CoordinateAscent::CoordinateAscent(const LatticeSeq& start, std::int64_t p, double step)
    : current_(normalized(start)), p_(p), ratio_(agmon::ratio(current_, p)), step_(step),
      max_evaluated_(ratio_) {}

bool CoordinateAscent::advance(Rng& rng) {
  bool accept = false;
  LatticeSeq proposal = current_;
  double proposal_ratio = 0.0;
  try {
    proposal = local_step(current_, step_, rng);
    proposal_ratio = agmon::ratio(proposal, p_);
    max_evaluated_ = std::max(max_evaluated_, proposal_ratio);
    accept = proposal_ratio > ratio_;
  } catch (const DomainError&) {
    // The kick cancelled the only nonzero entry.
  }
  if (accept) {
    current_ = std::move(proposal);
    ratio_ = proposal_ratio;
    rejections_ = 0;
    ++accepted_;
    return true;
  }
  if (++rejections_ >= kPatience) {
    step_ = std::max(step_ * kDecay, kMinStep);
    rejections_ = 0;
  }
  return false;
}

LatticeSeq restart_start(const SearchConfig& cfg, int index, Rng& rng) {
  SupportBox box = SupportBox::centered(cfg.box_shape);
  const auto d = static_cast<std::size_t>(cfg.d);
  if (index == 0) {
    const std::vector<Coord> origin(d, 0);
    return LatticeSeq::delta(origin).embedded_in(box);
  }
  std::vector<double> values(box.volume());
  if (index == 1) {
    std::vector<Coord> point(d);
    for (std::size_t flat = 0; flat < values.size(); ++flat) {
      std::size_t rest = flat;
      double exponent = 0.0;
      for (std::size_t a = d; a-- > 0;) {
        const auto extent = static_cast<std::size_t>(box.shape[a]);
        const double x = static_cast<double>(box.offset[a] + static_cast<Coord>(rest % extent));
        rest /= extent;
        const double width = static_cast<double>(box.shape[a]) / 6.0;
        exponent += x * x / (2.0 * width * width);
      }
      values[flat] = std::exp(-exponent);
    }
  } else {
    std::normal_distribution<double> gaussian(0.0, 1.0);
    for (double& v : values) v = gaussian(rng);
  }
  return normalized(LatticeSeq(d, std::move(box), std::move(values)));
}

SearchResult search(const SearchConfig& cfg) {
  validate(cfg);
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<LatticeSeq> bests(restarts, LatticeSeq::scalar(0.0));
  std::vector<double> ratios(restarts);
  std::vector<double> max_seen(restarts);
  std::vector<int> accepted(restarts);

  parallel_for(restarts, [&](std::size_t r) {
    Rng rng(derive_seed(cfg.seed, r));
    CoordinateAscent ascent(restart_start(cfg, static_cast<int>(r), rng), cfg.p, cfg.step_init);
    for (int it = 0; it < cfg.iters; ++it) ascent.advance(rng);
    bests[r] = ascent.current();
    ratios[r] = ascent.ratio();
    max_seen[r] = ascent.max_evaluated_ratio();
    accepted[r] = ascent.accepted();
  });

  SearchResult result;
  result.restarts = cfg.restarts;
  result.iters = cfg.iters;
  result.seed = cfg.seed;
  result.history = ratios;
  result.accepted = accepted;
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (ratios[r] > ratios[best]) best = r;
  }
  result.best_restart = static_cast<int>(best);
  result.best_ratio = ratios[best];
  result.best_seq = bests[best];
  result.max_evaluated_ratio = *std::max_element(max_seen.begin(), max_seen.end());
  return result;
}

}  // namespace agmon
