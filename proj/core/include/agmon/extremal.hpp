#pragma once

// Empirical lower bounds on the best constant of the main inequality.
//
// R(f) = ||f||_inf / (mu(p,d) ||grad_D f||^(p/2^d) ||f||^(1-p/2^d)) is
// scale invariant and bounded by 1. The search maximises R over sequences
// supported in a fixed box by multi-start random coordinate ascent. A best
// ratio below 1 says nothing about sharpness; it is only a lower bound.

#include <cstdint>
#include <vector>

#include "agmon/lattice.hpp"
#include "agmon/random.hpp"
#include "agmon/verify.hpp"

namespace agmon {

struct SearchConfig {
  int d = 1;
  std::int64_t p = 1;
  std::vector<Coord> box_shape;
  int restarts = 8;
  int iters = 5000;
  double step_init = 0.25;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;

  /// Defaults with extent 21 along every axis.
  static SearchConfig defaults(int d, std::int64_t p);
};

void validate(const SearchConfig& cfg);

struct SearchResult {
  double best_ratio = 0.0;
  /// Unit-l2 maximiser on the centred search box.
  LatticeSeq best_seq = LatticeSeq::scalar(0.0);
  int best_restart = 0;
  /// Best ratio reached by each restart.
  std::vector<double> history;
  /// Accepted moves per restart.
  std::vector<int> accepted;
  int restarts = 0;
  int iters = 0;
  std::uint64_t seed = 0;
  /// Largest ratio seen over every evaluated candidate.
  double max_evaluated_ratio = 0.0;
};

/// R(f). Throws DomainError for the zero sequence.
[[nodiscard]] double ratio(const LatticeSeq& seq, std::int64_t p);

/// f / ||f||.
[[nodiscard]] LatticeSeq normalized(const LatticeSeq& seq);

/// Adds step * g (g unit gaussian) to one uniformly chosen entry and
/// renormalises to unit l2.
[[nodiscard]] LatticeSeq local_step(const LatticeSeq& seq, double step, Rng& rng);

/// Random coordinate ascent from one start point. A proposal is accepted iff
/// it strictly increases R; after 50 consecutive rejections the step halves,
/// never dropping below 1e-10.
class CoordinateAscent {
 public:
  static constexpr int kPatience = 50;
  static constexpr double kDecay = 0.5;
  static constexpr double kMinStep = 1e-10;

  CoordinateAscent(const LatticeSeq& start, std::int64_t p, double step);

  /// One proposal; returns whether it was accepted.
  bool advance(Rng& rng);

  [[nodiscard]] const LatticeSeq& current() const { return current_; }
  [[nodiscard]] double ratio() const { return ratio_; }
  [[nodiscard]] double step() const { return step_; }
  [[nodiscard]] int accepted() const { return accepted_; }
  [[nodiscard]] double max_evaluated_ratio() const { return max_evaluated_; }

 private:
  LatticeSeq current_;
  std::int64_t p_;
  double ratio_;
  double step_;
  int rejections_ = 0;
  int accepted_ = 0;
  double max_evaluated_;
};

/// Start point of restart `index`: 0 is the centred delta, 1 a centred
/// gaussian bump of width extent/6, later ones random unit vectors.
[[nodiscard]] LatticeSeq restart_start(const SearchConfig& cfg, int index, Rng& rng);

/// Deterministic in cfg.seed. Restarts run independently, possibly in
/// parallel; the best ratio wins with ties going to the lowest restart.
[[nodiscard]] SearchResult search(const SearchConfig& cfg);

}  // namespace agmon
