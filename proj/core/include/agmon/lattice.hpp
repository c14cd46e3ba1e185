#pragma once

// Finitely supported real sequences on the integer lattice Z^d.
//
// A sequence is stored densely over an axis-aligned box; every lattice point
// outside the box carries the value 0. Axes are numbered 1..d throughout the
// public API, matching the usual mathematical convention for D_1, ..., D_d.
// Storage is row-major: the last axis varies fastest.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace agmon {

using Coord = std::int64_t;

/// Raised for malformed sequences and out-of-range axes, orders or indices.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LatticePoint {
  std::vector<Coord> coords;
};

/// Axis-aligned box [offset, offset + shape) in Z^d.
struct SupportBox {
  std::vector<Coord> offset;
  std::vector<Coord> shape;

  /// Box with the given extents and its minimal corner at the origin.
  static SupportBox at_origin(std::vector<Coord> shape);
  /// Box with the given extents whose centre cell sits at the origin.
  static SupportBox centered(std::vector<Coord> shape);

  [[nodiscard]] std::size_t dim() const { return shape.size(); }
  [[nodiscard]] std::size_t volume() const;
  [[nodiscard]] bool contains(std::span<const Coord> point) const;

  friend bool operator==(const SupportBox&, const SupportBox&) = default;
};

class LatticeSeq {
 public:
  /// Validates that the box has d axes with positive extents and that
  /// `values` holds exactly one entry per box cell.
  LatticeSeq(std::size_t d, SupportBox box, std::vector<double> values);

  /// The 0-dimensional sequence holding a single value.
  static LatticeSeq scalar(double value);
  static LatticeSeq zeros(SupportBox box);
  /// Unit mass at `point`, stored on the 1^d box around it.
  static LatticeSeq delta(std::span<const Coord> point);
  static LatticeSeq delta_at_origin(std::size_t d);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const SupportBox& box() const { return box_; }
  [[nodiscard]] std::span<const double> values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return values_.size(); }

  /// Value at `point`; exactly 0 outside the box.
  [[nodiscard]] double at(std::span<const Coord> point) const;
  [[nodiscard]] double at(const LatticePoint& point) const { return at(point.coords); }

  /// Row-major strides of the storage box.
  [[nodiscard]] std::vector<std::size_t> strides() const;

  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] LatticeSeq scaled(double factor) const;
  /// Same values on a box shifted by `shift`.
  [[nodiscard]] LatticeSeq translated(std::span<const Coord> shift) const;
  /// Same sequence stored on `target`, which must contain every nonzero cell.
  [[nodiscard]] LatticeSeq embedded_in(const SupportBox& target) const;

  friend bool operator==(const LatticeSeq&, const LatticeSeq&) = default;

 private:
  std::size_t dim_;
  SupportBox box_;
  std::vector<double> values_;
};

[[nodiscard]] double l2_norm_squared(const LatticeSeq& seq);
[[nodiscard]] double l2_norm(const LatticeSeq& seq);
[[nodiscard]] double linf_norm(const LatticeSeq& seq);

/// Sum over Z^d of a(z) * b(z). Requires a.dim() == b.dim().
[[nodiscard]] double inner_product(const LatticeSeq& a, const LatticeSeq& b);

/// Forward difference (D_i f)(z) = f(z + e_i) - f(z) along axis i in 1..d.
/// The result lives on the input box grown by one cell towards -infinity
/// along axis i.
[[nodiscard]] LatticeSeq partial_difference(const LatticeSeq& seq, int axis);

/// Composition of forward differences over distinct axes. Empty set is the
/// identity.
[[nodiscard]] LatticeSeq mixed_difference(const LatticeSeq& seq, std::span<const int> axes);

/// Squared l2 norm of D_i f, computed line by line without materialising
/// the difference.
[[nodiscard]] double partial_difference_sq_norm(const LatticeSeq& seq, int axis);

/// ||grad_D f||^2 = sum_i ||D_i f||^2. Requires d >= 1.
[[nodiscard]] double gradient_sq_norm(const LatticeSeq& seq);

/// [f]_k: square root of the sum of |f|^2 over the first k coordinates, as a
/// sequence in the remaining d - k coordinates. k = 0 gives |f| pointwise and
/// k = d gives the scalar l2 norm.
[[nodiscard]] LatticeSeq bracket(const LatticeSeq& seq, std::size_t k);

}  // namespace agmon
