#include "agmon/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "agmon/summation.hpp"

namespace agmon {
namespace {

std::size_t product(std::span<const Coord> extents, std::size_t first, std::size_t last) {
  std::size_t n = 1;
  for (std::size_t a = first; a < last; ++a) n *= static_cast<std::size_t>(extents[a]);
  return n;
}

// Splits the box into (outer, line, inner) blocks around a 0-based axis so
// that flat index = (o * line + j) * inner + r.
struct AxisSplit {
  std::size_t outer;
  std::size_t line;
  std::size_t inner;
};

AxisSplit split_at(const SupportBox& box, std::size_t axis0) {
  return {product(box.shape, 0, axis0), static_cast<std::size_t>(box.shape[axis0]),
          product(box.shape, axis0 + 1, box.dim())};
}

std::size_t checked_axis(const LatticeSeq& seq, int axis) {
  if (axis < 1 || static_cast<std::size_t>(axis) > seq.dim()) {
    throw DomainError("axis " + std::to_string(axis) + " out of range 1.." +
                      std::to_string(seq.dim()));
  }
  return static_cast<std::size_t>(axis - 1);
}

}  // namespace

SupportBox SupportBox::at_origin(std::vector<Coord> shape) {
  std::vector<Coord> offset(shape.size(), 0);
  return {std::move(offset), std::move(shape)};
}

SupportBox SupportBox::centered(std::vector<Coord> shape) {
  std::vector<Coord> offset(shape.size());
  std::transform(shape.begin(), shape.end(), offset.begin(), [](Coord e) { return -(e / 2); });
  return {std::move(offset), std::move(shape)};
}

std::size_t SupportBox::volume() const { return product(shape, 0, shape.size()); }

bool SupportBox::contains(std::span<const Coord> point) const {
  if (point.size() != dim()) return false;
  for (std::size_t a = 0; a < dim(); ++a) {
    if (point[a] < offset[a] || point[a] >= offset[a] + shape[a]) return false;
  }
  return true;
}

LatticeSeq::LatticeSeq(std::size_t d, SupportBox box, std::vector<double> values)
    : dim_(d), box_(std::move(box)), values_(std::move(values)) {
  if (box_.offset.size() != d) {
    throw DomainError("box offset has " + std::to_string(box_.offset.size()) +
                      " entries, expected d = " + std::to_string(d));
  }
  if (box_.shape.size() != d) {
    throw DomainError("box shape has " + std::to_string(box_.shape.size()) +
                      " entries, expected d = " + std::to_string(d));
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (box_.shape[a] < 1) {
      throw DomainError("box extent along axis " + std::to_string(a + 1) + " is " +
                        std::to_string(box_.shape[a]) + ", must be >= 1");
    }
  }
  if (values_.size() != box_.volume()) {
    throw DomainError("values has " + std::to_string(values_.size()) +
                      " entries but the box holds " + std::to_string(box_.volume()) + " cells");
  }
}

LatticeSeq LatticeSeq::scalar(double value) { return LatticeSeq(0, SupportBox{}, {value}); }

LatticeSeq LatticeSeq::zeros(SupportBox box) {
  const std::size_t d = box.dim();
  std::vector<double> values(box.volume(), 0.0);
  return LatticeSeq(d, std::move(box), std::move(values));
}

LatticeSeq LatticeSeq::delta(std::span<const Coord> point) {
  SupportBox box{std::vector<Coord>(point.begin(), point.end()),
                 std::vector<Coord>(point.size(), 1)};
  return LatticeSeq(point.size(), std::move(box), {1.0});
}

LatticeSeq LatticeSeq::delta_at_origin(std::size_t d) {
  const std::vector<Coord> origin(d, 0);
  return delta(origin);
}

double LatticeSeq::at(std::span<const Coord> point) const {
  if (point.size() != dim_) {
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(dim_));
  }
  if (!box_.contains(point)) return 0.0;
  std::size_t index = 0;
  for (std::size_t a = 0; a < dim_; ++a) {
    index = index * static_cast<std::size_t>(box_.shape[a]) +
            static_cast<std::size_t>(point[a] - box_.offset[a]);
  }
  return values_[index];
}

std::vector<std::size_t> LatticeSeq::strides() const {
  std::vector<std::size_t> s(dim_, 1);
  for (std::size_t a = dim_; a-- > 1;) s[a - 1] = s[a] * static_cast<std::size_t>(box_.shape[a]);
  return s;
}

bool LatticeSeq::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

LatticeSeq LatticeSeq::scaled(double factor) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(),
                 [factor](double v) { return factor * v; });
  return LatticeSeq(dim_, box_, std::move(out));
}

LatticeSeq LatticeSeq::translated(std::span<const Coord> shift) const {
  if (shift.size() != dim_) {
    throw DomainError("shift has " + std::to_string(shift.size()) + " coordinates, expected " +
                      std::to_string(dim_));
  }
  SupportBox moved = box_;
  for (std::size_t a = 0; a < dim_; ++a) moved.offset[a] += shift[a];
  return LatticeSeq(dim_, std::move(moved), values_);
}

LatticeSeq LatticeSeq::embedded_in(const SupportBox& target) const {
  if (target.dim() != dim_) {
    throw DomainError("target box has dimension " + std::to_string(target.dim()) +
                      ", expected " + std::to_string(dim_));
  }
  LatticeSeq out = zeros(target);
  const auto out_strides = out.strides();
  std::vector<Coord> point(dim_);
  for (std::size_t flat = 0; flat < values_.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t a = dim_; a-- > 0;) {
      const auto extent = static_cast<std::size_t>(box_.shape[a]);
      point[a] = box_.offset[a] + static_cast<Coord>(rest % extent);
      rest /= extent;
    }
    if (!target.contains(point)) {
      if (values_[flat] != 0.0) throw DomainError("target box does not cover the support");
      continue;
    }
    std::size_t index = 0;
    for (std::size_t a = 0; a < dim_; ++a) {
      index += out_strides[a] * static_cast<std::size_t>(point[a] - target.offset[a]);
    }
    out.values_[index] = values_[flat];
  }
  return out;
}

double l2_norm_squared(const LatticeSeq& seq) {
  CompensatedSum sum;
  for (double v : seq.values()) sum.add(v * v);
  return sum.value();
}

double l2_norm(const LatticeSeq& seq) { return std::sqrt(l2_norm_squared(seq)); }

double linf_norm(const LatticeSeq& seq) {
  double m = 0.0;
  for (double v : seq.values()) m = std::max(m, std::fabs(v));
  return m;
}

double inner_product(const LatticeSeq& a, const LatticeSeq& b) {
  if (a.dim() != b.dim()) {
    throw DomainError("inner product of sequences with dimensions " + std::to_string(a.dim()) +
                      " and " + std::to_string(b.dim()));
  }
  const std::size_t d = a.dim();
  CompensatedSum sum;
  std::vector<Coord> point(d);
  const auto values = a.values();
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    if (values[flat] == 0.0) continue;
    std::size_t rest = flat;
    for (std::size_t ax = d; ax-- > 0;) {
      const auto extent = static_cast<std::size_t>(a.box().shape[ax]);
      point[ax] = a.box().offset[ax] + static_cast<Coord>(rest % extent);
      rest /= extent;
    }
    sum.add(values[flat] * b.at(point));
  }
  return sum.value();
}

LatticeSeq partial_difference(const LatticeSeq& seq, int axis) {
  const std::size_t ax = checked_axis(seq, axis);
  const AxisSplit s = split_at(seq.box(), ax);
  SupportBox grown = seq.box();
  grown.offset[ax] -= 1;
  grown.shape[ax] += 1;

  const auto in = seq.values();
  std::vector<double> out(grown.volume());
  const std::size_t out_line = s.line + 1;
  for (std::size_t o = 0; o < s.outer; ++o) {
    const std::size_t in_base = o * s.line * s.inner;
    const std::size_t out_base = o * out_line * s.inner;
    for (std::size_t j = 0; j < out_line; ++j) {
      // Output cell j sits one step below input cell j.
      for (std::size_t r = 0; r < s.inner; ++r) {
        const double upper = j < s.line ? in[in_base + j * s.inner + r] : 0.0;
        const double lower = j > 0 ? in[in_base + (j - 1) * s.inner + r] : 0.0;
        out[out_base + j * s.inner + r] = upper - lower;
      }
    }
  }
  return LatticeSeq(seq.dim(), std::move(grown), std::move(out));
}

LatticeSeq mixed_difference(const LatticeSeq& seq, std::span<const int> axes) {
  std::vector<int> sorted(axes.begin(), axes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("mixed difference axes must be distinct");
  }
  for (int axis : sorted) checked_axis(seq, axis);
  LatticeSeq out = seq;
  for (int axis : sorted) out = partial_difference(out, axis);
  return out;
}

double partial_difference_sq_norm(const LatticeSeq& seq, int axis) {
  const std::size_t ax = checked_axis(seq, axis);
  const AxisSplit s = split_at(seq.box(), ax);
  const auto in = seq.values();
  // Same traversal order as l2_norm_squared(partial_difference(seq, axis)).
  CompensatedSum sum;
  for (std::size_t o = 0; o < s.outer; ++o) {
    const std::size_t base = o * s.line * s.inner;
    for (std::size_t j = 0; j <= s.line; ++j) {
      for (std::size_t r = 0; r < s.inner; ++r) {
        const double upper = j < s.line ? in[base + j * s.inner + r] : 0.0;
        const double lower = j > 0 ? in[base + (j - 1) * s.inner + r] : 0.0;
        const double diff = upper - lower;
        sum.add(diff * diff);
      }
    }
  }
  return sum.value();
}

double gradient_sq_norm(const LatticeSeq& seq) {
  if (seq.dim() == 0) throw DomainError("discrete gradient needs d >= 1");
  CompensatedSum sum;
  for (std::size_t a = 1; a <= seq.dim(); ++a) {
    sum.add(partial_difference_sq_norm(seq, static_cast<int>(a)));
  }
  return sum.value();
}

LatticeSeq bracket(const LatticeSeq& seq, std::size_t k) {
  const std::size_t d = seq.dim();
  if (k > d) {
    throw DomainError("bracket order " + std::to_string(k) + " out of range 0.." +
                      std::to_string(d));
  }
  const auto& box = seq.box();
  const std::size_t outer = product(box.shape, 0, k);
  const std::size_t inner = product(box.shape, k, d);
  SupportBox rest{std::vector<Coord>(box.offset.begin() + static_cast<std::ptrdiff_t>(k),
                                     box.offset.end()),
                  std::vector<Coord>(box.shape.begin() + static_cast<std::ptrdiff_t>(k),
                                     box.shape.end())};
  const auto in = seq.values();
  std::vector<double> out(inner);
  if (inner == 1) {
    out[0] = l2_norm(seq);
  } else {
    std::vector<CompensatedSum> sums(inner);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t r = 0; r < inner; ++r) {
        const double v = in[o * inner + r];
        sums[r].add(v * v);
      }
    }
    for (std::size_t r = 0; r < inner; ++r) out[r] = std::sqrt(sums[r].value());
  }
  return LatticeSeq(d - k, std::move(rest), std::move(out));
}

}  // namespace agmon
